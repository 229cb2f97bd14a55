//! The machine-checked property suites. Each function panics on the first
//! violation and returns the number of cases it checked, so callers can
//! assert coverage.

use super::{
    agrees_with_brute_quotient, basis_positions, box_occurrences, decorated_walk_oracle,
    quotient_brute_force, reachable_in_box, TestPair,
};
use mckay_quiver::dims::graded_dimension_with_grid;
use mckay_quiver::invariants::hilbert_basis_of;
use mckay_quiver::quiver::Decoration;
use mckay_quiver::{
    alternating_list, auslander_check, hilbert_basis, occurrence_monoid, quotient_dimension,
    regularity_check, toroidal_grid, validate_pair, Element,
};
use std::collections::HashSet;

/// Distinctness of the alternating list is equivalent to |xy| ≥ k, in both
/// directions; with k = m and x = a⁻¹, y = b⁻¹ the list covers the group
/// exactly once precisely in the isomorphism case.
pub fn suite_alternating_distinctness(corpus: &[TestPair]) -> usize {
    let mut cases = 0;
    for TestPair { text, pair } in corpus {
        let g = pair.group();
        let (a, b) = (pair.a(), pair.b());
        let combos = [(a, b), (b, a), (g.inv(a), g.inv(b)), (g.inv(b), g.inv(a))];
        for (x, y) in combos {
            assert_ne!(g.mul(x, y), g.mul(y, x), "{text}: combo must not commute");
            let order_xy = g.element_order(g.mul(x, y));
            for k in 2..=g.order() {
                let (list, distinct) = alternating_list(g, x, y, k);
                assert_eq!(list.len(), 2 * k);
                assert_eq!(
                    distinct,
                    order_xy >= k,
                    "{text}: distinctness vs |xy| ≥ k failed at k={k}"
                );
                cases += 1;
            }
        }
        // full single coverage exactly in the half-order case
        let (list, distinct) = alternating_list(g, g.inv(a), g.inv(b), pair.m());
        let unique: HashSet<Element> = list.iter().copied().collect();
        let covers = distinct && unique.len() == g.order();
        assert_eq!(
            covers,
            2 * pair.m() == g.order(),
            "{text}: coverage criterion"
        );
        cases += 1;
    }
    cases
}

/// The order criterion and toroidal coverage must give the same Auslander
/// answer on every valid pair.
pub fn suite_auslander_agreement(corpus: &[TestPair]) -> usize {
    for TestPair { text, pair } in corpus {
        let report =
            auslander_check(pair).unwrap_or_else(|e| panic!("{text}: methods disagree: {e}"));
        assert_eq!(report.is_isomorphism, report.order_method);
        assert_eq!(report.order_method, report.coverage_method);
    }
    corpus.len()
}

/// The order criterion and generator count must give the same regularity
/// answer on every valid pair.
pub fn suite_regularity_agreement(corpus: &[TestPair]) -> usize {
    for TestPair { text, pair } in corpus {
        let report =
            regularity_check(pair).unwrap_or_else(|e| panic!("{text}: methods disagree: {e}"));
        assert_eq!(report.is_regular, report.order_method);
        assert_eq!(report.order_method, report.basis_method);
    }
    corpus.len()
}

/// Each anti-diagonal of the lattice has ℓ + 1 cells, so the graded
/// dimensions from any source must sum to ℓ + 1.
pub fn suite_diagonal_conservation(corpus: &[TestPair]) -> usize {
    let mut cases = 0;
    for TestPair { text, pair } in corpus {
        let g = pair.group();
        let grid = toroidal_grid(pair);
        let sources = [g.identity(), pair.a(), pair.b(), g.mul(pair.a(), pair.b())];
        for i in sources {
            for ell in 0..=10 {
                let total: usize = g
                    .elements()
                    .map(|j| graded_dimension_with_grid(pair, &grid, i, j, ell))
                    .sum();
                assert_eq!(total, ell + 1, "{text}: diagonal ℓ={ell} from {i}");
                cases += 1;
            }
        }
    }
    cases
}

/// Square consistency (the two routes across any unit square agree) and
/// 2m-periodicity, both checked with an explicit walker that never reduces
/// coordinates; plus transposition symmetry of the swapped pair.
pub fn suite_lattice_consistency(corpus: &[TestPair]) -> usize {
    let mut cases = 0;
    for TestPair { text, pair } in corpus {
        let g = pair.group();
        let period = pair.period();
        let one = g.identity();
        let step = |label: Element, d: Decoration| -> Element {
            match d {
                Decoration::U => g.mul(g.inv(pair.a()), label),
                Decoration::V => g.mul(g.inv(pair.b()), label),
            }
        };
        // explicit walker: east along row 0, then south, no modular reduction
        let walk = |r: usize, c: usize| -> Element {
            let mut label = one;
            for t in 0..c {
                label = step(label, Decoration::east_at(0, t));
            }
            for t in 0..r {
                label = step(label, Decoration::south_at(t, c));
            }
            label
        };
        let grid = toroidal_grid(pair);
        for r in 0..period {
            for c in 0..period {
                let here = grid.labels[r][c];
                assert_eq!(here, walk(r, c), "{text}: walker mismatch at ({r},{c})");
                let east_south = step(
                    step(here, Decoration::east_at(r, c)),
                    Decoration::south_at(r, c + 1),
                );
                let south_east = step(
                    step(here, Decoration::south_at(r, c)),
                    Decoration::east_at(r + 1, c),
                );
                assert_eq!(east_south, south_east, "{text}: square at ({r},{c})");
                assert_eq!(east_south, grid.label(r + 1, c + 1));
                assert_eq!(walk(r + period, c), here, "{text}: row period at ({r},{c})");
                assert_eq!(
                    walk(r, c + period),
                    here,
                    "{text}: column period at ({r},{c})"
                );
                cases += 1;
            }
        }
        // swapping the generators transposes the grid and preserves validity
        let swapped = validate_pair(g.clone(), pair.b(), pair.a())
            .unwrap_or_else(|e| panic!("{text}: swapped pair invalid: {e}"));
        assert_eq!(swapped.m(), pair.m());
        let swapped_grid = toroidal_grid(&swapped);
        for r in 0..period {
            for c in 0..period {
                assert_eq!(
                    swapped_grid.labels[r][c], grid.labels[c][r],
                    "{text}: transposition at ({r},{c})"
                );
            }
        }
        // graded dimensions are transposition-invariant
        for ell in 0..=8 {
            for j in g.elements() {
                assert_eq!(
                    graded_dimension_with_grid(pair, &grid, one, j, ell),
                    graded_dimension_with_grid(&swapped, &swapped_grid, one, j, ell),
                );
            }
        }
    }
    cases
}

/// Hilbert-basis completeness (every box element is a combination of basis
/// elements) and minimality (dropping any basis element loses its own
/// reachability), by reachability DP over the box.
pub fn suite_hilbert_basis_dp(corpus: &[TestPair]) -> usize {
    let mut cases = 0;
    for TestPair { text, pair } in corpus {
        let period = pair.period();
        let monoid = occurrence_monoid(pair);
        assert_eq!(
            monoid.box_elements,
            box_occurrences(pair),
            "{text}: box recompute"
        );
        let basis = hilbert_basis_of(pair, &monoid);
        let positions = basis_positions(&basis);
        let reachable = reachable_in_box(period, &positions);
        for &e in &monoid.box_elements {
            assert!(
                reachable.contains(&e),
                "{text}: {e:?} not generated by the basis"
            );
            cases += 1;
        }
        for drop in 0..positions.len() {
            let rest: Vec<(usize, usize)> = positions
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &p)| p)
                .collect();
            assert!(
                !reachable_in_box(period, &rest).contains(&positions[drop]),
                "{text}: basis element {:?} is redundant",
                positions[drop]
            );
            cases += 1;
        }
        // monoid closure inside the box (all corpus relators have even length)
        for &(r1, c1) in &monoid.box_elements {
            for &(r2, c2) in &monoid.box_elements {
                let sum = (r1 + r2, c1 + c2);
                if sum.0 <= period && sum.1 <= period {
                    assert!(monoid.contains(sum), "{text}: monoid not closed at {sum:?}");
                }
            }
        }
    }
    cases
}

/// Graded dimensions equal the independent decorated-walk count (words up to
/// uu ↔ vv flips) for ℓ ≤ 8 on pairs of order ≤ 48.
pub fn suite_walk_oracle(corpus: &[TestPair]) -> usize {
    let mut cases = 0;
    for TestPair { text, pair } in corpus {
        let g = pair.group();
        if g.order() > 48 {
            continue;
        }
        let grid = toroidal_grid(pair);
        let mut counts: Vec<Vec<usize>> = vec![vec![0; g.order()]; g.order()];
        for ell in 0..=8 {
            decorated_walk_oracle(pair, ell, &mut counts);
            for i in g.elements() {
                for j in g.elements() {
                    assert_eq!(
                        graded_dimension_with_grid(pair, &grid, i, j, ell),
                        counts[i][j],
                        "{text}: walk oracle at i={i}, j={j}, ℓ={ell}"
                    );
                    cases += 1;
                }
            }
        }
    }
    cases
}

/// Finite quotient dimensions equal the explicit-rectangle brute force, and
/// the finite/infinite split agrees; brute force also covers the window
/// bound claim (all survivors strictly inside the first period).
pub fn suite_quotient_brute_force(corpus: &[TestPair]) -> usize {
    let mut cases = 0;
    for TestPair { text, pair } in corpus {
        let g = pair.group();
        let one = g.identity();
        let targets = [one, pair.a(), g.mul(pair.a(), pair.b())];
        let sources: Vec<Element> = if g.order() <= 16 {
            g.elements().collect()
        } else {
            vec![one, pair.a(), pair.b()]
        };
        for &i in &sources {
            for &j in &targets {
                let fast = quotient_dimension(pair, i, j);
                let brute = quotient_brute_force(pair, i, j);
                assert!(
                    agrees_with_brute_quotient(fast, brute),
                    "{text}: quotient mismatch at i={i}, j={j} ({fast:?})"
                );
                cases += 1;
            }
        }
    }
    cases
}

/// Identity occurrences sit at even coordinate sums whenever every relator
/// has even length, and every element appears exactly 4m²/|G| times.
pub fn suite_occurrence_statistics(corpus: &[TestPair]) -> usize {
    let mut cases = 0;
    for TestPair { text, pair } in corpus {
        let g = pair.group();
        let period = pair.period();
        let grid = toroidal_grid(pair);
        let all_even = mckay_quiver::parse_presentation(text)
            .map(|p| p.all_relators_even_length())
            .unwrap_or(false);
        assert_eq!(
            4 * pair.m() * pair.m() % g.order(),
            0,
            "{text}: multiplicity integrality"
        );
        assert_eq!(g.order() % (2 * pair.m()), 0, "{text}: 2m divides |G|");
        let expected = 4 * pair.m() * pair.m() / g.order();
        let mut counts = vec![0usize; g.order()];
        for r in 0..period {
            for c in 0..period {
                let e = grid.labels[r][c];
                counts[e] += 1;
                if all_even && e == g.identity() {
                    assert_eq!(
                        (r + c) % 2,
                        0,
                        "{text}: odd identity occurrence at ({r},{c})"
                    );
                }
                cases += 1;
            }
        }
        assert!(
            counts.iter().all(|&n| n == expected),
            "{text}: uneven multiplicities"
        );
        // smallest invariant power of u comes out at the order of a
        assert_eq!(
            mckay_quiver::smallest_invariant_u_power(pair),
            g.element_order(pair.a()),
            "{text}: u-power"
        );
        // basis degrees inherit even parity
        if all_even {
            for b in hilbert_basis(pair) {
                assert_eq!(b.degree % 2, 0, "{text}: odd basis degree {:?}", b.position);
            }
        }
    }
    cases
}
