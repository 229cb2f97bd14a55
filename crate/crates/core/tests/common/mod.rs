//! Shared test support: a corpus of valid grading pairs and independent
//! oracles (brute-force decorated-walk counting, explicit rectangle scans,
//! reachability DP) used by both the property and acceptance suites.

pub mod suites;

use mckay_quiver::dims::DimensionResult;
use mckay_quiver::invariants::BasisElement;
use mckay_quiver::word::{Letter, Word};
use mckay_quiver::{
    enumerate_group, gamma_m_presentation, lattice_label, parse_presentation, toroidal_grid,
    validate_generators, CoactionPair, Element, Group,
};
use std::collections::HashSet;

pub fn word(s: &str) -> Word {
    Word(
        s.chars()
            .map(|c| Letter::from_char(c).expect("word letter"))
            .collect(),
    )
}

pub fn group_from(text: &str) -> Group {
    enumerate_group(&parse_presentation(text).unwrap(), 100_000).unwrap()
}

pub fn pair_from(text: &str) -> CoactionPair {
    validate_generators(group_from(text)).unwrap()
}

pub const RUNNING_EXAMPLE: &str = "a^2 = b^2; a^4 = 1; b^4 = 1; (ab)^3 = 1";
pub const SECOND_EXAMPLE: &str = "a^2 = b^2; a^4 = 1; b^4 = 1; (a^3 b)^3 = 1";
pub const ORDER_48_EXAMPLE: &str = "a^2 = b^2; a^16 = 1; (a^7 b)^3 = 1";

pub struct TestPair {
    pub text: String,
    pub pair: CoactionPair,
}

/// The handful of pairs discussed explicitly in the source material.
pub fn named_pairs() -> Vec<TestPair> {
    let mut texts: Vec<String> = vec![
        RUNNING_EXAMPLE.to_string(),
        SECOND_EXAMPLE.to_string(),
        ORDER_48_EXAMPLE.to_string(),
    ];
    for m in 2..=5 {
        texts.push(gamma_m_presentation(m).unwrap().source_text);
    }
    for n in 3..=6 {
        texts.push(format!("a^2 = 1; b^2 = 1; (ab)^{n} = 1"));
    }
    texts.push("a^4 = 1; a^2 = b^2; B a b = A".to_string()); // quaternion
    texts
        .into_iter()
        .map(|text| TestPair {
            pair: pair_from(&text),
            text,
        })
        .collect()
}

/// Valid pairs of order ≤ 100 from a systematic family of presentations.
/// Infinite, oversized, or invalid candidates are skipped.
pub fn full_corpus() -> Vec<TestPair> {
    let mut texts: Vec<String> = named_pairs().into_iter().map(|t| t.text).collect();
    for i in [4usize, 6, 8, 10, 12, 16, 20] {
        for k in 2..=8usize {
            texts.push(format!("a^2 = b^2; a^{i} = 1; (ab)^{k} = 1"));
        }
    }
    for i in [4usize, 8, 12, 16] {
        for k in 2..=8usize {
            texts.push(format!("a^2 = b^2; a^{i} = 1; b^{i} = 1; (ab)^{k} = 1"));
        }
    }
    for i in [4usize, 8, 16] {
        for k in 2..=5usize {
            texts.push(format!("a^2 = b^2; a^{i} = 1; (a^3 b)^{k} = 1"));
        }
    }
    for n in 7..=16usize {
        texts.push(format!("a^2 = 1; b^2 = 1; (ab)^{n} = 1"));
    }
    for i in [4usize, 8] {
        for k in 2..=5usize {
            texts.push(format!("a^2 = b^2; a^{i} = 1; (b a)^{k} = 1"));
        }
    }
    for m in 2..=5usize {
        texts.push(format!(
            "a^2 = b^2; a^{n} = 1; (ab)^{m} = 1; (ba)^{m} = 1",
            n = 2 * m
        ));
    }
    let mut seen = HashSet::new();
    let mut corpus = Vec::new();
    for text in texts {
        if !seen.insert(text.clone()) {
            continue;
        }
        let presentation = match parse_presentation(&text) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let group = match enumerate_group(&presentation, 60_000) {
            Ok(g) => g,
            Err(_) => continue,
        };
        if group.order() > 100 {
            continue;
        }
        if let Ok(pair) = validate_generators(group) {
            corpus.push(TestPair { text, pair });
        }
    }
    corpus
}

/// Numbering of the order-12 examples by the standard listing: the element
/// listed k-th in `{1, a, a², a³, b, ab, a²b, a³b, ba, aba, a²ba, a³ba}` gets
/// number k.
pub fn listing_numbering_order_12(g: &Group) -> Vec<usize> {
    let listing = [
        "", "a", "aa", "aaa", "b", "ab", "aab", "aaab", "ba", "aba", "aaba", "aaaba",
    ];
    let mut numbers = vec![0usize; g.order()];
    let mut hit = vec![false; g.order()];
    for (k, text) in listing.iter().enumerate() {
        let e = g.eval_word(&word(text));
        assert!(!hit[e], "listing words must name distinct elements");
        hit[e] = true;
        numbers[e] = k + 1;
    }
    assert!(hit.iter().all(|&h| h), "listing must cover the group");
    numbers
}

/// Independent count of dim (e_iΛe_j)_ℓ: enumerate all 2^ℓ decoration words,
/// identify words that differ by a uu ↔ vv flip, and count classes whose
/// group value w satisfies w⁻¹·i = j. Never touches the lattice labeling.
pub fn decorated_walk_oracle(pair: &CoactionPair, ell: usize, counts: &mut [Vec<usize>]) {
    let g = pair.group();
    let n_words: usize = 1 << ell;
    let mut parent: Vec<usize> = (0..n_words).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for w in 0..n_words {
        for pos in 0..ell.saturating_sub(1) {
            if (w >> pos) & 1 == (w >> (pos + 1)) & 1 {
                let flipped = w ^ (1 << pos) ^ (1 << (pos + 1));
                let (rw, rf) = (find(&mut parent, w), find(&mut parent, flipped));
                if rw != rf {
                    parent[rw.max(rf)] = rw.min(rf);
                }
            }
        }
    }
    // value of a word: bit t = 0 means letter u (degree a), 1 means v (degree b)
    let value = |w: usize| -> Element {
        let mut v = g.identity();
        for t in 0..ell {
            let gen = if (w >> t) & 1 == 0 {
                pair.a()
            } else {
                pair.b()
            };
            v = g.mul(v, gen);
        }
        v
    };
    for row in counts.iter_mut() {
        for c in row.iter_mut() {
            *c = 0;
        }
    }
    for w in 0..n_words {
        if find(&mut parent, w) == w {
            let v = value(w);
            // class counts toward (i, j) with j = v⁻¹·i
            for i in g.elements() {
                let j = g.mul(g.inv(v), i);
                counts[i][j] += 1;
            }
        }
    }
}

pub enum BruteQuotient {
    Finite(usize),
    Infinite,
}

/// Explicit-rectangle quotient dimension over the closed window [0, 2m]²:
/// a position survives when no occurrence of j lies weakly north-west of it,
/// and a survivor on the far border certifies infinitude by periodicity.
pub fn quotient_brute_force(pair: &CoactionPair, i: Element, j: Element) -> BruteQuotient {
    let period = pair.period();
    let size = period + 1;
    let mut labels = vec![vec![0usize; size]; size];
    for (r, row) in labels.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = lattice_label(pair, i, r, c);
        }
    }
    let mut survivors = Vec::new();
    for r in 0..size {
        for c in 0..size {
            let mut blocked = false;
            for row in labels.iter().take(r + 1) {
                if row.iter().take(c + 1).any(|&label| label == j) {
                    blocked = true;
                    break;
                }
            }
            if !blocked {
                survivors.push((r, c));
            }
        }
    }
    if survivors.iter().any(|&(r, c)| r == period || c == period) {
        BruteQuotient::Infinite
    } else {
        BruteQuotient::Finite(survivors.len())
    }
}

pub fn agrees_with_brute_quotient(result: DimensionResult, brute: BruteQuotient) -> bool {
    match (result, brute) {
        (DimensionResult::Finite(n), BruteQuotient::Finite(m)) => n == m,
        (DimensionResult::Infinite(_), BruteQuotient::Infinite) => true,
        _ => false,
    }
}

/// All identity occurrences in the closed box, recomputed from the grid.
pub fn box_occurrences(pair: &CoactionPair) -> Vec<(usize, usize)> {
    let grid = toroidal_grid(pair);
    let period = pair.period();
    let one = pair.group().identity();
    let mut out = Vec::new();
    for r in 0..=period {
        for c in 0..=period {
            if grid.label(r, c) == one {
                out.push((r, c));
            }
        }
    }
    out
}

/// Positions reachable as non-negative combinations of the given generators,
/// restricted to the closed box.
pub fn reachable_in_box(period: usize, generators: &[(usize, usize)]) -> HashSet<(usize, usize)> {
    let mut reachable = HashSet::new();
    reachable.insert((0usize, 0usize));
    // breadth-first over the box; generators only increase coordinates
    let mut frontier = vec![(0usize, 0usize)];
    while let Some((r, c)) = frontier.pop() {
        for &(gr, gc) in generators {
            let next = (r + gr, c + gc);
            if next.0 <= period && next.1 <= period && reachable.insert(next) {
                frontier.push(next);
            }
        }
    }
    reachable
}

pub fn basis_positions(basis: &[BasisElement]) -> Vec<(usize, usize)> {
    basis.iter().map(|b| b.position).collect()
}
