//! The invariant ring as the monoid of identity-labeled lattice positions.
//!
//! Paths from the identity vertex to itself correspond to positions (r, c)
//! whose lattice label is the identity, and positions determine elements of
//! the trivially-graded component uniquely. Everything about the invariant
//! ring — minimal generators, Hilbert series, relations, regularity — is
//! therefore arithmetic on these positions. The box [0, 2m]² captures the
//! whole monoid: decompositions of a box element stay componentwise inside
//! the box, and (2m, 0), (0, 2m) are always members (the horizontal and
//! vertical torus periods, i.e. (uv)^m and (vu)^m).

use crate::coaction::CoactionPair;
use crate::dims::MethodDisagreement;
use crate::quiver::{toroidal_grid, Decoration, ToroidalLattice};
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use thiserror::Error;

pub type Position = (usize, usize);

/// All identity-labeled positions inside the closed box [0, 2m]².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceMonoid {
    pub period: usize,
    /// Sorted lexicographically by (r, c); always contains the four corners.
    pub box_elements: Vec<Position>,
}

impl OccurrenceMonoid {
    pub fn contains(&self, pos: Position) -> bool {
        self.box_elements.binary_search(&pos).is_ok()
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Position> + '_ {
        self.box_elements.iter().copied().filter(|&p| p != (0, 0))
    }
}

pub fn occurrence_monoid(pair: &CoactionPair) -> OccurrenceMonoid {
    let grid = toroidal_grid(pair);
    occurrence_monoid_with_grid(pair, &grid)
}

fn occurrence_monoid_with_grid(pair: &CoactionPair, grid: &ToroidalLattice) -> OccurrenceMonoid {
    let period = pair.period();
    let one = pair.group().identity();
    let mut box_elements = Vec::new();
    for r in 0..=period {
        for c in 0..=period {
            if grid.label(r, c) == one {
                box_elements.push((r, c));
            }
        }
    }
    OccurrenceMonoid {
        period,
        box_elements,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub position: Position,
    pub degree: usize,
    pub monomial: String,
}

/// The minimal generating set of the occurrence monoid: nonzero box elements
/// that are not a sum of two nonzero box elements. Sorted by degree, then
/// position.
pub fn hilbert_basis(pair: &CoactionPair) -> Vec<BasisElement> {
    let monoid = occurrence_monoid(pair);
    hilbert_basis_of(pair, &monoid)
}

pub fn hilbert_basis_of(pair: &CoactionPair, monoid: &OccurrenceMonoid) -> Vec<BasisElement> {
    let members: HashSet<Position> = monoid.nonzero_elements().collect();
    let mut basis: Vec<Position> = monoid
        .nonzero_elements()
        .filter(|&(r, c)| {
            !members.iter().any(|&(fr, fc)| {
                fr <= r && fc <= c && (fr, fc) != (r, c) && members.contains(&(r - fr, c - fc))
            })
        })
        .collect();
    basis.sort_by_key(|&(r, c)| (r + c, r, c));
    basis
        .into_iter()
        .map(|pos| BasisElement {
            position: pos,
            degree: pos.0 + pos.1,
            monomial: canonical_monomial(pair, pos).expect("basis positions are occurrences"),
        })
        .collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonomialError {
    #[error("position ({0}, {1}) is not an identity occurrence")]
    NotAnOccurrence(usize, usize),
}

/// The decoration word of the all-east-then-all-south path to `pos`; any
/// monotone path to the same position is the same ring element, so this is a
/// well-defined representative.
pub fn canonical_monomial(pair: &CoactionPair, pos: Position) -> Result<String, MonomialError> {
    let (r, c) = pos;
    let grid = toroidal_grid(pair);
    if grid.label(r, c) != pair.group().identity() {
        return Err(MonomialError::NotAnOccurrence(r, c));
    }
    let mut word = String::with_capacity(r + c);
    for t in 0..c {
        word.push_str(Decoration::east_at(0, t).as_str());
    }
    for t in 0..r {
        word.push_str(Decoration::south_at(t, c).as_str());
    }
    Ok(word)
}

/// Coefficients of the Hilbert series of the invariant ring up to
/// `max_degree`: the coefficient at ℓ counts identity occurrences on the
/// anti-diagonal r + c = ℓ.
pub fn hilbert_series(pair: &CoactionPair, max_degree: usize) -> Vec<usize> {
    let grid = toroidal_grid(pair);
    let one = pair.group().identity();
    (0..=max_degree)
        .map(|ell| (0..=ell).filter(|&r| grid.label(r, ell - r) == one).count())
        .collect()
}

/// An additive coincidence between two distinct combinations of basis
/// positions; exactly an algebra relation among the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// Nonzero (coefficient, position) terms, in basis order.
    pub lhs: Vec<(usize, Position)>,
    pub rhs: Vec<(usize, Position)>,
    pub sum: Position,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |terms: &[(usize, Position)], f: &mut fmt::Formatter<'_>| -> fmt::Result {
            for (i, (coeff, (r, c))) in terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                if *coeff == 1 {
                    write!(f, "({r},{c})")?;
                } else {
                    write!(f, "{coeff}*({r},{c})")?;
                }
            }
            Ok(())
        };
        side(&self.lhs, f)?;
        write!(f, " = ")?;
        side(&self.rhs, f)
    }
}

/// All coincidences Σ n_k·h_k = Σ n'_k·h_k between combinations with disjoint
/// support and every coefficient ≤ `bound`, lowest total degree first.
pub fn relation_search(pair: &CoactionPair, bound: usize) -> Vec<Relation> {
    let basis = hilbert_basis(pair);
    relation_search_in(&basis, bound)
}

pub fn relation_search_in(basis: &[BasisElement], bound: usize) -> Vec<Relation> {
    let k = basis.len();
    let mut by_sum: BTreeMap<Position, Vec<Vec<usize>>> = BTreeMap::new();
    let mut coeffs = vec![0usize; k];
    loop {
        let sum = coeffs.iter().zip(basis).fold((0, 0), |(r, c), (n, h)| {
            (r + n * h.position.0, c + n * h.position.1)
        });
        if sum != (0, 0) {
            by_sum.entry(sum).or_default().push(coeffs.clone());
        }
        // odometer over [0, bound]^k
        let mut idx = 0;
        loop {
            if idx == k {
                let mut relations = collect_relations(basis, &by_sum);
                relations.sort_by_key(|rel| (rel.sum.0 + rel.sum.1, rel.sum, rel.lhs.clone()));
                return relations;
            }
            if coeffs[idx] < bound {
                coeffs[idx] += 1;
                break;
            }
            coeffs[idx] = 0;
            idx += 1;
        }
    }
}

fn collect_relations(
    basis: &[BasisElement],
    by_sum: &BTreeMap<Position, Vec<Vec<usize>>>,
) -> Vec<Relation> {
    let terms = |v: &[usize]| -> Vec<(usize, Position)> {
        v.iter()
            .enumerate()
            .filter(|&(_, &n)| n > 0)
            .map(|(i, &n)| (n, basis[i].position))
            .collect()
    };
    let mut relations = Vec::new();
    for (&sum, vectors) in by_sum {
        for i in 0..vectors.len() {
            for j in i + 1..vectors.len() {
                let disjoint = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .all(|(&x, &y)| x == 0 || y == 0);
                if !disjoint {
                    continue;
                }
                let (vi, vj) = (&vectors[i], &vectors[j]);
                let (ti, tj) = (terms(vi), terms(vj));
                // products of several distinct generators read better on the left
                let (lhs, rhs) = if ti.len() >= tj.len() {
                    (ti, tj)
                } else {
                    (tj, ti)
                };
                relations.push(Relation { lhs, rhs, sum });
            }
        }
    }
    relations
}

/// Default coefficient bound for `relation_search`.
pub fn default_relation_bound(basis: &[BasisElement]) -> usize {
    let max = basis.iter().map(|b| b.degree).max().unwrap_or(0);
    let min = basis.iter().map(|b| b.degree).min().unwrap_or(1).max(1);
    (max / min).max(4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub is_regular: bool,
    /// |G| = 4m².
    pub order_method: bool,
    /// The Hilbert basis is exactly the two torus periods.
    pub basis_method: bool,
}

/// Decides regularity of the invariant ring by the order criterion and
/// independently by counting minimal generators; the methods must agree.
pub fn regularity_check(pair: &CoactionPair) -> Result<RegularityReport, MethodDisagreement> {
    let m = pair.m();
    let order_method = pair.group().order() == 4 * m * m;
    let basis = hilbert_basis(pair);
    let basis_method = basis.len() == 2;
    if order_method != basis_method {
        return Err(MethodDisagreement::Regularity {
            order_method,
            basis_method,
        });
    }
    Ok(RegularityReport {
        is_regular: order_method,
        order_method,
        basis_method,
    })
}

/// Smallest k ≥ 1 with u^k invariant, found by walking the all-u staircase
/// until it lands on an identity occurrence. Always equals the order of a.
pub fn smallest_invariant_u_power(pair: &CoactionPair) -> usize {
    let grid = toroidal_grid(pair);
    let one = pair.group().identity();
    for k in 1..=pair.group().order() {
        if grid.label(k / 2, k.div_ceil(2)) == one {
            return k;
        }
    }
    unreachable!("u^|G| is always invariant");
}

/// Free-text annotation when the basis/relation data matches a known shape;
/// informational only.
pub fn singularity_annotation(pair: &CoactionPair, basis: &[BasisElement]) -> Option<String> {
    let period = pair.period();
    let positions: Vec<Position> = basis.iter().map(|b| b.position).collect();
    if positions == [(0, period), (period, 0)] {
        return Some("polynomial ring in two variables".to_string());
    }
    if positions.len() == 3 && positions[1] == (0, period) && positions[2] == (period, 0) {
        let (q, q2) = positions[0];
        if q == q2 && q > 0 && period.is_multiple_of(q) {
            let n = period / q;
            return Some(format!("type A_{} singularity (xy = z^{})", n - 1, n));
        }
    }
    None
}

/// Everything the reports need about the invariant ring, in one pass.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub basis: Vec<BasisElement>,
    /// Sorted degree multiset of the basis.
    pub degrees: Vec<usize>,
    pub is_regular: bool,
    pub order_method: bool,
    pub basis_method: bool,
    /// Coefficient bound the relation search ran with.
    pub relation_bound: usize,
    pub relations: Vec<Relation>,
    pub series: Vec<usize>,
    pub singularity: Option<String>,
}

pub fn invariant_report(
    pair: &CoactionPair,
    series_max_degree: usize,
    relation_bound: Option<usize>,
) -> Result<InvariantReport, MethodDisagreement> {
    let basis = hilbert_basis(pair);
    let mut degrees: Vec<usize> = basis.iter().map(|b| b.degree).collect();
    degrees.sort_unstable();
    let regularity = regularity_check(pair)?;
    let bound = relation_bound.unwrap_or_else(|| default_relation_bound(&basis));
    let relations = relation_search_in(&basis, bound);
    let series = hilbert_series(pair, series_max_degree);
    let singularity = singularity_annotation(pair, &basis);
    Ok(InvariantReport {
        degrees,
        is_regular: regularity.is_regular,
        order_method: regularity.order_method,
        basis_method: regularity.basis_method,
        relation_bound: bound,
        relations,
        series,
        singularity,
        basis,
    })
}
