//! Validation of a grading pair (G, a, b) and alternating-word utilities.
//!
//! A valid pair means: G is finite non-abelian, a² = b², and {a, b} generates
//! G (so the induced grading of k⟨u,v⟩/(u²−v²) by deg u = a, deg v = b is
//! inner-faithful). The order m = |ab| = |ba| drives every lattice period
//! downstream, so it is computed once here and cached.

use crate::group::{Element, Group};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("the trivial group admits no valid grading pair")]
    TrivialGroup,
    #[error("a^2 = b^2 does not hold for the chosen pair")]
    MissingSquareRelation,
    #[error("the group is abelian; only non-abelian gradings are supported")]
    AbelianGroup,
    #[error("{{a, b}} does not generate the group (the grading is not inner-faithful)")]
    NotInnerFaithful,
}

/// A validated grading pair with its cached lattice period.
#[derive(Clone, Debug)]
pub struct CoactionPair {
    group: Group,
    a: Element,
    b: Element,
    m: usize,
}

impl CoactionPair {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn a(&self) -> Element {
        self.a
    }

    pub fn b(&self) -> Element {
        self.b
    }

    /// The order of ab (equivalently of ba).
    pub fn m(&self) -> usize {
        self.m
    }

    /// The torus period 2m of the lattice labeling.
    pub fn period(&self) -> usize {
        2 * self.m
    }
}

/// Checks the grading hypotheses and builds the pair.
pub fn validate_pair(group: Group, a: Element, b: Element) -> Result<CoactionPair, PairError> {
    assert!(
        a < group.order() && b < group.order(),
        "element index out of range"
    );
    if group.order() == 1 {
        return Err(PairError::TrivialGroup);
    }
    if group.mul(a, a) != group.mul(b, b) {
        return Err(PairError::MissingSquareRelation);
    }
    if group.mul(a, b) == group.mul(b, a) {
        return Err(PairError::AbelianGroup);
    }
    if group.generated_subgroup(&[a, b]).len() != group.order() {
        return Err(PairError::NotInnerFaithful);
    }
    let m = group.element_order(group.mul(a, b));
    debug_assert!(m >= 2);
    debug_assert_eq!(m, group.element_order(group.mul(b, a)));
    Ok(CoactionPair { group, a, b, m })
}

/// Convenience: validate the group's designated generators.
pub fn validate_generators(group: Group) -> Result<CoactionPair, PairError> {
    let (a, b) = (group.a(), group.b());
    validate_pair(group, a, b)
}

/// The list `1, x, xy, xyx, …, (xy)^{k−1}, (xy)^{k−1}x` of length 2k, together
/// with whether its entries are pairwise distinct. For non-commuting x, y the
/// entries are distinct exactly when |xy| ≥ k.
pub fn alternating_list(group: &Group, x: Element, y: Element, k: usize) -> (Vec<Element>, bool) {
    assert!(k >= 1, "k must be positive");
    let mut list = Vec::with_capacity(2 * k);
    let mut cur = group.identity();
    for _ in 0..k {
        list.push(cur);
        cur = group.mul(cur, x);
        list.push(cur);
        cur = group.mul(cur, y);
    }
    let mut seen = vec![false; group.order()];
    let mut distinct = true;
    for &e in &list {
        if seen[e] {
            distinct = false;
            break;
        }
        seen[e] = true;
    }
    (list, distinct)
}
