//! Combinatorics of two-generator group gradings on k⟨u,v⟩/(u²−v²).
//!
//! Starting from a finite presentation ⟨a,b | ℛ⟩ with a² = b² among the
//! relations, this crate enumerates the group, builds the McKay quiver of the
//! induced grading (arrows g → a⁻¹g and g → b⁻¹g, decorated u and v), and
//! answers the structural questions that reduce to lattice combinatorics on
//! its toroidal presentation:
//!
//! - graded dimensions of path spaces and their quotients ([`dims`]);
//! - whether the Auslander map is an isomorphism, decided both by the order
//!   criterion |ab| = |G|/2 and by toroidal coverage ([`dims::auslander_check`]);
//! - minimal generators, Hilbert series, and bounded relation search for the
//!   invariant ring, plus the regularity decision ([`invariants`]).
//!
//! The pipeline is `parse_presentation` → `enumerate_group` → `validate_pair`
//! → everything else; all downstream structures are immutable and cheap to
//! share across threads.

pub mod coaction;
pub mod dims;
pub mod group;
pub mod invariants;
pub mod presentation;
pub mod quiver;
mod todd_coxeter;
pub mod word;

pub use coaction::{alternating_list, validate_generators, validate_pair, CoactionPair, PairError};
pub use dims::{
    auslander_check, graded_dimension, lambda_mod_e1, quotient_dimension, AuslanderReport, Border,
    DimensionResult, MethodDisagreement,
};
pub use group::{enumerate_group, Element, Group};
pub use invariants::{
    canonical_monomial, hilbert_basis, hilbert_series, invariant_report, occurrence_monoid,
    regularity_check, relation_search, singularity_annotation, smallest_invariant_u_power,
    InvariantReport,
};
pub use presentation::{gamma_m_presentation, parse_presentation, ParseError, Presentation};
pub use quiver::{build_mckay_quiver, lattice_label, toroidal_grid, McKayQuiver, ToroidalLattice};
pub use todd_coxeter::EnumerationError;

/// Default coset limit for enumeration; exceeding it is an error, not a hang.
pub const DEFAULT_MAX_COSETS: usize = 100_000;
