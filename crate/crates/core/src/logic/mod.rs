//! Weighted propositional bases: syntax, clausal form, resolution and the
//! induced possibility distribution.

pub mod base;
pub mod clause;
pub mod formula;
pub mod inference;
pub mod resolution;

pub use base::{parse_base, BaseEntry, BeliefBase};
pub use clause::{to_clauses, to_weighted_clauses, Clause, Literal, WeightedClause, MAX_CNF_CLAUSES};
pub use formula::{parse_formula, Formula, Vocabulary};
pub use inference::{
    check_ee_coherence, consistent_part_closed_form, consistent_part_distribution, entails_pref,
    first_incoherence, inconsistency_degree, induced_distribution, induced_distribution_on, models, prove,
    restore_ee_coherence, semantic_entails, semantic_necessity, universe_of,
};
pub use resolution::{refutation_degree, resolve, MAX_SATURATION_CLAUSES};
