//! Belief revision in possibility theory, with exact rational arithmetic.
//!
//! Cognitive states are possibility distributions over a finite universe
//! ([`PossibilityDistribution`]) or weighted propositional bases
//! ([`BeliefBase`]). The crate provides:
//!
//! - measures, conditioning (min and product) and contraction;
//! - revision by uncertain inputs: the Jeffrey-like constraint rule, its
//!   partition form, unreliable inputs, natural revision and adjustment;
//! - ordinal conditional functions and the exact bridge `π = 2^-κ`;
//! - possibilistic logic: weighted resolution, inconsistency degree,
//!   the induced distribution and EE-coherence;
//! - syntactic base revision (brutal, preferred sub-bases, adjustment);
//! - the probabilistic rules these mirror.
//!
//! All operations are generic over [`Scalar`]; [`Rational`] is the exact
//! scale, `f64`/`f32` are provided for experimentation only.
//!
//! ```
//! use posrev::{condition_min, parse_distribution, Distribution, Event};
//!
//! let pi: Distribution = parse_distribution("w1 : 1\nw2 : 1/2\nw3 : 1/4\nw4 : 0").unwrap();
//! let a = Event::from_labels(pi.universe(), ["w2", "w3"]).unwrap();
//! let revised = condition_min(&pi, &a).unwrap();
//! assert_eq!(revised.values()[1].to_string(), "1");
//! ```

pub mod base_revision;
pub mod conditioning;
pub mod distribution;
pub mod error;
pub mod format;
pub mod logic;
pub mod probability;
pub mod ranking;
pub mod scalar;
pub mod uncertain;
pub mod universe;

pub use base_revision::{
    adjust_base, adjust_semantic, brutal_revise, expand, lex_refine, preferred_subbase_revise, PreferredCandidate,
    MAX_PREFERRED_ENTRIES,
};
pub use conditioning::{
    condition, condition_min, condition_product, contract, envelope, minimal_change_revisions, RevisionMode,
};
pub use distribution::{hamming_distance, HammingScale, PossibilityDistribution};
pub use error::{Error, ErrorKind, Result};
pub use format::{
    parse_distribution, parse_kappa, parse_probability, write_distribution, write_kappa, write_probability,
    ValueStyle,
};
pub use logic::{
    check_ee_coherence, consistent_part_closed_form, consistent_part_distribution, entails_pref,
    inconsistency_degree, induced_distribution, models, parse_base, parse_formula, prove, restore_ee_coherence,
    semantic_entails, semantic_necessity, BaseEntry, BeliefBase, Formula, Vocabulary,
};
pub use probability::{jeffrey, jeffrey_partition, unreliable_update, ProbabilityDistribution};
pub use ranking::{
    kappa_adjust, kappa_condition, kappa_conditionalize, kappa_partition_conditionalize, kappa_to_pi,
    minimal_ranking, pi_to_kappa, KappaFunction, LayeredBase, PartitionRanking, Rank,
};
pub use scalar::{parse_rational, ratio, Scalar};
pub use uncertain::{
    adjust_williams, default_demotion_level, natural_revision, revise_partition, revise_uncertain,
    revise_unreliable, InputSemantics, NaturalRevision, PartitionInput, ProvisoWarning, UncertainInput,
};
pub use universe::{Event, Universe, MAX_ATOMS};

/// The exact scale.
pub type Rational = num_rational::BigRational;
/// A possibility distribution on the exact scale.
pub type Distribution = PossibilityDistribution<Rational>;
/// A possibility distribution on `f64`.
pub type FloatDistribution = PossibilityDistribution<f64>;
/// A weighted base on the exact scale.
pub type Base = BeliefBase<Rational>;
/// A probability distribution on the exact scale.
pub type ProbDistribution = ProbabilityDistribution<Rational>;
