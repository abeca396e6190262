//! Revision by uncertain inputs `(A, α)`.
//!
//! Two readings of the input are supported. As a *constraint* the revised
//! state must satisfy `N'(A) = α` exactly ([`revise_uncertain`],
//! [`revise_partition`]). As an *unreliable observation* the input is the
//! nested pair `{(A, 1), (Ω, 1 - α)}` and may be rejected when too weak
//! ([`revise_unreliable`]). Natural revision and the piecewise form of
//! Williams' adjustment are expressed in the same vocabulary.

use crate::conditioning::{condition, contract, RevisionMode};
use crate::distribution::PossibilityDistribution;
use crate::error::{Error, Result};
use crate::scalar::{check_scale, Scalar};
use crate::universe::Event;

/// How an uncertain input is to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputSemantics {
    Constraint,
    Unreliable,
}

/// An event together with a certainty degree.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertainInput<S> {
    pub event: Event,
    pub degree: S,
    pub semantics: InputSemantics,
}

impl<S: Scalar> UncertainInput<S> {
    pub fn new(event: Event, degree: S, semantics: InputSemantics) -> Result<Self> {
        check_scale(&degree)?;
        Ok(UncertainInput {
            event,
            degree,
            semantics,
        })
    }

    /// Applies the input with the rule matching its semantics.
    pub fn apply(&self, pi: &PossibilityDistribution<S>, mode: RevisionMode) -> Result<PossibilityDistribution<S>> {
        match self.semantics {
            InputSemantics::Constraint => revise_uncertain(pi, &self.event, &self.degree, mode),
            InputSemantics::Unreliable => revise_unreliable(pi, &self.event, &self.degree, mode),
        }
    }
}

/// Jeffrey-like rule: `max(π(·|A), (1 - α) ⋆ π(·|Ā))`.
///
/// Both conditionings must exist, including at `α = 1`.
pub fn revise_uncertain<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
    alpha: &S,
    mode: RevisionMode,
) -> Result<PossibilityDistribution<S>> {
    check_scale(alpha)?;
    pi.require_normalized()?;
    let inside = condition(pi, event, mode)?;
    let outside = condition(pi, &event.complement(), mode)?;
    let weight = alpha.complement();
    inside.zip_with(&outside, |a, b| a.max_with(&mode.combine(&weight, b)))
}

/// A partition of the universe with a possibility level per cell.
#[derive(Debug, Clone)]
pub struct PartitionInput<S> {
    cells: Vec<(Event, S)>,
}

impl<S: Scalar> PartitionInput<S> {
    /// Cells must be pairwise disjoint, cover the universe, and have levels in
    /// `[0, 1]` whose maximum is 1.
    pub fn new(cells: Vec<(Event, S)>) -> Result<Self> {
        let (first, _) = cells
            .first()
            .ok_or_else(|| Error::NotPartition("no cells".into()))?;
        let universe = first.universe().clone();
        let mut covered = Event::empty(&universe);
        let mut top = S::zero();
        for (event, level) in &cells {
            check_scale(level)?;
            if !covered.is_disjoint(event)? {
                return Err(Error::NotPartition(format!("cell {event} overlaps an earlier cell")));
            }
            if event.is_empty() {
                return Err(Error::NotPartition("empty cell".into()));
            }
            covered = covered.union(event)?;
            top = top.max_with(level);
        }
        if !covered.is_full() {
            return Err(Error::NotPartition(format!("worlds {} are not covered", covered.complement())));
        }
        if top != S::one() {
            return Err(Error::NotPartition(format!("maximal cell level is {top}, not 1")));
        }
        Ok(PartitionInput { cells })
    }

    pub fn cells(&self) -> &[(Event, S)] {
        &self.cells
    }
}

/// `max_i λ_i ⋆ π(·|A_i)`. Cells with `λ_i = 0` contribute nothing and may
/// be impossible.
pub fn revise_partition<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    input: &PartitionInput<S>,
    mode: RevisionMode,
) -> Result<PossibilityDistribution<S>> {
    let mut result = pi.map(|_, _| S::zero());
    for (event, level) in &input.cells {
        if *level == S::zero() {
            continue;
        }
        let conditioned = condition(pi, event, mode)?;
        result = result.zip_with(&conditioned, |acc, c| acc.max_with(&mode.combine(level, c)))?;
    }
    Ok(result)
}

/// Unreliable-input rule: `max(π(·|A), (1 - α) ⋆ π)`.
///
/// No conditioning on `Ā` takes place, so `Π(Ā) = 0` is allowed. At `α = 0`
/// the input degenerates to `Ω` and `π` is returned unchanged, even where the
/// formula alone would promote the best `A`-worlds.
pub fn revise_unreliable<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
    alpha: &S,
    mode: RevisionMode,
) -> Result<PossibilityDistribution<S>> {
    check_scale(alpha)?;
    pi.require_normalized()?;
    let inside = condition(pi, event, mode)?;
    if *alpha == S::zero() {
        return Ok(pi.clone());
    }
    let weight = alpha.complement();
    inside.zip_with(pi, |a, p| a.max_with(&mode.combine(&weight, p)))
}

/// Reasons why a natural revision result may not coincide with the
/// ordering-based reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProvisoWarning {
    /// Some world outside the input already sits at the demotion level.
    ComplementAtDemotionLevel,
    /// The input was already fully possible, `Π(A) = 1`.
    InputAlreadyPossible,
    /// Some world lies strictly between the demotion level and 1, so the
    /// demotion level is not the second level of the scale.
    LevelAboveDemotion,
}

impl std::fmt::Display for ProvisoWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProvisoWarning::ComplementAtDemotionLevel => "a world outside the input already sits at the demotion level",
            ProvisoWarning::InputAlreadyPossible => "the input is already fully possible",
            ProvisoWarning::LevelAboveDemotion => "a world lies strictly between the demotion level and 1",
        })
    }
}

#[derive(Debug, Clone)]
pub struct NaturalRevision<S: Scalar> {
    pub result: PossibilityDistribution<S>,
    pub warnings: Vec<ProvisoWarning>,
}

/// Default demotion level: halfway between 1 and the largest value below 1
/// occurring in `π` (or 1/2 when every world is at 1).
pub fn default_demotion_level<S: Scalar>(pi: &PossibilityDistribution<S>) -> S {
    let below = pi
        .values()
        .iter()
        .filter(|v| **v < S::one())
        .fold(S::zero(), |acc, v| acc.max_with(v));
    let two = S::one() + S::one();
    (S::one() + below) / two
}

/// `max(π(·|A), β ⋆ π(·|Ā))`: the best worlds of `A` are promoted to 1 and
/// the best worlds outside `A` are demoted to `β`.
pub fn natural_revision<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
    beta: &S,
    mode: RevisionMode,
) -> Result<NaturalRevision<S>> {
    if !(*beta > S::zero() && *beta < S::one()) {
        return Err(Error::InvalidArgument(format!("demotion level {beta} must lie strictly between 0 and 1")));
    }
    pi.require_normalized()?;
    let inside = condition(pi, event, mode)?;
    let complement = event.complement();
    let outside = condition(pi, &complement, mode)?;
    let result = inside.zip_with(&outside, |a, b| a.max_with(&mode.combine(beta, b)))?;

    let mut warnings = Vec::new();
    if complement.iter().any(|w| pi.value(w) == beta) {
        warnings.push(ProvisoWarning::ComplementAtDemotionLevel);
    }
    if pi.possibility(event)? == S::one() {
        warnings.push(ProvisoWarning::InputAlreadyPossible);
    }
    if pi.values().iter().any(|v| v > beta && *v < S::one()) {
        warnings.push(ProvisoWarning::LevelAboveDemotion);
    }
    Ok(NaturalRevision { result, warnings })
}

/// The `π^x` step of adjustment: best `A`-worlds to 1, `A`-worlds below
/// `Π(A)` unchanged, worlds outside `A` capped at `1 - α`.
fn adjustment_step<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
    alpha: &S,
) -> Result<PossibilityDistribution<S>> {
    let top = pi.possibility(event)?;
    let cap = alpha.complement();
    Ok(pi.map(|w, v| {
        if event.contains(w) {
            if *v == top {
                S::one()
            } else {
                v.clone()
            }
        } else if *v < cap {
            v.clone()
        } else {
            cap.clone()
        }
    }))
}

/// Williams' adjustment translated to possibility distributions, case by case:
/// contraction at `α = 0`, contraction followed by the adjustment step when
/// `0 < α < N(A)`, and the adjustment step alone otherwise.
///
/// For `α > 0` this coincides with [`revise_uncertain`] in min mode wherever
/// the latter is defined; at `α = 0` it does not.
pub fn adjust_williams<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
    alpha: &S,
) -> Result<PossibilityDistribution<S>> {
    check_scale(alpha)?;
    pi.require_normalized()?;
    if *alpha == S::zero() {
        return contract(pi, event);
    }
    if pi.possibility(event)? == S::zero() {
        return Err(Error::ConditioningUndefined(event.to_string()));
    }
    if *alpha < pi.necessity(event)? {
        let contracted = contract(pi, event)?;
        adjustment_step(&contracted, event, alpha)
    } else {
        adjustment_step(pi, event, alpha)
    }
}
