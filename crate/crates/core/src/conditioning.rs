//! Min- and product-based conditioning, contraction, and the minimal-change
//! revisions whose envelope is min-conditioning.

use crate::distribution::PossibilityDistribution;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::universe::Event;

/// The operator `⋆` linking `Π(A ∩ B)` to `Π(B | A)` and `Π(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RevisionMode {
    /// Ordinal conditioning; meaningful on any ordered scale.
    #[default]
    Min,
    /// Dempster-style renormalization; needs a numerical scale.
    Product,
}

impl RevisionMode {
    pub fn combine<S: Scalar>(self, a: &S, b: &S) -> S {
        match self {
            RevisionMode::Min => a.min_with(b),
            RevisionMode::Product => a.clone() * b.clone(),
        }
    }
}

impl std::str::FromStr for RevisionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "min" => Ok(RevisionMode::Min),
            "product" | "prod" => Ok(RevisionMode::Product),
            other => Err(format!("unknown mode `{other}` (expected min or product)")),
        }
    }
}

fn positive_possibility<S: Scalar>(pi: &PossibilityDistribution<S>, event: &Event) -> Result<S> {
    let level = pi.possibility(event)?;
    if level > S::zero() {
        Ok(level)
    } else {
        Err(Error::ConditioningUndefined(event.to_string()))
    }
}

/// `π(· | A)` with `⋆ = min`: the least specific solution of the Cox equation.
///
/// Worlds of `A` at level `Π(A)` move to 1, worlds outside `A` drop to 0, and
/// the remaining worlds of `A` keep their value. The input is not required to
/// be normalized; the output always is.
pub fn condition_min<S: Scalar>(pi: &PossibilityDistribution<S>, event: &Event) -> Result<PossibilityDistribution<S>> {
    let top = positive_possibility(pi, event)?;
    Ok(pi.map(|w, v| {
        if !event.contains(w) {
            S::zero()
        } else if *v == top {
            S::one()
        } else {
            v.clone()
        }
    }))
}

/// `π(· | A)` with `⋆ = product`: `π(ω) / Π(A)` inside `A`, 0 outside.
pub fn condition_product<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
) -> Result<PossibilityDistribution<S>> {
    let top = positive_possibility(pi, event)?;
    Ok(pi.map(|w, v| {
        if event.contains(w) {
            v.clone() / top.clone()
        } else {
            S::zero()
        }
    }))
}

pub fn condition<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
    mode: RevisionMode,
) -> Result<PossibilityDistribution<S>> {
    match mode {
        RevisionMode::Min => condition_min(pi, event),
        RevisionMode::Product => condition_product(pi, event),
    }
}

/// Forgets `A`: the most plausible worlds outside `A` are raised to 1.
///
/// When `Π(Ā) = 0` every world outside `A` is raised (full-meet contraction).
pub fn contract<S: Scalar>(pi: &PossibilityDistribution<S>, event: &Event) -> Result<PossibilityDistribution<S>> {
    pi.require_normalized()?;
    let outside = event.complement();
    if outside.is_empty() {
        return Err(Error::ContractSureEvent);
    }
    let top = pi.possibility(&outside)?;
    Ok(pi.map(|w, v| if outside.contains(w) && *v == top { S::one() } else { v.clone() }))
}

/// One revision per maximal world of `A`: that world goes to 1, the other
/// maximal worlds of `A` stay at `Π(A)`, worlds outside `A` go to 0.
///
/// The pointwise maximum of the returned distributions is
/// [`condition_min`]`(π, A)`.
pub fn minimal_change_revisions<S: Scalar>(
    pi: &PossibilityDistribution<S>,
    event: &Event,
) -> Result<Vec<PossibilityDistribution<S>>> {
    positive_possibility(pi, event)?;
    let maximal = pi.maximal_worlds(event)?;
    Ok(maximal
        .iter()
        .map(|chosen| {
            pi.map(|w, v| {
                if !event.contains(w) {
                    S::zero()
                } else if w == chosen {
                    S::one()
                } else {
                    v.clone()
                }
            })
        })
        .collect())
}

/// Pointwise maximum of a nonempty family of distributions.
pub fn envelope<S: Scalar>(family: &[PossibilityDistribution<S>]) -> Result<PossibilityDistribution<S>> {
    let (first, rest) = family
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("envelope of an empty family".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, d| acc.zip_with(d, |a, b| a.max_with(b)))
}
