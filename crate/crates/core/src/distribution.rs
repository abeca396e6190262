//! Possibility distributions and the measures they induce.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{self, check_scale, Scalar};
use crate::universe::{check_same, Event, Universe};

/// A map from the worlds of a finite universe to the unit scale.
///
/// Subnormalized distributions (maximum below 1) are legal values; they arise
/// from inconsistent bases and from natural revision.
#[derive(Clone)]
pub struct PossibilityDistribution<S> {
    universe: Arc<Universe>,
    values: Vec<S>,
}

impl<S: Scalar> PartialEq for PossibilityDistribution<S> {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.values == other.values
    }
}

impl<S: Scalar> fmt::Debug for PossibilityDistribution<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (w, v) in self.values.iter().enumerate() {
            map.entry(&self.universe.label(w), &format_args!("{v}"));
        }
        map.finish()
    }
}

/// How [`hamming_distance`] measures the gap between two levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HammingScale {
    /// Raw differences of the scale values.
    #[default]
    Raw,
    /// Distinct levels occurring in either distribution are first replaced by
    /// their rank `0, 1, 2, ...`, for purely ordinal comparisons.
    LevelIndex,
}

impl<S: Scalar> PossibilityDistribution<S> {
    pub fn new(universe: &Arc<Universe>, values: Vec<S>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::InvalidArgument(format!(
                "{} values for a universe of {} worlds",
                values.len(),
                universe.len()
            )));
        }
        for v in &values {
            check_scale(v)?;
        }
        Ok(PossibilityDistribution {
            universe: universe.clone(),
            values,
        })
    }

    /// The vacuous distribution: every world fully possible.
    pub fn uniform(universe: &Arc<Universe>) -> Self {
        PossibilityDistribution {
            universe: universe.clone(),
            values: vec![S::one(); universe.len()],
        }
    }

    pub(crate) fn from_values_unchecked(universe: &Arc<Universe>, values: Vec<S>) -> Self {
        debug_assert_eq!(values.len(), universe.len());
        PossibilityDistribution {
            universe: universe.clone(),
            values,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn value(&self, world: usize) -> &S {
        &self.values[world]
    }

    pub fn height(&self) -> S {
        scalar::max_or_zero(&self.values)
    }

    pub fn is_normalized(&self) -> bool {
        self.height() == S::one()
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::Subnormalized(self.height().to_string()))
        }
    }

    /// `Π(A)`: the maximum over the event's worlds, `0` for the empty event.
    pub fn possibility(&self, event: &Event) -> Result<S> {
        check_same(&self.universe, event.universe())?;
        Ok(scalar::max_or_zero(event.iter().map(|w| &self.values[w])))
    }

    /// `N(A) = 1 - Π(Ā)`.
    pub fn necessity(&self, event: &Event) -> Result<S> {
        Ok(self.possibility(&event.complement())?.complement())
    }

    /// Whether the event is in the belief set, i.e. has positive necessity.
    /// Only defined for normalized distributions.
    pub fn believes(&self, event: &Event) -> Result<bool> {
        self.require_normalized()?;
        Ok(self.necessity(event)? > S::zero())
    }

    /// Worlds of the event that reach `Π(A)`.
    pub fn maximal_worlds(&self, event: &Event) -> Result<Event> {
        let top = self.possibility(event)?;
        Ok(Event::from_predicate(&self.universe, |w| {
            event.contains(w) && self.values[w] == top
        }))
    }

    /// Pointwise `f` of two distributions on the same universe.
    pub fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        check_same(&self.universe, other.universe())?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(Self::from_values_unchecked(&self.universe, values))
    }

    pub fn map(&self, f: impl Fn(usize, &S) -> S) -> Self {
        let values = self.values.iter().enumerate().map(|(w, v)| f(w, v)).collect();
        Self::from_values_unchecked(&self.universe, values)
    }

    /// Pointwise `self <= other`: `self` is at least as specific.
    pub fn is_below(&self, other: &Self) -> Result<bool> {
        check_same(&self.universe, other.universe())?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    /// Distinct values occurring in the distribution, ascending.
    pub fn levels(&self) -> Vec<S> {
        sorted_levels(self.values.iter())
    }
}

fn sorted_levels<'a, S: Scalar>(values: impl Iterator<Item = &'a S>) -> Vec<S> {
    let mut levels: Vec<S> = values.cloned().collect();
    levels.sort_by(scalar::cmp);
    levels.dedup();
    levels
}

/// `H(π, π') = Σ_ω |π(ω) - π'(ω)|`.
pub fn hamming_distance<S: Scalar>(
    a: &PossibilityDistribution<S>,
    b: &PossibilityDistribution<S>,
    scale: HammingScale,
) -> Result<S> {
    check_same(&a.universe, &b.universe)?;
    match scale {
        HammingScale::Raw => Ok(a
            .values
            .iter()
            .zip(&b.values)
            .fold(S::zero(), |acc, (x, y)| acc + x.abs_diff(y))),
        HammingScale::LevelIndex => {
            let levels = sorted_levels(a.values.iter().chain(&b.values));
            let rank = |v: &S| levels.iter().position(|l| l == v).unwrap_or(0) as u64;
            Ok(a.values.iter().zip(&b.values).fold(S::zero(), |acc, (x, y)| {
                acc + S::from_u64(rank(x).abs_diff(rank(y)))
            }))
        }
    }
}
