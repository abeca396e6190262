//! Probabilistic counterparts of the uncertain-input rules, kept as a
//! reference for the possibilistic versions.
//!
//! | probability            | possibility                     |
//! |------------------------|---------------------------------|
//! | `Σ`                    | `max`                           |
//! | `×`                    | `⋆` (min or product)            |
//! | `P(·|A)`               | `π(·|A)`                        |
//! | [`jeffrey`]            | `revise_uncertain`              |
//! | [`jeffrey_partition`]  | `revise_partition`              |
//! | [`unreliable_update`]  | `revise_unreliable`             |

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{check_scale, Scalar};
use crate::universe::{check_same, Event, Universe};

/// Nonnegative values summing to exactly 1.
#[derive(Clone)]
pub struct ProbabilityDistribution<S> {
    universe: Arc<Universe>,
    values: Vec<S>,
}

impl<S: Scalar> PartialEq for ProbabilityDistribution<S> {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.values == other.values
    }
}

impl<S: Scalar> fmt::Debug for ProbabilityDistribution<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (w, v) in self.values.iter().enumerate() {
            map.entry(&self.universe.label(w), &format_args!("{v}"));
        }
        map.finish()
    }
}

impl<S: Scalar> ProbabilityDistribution<S> {
    pub fn new(universe: &Arc<Universe>, values: Vec<S>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        let mut total = S::zero();
        for v in &values {
            if *v < S::zero() {
                return Err(Error::OutOfScale(format!("probability {v} is negative")));
            }
            total = total + v.clone();
        }
        if total != S::one() {
            return Err(Error::OutOfScale(format!("probabilities sum to {total}, not 1")));
        }
        Ok(ProbabilityDistribution {
            universe: universe.clone(),
            values,
        })
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

    pub fn probability(&self, event: &Event) -> Result<S> {
        check_same(&self.universe, event.universe())?;
        Ok(event.iter().fold(S::zero(), |acc, w| acc + self.values[w].clone()))
    }

    /// Bayesian conditioning `P(·|A)`.
    pub fn condition(&self, event: &Event) -> Result<Self> {
        let mass = self.positive_mass(event)?;
        Ok(self.scaled_on(event, &S::one(), &mass))
    }

    fn positive_mass(&self, event: &Event) -> Result<S> {
        let mass = self.probability(event)?;
        if mass > S::zero() {
            Ok(mass)
        } else {
            Err(Error::ConditioningUndefined(event.to_string()))
        }
    }

    /// `weight · P(ω) / mass` on `event`, 0 elsewhere.
    fn scaled_on(&self, event: &Event, weight: &S, mass: &S) -> Self {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(w, v)| {
                if event.contains(w) {
                    weight.clone() * v.clone() / mass.clone()
                } else {
                    S::zero()
                }
            })
            .collect();
        ProbabilityDistribution {
            universe: self.universe.clone(),
            values,
        }
    }

    fn plus(&self, other: &Self) -> Self {
        ProbabilityDistribution {
            universe: self.universe.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

/// Jeffrey's rule for `{(A, α), (Ā, 1 - α)}`.
pub fn jeffrey<S: Scalar>(p: &ProbabilityDistribution<S>, event: &Event, alpha: &S) -> Result<ProbabilityDistribution<S>> {
    check_scale(alpha)?;
    let complement = event.complement();
    let inside = p.positive_mass(event)?;
    let outside = p.positive_mass(&complement)?;
    Ok(p.scaled_on(event, alpha, &inside)
        .plus(&p.scaled_on(&complement, &alpha.complement(), &outside)))
}

/// `Σ_i α_i · P(·|A_i)` over a partition with `Σ α_i = 1`.
pub fn jeffrey_partition<S: Scalar>(
    p: &ProbabilityDistribution<S>,
    cells: &[(Event, S)],
) -> Result<ProbabilityDistribution<S>> {
    let mut covered = Event::empty(p.universe());
    let mut total = S::zero();
    let mut result = p.scaled_on(&covered, &S::zero(), &S::one());
    for (event, alpha) in cells {
        check_scale(alpha)?;
        if event.is_empty() || !covered.is_disjoint(event)? {
            return Err(Error::NotPartition(format!("cell {event} is empty or overlaps an earlier cell")));
        }
        covered = covered.union(event)?;
        total = total + alpha.clone();
        if *alpha > S::zero() {
            let mass = p.positive_mass(event)?;
            result = result.plus(&p.scaled_on(event, alpha, &mass));
        }
    }
    if !covered.is_full() {
        return Err(Error::NotPartition(format!("worlds {} are not covered", covered.complement())));
    }
    if total != S::one() {
        return Err(Error::NotPartition(format!("cell masses sum to {total}, not 1")));
    }
    Ok(result)
}

/// `α · P(·|A) + (1 - α) · P`: the expected conditional when `A` may not
/// have been observed at all.
pub fn unreliable_update<S: Scalar>(
    p: &ProbabilityDistribution<S>,
    event: &Event,
    alpha: &S,
) -> Result<ProbabilityDistribution<S>> {
    check_scale(alpha)?;
    let mass = p.positive_mass(event)?;
    let full = Event::full(p.universe());
    Ok(p.scaled_on(event, alpha, &mass)
        .plus(&p.scaled_on(&full, &alpha.complement(), &S::one())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::Rational;

    fn universe() -> Arc<Universe> {
        Universe::from_labels(["w1", "w2", "w3", "w4"]).unwrap()
    }

    fn prob(v: &[(i64, i64)]) -> ProbabilityDistribution<Rational> {
        ProbabilityDistribution::new(&universe(), v.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    fn p0() -> ProbabilityDistribution<Rational> {
        prob(&[(2, 5), (3, 10), (1, 5), (1, 10)])
    }

    fn ev(p: &ProbabilityDistribution<Rational>, labels: &[&str]) -> Event {
        Event::from_labels(p.universe(), labels.iter().copied()).unwrap()
    }

    /// Oracle: Jeffrey's rule written directly from its definition.
    fn jeffrey_oracle(p: &[Rational], inside: &[bool], alpha: &Rational) -> Vec<Rational> {
        let mass_in: Rational = p.iter().zip(inside).filter(|(_, i)| **i).map(|(v, _)| v.clone()).sum();
        let mass_out: Rational = p.iter().zip(inside).filter(|(_, i)| !**i).map(|(v, _)| v.clone()).sum();
        p.iter()
            .zip(inside)
            .map(|(v, i)| {
                if *i {
                    alpha * v / &mass_in
                } else {
                    (ratio(1, 1) - alpha) * v / &mass_out
                }
            })
            .collect()
    }

    #[test]
    fn jeffrey_examples() {
        let p = p0();
        let a = ev(&p, &["w1", "w2"]);
        let r = jeffrey(&p, &a, &ratio(1, 2)).unwrap();
        let oracle = jeffrey_oracle(p.values(), &[true, true, false, false], &ratio(1, 2));
        assert_eq!(r.values(), oracle.as_slice());
        assert_eq!(r, prob(&[(2, 7), (3, 14), (1, 3), (1, 6)]));
        assert_eq!(r.probability(&a).unwrap(), ratio(1, 2));
        assert_eq!(jeffrey(&p, &a, &ratio(1, 1)).unwrap(), p.condition(&a).unwrap());
        assert_eq!(jeffrey(&p, &a, &ratio(7, 10)).unwrap(), p);
        assert!(jeffrey(&p, &Event::full(p.universe()), &ratio(1, 2)).is_err());
    }

    #[test]
    fn partition_examples() {
        let p = p0();
        let a = ev(&p, &["w1", "w2"]);
        let b = ev(&p, &["w3", "w4"]);
        let r = jeffrey_partition(&p, &[(a.clone(), ratio(3, 4)), (b.clone(), ratio(1, 4))]).unwrap();
        assert_eq!(r, prob(&[(3, 7), (9, 28), (1, 6), (1, 12)]));
        assert_eq!(r.probability(&a).unwrap(), ratio(3, 4));
        assert_eq!(
            jeffrey_partition(&p, &[(a.clone(), ratio(1, 2)), (b.clone(), ratio(1, 2))]).unwrap(),
            jeffrey(&p, &a, &ratio(1, 2)).unwrap()
        );
        assert_eq!(
            jeffrey_partition(&p, &[(a.clone(), ratio(7, 10)), (b.clone(), ratio(3, 10))]).unwrap(),
            p
        );
        assert!(jeffrey_partition(&p, &[(a.clone(), ratio(1, 2)), (b.clone(), ratio(1, 4))]).is_err());
        assert!(jeffrey_partition(&p, &[(a, ratio(1, 1))]).is_err());
    }

    #[test]
    fn unreliable_examples() {
        let p = p0();
        let a = ev(&p, &["w1", "w2"]);
        assert_eq!(unreliable_update(&p, &a, &ratio(0, 1)).unwrap(), p);
        assert_eq!(unreliable_update(&p, &a, &ratio(1, 1)).unwrap(), p.condition(&a).unwrap());
        let r = unreliable_update(&p, &a, &ratio(1, 2)).unwrap();
        assert_eq!(r, prob(&[(17, 35), (51, 140), (1, 10), (1, 20)]));
        // not the constraint reading: P'(A) = α + (1 - α) P(A) ≠ α
        assert_eq!(r.probability(&a).unwrap(), ratio(17, 20));
        assert_ne!(r.probability(&a).unwrap(), ratio(1, 2));
    }

    #[test]
    fn construction_checks_the_sum() {
        assert!(ProbabilityDistribution::new(&universe(), vec![ratio(1, 2); 4]).is_err());
        assert!(ProbabilityDistribution::new(&universe(), vec![ratio(1, 1), ratio(1, 2), ratio(-1, 2), ratio(0, 1)]).is_err());
        let f = ProbabilityDistribution::new(&universe(), vec![0.5f64, 0.25, 0.125, 0.125]).unwrap();
        assert_eq!(f.probability(&Event::full(f.universe())).unwrap(), 1.0);
    }
}
