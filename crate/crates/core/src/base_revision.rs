//! Syntactic change operators on weighted bases.
//!
//! Each operator works on formulas only; the semantic route
//! ([`adjust_semantic`], or conditioning the induced distribution directly)
//! is kept alongside so callers and tests can compare the two.

use std::cmp::Ordering;

use crate::conditioning::RevisionMode;
use crate::distribution::PossibilityDistribution;
use crate::error::{Error, Result};
use crate::logic::{
    first_incoherence, inconsistency_degree, induced_distribution, models, BaseEntry,
    BeliefBase, Formula,
};
use crate::scalar::{self, check_scale, Scalar};
use crate::uncertain::revise_uncertain;

/// Largest base for which [`preferred_subbase_revise`] enumerates subsets.
pub const MAX_PREFERRED_ENTRIES: usize = 16;

fn require_satisfiable<S: Scalar>(base: &BeliefBase<S>, p: &Formula) -> Result<()> {
    let alone: BeliefBase<S> = BeliefBase::empty(base.vocabulary().clone()).with_entry(p.clone(), S::one())?;
    if inconsistency_degree(&alone)? > S::zero() {
        Err(Error::ContradictoryInput)
    } else {
        Ok(())
    }
}

/// `K ∪ {(p 1)}`, refused when the result would be inconsistent.
pub fn expand<S: Scalar>(base: &BeliefBase<S>, p: &Formula) -> Result<BeliefBase<S>> {
    let next = base.with_entry(p.clone(), S::one())?;
    let inc = inconsistency_degree(&next)?;
    if inc > S::zero() {
        return Err(Error::ExpansionRefused(inc.to_string()));
    }
    Ok(next)
}

/// `{(p 1)} ∪ {(p_i α_i) | α_i > inc(K ∪ {(p 1)})}`.
pub fn brutal_revise<S: Scalar>(base: &BeliefBase<S>, p: &Formula) -> Result<BeliefBase<S>> {
    require_satisfiable(base, p)?;
    let level = inconsistency_degree(&base.with_entry(p.clone(), S::one())?)?;
    let mut entries = vec![BaseEntry::new(p.clone(), S::one())];
    entries.extend(base.entries().iter().filter(|e| e.weight > level).cloned());
    BeliefBase::with_vocabulary(base.vocabulary().clone(), entries)
}

/// A sub-base kept by preferred-subbase revision.
#[derive(Debug, Clone, PartialEq)]
pub struct PreferredCandidate<S> {
    /// Indices of the retained entries of the original base, ascending.
    pub retained: Vec<usize>,
    /// `{(p 1)}` followed by the retained entries.
    pub base: BeliefBase<S>,
}

fn subbase<S: Scalar>(base: &BeliefBase<S>, p: &Formula, keep: &[bool]) -> Result<BeliefBase<S>> {
    let mut entries = vec![BaseEntry::new(p.clone(), S::one())];
    entries.extend(
        base.entries()
            .iter()
            .zip(keep)
            .filter(|(_, k)| **k)
            .map(|(e, _)| e.clone()),
    );
    BeliefBase::with_vocabulary(base.vocabulary().clone(), entries)
}

/// Every `ℋ ⊆ K` such that `ℋ ∪ {(p 1)}` is consistent and each excluded
/// `(q α)` gives `inc(ℋ ∪ {(q α), (p 1)}) >= α`. Ordered by subset mask,
/// earliest entries most significant.
pub fn preferred_subbase_revise<S: Scalar>(base: &BeliefBase<S>, p: &Formula) -> Result<Vec<PreferredCandidate<S>>> {
    require_satisfiable(base, p)?;
    let n = base.len();
    if n > MAX_PREFERRED_ENTRIES {
        return Err(Error::GuardExceeded(format!(
            "preferred-subbase search is limited to {MAX_PREFERRED_ENTRIES} entries, base has {n}"
        )));
    }
    let mut out = Vec::new();
    for mask in (0u32..1 << n).rev() {
        let keep: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
        let candidate = subbase(base, p, &keep)?;
        if inconsistency_degree(&candidate)? > S::zero() {
            continue;
        }
        let mut maximal = true;
        for (i, e) in base.entries().iter().enumerate() {
            if keep[i] {
                continue;
            }
            let readded = candidate.with_entry(e.formula.clone(), e.weight.clone())?;
            if inconsistency_degree(&readded)? < e.weight {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.push(PreferredCandidate {
                retained: (0..n).filter(|&i| keep[i]).collect(),
                base: candidate,
            });
        }
    }
    Ok(out)
}

fn excluded_weights<S: Scalar>(candidate: &PreferredCandidate<S>, base: &BeliefBase<S>) -> Vec<S> {
    let mut weights: Vec<S> = base
        .entries()
        .iter()
        .enumerate()
        .filter(|(i, _)| !candidate.retained.contains(i))
        .map(|(_, e)| e.weight.clone())
        .collect();
    weights.sort_by(|a, b| scalar::cmp(b, a));
    weights
}

/// Descending-lexicographic comparison of excluded weight multisets; a
/// proper prefix is smaller.
fn compare_excluded<S: Scalar>(a: &[S], b: &[S]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match scalar::cmp(x, y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// The candidate excluding the lexicographically smallest weights; remaining
/// ties keep the candidate retaining the earliest entries of `base`.
pub fn lex_refine<S: Scalar>(
    candidates: &[PreferredCandidate<S>],
    base: &BeliefBase<S>,
) -> Result<PreferredCandidate<S>> {
    let keeps = |c: &PreferredCandidate<S>| -> Vec<bool> { (0..base.len()).map(|i| c.retained.contains(&i)).collect() };
    candidates
        .iter()
        .min_by(|a, b| {
            compare_excluded(&excluded_weights(a, base), &excluded_weights(b, base))
                .then_with(|| keeps(b).cmp(&keeps(a)))
        })
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("no candidate sub-bases".into()))
}

/// The base-level adjustment recipe: weights `min(β⁺, max(α, β⁻))` from the
/// brutal revisions by `p` and by `¬p`, matched by canonical formula.
///
/// The base must be EE-coherent and both `[p]` and `[¬p]` must be possible
/// under its induced distribution.
pub fn adjust_base<S: Scalar>(base: &BeliefBase<S>, p: &Formula, alpha: &S) -> Result<BeliefBase<S>> {
    check_scale(alpha)?;
    if *alpha == S::zero() {
        return Err(Error::InvalidArgument("adjustment needs α > 0".into()));
    }
    if let Some((index, derived)) = first_incoherence(base)? {
        return Err(Error::NotEeCoherent {
            index,
            weight: base.entries()[index].weight.to_string(),
            derived: derived.to_string(),
        });
    }
    let extended = base.extended_for(p);
    let pi = induced_distribution(&extended)?;
    let sat = models(pi.universe(), p)?;
    for event in [&sat, &sat.complement()] {
        if pi.possibility(event)? == S::zero() {
            return Err(Error::ConditioningUndefined(event.to_string()));
        }
    }

    let plus = brutal_revise(base, p)?;
    let minus = brutal_revise(base, &p.negated())?;
    let mut order: Vec<(Formula, Formula)> = Vec::new();
    for e in plus.entries().iter().chain(minus.entries()) {
        let key = e.formula.canonical();
        if !order.iter().any(|(k, _)| *k == key) {
            order.push((key, e.formula.clone()));
        }
    }
    let weight_in = |b: &BeliefBase<S>, key: &Formula| {
        scalar::max_or_zero(
            b.entries()
                .iter()
                .filter(|e| e.formula.canonical() == *key)
                .map(|e| &e.weight),
        )
    };
    let mut entries = Vec::new();
    for (key, formula) in order {
        let beta_plus = weight_in(&plus, &key);
        let beta_minus = weight_in(&minus, &key);
        let w = beta_plus.min_with(&alpha.max_with(&beta_minus));
        if w > S::zero() {
            entries.push(BaseEntry::new(formula, w));
        }
    }
    BeliefBase::with_vocabulary(extended.vocabulary().clone(), entries)
}

/// The semantic adjustment: the constraint rule with min-conditioning
/// applied to the induced distribution.
pub fn adjust_semantic<S: Scalar>(base: &BeliefBase<S>, p: &Formula, alpha: &S) -> Result<PossibilityDistribution<S>> {
    let pi = induced_distribution(&base.extended_for(p))?;
    let sat = models(pi.universe(), p)?;
    revise_uncertain(&pi, &sat, alpha, RevisionMode::Min)
}
