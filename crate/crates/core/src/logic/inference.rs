//! Syntactic inference on belief bases and its semantic counterpart.
//!
//! [`prove`] and [`inconsistency_degree`] work purely by refutation over
//! weighted clauses; [`induced_distribution`] and [`semantic_entails`] work
//! purely on worlds. The two sides are kept independent so each checks the
//! other.

use std::sync::Arc;

use crate::distribution::PossibilityDistribution;
use crate::error::{Error, Result};
use crate::logic::base::BeliefBase;
use crate::logic::clause::{to_weighted_clauses, WeightedClause};
use crate::logic::formula::{Formula, Vocabulary};
use crate::logic::resolution::refutation_degree;
use crate::scalar::Scalar;
use crate::universe::{Event, Universe};

fn base_clauses<S: Scalar>(base: &BeliefBase<S>, vocab: &Vocabulary) -> Result<Vec<WeightedClause<S>>> {
    let mut clauses = Vec::new();
    for e in base.entries() {
        clauses.extend(to_weighted_clauses(&e.formula, &e.weight, vocab)?);
    }
    Ok(clauses)
}

/// `inc(K) = max{α | K ⊢ (⊥ α)}` by resolution; 0 for consistent bases.
pub fn inconsistency_degree<S: Scalar>(base: &BeliefBase<S>) -> Result<S> {
    refutation_degree(&base_clauses(base, base.vocabulary())?)
}

/// Largest `α` with `K ⊢ (p α)`, by refuting `K ∪ {(¬p 1)}`.
pub fn prove<S: Scalar>(base: &BeliefBase<S>, query: &Formula) -> Result<S> {
    let mut vocab = base.vocabulary().clone();
    vocab.extend_with(query);
    let mut clauses = base_clauses(base, &vocab)?;
    clauses.extend(to_weighted_clauses(&query.negated(), &S::one(), &vocab)?);
    refutation_degree(&clauses)
}

/// Non-trivial entailment: `p` is derivable strictly above `inc(K)`.
pub fn entails_pref<S: Scalar>(base: &BeliefBase<S>, query: &Formula) -> Result<bool> {
    let inc = inconsistency_degree(base)?;
    if inc == S::one() {
        return Err(Error::Inconsistent(inc.to_string()));
    }
    Ok(prove(base, query)? > inc)
}

/// Universe of all truth assignments over a vocabulary.
pub fn universe_of(vocab: &Vocabulary) -> Result<Arc<Universe>> {
    Universe::from_atoms(vocab.atoms().iter().cloned())
}

/// The models of `formula` as an event of an atom universe.
pub fn models(universe: &Arc<Universe>, formula: &Formula) -> Result<Event> {
    let atoms = universe
        .atoms()
        .ok_or_else(|| Error::Universe("formulas need a universe generated by atoms".into()))?;
    let indices: Vec<(String, usize)> = formula
        .atoms()
        .into_iter()
        .map(|a| {
            let i = atoms
                .iter()
                .position(|x| *x == a)
                .ok_or_else(|| Error::Universe(format!("atom `{a}` is not declared")))?;
            Ok((a, i))
        })
        .collect::<Result<_>>()?;
    Ok(Event::from_predicate(universe, |w| {
        formula.eval(&|name| {
            let j = indices.iter().find(|(a, _)| a == name).map(|(_, j)| *j).unwrap_or(0);
            universe.truth(w, j).unwrap_or(false)
        })
    }))
}

/// `π(ω) = min_i max(μ_[p_i](ω), 1 - α_i)` over the given universe, which
/// must declare every atom of the base.
pub fn induced_distribution_on<S: Scalar>(
    base: &BeliefBase<S>,
    universe: &Arc<Universe>,
) -> Result<PossibilityDistribution<S>> {
    let mut values = vec![S::one(); universe.len()];
    for e in base.entries() {
        let sat = models(universe, &e.formula)?;
        let floor = e.weight.complement();
        for (w, v) in values.iter_mut().enumerate() {
            if !sat.contains(w) {
                *v = v.min_with(&floor);
            }
        }
    }
    Ok(PossibilityDistribution::from_values_unchecked(universe, values))
}

/// The least specific distribution satisfying every entry's lower bound,
/// over the base's own vocabulary.
pub fn induced_distribution<S: Scalar>(base: &BeliefBase<S>) -> Result<PossibilityDistribution<S>> {
    induced_distribution_on(base, &universe_of(base.vocabulary())?)
}

/// Semantic necessity `N(p) = 1 - Π([¬p])` under the induced distribution.
pub fn semantic_necessity<S: Scalar>(base: &BeliefBase<S>, query: &Formula) -> Result<S> {
    let extended = base.extended_for(query);
    let pi = induced_distribution(&extended)?;
    pi.necessity(&models(pi.universe(), query)?)
}

/// `K ⊨ (p α)` iff `π <= max(μ_[p], 1 - α)` pointwise.
pub fn semantic_entails<S: Scalar>(base: &BeliefBase<S>, query: &Formula, alpha: &S) -> Result<bool> {
    let extended = base.extended_for(query);
    let pi = induced_distribution(&extended)?;
    let sat = models(pi.universe(), query)?;
    let floor = alpha.complement();
    Ok(pi
        .values()
        .iter()
        .enumerate()
        .all(|(w, v)| sat.contains(w) || *v <= floor))
}

/// `π̃`: the induced distribution with its plateau at `1 - inc(K)` raised to 1.
pub fn consistent_part_distribution<S: Scalar>(base: &BeliefBase<S>) -> Result<PossibilityDistribution<S>> {
    let inc = inconsistency_degree(base)?;
    if inc == S::one() {
        return Err(Error::Inconsistent(inc.to_string()));
    }
    let plateau = inc.complement();
    let pi = induced_distribution(base)?;
    Ok(pi.map(|_, v| if *v < plateau { v.clone() } else { S::one() }))
}

/// `π̃` computed from the entries strictly above `inc(K)` only.
pub fn consistent_part_closed_form<S: Scalar>(base: &BeliefBase<S>) -> Result<PossibilityDistribution<S>> {
    let inc = inconsistency_degree(base)?;
    if inc == S::one() {
        return Err(Error::Inconsistent(inc.to_string()));
    }
    induced_distribution(&base.filtered(|_, e| e.weight > inc))
}

/// Whether no entry is derivable strictly above its own weight.
pub fn check_ee_coherence<S: Scalar>(base: &BeliefBase<S>) -> Result<bool> {
    Ok(first_incoherence(base)?.is_none())
}

/// The first entry derivable strictly above its weight, with that level.
pub fn first_incoherence<S: Scalar>(base: &BeliefBase<S>) -> Result<Option<(usize, S)>> {
    require_consistent(base)?;
    for (i, e) in base.entries().iter().enumerate() {
        let derived = prove(base, &e.formula)?;
        if derived != e.weight {
            return Ok(Some((i, derived)));
        }
    }
    Ok(None)
}

/// Replaces every weight by the level at which the base derives the formula.
pub fn restore_ee_coherence<S: Scalar>(base: &BeliefBase<S>) -> Result<BeliefBase<S>> {
    require_consistent(base)?;
    let mut entries = base.entries().to_vec();
    for e in &mut entries {
        e.weight = prove(base, &e.formula)?;
    }
    BeliefBase::with_vocabulary(base.vocabulary().clone(), entries)
}

pub(crate) fn require_consistent<S: Scalar>(base: &BeliefBase<S>) -> Result<()> {
    let inc = inconsistency_degree(base)?;
    if inc > S::zero() {
        Err(Error::Inconsistent(inc.to_string()))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::formula::parse_formula;
    use crate::scalar::ratio;
    use crate::Rational;

    fn base(pairs: &[(&str, (i64, i64))]) -> BeliefBase<Rational> {
        BeliefBase::from_pairs(pairs.iter().map(|&(f, (n, d))| (f, ratio(n, d)))).unwrap()
    }

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    fn three() -> BeliefBase<Rational> {
        base(&[("p", (7, 10)), ("!p | q", (3, 5)), ("!q", (2, 5))])
    }

    /// Oracle: `1 - max π` by direct enumeration of truth assignments.
    fn brute_inconsistency(b: &BeliefBase<Rational>) -> Rational {
        let atoms = b.vocabulary().atoms().to_vec();
        let mut best = ratio(0, 1);
        for w in 0..1usize << atoms.len() {
            let truth = |name: &str| {
                let j = atoms.iter().position(|a| a == name).unwrap();
                w >> j & 1 == 1
            };
            let mut v = ratio(1, 1);
            for e in b.entries() {
                if !e.formula.eval(&truth) {
                    v = v.min(ratio(1, 1) - e.weight.clone());
                }
            }
            best = best.max(v);
        }
        ratio(1, 1) - best
    }

    #[test]
    fn inconsistency_examples() {
        let b = three();
        assert_eq!(brute_inconsistency(&b), ratio(2, 5));
        assert_eq!(inconsistency_degree(&b).unwrap(), ratio(2, 5));
        assert_eq!(inconsistency_degree(&base(&[("p", (1, 2)), ("q", (1, 1))])).unwrap(), ratio(0, 1));
        assert_eq!(inconsistency_degree(&base(&[("p", (1, 1)), ("!p", (1, 1))])).unwrap(), ratio(1, 1));
    }

    #[test]
    fn prove_examples() {
        let b = three();
        assert_eq!(semantic_necessity(&b, &f("q")).unwrap(), ratio(3, 5));
        assert_eq!(prove(&b, &f("q")).unwrap(), ratio(3, 5));
        assert_eq!(prove(&b, &f("p | !p")).unwrap(), ratio(1, 1));
        assert_eq!(prove(&base(&[("p", (1, 2))]), &f("z")).unwrap(), ratio(0, 1));
    }

    #[test]
    fn entails_pref_examples() {
        let b = three();
        assert!(entails_pref(&b, &f("q")).unwrap());
        assert_eq!(prove(&b, &f("!q")).unwrap(), ratio(2, 5));
        assert!(!entails_pref(&b, &f("!q")).unwrap());
        let consistent = base(&[("p", (1, 2)), ("p -> q", (1, 4))]);
        for q in ["q", "p", "!q", "r"] {
            assert_eq!(
                entails_pref(&consistent, &f(q)).unwrap(),
                prove(&consistent, &f(q)).unwrap() > ratio(0, 1)
            );
        }
        assert!(matches!(
            entails_pref(&base(&[("p", (1, 1)), ("!p", (1, 1))]), &f("p")),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn induced_distribution_examples() {
        let b = base(&[("!p", (3, 4)), ("q", (1, 4))]);
        let pi = induced_distribution(&b).unwrap();
        let u = pi.universe();
        let at = |label: &str| pi.value(u.world(label).unwrap()).clone();
        assert_eq!(at("-p q"), ratio(1, 1));
        assert_eq!(at("p q"), ratio(1, 4));
        assert_eq!(at("p -q"), ratio(1, 4));
        assert_eq!(at("-p -q"), ratio(3, 4));

        let empty: BeliefBase<Rational> = BeliefBase::empty(Vocabulary::new(["p", "q"]).unwrap());
        assert!(induced_distribution(&empty).unwrap().values().iter().all(|v| *v == ratio(1, 1)));
        let contra = base(&[("p", (1, 1)), ("!p", (1, 1))]);
        assert!(induced_distribution(&contra).unwrap().values().iter().all(|v| *v == ratio(0, 1)));
    }

    #[test]
    fn semantic_entailment_examples() {
        assert!(semantic_entails(&three(), &f("q"), &ratio(3, 5)).unwrap());
        assert!(!semantic_entails(&three(), &f("q"), &ratio(7, 10)).unwrap());
        assert!(semantic_entails(&three(), &f("p"), &ratio(0, 1)).unwrap());
        assert!(!semantic_entails(&base(&[("!p", (3, 4))]), &f("p"), &ratio(1, 10)).unwrap());
    }

    #[test]
    fn consistent_part_examples() {
        let consistent = base(&[("p", (1, 2)), ("q", (1, 4))]);
        assert_eq!(
            consistent_part_distribution(&consistent).unwrap(),
            induced_distribution(&consistent).unwrap()
        );
        let b = base(&[("!p", (3, 4)), ("q", (1, 4)), ("p", (1, 1))]);
        let tilde = consistent_part_distribution(&b).unwrap();
        let u = tilde.universe();
        let at = |label: &str| tilde.value(u.world(label).unwrap()).clone();
        assert_eq!(at("p q"), ratio(1, 1));
        assert_eq!(at("p -q"), ratio(1, 1));
        assert_eq!(at("-p q"), ratio(0, 1));
        assert_eq!(at("-p -q"), ratio(0, 1));
        assert_eq!(consistent_part_closed_form(&b).unwrap(), tilde);
        assert!(tilde.is_normalized());
    }

    #[test]
    fn ee_coherence_examples() {
        let b = base(&[("p", (1, 2)), ("p | q", (1, 4))]);
        assert!(!check_ee_coherence(&b).unwrap());
        let restored = restore_ee_coherence(&b).unwrap();
        assert_eq!(restored, base(&[("p", (1, 2)), ("p | q", (1, 2))]));
        assert!(check_ee_coherence(&restored).unwrap());
        assert_eq!(restore_ee_coherence(&restored).unwrap(), restored);
        assert_eq!(induced_distribution(&restored).unwrap(), induced_distribution(&b).unwrap());
        assert!(check_ee_coherence(&base(&[("p & q", (1, 3))])).unwrap());
        assert!(check_ee_coherence(&three()).is_err());
    }
}
