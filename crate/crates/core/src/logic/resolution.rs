//! Weighted resolution and refutation by level saturation.
//!
//! A derivation's weight is the minimum of its leaves, so the empty clause is
//! derivable at weight `α` exactly when the classical clauses of weight at
//! least `α` are unsatisfiable. Levels are therefore added in descending
//! order to one incremental classical saturation, and the first level at which
//! the empty clause appears is the inconsistency degree.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::logic::clause::{Clause, WeightedClause};
use crate::scalar::{self, Scalar};

/// Upper bound on retained clauses during one saturation.
pub const MAX_SATURATION_CLAUSES: usize = 200_000;

/// The weighted resolution rule `(c α); (c' β) ⊢ (Res(c, c') min(α, β))`.
///
/// The two clauses must clash on exactly one literal; with two or more
/// clashes every resolvent is tautological and is rejected.
pub fn resolve<S: Scalar>(a: &WeightedClause<S>, b: &WeightedClause<S>) -> Result<WeightedClause<S>> {
    let pairs = a.clause.complementary_pairs(&b.clause);
    match pairs.as_slice() {
        [] => Err(Error::InvalidArgument("clauses have no complementary literals".into())),
        [pivot] => {
            let clause = a
                .clause
                .resolve_on(&b.clause, *pivot)
                .ok_or_else(|| Error::InvalidArgument("resolvent is tautological".into()))?;
            Ok(WeightedClause {
                clause,
                weight: a.weight.min_with(&b.weight),
            })
        }
        _ => Err(Error::InvalidArgument(format!(
            "clauses clash on {} literals; the resolvent is tautological",
            pairs.len()
        ))),
    }
}

/// Incremental given-clause saturation of an unweighted clause set, with
/// forward and backward subsumption.
#[derive(Default)]
struct Saturation {
    kept: BTreeSet<Clause>,
    processed: Vec<Clause>,
    queue: VecDeque<Clause>,
    refuted: bool,
}

impl Saturation {
    fn add(&mut self, clause: Clause) -> Result<()> {
        if clause.is_empty() {
            self.refuted = true;
            return Ok(());
        }
        if self.kept.contains(&clause) || self.kept.iter().any(|k| k.subsumes(&clause)) {
            return Ok(());
        }
        let subsumed: Vec<Clause> = self.kept.iter().filter(|k| clause.subsumes(k)).cloned().collect();
        if !subsumed.is_empty() {
            for s in &subsumed {
                self.kept.remove(s);
            }
            self.processed.retain(|p| !clause.subsumes(p));
        }
        self.kept.insert(clause.clone());
        self.queue.push_back(clause);
        if self.kept.len() > MAX_SATURATION_CLAUSES {
            return Err(Error::GuardExceeded(format!(
                "resolution saturation exceeded {MAX_SATURATION_CLAUSES} clauses"
            )));
        }
        Ok(())
    }

    /// Saturates; returns whether the empty clause was derived.
    fn run(&mut self) -> Result<bool> {
        while !self.refuted {
            let Some(given) = self.queue.pop_front() else {
                break;
            };
            if !self.kept.contains(&given) {
                continue;
            }
            let mut resolvents = Vec::new();
            for other in self.processed.iter().chain(std::iter::once(&given)) {
                let pairs = given.complementary_pairs(other);
                if let [pivot] = pairs.as_slice() {
                    if let Some(r) = given.resolve_on(other, *pivot) {
                        resolvents.push(r);
                    }
                }
            }
            self.processed.push(given);
            for r in resolvents {
                self.add(r)?;
                if self.refuted {
                    break;
                }
            }
        }
        Ok(self.refuted)
    }
}

/// `max{α | clauses ⊢ (⊥ α)}`, or 0 when the classical clause set is
/// satisfiable.
pub fn refutation_degree<S: Scalar>(clauses: &[WeightedClause<S>]) -> Result<S> {
    let mut levels: Vec<S> = clauses.iter().map(|c| c.weight.clone()).collect();
    levels.sort_by(|a, b| scalar::cmp(b, a));
    levels.dedup();
    let mut sat = Saturation::default();
    for level in levels {
        for c in clauses.iter().filter(|c| c.weight == level) {
            sat.add(c.clause.clone())?;
        }
        if sat.run()? {
            return Ok(level);
        }
    }
    Ok(S::zero())
}
