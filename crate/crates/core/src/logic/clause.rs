//! Clauses, weighted clauses, and clausal-form conversion.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::logic::formula::{Formula, Vocabulary};
use crate::scalar::Scalar;

/// Upper bound on the clauses produced by CNF conversion of one formula.
pub const MAX_CNF_CLAUSES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub atom: usize,
    pub positive: bool,
}

impl Literal {
    pub fn negate(self) -> Literal {
        Literal {
            atom: self.atom,
            positive: !self.positive,
        }
    }
}

/// A disjunction of literals; the empty clause is `⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Clause {
    literals: BTreeSet<Literal>,
}

impl Clause {
    pub fn empty() -> Self {
        Clause::default()
    }

    /// `None` when the literals contain a complementary pair.
    pub fn new<I: IntoIterator<Item = Literal>>(literals: I) -> Option<Self> {
        let literals: BTreeSet<Literal> = literals.into_iter().collect();
        if literals.iter().any(|l| literals.contains(&l.negate())) {
            None
        } else {
            Some(Clause { literals })
        }
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> {
        self.literals.iter()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn contains(&self, lit: &Literal) -> bool {
        self.literals.contains(lit)
    }

    pub fn subsumes(&self, other: &Clause) -> bool {
        self.literals.is_subset(&other.literals)
    }

    pub fn complementary_pairs(&self, other: &Clause) -> Vec<Literal> {
        self.literals
            .iter()
            .filter(|l| other.literals.contains(&l.negate()))
            .copied()
            .collect()
    }

    /// Resolvent on `pivot` (in `self`) and its negation (in `other`), or
    /// `None` if it would be tautological.
    pub(crate) fn resolve_on(&self, other: &Clause, pivot: Literal) -> Option<Clause> {
        let neg = pivot.negate();
        Clause::new(
            self.literals
                .iter()
                .filter(|&&l| l != pivot)
                .chain(other.literals.iter().filter(|&&l| l != neg))
                .copied(),
        )
    }

    pub fn satisfied_by(&self, truth: impl Fn(usize) -> bool) -> bool {
        self.literals.iter().any(|l| truth(l.atom) == l.positive)
    }

    /// Renders the clause with atom names from `vocab`.
    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> impl fmt::Display + 'a {
        ClauseDisplay { clause: self, vocab }
    }

    pub fn to_formula(&self, vocab: &Vocabulary) -> Option<Formula> {
        self.literals
            .iter()
            .map(|l| {
                let atom = Formula::atom(vocab.atoms()[l.atom].clone());
                if l.positive {
                    atom
                } else {
                    atom.not()
                }
            })
            .reduce(Formula::or)
    }
}

struct ClauseDisplay<'a> {
    clause: &'a Clause,
    vocab: &'a Vocabulary,
}

impl fmt::Display for ClauseDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clause.is_empty() {
            return write!(f, "⊥");
        }
        let parts: Vec<String> = self
            .clause
            .literals
            .iter()
            .map(|l| {
                let name = self.vocab.atoms().get(l.atom).map_or("?", String::as_str);
                if l.positive {
                    name.to_string()
                } else {
                    format!("!{name}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedClause<S> {
    pub clause: Clause,
    pub weight: S,
}

impl<S: Scalar> WeightedClause<S> {
    pub fn new(clause: Clause, weight: S) -> Result<Self> {
        if !(weight > S::zero() && weight <= S::one()) {
            return Err(Error::OutOfScale(format!("clause weight {weight} must lie in (0, 1]")));
        }
        Ok(WeightedClause { clause, weight })
    }
}

/// Negation normal form over vocabulary indices.
enum Nnf {
    Lit(Literal),
    And(Box<Nnf>, Box<Nnf>),
    Or(Box<Nnf>, Box<Nnf>),
}

fn nnf(formula: &Formula, positive: bool, vocab: &Vocabulary) -> Result<Nnf> {
    Ok(match formula {
        Formula::Atom(a) => {
            let atom = vocab
                .index_of(a)
                .ok_or_else(|| Error::InvalidArgument(format!("atom `{a}` is not in the vocabulary")))?;
            Nnf::Lit(Literal { atom, positive })
        }
        Formula::Not(f) => nnf(f, !positive, vocab)?,
        Formula::And(a, b) if positive => Nnf::And(Box::new(nnf(a, true, vocab)?), Box::new(nnf(b, true, vocab)?)),
        Formula::And(a, b) => Nnf::Or(Box::new(nnf(a, false, vocab)?), Box::new(nnf(b, false, vocab)?)),
        Formula::Or(a, b) if positive => Nnf::Or(Box::new(nnf(a, true, vocab)?), Box::new(nnf(b, true, vocab)?)),
        Formula::Or(a, b) => Nnf::And(Box::new(nnf(a, false, vocab)?), Box::new(nnf(b, false, vocab)?)),
        Formula::Implies(a, b) if positive => {
            Nnf::Or(Box::new(nnf(a, false, vocab)?), Box::new(nnf(b, true, vocab)?))
        }
        Formula::Implies(a, b) => Nnf::And(Box::new(nnf(a, true, vocab)?), Box::new(nnf(b, false, vocab)?)),
    })
}

fn guard(clauses: &BTreeSet<Clause>) -> Result<()> {
    if clauses.len() > MAX_CNF_CLAUSES {
        Err(Error::GuardExceeded(format!(
            "clausal form exceeds {MAX_CNF_CLAUSES} clauses"
        )))
    } else {
        Ok(())
    }
}

fn cnf(node: &Nnf) -> Result<BTreeSet<Clause>> {
    match node {
        Nnf::Lit(l) => Ok(BTreeSet::from([Clause::new([*l]).expect("single literal")])),
        Nnf::And(a, b) => {
            let mut out = cnf(a)?;
            out.extend(cnf(b)?);
            guard(&out)?;
            Ok(out)
        }
        Nnf::Or(a, b) => {
            let left = cnf(a)?;
            let right = cnf(b)?;
            if left.len().saturating_mul(right.len()) > MAX_CNF_CLAUSES * 4 {
                return Err(Error::GuardExceeded(format!(
                    "clausal form exceeds {MAX_CNF_CLAUSES} clauses"
                )));
            }
            let mut out = BTreeSet::new();
            for l in &left {
                for r in &right {
                    if let Some(c) = Clause::new(l.literals().chain(r.literals()).copied()) {
                        out.insert(c);
                    }
                }
            }
            guard(&out)?;
            Ok(out)
        }
    }
}

/// Clausal form of a formula: double negation, De Morgan and distribution,
/// with tautological clauses dropped.
pub fn to_clauses(formula: &Formula, vocab: &Vocabulary) -> Result<Vec<Clause>> {
    Ok(cnf(&nnf(formula, true, vocab)?)?.into_iter().collect())
}

/// `(p α)` as the weighted clauses `{(c_i α)}` of the clausal form of `p`.
pub fn to_weighted_clauses<S: Scalar>(formula: &Formula, weight: &S, vocab: &Vocabulary) -> Result<Vec<WeightedClause<S>>> {
    to_clauses(formula, vocab)?
        .into_iter()
        .map(|c| WeightedClause::new(c, weight.clone()))
        .collect()
}
