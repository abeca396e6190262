//! Weighted belief bases and their text format.

use std::fmt;

use crate::error::{Error, Result};
use crate::logic::formula::{parse_formula_at, Formula, Vocabulary};
use crate::scalar::{parse_rational, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct BaseEntry<S> {
    pub formula: Formula,
    pub weight: S,
}

impl<S: Scalar> BaseEntry<S> {
    pub fn new(formula: Formula, weight: S) -> Self {
        BaseEntry { formula, weight }
    }
}

/// An ordered list of `(formula, weight)` pairs, each read as the lower
/// bound `N(formula) >= weight`. Duplicate formulas are kept as given.
#[derive(Debug, Clone, PartialEq)]
pub struct BeliefBase<S> {
    vocabulary: Vocabulary,
    entries: Vec<BaseEntry<S>>,
}

fn check_weight<S: Scalar>(weight: &S) -> Result<()> {
    if *weight > S::zero() && *weight <= S::one() {
        Ok(())
    } else {
        Err(Error::OutOfScale(format!("base weight {weight} must lie in (0, 1]")))
    }
}

impl<S: Scalar> BeliefBase<S> {
    /// A base whose vocabulary is the atoms occurring in its entries.
    pub fn new(entries: Vec<BaseEntry<S>>) -> Result<Self> {
        Self::with_vocabulary(Vocabulary::default(), entries)
    }

    /// A base over a declared vocabulary; atoms of the entries missing from
    /// it are appended.
    pub fn with_vocabulary(mut vocabulary: Vocabulary, entries: Vec<BaseEntry<S>>) -> Result<Self> {
        for e in &entries {
            check_weight(&e.weight)?;
            vocabulary.extend_with(&e.formula);
        }
        Ok(BeliefBase { vocabulary, entries })
    }

    pub fn empty(vocabulary: Vocabulary) -> Self {
        BeliefBase {
            vocabulary,
            entries: Vec::new(),
        }
    }

    /// Convenience constructor from `(formula text, weight)` pairs.
    pub fn from_pairs<'a, I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, S)>,
    {
        let entries = pairs
            .into_iter()
            .map(|(text, weight)| Ok(BaseEntry::new(text.parse()?, weight)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    pub fn entries(&self) -> &[BaseEntry<S>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// A copy with `(formula, weight)` appended.
    pub fn with_entry(&self, formula: Formula, weight: S) -> Result<Self> {
        check_weight(&weight)?;
        let mut next = self.clone();
        next.vocabulary.extend_with(&formula);
        next.entries.push(BaseEntry::new(formula, weight));
        Ok(next)
    }

    /// A copy holding the entries selected by `keep`, same vocabulary.
    pub fn filtered(&self, keep: impl Fn(usize, &BaseEntry<S>) -> bool) -> Self {
        BeliefBase {
            vocabulary: self.vocabulary.clone(),
            entries: self
                .entries
                .iter()
                .enumerate()
                .filter(|(i, e)| keep(*i, e))
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }

    /// A copy whose vocabulary also covers the atoms of `formula`.
    pub fn extended_for(&self, formula: &Formula) -> Self {
        let mut next = self.clone();
        next.vocabulary.extend_with(formula);
        next
    }
}

impl<S: Scalar> fmt::Display for BeliefBase<S> {
    /// The base file format; re-parses to an equal base.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "atoms: {}", self.vocabulary.atoms().join(" "))?;
        for e in &self.entries {
            writeln!(f, "{} : {}", e.formula, e.weight)?;
        }
        Ok(())
    }
}

/// Strips a `#` comment; returns the remaining text.
pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `atoms: p q r` headers; `None` when the line is not a header.
pub(crate) fn parse_atoms_header(line: &str, line_no: usize) -> Option<Result<Vec<String>>> {
    let rest = line.trim_start().strip_prefix("atoms")?;
    let rest = rest.trim_start().strip_prefix(':')?;
    let atoms: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if let Some(bad) = atoms.iter().find(|a| !crate::universe::is_atom_name(a)) {
        return Some(Err(Error::parse(line_no, 1, format!("invalid atom name `{bad}`"))));
    }
    Some(Ok(atoms))
}

/// Parses the base format: `formula : weight` lines, optional `atoms:`
/// header, `#` comments. Weights are `a/b` or decimals in `(0, 1]`.
pub fn parse_base<S: Scalar>(text: &str) -> Result<BeliefBase<S>> {
    let mut vocabulary = Vocabulary::default();
    let mut entries = Vec::new();
    let mut seen_entry = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(atoms) = parse_atoms_header(line, line_no) {
            if seen_entry || !vocabulary.is_empty() {
                return Err(Error::parse(line_no, 1, "`atoms:` header must precede all entries"));
            }
            vocabulary = Vocabulary::new(atoms?).map_err(|e| Error::parse(line_no, 1, e.to_string()))?;
            continue;
        }
        seen_entry = true;
        let colon = line
            .rfind(':')
            .ok_or_else(|| Error::parse(line_no, line.chars().count() + 1, "expected `formula : weight`"))?;
        let formula = parse_formula_at(&line[..colon], line_no, 1)?;
        let weight_col = line[..colon].chars().count() + 2;
        let weight = parse_rational(&line[colon + 1..]).map_err(|m| Error::parse(line_no, weight_col, m))?;
        let weight = S::from_ratio(&weight);
        check_weight(&weight).map_err(|e| Error::parse(line_no, weight_col, e.to_string()))?;
        entries.push(BaseEntry::new(formula, weight));
    }
    BeliefBase::with_vocabulary(vocabulary, entries)
}
