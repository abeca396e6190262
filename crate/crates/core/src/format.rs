//! Line-oriented text formats for distributions, rankings and probabilities.
//!
//! ```text
//! # comment
//! atoms: p q        # optional; worlds are then truth assignments
//! p q   : 1
//! p -q  : 1/4
//! 00    : 0.5       # bit-strings work too
//! -p q  : 0
//! ```
//!
//! Without an `atoms:` header the labels listed define the universe in file
//! order. With one, every assignment must be listed exactly once.

use std::sync::Arc;

use crate::distribution::PossibilityDistribution;
use crate::error::{Error, Result};
use crate::logic::base::{parse_atoms_header, strip_comment};
use crate::probability::ProbabilityDistribution;
use crate::ranking::{KappaFunction, Rank};
use crate::scalar::{format_decimal, parse_rational, Scalar};
use crate::universe::Universe;

/// How scale values are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValueStyle {
    /// Exact `a/b` form; re-parses to the same value.
    #[default]
    Rational,
    /// Six fractional digits, for reading only.
    Decimal,
}

impl ValueStyle {
    pub fn render<S: Scalar>(self, value: &S) -> String {
        match self {
            ValueStyle::Rational => value.to_string(),
            ValueStyle::Decimal => format_decimal(value),
        }
    }
}

struct Cell {
    line: usize,
    column: usize,
    text: String,
}

/// Reads `label : value` lines into a universe plus the raw value of each
/// world, in universe order.
fn parse_table(text: &str) -> Result<(Arc<Universe>, Vec<Cell>)> {
    let mut atoms: Option<Vec<String>> = None;
    let mut rows: Vec<(usize, String, Cell)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(header) = parse_atoms_header(line, line_no) {
            if atoms.is_some() || !rows.is_empty() {
                return Err(Error::parse(line_no, 1, "`atoms:` header must come first and only once"));
            }
            atoms = Some(header?);
            continue;
        }
        let colon = line
            .find(':')
            .ok_or_else(|| Error::parse(line_no, line.chars().count() + 1, "expected `world : value`"))?;
        let label = line[..colon].trim();
        if label.is_empty() {
            return Err(Error::parse(line_no, 1, "missing world label"));
        }
        let column = line[..colon].chars().count() + 2;
        let cell = Cell {
            line: line_no,
            column,
            text: line[colon + 1..].trim().to_string(),
        };
        rows.push((line_no, label.to_string(), cell));
    }

    let universe = match &atoms {
        Some(atoms) => Universe::from_atoms(atoms.iter().cloned()).map_err(|e| Error::parse(1, 1, e.to_string()))?,
        None => {
            if rows.is_empty() {
                return Err(Error::parse(1, 1, "no worlds listed"));
            }
            Universe::from_labels(rows.iter().map(|(_, l, _)| l.clone())).map_err(|e| {
                let line = rows.first().map_or(1, |r| r.0);
                Error::parse(line, 1, e.to_string())
            })?
        }
    };

    let mut cells: Vec<Option<Cell>> = (0..universe.len()).map(|_| None).collect();
    for (line_no, label, cell) in rows {
        let world = universe
            .world(&label)
            .ok_or_else(|| Error::parse(line_no, 1, format!("unknown world `{label}`")))?;
        if cells[world].is_some() {
            return Err(Error::parse(line_no, 1, format!("world `{label}` listed twice")));
        }
        cells[world] = Some(cell);
    }
    let cells = cells
        .into_iter()
        .enumerate()
        .map(|(w, c)| {
            c.ok_or_else(|| Error::parse(1, 1, format!("world `{}` has no value", universe.literal_label(w))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((universe, cells))
}

fn scalar_cell<S: Scalar>(cell: &Cell) -> Result<S> {
    let r = parse_rational(&cell.text).map_err(|m| Error::parse(cell.line, cell.column, m))?;
    let v = S::from_ratio(&r);
    if v < S::zero() || v > S::one() {
        return Err(Error::parse(cell.line, cell.column, format!("value {} lies outside [0, 1]", cell.text)));
    }
    Ok(v)
}

fn write_table(universe: &Universe, values: impl Iterator<Item = String>) -> String {
    let mut out = String::new();
    if let Some(atoms) = universe.atoms() {
        out.push_str(&format!("atoms: {}\n", atoms.join(" ")));
    }
    let labels: Vec<String> = (0..universe.len()).map(|w| universe.literal_label(w)).collect();
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    for (label, value) in labels.iter().zip(values) {
        out.push_str(&format!("{label:<width$} : {value}\n"));
    }
    out
}

pub fn parse_distribution<S: Scalar>(text: &str) -> Result<PossibilityDistribution<S>> {
    let (universe, cells) = parse_table(text)?;
    let values = cells.iter().map(scalar_cell).collect::<Result<Vec<S>>>()?;
    PossibilityDistribution::new(&universe, values)
}

pub fn write_distribution<S: Scalar>(pi: &PossibilityDistribution<S>, style: ValueStyle) -> String {
    write_table(pi.universe(), pi.values().iter().map(|v| style.render(v)))
}

/// Ranks are natural numbers or `inf`; the minimum must be 0.
pub fn parse_kappa(text: &str) -> Result<KappaFunction> {
    let (universe, cells) = parse_table(text)?;
    let ranks = cells
        .iter()
        .map(|c| c.text.parse::<Rank>().map_err(|m| Error::parse(c.line, c.column, m)))
        .collect::<Result<Vec<_>>>()?;
    KappaFunction::new(&universe, ranks)
}

pub fn write_kappa(kappa: &KappaFunction) -> String {
    write_table(kappa.universe(), kappa.ranks().iter().map(Rank::to_string))
}

/// Values in `[0, 1]` that must sum to exactly 1.
pub fn parse_probability<S: Scalar>(text: &str) -> Result<ProbabilityDistribution<S>> {
    let (universe, cells) = parse_table(text)?;
    let values = cells.iter().map(scalar_cell).collect::<Result<Vec<S>>>()?;
    ProbabilityDistribution::new(&universe, values)
}

pub fn write_probability<S: Scalar>(p: &ProbabilityDistribution<S>, style: ValueStyle) -> String {
    write_table(p.universe(), p.values().iter().map(|v| style.render(v)))
}
