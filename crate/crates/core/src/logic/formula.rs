//! Propositional formulas, their parser, and atom vocabularies.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::is_atom_name;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    /// The negation of `self`, written as `!self`.
    pub fn negated(&self) -> Self {
        self.clone().not()
    }

    pub fn eval(&self, truth: &impl Fn(&str) -> bool) -> bool {
        match self {
            Formula::Atom(a) => truth(a),
            Formula::Not(f) => !f.eval(truth),
            Formula::And(a, b) => a.eval(truth) && b.eval(truth),
            Formula::Or(a, b) => a.eval(truth) || b.eval(truth),
            Formula::Implies(a, b) => !a.eval(truth) || b.eval(truth),
        }
    }

    /// Atoms in order of first occurrence.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::Atom(a) => {
                if !out.contains(a) {
                    out.push(a.clone());
                }
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Nesting depth of connectives; an atom has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Rewrites `a -> b` as `!a | b` throughout.
    pub fn eliminate_implications(&self) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Not(f) => f.eliminate_implications().not(),
            Formula::And(a, b) => a.eliminate_implications().and(b.eliminate_implications()),
            Formula::Or(a, b) => a.eliminate_implications().or(b.eliminate_implications()),
            Formula::Implies(a, b) => a.eliminate_implications().not().or(b.eliminate_implications()),
        }
    }

    /// Syntactic normal form used for formula identity: implications
    /// eliminated and the operands of `&` and `|` sorted.
    pub fn canonical(&self) -> Formula {
        fn sorted(a: Formula, b: Formula) -> (Box<Formula>, Box<Formula>) {
            if a <= b {
                (Box::new(a), Box::new(b))
            } else {
                (Box::new(b), Box::new(a))
            }
        }
        match self.eliminate_implications() {
            Formula::Atom(a) => Formula::Atom(a),
            Formula::Not(f) => f.canonical().not(),
            Formula::And(a, b) => {
                let (a, b) = sorted(a.canonical(), b.canonical());
                Formula::And(a, b)
            }
            Formula::Or(a, b) => {
                let (a, b) = sorted(a.canonical(), b.canonical());
                Formula::Or(a, b)
            }
            Formula::Implies(..) => unreachable!("implications eliminated above"),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) | Formula::Atom(_) => 4,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, required: u8) -> fmt::Result {
        let own = self.precedence();
        if own < required {
            write!(f, "(")?;
        }
        match self {
            Formula::Atom(a) => write!(f, "{a}")?,
            Formula::Not(inner) => {
                write!(f, "!")?;
                inner.fmt_at(f, 4)?;
            }
            Formula::And(a, b) => {
                a.fmt_at(f, own)?;
                write!(f, " & ")?;
                b.fmt_at(f, own + 1)?;
            }
            Formula::Or(a, b) => {
                a.fmt_at(f, own)?;
                write!(f, " | ")?;
                b.fmt_at(f, own + 1)?;
            }
            Formula::Implies(a, b) => {
                a.fmt_at(f, own + 1)?;
                write!(f, " -> ")?;
                b.fmt_at(f, own)?;
            }
        }
        if own < required {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

/// An ordered list of distinct atom names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    atoms: Vec<String>,
}

impl Vocabulary {
    pub fn new<I, T>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let mut vocab = Vocabulary::default();
        for atom in atoms {
            let atom = atom.into();
            if !is_atom_name(&atom) {
                return Err(Error::InvalidArgument(format!("invalid atom name `{atom}`")));
            }
            if vocab.index_of(&atom).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate atom `{atom}`")));
            }
            vocab.atoms.push(atom);
        }
        Ok(vocab)
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    /// Index of `atom`, appending it if absent.
    pub fn intern(&mut self, atom: &str) -> usize {
        match self.index_of(atom) {
            Some(i) => i,
            None => {
                self.atoms.push(atom.to_string());
                self.atoms.len() - 1
            }
        }
    }

    pub fn extend_with(&mut self, formula: &Formula) {
        for atom in formula.atoms() {
            self.intern(&atom);
        }
    }

    pub fn covers(&self, formula: &Formula) -> bool {
        formula.atoms().iter().all(|a| self.index_of(a).is_some())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Not => write!(f, "`!`"),
            Token::And => write!(f, "`&`"),
            Token::Or => write!(f, "`|`"),
            Token::Arrow => write!(f, "`->`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
        }
    }
}

/// Tokens with their 1-based column.
fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Token, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push((Token::Arrow, col));
                i += 2;
            }
            '!' | '~' | '-' => {
                out.push((Token::Not, col));
                i += 1;
            }
            '&' => {
                out.push((Token::And, col));
                i += 1;
            }
            '|' => {
                out.push((Token::Or, col));
                i += 1;
            }
            '(' => {
                out.push((Token::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, col));
                i += 1;
            }
            'a'..='z' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Token::Ident(chars[start..i].iter().collect()), col));
            }
            other => return Err(Error::parse(line, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), message)
    }

    // implication := disjunction ('->' implication)?
    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Token::Arrow) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = lhs.or(self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = lhs.and(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().cloned() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(self.unary()?.not())
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(Formula::Atom(name))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.implication()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(tok) => Err(self.error(format!("unexpected {tok}"))),
            None => Err(self.error("unexpected end of formula")),
        }
    }
}

pub(crate) fn parse_formula_at(text: &str, line: usize, col0: usize) -> Result<Formula> {
    let tokens = tokenize(text, line, col0)?;
    let end_col = col0 + text.chars().count();
    let mut parser = Parser {
        tokens,
        pos: 0,
        line,
        end_col,
    };
    let formula = parser.implication()?;
    if parser.pos < parser.tokens.len() {
        let tok = parser.tokens[parser.pos].0.clone();
        return Err(parser.error(format!("unexpected {tok} after formula")));
    }
    Ok(formula)
}

/// Parses a formula in the grammar `!` > `&` > `|` > `->` (implication is
/// right-associative, the others left-associative). `-` and `~` also negate.
pub fn parse_formula(text: &str) -> Result<Formula> {
    parse_formula_at(text, 1, 1)
}
