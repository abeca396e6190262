//! `posrev`: command-line front end for the belief revision engine.
//!
//! Exit codes: 0 success, 1 query answered no (or a crosscheck failed),
//! 2 parse, I/O or argument error, 3 domain error, 4 guard exceeded.

mod crosscheck;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use posrev::{
    adjust_base, adjust_williams, brutal_revise, condition, contract, default_demotion_level, entails_pref,
    inconsistency_degree, induced_distribution, kappa_adjust, kappa_condition, kappa_conditionalize,
    kappa_partition_conditionalize, kappa_to_pi, lex_refine, models, natural_revision, parse_base,
    parse_distribution, parse_formula, parse_kappa, parse_rational, pi_to_kappa, preferred_subbase_revise, prove,
    revise_partition, revise_uncertain, revise_unreliable, write_distribution, write_kappa, Base, Distribution,
    ErrorKind, Event, Formula, KappaFunction, PartitionInput, PartitionRanking, Rank, Rational, RevisionMode,
    Universe, ValueStyle,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: posrev::Error },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Engine(#[from] posrev::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Argument(_) => 2,
            CliError::File { source, .. } | CliError::Engine(source) => match source.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Domain => 3,
                ErrorKind::Guard => 4,
            },
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "posrev", version, about = "Belief revision in possibility theory, with exact rationals")]
struct Cli {
    /// Print exact fractions (the default).
    #[arg(long, global = true, conflicts_with = "decimal")]
    rational: bool,
    /// Print six-digit decimals, for reading only.
    #[arg(long, global = true)]
    decimal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Min,
    Product,
}

impl From<Mode> for RevisionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Min => RevisionMode::Min,
            Mode::Product => RevisionMode::Product,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BaseOp {
    Brutal,
    Preferred,
    Adjust,
}

#[derive(Args, Debug)]
struct DistEvent {
    /// Distribution file.
    dist: PathBuf,
    /// A formula for atom universes, otherwise world labels separated by
    /// spaces or commas.
    #[arg(allow_hyphen_values = true)]
    event: String,
}

#[derive(Args, Debug)]
struct KappaEvent {
    /// Ranking file.
    kappa: PathBuf,
    /// A formula for atom universes, otherwise world labels.
    #[arg(allow_hyphen_values = true)]
    event: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the distribution induced by a base.
    Pi { base: PathBuf },
    /// Print the inconsistency degree of a base.
    Inc { base: PathBuf },
    /// Print the level at which a base derives a formula.
    Prove {
        base: PathBuf,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Whether the base derives the formula strictly above its inconsistency.
    EntailPref {
        base: PathBuf,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Condition a distribution on an event.
    Condition {
        #[arg(long, value_enum, default_value = "min")]
        op: Mode,
        #[command(flatten)]
        input: DistEvent,
    },
    /// Forget an event.
    Contract(DistEvent),
    /// Enforce `N(A) = α`.
    ReviseUncertain {
        #[arg(long, value_enum, default_value = "min")]
        mode: Mode,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        input: DistEvent,
    },
    /// Enforce `Π(A_i) = λ_i` over a partition, given as `--cell "event:λ"`.
    RevisePartition {
        #[arg(long, value_enum, default_value = "min")]
        mode: Mode,
        #[arg(long = "cell", required = true)]
        cells: Vec<String>,
        dist: PathBuf,
    },
    /// Revise by an observation of `A` that is reliable to degree α.
    Unreliable {
        #[arg(long, value_enum, default_value = "min")]
        mode: Mode,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        input: DistEvent,
    },
    /// Promote the best worlds of `A`; proviso warnings go to stderr.
    Natural {
        #[arg(long, value_enum, default_value = "min")]
        mode: Mode,
        /// Demotion level; defaults to halfway between 1 and the next level.
        #[arg(long)]
        beta: Option<String>,
        #[command(flatten)]
        input: DistEvent,
    },
    /// Williams' adjustment to acceptance level α.
    Adjust {
        dist: PathBuf,
        #[arg(allow_hyphen_values = true)]
        event: String,
        alpha: String,
    },
    /// Condition a ranking on an event.
    KappaCondition(KappaEvent),
    /// Make `A` believed with firmness n.
    KappaConditionalize {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        input: KappaEvent,
    },
    /// Rank the cells of a partition, given as `--cell "event:rank"`.
    KappaPartition {
        #[arg(long = "cell", required = true)]
        cells: Vec<String>,
        kappa: PathBuf,
    },
    /// Ranking-level adjustment with firmness n.
    KappaAdjust {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        input: KappaEvent,
    },
    /// Translate a ranking into the distribution `2^-κ`.
    KappaToPi { kappa: PathBuf },
    /// Translate a dyadic distribution into a ranking.
    PiToKappa { dist: PathBuf },
    /// Revise a base syntactically.
    ReviseBase {
        #[arg(long, value_enum)]
        op: BaseOp,
        /// Acceptance level for `--op adjust`.
        #[arg(long)]
        alpha: Option<String>,
        /// With `--op preferred`, print every candidate instead of the
        /// lexicographically preferred one.
        #[arg(long)]
        all: bool,
        base: PathBuf,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Check the semantic and syntactic identities on one input.
    Crosscheck {
        /// A base (`.base`) or a distribution file.
        input: PathBuf,
    },
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn in_file<T>(path: &Path, r: posrev::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn load_base(path: &Path) -> CliResult<Base> {
    in_file(path, parse_base(&read(path)?))
}

fn load_dist(path: &Path) -> CliResult<Distribution> {
    in_file(path, parse_distribution(&read(path)?))
}

fn load_kappa(path: &Path) -> CliResult<KappaFunction> {
    in_file(path, parse_kappa(&read(path)?))
}

fn scalar(text: &str) -> CliResult<Rational> {
    parse_rational(text).map_err(|m| CliError::Argument(format!("`{text}`: {m}")))
}

fn formula(text: &str) -> CliResult<Formula> {
    parse_formula(text).map_err(|e| CliError::Argument(format!("`{text}`: {e}")))
}

/// A formula when the universe is generated by atoms, a label list otherwise.
pub fn parse_event(universe: &Arc<Universe>, text: &str) -> CliResult<Event> {
    if universe.atoms().is_some() {
        return Ok(models(universe, &formula(text)?)?);
    }
    let labels = text.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty());
    Event::from_labels(universe, labels).map_err(|e| CliError::Argument(format!("`{text}`: {e}")))
}

/// Splits `event:value` at the last colon.
fn split_cell(text: &str) -> CliResult<(&str, &str)> {
    text.rsplit_once(':')
        .ok_or_else(|| CliError::Argument(format!("cell `{text}` is not of the form `event:value`")))
}

struct Output {
    style: ValueStyle,
    text: String,
    code: u8,
}

impl Output {
    fn new(style: ValueStyle) -> Self {
        Output {
            style,
            text: String::new(),
            code: 0,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn value(&mut self, v: &Rational) {
        let s = self.style.render(v);
        self.line(s);
    }

    fn dist(&mut self, pi: &Distribution) {
        self.text.push_str(&write_distribution(pi, self.style));
    }

    fn kappa(&mut self, k: &KappaFunction) {
        self.text.push_str(&write_kappa(k));
    }

    fn base(&mut self, b: &Base) {
        match self.style {
            ValueStyle::Rational => self.text.push_str(&b.to_string()),
            ValueStyle::Decimal => {
                self.line(format!("atoms: {}", b.vocabulary().atoms().join(" ")));
                for e in b.entries() {
                    let w = self.style.render(&e.weight);
                    self.line(format!("{} : {w}", e.formula));
                }
            }
        }
    }
}

fn run(cli: Cli) -> CliResult<Output> {
    let style = if cli.decimal { ValueStyle::Decimal } else { ValueStyle::Rational };
    let mut out = Output::new(style);
    match cli.command {
        Command::Pi { base } => {
            let b = load_base(&base)?;
            out.dist(&induced_distribution(&b)?);
        }
        Command::Inc { base } => {
            out.value(&inconsistency_degree(&load_base(&base)?)?);
        }
        Command::Prove { base, formula: f } => {
            let level = prove(&load_base(&base)?, &formula(&f)?)?;
            out.value(&level);
            if level == Rational::from_integer(0.into()) {
                out.code = 1;
            }
        }
        Command::EntailPref { base, formula: f } => {
            let yes = entails_pref(&load_base(&base)?, &formula(&f)?)?;
            out.line(if yes { "yes" } else { "no" });
            out.code = u8::from(!yes);
        }
        Command::Condition { op, input } => {
            let pi = load_dist(&input.dist)?;
            let a = parse_event(pi.universe(), &input.event)?;
            out.dist(&condition(&pi, &a, op.into())?);
        }
        Command::Contract(input) => {
            let pi = load_dist(&input.dist)?;
            let a = parse_event(pi.universe(), &input.event)?;
            out.dist(&contract(&pi, &a)?);
        }
        Command::ReviseUncertain { mode, alpha, input } => {
            let pi = load_dist(&input.dist)?;
            let a = parse_event(pi.universe(), &input.event)?;
            out.dist(&revise_uncertain(&pi, &a, &scalar(&alpha)?, mode.into())?);
        }
        Command::RevisePartition { mode, cells, dist } => {
            let pi = load_dist(&dist)?;
            let mut parsed = Vec::new();
            for cell in &cells {
                let (event, level) = split_cell(cell)?;
                parsed.push((parse_event(pi.universe(), event)?, scalar(level)?));
            }
            out.dist(&revise_partition(&pi, &PartitionInput::new(parsed)?, mode.into())?);
        }
        Command::Unreliable { mode, alpha, input } => {
            let pi = load_dist(&input.dist)?;
            let a = parse_event(pi.universe(), &input.event)?;
            out.dist(&revise_unreliable(&pi, &a, &scalar(&alpha)?, mode.into())?);
        }
        Command::Natural { mode, beta, input } => {
            let pi = load_dist(&input.dist)?;
            let a = parse_event(pi.universe(), &input.event)?;
            let beta = match beta {
                Some(b) => scalar(&b)?,
                None => default_demotion_level(&pi),
            };
            let nat = natural_revision(&pi, &a, &beta, mode.into())?;
            for w in &nat.warnings {
                eprintln!("warning: {w}");
            }
            out.dist(&nat.result);
        }
        Command::Adjust { dist, event, alpha } => {
            let pi = load_dist(&dist)?;
            let a = parse_event(pi.universe(), &event)?;
            out.dist(&adjust_williams(&pi, &a, &scalar(&alpha)?)?);
        }
        Command::KappaCondition(input) => {
            let k = load_kappa(&input.kappa)?;
            let a = parse_event(k.universe(), &input.event)?;
            out.kappa(&kappa_condition(&k, &a)?);
        }
        Command::KappaConditionalize { n, input } => {
            let k = load_kappa(&input.kappa)?;
            let a = parse_event(k.universe(), &input.event)?;
            out.kappa(&kappa_conditionalize(&k, &a, &BigUint::from(n))?);
        }
        Command::KappaPartition { cells, kappa } => {
            let k = load_kappa(&kappa)?;
            let mut parsed = Vec::new();
            for cell in &cells {
                let (event, rank) = split_cell(cell)?;
                let rank: Rank = rank.trim().parse().map_err(CliError::Argument)?;
                parsed.push((parse_event(k.universe(), event)?, rank));
            }
            out.kappa(&kappa_partition_conditionalize(&k, &PartitionRanking::new(parsed)?)?);
        }
        Command::KappaAdjust { n, input } => {
            let k = load_kappa(&input.kappa)?;
            let a = parse_event(k.universe(), &input.event)?;
            out.kappa(&kappa_adjust(&k, &a, &BigUint::from(n))?);
        }
        Command::KappaToPi { kappa } => {
            out.dist(&kappa_to_pi(&load_kappa(&kappa)?));
        }
        Command::PiToKappa { dist } => {
            out.kappa(&pi_to_kappa(&load_dist(&dist)?)?);
        }
        Command::ReviseBase {
            op,
            alpha,
            all,
            base,
            formula: f,
        } => {
            let b = load_base(&base)?;
            let p = formula(&f)?;
            match op {
                BaseOp::Brutal => out.base(&brutal_revise(&b, &p)?),
                BaseOp::Preferred => {
                    let candidates = preferred_subbase_revise(&b, &p)?;
                    if all {
                        for (i, c) in candidates.iter().enumerate() {
                            if i > 0 {
                                out.line("");
                            }
                            out.line(format!("# candidate {}", i + 1));
                            out.base(&c.base);
                        }
                    } else {
                        out.base(&lex_refine(&candidates, &b)?.base);
                    }
                }
                BaseOp::Adjust => {
                    let alpha = alpha.ok_or_else(|| CliError::Argument("--op adjust needs --alpha".into()))?;
                    out.base(&adjust_base(&b, &p, &scalar(&alpha)?)?);
                }
            }
        }
        Command::Crosscheck { input } => {
            let text = read(&input)?;
            let is_base = input.extension().is_some_and(|e| e == "base");
            let report = if is_base {
                crosscheck::on_base(&in_file(&input, parse_base(&text))?)?
            } else {
                crosscheck::on_distribution(&in_file(&input, parse_distribution(&text))?)?
            };
            for check in &report {
                out.line(check.to_string());
            }
            if report.iter().any(|c| !c.passed()) {
                out.code = 1;
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
