//! The `crosscheck` report: semantic and syntactic identities that must
//! hold on any input, each checked exhaustively on the given file.

use std::fmt;

use num_bigint::BigUint;
use posrev::{
    adjust_williams, brutal_revise, condition, condition_min, condition_product, consistent_part_distribution,
    inconsistency_degree, induced_distribution, kappa_adjust, kappa_condition, kappa_conditionalize,
    kappa_partition_conditionalize, kappa_to_pi, models, pi_to_kappa, prove, ratio, revise_partition,
    revise_uncertain, semantic_entails, Base, Distribution, Event, Formula, PartitionInput, PartitionRanking, Rank,
    Rational, RevisionMode,
};

/// Universes up to this many worlds get every event pair in the Cox check.
const EXHAUSTIVE_PAIRS: usize = 8;
/// Event enumeration stops here.
const MAX_WORLDS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn tally(name: &'static str, cases: usize, failure: Option<String>) -> Self {
        match failure {
            None => Check {
                name,
                status: Status::Pass,
                detail: format!("{cases} case{}", if cases == 1 { "" } else { "s" }),
            },
            Some(f) => Check {
                name,
                status: Status::Fail,
                detail: f,
            },
        }
    }

    fn skip(name: &'static str, why: impl Into<String>) -> Self {
        Check {
            name,
            status: Status::Skip,
            detail: why.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn two_sided(pi: &Distribution, a: &Event) -> posrev::Result<bool> {
    let zero = ratio(0, 1);
    Ok(pi.possibility(a)? > zero && pi.possibility(&a.complement())? > zero)
}

fn cox(pi: &Distribution, events: &[Event], mode: RevisionMode, name: &'static str) -> posrev::Result<Check> {
    let u = pi.universe();
    let exhaustive = u.len() <= EXHAUSTIVE_PAIRS;
    let probes: Vec<Event> = if exhaustive {
        events.to_vec()
    } else {
        (0..u.len())
            .flat_map(|w| {
                let single = Event::from_indices(u, [w]).expect("world in range");
                [single.complement(), single]
            })
            .collect()
    };
    let mut cases = 0;
    for a in events {
        let pa = pi.possibility(a)?;
        if pa == ratio(0, 1) {
            continue;
        }
        let given = condition(pi, a, mode)?;
        for b in &probes {
            cases += 1;
            let lhs = pi.possibility(&a.intersection(b)?)?;
            let rhs = mode.combine(&given.possibility(b)?, &pa);
            if lhs != rhs {
                return Ok(Check::tally(name, cases, Some(format!("A = {a}, B = {b}: Π(A∩B) = {lhs}, but {rhs}"))));
            }
        }
    }
    let mut check = Check::tally(name, cases, None);
    if !exhaustive {
        check.detail.push_str(" (B over singletons and their complements)");
    }
    Ok(check)
}

fn adjustment(pi: &Distribution, events: &[Event]) -> posrev::Result<Check> {
    let alphas: Vec<Rational> = (1..=4).map(|i| ratio(i, 4)).collect();
    let mut cases = 0;
    for a in events {
        if !two_sided(pi, a)? {
            continue;
        }
        for alpha in &alphas {
            cases += 1;
            let adjusted = adjust_williams(pi, a, alpha)?;
            let rule = revise_uncertain(pi, a, alpha, RevisionMode::Min)?;
            if adjusted != rule {
                return Ok(Check::tally("adjustment-equivalence", cases, Some(format!("A = {a}, α = {alpha}"))));
            }
        }
    }
    Ok(Check::tally("adjustment-equivalence", cases, None))
}

fn jeffrey_constraint(pi: &Distribution, events: &[Event]) -> posrev::Result<Check> {
    let alphas: Vec<Rational> = (0..=4).map(|i| ratio(i, 4)).collect();
    let mut cases = 0;
    for a in events {
        if !two_sided(pi, a)? {
            continue;
        }
        for mode in [RevisionMode::Min, RevisionMode::Product] {
            for alpha in &alphas {
                cases += 1;
                let r = revise_uncertain(pi, a, alpha, mode)?;
                if r.necessity(a)? != *alpha || r.possibility(a)? != ratio(1, 1) {
                    return Ok(Check::tally(
                        "jeffrey-constraint",
                        cases,
                        Some(format!("A = {a}, α = {alpha}, {mode:?}")),
                    ));
                }
            }
        }
    }
    Ok(Check::tally("jeffrey-constraint", cases, None))
}

fn dyadic_bridge(pi: &Distribution, events: &[Event]) -> posrev::Result<Check> {
    const NAME: &str = "dyadic-bridge";
    let Ok(k) = pi_to_kappa(pi) else {
        return Ok(Check::skip(NAME, "values are not all powers of 1/2"));
    };
    let mut cases = 0;
    let fail = |what: &str, a: &Event| Some(format!("{what} on A = {a}"));
    for a in events {
        if k.rank_of(a).is_finite() {
            cases += 1;
            let lhs: Distribution = kappa_to_pi(&kappa_condition(&k, a)?);
            if lhs != condition_product(pi, a)? {
                return Ok(Check::tally(NAME, cases, fail("conditioning", a)));
            }
        }
        if !(k.rank_of(a).is_finite() && k.rank_of(&a.complement()).is_finite()) {
            continue;
        }
        for n in 1u64..=3 {
            cases += 1;
            let big = BigUint::from(n);
            let alpha = ratio(1, 1) - Rank::from(n).to_ratio();
            let lhs: Distribution = kappa_to_pi(&kappa_conditionalize(&k, a, &big)?);
            if lhs != revise_uncertain(pi, a, &alpha, RevisionMode::Product)? {
                return Ok(Check::tally(NAME, cases, fail("conditionalization", a)));
            }
            let lhs: Distribution = kappa_to_pi(&kappa_adjust(&k, a, &big)?);
            if lhs != adjust_williams(pi, a, &alpha)? {
                return Ok(Check::tally(NAME, cases, fail("adjustment", a)));
            }
            let ranks = PartitionRanking::new(vec![(a.clone(), Rank::zero()), (a.complement(), Rank::from(n))])?;
            let levels = PartitionInput::new(vec![(a.clone(), ratio(1, 1)), (a.complement(), Rank::from(n).to_ratio())])?;
            let lhs: Distribution = kappa_to_pi(&kappa_partition_conditionalize(&k, &ranks)?);
            if lhs != revise_partition(pi, &levels, RevisionMode::Product)? {
                return Ok(Check::tally(NAME, cases, fail("partition conditionalization", a)));
            }
        }
    }
    Ok(Check::tally(NAME, cases, None))
}

/// Cox equation (both modes), adjustment equivalence, the Jeffrey
/// constraint and the dyadic bridge.
pub fn on_distribution(pi: &Distribution) -> posrev::Result<Vec<Check>> {
    let names = ["cox-min", "cox-product", "adjustment-equivalence", "jeffrey-constraint", "dyadic-bridge"];
    if pi.universe().len() > MAX_WORLDS {
        let why = format!("{} worlds exceed the limit of {MAX_WORLDS}", pi.universe().len());
        return Ok(names.iter().map(|n| Check::skip(n, why.clone())).collect());
    }
    let events: Vec<Event> = Event::all(pi.universe()).collect();
    Ok(vec![
        cox(pi, &events, RevisionMode::Min, names[0])?,
        cox(pi, &events, RevisionMode::Product, names[1])?,
        adjustment(pi, &events)?,
        jeffrey_constraint(pi, &events)?,
        dyadic_bridge(pi, &events)?,
    ])
}

/// Entries, their negations and every literal.
fn queries(base: &Base) -> Vec<Formula> {
    let mut out = Vec::new();
    for e in base.entries() {
        out.push(e.formula.clone());
        out.push(e.formula.negated());
    }
    for a in base.vocabulary().atoms() {
        out.push(Formula::atom(a.clone()));
        out.push(Formula::atom(a.clone()).not());
    }
    out
}

/// Resolution against the induced distribution, brutal revision against
/// min-conditioning, then the distribution checks on the consistent part.
pub fn on_base(base: &Base) -> posrev::Result<Vec<Check>> {
    let pi = induced_distribution(base)?;
    let u = pi.universe().clone();
    let inc = inconsistency_degree(base)?;
    let top = pi.values().iter().max().cloned().unwrap_or_else(|| ratio(0, 1));
    let mut report = vec![if inc == ratio(1, 1) - top.clone() {
        Check::tally("inconsistency-degree", 1, None)
    } else {
        Check::tally("inconsistency-degree", 1, Some(format!("resolution gives {inc}, models give {}", ratio(1, 1) - top)))
    }];

    let qs = queries(base);
    let mut levels: Vec<Rational> = base.entries().iter().map(|e| e.weight.clone()).collect();
    levels.sort();
    levels.dedup();
    let mut cases = 0;
    let mut failure = None;
    'sound: for q in &qs {
        let sat = models(&u, q)?;
        cases += 1;
        let derived = prove(base, q)?;
        let semantic = ratio(1, 1) - pi.possibility(&sat.complement())?;
        if derived != semantic {
            failure = Some(format!("{q}: resolution gives {derived}, models give {semantic}"));
            break;
        }
        for alpha in &levels {
            if semantic_entails(base, q, alpha)? != (derived >= *alpha) {
                failure = Some(format!("{q} at {alpha}"));
                break 'sound;
            }
        }
    }
    report.push(Check::tally("soundness-completeness", cases, failure));

    let mut cases = 0;
    let mut failure = None;
    for p in &qs {
        let sat = models(&u, p)?;
        if pi.possibility(&sat)? == ratio(0, 1) {
            continue;
        }
        cases += 1;
        let revised = induced_distribution(&brutal_revise(base, p)?)?;
        if revised != condition_min(&pi, &sat)? {
            failure = Some(format!("input {p}"));
            break;
        }
    }
    report.push(Check::tally("brutal-semantic", cases, failure));

    if inc == ratio(1, 1) {
        for name in ["cox-min", "cox-product", "adjustment-equivalence", "jeffrey-constraint", "dyadic-bridge"] {
            report.push(Check::skip(name, "the base is fully inconsistent"));
        }
    } else {
        report.extend(on_distribution(&consistent_part_distribution(base)?)?);
    }
    Ok(report)
}
