//! Ordinal conditional functions and the dyadic bridge `π = 2^-κ`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::distribution::PossibilityDistribution;
use crate::error::{Error, Result};
use crate::logic::formula::{Formula, Vocabulary};
use crate::logic::{models, universe_of, BaseEntry, BeliefBase};
use crate::scalar::Scalar;
use crate::universe::{Event, Universe};

/// A rank: a natural number or infinity. `Finite(_) < Infinite`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(BigUint),
    Infinite,
}

impl Rank {
    pub fn zero() -> Rank {
        Rank::Finite(BigUint::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Rank::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rank::Finite(n) if n.is_zero())
    }

    /// `∞` absorbs addition.
    pub fn plus(&self, other: &Rank) -> Rank {
        match (self, other) {
            (Rank::Finite(a), Rank::Finite(b)) => Rank::Finite(a + b),
            _ => Rank::Infinite,
        }
    }

    /// `self - k` for a finite `k <= self`; `∞ - k = ∞`.
    fn minus(&self, k: &BigUint) -> Rank {
        match self {
            Rank::Finite(a) => Rank::Finite(a - k),
            Rank::Infinite => Rank::Infinite,
        }
    }

    /// `2^-rank`, with `∞ ↦ 0`.
    pub fn to_ratio(&self) -> BigRational {
        match self {
            Rank::Finite(n) => {
                let exp = usize::try_from(n).expect("rank too large for the dyadic bridge");
                let den = num_bigint::BigInt::one() << exp;
                BigRational::new(num_bigint::BigInt::one(), den)
            }
            Rank::Infinite => BigRational::zero(),
        }
    }
}

impl From<u64> for Rank {
    fn from(n: u64) -> Rank {
        Rank::Finite(BigUint::from(n))
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "{n}"),
            Rank::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Rank {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Rank::Infinite);
        }
        s.parse::<BigUint>()
            .map(Rank::Finite)
            .map_err(|_| format!("`{s}` is not a rank (natural number or `inf`)"))
    }
}

/// Spohn's ordinal conditional function: a rank per world, with minimum 0
/// unless built through [`KappaFunction::new_unnormalized`].
#[derive(Debug, Clone)]
pub struct KappaFunction {
    universe: Arc<Universe>,
    ranks: Vec<Rank>,
}

impl PartialEq for KappaFunction {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.ranks == other.ranks
    }
}

impl KappaFunction {
    pub fn new(universe: &Arc<Universe>, ranks: Vec<Rank>) -> Result<Self> {
        let kappa = Self::new_unnormalized(universe, ranks)?;
        if !kappa.is_normalized() {
            return Err(Error::InvalidArgument(format!(
                "ranking is not normalized: minimal rank is {}, not 0",
                kappa.rank_of(&Event::full(universe))
            )));
        }
        Ok(kappa)
    }

    pub fn new_unnormalized(universe: &Arc<Universe>, ranks: Vec<Rank>) -> Result<Self> {
        if ranks.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(KappaFunction {
            universe: universe.clone(),
            ranks,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn rank(&self, world: usize) -> &Rank {
        &self.ranks[world]
    }

    pub fn is_normalized(&self) -> bool {
        self.ranks.iter().any(Rank::is_zero)
    }

    /// `κ(A) = min` over the members of `A`; `κ(∅) = ∞`.
    pub fn rank_of(&self, event: &Event) -> Rank {
        event
            .iter()
            .map(|w| &self.ranks[w])
            .min()
            .cloned()
            .unwrap_or(Rank::Infinite)
    }

    fn check(&self, event: &Event) -> Result<()> {
        if self.universe.same_as(event.universe()) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn finite_rank_of(&self, event: &Event) -> Result<BigUint> {
        match self.rank_of(event) {
            Rank::Finite(n) => Ok(n),
            Rank::Infinite => Err(Error::ConditioningUndefined(event.to_string())),
        }
    }
}

/// `π(ω) = 2^-κ(ω)`, exactly.
pub fn kappa_to_pi<S: Scalar>(kappa: &KappaFunction) -> PossibilityDistribution<S> {
    let values = kappa.ranks.iter().map(|r| S::from_ratio(&r.to_ratio())).collect();
    PossibilityDistribution::from_values_unchecked(&kappa.universe, values)
}

fn dyadic_rank(value: &BigRational) -> Option<Rank> {
    if value.is_zero() {
        return Some(Rank::Infinite);
    }
    if !value.numer().is_one() {
        return None;
    }
    let den = value.denom().magnitude();
    let bits = den.bits();
    if bits == 0 || den.count_ones() != 1 {
        return None;
    }
    Some(Rank::Finite(BigUint::from(bits - 1)))
}

/// Inverse of [`kappa_to_pi`]; every value must be 0 or `2^-k`.
pub fn pi_to_kappa<S: Scalar>(pi: &PossibilityDistribution<S>) -> Result<KappaFunction> {
    let ranks = pi
        .values()
        .iter()
        .map(|v| {
            v.to_ratio()
                .as_ref()
                .and_then(dyadic_rank)
                .ok_or_else(|| Error::NotDyadic(v.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    KappaFunction::new_unnormalized(pi.universe(), ranks)
}

/// Spohn conditioning `κ(ω|A) = κ(ω) - κ(A)` on `A`, `∞` outside.
pub fn kappa_condition(kappa: &KappaFunction, event: &Event) -> Result<KappaFunction> {
    kappa.check(event)?;
    let base = kappa.finite_rank_of(event)?;
    let ranks = kappa
        .ranks
        .iter()
        .enumerate()
        .map(|(w, r)| if event.contains(w) { r.minus(&base) } else { Rank::Infinite })
        .collect();
    KappaFunction::new_unnormalized(&kappa.universe, ranks)
}

/// The `(A, n)`-conditionalization: `κ(ω|A)` on `A`, `n + κ(ω|Ā)` on `Ā`.
pub fn kappa_conditionalize(kappa: &KappaFunction, event: &Event, n: &BigUint) -> Result<KappaFunction> {
    kappa.check(event)?;
    let complement = event.complement();
    let inside = kappa.finite_rank_of(event)?;
    let outside = kappa.finite_rank_of(&complement)?;
    let shift = Rank::Finite(n.clone());
    let ranks = kappa
        .ranks
        .iter()
        .enumerate()
        .map(|(w, r)| {
            if event.contains(w) {
                r.minus(&inside)
            } else {
                r.minus(&outside).plus(&shift)
            }
        })
        .collect();
    KappaFunction::new(&kappa.universe, ranks)
}

/// A ranking over the cells of a partition, with minimum 0.
#[derive(Debug, Clone)]
pub struct PartitionRanking {
    cells: Vec<(Event, Rank)>,
}

impl PartitionRanking {
    pub fn new(cells: Vec<(Event, Rank)>) -> Result<Self> {
        let (first, _) = cells
            .first()
            .ok_or_else(|| Error::NotPartition("no cells".into()))?;
        let mut covered = Event::empty(first.universe());
        for (event, _) in &cells {
            if event.is_empty() {
                return Err(Error::NotPartition("empty cell".into()));
            }
            if !covered.is_disjoint(event)? {
                return Err(Error::NotPartition(format!("cell {event} overlaps an earlier cell")));
            }
            covered = covered.union(event)?;
        }
        if !covered.is_full() {
            return Err(Error::NotPartition(format!("worlds {} are not covered", covered.complement())));
        }
        if !cells.iter().any(|(_, r)| r.is_zero()) {
            return Err(Error::NotPartition("no cell has rank 0".into()));
        }
        Ok(PartitionRanking { cells })
    }

    pub fn cells(&self) -> &[(Event, Rank)] {
        &self.cells
    }
}

/// `κ(ω | κ') = κ'(A_i) + κ(ω | A_i)` for `ω ∈ A_i`. Cells ranked `∞` may be
/// impossible under `κ`.
pub fn kappa_partition_conditionalize(kappa: &KappaFunction, input: &PartitionRanking) -> Result<KappaFunction> {
    let mut ranks = vec![Rank::Infinite; kappa.ranks.len()];
    for (event, level) in &input.cells {
        kappa.check(event)?;
        if !level.is_finite() {
            continue;
        }
        let base = kappa.finite_rank_of(event)?;
        for w in event.iter() {
            ranks[w] = kappa.ranks[w].minus(&base).plus(level);
        }
    }
    KappaFunction::new(&kappa.universe, ranks)
}

/// `κ*(·|A)`: 0 at the `A`-minimal worlds, `κ` elsewhere in `A`, `∞` outside.
fn relative_rank(kappa: &KappaFunction, event: &Event) -> Result<Vec<Rank>> {
    let best = Rank::Finite(kappa.finite_rank_of(event)?);
    Ok(kappa
        .ranks
        .iter()
        .enumerate()
        .map(|(w, r)| match (event.contains(w), *r == best) {
            (false, _) => Rank::Infinite,
            (true, true) => Rank::zero(),
            (true, false) => r.clone(),
        })
        .collect())
}

/// Adjustment in ranking form: `min(κ*(ω|A), max(n, κ*(ω|Ā)))`, `n >= 1`.
pub fn kappa_adjust(kappa: &KappaFunction, event: &Event, n: &BigUint) -> Result<KappaFunction> {
    kappa.check(event)?;
    if n.is_zero() {
        return Err(Error::InvalidArgument(
            "adjustment needs n >= 1; use contraction for n = 0".into(),
        ));
    }
    let inside = relative_rank(kappa, event)?;
    let outside = relative_rank(kappa, &event.complement())?;
    let floor = Rank::Finite(n.clone());
    let ranks = inside
        .into_iter()
        .zip(outside)
        .map(|(a, b)| a.min(b.max(floor.clone())))
        .collect();
    KappaFunction::new(&kappa.universe, ranks)
}

/// A base whose entries carry positive integer layers; higher is more
/// entrenched.
#[derive(Debug, Clone, PartialEq)]
pub struct LayeredBase {
    vocabulary: Vocabulary,
    entries: Vec<(Formula, u32)>,
}

impl LayeredBase {
    pub fn new(vocabulary: Vocabulary, entries: Vec<(Formula, u32)>) -> Result<Self> {
        let mut vocabulary = vocabulary;
        for (f, layer) in &entries {
            if *layer == 0 {
                return Err(Error::InvalidArgument(format!("layer of `{f}` must be positive")));
            }
            vocabulary.extend_with(f);
        }
        Ok(LayeredBase { vocabulary, entries })
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    pub fn entries(&self) -> &[(Formula, u32)] {
        &self.entries
    }

    /// The weighted base with `α = 1 - 2^-layer`.
    pub fn to_belief_base<S: Scalar>(&self) -> Result<BeliefBase<S>> {
        let entries = self
            .entries
            .iter()
            .map(|(f, layer)| {
                let weight = BigRational::one() - Rank::from(u64::from(*layer)).to_ratio();
                BaseEntry::new(f.clone(), S::from_ratio(&weight))
            })
            .collect();
        BeliefBase::with_vocabulary(self.vocabulary.clone(), entries)
    }
}

/// `κ(ω)` = the highest layer of a formula violated by `ω`, 0 if none.
pub fn minimal_ranking(base: &LayeredBase) -> Result<KappaFunction> {
    let universe = universe_of(&base.vocabulary)?;
    let mut ranks = vec![0u32; universe.len()];
    for (f, layer) in &base.entries {
        let sat = models(&universe, f)?;
        for (w, r) in ranks.iter_mut().enumerate() {
            if !sat.contains(w) {
                *r = (*r).max(*layer);
            }
        }
    }
    let ranks = ranks.into_iter().map(|r| Rank::from(u64::from(r))).collect();
    KappaFunction::new_unnormalized(&universe, ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditioning::condition_product;
    use crate::logic::{induced_distribution, parse_formula};
    use crate::scalar::ratio;
    use crate::uncertain::{adjust_williams, revise_partition, revise_uncertain, PartitionInput};
    use crate::conditioning::RevisionMode;
    use crate::Rational;

    fn universe() -> Arc<Universe> {
        Universe::from_labels(["w1", "w2", "w3", "w4"]).unwrap()
    }

    fn kappa(ranks: &[Option<u64>]) -> KappaFunction {
        let ranks = ranks.iter().map(|r| r.map_or(Rank::Infinite, Rank::from)).collect();
        KappaFunction::new_unnormalized(&universe(), ranks).unwrap()
    }

    fn k0() -> KappaFunction {
        kappa(&[Some(0), Some(1), Some(2), None])
    }

    fn ev(k: &KappaFunction, labels: &[&str]) -> Event {
        Event::from_labels(k.universe(), labels.iter().copied()).unwrap()
    }

    fn dist(u: &Arc<Universe>, v: &[(i64, i64)]) -> PossibilityDistribution<Rational> {
        PossibilityDistribution::new(u, v.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn dyadic_bridge() {
        let pi: PossibilityDistribution<Rational> = kappa_to_pi(&k0());
        assert_eq!(pi, dist(k0().universe(), &[(1, 1), (1, 2), (1, 4), (0, 1)]));
        assert_eq!(pi_to_kappa(&pi).unwrap(), k0());
        let zeros = kappa(&[Some(0); 4]);
        let ones: PossibilityDistribution<Rational> = kappa_to_pi(&zeros);
        assert!(ones.values().iter().all(|v| *v == ratio(1, 1)));
        assert_eq!(pi_to_kappa(&ones).unwrap(), zeros);
        let bad = dist(k0().universe(), &[(1, 1), (1, 3), (0, 1), (0, 1)]);
        assert!(matches!(pi_to_kappa(&bad), Err(Error::NotDyadic(_))));
        let f: PossibilityDistribution<f64> = kappa_to_pi(&k0());
        assert_eq!(f.values(), &[1.0, 0.5, 0.25, 0.0]);
        assert_eq!(pi_to_kappa(&f).unwrap(), k0());
    }

    #[test]
    fn spohn_conditioning() {
        let k = k0();
        let a = ev(&k, &["w2", "w3"]);
        let r = kappa_condition(&k, &a).unwrap();
        assert_eq!(r, kappa(&[None, Some(0), Some(1), None]));
        let via_pi = condition_product(&kappa_to_pi::<Rational>(&k), &a).unwrap();
        assert_eq!(kappa_to_pi::<Rational>(&r), via_pi);
        assert_eq!(kappa_condition(&k, &Event::full(k.universe())).unwrap(), k);
        assert!(kappa_condition(&k, &ev(&k, &["w4"])).is_err());
    }

    #[test]
    fn conditionalization() {
        let k = k0();
        let a = ev(&k, &["w2", "w3"]);
        let r = kappa_conditionalize(&k, &a, &n(1)).unwrap();
        assert_eq!(r, kappa(&[Some(1), Some(0), Some(1), None]));
        let via_pi = revise_uncertain(&kappa_to_pi::<Rational>(&k), &a, &ratio(1, 2), RevisionMode::Product).unwrap();
        assert_eq!(kappa_to_pi::<Rational>(&r), via_pi);
        let zero = kappa_conditionalize(&k, &a, &n(0)).unwrap();
        assert_eq!(zero, kappa(&[Some(0), Some(0), Some(1), None]));
        assert!(kappa_conditionalize(&k, &ev(&k, &["w1", "w2", "w3"]), &n(1)).is_err());
    }

    #[test]
    fn partition_conditionalization() {
        let k = k0();
        let cells = PartitionRanking::new(vec![
            (ev(&k, &["w1", "w4"]), Rank::from(0)),
            (ev(&k, &["w2", "w3"]), Rank::from(1)),
        ])
        .unwrap();
        let r = kappa_partition_conditionalize(&k, &cells).unwrap();
        assert_eq!(r, kappa(&[Some(0), Some(1), Some(2), None]));
        let pi = kappa_to_pi::<Rational>(&k);
        let input = PartitionInput::new(vec![
            (ev(&k, &["w1", "w4"]), ratio(1, 1)),
            (ev(&k, &["w2", "w3"]), ratio(1, 2)),
        ])
        .unwrap();
        assert_eq!(kappa_to_pi::<Rational>(&r), revise_partition(&pi, &input, RevisionMode::Product).unwrap());
        let single = PartitionRanking::new(vec![(Event::full(k.universe()), Rank::zero())]).unwrap();
        assert_eq!(kappa_partition_conditionalize(&k, &single).unwrap(), k);
        assert!(PartitionRanking::new(vec![(Event::full(k.universe()), Rank::from(1))]).is_err());
    }

    #[test]
    fn adjustment() {
        let k = k0();
        let a = ev(&k, &["w2", "w3"]);
        let r = kappa_adjust(&k, &a, &n(1)).unwrap();
        assert_eq!(r, kappa(&[Some(1), Some(0), Some(2), None]));
        let pi = kappa_to_pi::<Rational>(&k);
        let expected = dist(k.universe(), &[(1, 2), (1, 1), (1, 4), (0, 1)]);
        assert_eq!(kappa_to_pi::<Rational>(&r), expected);
        assert_eq!(adjust_williams(&pi, &a, &ratio(1, 2)).unwrap(), expected);
        assert_eq!(revise_uncertain(&pi, &a, &ratio(1, 2), RevisionMode::Min).unwrap(), expected);
        let big = kappa_adjust(&k, &a, &n(5)).unwrap();
        assert!(ev(&k, &["w1", "w4"]).iter().all(|w| *big.rank(w) >= Rank::from(5)));
        assert!(matches!(kappa_adjust(&k, &a, &n(0)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn minimal_ranking_examples() {
        let vocab = Vocabulary::new(["p", "q"]).unwrap();
        let layered = LayeredBase::new(
            vocab.clone(),
            vec![(parse_formula("p").unwrap(), 2), (parse_formula("q").unwrap(), 1)],
        )
        .unwrap();
        let k = minimal_ranking(&layered).unwrap();
        let u = k.universe().clone();
        let at = |label: &str| k.rank(u.world(label).unwrap()).clone();
        assert_eq!(at("p q"), Rank::from(0));
        assert_eq!(at("p -q"), Rank::from(1));
        assert_eq!(at("-p q"), Rank::from(2));
        assert_eq!(at("-p -q"), Rank::from(2));
        let induced = induced_distribution(&layered.to_belief_base::<Rational>().unwrap()).unwrap();
        assert_eq!(pi_to_kappa(&induced).unwrap(), k);
        let empty = minimal_ranking(&LayeredBase::new(vocab, vec![]).unwrap()).unwrap();
        assert!(empty.ranks().iter().all(Rank::is_zero));
        assert!(LayeredBase::new(Vocabulary::default(), vec![(parse_formula("p").unwrap(), 0)]).is_err());
    }

    #[test]
    fn rank_arithmetic() {
        assert!(Rank::from(7) < Rank::Infinite);
        assert_eq!(Rank::Infinite.plus(&Rank::from(1)), Rank::Infinite);
        assert_eq!(Rank::from(2).plus(&Rank::from(3)), Rank::from(5));
        assert_eq!(Rank::Infinite.min(Rank::from(4)), Rank::from(4));
        assert_eq!("inf".parse::<Rank>().unwrap(), Rank::Infinite);
        assert!("-1".parse::<Rank>().is_err());
    }
}
