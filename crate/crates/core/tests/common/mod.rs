//! Shared generators and brute-force oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's own evaluation paths: worlds
//! are enumerated here with plain bit masks, and formulas are evaluated
//! through `Formula::eval` only.

#![allow(dead_code)]

use std::sync::Arc;

use posrev::{ratio, BaseEntry, Base, Distribution, Event, Formula, Rational, Universe, Vocabulary};
use rand::seq::SliceRandom;
use rand::Rng;

pub const ATOMS: [&str; 4] = ["p", "q", "r", "s"];

pub fn grid() -> Vec<Rational> {
    (0..=4).map(|i| ratio(i, 4)).collect()
}

pub fn weights() -> Vec<Rational> {
    (1..=4).map(|i| ratio(i, 4)).collect()
}

pub fn labels4() -> Arc<Universe> {
    Universe::from_labels(["w1", "w2", "w3", "w4"]).unwrap()
}

/// All normalized distributions over `universe` with values in `levels`.
pub fn normalized_distributions(universe: &Arc<Universe>, levels: &[Rational]) -> Vec<Distribution> {
    let n = universe.len();
    let k = levels.len();
    let mut out = Vec::new();
    for code in 0..k.pow(n as u32) {
        let values: Vec<Rational> = (0..n).map(|i| levels[code / k.pow(i as u32) % k].clone()).collect();
        if values.iter().any(|v| *v == ratio(1, 1)) {
            out.push(Distribution::new(universe, values).unwrap());
        }
    }
    out
}

pub fn events(universe: &Arc<Universe>) -> Vec<Event> {
    Event::all(universe).collect()
}

/// A random formula of depth at most `depth` over `atoms`.
pub fn random_formula<R: Rng>(rng: &mut R, atoms: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        let a = Formula::atom(*atoms.choose(rng).unwrap());
        return if rng.gen_bool(0.4) { a.not() } else { a };
    }
    match rng.gen_range(0..4) {
        0 => random_formula(rng, atoms, depth - 1).not(),
        1 => random_formula(rng, atoms, depth - 1).and(random_formula(rng, atoms, depth - 1)),
        2 => random_formula(rng, atoms, depth - 1).or(random_formula(rng, atoms, depth - 1)),
        _ => random_formula(rng, atoms, depth - 1).implies(random_formula(rng, atoms, depth - 1)),
    }
}

/// A random base: up to 4 atoms, up to 5 formulas of depth up to 3, weights
/// in {1/4, 1/2, 3/4, 1}. The vocabulary lists every drawn atom.
pub fn random_base<R: Rng>(rng: &mut R) -> Base {
    let k = rng.gen_range(1..=4);
    let atoms = &ATOMS[..k];
    let n = rng.gen_range(1..=5);
    let ws = weights();
    let entries = (0..n)
        .map(|_| BaseEntry::new(random_formula(rng, atoms, 3), ws.choose(rng).unwrap().clone()))
        .collect();
    Base::with_vocabulary(Vocabulary::new(atoms.iter().copied()).unwrap(), entries).unwrap()
}

/// Truth assignment of world `w` over `atoms` (first atom = high bit).
pub fn truth(atoms: &[String], w: usize) -> impl Fn(&str) -> bool + '_ {
    let k = atoms.len();
    move |name: &str| {
        let j = atoms.iter().position(|a| a == name).expect("atom in vocabulary");
        w >> (k - 1 - j) & 1 == 1
    }
}

/// Least specific distribution of a base, enumerated directly:
/// `π(ω) = min over violated entries of 1 - α`.
pub fn oracle_pi(base: &Base, atoms: &[String]) -> Vec<Rational> {
    (0..1usize << atoms.len())
        .map(|w| {
            let t = truth(atoms, w);
            base.entries()
                .iter()
                .filter(|e| !e.formula.eval(&t))
                .map(|e| ratio(1, 1) - e.weight.clone())
                .min()
                .unwrap_or_else(|| ratio(1, 1))
        })
        .collect()
}

pub fn oracle_models(formula: &Formula, atoms: &[String]) -> Vec<bool> {
    (0..1usize << atoms.len()).map(|w| formula.eval(&truth(atoms, w))).collect()
}

pub fn oracle_possibility(pi: &[Rational], members: &[bool]) -> Rational {
    pi.iter()
        .zip(members)
        .filter(|(_, m)| **m)
        .map(|(v, _)| v.clone())
        .max()
        .unwrap_or_else(|| ratio(0, 1))
}

pub fn oracle_necessity(pi: &[Rational], members: &[bool]) -> Rational {
    let outside: Vec<bool> = members.iter().map(|m| !m).collect();
    ratio(1, 1) - oracle_possibility(pi, &outside)
}

/// Min-conditioning written from its definition.
pub fn oracle_condition_min(pi: &[Rational], members: &[bool]) -> Vec<Rational> {
    let top = oracle_possibility(pi, members);
    pi.iter()
        .zip(members)
        .map(|(v, m)| match (m, *v == top) {
            (false, _) => ratio(0, 1),
            (true, true) => ratio(1, 1),
            (true, false) => v.clone(),
        })
        .collect()
}

/// Vocabulary of `base` extended with the atoms of `extra`.
pub fn atoms_with(base: &Base, extra: &[&Formula]) -> Vec<String> {
    let mut v = base.vocabulary().clone();
    for f in extra {
        v.extend_with(f);
    }
    v.atoms().to_vec()
}
