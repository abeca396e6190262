//! Finite sets of worlds and events over them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest atom vocabulary for which the full set of truth assignments is
/// enumerated.
pub const MAX_ATOMS: usize = 16;

/// A finite, ordered set of worlds.
///
/// A universe is either a list of explicit labels or the `2^k` truth
/// assignments over `k` declared atoms. In the second case world `i` assigns
/// atom `j` the bit `k - 1 - j` of `i`, so the first atom is the most
/// significant bit and the canonical label is the bit-string.
#[derive(Debug, Clone)]
pub struct Universe {
    labels: Vec<String>,
    atoms: Option<Vec<String>>,
    index: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.atoms == other.atoms
    }
}

impl Eq for Universe {}

pub fn is_atom_name(name: &str) -> bool {
    let mut bytes = name.bytes();
    matches!(bytes.next(), Some(b'a'..=b'z'))
        && bytes.all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

impl Universe {
    pub fn from_labels<I, T>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.contains(':') {
                return Err(Error::Universe(format!("invalid world label `{label}`")));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::Universe(format!("duplicate world label `{label}`")));
            }
        }
        Ok(Arc::new(Universe {
            labels,
            atoms: None,
            index,
        }))
    }

    pub fn from_atoms<I, T>(atoms: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.len() > MAX_ATOMS {
            return Err(Error::GuardExceeded(format!(
                "{} atoms declared, at most {MAX_ATOMS} can be enumerated",
                atoms.len()
            )));
        }
        for (i, atom) in atoms.iter().enumerate() {
            if !is_atom_name(atom) {
                return Err(Error::Universe(format!("invalid atom name `{atom}`")));
            }
            if atoms[..i].contains(atom) {
                return Err(Error::Universe(format!("duplicate atom `{atom}`")));
            }
        }
        let k = atoms.len();
        let labels: Vec<String> = (0..1usize << k)
            .map(|w| (0..k).map(|j| if w >> (k - 1 - j) & 1 == 1 { '1' } else { '0' }).collect())
            .collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Ok(Arc::new(Universe {
            labels,
            atoms: Some(atoms),
            index,
        }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn atoms(&self) -> Option<&[String]> {
        self.atoms.as_deref()
    }

    pub fn label(&self, world: usize) -> &str {
        &self.labels[world]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Truth value of atom number `atom` in `world`; `None` for label universes.
    pub fn truth(&self, world: usize, atom: usize) -> Option<bool> {
        let k = self.atoms.as_ref()?.len();
        Some(world >> (k - 1 - atom) & 1 == 1)
    }

    pub fn assignment(&self, world: usize) -> Option<Vec<bool>> {
        let k = self.atoms.as_ref()?.len();
        Some((0..k).map(|j| world >> (k - 1 - j) & 1 == 1).collect())
    }

    /// Signed-literal rendering of an atom world, e.g. `p -q`.
    pub fn literal_label(&self, world: usize) -> String {
        match &self.atoms {
            Some(atoms) if !atoms.is_empty() => atoms
                .iter()
                .enumerate()
                .map(|(j, a)| {
                    if self.truth(world, j) == Some(true) {
                        a.clone()
                    } else {
                        format!("-{a}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" "),
            _ => self.labels[world].clone(),
        }
    }

    /// Looks up a world by label. Atom universes also accept a full
    /// signed-literal list such as `p -q` (in any order).
    pub fn world(&self, label: &str) -> Option<usize> {
        let label = label.trim();
        if let Some(&i) = self.index.get(label) {
            return Some(i);
        }
        let atoms = self.atoms.as_ref()?;
        let k = atoms.len();
        let mut seen = vec![None; k];
        for lit in label.split_whitespace() {
            let (name, value) = match lit.strip_prefix('-').or_else(|| lit.strip_prefix('!')) {
                Some(name) => (name, false),
                None => (lit, true),
            };
            let j = atoms.iter().position(|a| a == name)?;
            if seen[j].replace(value).is_some() {
                return None;
            }
        }
        let mut world = 0usize;
        for (j, v) in seen.into_iter().enumerate() {
            if v? {
                world |= 1 << (k - 1 - j);
            }
        }
        Some(world)
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

pub(crate) fn check_same(a: &Arc<Universe>, b: &Arc<Universe>) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// A subset of a universe's worlds.
#[derive(Clone)]
pub struct Event {
    universe: Arc<Universe>,
    members: Vec<bool>,
}

impl PartialEq for Event {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.members == other.members
    }
}

impl Eq for Event {}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|w| self.universe.label(w)))
            .finish()
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.iter().map(|w| self.universe.label(w)).collect();
        write!(f, "{{{}}}", labels.join(", "))
    }
}

impl Event {
    pub fn empty(universe: &Arc<Universe>) -> Self {
        Event {
            universe: universe.clone(),
            members: vec![false; universe.len()],
        }
    }

    pub fn full(universe: &Arc<Universe>) -> Self {
        Event {
            universe: universe.clone(),
            members: vec![true; universe.len()],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: &Arc<Universe>, worlds: I) -> Result<Self> {
        let mut event = Self::empty(universe);
        for w in worlds {
            if w >= universe.len() {
                return Err(Error::Universe(format!("world index {w} out of range")));
            }
            event.members[w] = true;
        }
        Ok(event)
    }

    pub fn from_labels<I, T>(universe: &Arc<Universe>, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let mut event = Self::empty(universe);
        for label in labels {
            let label = label.as_ref();
            let w = universe
                .world(label)
                .ok_or_else(|| Error::Universe(format!("unknown world `{label}`")))?;
            event.members[w] = true;
        }
        Ok(event)
    }

    /// Builds an event from a membership bitmask (bit `i` = world `i`).
    pub fn from_mask(universe: &Arc<Universe>, mask: u64) -> Self {
        Event {
            universe: universe.clone(),
            members: (0..universe.len()).map(|i| i < 64 && mask >> i & 1 == 1).collect(),
        }
    }

    pub fn from_predicate(universe: &Arc<Universe>, pred: impl Fn(usize) -> bool) -> Self {
        Event {
            universe: universe.clone(),
            members: (0..universe.len()).map(pred).collect(),
        }
    }

    /// Every event of a universe with at most 16 worlds, in bitmask order.
    pub fn all(universe: &Arc<Universe>) -> impl Iterator<Item = Event> + '_ {
        assert!(universe.len() <= 16, "event enumeration is limited to 16 worlds");
        (0..1u64 << universe.len()).map(move |m| Event::from_mask(universe, m))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, world: usize) -> bool {
        self.members[world]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn complement(&self) -> Event {
        Event {
            universe: self.universe.clone(),
            members: self.members.iter().map(|m| !m).collect(),
        }
    }

    fn zip_with(&self, other: &Event, f: impl Fn(bool, bool) -> bool) -> Result<Event> {
        check_same(&self.universe, &other.universe)?;
        Ok(Event {
            universe: self.universe.clone(),
            members: self.members.iter().zip(&other.members).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn intersection(&self, other: &Event) -> Result<Event> {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Event) -> Result<Event> {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn is_disjoint(&self, other: &Event) -> Result<bool> {
        Ok(self.intersection(other)?.is_empty())
    }

    pub fn is_subset(&self, other: &Event) -> Result<bool> {
        check_same(&self.universe, &other.universe)?;
        Ok(self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b))
    }
}
