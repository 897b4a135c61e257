//! Core data model: argumentation frameworks, argument sets, and the
//! primitive acceptability queries everything else is built from.
//!
//! A framework is a finite set of arguments plus a binary attack
//! relation. Arguments are identified by strings; identifiers are kept
//! in lexicographic (byte) order everywhere so that every derived
//! structure is deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Argument identifier. Nonempty, drawn from `[A-Za-z0-9_-]`, so that
/// every identifier survives a round trip through the text formats.
pub type ArgumentId = String;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AfError {
    #[error("unknown argument `{0}`")]
    UnknownArgument(ArgumentId),
    #[error("argument `{0}` is not part of this framework")]
    ForeignMember(ArgumentId),
    #[error("invalid argument identifier `{0}` (expected nonempty [A-Za-z0-9_-])")]
    InvalidIdentifier(String),
}

/// True when `id` is usable as an argument identifier in all supported
/// file formats.
pub fn is_valid_identifier(id: &str) -> bool {
    !id.is_empty()
        && id
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}

/// An ordered, duplicate-free set of argument identifiers.
///
/// The ordering is lexicographic on identifier bytes, which makes the
/// derived `Ord` a canonical order on sets of equal content.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArgumentSet(BTreeSet<ArgumentId>);

impl ArgumentSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_ids<I, S>(ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<ArgumentId>,
    {
        ArgumentSet(ids.into_iter().map(Into::into).collect())
    }

    pub fn insert(&mut self, id: impl Into<ArgumentId>) {
        self.0.insert(id.into());
    }

    pub fn remove(&mut self, id: &str) -> bool {
        self.0.remove(id)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.0.iter()
    }

    pub fn first(&self) -> Option<&ArgumentId> {
        self.0.iter().next()
    }

    pub fn is_subset(&self, other: &ArgumentSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ArgumentSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &ArgumentSet) -> ArgumentSet {
        ArgumentSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &ArgumentSet) -> ArgumentSet {
        ArgumentSet(self.0.intersection(&other.0).cloned().collect())
    }
}

impl<S: Into<ArgumentId>> FromIterator<S> for ArgumentSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        ArgumentSet(iter.into_iter().map(Into::into).collect())
    }
}

impl<'a> IntoIterator for &'a ArgumentSet {
    type Item = &'a ArgumentId;
    type IntoIter = std::collections::btree_set::Iter<'a, ArgumentId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

/// A finite argumentation framework.
///
/// Arguments are stored sorted; attacks are stored as sorted index
/// pairs into the argument table, so iteration order is the canonical
/// (attacker, target) lexicographic order. Optional display labels are
/// metadata only: they are ignored by all algorithms and excluded from
/// equality.
#[derive(Debug, Clone, Default)]
pub struct ArgumentationFramework {
    args: Vec<ArgumentId>,
    labels: BTreeMap<ArgumentId, String>,
    attacks: Vec<(u32, u32)>,
    attackers: Vec<Vec<u32>>,
    targets: Vec<Vec<u32>>,
}

impl PartialEq for ArgumentationFramework {
    fn eq(&self, other: &Self) -> bool {
        self.args == other.args && self.attacks == other.attacks
    }
}

impl Eq for ArgumentationFramework {}

impl std::hash::Hash for ArgumentationFramework {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.args.hash(state);
        self.attacks.hash(state);
    }
}

impl ArgumentationFramework {
    /// Builds a framework from argument identifiers and attack pairs.
    /// Duplicate declarations are idempotent; attack endpoints must be
    /// declared arguments.
    pub fn new<I, S, P, A, B>(args: I, attacks: P) -> Result<Self, AfError>
    where
        I: IntoIterator<Item = S>,
        S: Into<ArgumentId>,
        P: IntoIterator<Item = (A, B)>,
        A: Into<ArgumentId>,
        B: Into<ArgumentId>,
    {
        let mut names: Vec<ArgumentId> = Vec::new();
        for arg in args {
            let id = arg.into();
            if !is_valid_identifier(&id) {
                return Err(AfError::InvalidIdentifier(id));
            }
            names.push(id);
        }
        names.sort();
        names.dedup();

        let index: BTreeMap<&str, u32> = names
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i as u32))
            .collect();

        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (a, b) in attacks {
            let a = a.into();
            let b = b.into();
            let ai = *index
                .get(a.as_str())
                .ok_or_else(|| AfError::UnknownArgument(a.clone()))?;
            let bi = *index
                .get(b.as_str())
                .ok_or_else(|| AfError::UnknownArgument(b.clone()))?;
            pairs.push((ai, bi));
        }
        pairs.sort();
        pairs.dedup();

        let mut attackers = vec![Vec::new(); names.len()];
        let mut targets = vec![Vec::new(); names.len()];
        for &(a, b) in &pairs {
            targets[a as usize].push(b);
            attackers[b as usize].push(a);
        }

        Ok(ArgumentationFramework {
            args: names,
            labels: BTreeMap::new(),
            attacks: pairs,
            attackers,
            targets,
        })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Attaches a display label to an argument.
    pub fn with_label(mut self, id: &str, text: &str) -> Result<Self, AfError> {
        if !self.contains(id) {
            return Err(AfError::UnknownArgument(id.to_owned()));
        }
        self.labels.insert(id.to_owned(), text.to_owned());
        Ok(self)
    }

    pub fn label(&self, id: &str) -> Option<&str> {
        self.labels.get(id).map(String::as_str)
    }

    pub fn args(&self) -> &[ArgumentId] {
        &self.args
    }

    pub fn arg_count(&self) -> usize {
        self.args.len()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index_of(id).is_some()
    }

    /// Attacks in canonical (attacker, target) order.
    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> {
        self.attacks
            .iter()
            .map(|&(a, b)| (&self.args[a as usize], &self.args[b as usize]))
    }

    pub fn attacks_pair(&self, attacker: &str, target: &str) -> bool {
        match (self.index_of(attacker), self.index_of(target)) {
            (Some(a), Some(b)) => self.attacks.binary_search(&(a, b)).is_ok(),
            _ => false,
        }
    }

    pub fn argument_set(&self) -> ArgumentSet {
        self.args.iter().cloned().collect()
    }

    pub(crate) fn index_of(&self, id: &str) -> Option<u32> {
        self.args
            .binary_search_by(|probe| probe.as_str().cmp(id))
            .ok()
            .map(|i| i as u32)
    }

    pub(crate) fn attackers_by_index(&self) -> &[Vec<u32>] {
        &self.attackers
    }

    pub(crate) fn targets_by_index(&self) -> &[Vec<u32>] {
        &self.targets
    }

    pub(crate) fn set_from_indices<I: IntoIterator<Item = u32>>(&self, indices: I) -> ArgumentSet {
        indices
            .into_iter()
            .map(|i| self.args[i as usize].clone())
            .collect()
    }

    /// Maps a set's members to argument indices, rejecting members that
    /// do not belong to this framework.
    pub(crate) fn indices_of(&self, set: &ArgumentSet) -> Result<Vec<u32>, AfError> {
        set.iter()
            .map(|id| {
                self.index_of(id)
                    .ok_or_else(|| AfError::ForeignMember(id.clone()))
            })
            .collect()
    }

    /// The set of arguments attacking `id`.
    pub fn attackers(&self, id: &str) -> Result<ArgumentSet, AfError> {
        let idx = self
            .index_of(id)
            .ok_or_else(|| AfError::UnknownArgument(id.to_owned()))?;
        Ok(self.set_from_indices(self.attackers[idx as usize].iter().copied()))
    }

    /// The set of arguments attacked by `id`.
    pub fn targets(&self, id: &str) -> Result<ArgumentSet, AfError> {
        let idx = self
            .index_of(id)
            .ok_or_else(|| AfError::UnknownArgument(id.to_owned()))?;
        Ok(self.set_from_indices(self.targets[idx as usize].iter().copied()))
    }

    /// True when no member of `set` attacks a member of `set`
    /// (self-attacks included).
    pub fn is_conflict_free(&self, set: &ArgumentSet) -> Result<bool, AfError> {
        let indices = self.indices_of(set)?;
        let member = self.membership_mask(&indices);
        for &a in &indices {
            if self.targets[a as usize].iter().any(|&t| member[t as usize]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when `set` defends `id`: every attacker of `id` is attacked
    /// by some member of `set`.
    pub fn defends(&self, set: &ArgumentSet, id: &str) -> Result<bool, AfError> {
        let idx = self
            .index_of(id)
            .ok_or_else(|| AfError::UnknownArgument(id.to_owned()))?;
        let indices = self.indices_of(set)?;
        let attacked = self.attacked_mask(&indices);
        Ok(self.attackers[idx as usize]
            .iter()
            .all(|&b| attacked[b as usize]))
    }

    /// The characteristic function: all arguments defended by `set`.
    pub fn characteristic(&self, set: &ArgumentSet) -> Result<ArgumentSet, AfError> {
        let indices = self.indices_of(set)?;
        let attacked = self.attacked_mask(&indices);
        let defended = (0..self.args.len() as u32).filter(|&a| {
            self.attackers[a as usize]
                .iter()
                .all(|&b| attacked[b as usize])
        });
        Ok(self.set_from_indices(defended))
    }

    fn membership_mask(&self, indices: &[u32]) -> Vec<bool> {
        let mut mask = vec![false; self.args.len()];
        for &i in indices {
            mask[i as usize] = true;
        }
        mask
    }

    /// Mask of arguments attacked by the given members.
    fn attacked_mask(&self, indices: &[u32]) -> Vec<bool> {
        let mut mask = vec![false; self.args.len()];
        for &i in indices {
            for &t in &self.targets[i as usize] {
                mask[t as usize] = true;
            }
        }
        mask
    }
}
