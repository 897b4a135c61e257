//! Acceptability semantics.
//!
//! The grounded extension is the least fixpoint of the characteristic
//! function, computed incrementally: arguments whose attackers are all
//! OUT become IN, arguments with an IN attacker become OUT, until
//! nothing changes. Everything else is enumerated by a three-valued
//! labelling search (IN / OUT / UNDEC) with constraint propagation:
//!
//! 1. an IN argument forces all its attackers and targets OUT;
//! 2. an OUT argument with a single remaining candidate attacker forces
//!    that attacker IN;
//! 3. an UNDEC argument rejects IN attackers and must keep at least one
//!    UNDEC attacker.
//!
//! Propagation only prunes; every full assignment is re-checked against
//! the labelling laws before it is reported, so the search is sound
//! even if a rule is too weak. Admissible sets are enumerated by a
//! separate conflict-free subset search, and preferred extensions are
//! the inclusion-maximal complete ones.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::af::{AfError, ArgumentId, ArgumentSet, ArgumentationFramework};

/// Default cap on the number of arguments for the labelling search.
pub const DEFAULT_MAX_ARGS: usize = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("framework has {args} arguments, above the solver bound {limit}")]
    BoundExceeded { args: usize, limit: usize },
    #[error(transparent)]
    Af(#[from] AfError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemanticsKind {
    Grounded,
    Admissible,
    Complete,
    Preferred,
    Stable,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 5] = [
        SemanticsKind::Grounded,
        SemanticsKind::Admissible,
        SemanticsKind::Complete,
        SemanticsKind::Preferred,
        SemanticsKind::Stable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsKind::Grounded => "grounded",
            SemanticsKind::Admissible => "admissible",
            SemanticsKind::Complete => "complete",
            SemanticsKind::Preferred => "preferred",
            SemanticsKind::Stable => "stable",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown semantics `{0}` (expected grounded, admissible, complete, preferred, or stable)")]
pub struct UnknownSemantics(String);

impl FromStr for SemanticsKind {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SemanticsKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownSemantics(s.to_owned()))
    }
}

/// Three-valued argument status in a labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Label {
    In,
    Out,
    Undec,
}

/// A total assignment of labels to arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labelling {
    assignment: BTreeMap<ArgumentId, Label>,
}

impl Labelling {
    pub fn label(&self, id: &str) -> Option<Label> {
        self.assignment.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgumentId, Label)> {
        self.assignment.iter().map(|(id, &l)| (id, l))
    }

    pub fn in_set(&self) -> ArgumentSet {
        self.with_label(Label::In)
    }

    pub fn out_set(&self) -> ArgumentSet {
        self.with_label(Label::Out)
    }

    pub fn undec_set(&self) -> ArgumentSet {
        self.with_label(Label::Undec)
    }

    fn with_label(&self, wanted: Label) -> ArgumentSet {
        self.assignment
            .iter()
            .filter(|(_, &l)| l == wanted)
            .map(|(id, _)| id.clone())
            .collect()
    }
}

/// A family of extensions under one semantics, kept in canonical order:
/// by cardinality, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSet {
    semantics: SemanticsKind,
    extensions: Vec<ArgumentSet>,
}

impl ExtensionSet {
    pub fn new(semantics: SemanticsKind, mut extensions: Vec<ArgumentSet>) -> Self {
        extensions.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        extensions.dedup();
        ExtensionSet {
            semantics,
            extensions,
        }
    }

    pub fn semantics(&self) -> SemanticsKind {
        self.semantics
    }

    pub fn extensions(&self) -> &[ArgumentSet] {
        &self.extensions
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentSet> {
        self.extensions.iter()
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn contains(&self, set: &ArgumentSet) -> bool {
        self.extensions
            .binary_search_by(|e| e.len().cmp(&set.len()).then_with(|| e.cmp(set)))
            .is_ok()
    }
}

/// The grounded extension: the least fixpoint of the characteristic
/// function, reached by iterating "label IN everything whose attackers
/// are all OUT" from the unattacked arguments. Runs in `O(|args| +
/// |attacks|)`.
pub fn grounded(af: &ArgumentationFramework) -> ArgumentSet {
    const UNDECIDED: u8 = 0;
    const IN: u8 = 1;
    const OUT: u8 = 2;

    let n = af.arg_count();
    let attackers = af.attackers_by_index();
    let targets = af.targets_by_index();
    // Attackers not yet labelled OUT; an argument with none left is IN.
    let mut remaining: Vec<usize> = attackers.iter().map(Vec::len).collect();
    let mut status = vec![UNDECIDED; n];
    let mut queue: VecDeque<u32> = (0..n as u32)
        .filter(|&a| remaining[a as usize] == 0)
        .collect();

    while let Some(a) = queue.pop_front() {
        if status[a as usize] != UNDECIDED {
            continue;
        }
        status[a as usize] = IN;
        for &t in &targets[a as usize] {
            if status[t as usize] != UNDECIDED {
                continue;
            }
            status[t as usize] = OUT;
            for &u in &targets[t as usize] {
                remaining[u as usize] -= 1;
                if remaining[u as usize] == 0 && status[u as usize] == UNDECIDED {
                    queue.push_back(u);
                }
            }
        }
    }

    af.set_from_indices((0..n as u32).filter(|&a| status[a as usize] == IN))
}

/// Enumerates every extension of `af` under `kind`, with the default
/// argument bound for search-based semantics.
pub fn enumerate(
    af: &ArgumentationFramework,
    kind: SemanticsKind,
) -> Result<ExtensionSet, SolverError> {
    enumerate_with_limit(af, kind, DEFAULT_MAX_ARGS)
}

pub fn enumerate_with_limit(
    af: &ArgumentationFramework,
    kind: SemanticsKind,
    max_args: usize,
) -> Result<ExtensionSet, SolverError> {
    // Grounded is polynomial and unique; it ignores the search bound.
    if kind == SemanticsKind::Grounded {
        return Ok(ExtensionSet::new(kind, vec![grounded(af)]));
    }
    check_limit(af, max_args)?;
    let sets = match kind {
        SemanticsKind::Grounded => unreachable!(),
        SemanticsKind::Admissible => admissible_sets(af),
        SemanticsKind::Complete => complete_sets(af),
        SemanticsKind::Stable => stable_sets(af),
        SemanticsKind::Preferred => {
            let complete = complete_sets(af);
            complete
                .iter()
                .filter(|s| {
                    !complete
                        .iter()
                        .any(|t| *s != t && s.is_subset(t))
                })
                .cloned()
                .collect()
        }
    };
    Ok(ExtensionSet::new(kind, sets))
}

/// All complete labellings, canonically ordered by their IN sets. The
/// IN sets are exactly the complete extensions.
pub fn complete_labellings(
    af: &ArgumentationFramework,
) -> Result<Vec<Labelling>, SolverError> {
    complete_labellings_with_limit(af, DEFAULT_MAX_ARGS)
}

pub fn complete_labellings_with_limit(
    af: &ArgumentationFramework,
    max_args: usize,
) -> Result<Vec<Labelling>, SolverError> {
    check_limit(af, max_args)?;
    let mut solutions = search_labellings(af, true);
    solutions.sort_by_key(|cells| {
        let in_set: Vec<u32> = in_indices(cells);
        (in_set.len(), in_set)
    });
    Ok(solutions
        .into_iter()
        .map(|cells| Labelling {
            assignment: af
                .args()
                .iter()
                .enumerate()
                .map(|(i, id)| (id.clone(), cell_label(cells[i])))
                .collect(),
        })
        .collect())
}

/// Checks whether `set` is an extension of `af` under `kind`. All
/// checks are polynomial except preferred, whose maximality test
/// enumerates the complete extensions and so respects the bound.
pub fn verify(
    af: &ArgumentationFramework,
    set: &ArgumentSet,
    kind: SemanticsKind,
) -> Result<bool, SolverError> {
    verify_with_limit(af, set, kind, DEFAULT_MAX_ARGS)
}

pub fn verify_with_limit(
    af: &ArgumentationFramework,
    set: &ArgumentSet,
    kind: SemanticsKind,
    max_args: usize,
) -> Result<bool, SolverError> {
    match kind {
        SemanticsKind::Admissible => {
            let f = af.characteristic(set)?;
            Ok(af.is_conflict_free(set)? && set.is_subset(&f))
        }
        SemanticsKind::Complete => {
            let f = af.characteristic(set)?;
            Ok(af.is_conflict_free(set)? && f == *set)
        }
        SemanticsKind::Stable => {
            if !af.is_conflict_free(set)? {
                return Ok(false);
            }
            let mut attacked = ArgumentSet::new();
            for id in set {
                attacked = attacked.union(&af.targets(id)?);
            }
            Ok(af
                .args()
                .iter()
                .all(|a| set.contains(a) || attacked.contains(a)))
        }
        SemanticsKind::Grounded => {
            af.indices_of(set)?;
            Ok(*set == grounded(af))
        }
        SemanticsKind::Preferred => {
            if !verify_with_limit(af, set, SemanticsKind::Complete, max_args)? {
                return Ok(false);
            }
            let complete = enumerate_with_limit(af, SemanticsKind::Complete, max_args)?;
            let maximal = !complete.iter().any(|t| t != set && set.is_subset(t));
            Ok(maximal)
        }
    }
}

fn check_limit(af: &ArgumentationFramework, max_args: usize) -> Result<(), SolverError> {
    if af.arg_count() > max_args {
        Err(SolverError::BoundExceeded {
            args: af.arg_count(),
            limit: max_args,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Free,
    In,
    Out,
    Undec,
}

fn cell_label(c: Cell) -> Label {
    match c {
        Cell::In => Label::In,
        Cell::Out => Label::Out,
        Cell::Undec => Label::Undec,
        Cell::Free => unreachable!("solutions are total"),
    }
}

fn in_indices(cells: &[Cell]) -> Vec<u32> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == Cell::In)
        .map(|(i, _)| i as u32)
        .collect()
}

fn complete_sets(af: &ArgumentationFramework) -> Vec<ArgumentSet> {
    search_labellings(af, true)
        .into_iter()
        .map(|cells| af.set_from_indices(in_indices(&cells)))
        .collect()
}

fn stable_sets(af: &ArgumentationFramework) -> Vec<ArgumentSet> {
    search_labellings(af, false)
        .into_iter()
        .map(|cells| af.set_from_indices(in_indices(&cells)))
        .collect()
}

struct SearchCtx<'a> {
    attackers: &'a [Vec<u32>],
    targets: &'a [Vec<u32>],
    allow_undec: bool,
}

/// Depth-first labelling search. With `allow_undec` the solutions are
/// exactly the complete labellings; without it they are the stable
/// ones (complete labellings with nothing UNDEC).
fn search_labellings(af: &ArgumentationFramework, allow_undec: bool) -> Vec<Vec<Cell>> {
    let ctx = SearchCtx {
        attackers: af.attackers_by_index(),
        targets: af.targets_by_index(),
        allow_undec,
    };
    let mut solutions = Vec::new();
    branch(&ctx, vec![Cell::Free; af.arg_count()], &mut solutions);
    solutions
}

fn branch(ctx: &SearchCtx, mut cells: Vec<Cell>, solutions: &mut Vec<Vec<Cell>>) {
    if !propagate(ctx, &mut cells) {
        return;
    }
    match cells.iter().position(|&c| c == Cell::Free) {
        None => {
            if legal(ctx, &cells) {
                solutions.push(cells);
            }
        }
        Some(i) => {
            let mut options = vec![Cell::In, Cell::Out];
            if ctx.allow_undec {
                options.push(Cell::Undec);
            }
            for option in options {
                let mut next = cells.clone();
                next[i] = option;
                branch(ctx, next, solutions);
            }
        }
    }
}

/// Applies the propagation rules to a fixed point. Returns false on
/// contradiction. Every forced label is implied by the partial
/// assignment, so no solution is lost.
fn propagate(ctx: &SearchCtx, cells: &mut [Cell]) -> bool {
    loop {
        let mut changed = false;
        for a in 0..cells.len() {
            let mut n_in = 0usize;
            let mut n_free = 0usize;
            let mut n_undec = 0usize;
            let mut last_free = usize::MAX;
            for &b in &ctx.attackers[a] {
                match cells[b as usize] {
                    Cell::In => n_in += 1,
                    Cell::Out => {}
                    Cell::Undec => n_undec += 1,
                    Cell::Free => {
                        n_free += 1;
                        last_free = b as usize;
                    }
                }
            }
            match cells[a] {
                Cell::In => {
                    if n_in > 0 || n_undec > 0 {
                        return false;
                    }
                    if n_free > 0 {
                        for &b in &ctx.attackers[a] {
                            if cells[b as usize] == Cell::Free {
                                cells[b as usize] = Cell::Out;
                                changed = true;
                            }
                        }
                    }
                    // Anything attacked by an IN argument is OUT.
                    for &t in &ctx.targets[a] {
                        match cells[t as usize] {
                            Cell::In | Cell::Undec => return false,
                            Cell::Free => {
                                cells[t as usize] = Cell::Out;
                                changed = true;
                            }
                            Cell::Out => {}
                        }
                    }
                }
                Cell::Out => {
                    if n_in == 0 {
                        match n_free {
                            0 => return false,
                            1 => {
                                cells[last_free] = Cell::In;
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
                Cell::Undec => {
                    if n_in > 0 {
                        return false;
                    }
                    if n_undec == 0 {
                        match n_free {
                            0 => return false,
                            1 => {
                                // The last candidate cannot be IN (the
                                // argument is UNDEC) nor OUT (all
                                // attackers OUT would force IN).
                                cells[last_free] = Cell::Undec;
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
                Cell::Free => {
                    if n_in > 0 {
                        cells[a] = Cell::Out;
                        changed = true;
                    } else if n_free == 0 && n_undec == 0 {
                        cells[a] = Cell::In;
                        changed = true;
                    } else if n_free == 0 {
                        // No IN attacker, all attackers decided, some
                        // UNDEC: the argument can only be UNDEC.
                        if ctx.allow_undec {
                            cells[a] = Cell::Undec;
                            changed = true;
                        } else {
                            return false;
                        }
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Full labelling-law check on a total assignment: IN iff all attackers
/// OUT, OUT iff some attacker IN.
fn legal(ctx: &SearchCtx, cells: &[Cell]) -> bool {
    for a in 0..cells.len() {
        let all_out = ctx.attackers[a]
            .iter()
            .all(|&b| cells[b as usize] == Cell::Out);
        let any_in = ctx.attackers[a]
            .iter()
            .any(|&b| cells[b as usize] == Cell::In);
        let ok = match cells[a] {
            Cell::In => all_out,
            Cell::Out => any_in,
            Cell::Undec => !all_out && !any_in,
            Cell::Free => false,
        };
        if !ok || (all_out && cells[a] != Cell::In) || (any_in && cells[a] != Cell::Out) {
            return false;
        }
    }
    true
}

/// Enumerates admissible sets by a conflict-free subset search with a
/// defense check on each candidate. Arguments with an unattackable
/// attacker can never be defended and are skipped outright.
fn admissible_sets(af: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let n = af.arg_count();
    let attackers = af.attackers_by_index();
    let targets = af.targets_by_index();
    let undefendable: Vec<bool> = (0..n)
        .map(|a| {
            attackers[a]
                .iter()
                .any(|&b| attackers[b as usize].is_empty())
        })
        .collect();
    let self_attacking: Vec<bool> = (0..n)
        .map(|a| targets[a].contains(&(a as u32)))
        .collect();

    struct State<'a> {
        attackers: &'a [Vec<u32>],
        targets: &'a [Vec<u32>],
        undefendable: &'a [bool],
        self_attacking: &'a [bool],
        chosen: Vec<u32>,
        member: Vec<bool>,
        // How many chosen arguments attack each argument.
        attacked_by: Vec<u32>,
        found: Vec<Vec<u32>>,
    }

    fn recurse(s: &mut State, i: usize) {
        let n = s.member.len();
        if i == n {
            let defended = s.chosen.iter().all(|&c| {
                s.attackers[c as usize]
                    .iter()
                    .all(|&b| s.attacked_by[b as usize] > 0)
            });
            if defended {
                s.found.push(s.chosen.clone());
            }
            return;
        }
        recurse(s, i + 1);
        let conflict = s.self_attacking[i]
            || s.undefendable[i]
            || s.attacked_by[i] > 0
            || s.targets[i].iter().any(|&t| s.member[t as usize]);
        if !conflict {
            s.chosen.push(i as u32);
            s.member[i] = true;
            for &t in &s.targets[i] {
                s.attacked_by[t as usize] += 1;
            }
            recurse(s, i + 1);
            for &t in &s.targets[i] {
                s.attacked_by[t as usize] -= 1;
            }
            s.member[i] = false;
            s.chosen.pop();
        }
    }

    let mut state = State {
        attackers,
        targets,
        undefendable: &undefendable,
        self_attacking: &self_attacking,
        chosen: Vec::new(),
        member: vec![false; n],
        attacked_by: vec![0; n],
        found: Vec::new(),
    };
    recurse(&mut state, 0);
    state
        .found
        .into_iter()
        .map(|ids| af.set_from_indices(ids))
        .collect()
}
