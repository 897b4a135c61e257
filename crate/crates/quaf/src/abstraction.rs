//! Partition abstraction of argumentation frameworks.
//!
//! A partition of the arguments induces a quotient framework: one
//! abstract argument per block, with an abstract attack `(B1, B2)`
//! exactly when some member of `B1` attacks some member of `B2`
//! (self-attacks appear when a block contains an internal conflict).
//! The abstraction map `alpha` sends a set of arguments to the blocks
//! it touches; the concretisation `gamma` sends a set of blocks to the
//! union of their members. Between the powerset lattices these two
//! always form a Galois insertion, which [`partition_galois`] verifies
//! explicitly.
//!
//! A partition is *sound* for a semantics when every concrete extension
//! survives abstraction (its image is an abstract extension), and
//! *faithful* when additionally no spurious abstract extension exists.
//! [`classify`] computes the verdict, [`refine`] splits a block to
//! eliminate a reported mismatch witness, and [`coarsest_faithful`]
//! searches for faithful partitions with as few blocks as possible:
//!
//! 1. classify the current partition;
//! 2. if unfaithful, pick a witness (spurious, or the image of a lost
//!    extension) and split the first non-singleton block involved;
//! 3. repeat. Each step adds one block, and the identity partition is
//!    always faithful, so the loop terminates.

use std::collections::{BTreeMap, BTreeSet};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::af::{is_valid_identifier, ArgumentId, ArgumentSet, ArgumentationFramework};
use crate::order::{
    check_galois_bounded, CheckMode, FinitePoset, FiniteRelation, GaloisCounterexample,
    GaloisLaw, GaloisPair, GaloisReport,
};
use crate::semantics::{
    enumerate_with_limit, ExtensionSet, SemanticsKind, SolverError, DEFAULT_MAX_ARGS,
};

/// Arguments above this make the all-partitions sweep unreasonable
/// (the Bell numbers take over).
pub const EXHAUSTIVE_SEARCH_MAX_ARGS: usize = 8;

/// Default argument cap for exhaustively verifying the powerset Galois
/// pair; larger frameworks fall back to random spot checks.
pub const GALOIS_EXHAUSTIVE_MAX_ARGS: usize = 12;

/// Spot-check count for the sampled Galois mode.
pub const GALOIS_SAMPLES: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("duplicate block name `{0}`")]
    DuplicateName(String),
    #[error("invalid block name `{0}` (expected nonempty [A-Za-z0-9_-])")]
    InvalidName(String),
    #[error("block `{0}` is empty")]
    EmptyBlock(String),
    #[error("argument `{id}` appears in blocks `{first}` and `{second}`")]
    Overlap {
        id: ArgumentId,
        first: String,
        second: String,
    },
    #[error("argument `{0}` is not covered by any block")]
    Uncovered(ArgumentId),
    #[error("unknown argument `{0}`")]
    UnknownArgument(ArgumentId),
    #[error("unknown block name `{0}`")]
    UnknownBlock(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbstractionError {
    #[error("partition does not cover exactly the framework's arguments")]
    PartitionMismatch,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("witness {witness} is neither spurious nor the image of a lost extension")]
    StaleWitness { witness: String },
    #[error("no non-singleton block is available to split")]
    NoSplittableBlock,
    #[error("framework has {args} arguments, above the exhaustive search bound {limit}")]
    SearchBoundExceeded { args: usize, limit: usize },
}

/// A named block of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub members: ArgumentSet,
}

/// A named partition of a framework's arguments: blocks are nonempty,
/// pairwise disjoint, jointly covering, and kept in canonical order (by
/// smallest member).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Block>,
    block_of_arg: BTreeMap<ArgumentId, usize>,
    block_by_name: BTreeMap<String, usize>,
}

impl Partition {
    /// Validates named blocks against a framework.
    pub fn new<I>(af: &ArgumentationFramework, named_blocks: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator<Item = (String, ArgumentSet)>,
    {
        let mut blocks: Vec<Block> = Vec::new();
        for (name, members) in named_blocks {
            if !is_valid_identifier(&name) {
                return Err(PartitionError::InvalidName(name));
            }
            if blocks.iter().any(|b| b.name == name) {
                return Err(PartitionError::DuplicateName(name));
            }
            if members.is_empty() {
                return Err(PartitionError::EmptyBlock(name));
            }
            for id in &members {
                if !af.contains(id) {
                    return Err(PartitionError::UnknownArgument(id.clone()));
                }
            }
            blocks.push(Block { name, members });
        }

        let mut owner: BTreeMap<&ArgumentId, &str> = BTreeMap::new();
        for block in &blocks {
            for id in &block.members {
                if let Some(first) = owner.insert(id, &block.name) {
                    return Err(PartitionError::Overlap {
                        id: id.clone(),
                        first: first.to_owned(),
                        second: block.name.clone(),
                    });
                }
            }
        }
        for id in af.args() {
            if !owner.contains_key(id) {
                return Err(PartitionError::Uncovered(id.clone()));
            }
        }

        Ok(Self::assemble(blocks))
    }

    /// The finest partition: one singleton block per argument, named
    /// after its member. Its quotient is the framework itself.
    pub fn identity(af: &ArgumentationFramework) -> Self {
        Self::assemble(
            af.args()
                .iter()
                .map(|id| Block {
                    name: id.clone(),
                    members: ArgumentSet::from_ids([id.clone()]),
                })
                .collect(),
        )
    }

    /// Builds a partition from per-argument block codes (argument `i`
    /// joins block `codes[i]`). Blocks get canonical names (their
    /// smallest member). Used by generators and the partition search.
    pub fn from_block_codes(af: &ArgumentationFramework, codes: &[usize]) -> Self {
        assert_eq!(codes.len(), af.arg_count(), "one code per argument");
        let mut groups: BTreeMap<usize, ArgumentSet> = BTreeMap::new();
        for (i, &code) in codes.iter().enumerate() {
            groups
                .entry(code)
                .or_default()
                .insert(af.args()[i].clone());
        }
        Self::from_disjoint_sets(groups.into_values().collect())
    }

    /// Rebuilds from disjoint nonempty member sets with canonical
    /// (smallest-member) names.
    fn from_disjoint_sets(sets: Vec<ArgumentSet>) -> Self {
        Self::assemble(
            sets.into_iter()
                .map(|members| Block {
                    name: members
                        .first()
                        .expect("partition blocks are nonempty")
                        .clone(),
                    members,
                })
                .collect(),
        )
    }

    fn assemble(mut blocks: Vec<Block>) -> Self {
        blocks.sort_by(|a, b| a.members.first().cmp(&b.members.first()));
        let mut block_of_arg = BTreeMap::new();
        let mut block_by_name = BTreeMap::new();
        for (i, block) in blocks.iter().enumerate() {
            block_by_name.insert(block.name.clone(), i);
            for id in &block.members {
                block_of_arg.insert(id.clone(), i);
            }
        }
        Partition {
            blocks,
            block_of_arg,
            block_by_name,
        }
    }

    /// Blocks in canonical order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn arg_count(&self) -> usize {
        self.block_of_arg.len()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.members.len() == 1)
    }

    pub fn universe(&self) -> ArgumentSet {
        self.block_of_arg.keys().cloned().collect()
    }

    pub fn block_names(&self) -> ArgumentSet {
        self.blocks.iter().map(|b| b.name.clone()).collect()
    }

    pub fn block_of(&self, id: &str) -> Option<&Block> {
        self.block_of_arg.get(id).map(|&i| &self.blocks[i])
    }

    pub fn block_named(&self, name: &str) -> Option<&Block> {
        self.block_by_name.get(name).map(|&i| &self.blocks[i])
    }

    /// Abstraction: the names of all blocks intersecting `set`.
    pub fn alpha(&self, set: &ArgumentSet) -> Result<ArgumentSet, PartitionError> {
        let mut names = ArgumentSet::new();
        for id in set {
            let &i = self
                .block_of_arg
                .get(id)
                .ok_or_else(|| PartitionError::UnknownArgument(id.clone()))?;
            names.insert(self.blocks[i].name.clone());
        }
        Ok(names)
    }

    /// Concretisation: the union of the named blocks.
    pub fn gamma(&self, names: &ArgumentSet) -> Result<ArgumentSet, PartitionError> {
        let mut out = ArgumentSet::new();
        for name in names {
            let &i = self
                .block_by_name
                .get(name)
                .ok_or_else(|| PartitionError::UnknownBlock(name.clone()))?;
            for id in &self.blocks[i].members {
                out.insert(id.clone());
            }
        }
        Ok(out)
    }

    /// Merges blocks `i` and `j` (canonical indices) into one,
    /// renaming all blocks canonically.
    fn merge(&self, i: usize, j: usize) -> Partition {
        let mut sets: Vec<ArgumentSet> = Vec::with_capacity(self.blocks.len() - 1);
        for (k, block) in self.blocks.iter().enumerate() {
            if k == i {
                sets.push(block.members.union(&self.blocks[j].members));
            } else if k != j {
                sets.push(block.members.clone());
            }
        }
        Self::from_disjoint_sets(sets)
    }

    /// Extracts the smallest member of block `i` into a fresh singleton
    /// block, renaming all blocks canonically.
    fn extract_smallest(&self, i: usize) -> Partition {
        let block = &self.blocks[i];
        let smallest = block
            .members
            .first()
            .expect("partition blocks are nonempty")
            .clone();
        let mut remainder = block.members.clone();
        remainder.remove(&smallest);
        let mut sets: Vec<ArgumentSet> = Vec::with_capacity(self.blocks.len() + 1);
        for (k, b) in self.blocks.iter().enumerate() {
            if k == i {
                sets.push(ArgumentSet::from_ids([smallest.clone()]));
                sets.push(remainder.clone());
            } else {
                sets.push(b.members.clone());
            }
        }
        Self::from_disjoint_sets(sets)
    }

    /// Attacks that stay inside a single block, reported as
    /// `(block name, attacker, target)`.
    pub fn internal_conflicts(
        &self,
        af: &ArgumentationFramework,
    ) -> Result<Vec<(String, ArgumentId, ArgumentId)>, AbstractionError> {
        ensure_matching(af, self)?;
        let mut found = Vec::new();
        for (a, b) in af.attacks() {
            let ia = self.block_of_arg[a];
            if ia == self.block_of_arg[b] {
                found.push((self.blocks[ia].name.clone(), a.clone(), b.clone()));
            }
        }
        Ok(found)
    }
}

/// A framework together with a partition and the induced quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAF {
    pub base: ArgumentationFramework,
    pub partition: Partition,
    pub abstract_af: ArgumentationFramework,
}

fn ensure_matching(
    af: &ArgumentationFramework,
    p: &Partition,
) -> Result<(), AbstractionError> {
    let matching = p.arg_count() == af.arg_count()
        && p.block_of_arg.keys().all(|id| af.contains(id));
    if matching {
        Ok(())
    } else {
        Err(AbstractionError::PartitionMismatch)
    }
}

/// Builds the quotient framework of `af` under `p`. Abstract arguments
/// are the block names, labelled with their member sets; abstract
/// attacks are the existential lifting of the concrete ones.
pub fn quotient_af(
    af: &ArgumentationFramework,
    p: &Partition,
) -> Result<QuotientAF, AbstractionError> {
    ensure_matching(af, p)?;
    let names: Vec<String> = p.blocks.iter().map(|b| b.name.clone()).collect();
    let attacks: BTreeSet<(String, String)> = af
        .attacks()
        .map(|(a, b)| {
            (
                p.blocks[p.block_of_arg[a]].name.clone(),
                p.blocks[p.block_of_arg[b]].name.clone(),
            )
        })
        .collect();
    let mut abstract_af = ArgumentationFramework::new(names, attacks)
        .expect("block names are validated identifiers");
    for block in &p.blocks {
        abstract_af = abstract_af
            .with_label(&block.name, &block.members.to_string())
            .expect("blocks become abstract arguments");
    }

    // Every abstract attack must be witnessed by a concrete one.
    debug_assert!(abstract_af.attacks().all(|(b1, b2)| {
        af.attacks().any(|(a, b)| {
            p.block_of(a).map(|blk| &blk.name) == Some(b1)
                && p.block_of(b).map(|blk| &blk.name) == Some(b2)
        })
    }));

    Ok(QuotientAF {
        base: af.clone(),
        partition: p.clone(),
        abstract_af,
    })
}

/// Soundness/faithfulness verdict of a partition for one semantics.
/// `image` and `spurious` contain abstract (block-name) sets; `lost`
/// contains the concrete extensions whose image is missing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulnessReport {
    pub semantics: SemanticsKind,
    pub sound: bool,
    pub faithful: bool,
    pub image: Vec<ArgumentSet>,
    pub spurious: Vec<ArgumentSet>,
    pub lost: Vec<ArgumentSet>,
}

fn canonical_sets(mut sets: Vec<ArgumentSet>) -> Vec<ArgumentSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    sets
}

/// Compares concrete and abstract extension families under `kind`.
pub fn classify(
    af: &ArgumentationFramework,
    p: &Partition,
    kind: SemanticsKind,
) -> Result<FaithfulnessReport, AbstractionError> {
    classify_with_limit(af, p, kind, DEFAULT_MAX_ARGS)
}

pub fn classify_with_limit(
    af: &ArgumentationFramework,
    p: &Partition,
    kind: SemanticsKind,
    max_args: usize,
) -> Result<FaithfulnessReport, AbstractionError> {
    ensure_matching(af, p)?;
    let concrete = enumerate_with_limit(af, kind, max_args)?;
    classify_against(af, &concrete, p, kind, max_args)
}

/// Classification core, reusing an already-enumerated concrete family
/// (the partition search evaluates many partitions of one framework).
fn classify_against(
    af: &ArgumentationFramework,
    concrete: &ExtensionSet,
    p: &Partition,
    kind: SemanticsKind,
    max_args: usize,
) -> Result<FaithfulnessReport, AbstractionError> {
    let quotient = quotient_af(af, p)?;
    let abstracted = enumerate_with_limit(&quotient.abstract_af, kind, max_args)?;

    let mut image = Vec::new();
    let mut lost = Vec::new();
    for ext in concrete.iter() {
        let img = p.alpha(ext).expect("extensions draw from the framework");
        if !abstracted.contains(&img) {
            lost.push(ext.clone());
        }
        image.push(img);
    }
    let image = canonical_sets(image);
    let spurious: Vec<ArgumentSet> = abstracted
        .iter()
        .filter(|t| !image.binary_search_by(|e| cmp_sets(e, t)).is_ok())
        .cloned()
        .collect();

    let sound = lost.is_empty();
    let report = FaithfulnessReport {
        semantics: kind,
        sound,
        faithful: sound && spurious.is_empty(),
        image,
        spurious: canonical_sets(spurious),
        lost: canonical_sets(lost),
    };
    // When sound, the abstract family is exactly image plus spurious.
    debug_assert!(
        !report.sound
            || abstracted.len() == report.image.len() + report.spurious.len()
    );
    Ok(report)
}

fn cmp_sets(a: &ArgumentSet, b: &ArgumentSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Verifies the powerset Galois pair induced by a partition. Up to
/// `GALOIS_EXHAUSTIVE_MAX_ARGS` arguments every law is checked over all
/// subset pairs via [`crate::order::check_galois`]; beyond that the
/// report is built from seeded random spot checks and flagged
/// [`CheckMode::Sampled`].
pub fn partition_galois(p: &Partition) -> GaloisReport {
    partition_galois_with(p, GALOIS_EXHAUSTIVE_MAX_ARGS, GALOIS_SAMPLES)
}

pub fn partition_galois_with(
    p: &Partition,
    exhaustive_max_args: usize,
    samples: usize,
) -> GaloisReport {
    // The exhaustive sweep materializes both powersets as bitmasks.
    if p.arg_count() <= exhaustive_max_args.min(63) {
        exhaustive_partition_galois(p)
    } else {
        sampled_partition_galois(p, samples)
    }
}

/// All subsets of `ids` in canonical order, paired with membership
/// masks over the given element order.
fn sorted_powerset(ids: &[ArgumentId]) -> (Vec<ArgumentSet>, Vec<u64>) {
    let n = ids.len();
    let mut sets: Vec<(ArgumentSet, u64)> = (0..1u64 << n)
        .map(|mask| {
            let set = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| ids[i].clone())
                .collect();
            (set, mask)
        })
        .collect();
    sets.sort_by(|a, b| a.0.cmp(&b.0));
    sets.into_iter().unzip()
}

/// Subset-inclusion poset, with the quadratic relation fill done on
/// masks rather than element-by-element set comparisons.
fn mask_subset_poset(sets: Vec<ArgumentSet>, masks: &[u64]) -> FinitePoset<ArgumentSet> {
    FinitePoset::new(FiniteRelation::from_sorted_index_fn(sets, |i, j| {
        masks[i] & !masks[j] == 0
    }))
    .expect("subset inclusion is a partial order")
}

fn exhaustive_partition_galois(p: &Partition) -> GaloisReport {
    let universe: Vec<ArgumentId> = p.universe().iter().cloned().collect();
    let names: Vec<ArgumentId> = p.block_names().iter().cloned().collect();
    let (concrete_sets, concrete_masks) = sorted_powerset(&universe);
    let (abstract_sets, abstract_masks) = sorted_powerset(&names);

    let alpha: BTreeMap<ArgumentSet, ArgumentSet> = concrete_sets
        .iter()
        .map(|s| (s.clone(), p.alpha(s).expect("subsets of the universe")))
        .collect();
    let gamma: BTreeMap<ArgumentSet, ArgumentSet> = abstract_sets
        .iter()
        .map(|t| (t.clone(), p.gamma(t).expect("subsets of the block names")))
        .collect();

    let pair = GaloisPair::new(
        mask_subset_poset(concrete_sets, &concrete_masks),
        mask_subset_poset(abstract_sets, &abstract_masks),
        alpha,
        gamma,
    )
    .expect("tables are total by construction");
    check_galois_bounded(&pair, usize::MAX).expect("no budget applied")
}

fn sampled_partition_galois(p: &Partition, samples: usize) -> GaloisReport {
    // Fixed seed: identical inputs must yield identical reports.
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a15);
    let universe: Vec<ArgumentId> = p.universe().iter().cloned().collect();
    let names: Vec<ArgumentId> = p.block_names().iter().cloned().collect();
    let random_subset = |rng: &mut ChaCha8Rng, pool: &[ArgumentId]| -> ArgumentSet {
        pool.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
    };

    let mut report = GaloisReport {
        adjunction_holds: true,
        alpha_monotone: true,
        gamma_monotone: true,
        extensive_holds: true,
        reductive_holds: true,
        insertion_holds: true,
        mode: CheckMode::Sampled { samples },
        counterexamples: Vec::new(),
    };
    let fail = |flag: &mut bool,
                    counterexamples: &mut Vec<GaloisCounterexample>,
                    law: GaloisLaw,
                    witness: Vec<String>| {
        if *flag {
            *flag = false;
            counterexamples.push(GaloisCounterexample { law, witness });
        }
    };

    for _ in 0..samples {
        let s = random_subset(&mut rng, &universe);
        let t = random_subset(&mut rng, &names);
        let alpha_s = p.alpha(&s).expect("sampled from the universe");
        let gamma_t = p.gamma(&t).expect("sampled from the block names");

        if alpha_s.is_subset(&t) != s.is_subset(&gamma_t) {
            fail(
                &mut report.adjunction_holds,
                &mut report.counterexamples,
                GaloisLaw::Adjunction,
                vec![s.to_string(), t.to_string()],
            );
        }
        let gamma_alpha_s = p.gamma(&alpha_s).expect("alpha yields block names");
        if !s.is_subset(&gamma_alpha_s) {
            fail(
                &mut report.extensive_holds,
                &mut report.counterexamples,
                GaloisLaw::Extensive,
                vec![s.to_string()],
            );
        }
        let alpha_gamma_t = p.alpha(&gamma_t).expect("gamma yields arguments");
        if !alpha_gamma_t.is_subset(&t) {
            fail(
                &mut report.reductive_holds,
                &mut report.counterexamples,
                GaloisLaw::Reductive,
                vec![t.to_string()],
            );
        }
        if alpha_gamma_t != t {
            fail(
                &mut report.insertion_holds,
                &mut report.counterexamples,
                GaloisLaw::Insertion,
                vec![t.to_string()],
            );
        }
        // Monotonicity on a random inclusion pair.
        let s2 = s.union(&random_subset(&mut rng, &universe));
        if !alpha_s.is_subset(&p.alpha(&s2).expect("still in the universe")) {
            fail(
                &mut report.alpha_monotone,
                &mut report.counterexamples,
                GaloisLaw::AlphaMonotone,
                vec![s.to_string(), s2.to_string()],
            );
        }
        let t2 = t.union(&random_subset(&mut rng, &names));
        if !gamma_t.is_subset(&p.gamma(&t2).expect("still block names")) {
            fail(
                &mut report.gamma_monotone,
                &mut report.counterexamples,
                GaloisLaw::GammaMonotone,
                vec![t.to_string(), t2.to_string()],
            );
        }
    }
    report
}

/// Splits a block to address a classification witness: the witness must
/// be a spurious abstract extension or the image of a lost concrete
/// one. The canonically first non-singleton block named in the witness
/// is split (falling back to the first non-singleton block overall,
/// which handles the empty witness); its smallest member becomes a
/// fresh singleton.
pub fn refine(
    af: &ArgumentationFramework,
    p: &Partition,
    witness: &ArgumentSet,
    kind: SemanticsKind,
) -> Result<Partition, AbstractionError> {
    let report = classify(af, p, kind)?;
    let is_spurious = report.spurious.contains(witness);
    let is_lost_image = report
        .lost
        .iter()
        .any(|e| &p.alpha(e).expect("extensions draw from the framework") == witness);
    if !is_spurious && !is_lost_image {
        return Err(AbstractionError::StaleWitness {
            witness: witness.to_string(),
        });
    }

    let splittable = |b: &Block| b.members.len() > 1;
    let target = p
        .blocks
        .iter()
        .position(|b| splittable(b) && witness.contains(&b.name))
        .or_else(|| p.blocks.iter().position(splittable))
        .ok_or(AbstractionError::NoSplittableBlock)?;
    Ok(p.extract_smallest(target))
}

/// Drives the classify/refine loop until the partition is faithful,
/// returning the result and the number of refinement steps. Terminates
/// because every step adds a block and the identity partition is
/// faithful.
pub fn refine_to_faithful(
    af: &ArgumentationFramework,
    start: &Partition,
    kind: SemanticsKind,
) -> Result<(Partition, usize), AbstractionError> {
    let mut p = start.clone();
    let mut steps = 0;
    loop {
        let report = classify(af, &p, kind)?;
        if report.faithful {
            return Ok((p, steps));
        }
        let witness = report
            .spurious
            .first()
            .cloned()
            .or_else(|| {
                report
                    .lost
                    .first()
                    .map(|e| p.alpha(e).expect("extensions draw from the framework"))
            })
            .expect("an unfaithful partition has a witness");
        p = refine(af, &p, &witness, kind)?;
        steps += 1;
    }
}

/// Search strategy for [`coarsest_faithful`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Merge blocks greedily from the identity partition; fast, may
    /// miss the optimum.
    Greedy,
    /// Sweep every partition (Bell-number many); exact, bounded by
    /// [`EXHAUSTIVE_SEARCH_MAX_ARGS`].
    Exhaustive,
}

impl std::str::FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(SearchMode::Greedy),
            "exhaustive" => Ok(SearchMode::Exhaustive),
            other => Err(format!(
                "unknown search mode `{other}` (expected greedy or exhaustive)"
            )),
        }
    }
}

/// Searches for a faithful partition with as few blocks as possible.
pub fn coarsest_faithful(
    af: &ArgumentationFramework,
    kind: SemanticsKind,
    mode: SearchMode,
) -> Result<Partition, AbstractionError> {
    coarsest_faithful_with_limit(af, kind, mode, DEFAULT_MAX_ARGS)
}

pub fn coarsest_faithful_with_limit(
    af: &ArgumentationFramework,
    kind: SemanticsKind,
    mode: SearchMode,
    max_args: usize,
) -> Result<Partition, AbstractionError> {
    match mode {
        SearchMode::Greedy => greedy_search(af, kind, max_args),
        SearchMode::Exhaustive => exhaustive_search(af, kind, max_args),
    }
}

/// Repeatedly merges the canonically first pair of blocks whose merge
/// stays faithful, starting from the identity partition.
fn greedy_search(
    af: &ArgumentationFramework,
    kind: SemanticsKind,
    max_args: usize,
) -> Result<Partition, AbstractionError> {
    let concrete = enumerate_with_limit(af, kind, max_args)?;
    let mut p = Partition::identity(af);
    loop {
        let mut accepted = None;
        'pairs: for i in 0..p.len() {
            for j in i + 1..p.len() {
                let candidate = p.merge(i, j);
                if classify_against(af, &concrete, &candidate, kind, max_args)?.faithful {
                    accepted = Some(candidate);
                    break 'pairs;
                }
            }
        }
        match accepted {
            Some(next) => p = next,
            None => return Ok(p),
        }
    }
}

/// Sweeps every partition of the arguments in restricted-growth-string
/// order, keeping the first faithful one with the fewest blocks.
fn exhaustive_search(
    af: &ArgumentationFramework,
    kind: SemanticsKind,
    max_args: usize,
) -> Result<Partition, AbstractionError> {
    let n = af.arg_count();
    if n > EXHAUSTIVE_SEARCH_MAX_ARGS {
        return Err(AbstractionError::SearchBoundExceeded {
            args: n,
            limit: EXHAUSTIVE_SEARCH_MAX_ARGS,
        });
    }
    let concrete = enumerate_with_limit(af, kind, max_args)?;
    let mut best: Option<Partition> = None;
    for codes in all_block_codes(n) {
        let p = Partition::from_block_codes(af, &codes);
        if best.as_ref().is_some_and(|b| p.len() >= b.len()) {
            continue;
        }
        if classify_against(af, &concrete, &p, kind, max_args)?.faithful {
            best = Some(p);
        }
    }
    Ok(best.expect("the identity partition is always faithful"))
}

/// All set partitions of `0..n` as restricted growth strings, in
/// lexicographic order.
fn all_block_codes(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn recurse(n: usize, prefix: &mut Vec<usize>, max_used: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for code in 0..=max_used + 1 {
            prefix.push(code);
            recurse(n, prefix, max_used.max(code), out);
            prefix.pop();
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        prefix.push(0);
        recurse(n, &mut prefix, 0, &mut out);
    }
    out
}
