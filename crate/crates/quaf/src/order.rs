//! Finite order theory: relations with law checking, posets, lattice
//! reports, kernel quotients, and Galois connection verification.
//!
//! Everything here is exhaustively checkable because carriers are
//! finite and explicit. A Galois connection between posets `(C, ⊑)`
//! and `(A, ⊑♯)` is a pair of maps `α : C → A`, `γ : A → C` with the
//! adjunction
//!
//! ```text
//! α(x) ⊑♯ y  ⇔  x ⊑ γ(y)        for all x ∈ C, y ∈ A
//! ```
//!
//! The adjunction is what gets checked; the familiar consequences —
//! both maps monotone, `γ∘α` extensive (`x ⊑ γ(α(x))`), `α∘γ`
//! reductive (`α(γ(y)) ⊑♯ y`) — are reported separately so a broken
//! candidate pair shows exactly which laws it loses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on `|C| * |A|` for exhaustive Galois checking.
pub const DEFAULT_GALOIS_PAIR_BOUND: usize = 1 << 24;

/// Carrier-size cap for the exhaustive all-subsets lattice sweep.
pub const EXHAUSTIVE_LATTICE_MAX: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("element `{0}` is not in the carrier")]
    UnknownElement(String),
    #[error("relation is not a preorder: {law} fails (witness {witness})")]
    NotAPreorder { law: &'static str, witness: String },
    #[error("relation is not a partial order: {law} fails (witness {witness})")]
    NotAPartialOrder { law: &'static str, witness: String },
    #[error("relation is not an equivalence: {law} fails (witness {witness})")]
    NotAnEquivalence { law: &'static str, witness: String },
    #[error("carriers do not match")]
    CarrierMismatch,
    #[error("abstraction or concretisation table is not total: missing `{0}`")]
    PartialTable(String),
    #[error("problem size {size} exceeds the exhaustive check bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}

/// Dense square bit matrix; row `i` holds the successors of element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// True when row `i` is a subset of row `j`.
    fn row_subset(&self, i: usize, j: usize) -> bool {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .all(|(a, b)| a & !b == 0)
    }

    fn iter_row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(i);
        (0..self.n).filter(move |&j| row[j / 64] >> (j % 64) & 1 == 1)
    }

    fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.iter_row(i) {
                t.set(j, i);
            }
        }
        t
    }
}

/// A binary relation over an explicit finite carrier.
///
/// The carrier is kept sorted and duplicate-free, so index order is the
/// canonical element order and every scan below is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRelation<E> {
    carrier: Vec<E>,
    succ: BitMatrix,
    pred: BitMatrix,
}

impl<E: Ord + Clone> FiniteRelation<E> {
    /// Builds a relation from carrier elements and related pairs. Pair
    /// endpoints must belong to the carrier.
    pub fn new<I, P>(carrier: I, pairs: P) -> Result<Self, OrderError>
    where
        I: IntoIterator<Item = E>,
        P: IntoIterator<Item = (E, E)>,
        E: Display,
    {
        let mut elems: Vec<E> = carrier.into_iter().collect();
        elems.sort();
        elems.dedup();
        let mut succ = BitMatrix::new(elems.len());
        for (x, y) in pairs {
            let i = index_of(&elems, &x).ok_or_else(|| OrderError::UnknownElement(x.to_string()))?;
            let j = index_of(&elems, &y).ok_or_else(|| OrderError::UnknownElement(y.to_string()))?;
            succ.set(i, j);
        }
        let pred = succ.transpose();
        Ok(FiniteRelation {
            carrier: elems,
            succ,
            pred,
        })
    }

    /// Builds a relation by asking `related` for every ordered pair of
    /// carrier elements.
    pub fn from_fn<I, F>(carrier: I, mut related: F) -> Self
    where
        I: IntoIterator<Item = E>,
        F: FnMut(&E, &E) -> bool,
    {
        let mut elems: Vec<E> = carrier.into_iter().collect();
        elems.sort();
        elems.dedup();
        let mut succ = BitMatrix::new(elems.len());
        for i in 0..elems.len() {
            for j in 0..elems.len() {
                if related(&elems[i], &elems[j]) {
                    succ.set(i, j);
                }
            }
        }
        let pred = succ.transpose();
        FiniteRelation {
            carrier: elems,
            succ,
            pred,
        }
    }

    /// Builds a relation over an already-sorted, duplicate-free carrier
    /// by asking `related` for pairs of canonical indices. Lets callers
    /// with a cheap index-level test (e.g. bitmask inclusion) skip
    /// element comparisons in the hot quadratic loop.
    pub(crate) fn from_sorted_index_fn<F>(carrier: Vec<E>, related: F) -> Self
    where
        F: Fn(usize, usize) -> bool,
    {
        debug_assert!(carrier.windows(2).all(|w| w[0] < w[1]));
        let mut succ = BitMatrix::new(carrier.len());
        for i in 0..carrier.len() {
            for j in 0..carrier.len() {
                if related(i, j) {
                    succ.set(i, j);
                }
            }
        }
        let pred = succ.transpose();
        FiniteRelation {
            carrier,
            succ,
            pred,
        }
    }

    pub fn carrier(&self) -> &[E] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn holds(&self, x: &E, y: &E) -> bool {
        match (self.index(x), self.index(y)) {
            (Some(i), Some(j)) => self.succ.get(i, j),
            _ => false,
        }
    }

    /// Related pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (&E, &E)> {
        (0..self.carrier.len()).flat_map(move |i| {
            self.succ
                .iter_row(i)
                .map(move |j| (&self.carrier[i], &self.carrier[j]))
        })
    }

    pub(crate) fn index(&self, x: &E) -> Option<usize> {
        index_of(&self.carrier, x)
    }

    fn holds_idx(&self, i: usize, j: usize) -> bool {
        self.succ.get(i, j)
    }
}

fn index_of<E: Ord>(sorted: &[E], x: &E) -> Option<usize> {
    sorted.binary_search(x).ok()
}

/// Which of the standard order laws a relation satisfies. A violated
/// law carries the canonically first witness found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderProperties<E> {
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub symmetric: bool,
    pub not_reflexive_witness: Option<E>,
    pub not_antisymmetric_witness: Option<(E, E)>,
    pub not_transitive_witness: Option<(E, E, E)>,
    pub not_symmetric_witness: Option<(E, E)>,
}

impl<E> OrderProperties<E> {
    pub fn is_preorder(&self) -> bool {
        self.reflexive && self.transitive
    }

    pub fn is_partial_order(&self) -> bool {
        self.reflexive && self.antisymmetric && self.transitive
    }

    pub fn is_equivalence(&self) -> bool {
        self.reflexive && self.symmetric && self.transitive
    }
}

/// Checks reflexivity, antisymmetry, transitivity, and symmetry in one
/// sweep over the relation.
pub fn check_order_properties<E: Ord + Clone>(rel: &FiniteRelation<E>) -> OrderProperties<E> {
    let n = rel.carrier.len();
    let mut props = OrderProperties {
        reflexive: true,
        antisymmetric: true,
        transitive: true,
        symmetric: true,
        not_reflexive_witness: None,
        not_antisymmetric_witness: None,
        not_transitive_witness: None,
        not_symmetric_witness: None,
    };

    for i in 0..n {
        if props.reflexive && !rel.succ.get(i, i) {
            props.reflexive = false;
            props.not_reflexive_witness = Some(rel.carrier[i].clone());
        }
    }

    'antisym: for i in 0..n {
        for j in rel.succ.iter_row(i) {
            if i != j && rel.succ.get(j, i) {
                props.antisymmetric = false;
                props.not_antisymmetric_witness =
                    Some((rel.carrier[i].clone(), rel.carrier[j].clone()));
                break 'antisym;
            }
        }
    }

    'sym: for i in 0..n {
        for j in rel.succ.iter_row(i) {
            if !rel.succ.get(j, i) {
                props.symmetric = false;
                props.not_symmetric_witness =
                    Some((rel.carrier[i].clone(), rel.carrier[j].clone()));
                break 'sym;
            }
        }
    }

    // x ⪯ y and y ⪯ z require x ⪯ z: successors of y must be
    // successors of x whenever x ⪯ y.
    'trans: for i in 0..n {
        for j in rel.succ.iter_row(i) {
            if !rel.succ.row_subset(j, i) {
                let k = rel
                    .succ
                    .iter_row(j)
                    .find(|&k| !rel.succ.get(i, k))
                    .expect("subset check failed, so a missing successor exists");
                props.transitive = false;
                props.not_transitive_witness = Some((
                    rel.carrier[i].clone(),
                    rel.carrier[j].clone(),
                    rel.carrier[k].clone(),
                ));
                break 'trans;
            }
        }
    }

    props
}

fn preorder_violation<E: Display>(props: &OrderProperties<E>) -> Option<(&'static str, String)> {
    if let Some(w) = &props.not_reflexive_witness {
        return Some(("reflexivity", format!("{w}")));
    }
    if let Some((x, y, z)) = &props.not_transitive_witness {
        return Some(("transitivity", format!("({x}, {y}, {z})")));
    }
    None
}

/// A finite partial order: a relation certified reflexive,
/// antisymmetric, and transitive at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset<E> {
    relation: FiniteRelation<E>,
}

impl<E: Ord + Clone + Display> FinitePoset<E> {
    pub fn new(relation: FiniteRelation<E>) -> Result<Self, OrderError> {
        let props = check_order_properties(&relation);
        if let Some((law, witness)) = preorder_violation(&props) {
            return Err(OrderError::NotAPartialOrder { law, witness });
        }
        if let Some((x, y)) = &props.not_antisymmetric_witness {
            return Err(OrderError::NotAPartialOrder {
                law: "antisymmetry",
                witness: format!("({x}, {y})"),
            });
        }
        Ok(FinitePoset { relation })
    }

    pub fn relation(&self) -> &FiniteRelation<E> {
        &self.relation
    }

    pub fn carrier(&self) -> &[E] {
        self.relation.carrier()
    }

    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relation.is_empty()
    }

    pub fn leq(&self, x: &E, y: &E) -> bool {
        self.relation.holds(x, y)
    }
}

/// Least upper bound and greatest lower bound of a subset, when they
/// exist in the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds<E> {
    pub lub: Option<E>,
    pub glb: Option<E>,
}

/// Computes lub and glb of `subset` within the poset carrier.
pub fn bounds<E: Ord + Clone + Display>(
    poset: &FinitePoset<E>,
    subset: &[E],
) -> Result<Bounds<E>, OrderError> {
    let rel = &poset.relation;
    let indices: Vec<usize> = subset
        .iter()
        .map(|e| {
            rel.index(e)
                .ok_or_else(|| OrderError::UnknownElement(e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    Ok(Bounds {
        lub: extremum(rel, &indices, true).map(|i| rel.carrier[i].clone()),
        glb: extremum(rel, &indices, false).map(|i| rel.carrier[i].clone()),
    })
}

/// Least element of the upper-bound set (`upper = true`) or greatest
/// element of the lower-bound set (`upper = false`). In a poset such an
/// element is unique when it exists, so the first hit is the answer.
fn extremum<E: Ord + Clone>(
    rel: &FiniteRelation<E>,
    member_indices: &[usize],
    upper: bool,
) -> Option<usize> {
    let n = rel.len();
    let matrix = if upper { &rel.succ } else { &rel.pred };
    let in_bound_set =
        |u: usize| -> bool { member_indices.iter().all(|&m| matrix.get(m, u)) };
    (0..n).find(|&u| {
        in_bound_set(u) && (0..n).all(|v| !in_bound_set(v) || matrix.get(u, v))
    })
}

/// Lattice and complete-lattice verdict for a finite poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport<E> {
    pub is_lattice: bool,
    pub is_complete: bool,
    pub top: Option<E>,
    pub bottom: Option<E>,
}

/// Checks pairwise lubs/glbs and applies the finite-lattice shortcut:
/// a nonempty finite poset where every pair has a lub and a glb is a
/// complete lattice.
pub fn check_complete_lattice<E: Ord + Clone + Display>(poset: &FinitePoset<E>) -> LatticeReport<E> {
    let rel = &poset.relation;
    let n = rel.len();
    let mut is_lattice = true;
    'pairs: for i in 0..n {
        for j in i + 1..n {
            if extremum(rel, &[i, j], true).is_none() || extremum(rel, &[i, j], false).is_none() {
                is_lattice = false;
                break 'pairs;
            }
        }
    }
    LatticeReport {
        is_lattice,
        is_complete: is_lattice && n > 0,
        top: top_index(rel).map(|i| rel.carrier[i].clone()),
        bottom: bottom_index(rel).map(|i| rel.carrier[i].clone()),
    }
}

/// The exhaustive variant: sweeps all `2^n` subsets and demands a lub
/// and a glb for each (including the empty subset, whose lub is the
/// bottom and whose glb is the top). Bounded by
/// [`EXHAUSTIVE_LATTICE_MAX`] carrier elements.
pub fn check_complete_lattice_exhaustive<E: Ord + Clone + Display>(
    poset: &FinitePoset<E>,
) -> Result<LatticeReport<E>, OrderError> {
    let rel = &poset.relation;
    let n = rel.len();
    if n > EXHAUSTIVE_LATTICE_MAX {
        return Err(OrderError::BoundExceeded {
            size: n,
            bound: EXHAUSTIVE_LATTICE_MAX,
        });
    }
    let pairwise = check_complete_lattice(poset);
    let mut is_complete = true;
    'masks: for mask in 0u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if extremum(rel, &members, true).is_none() || extremum(rel, &members, false).is_none() {
            is_complete = false;
            break 'masks;
        }
    }
    Ok(LatticeReport {
        is_complete,
        ..pairwise
    })
}

fn top_index<E: Ord + Clone>(rel: &FiniteRelation<E>) -> Option<usize> {
    (0..rel.len()).find(|&t| (0..rel.len()).all(|x| rel.succ.get(x, t)))
}

fn bottom_index<E: Ord + Clone>(rel: &FiniteRelation<E>) -> Option<usize> {
    (0..rel.len()).find(|&b| (0..rel.len()).all(|x| rel.succ.get(b, x)))
}

/// An equivalence relation: certified reflexive, symmetric, and
/// transitive at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceRelation<E> {
    relation: FiniteRelation<E>,
}

impl<E: Ord + Clone + Display> EquivalenceRelation<E> {
    pub fn new(relation: FiniteRelation<E>) -> Result<Self, OrderError> {
        let props = check_order_properties(&relation);
        if let Some(w) = &props.not_reflexive_witness {
            return Err(OrderError::NotAnEquivalence {
                law: "reflexivity",
                witness: format!("{w}"),
            });
        }
        if let Some((x, y)) = &props.not_symmetric_witness {
            return Err(OrderError::NotAnEquivalence {
                law: "symmetry",
                witness: format!("({x}, {y})"),
            });
        }
        if let Some((x, y, z)) = &props.not_transitive_witness {
            return Err(OrderError::NotAnEquivalence {
                law: "transitivity",
                witness: format!("({x}, {y}, {z})"),
            });
        }
        Ok(EquivalenceRelation { relation })
    }

    pub fn relation(&self) -> &FiniteRelation<E> {
        &self.relation
    }

    pub fn carrier(&self) -> &[E] {
        self.relation.carrier()
    }

    pub fn related(&self, x: &E, y: &E) -> bool {
        self.relation.holds(x, y)
    }

    /// Equivalence classes in canonical order (by smallest member).
    pub fn classes(&self) -> Vec<Vec<E>> {
        let n = self.relation.len();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let members: Vec<usize> = self.relation.succ.iter_row(i).collect();
            for &m in &members {
                seen[m] = true;
            }
            classes.push(
                members
                    .iter()
                    .map(|&m| self.relation.carrier[m].clone())
                    .collect(),
            );
        }
        classes
    }

    pub fn class_of(&self, x: &E) -> Result<Vec<E>, OrderError> {
        let i = self
            .relation
            .index(x)
            .ok_or_else(|| OrderError::UnknownElement(x.to_string()))?;
        Ok(self
            .relation
            .succ
            .iter_row(i)
            .map(|j| self.relation.carrier[j].clone())
            .collect())
    }
}

/// The kernel of a preorder: `x ∼ y` iff `x ⪯ y` and `y ⪯ x`.
pub fn kernel_equivalence<E: Ord + Clone + Display>(
    preorder: &FiniteRelation<E>,
) -> Result<EquivalenceRelation<E>, OrderError> {
    let props = check_order_properties(preorder);
    if let Some((law, witness)) = preorder_violation(&props) {
        return Err(OrderError::NotAPreorder { law, witness });
    }
    let n = preorder.len();
    let mut kernel = BitMatrix::new(n);
    for i in 0..n {
        for j in preorder.succ.iter_row(i) {
            if preorder.succ.get(j, i) {
                kernel.set(i, j);
            }
        }
    }
    let pred = kernel.transpose();
    EquivalenceRelation::new(FiniteRelation {
        carrier: preorder.carrier.clone(),
        succ: kernel,
        pred,
    })
}

/// Splits `carrier` into the equivalence classes of `equiv`. The given
/// carrier must coincide with the relation's carrier.
pub fn quotient_set<E: Ord + Clone + Display>(
    carrier: &[E],
    equiv: &EquivalenceRelation<E>,
) -> Result<Vec<Vec<E>>, OrderError> {
    let mut sorted: Vec<E> = carrier.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted != equiv.relation.carrier {
        return Err(OrderError::CarrierMismatch);
    }
    Ok(equiv.classes())
}

/// Lifts a preorder to blocks: `[x] ⪯ [y]` iff some `x' ∈ [x]` and
/// `y' ∈ [y]` satisfy `x' ⪯ y'`.
///
/// When `equiv` is the kernel of the preorder the lifted relation is a
/// partial order on the quotient. For an unrelated equivalence it can
/// fail antisymmetry: take `a ⪯ b` and `c ⪯ d` (plus reflexivity) on
/// `{a, b, c, d}` with blocks `{a, d}` and `{b, c}` — each block then
/// reaches the other, yet the blocks differ.
pub fn lift_preorder<E: Ord + Clone + Display>(
    preorder: &FiniteRelation<E>,
    equiv: &EquivalenceRelation<E>,
) -> Result<FiniteRelation<Vec<E>>, OrderError> {
    let props = check_order_properties(preorder);
    if let Some((law, witness)) = preorder_violation(&props) {
        return Err(OrderError::NotAPreorder { law, witness });
    }
    if preorder.carrier != equiv.relation.carrier {
        return Err(OrderError::CarrierMismatch);
    }
    let classes = equiv.classes();
    let mut block_of = vec![0usize; preorder.len()];
    for (b, class) in classes.iter().enumerate() {
        for e in class {
            block_of[preorder.index(e).expect("class members are carrier elements")] = b;
        }
    }
    let mut related: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..preorder.len() {
        for j in preorder.succ.iter_row(i) {
            related.insert((block_of[i], block_of[j]));
        }
    }
    let index_by_class: BTreeMap<&Vec<E>, usize> =
        classes.iter().enumerate().map(|(b, c)| (c, b)).collect();
    Ok(FiniteRelation::from_fn(classes.clone(), |x, y| {
        related.contains(&(index_by_class[x], index_by_class[y]))
    }))
}

/// A candidate Galois connection: two posets plus explicit abstraction
/// and concretisation tables, total over their carriers.
#[derive(Debug, Clone)]
pub struct GaloisPair<C, A> {
    concrete: FinitePoset<C>,
    abstracted: FinitePoset<A>,
    alpha: BTreeMap<C, A>,
    gamma: BTreeMap<A, C>,
    alpha_idx: Vec<usize>,
    gamma_idx: Vec<usize>,
}

impl<C: Ord + Clone + Display, A: Ord + Clone + Display> GaloisPair<C, A> {
    pub fn new(
        concrete: FinitePoset<C>,
        abstracted: FinitePoset<A>,
        alpha: BTreeMap<C, A>,
        gamma: BTreeMap<A, C>,
    ) -> Result<Self, OrderError> {
        let mut alpha_idx = Vec::with_capacity(concrete.len());
        for x in concrete.carrier() {
            let y = alpha
                .get(x)
                .ok_or_else(|| OrderError::PartialTable(format!("alpha({x})")))?;
            alpha_idx.push(
                abstracted
                    .relation()
                    .index(y)
                    .ok_or_else(|| OrderError::UnknownElement(y.to_string()))?,
            );
        }
        let mut gamma_idx = Vec::with_capacity(abstracted.len());
        for y in abstracted.carrier() {
            let x = gamma
                .get(y)
                .ok_or_else(|| OrderError::PartialTable(format!("gamma({y})")))?;
            gamma_idx.push(
                concrete
                    .relation()
                    .index(x)
                    .ok_or_else(|| OrderError::UnknownElement(x.to_string()))?,
            );
        }
        Ok(GaloisPair {
            concrete,
            abstracted,
            alpha,
            gamma,
            alpha_idx,
            gamma_idx,
        })
    }

    pub fn concrete(&self) -> &FinitePoset<C> {
        &self.concrete
    }

    pub fn abstracted(&self) -> &FinitePoset<A> {
        &self.abstracted
    }

    pub fn alpha_of(&self, x: &C) -> Result<&A, OrderError> {
        self.alpha
            .get(x)
            .ok_or_else(|| OrderError::UnknownElement(x.to_string()))
    }

    pub fn gamma_of(&self, y: &A) -> Result<&C, OrderError> {
        self.gamma
            .get(y)
            .ok_or_else(|| OrderError::UnknownElement(y.to_string()))
    }
}

/// How a Galois verdict was obtained: full sweep or random spot checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisLaw {
    Adjunction,
    AlphaMonotone,
    GammaMonotone,
    Extensive,
    Reductive,
    Insertion,
}

/// A violated law together with the rendered witness elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisCounterexample {
    pub law: GaloisLaw,
    pub witness: Vec<String>,
}

/// Per-law verdict for a candidate Galois connection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisReport {
    pub adjunction_holds: bool,
    pub alpha_monotone: bool,
    pub gamma_monotone: bool,
    pub extensive_holds: bool,
    pub reductive_holds: bool,
    pub insertion_holds: bool,
    pub mode: CheckMode,
    pub counterexamples: Vec<GaloisCounterexample>,
}

impl GaloisReport {
    pub fn is_connection(&self) -> bool {
        self.adjunction_holds
    }
}

/// Exhaustively checks the adjunction and its derived laws, using the
/// default pair budget.
pub fn check_galois<C, A>(pair: &GaloisPair<C, A>) -> Result<GaloisReport, OrderError>
where
    C: Ord + Clone + Display,
    A: Ord + Clone + Display,
{
    check_galois_bounded(pair, DEFAULT_GALOIS_PAIR_BOUND)
}

pub fn check_galois_bounded<C, A>(
    pair: &GaloisPair<C, A>,
    max_pairs: usize,
) -> Result<GaloisReport, OrderError>
where
    C: Ord + Clone + Display,
    A: Ord + Clone + Display,
{
    let nc = pair.concrete.len();
    let na = pair.abstracted.len();
    if nc.saturating_mul(na) > max_pairs {
        return Err(OrderError::BoundExceeded {
            size: nc.saturating_mul(na),
            bound: max_pairs,
        });
    }
    let conc = pair.concrete.relation();
    let abst = pair.abstracted.relation();
    let mut report = GaloisReport {
        adjunction_holds: true,
        alpha_monotone: true,
        gamma_monotone: true,
        extensive_holds: true,
        reductive_holds: true,
        insertion_holds: true,
        mode: CheckMode::Exhaustive,
        counterexamples: Vec::new(),
    };

    'adj: for i in 0..nc {
        for j in 0..na {
            let lhs = abst.holds_idx(pair.alpha_idx[i], j);
            let rhs = conc.holds_idx(i, pair.gamma_idx[j]);
            if lhs != rhs {
                report.adjunction_holds = false;
                report.counterexamples.push(GaloisCounterexample {
                    law: GaloisLaw::Adjunction,
                    witness: vec![
                        conc.carrier[i].to_string(),
                        abst.carrier[j].to_string(),
                    ],
                });
                break 'adj;
            }
        }
    }

    'am: for i in 0..nc {
        for i2 in conc.succ.iter_row(i) {
            if !abst.holds_idx(pair.alpha_idx[i], pair.alpha_idx[i2]) {
                report.alpha_monotone = false;
                report.counterexamples.push(GaloisCounterexample {
                    law: GaloisLaw::AlphaMonotone,
                    witness: vec![
                        conc.carrier[i].to_string(),
                        conc.carrier[i2].to_string(),
                    ],
                });
                break 'am;
            }
        }
    }

    'gm: for j in 0..na {
        for j2 in abst.succ.iter_row(j) {
            if !conc.holds_idx(pair.gamma_idx[j], pair.gamma_idx[j2]) {
                report.gamma_monotone = false;
                report.counterexamples.push(GaloisCounterexample {
                    law: GaloisLaw::GammaMonotone,
                    witness: vec![
                        abst.carrier[j].to_string(),
                        abst.carrier[j2].to_string(),
                    ],
                });
                break 'gm;
            }
        }
    }

    for i in 0..nc {
        if !conc.holds_idx(i, pair.gamma_idx[pair.alpha_idx[i]]) {
            report.extensive_holds = false;
            report.counterexamples.push(GaloisCounterexample {
                law: GaloisLaw::Extensive,
                witness: vec![conc.carrier[i].to_string()],
            });
            break;
        }
    }

    for j in 0..na {
        if !abst.holds_idx(pair.alpha_idx[pair.gamma_idx[j]], j) {
            report.reductive_holds = false;
            report.counterexamples.push(GaloisCounterexample {
                law: GaloisLaw::Reductive,
                witness: vec![abst.carrier[j].to_string()],
            });
            break;
        }
    }

    for j in 0..na {
        if pair.alpha_idx[pair.gamma_idx[j]] != j {
            report.insertion_holds = false;
            report.counterexamples.push(GaloisCounterexample {
                law: GaloisLaw::Insertion,
                witness: vec![abst.carrier[j].to_string()],
            });
            break;
        }
    }

    // On finite posets the exhaustive adjunction check subsumes the
    // derived laws; a passing adjunction with a failing consequence
    // would mean the checker itself is broken.
    debug_assert!(
        !report.adjunction_holds
            || (report.alpha_monotone
                && report.gamma_monotone
                && report.extensive_holds
                && report.reductive_holds)
    );

    Ok(report)
}

/// Approximation quality of a single abstract value `y` for a concrete
/// value `x`: sound when `x ⊑ γ(y)`, exact when `γ(y) = x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Approximation {
    pub sound: bool,
    pub exact: bool,
}

pub fn approximation_quality<C, A>(
    pair: &GaloisPair<C, A>,
    x: &C,
    y: &A,
) -> Result<Approximation, OrderError>
where
    C: Ord + Clone + Display,
    A: Ord + Clone + Display,
{
    let gy = pair.gamma_of(y)?;
    if pair.concrete.relation().index(x).is_none() {
        return Err(OrderError::UnknownElement(x.to_string()));
    }
    Ok(Approximation {
        sound: pair.concrete.leq(x, gy),
        exact: gy == x,
    })
}
