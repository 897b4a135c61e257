//! Quotient abstractions for Dung argumentation frameworks.
//!
//! An abstract argumentation framework is a directed graph whose nodes
//! are arguments and whose edges are attacks. This crate provides:
//!
//! * [`af`] — the framework type with canonical (lexicographic)
//!   argument ordering, plus the conflict-freeness / defense /
//!   characteristic-function primitives everything else builds on;
//! * [`semantics`] — enumeration and verification of extensions under
//!   the grounded, admissible, complete, preferred, and stable
//!   semantics, together with complete labellings;
//! * [`order`] — finite relations, posets, lattice checks, quotients
//!   by equivalences, and explicitly verified Galois connections;
//! * [`abstraction`] — partitions of the arguments, the induced
//!   quotient framework and powerset Galois insertion, faithfulness
//!   classification, witness-driven refinement, and a search for the
//!   coarsest faithful partition;
//! * [`io`] — APX and TGF parsing/serialization, DOT rendering, and a
//!   line-based partition format;
//! * [`oracle`] — an independent brute-force enumerator used to
//!   cross-check the solver on small frameworks;
//! * [`generate`] — seeded random frameworks, partitions, and
//!   preorders for randomized testing;
//! * [`fixtures`] — the worked example used throughout the tests.
//!
//! All public results are deterministic: sets of arguments are ordered
//! lexicographically, families of sets by cardinality then
//! lexicographically, and every randomized helper takes an explicit
//! seed.

pub mod abstraction;
pub mod af;
pub mod fixtures;
pub mod generate;
pub mod io;
pub mod oracle;
pub mod order;
pub mod semantics;

pub use abstraction::{
    classify, coarsest_faithful, partition_galois, quotient_af, refine, refine_to_faithful,
    AbstractionError, Block, FaithfulnessReport, Partition, PartitionError, QuotientAF,
    SearchMode,
};
pub use af::{AfError, ArgumentId, ArgumentSet, ArgumentationFramework};
pub use order::{
    bounds, check_complete_lattice, check_galois, check_order_properties, kernel_equivalence,
    lift_preorder, quotient_set, Bounds, CheckMode, EquivalenceRelation, FinitePoset,
    FiniteRelation, GaloisPair, GaloisReport, LatticeReport, OrderError, OrderProperties,
};
pub use semantics::{
    complete_labellings, enumerate, grounded, verify, ExtensionSet, Label, Labelling,
    SemanticsKind, SolverError,
};
