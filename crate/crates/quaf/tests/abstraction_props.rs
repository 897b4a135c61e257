//! Randomized properties of partitions, quotients, and faithfulness.

use quaf::abstraction::{
    classify, coarsest_faithful, partition_galois, quotient_af, refine_to_faithful, Partition,
    SearchMode,
};
use quaf::af::ArgumentSet;
use quaf::generate::{random_af, random_partition};
use quaf::order::CheckMode;
use quaf::semantics::SemanticsKind;

/// Every partition induces a Galois insertion between the powerset
/// lattices, verified exhaustively on small frameworks.
#[test]
fn partitions_induce_galois_insertions() {
    for seed in 0..60u64 {
        let af = random_af(1 + (seed as usize % 9), 0.3, seed);
        let p = random_partition(&af, seed ^ 0xabcd);
        let report = partition_galois(&p);
        assert_eq!(report.mode, CheckMode::Exhaustive, "seed {seed}");
        assert!(report.is_connection(), "seed {seed}: {report:?}");
        assert!(report.insertion_holds, "seed {seed}");
        assert!(report.counterexamples.is_empty(), "seed {seed}");
    }
}

/// gamma after alpha is the identity exactly on unions of blocks.
#[test]
fn exactness_characterizes_block_unions() {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    for seed in 0..40u64 {
        let af = random_af(1 + (seed as usize % 8), 0.3, seed.wrapping_mul(17) + 1);
        let p = random_partition(&af, seed ^ 0x1234);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let s: ArgumentSet = af
                .args()
                .iter()
                .filter(|_| rng.gen_bool(0.4))
                .cloned()
                .collect();
            let round_trip = p.gamma(&p.alpha(&s).unwrap()).unwrap();
            let is_block_union = p
                .blocks()
                .iter()
                .all(|b| b.members.is_subset(&s) || b.members.is_disjoint(&s));
            assert_eq!(round_trip == s, is_block_union, "seed {seed} set {s}");
            // gamma ∘ alpha is a closure operator: extensive and idempotent.
            assert!(s.is_subset(&round_trip), "seed {seed}");
            let twice = p.gamma(&p.alpha(&round_trip).unwrap()).unwrap();
            assert_eq!(twice, round_trip, "seed {seed}");
        }
    }
}

/// The identity partition is faithful for every semantics: its
/// quotient is the framework itself.
#[test]
fn identity_partitions_are_faithful() {
    for seed in 0..40u64 {
        let af = random_af(seed as usize % 9, 0.3, seed.wrapping_mul(23) + 9);
        let p = Partition::identity(&af);
        for kind in SemanticsKind::ALL {
            let report = classify(&af, &p, kind).unwrap();
            assert!(report.sound && report.faithful, "{kind} seed {seed}");
        }
    }
}

/// Abstract attacks are exactly the existential lifting of concrete
/// ones.
#[test]
fn quotient_attacks_have_concrete_witnesses() {
    for seed in 0..40u64 {
        let af = random_af(1 + (seed as usize % 9), 0.35, seed.wrapping_mul(29) + 2);
        let p = random_partition(&af, seed ^ 0x7777);
        let q = quotient_af(&af, &p).unwrap();

        for b1 in p.blocks() {
            for b2 in p.blocks() {
                let lifted = q.abstract_af.attacks_pair(&b1.name, &b2.name);
                let witnessed = b1.members.iter().any(|a| {
                    let targets = af.targets(a).unwrap();
                    b2.members.iter().any(|b| targets.contains(b))
                });
                assert_eq!(lifted, witnessed, "seed {seed} ({}, {})", b1.name, b2.name);
            }
        }
    }
}

/// Refinement from the coarsest partition terminates in at most
/// `n - 1` splits and lands on a faithful partition.
#[test]
fn refinement_terminates_quickly() {
    for seed in 0..25u64 {
        let n = 2 + (seed as usize % 6);
        let af = random_af(n, 0.3, seed.wrapping_mul(43) + 5);
        let single = Partition::from_block_codes(&af, &vec![0; n]);
        for kind in [SemanticsKind::Grounded, SemanticsKind::Stable] {
            let (p, steps) = refine_to_faithful(&af, &single, kind).unwrap();
            assert!(steps < n, "{kind} seed {seed}: {steps} steps");
            assert!(classify(&af, &p, kind).unwrap().faithful, "{kind} seed {seed}");
            assert_eq!(p.len(), 1 + steps, "each step adds one block");
        }
    }
}

/// The exhaustive search is optimal, so greedy can never produce a
/// coarser faithful partition.
#[test]
fn exhaustive_search_is_at_least_as_coarse_as_greedy() {
    for seed in 0..15u64 {
        let af = random_af(1 + (seed as usize % 6), 0.3, seed.wrapping_mul(53) + 4);
        for kind in [SemanticsKind::Grounded, SemanticsKind::Preferred] {
            let greedy = coarsest_faithful(&af, kind, SearchMode::Greedy).unwrap();
            let best = coarsest_faithful(&af, kind, SearchMode::Exhaustive).unwrap();
            assert!(classify(&af, &greedy, kind).unwrap().faithful);
            assert!(classify(&af, &best, kind).unwrap().faithful);
            assert!(
                best.len() <= greedy.len(),
                "{kind} seed {seed}: optimum {} vs greedy {}",
                best.len(),
                greedy.len()
            );
        }
    }
}

/// Classification reports are internally consistent.
#[test]
fn classification_reports_are_consistent() {
    for seed in 0..40u64 {
        let af = random_af(1 + (seed as usize % 8), 0.3, seed.wrapping_mul(61) + 8);
        let p = random_partition(&af, seed ^ 0x2468);
        for kind in SemanticsKind::ALL {
            let report = classify(&af, &p, kind).unwrap();
            assert_eq!(report.semantics, kind);
            assert_eq!(report.sound, report.lost.is_empty(), "seed {seed}");
            assert_eq!(
                report.faithful,
                report.sound && report.spurious.is_empty(),
                "seed {seed}"
            );
            // Spurious sets never appear in the image.
            for s in &report.spurious {
                assert!(!report.image.contains(s), "seed {seed}");
            }
            // Lost extensions are concrete, spurious ones abstract.
            for l in &report.lost {
                assert!(l.iter().all(|id| af.contains(id)), "seed {seed}");
            }
            for s in &report.spurious {
                assert!(s.iter().all(|b| p.block_named(b).is_some()), "seed {seed}");
            }
        }
    }
}
