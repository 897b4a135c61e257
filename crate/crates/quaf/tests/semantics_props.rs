//! Randomized cross-checks of the solver: agreement with the
//! brute-force oracle and the defining laws of each semantics.

use quaf::af::ArgumentSet;
use quaf::generate::random_af;
use quaf::oracle::oracle_enumerate;
use quaf::semantics::{complete_labellings, enumerate, grounded, verify, Label, SemanticsKind};

const DENSITIES: [f64; 3] = [0.1, 0.3, 0.5];

#[test]
fn solver_agrees_with_the_oracle() {
    for seed in 0..40u64 {
        let n = 1 + (seed as usize % 9);
        for density in DENSITIES {
            let af = random_af(n, density, seed);
            for kind in SemanticsKind::ALL {
                let engine = enumerate(&af, kind).unwrap();
                let oracle = oracle_enumerate(&af, kind).unwrap();
                assert_eq!(
                    engine, oracle,
                    "n={n} density={density} seed={seed} {kind}"
                );
            }
        }
    }
}

/// Inclusion chain: stable ⊆ preferred ⊆ complete ⊆ admissible, and
/// the grounded extension is the least complete one.
#[test]
fn extension_families_nest_as_expected() {
    for seed in 0..30u64 {
        let af = random_af(1 + (seed as usize % 10), 0.25, seed.wrapping_mul(97) + 1);
        let admissible = enumerate(&af, SemanticsKind::Admissible).unwrap();
        let complete = enumerate(&af, SemanticsKind::Complete).unwrap();
        let preferred = enumerate(&af, SemanticsKind::Preferred).unwrap();
        let stable = enumerate(&af, SemanticsKind::Stable).unwrap();
        let ground = grounded(&af);

        for s in stable.iter() {
            assert!(preferred.contains(s), "stable ⊆ preferred (seed {seed})");
        }
        for p in preferred.iter() {
            assert!(complete.contains(p), "preferred ⊆ complete (seed {seed})");
        }
        for c in complete.iter() {
            assert!(admissible.contains(c), "complete ⊆ admissible (seed {seed})");
            assert!(ground.is_subset(c), "grounded is least (seed {seed})");
        }
        assert!(complete.contains(&ground), "grounded is complete (seed {seed})");

        // The grounded extension is the intersection of all complete ones.
        let intersection = complete
            .iter()
            .skip(1)
            .fold(complete.iter().next().unwrap().clone(), |acc, c| {
                acc.intersection(c)
            });
        assert_eq!(intersection, ground, "seed {seed}");
    }
}

/// Every enumerated extension satisfies its defining fixpoint /
/// conflict-freeness property, restated here independently.
#[test]
fn extensions_satisfy_their_defining_properties() {
    for seed in 0..30u64 {
        let af = random_af(1 + (seed as usize % 10), 0.35, seed.wrapping_mul(31) + 7);
        let all: Vec<String> = af.args().to_vec();

        for kind in SemanticsKind::ALL {
            for ext in enumerate(&af, kind).unwrap().iter() {
                assert!(af.is_conflict_free(ext).unwrap(), "{kind} seed {seed}");
                let defended = af.characteristic(ext).unwrap();
                match kind {
                    SemanticsKind::Admissible | SemanticsKind::Preferred => {
                        assert!(ext.is_subset(&defended), "{kind} seed {seed}");
                    }
                    SemanticsKind::Grounded | SemanticsKind::Complete => {
                        assert_eq!(ext, &defended, "{kind} seed {seed}");
                    }
                    SemanticsKind::Stable => {
                        for a in &all {
                            let reached = ext.contains(a)
                                || ext.iter().any(|b| {
                                    af.targets(b).unwrap().contains(a)
                                });
                            assert!(reached, "{kind} seed {seed}");
                        }
                    }
                }
                assert!(verify(&af, ext, kind).unwrap(), "{kind} seed {seed}");
            }
        }
    }
}

/// `verify` must agree with membership in the enumerated family.
#[test]
fn verify_matches_enumeration() {
    for seed in 0..20u64 {
        let n = 1 + (seed as usize % 7);
        let af = random_af(n, 0.3, seed.wrapping_mul(13) + 3);
        let ids = af.args();
        for kind in SemanticsKind::ALL {
            let family = enumerate(&af, kind).unwrap();
            for mask in 0u32..1 << n {
                let set: ArgumentSet = (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| ids[i].clone())
                    .collect();
                assert_eq!(
                    verify(&af, &set, kind).unwrap(),
                    family.contains(&set),
                    "{kind} seed {seed} set {set}"
                );
            }
        }
    }
}

/// Complete labellings and complete extensions are in bijection via
/// the IN sets, and the labels obey the legality rules.
#[test]
fn labellings_are_legal_and_match_extensions() {
    for seed in 0..30u64 {
        let af = random_af(1 + (seed as usize % 9), 0.3, seed.wrapping_mul(41) + 11);
        let labellings = complete_labellings(&af).unwrap();
        let complete = enumerate(&af, SemanticsKind::Complete).unwrap();
        assert_eq!(labellings.len(), complete.len(), "seed {seed}");

        for lab in &labellings {
            let in_set = lab.in_set();
            assert!(complete.contains(&in_set), "seed {seed}");
            for arg in af.args() {
                let attackers = af.attackers(arg).unwrap();
                let labels: Vec<Label> =
                    attackers.iter().map(|b| lab.label(b).unwrap()).collect();
                match lab.label(arg).unwrap() {
                    Label::In => {
                        assert!(labels.iter().all(|&l| l == Label::Out), "seed {seed}")
                    }
                    Label::Out => {
                        assert!(labels.contains(&Label::In), "seed {seed}")
                    }
                    Label::Undec => {
                        assert!(labels.iter().all(|&l| l != Label::In), "seed {seed}");
                        assert!(labels.contains(&Label::Undec), "seed {seed}");
                    }
                }
            }
        }
    }
}

/// The characteristic function is monotone w.r.t. inclusion.
#[test]
fn characteristic_function_is_monotone() {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    for seed in 0..30u64 {
        let af = random_af(2 + (seed as usize % 8), 0.3, seed.wrapping_mul(59) + 5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let small: ArgumentSet = af
            .args()
            .iter()
            .filter(|_| rng.gen_bool(0.3))
            .cloned()
            .collect();
        let large: ArgumentSet = small.union(
            &af.args()
                .iter()
                .filter(|_| rng.gen_bool(0.3))
                .cloned()
                .collect(),
        );
        let f_small = af.characteristic(&small).unwrap();
        let f_large = af.characteristic(&large).unwrap();
        assert!(f_small.is_subset(&f_large), "seed {seed}");
    }
}
