//! Seeded random instance generators for frameworks, partitions, and
//! preorders. All generators are deterministic in their seed, so test
//! corpora are reproducible.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::abstraction::Partition;
use crate::af::ArgumentationFramework;
use crate::order::FiniteRelation;

fn arg_ids(n: usize) -> Vec<String> {
    let width = if n <= 1 { 1 } else { (n - 1).to_string().len() };
    (0..n).map(|i| format!("a{i:0width$}")).collect()
}

/// A framework with `n` arguments where every ordered pair (including
/// self-attacks) becomes an attack with probability `density`.
pub fn random_af(n: usize, density: f64, seed: u64) -> ArgumentationFramework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids = arg_ids(n);
    let mut attacks = Vec::new();
    for a in &ids {
        for b in &ids {
            if rng.gen_bool(density) {
                attacks.push((a.clone(), b.clone()));
            }
        }
    }
    ArgumentationFramework::new(ids, attacks).expect("generated identifiers are valid")
}

/// A framework with `n` arguments and exactly `m` distinct attacks
/// sampled uniformly (requires `m <= n^2`).
pub fn random_af_with_attack_count(n: usize, m: usize, seed: u64) -> ArgumentationFramework {
    assert!(m <= n * n, "cannot place {m} distinct attacks on {n} arguments");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids = arg_ids(n);
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        chosen.insert((a, b));
    }
    let attacks: Vec<(String, String)> = chosen
        .into_iter()
        .map(|(a, b)| (ids[a].clone(), ids[b].clone()))
        .collect();
    ArgumentationFramework::new(ids, attacks).expect("generated identifiers are valid")
}

/// A uniformly random-ish partition of the framework's arguments:
/// every argument draws a block index below a random block budget.
pub fn random_partition(af: &ArgumentationFramework, seed: u64) -> Partition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = af.arg_count();
    if n == 0 {
        return Partition::identity(af);
    }
    let budget = rng.gen_range(1..=n);
    let codes: Vec<usize> = (0..n).map(|_| rng.gen_range(0..budget)).collect();
    Partition::from_block_codes(af, &codes)
}

/// A random preorder over `k` elements: random pairs closed under
/// reflexivity and transitivity.
pub fn random_preorder(k: usize, density: f64, seed: u64) -> FiniteRelation<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems: Vec<String> = (0..k).map(|i| format!("e{i}")).collect();
    let mut holds = vec![vec![false; k]; k];
    for (i, row) in holds.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = i == j || rng.gen_bool(density);
        }
    }
    // Transitive closure (Floyd-Warshall style).
    for via in 0..k {
        let via_row = holds[via].clone();
        for row in holds.iter_mut() {
            if row[via] {
                for (slot, &reach) in row.iter_mut().zip(&via_row) {
                    *slot = *slot || reach;
                }
            }
        }
    }
    FiniteRelation::from_fn(elems.clone(), |x, y| {
        let ix = elems.iter().position(|e| e == x).unwrap();
        let iy = elems.iter().position(|e| e == y).unwrap();
        holds[ix][iy]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::check_order_properties;

    #[test]
    fn generators_are_deterministic_in_their_seed() {
        assert_eq!(random_af(8, 0.3, 5), random_af(8, 0.3, 5));
        assert_ne!(random_af(8, 0.3, 5), random_af(8, 0.3, 6));
        let af = random_af(6, 0.2, 9);
        assert_eq!(random_partition(&af, 1), random_partition(&af, 1));
    }

    #[test]
    fn attack_count_generator_hits_its_target() {
        let af = random_af_with_attack_count(30, 90, 11);
        assert_eq!(af.arg_count(), 30);
        assert_eq!(af.attack_count(), 90);
    }

    #[test]
    fn random_partitions_cover_the_framework() {
        for seed in 0..20 {
            let af = random_af(7, 0.25, seed);
            let p = random_partition(&af, seed * 31);
            let covered: usize = p.blocks().iter().map(|b| b.members.len()).sum();
            assert_eq!(covered, af.arg_count());
        }
    }

    #[test]
    fn random_preorders_are_preorders() {
        for seed in 0..20 {
            let rel = random_preorder(6, 0.3, seed);
            let props = check_order_properties(&rel);
            assert!(props.is_preorder(), "seed {seed}");
        }
    }
}
