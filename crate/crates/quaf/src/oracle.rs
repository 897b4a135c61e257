//! Reference enumeration by exhaustive sweep.
//!
//! Sweeps all `2^n` argument subsets as bitmasks and applies the
//! textbook definitions directly: conflict-freedom, self-defense,
//! fixpoints of defense, full range for stable, set-inclusion extrema
//! for grounded and preferred. Deliberately shares no machinery with
//! the labelling engine in [`crate::semantics`], so the two
//! implementations can validate each other.

use crate::af::{ArgumentSet, ArgumentationFramework};
use crate::semantics::{ExtensionSet, SemanticsKind, SolverError};

/// Hard cap for the sweep: past this the subset space is unreasonable.
pub const ORACLE_MAX_ARGS: usize = 20;

/// Enumerates extensions by brute force. Same contract as
/// [`crate::semantics::enumerate`], capped at [`ORACLE_MAX_ARGS`].
pub fn oracle_enumerate(
    af: &ArgumentationFramework,
    kind: SemanticsKind,
) -> Result<ExtensionSet, SolverError> {
    let n = af.arg_count();
    if n > ORACLE_MAX_ARGS {
        return Err(SolverError::BoundExceeded {
            args: n,
            limit: ORACLE_MAX_ARGS,
        });
    }

    // Per-argument attack masks.
    let mut targets = vec![0u64; n];
    let mut attackers = vec![0u64; n];
    for (i, a) in af.args().iter().enumerate() {
        for (j, b) in af.args().iter().enumerate() {
            if af.attacks_pair(a, b) {
                targets[i] |= 1 << j;
                attackers[j] |= 1 << i;
            }
        }
    }

    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let members = |mask: u64| (0..n).filter(move |&i| mask >> i & 1 == 1);

    let conflict_free = |mask: u64| members(mask).all(|i| targets[i] & mask == 0);
    let attacked_by = |mask: u64| members(mask).fold(0u64, |acc, i| acc | targets[i]);
    // Arguments whose every attacker is attacked by the set.
    let defended_by = |mask: u64| {
        let countered = attacked_by(mask);
        (0..n)
            .filter(|&i| attackers[i] & !countered == 0)
            .fold(0u64, |acc, i| acc | 1 << i)
    };

    let mut admissible: Vec<u64> = Vec::new();
    let mut complete: Vec<u64> = Vec::new();
    let mut stable: Vec<u64> = Vec::new();
    for mask in 0..=full {
        if !conflict_free(mask) {
            continue;
        }
        let defended = defended_by(mask);
        if mask & !defended == 0 {
            admissible.push(mask);
        }
        if mask == defended {
            complete.push(mask);
        }
        if mask | attacked_by(mask) == full {
            stable.push(mask);
        }
    }

    let chosen: Vec<u64> = match kind {
        SemanticsKind::Admissible => admissible,
        SemanticsKind::Complete => complete,
        SemanticsKind::Stable => stable,
        SemanticsKind::Grounded => {
            // The unique least complete extension.
            let least = complete
                .iter()
                .copied()
                .find(|&c| complete.iter().all(|&d| c & !d == 0))
                .expect("a least complete extension always exists");
            vec![least]
        }
        SemanticsKind::Preferred => {
            // Inclusion-maximal admissible sets.
            admissible
                .iter()
                .copied()
                .filter(|&s| {
                    !admissible
                        .iter()
                        .any(|&t| t != s && s & !t == 0)
                })
                .collect()
        }
    };

    let sets: Vec<ArgumentSet> = chosen
        .into_iter()
        .map(|mask| af.set_from_indices(members(mask).map(|i| i as u32)))
        .collect();
    Ok(ExtensionSet::new(kind, sets))
}
