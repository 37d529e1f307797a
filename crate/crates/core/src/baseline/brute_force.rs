use super::SolveResult;
use crate::error::{Error, Result};
use crate::system::{Assignment, LinSystem};

pub const DEFAULT_VAR_LIMIT: usize = 24;

/// Exact minimum falsified weight over all `2^n` assignments.
///
/// Assignments are visited in Gray-code order so each step flips one
/// variable and only touches the equations containing it. Among optimal
/// assignments the one that is smallest when read as the bit string
/// `x1 x2 ... xn` is returned.
pub fn brute_force_min_falsified(system: &LinSystem, var_limit: usize) -> Result<SolveResult> {
    let n = system.n();
    let limit = var_limit.min(63);
    if n > limit {
        return Err(Error::Capacity {
            what: "brute force variable count",
            size: n,
            limit,
        });
    }

    let occ = system.occurrence_lists();
    let equations = system.equations();
    // all-zero start: an equation holds iff its rhs is 0
    let mut satisfied: Vec<bool> = equations.iter().map(|eq| !eq.rhs()).collect();
    let mut falsified: u64 = equations
        .iter()
        .filter(|eq| eq.rhs())
        .map(|eq| eq.weight())
        .sum();

    let key = |mask: u64| if n == 0 { 0 } else { mask.reverse_bits() >> (64 - n) };
    let mut mask = 0u64;
    let mut best = (falsified, key(mask), mask);
    for step in 1..(1u64 << n) {
        let var = step.trailing_zeros() as usize;
        mask ^= 1 << var;
        for &id in &occ[var] {
            let w = equations[id].weight();
            if satisfied[id] {
                falsified += w;
            } else {
                falsified -= w;
            }
            satisfied[id] = !satisfied[id];
        }
        let candidate = (falsified, key(mask), mask);
        if candidate < best {
            best = candidate;
        }
    }

    let result = SolveResult::from_assignment(system, Assignment::from_mask(best.2, n))?;
    debug_assert_eq!(result.falsified_weight, best.0 + system.forced_falsified());
    Ok(result)
}
