use super::SolveResult;
use crate::system::{Assignment, LinSystem};

/// Derandomized uniform assignment: fixes `x1, ..., xn` in order, each time
/// picking the value with the larger conditional expected satisfied weight.
///
/// An equation with an unassigned variable is satisfied with probability
/// 1/2, so expectations are tracked as doubled weights. Only equations whose
/// last unassigned variable is the one being fixed can tip the comparison.
/// The result satisfies at least half of the weight of the non-constant
/// equations.
pub fn conditional_expectation_assignment(system: &LinSystem) -> SolveResult {
    let n = system.n();
    let equations = system.equations();
    let occ = system.occurrence_lists();
    let mut unassigned: Vec<usize> = equations.iter().map(|eq| eq.arity()).collect();
    let mut parity = vec![false; equations.len()];
    let mut a = Assignment::zeros(n);

    for var in 0..n {
        // doubled expected weight contributed by equations closed by `var`
        let mut gain = [0u64; 2];
        for &id in &occ[var] {
            if unassigned[id] == 1 {
                let eq = &equations[id];
                let value_that_satisfies = usize::from(parity[id] ^ eq.rhs());
                gain[value_that_satisfies] += 2 * eq.weight();
            }
        }
        let value = gain[1] > gain[0];
        a.set(var, value);
        for &id in &occ[var] {
            unassigned[id] -= 1;
            parity[id] ^= value;
        }
    }

    SolveResult::from_assignment(system, a).expect("assignment has length n")
}
