//! Reference solvers: the exhaustive oracle, GF(2) elimination, and the
//! conditional-expectations assignment satisfying at least half the weight.

mod brute_force;
mod expectation;
mod f2;

pub use brute_force::{brute_force_min_falsified, DEFAULT_VAR_LIMIT};
pub use expectation::conditional_expectation_assignment;
pub use f2::{f2_rank, f2_solve, BitRow, F2Matrix};

use crate::error::Result;
use crate::system::{Assignment, LinSystem};

/// An assignment together with what it falsifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub assignment: Assignment,
    /// Falsified weight, forced ledger included.
    pub falsified_weight: u64,
    /// Ids of the falsified equations, ascending.
    pub certificate: Vec<usize>,
}

impl SolveResult {
    pub fn from_assignment(system: &LinSystem, assignment: Assignment) -> Result<Self> {
        let falsified_weight = system.evaluate(&assignment)?.falsified;
        let certificate = system.falsified_ids(&assignment)?;
        Ok(Self {
            assignment,
            falsified_weight,
            certificate,
        })
    }

    pub fn satisfied_weight(&self, system: &LinSystem) -> u64 {
        system.total_weight() + system.forced_falsified() - self.falsified_weight
    }
}
