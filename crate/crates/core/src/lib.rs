//! Solvers and reductions for MaxLin2: weighted systems of linear equations
//! over GF(2) where the goal is to minimize the falsified weight.
//!
//! - [`system`]: equations, systems, assignments, normal forms.
//! - [`baseline`]: exhaustive oracle, GF(2) elimination, half-weight
//!   approximation.
//! - [`occ2`]: exact polynomial solver when each variable occurs at most twice.
//! - [`bipartize`]: graphs and parameterized edge bipartization.
//! - [`fpt`]: parameterized solver for equations with at most two variables.
//! - [`gadgets`]: Odd Set reduction and normalization to instances where
//!   every equation has three variables and every variable three occurrences.

pub mod baseline;
pub mod bipartize;
pub mod error;
pub mod fpt;
pub mod gadgets;
pub mod occ2;
pub mod system;

pub use baseline::SolveResult;
pub use error::{Error, Result};
pub use system::{Assignment, Equation, Evaluation, InstanceProfile, LinSystem, Var};
