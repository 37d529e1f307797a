use super::{require_max_arity, require_unit_weights, ReductionTrace, Rule, RuleRecord};
use crate::error::Result;
use crate::system::{Equation, LinSystem};

/// Rewrites every equation with fewer than three variables into equations
/// with exactly three, using fresh variables:
///
/// ```text
/// x = b      ->  a + b' + x = b,  u + v + a = 0,  u + v + b' = 0
/// x + y = 0  ->  u + v + x = 0,  u + v + y = 0
/// x + y = 1  ->  u + v + x = 0,  u + v + y = 1
/// ```
///
/// An equation with no variables is folded into the forced ledger.
pub fn expand_arity_to_3(system: &LinSystem) -> Result<(LinSystem, ReductionTrace)> {
    require_unit_weights(system, "expand_arity_to_3")?;
    require_max_arity(system, 3, "expand_arity_to_3")?;

    let mut n = system.n();
    let mut forced = system.forced_falsified();
    let mut trace = ReductionTrace::new(n);
    let mut equations = Vec::with_capacity(3 * system.m());

    for eq in system.equations() {
        let n_before = n;
        let produced = match *eq.lhs() {
            [] => {
                forced += u64::from(eq.rhs());
                vec![]
            }
            [x] => {
                let (a, b, u, v) = (n, n + 1, n + 2, n + 3);
                n += 4;
                vec![
                    Equation::unit([a, b, x], eq.rhs()),
                    Equation::unit([u, v, a], false),
                    Equation::unit([u, v, b], false),
                ]
            }
            [x, y] => {
                let (u, v) = (n, n + 1);
                n += 2;
                vec![
                    Equation::unit([u, v, x], false),
                    Equation::unit([u, v, y], eq.rhs()),
                ]
            }
            _ => {
                equations.push(eq.clone());
                continue;
            }
        };
        equations.extend(produced.iter().cloned());
        trace.push(RuleRecord {
            rule: Rule::ExpandArity,
            n_before,
            n_after: n,
            consumed: vec![eq.clone()],
            produced,
            var: None,
            relabel: None,
        });
    }

    Ok((LinSystem::from_parts(n, equations, forced), trace))
}
