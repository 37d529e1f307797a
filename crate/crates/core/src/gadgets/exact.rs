use std::collections::{BTreeMap, VecDeque};

use super::{compact, require_unit_weights, ReductionTrace, Rule, RuleRecord};
use crate::error::{Error, Result};
use crate::system::{Equation, LinSystem, Var};

fn require_shape(system: &LinSystem, op: &str) -> Result<()> {
    require_unit_weights(system, op)?;
    if let Some(id) = system.equations().iter().position(|eq| eq.arity() != 3) {
        return Err(Error::InstanceClass(format!(
            "{op} expects exactly 3 variables per equation, equation {} has {}",
            id + 1,
            system.equations()[id].arity()
        )));
    }
    if let Some(v) = system.occurrences().iter().position(|&d| d > 3) {
        return Err(Error::InstanceClass(format!(
            "{op} expects every variable in at most 3 equations, x{} is in more",
            v + 1
        )));
    }
    Ok(())
}

/// Removes equations that contain a variable of degree 1 (such an equation
/// can always be satisfied through that variable), repeatedly, then joins
/// the variables of degree 2 in triplets `(x1, x2, x3)` of ascending index.
/// Each triplet gets fresh `z1..z3, u1..u6` and the equations
///
/// ```text
/// x1 + x2 + u1 = 0    u1 + u2 + z1 = 0    u2 + u3 + z1 = 0  (twice)
/// u3 + u1 + z2 = 0    x3 + u4 + z2 = 0    u4 + u5 + z2 = 0
/// u5 + u6 + z3 = 0  (twice)               u6 + u4 + z3 = 0
/// ```
///
/// Unused variables are dropped, so every remaining variable has degree 3.
pub fn enforce_degree_exactly3(system: &LinSystem) -> Result<(LinSystem, ReductionTrace)> {
    require_shape(system, "enforce_degree_exactly3")?;
    let n = system.n();
    let eqs = system.equations();
    let mut trace = ReductionTrace::new(n);
    let lists = system.occurrence_lists();
    let mut degree: Vec<usize> = lists.iter().map(Vec::len).collect();
    let mut alive = vec![true; eqs.len()];

    let mut queue: VecDeque<Var> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        if degree[v] != 1 {
            continue;
        }
        let id = *lists[v]
            .iter()
            .find(|&&id| alive[id])
            .expect("degree 1 means one live equation");
        alive[id] = false;
        trace.push(RuleRecord {
            rule: Rule::RemoveSatisfiable,
            n_before: n,
            n_after: n,
            consumed: vec![eqs[id].clone()],
            produced: vec![],
            var: Some(v),
            relabel: None,
        });
        for &w in eqs[id].lhs() {
            degree[w] -= 1;
            if degree[w] == 1 {
                queue.push_back(w);
            }
        }
    }

    let mut equations: Vec<Equation> = eqs
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(eq, _)| eq.clone())
        .collect();

    let twos: Vec<Var> = (0..n).filter(|&v| degree[v] == 2).collect();
    if twos.len() % 3 != 0 {
        return Err(Error::Contract(format!(
            "{} variables of degree 2, not a multiple of 3",
            twos.len()
        )));
    }
    let mut next = n;
    for t in twos.chunks(3) {
        let (x1, x2, x3) = (t[0], t[1], t[2]);
        let [z1, z2, z3, u1, u2, u3, u4, u5, u6]: [Var; 9] =
            std::array::from_fn(|i| next + i);
        let gadget = vec![
            Equation::unit([x1, x2, u1], false),
            Equation::unit([u1, u2, z1], false),
            Equation::unit([u2, u3, z1], false),
            Equation::unit([u2, u3, z1], false),
            Equation::unit([u3, u1, z2], false),
            Equation::unit([x3, u4, z2], false),
            Equation::unit([u4, u5, z2], false),
            Equation::unit([u5, u6, z3], false),
            Equation::unit([u5, u6, z3], false),
            Equation::unit([u6, u4, z3], false),
        ];
        equations.extend(gadget.iter().cloned());
        trace.push(RuleRecord {
            rule: Rule::TripletGadget,
            n_before: next,
            n_after: next + 9,
            consumed: vec![],
            produced: gadget,
            var: None,
            relabel: None,
        });
        next += 9;
    }

    let grown = LinSystem::from_parts(next, equations, system.forced_falsified());
    let out = compact(&grown, &mut trace);
    Ok((out, trace))
}

/// Removes repeated equations. Three copies use up all occurrences of their
/// variables and are dropped. Two copies of `x + y + z = b` become, with
/// fresh `a1, b1, c1, a2, b2, c2` and every right-hand side `b`,
///
/// ```text
/// x + y + c1     a1 + b1 + c1     a1 + b1 + z
/// x + y + c2     a2 + b2 + c2     a2 + b2 + z
/// a1 + b2 + c1   a2 + b1 + c2
/// ```
pub fn deduplicate_equations(system: &LinSystem) -> Result<(LinSystem, ReductionTrace)> {
    require_shape(system, "deduplicate_equations")?;
    let eqs = system.equations();
    let occ = system.occurrences();
    let mut trace = ReductionTrace::new(system.n());

    let mut groups: BTreeMap<&[Var], Vec<usize>> = BTreeMap::new();
    for (id, eq) in eqs.iter().enumerate() {
        groups.entry(eq.lhs()).or_default().push(id);
    }

    let mut next = system.n();
    let mut equations = Vec::with_capacity(eqs.len());
    for (id, eq) in eqs.iter().enumerate() {
        let group = &groups[eq.lhs()];
        if group.len() == 1 {
            equations.push(eq.clone());
            continue;
        }
        if group[0] != id {
            continue;
        }
        if group.iter().any(|&j| eqs[j].rhs() != eq.rhs()) {
            return Err(Error::Contract(format!(
                "copies of {} with different right-hand sides",
                eq.lhs().iter().map(|v| format!("x{}", v + 1)).collect::<Vec<_>>().join(" + ")
            )));
        }
        match group.len() {
            2 => {
                let (x, y, z) = (eq.lhs()[0], eq.lhs()[1], eq.lhs()[2]);
                let [a1, b1, c1, a2, b2, c2]: [Var; 6] = std::array::from_fn(|i| next + i);
                let r = eq.rhs();
                let gadget = vec![
                    Equation::unit([x, y, c1], r),
                    Equation::unit([a1, b1, c1], r),
                    Equation::unit([a1, b1, z], r),
                    Equation::unit([x, y, c2], r),
                    Equation::unit([a2, b2, c2], r),
                    Equation::unit([a2, b2, z], r),
                    Equation::unit([a1, b2, c1], r),
                    Equation::unit([a2, b1, c2], r),
                ];
                equations.extend(gadget.iter().cloned());
                trace.push(RuleRecord {
                    rule: Rule::DuplicatePair,
                    n_before: next,
                    n_after: next + 6,
                    consumed: vec![eq.clone(), eq.clone()],
                    produced: gadget,
                    var: None,
                    relabel: None,
                });
                next += 6;
            }
            3 => {
                if let Some(&v) = eq.lhs().iter().find(|&&v| occ[v] != 3) {
                    return Err(Error::Contract(format!(
                        "x{} occurs outside its three copies",
                        v + 1
                    )));
                }
                trace.push(RuleRecord {
                    rule: Rule::RemoveTriplicate,
                    n_before: next,
                    n_after: next,
                    consumed: vec![eq.clone(); 3],
                    produced: vec![],
                    var: Some(eq.lhs()[0]),
                    relabel: None,
                });
            }
            c => {
                return Err(Error::Contract(format!(
                    "{c} copies of one equation with every degree at most 3"
                )))
            }
        }
    }

    let grown = LinSystem::from_parts(next, equations, system.forced_falsified());
    let out = compact(&grown, &mut trace);
    Ok((out, trace))
}
