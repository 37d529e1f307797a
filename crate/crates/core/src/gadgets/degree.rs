use super::{require_unit_weights, ReductionTrace, Rule, RuleRecord};
use crate::error::{Error, Result};
use crate::system::{Equation, LinSystem, Var};

const CYCLE4: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 3), (3, 0)];

const K33: [(usize, usize); 9] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 0),
    (0, 3),
    (1, 4),
    (2, 5),
];

fn occurrence_ids(system: &LinSystem, x: Var) -> Result<Vec<usize>> {
    if x >= system.n() {
        return Err(Error::VariableOutOfRange {
            var: x,
            n: system.n(),
        });
    }
    Ok(system
        .equations()
        .iter()
        .enumerate()
        .filter(|(_, eq)| eq.contains(x))
        .map(|(id, _)| id)
        .collect())
}

/// Replaces `x` by `parts` variables: `x` itself as the first, then fresh
/// ones. Occurrence `t` (in equation order) goes to part `slot(t)`; the
/// gadget equations `x_a + x_b = 0` are appended `copies` times.
fn split(
    system: &LinSystem,
    x: Var,
    ids: &[usize],
    rule: Rule,
    slot: impl Fn(usize) -> usize,
    gadget: &[(usize, usize)],
    copies: usize,
) -> (LinSystem, ReductionTrace) {
    let n_before = system.n();
    let parts = gadget.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0) + 1;
    let vars: Vec<Var> = std::iter::once(x).chain(n_before..n_before + parts - 1).collect();

    let mut equations = system.equations().to_vec();
    let mut consumed = Vec::with_capacity(ids.len());
    let mut produced = Vec::new();
    for (t, &id) in ids.iter().enumerate() {
        consumed.push(equations[id].clone());
        equations[id] = equations[id].substitute(x, vars[slot(t)]);
        produced.push(equations[id].clone());
    }
    for _ in 0..copies {
        for &(a, b) in gadget {
            let eq = Equation::unit([vars[a], vars[b]], false);
            produced.push(eq.clone());
            equations.push(eq);
        }
    }

    let n_after = n_before + parts - 1;
    let mut trace = ReductionTrace::new(n_before);
    trace.push(RuleRecord {
        rule,
        n_before,
        n_after,
        consumed,
        produced,
        var: Some(x),
        relabel: None,
    });
    (
        LinSystem::from_parts(n_after, equations, system.forced_falsified()),
        trace,
    )
}

/// `x` of degree 4 becomes `x_1..x_4` (with `x_1 = x`), one per occurrence,
/// tied together by the cycle `x_1 + x_2 = 0, ..., x_4 + x_1 = 0`.
pub fn reduce_degree4(system: &LinSystem, x: Var) -> Result<(LinSystem, ReductionTrace)> {
    require_unit_weights(system, "reduce_degree4")?;
    let ids = occurrence_ids(system, x)?;
    if ids.len() != 4 {
        return Err(Error::InstanceClass(format!(
            "reduce_degree4 needs a variable of degree 4, x{} has degree {}",
            x + 1,
            ids.len()
        )));
    }
    Ok(split(system, x, &ids, Rule::SplitDegree4, |t| t, &CYCLE4, 1))
}

/// `x` of degree `d >= 5` becomes `x_1..x_6` (with `x_1 = x`). Occurrences
/// are dealt out from `x_6` down to `x_1` in turn, so `x_6` gets the most.
/// Each of the nine equations of a `K_{3,3}` on the new variables is added
/// `ceil((d - 2) / 6)` times.
pub fn reduce_degree5plus(system: &LinSystem, x: Var) -> Result<(LinSystem, ReductionTrace)> {
    require_unit_weights(system, "reduce_degree5plus")?;
    let ids = occurrence_ids(system, x)?;
    let d = ids.len();
    if d < 5 {
        return Err(Error::InstanceClass(format!(
            "reduce_degree5plus needs a variable of degree at least 5, x{} has degree {d}",
            x + 1
        )));
    }
    let copies = (d - 2).div_ceil(6);
    Ok(split(
        system,
        x,
        &ids,
        Rule::SplitDegree5Plus,
        |t| 5 - t % 6,
        &K33,
        copies,
    ))
}

/// Applies the degree rules to a variable of maximum degree (the smallest
/// such index) until every variable occurs at most three times.
pub fn normalize_max_degree3(system: &LinSystem) -> Result<(LinSystem, ReductionTrace)> {
    require_unit_weights(system, "normalize_max_degree3")?;
    let mut trace = ReductionTrace::new(system.n());
    let mut current = system.clone();
    loop {
        let occ = current.occurrences();
        let Some((x, &d)) = occ
            .iter()
            .enumerate()
            .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
        else {
            break;
        };
        let (next, t) = match d {
            0..=3 => break,
            4 => reduce_degree4(&current, x)?,
            _ => reduce_degree5plus(&current, x)?,
        };
        trace.append(t)?;
        current = next;
    }
    Ok((current, trace))
}
