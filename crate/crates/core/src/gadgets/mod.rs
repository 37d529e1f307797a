//! Instance transformations that preserve the minimum falsified weight.
//!
//! [`oddset_to_lin2`] encodes Odd Set as a system with at most three
//! variables per equation. [`to_eq3_eq3`] then rewrites any such system into
//! one where every equation has exactly three variables, every variable
//! occurs exactly three times, all weights are 1 and no two equations share
//! a left-hand side. Each step appends to a [`ReductionTrace`] that maps
//! assignments of the result back to the input.

mod arity;
mod degree;
mod exact;
mod oddset;
mod trace;

pub use arity::expand_arity_to_3;
pub use degree::{normalize_max_degree3, reduce_degree4, reduce_degree5plus};
pub use exact::{deduplicate_equations, enforce_degree_exactly3};
pub use oddset::{chain_block_parity_check, oddset_to_lin2, OddSetInstance, OddSetReduction};
pub use trace::{ReductionTrace, Rule, RuleRecord};

use crate::error::{Error, Result};
use crate::system::{Equation, LinSystem};

fn require_unit_weights(system: &LinSystem, op: &str) -> Result<()> {
    match system.equations().iter().position(|eq| eq.weight() != 1) {
        Some(id) => Err(Error::InstanceClass(format!(
            "{op} expects unit weights, equation {} has weight {}",
            id + 1,
            system.equations()[id].weight()
        ))),
        None => Ok(()),
    }
}

fn require_max_arity(system: &LinSystem, max: usize, op: &str) -> Result<()> {
    match system.equations().iter().position(|eq| eq.arity() > max) {
        Some(id) => Err(Error::InstanceClass(format!(
            "{op} expects at most {max} variables per equation, equation {} has {}",
            id + 1,
            system.equations()[id].arity()
        ))),
        None => Ok(()),
    }
}

/// Merges `(L, 0)` of weight `a` with `(L, 1)` of weight `b`: every
/// assignment falsifies exactly one of them, so `min(a, b)` moves to the
/// forced ledger and only the heavier one survives, with weight `|a - b|`.
/// Expects a normalized system.
fn cancel_complementary(system: &LinSystem, trace: &mut ReductionTrace) -> LinSystem {
    let mut forced = system.forced_falsified();
    let mut out: Vec<Equation> = Vec::with_capacity(system.m());
    let eqs = system.equations();
    let mut i = 0;
    while i < eqs.len() {
        let eq = &eqs[i];
        match eqs.get(i + 1) {
            Some(next) if next.lhs() == eq.lhs() => {
                let (a, b) = (eq.weight(), next.weight());
                forced += a.min(b);
                let produced = match a.cmp(&b) {
                    std::cmp::Ordering::Less => vec![next.with_weight(b - a)],
                    std::cmp::Ordering::Greater => vec![eq.with_weight(a - b)],
                    std::cmp::Ordering::Equal => vec![],
                };
                trace.push(RuleRecord {
                    rule: Rule::CancelComplementary,
                    n_before: system.n(),
                    n_after: system.n(),
                    consumed: vec![eq.clone(), next.clone()],
                    produced: produced.clone(),
                    var: None,
                    relabel: None,
                });
                out.extend(produced);
                i += 2;
            }
            _ => {
                out.push(eq.clone());
                i += 1;
            }
        }
    }
    LinSystem::from_parts(system.n(), out, forced)
}

/// Drops variables that occur nowhere and renumbers the rest in order.
fn compact(system: &LinSystem, trace: &mut ReductionTrace) -> LinSystem {
    let occ = system.occurrences();
    let kept: Vec<usize> = (0..system.n()).filter(|&v| occ[v] > 0).collect();
    if kept.len() == system.n() {
        return system.clone();
    }
    let mut new_index = vec![usize::MAX; system.n()];
    for (i, &v) in kept.iter().enumerate() {
        new_index[v] = i;
    }
    let equations = system
        .equations()
        .iter()
        .map(|eq| {
            // relabelling is monotone, so lhs stays sorted
            let lhs = eq.lhs().iter().map(|&v| new_index[v]).collect();
            Equation::from_sorted(lhs, eq.rhs(), eq.weight())
        })
        .collect();
    trace.push(RuleRecord {
        rule: Rule::Compact,
        n_before: system.n(),
        n_after: kept.len(),
        consumed: vec![],
        produced: vec![],
        var: None,
        relabel: Some(kept.clone()),
    });
    LinSystem::from_parts(kept.len(), equations, system.forced_falsified())
}

/// The full pipeline: normalize, cancel complementary pairs, expand weights
/// into unit copies, bring every degree down to 3, expand every equation to
/// three variables, bring every degree up to exactly 3, remove duplicates.
///
/// The result is either empty or has profile `(r, s) = (3, 3)` with unit
/// weights and distinct left-hand sides; its minimum falsified weight,
/// counting the forced ledger, equals that of the input.
pub fn to_eq3_eq3(system: &LinSystem) -> Result<(LinSystem, ReductionTrace)> {
    require_max_arity(system, 3, "to_eq3_eq3")?;
    let mut trace = ReductionTrace::new(system.n());
    let s = cancel_complementary(&system.normalize(), &mut trace);
    let s = s.expand_unit_weights();

    let (s, t) = normalize_max_degree3(&s)?;
    trace.append(t)?;
    let (s, t) = expand_arity_to_3(&s)?;
    trace.append(t)?;
    let (s, t) = enforce_degree_exactly3(&s)?;
    trace.append(t)?;
    let (s, t) = deduplicate_equations(&s)?;
    trace.append(t)?;

    let p = s.profile();
    let shaped = s.m() == 0
        || (p.max_arity == 3
            && s.equations().iter().all(|eq| eq.arity() == 3)
            && s.occurrences().iter().all(|&d| d == 3)
            && p.unit_weights
            && p.distinct_lhs);
    if !shaped {
        return Err(Error::Contract(format!(
            "pipeline output is not (=3,=3): {p:?}"
        )));
    }
    Ok((s, trace))
}
