//! Deciding whether a system of equations with at most two variables each
//! admits an assignment falsifying weight at most `k`, in time exponential
//! only in `k`.
//!
//! Equations `xi + xj = 0` are first rewritten through a fresh `y` as
//! `xi + y = 1` and `xj + y = 1`. Every remaining equation is then an edge
//! of a graph on the variables plus two constant vertices `v'` and `v''`:
//! `x + y = 1` joins `x` and `y`, `x = 0` joins `v'` and `x`, `x = 1` joins
//! `x` and `v''`, and a bundle of weight `k + 1` joins `v'` to `v''`. An
//! assignment falsifying weight `w <= k` is the same thing as a set of edges
//! of weight `w` whose removal leaves the graph bipartite; variables on the
//! side of `v'` take value 1.

use crate::baseline::SolveResult;
use crate::bipartize::{
    edge_bipartization, expand_weighted_edges, Bipartition, EdgeLabel, Graph,
};
use crate::error::{Error, Result};
use crate::system::{Assignment, Equation, LinSystem, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreshVariable {
    pub var: Var,
    /// The two variables of the replaced `xi + xj = 0`.
    pub replaces: (Var, Var),
}

/// A system in which every two-variable equation has right-hand side 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoVarRewrite {
    pub system: LinSystem,
    pub original_n: usize,
    pub fresh: Vec<FreshVariable>,
    /// Equation id in the input system for every equation of `system`.
    pub origin: Vec<usize>,
}

impl TwoVarRewrite {
    /// Drops the fresh variables.
    pub fn restrict(&self, a: &Assignment) -> Assignment {
        Assignment::new(a.values()[..self.original_n].to_vec())
    }
}

fn check_arity(system: &LinSystem) -> Result<()> {
    match system.equations().iter().position(|eq| eq.arity() > 2) {
        Some(id) => Err(Error::InstanceClass(format!(
            "equation {} has {} variables, at most 2 allowed",
            id + 1,
            system.equations()[id].arity()
        ))),
        None => Ok(()),
    }
}

/// Replaces each `xi + xj = 0` of weight `w` by `xi + y = 1` and
/// `xj + y = 1`, both of weight `w`, with `y` fresh. Constant equations are
/// moved into the forced ledger.
pub fn rewrite_zero_rhs(system: &LinSystem) -> Result<TwoVarRewrite> {
    check_arity(system)?;
    let mut n = system.n();
    let mut forced = system.forced_falsified();
    let mut equations = Vec::new();
    let mut origin = Vec::new();
    let mut fresh = Vec::new();

    for (id, eq) in system.equations().iter().enumerate() {
        match (eq.lhs(), eq.rhs()) {
            ([], rhs) => {
                if rhs {
                    forced += eq.weight();
                }
            }
            (&[xi, xj], false) => {
                let y = n;
                n += 1;
                fresh.push(FreshVariable {
                    var: y,
                    replaces: (xi, xj),
                });
                for x in [xi, xj] {
                    equations.push(Equation::from_sorted(vec![x, y], true, eq.weight()));
                    origin.push(id);
                }
            }
            _ => {
                equations.push(eq.clone());
                origin.push(id);
            }
        }
    }

    Ok(TwoVarRewrite {
        system: LinSystem::from_parts(n, equations, forced),
        original_n: system.n(),
        fresh,
        origin,
    })
}

/// Vertex `x` is variable `x`; the two constant vertices follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarVertexMap {
    pub var_count: usize,
}

impl VarVertexMap {
    pub fn new(var_count: usize) -> Self {
        Self { var_count }
    }

    /// `v'`: joined to `x` by an equation `x = 0`.
    pub fn v_prime(&self) -> usize {
        self.var_count
    }

    /// `v''`: joined to `x` by an equation `x = 1`.
    pub fn v_double_prime(&self) -> usize {
        self.var_count + 1
    }
}

/// Edge `i` encodes equation `i` of the rewritten system; the last edge is
/// the `v'v''` bundle of weight `k + 1`.
pub fn build_graph(rw: &TwoVarRewrite, k: u64) -> Result<(Graph, VarVertexMap)> {
    let cap = k + 1;
    let map = VarVertexMap::new(rw.system.n());
    let mut g = Graph::new(rw.system.n() + 2);
    for (id, eq) in rw.system.equations().iter().enumerate() {
        if eq.weight() > cap {
            return Err(Error::Contract(format!(
                "weight {} exceeds k + 1 = {cap}; cap weights first",
                eq.weight()
            )));
        }
        let (u, v) = match (eq.lhs(), eq.rhs()) {
            (&[x], false) => (map.v_prime(), x),
            (&[x], true) => (x, map.v_double_prime()),
            (&[x, y], true) => (x, y),
            _ => {
                return Err(Error::Contract(format!(
                    "equation {eq} is not of the form x = b or x + y = 1"
                )))
            }
        };
        g.add_edge(u, v, eq.weight(), EdgeLabel::Equation(id))?;
    }
    g.add_edge(map.v_prime(), map.v_double_prime(), cap, EdgeLabel::Anchor)?;
    Ok((g, map))
}

/// Reads an assignment of the rewritten system off a bipartition: a
/// variable is 1 exactly when it sits on the side of `v'`.
pub fn assignment_from_bipartition(bp: &Bipartition, map: &VarVertexMap) -> Result<Assignment> {
    let one = bp.side[map.v_prime()];
    if one == bp.side[map.v_double_prime()] {
        return Err(Error::Contract(
            "v' and v'' on the same side; the anchor bundle was cut".into(),
        ));
    }
    Ok(Assignment::new(
        bp.side[..map.var_count].iter().map(|&s| s == one).collect(),
    ))
}

/// An assignment falsifying weight at most `k`, or `None` if there is none.
/// The returned assignment falsifies the least possible weight.
pub fn solve_below_w(system: &LinSystem, k: u64) -> Result<Option<SolveResult>> {
    check_arity(system)?;
    let capped = system.cap_weights(k);
    let rw = rewrite_zero_rhs(&capped)?;
    let forced = rw.system.forced_falsified();
    if forced > k {
        return Ok(None);
    }
    let (g, map) = build_graph(&rw, k)?;
    let (expanded, _) = expand_weighted_edges(&g);

    let budget = (k - forced) as usize;
    for b in 0..=budget {
        let Some(bp) = edge_bipartization(&expanded, b)? else {
            continue;
        };
        let side = bp.side[..g.n()].to_vec();
        let deleted_edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| side[e.u] == side[e.v])
            .map(|(id, _)| id)
            .collect();
        let on_graph = Bipartition {
            side,
            deleted_edges,
        };
        let cost = on_graph.deletion_weight(&g);
        if cost > b as u64 {
            return Err(Error::Contract(format!(
                "weighted deletion cost {cost} exceeds the expanded solution size {b}"
            )));
        }
        let rewritten = assignment_from_bipartition(&on_graph, &map)?;
        let result = SolveResult::from_assignment(system, rw.restrict(&rewritten))?;
        if result.falsified_weight != forced + cost {
            return Err(Error::Contract(format!(
                "assignment falsifies {} but the deletion cost is {}",
                result.falsified_weight,
                forced + cost
            )));
        }
        return Ok(Some(result));
    }
    Ok(None)
}
