//! Iterative compression for edge bipartization.
//!
//! Edges are inserted one at a time while a deletion set `X` with
//! `|X| <= k` is maintained. When `X` grows to `k + 1` it is compressed:
//! color `G - X` with `c`, keep only the edges of `X` that `c` violates, and
//! treat each such edge `uv` as a path `u - a - b - v` whose middle edge is
//! deleted. Any smaller solution then corresponds to a choice, per edge of
//! `X`, of which of `a`, `b` keeps its color, together with a minimum cut
//! between the kept and the flipped terminals in the remaining graph.
//! Swapping all choices gives the same cut, so the first edge's choice is
//! fixed and `2^(|X|-1)` guesses are tried in increasing order.

use super::coloring::color_without;
use super::flow::{UnitFlow, INFINITE};
use super::{Bipartition, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompressionStats {
    /// Compression steps that had to enumerate guesses.
    pub compressions: u64,
    /// Minimum-cut computations, one per guess tried.
    pub flow_runs: u64,
}

/// A deletion set of at most `k` edges that makes `g` bipartite, with the
/// resulting sides, or `None` when no such set exists. `g` must be
/// unweighted.
pub fn edge_bipartization(g: &Graph, k: usize) -> Result<Option<Bipartition>> {
    edge_bipartization_with_stats(g, k).map(|(b, _)| b)
}

pub fn edge_bipartization_with_stats(
    g: &Graph,
    k: usize,
) -> Result<(Option<Bipartition>, CompressionStats)> {
    if !g.is_unweighted() {
        return Err(Error::InstanceClass(
            "edge bipartization expects an unweighted graph".into(),
        ));
    }
    let mut stats = CompressionStats::default();
    // edges not yet inserted are treated as deleted
    let mut absent = vec![true; g.m()];
    let mut solution: Vec<usize> = Vec::new();

    for id in 0..g.m() {
        absent[id] = false;
        solution.push(id);
        if solution.len() > k {
            match compress(g, &absent, &solution, k, &mut stats) {
                Some(smaller) => solution = smaller,
                None => return Ok((None, stats)),
            }
        }
    }

    let mut deleted = vec![false; g.m()];
    for &id in &solution {
        deleted[id] = true;
    }
    let side = color_without(g, &deleted)
        .map_err(|_| Error::Contract("deletion set does not bipartize".into()))?;
    solution.sort_unstable();
    Ok((
        Some(Bipartition {
            side,
            deleted_edges: solution,
        }),
        stats,
    ))
}

/// Smallest deletion set, found by raising the budget from 0.
pub fn min_edge_bipartization(g: &Graph) -> Result<Bipartition> {
    for k in 0..=g.m() {
        if let Some(b) = edge_bipartization(g, k)? {
            return Ok(b);
        }
    }
    unreachable!("deleting every edge always bipartizes")
}

/// Given a solution of size `k + 1` for the inserted edges, returns one of
/// size at most `k`, or `None` if there is none.
fn compress(
    g: &Graph,
    absent: &[bool],
    solution: &[usize],
    k: usize,
    stats: &mut CompressionStats,
) -> Option<Vec<usize>> {
    let mut removed = absent.to_vec();
    for &id in solution {
        removed[id] = true;
    }
    let color = color_without(g, &removed).expect("solution bipartizes the inserted edges");

    let violated: Vec<usize> = solution
        .iter()
        .copied()
        .filter(|&id| color[g.edges()[id].u] == color[g.edges()[id].v])
        .collect();
    if violated.len() <= k {
        return Some(violated);
    }
    stats.compressions += 1;

    let mut in_violated = absent.to_vec();
    for &id in &violated {
        in_violated[id] = true;
    }

    for guess in 0..1u64 << (violated.len() - 1) {
        stats.flow_runs += 1;
        if let Some(smaller) = cut_for_guess(g, &in_violated, &violated, guess, k) {
            return Some(smaller);
        }
    }
    None
}

/// Vertex layout: original vertices, then `a_e, b_e` per violated edge, then
/// source and sink. Returns the cut mapped back to edges of `g` when its
/// value is at most `k`.
fn cut_for_guess(
    g: &Graph,
    skip: &[bool],
    violated: &[usize],
    guess: u64,
    k: usize,
) -> Option<Vec<usize>> {
    let n = g.n();
    let source = n + 2 * violated.len();
    let sink = source + 1;
    let mut net = UnitFlow::new(sink + 1);

    // arcs carrying an edge of g, in insertion order, with their origin
    let mut origin = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if !skip[id] {
            net.add_undirected(e.u, e.v);
            origin.push((e.u, e.v, id));
        }
    }
    for (i, &id) in violated.iter().enumerate() {
        let e = g.edges()[id];
        let (a, b) = (n + 2 * i, n + 2 * i + 1);
        net.add_undirected(e.u, a);
        net.add_undirected(b, e.v);
        origin.push((e.u, a, id));
        origin.push((b, e.v, id));
        let (keep, flip) = if guess >> i & 1 == 0 { (a, b) } else { (b, a) };
        net.add_arc(source, keep, INFINITE);
        net.add_arc(flip, sink, INFINITE);
    }

    let limit = k as u32 + 1;
    if net.max_flow(source, sink, limit) >= limit {
        return None;
    }
    let reach = net.source_side(source);
    let mut cut: Vec<usize> = origin
        .into_iter()
        .filter(|&(x, y, _)| reach[x] != reach[y])
        .map(|(_, _, id)| id)
        .collect();
    cut.sort_unstable();
    cut.dedup();
    debug_assert!(cut.len() <= k);
    Some(cut)
}
