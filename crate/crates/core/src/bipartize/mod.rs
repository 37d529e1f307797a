//! Undirected multigraphs and edge bipartization.
//!
//! [`edge_bipartization`] decides whether at most `k` edge deletions make a
//! graph bipartite, using iterative compression with a unit-capacity
//! minimum cut per compression guess. [`brute_force_bipartization`] is the
//! subset-enumeration reference.

mod brute;
mod coloring;
mod compression;
mod flow;

pub use brute::{brute_force_bipartization, DEFAULT_EDGE_LIMIT};
pub use coloring::{is_bipartite, BipartiteCheck};
pub use compression::{
    edge_bipartization, edge_bipartization_with_stats, min_edge_bipartization, CompressionStats,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where an edge came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeLabel {
    None,
    /// Encodes equation `id` of a linear system.
    Equation(usize),
    /// The heavy bundle tying the two constant vertices together.
    Anchor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: u64,
    pub label: EdgeLabel,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph. Parallel edges keep distinct ids; self-loops are
/// rejected.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    /// Unweighted graph from 0-based endpoint pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v, 1, EdgeLabel::None)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Returns the new edge id.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: u64, label: EdgeLabel) -> Result<usize> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::VertexOutOfRange { vertex, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if weight == 0 {
            return Err(Error::ZeroWeight);
        }
        self.edges.push(Edge { u, v, weight, label });
        Ok(self.edges.len() - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1)
    }

    /// Incident `(edge id, neighbour)` pairs per vertex.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.u].push((id, e.v));
            adj[e.v].push((id, e.u));
        }
        adj
    }
}

/// A side per vertex plus the deleted edges (ascending ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
    pub deleted_edges: Vec<usize>,
}

impl Bipartition {
    /// Every edge that is not deleted joins opposite sides.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut deleted = vec![false; g.m()];
        for &id in &self.deleted_edges {
            deleted[id] = true;
        }
        self.side.len() == g.n()
            && g.edges()
                .iter()
                .enumerate()
                .all(|(id, e)| deleted[id] || self.side[e.u] != self.side[e.v])
    }

    pub fn deletion_weight(&self, g: &Graph) -> u64 {
        self.deleted_edges.iter().map(|&id| g.edges()[id].weight).sum()
    }
}

/// Origin of an edge produced by [`expand_weighted_edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathProvenance {
    pub original: usize,
    /// Which of the `weight` parallel paths, from 0.
    pub path: u64,
    /// 0, 1 or 2 along the path `u - y - z - v`.
    pub position: u8,
}

/// Replaces every edge `uv` of weight `w` by `w` vertex-disjoint paths
/// `u - y - z - v` through fresh vertices, giving an unweighted graph with
/// `3 * total_weight` edges. Original vertices keep their ids.
pub fn expand_weighted_edges(g: &Graph) -> (Graph, Vec<PathProvenance>) {
    let mut out = Graph::new(g.n());
    let mut provenance = Vec::with_capacity(3 * g.total_weight() as usize);
    for (original, e) in g.edges().iter().enumerate() {
        for path in 0..e.weight {
            let y = out.add_vertex();
            let z = out.add_vertex();
            for (position, (a, b)) in [(e.u, y), (y, z), (z, e.v)].into_iter().enumerate() {
                out.edges.push(Edge {
                    u: a,
                    v: b,
                    weight: 1,
                    label: e.label,
                });
                provenance.push(PathProvenance {
                    original,
                    path,
                    position: position as u8,
                });
            }
        }
    }
    (out, provenance)
}
