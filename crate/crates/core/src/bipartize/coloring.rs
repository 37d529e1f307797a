use std::collections::VecDeque;

use super::{Bipartition, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteCheck {
    Bipartite(Bipartition),
    /// Edge ids of an odd cycle, in walking order.
    OddCycle(Vec<usize>),
}

impl BipartiteCheck {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCheck::Bipartite(_))
    }
}

/// Breadth-first 2-coloring; every component's root gets side `false`.
pub fn is_bipartite(g: &Graph) -> BipartiteCheck {
    match color_without(g, &vec![false; g.m()]) {
        Ok(side) => BipartiteCheck::Bipartite(Bipartition {
            side,
            deleted_edges: Vec::new(),
        }),
        Err(cycle) => BipartiteCheck::OddCycle(cycle),
    }
}

/// Colors `g` minus the edges flagged in `deleted`, or returns an odd cycle
/// of the remaining graph.
pub(crate) fn color_without(g: &Graph, deleted: &[bool]) -> Result<Vec<bool>, Vec<usize>> {
    let adj = g.adjacency();
    let n = g.n();
    let mut side = vec![false; n];
    let mut depth = vec![usize::MAX; n];
    // (parent vertex, edge id) in the BFS tree
    let mut parent = vec![(usize::MAX, usize::MAX); n];

    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(id, y) in &adj[x] {
                if deleted[id] {
                    continue;
                }
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    side[y] = !side[x];
                    parent[y] = (x, id);
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return Err(odd_cycle(&parent, &depth, x, y, id));
                }
            }
        }
    }
    Ok(side)
}

fn odd_cycle(
    parent: &[(usize, usize)],
    depth: &[usize],
    x: usize,
    y: usize,
    closing: usize,
) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut from_a = Vec::new();
    let mut from_b = Vec::new();
    while a != b {
        if depth[a] >= depth[b] {
            from_a.push(parent[a].1);
            a = parent[a].0;
        } else {
            from_b.push(parent[b].1);
            b = parent[b].0;
        }
    }
    // lca -> ... -> x, closing edge, y -> ... -> lca
    let mut cycle: Vec<usize> = from_a.into_iter().rev().collect();
    cycle.push(closing);
    cycle.extend(from_b);
    cycle
}
