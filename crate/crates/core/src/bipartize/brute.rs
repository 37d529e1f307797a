use super::coloring::color_without;
use super::{Bipartition, Graph};
use crate::error::{Error, Result};

pub const DEFAULT_EDGE_LIMIT: usize = 20;

/// Tries every edge subset of size `0, 1, ..., k`, each size in
/// lexicographic order, and returns the first one whose removal leaves a
/// bipartite graph. The answer therefore has minimum size.
pub fn brute_force_bipartization(
    g: &Graph,
    k: usize,
    edge_limit: usize,
) -> Result<Option<Bipartition>> {
    if g.m() > edge_limit {
        return Err(Error::Capacity {
            what: "brute force edge count",
            size: g.m(),
            limit: edge_limit,
        });
    }
    let m = g.m();
    for size in 0..=k.min(m) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mut deleted = vec![false; m];
            for &id in &combo {
                deleted[id] = true;
            }
            if let Ok(side) = color_without(g, &deleted) {
                return Ok(Some(Bipartition {
                    side,
                    deleted_edges: combo,
                }));
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let size = combo.len();
    let Some(i) = (0..size).rev().find(|&i| combo[i] < m - size + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..size {
        combo[j] = combo[j - 1] + 1;
    }
    true
}
