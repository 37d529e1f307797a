use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Augmenting-path max flow for small integer capacities. Every
/// augmentation costs one BFS, so a flow bounded by `limit` costs
/// `O(limit * arcs)`.
#[derive(Debug, Clone)]
pub(crate) struct UnitFlow {
    adj: Vec<Vec<Arc>>,
}

pub(crate) const INFINITE: u32 = u32::MAX / 2;

impl UnitFlow {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let (rf, rt) = (self.adj[to].len(), self.adj[from].len());
        self.adj[from].push(Arc { to, cap, rev: rf });
        self.adj[to].push(Arc {
            to: from,
            cap: 0,
            rev: rt,
        });
    }

    /// Undirected unit edge: two arcs that are each other's reverse.
    pub(crate) fn add_undirected(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.adj[b].len(), self.adj[a].len());
        self.adj[a].push(Arc { to: b, cap: 1, rev: ra });
        self.adj[b].push(Arc { to: a, cap: 1, rev: rb });
    }

    /// Pushes flow from `s` to `t` until none is left or `limit` is reached.
    /// Returns the flow value and the number of augmentations.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let Some(pred) = self.bfs(s, t) else {
                break;
            };
            // unit edges on every s-t path except source/sink arcs
            let mut bottleneck = limit - flow;
            let mut v = t;
            while v != s {
                let (u, i) = pred[v];
                bottleneck = bottleneck.min(self.adj[u][i].cap);
                v = u;
            }
            let mut v = t;
            while v != s {
                let (u, i) = pred[v];
                let rev = self.adj[u][i].rev;
                self.adj[u][i].cap -= bottleneck;
                self.adj[v][rev].cap += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
        flow
    }

    fn bfs(&self, s: usize, t: usize) -> Option<Vec<(usize, usize)>> {
        let mut pred = vec![(usize::MAX, usize::MAX); self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for (i, arc) in self.adj[u].iter().enumerate() {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    pred[arc.to] = (u, i);
                    if arc.to == t {
                        return Some(pred);
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        None
    }

    /// Vertices reachable from `s` in the residual graph: the source side
    /// of a minimum cut once `max_flow` has run to completion.
    pub(crate) fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for arc in &self.adj[u] {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_disjoint_paths() {
        // s=0, t=5; paths 0-1-2-5 and 0-3-4-5 share nothing
        let mut f = UnitFlow::new(6);
        f.add_arc(0, 1, INFINITE);
        f.add_arc(0, 3, INFINITE);
        f.add_undirected(1, 2);
        f.add_undirected(3, 4);
        f.add_arc(2, 5, INFINITE);
        f.add_arc(4, 5, INFINITE);
        assert_eq!(f.max_flow(0, 5, 10), 2);
        let side = f.source_side(0);
        assert!(side[0] && side[1] && side[3]);
        assert!(!side[2] && !side[5]);
    }

    #[test]
    fn undirected_bottleneck_and_limit() {
        // K4 between terminals 1 and 2 through 3,4
        let mut f = UnitFlow::new(6);
        f.add_arc(0, 1, INFINITE);
        f.add_arc(2, 5, INFINITE);
        for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            f.add_undirected(a, b);
        }
        let mut g = f.clone();
        assert_eq!(f.max_flow(0, 5, 100), 3);
        assert_eq!(g.max_flow(0, 5, 2), 2);
    }

    #[test]
    fn disconnected() {
        let mut f = UnitFlow::new(4);
        f.add_undirected(0, 1);
        f.add_undirected(2, 3);
        assert_eq!(f.max_flow(0, 3, 5), 0);
    }
}
