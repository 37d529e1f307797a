#![allow(dead_code)]

use std::collections::BTreeSet;

use maxlin2::baseline::{brute_force_min_falsified, DEFAULT_VAR_LIMIT};
use maxlin2::bipartize::{EdgeLabel, Graph};
use maxlin2::gadgets::OddSetInstance;
use maxlin2::{Equation, LinSystem};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

struct Factor {
    scope: Vec<usize>,
    /// Bit `i` of the index is the value of `scope[i]`.
    table: Vec<u64>,
}

const MAX_SCOPE: usize = 22;

/// Minimum falsified weight (forced ledger included) by variable
/// elimination with a greedy min-fill order. Independent of the library's
/// brute force and usable well past 24 variables as long as the elimination
/// width stays small. Panics if an intermediate scope exceeds 22 variables.
pub fn elimination_min_falsified(s: &LinSystem) -> u64 {
    let mut constant = s.forced_falsified();
    let mut factors: Vec<Factor> = Vec::new();
    for eq in s.equations() {
        if eq.arity() == 0 {
            if eq.rhs() {
                constant += eq.weight();
            }
            continue;
        }
        let scope = eq.lhs().to_vec();
        let table = (0..1usize << scope.len())
            .map(|mask| {
                let parity = mask.count_ones() % 2 == 1;
                if parity == eq.rhs() {
                    0
                } else {
                    eq.weight()
                }
            })
            .collect();
        factors.push(Factor { scope, table });
    }

    // interaction graph, kept up to date as variables are eliminated
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); s.n()];
    for f in &factors {
        for &u in &f.scope {
            adj[u].extend(f.scope.iter().copied().filter(|&w| w != u));
        }
    }
    let mut remaining: Vec<usize> = (0..s.n()).collect();
    while !factors.is_empty() {
        // min-fill, then min-degree
        let (pos, v) = remaining
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                let fill = nb
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| nb[i + 1..].iter().filter(|b| !adj[a].contains(b)).count())
                    .sum::<usize>();
                (fill, nb.len())
            })
            .map(|(pos, &v)| (pos, v))
            .expect("factors mention remaining variables");
        remaining.swap_remove(pos);
        let nb: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &a in &nb {
            adj[a].remove(&v);
            adj[a].extend(nb.iter().copied().filter(|&b| b != a));
        }

        let (bucket, rest): (Vec<Factor>, Vec<Factor>) =
            factors.into_iter().partition(|f| f.scope.contains(&v));
        factors = rest;
        if bucket.is_empty() {
            continue;
        }

        let mut scope: Vec<usize> = bucket
            .iter()
            .flat_map(|f| f.scope.iter().copied())
            .filter(|&u| u != v)
            .collect();
        scope.sort_unstable();
        scope.dedup();
        assert!(scope.len() <= MAX_SCOPE, "elimination width {} too large", scope.len());

        // position of each factor variable in [scope..., v]
        let maps: Vec<Vec<usize>> = bucket
            .iter()
            .map(|f| {
                f.scope
                    .iter()
                    .map(|u| scope.iter().position(|w| w == u).unwrap_or(scope.len()))
                    .collect()
            })
            .collect();
        let table = (0..1usize << scope.len())
            .map(|mask| {
                (0..2usize)
                    .map(|bit| {
                        let full = mask | bit << scope.len();
                        bucket
                            .iter()
                            .zip(&maps)
                            .map(|(f, map)| {
                                let idx = map
                                    .iter()
                                    .enumerate()
                                    .fold(0, |acc, (i, &p)| acc | (full >> p & 1) << i);
                                f.table[idx]
                            })
                            .sum::<u64>()
                    })
                    .min()
                    .unwrap()
            })
            .collect::<Vec<u64>>();
        if scope.is_empty() {
            constant += table[0];
        } else {
            factors.push(Factor { scope, table });
        }
    }
    constant
}

/// Brute force when it fits, elimination otherwise.
pub fn exact_min_falsified(s: &LinSystem) -> u64 {
    if s.n() <= 20 {
        brute_force_min_falsified(s, DEFAULT_VAR_LIMIT)
            .unwrap()
            .falsified_weight
    } else {
        elimination_min_falsified(s)
    }
}

fn distinct_vars(rng: &mut StdRng, n: usize, count: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(count);
    all
}

/// Arity drawn from `min_arity..=max_arity`, capped by `n`.
pub fn random_system(
    rng: &mut StdRng,
    n: usize,
    m: usize,
    min_arity: usize,
    max_arity: usize,
    max_weight: u64,
) -> LinSystem {
    let eqs = (0..m)
        .map(|_| {
            let r = rng.gen_range(min_arity..=max_arity).min(n);
            let lhs = distinct_vars(rng, n, r);
            Equation::new(lhs, rng.gen(), rng.gen_range(1..=max_weight)).unwrap()
        })
        .collect();
    LinSystem::new(n, eqs).unwrap()
}

/// Every variable in at most two equations. Equations may be constant.
pub fn random_occ2_system(rng: &mut StdRng, n: usize, m: usize, max_weight: u64) -> LinSystem {
    let mut slots: Vec<usize> = (0..n).flat_map(|v| [v, v]).collect();
    slots.shuffle(rng);
    let mut eqs = Vec::with_capacity(m);
    for _ in 0..m {
        let want = rng.gen_range(0..=3usize);
        let mut lhs = Vec::new();
        while lhs.len() < want {
            match slots.iter().position(|v| !lhs.contains(v)) {
                Some(p) => lhs.push(slots.swap_remove(p)),
                None => break,
            }
        }
        eqs.push(Equation::new(lhs, rng.gen(), rng.gen_range(1..=max_weight)).unwrap());
    }
    LinSystem::new(n, eqs).unwrap()
}

/// Unit weights, arity `1..=3`, every variable in at most `max_occ`
/// equations.
pub fn random_bounded_system(
    rng: &mut StdRng,
    n: usize,
    m: usize,
    min_arity: usize,
    max_occ: usize,
) -> LinSystem {
    let mut left = vec![max_occ; n];
    let mut eqs = Vec::new();
    for _ in 0..m {
        let free: Vec<usize> = (0..n).filter(|&v| left[v] > 0).collect();
        if free.len() < min_arity {
            break;
        }
        let r = rng.gen_range(min_arity..=3).min(free.len());
        let lhs: Vec<usize> = free.choose_multiple(rng, r).copied().collect();
        for &v in &lhs {
            left[v] -= 1;
        }
        eqs.push(Equation::new(lhs, rng.gen(), 1).unwrap());
    }
    LinSystem::new(n, eqs).unwrap()
}

/// Simple graph with `m` distinct edges (fewer if the graph fills up).
pub fn random_graph(rng: &mut StdRng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    let mut g = Graph::new(n);
    for (u, v) in pairs {
        g.add_edge(u, v, 1, EdgeLabel::None).unwrap();
    }
    g
}

/// Whether some set of at most `k` elements meets every set oddly.
pub fn oddset_yes(inst: &OddSetInstance) -> bool {
    let n = inst.n();
    (0..1u32 << n).any(|mask| {
        if u64::from(mask.count_ones()) > inst.k() {
            return false;
        }
        inst.sets()
            .iter()
            .all(|s| s.iter().filter(|&&e| mask >> e & 1 == 1).count() % 2 == 1)
    })
}
