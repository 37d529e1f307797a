use crate::error::{Error, Result};
use crate::system::{Equation, LinSystem, Var};

/// Odd Set: is there a set `R` of at most `k` elements meeting every set in
/// an odd number of elements? Elements are `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSetInstance {
    n: usize,
    sets: Vec<Vec<usize>>,
    k: u64,
}

impl OddSetInstance {
    /// Sorts each set; rejects empty sets, repeated elements, elements out
    /// of range and repeated sets.
    pub fn new(n: usize, sets: Vec<Vec<usize>>, k: u64) -> Result<Self> {
        let mut sorted = Vec::with_capacity(sets.len());
        for (i, mut set) in sets.into_iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidOddSet(format!("set {} is empty", i + 1)));
            }
            set.sort_unstable();
            if let Some(&e) = set.iter().find(|&&e| e >= n) {
                return Err(Error::InvalidOddSet(format!(
                    "set {} has element {} outside 1..={n}",
                    i + 1,
                    e + 1
                )));
            }
            if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidOddSet(format!(
                    "set {} repeats element {}",
                    i + 1,
                    w[0] + 1
                )));
            }
            if let Some(j) = sorted.iter().position(|s: &Vec<usize>| *s == set) {
                return Err(Error::InvalidOddSet(format!(
                    "sets {} and {} are equal",
                    j + 1,
                    i + 1
                )));
            }
            sorted.push(set);
        }
        Ok(Self { n, sets: sorted, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Whether `r` (a list of elements) meets every set oddly and has at
    /// most `k` elements.
    pub fn accepts(&self, r: &[usize]) -> bool {
        let mut chosen = vec![false; self.n];
        for &e in r {
            chosen[e] = true;
        }
        let size = chosen.iter().filter(|&&c| c).count() as u64;
        size <= self.k
            && self
                .sets
                .iter()
                .all(|s| s.iter().filter(|&&e| chosen[e]).count() % 2 == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSetReduction {
    pub system: LinSystem,
    pub k: u64,
    /// Equation ids of the chain block for each set.
    pub blocks: Vec<Vec<usize>>,
}

/// Variables `0..n` stand for the elements, each with `x = 0` of weight 1.
/// A set `j_1 < ... < j_s` with `s >= 2` gets chain variables
/// `y_1..y_{s-1}` and the block
///
/// ```text
/// y_1 + x_{j_1} = 0
/// y_r + y_{r+1} + x_{j_{r+1}} = 0    for 1 <= r < s - 1
/// y_{s-1} + x_{j_s} = 1
/// ```
///
/// of weight `k + 1`, which sums to `x_{j_1} + ... + x_{j_s} = 1`. A
/// singleton `{j}` gets `x_j = 1` of weight `k + 1` directly.
pub fn oddset_to_lin2(inst: &OddSetInstance) -> OddSetReduction {
    let heavy = inst.k + 1;
    let mut n = inst.n;
    let mut equations: Vec<Equation> = (0..inst.n)
        .map(|x| Equation::from_sorted(vec![x], false, 1))
        .collect();
    let mut blocks = Vec::with_capacity(inst.sets.len());

    for set in &inst.sets {
        let start = equations.len();
        let s = set.len();
        if s == 1 {
            equations.push(Equation::from_sorted(vec![set[0]], true, heavy));
        } else {
            let y: Vec<Var> = (n..n + s - 1).collect();
            n += s - 1;
            let mut push = |lhs: &[Var], rhs: bool| {
                let mut lhs = lhs.to_vec();
                lhs.sort_unstable();
                equations.push(Equation::from_sorted(lhs, rhs, heavy));
            };
            push(&[y[0], set[0]], false);
            for r in 0..s - 2 {
                push(&[y[r], y[r + 1], set[r + 1]], false);
            }
            push(&[y[s - 2], set[s - 1]], true);
        }
        blocks.push((start..equations.len()).collect());
    }

    OddSetReduction {
        system: LinSystem::from_parts(n, equations, 0),
        k: inst.k,
        blocks,
    }
}

/// Sum of the block's equations. For a well-formed chain block the chain
/// variables cancel and the result is `x_{j_1} + ... + x_{j_s} = 1`; any
/// variable `>= x_count` left over means the block is malformed.
pub fn chain_block_parity_check(
    system: &LinSystem,
    block: &[usize],
    x_count: usize,
) -> Result<Equation> {
    let Some((&first, rest)) = block.split_first() else {
        return Err(Error::Contract("empty chain block".into()));
    };
    let get = |id: usize| {
        system.equations().get(id).ok_or_else(|| {
            Error::Contract(format!(
                "block equation {} outside 1..={}",
                id + 1,
                system.m()
            ))
        })
    };
    let mut sum = get(first)?.with_weight(1);
    for &id in rest {
        sum = sum.sum(get(id)?, 1);
    }
    if let Some(&y) = sum.lhs().iter().find(|&&v| v >= x_count) {
        return Err(Error::Contract(format!(
            "chain variable x{} does not cancel",
            y + 1
        )));
    }
    Ok(sum)
}
