use std::fmt;

use crate::system::{Assignment, LinSystem};

/// Fixed-width bit vector backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(width: usize) -> Self {
        Self {
            words: vec![0; width.div_ceil(64)],
        }
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let bit = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= bit;
        } else {
            self.words[i / 64] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.words.len() * 64 {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Coefficient matrix `A` with right-hand side `b` over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    width: usize,
    rows: Vec<BitRow>,
    rhs: Vec<bool>,
}

impl F2Matrix {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn from_system(system: &LinSystem) -> Self {
        let mut mat = Self::new(system.n());
        for eq in system.equations() {
            mat.push_row(eq.lhs(), eq.rhs());
        }
        mat
    }

    /// Parses rows such as `"110"`; every row gets right-hand side 0.
    pub fn from_strs(rows: &[&str]) -> Self {
        let width = rows.first().map_or(0, |r| r.len());
        let mut mat = Self::new(width);
        for r in rows {
            assert_eq!(r.len(), width, "ragged rows");
            let cols: Vec<usize> = r
                .bytes()
                .enumerate()
                .filter(|(_, c)| *c == b'1')
                .map(|(i, _)| i)
                .collect();
            mat.push_row(&cols, false);
        }
        mat
    }

    pub fn push_row(&mut self, cols: &[usize], rhs: bool) {
        let mut row = BitRow::zeros(self.width);
        for &c in cols {
            assert!(c < self.width, "column {c} out of range");
            row.flip(c);
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn rhs(&self) -> &[bool] {
        &self.rhs
    }

    pub fn rank(&self) -> usize {
        self.eliminate().pivots.len()
    }

    /// Rank of `[A b]`.
    pub fn augmented_rank(&self) -> usize {
        let e = self.eliminate();
        e.pivots.len() + usize::from(e.inconsistent)
    }

    /// A solution of `Ax = b` with free variables at 0, or `None` when the
    /// system is inconsistent.
    pub fn solve(&self) -> Option<Assignment> {
        let e = self.eliminate();
        if e.inconsistent {
            return None;
        }
        let mut x = Assignment::zeros(self.width);
        for (row, &col) in e.pivots.iter().enumerate() {
            x.set(col, e.rhs[row]);
        }
        Some(x)
    }

    /// Gauss-Jordan elimination on a copy; pivot row `i` ends up in
    /// position `i` with a unit column at `pivots[i]`.
    fn eliminate(&self) -> Reduced {
        let mut rows = self.rows.clone();
        let mut rhs = self.rhs.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.width {
            let Some(p) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            rhs.swap(next, p);
            let (pivot_row, pivot_rhs) = (rows[next].clone(), rhs[next]);
            for r in 0..rows.len() {
                if r != next && rows[r].get(col) {
                    rows[r].xor_assign(&pivot_row);
                    rhs[r] ^= pivot_rhs;
                }
            }
            pivots.push(col);
            next += 1;
        }
        let inconsistent = rhs[next..].iter().any(|&b| b);
        Reduced {
            pivots,
            rhs,
            inconsistent,
        }
    }
}

struct Reduced {
    pivots: Vec<usize>,
    rhs: Vec<bool>,
    inconsistent: bool,
}

pub fn f2_rank(mat: &F2Matrix) -> usize {
    mat.rank()
}

pub fn f2_solve(mat: &F2Matrix) -> Option<Assignment> {
    mat.solve()
}
