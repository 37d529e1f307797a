//! Weighted systems of linear equations over GF(2).
//!
//! An [`Equation`] is `x_{i1} + ... + x_{ir} = b` with a positive integer
//! weight. A [`LinSystem`] owns the equations together with the number of
//! variables and a ledger of weight that is falsified by every assignment
//! (constant `0 = 1` equations removed by [`LinSystem::normalize`]).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 0-based variable index.
pub type Var = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Equation {
    lhs: Vec<Var>,
    rhs: bool,
    weight: u64,
}

impl Equation {
    /// Builds an equation; `lhs` may be given in any order but must not
    /// repeat a variable.
    pub fn new(lhs: impl IntoIterator<Item = Var>, rhs: bool, weight: u64) -> Result<Self> {
        if weight == 0 {
            return Err(Error::ZeroWeight);
        }
        let mut lhs: Vec<Var> = lhs.into_iter().collect();
        lhs.sort_unstable();
        if let Some(w) = lhs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVariable(w[0]));
        }
        Ok(Self { lhs, rhs, weight })
    }

    /// Sorted, duplicate-free `lhs` and nonzero weight are the caller's job.
    pub(crate) fn from_sorted(lhs: Vec<Var>, rhs: bool, weight: u64) -> Self {
        debug_assert!(weight >= 1);
        debug_assert!(lhs.windows(2).all(|w| w[0] < w[1]));
        Self { lhs, rhs, weight }
    }

    /// Unit-weight equation from a list of distinct variables.
    pub(crate) fn unit(lhs: impl IntoIterator<Item = Var>, rhs: bool) -> Self {
        let mut lhs: Vec<Var> = lhs.into_iter().collect();
        lhs.sort_unstable();
        Self::from_sorted(lhs, rhs, 1)
    }

    pub fn lhs(&self) -> &[Var] {
        &self.lhs
    }

    pub fn rhs(&self) -> bool {
        self.rhs
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn arity(&self) -> usize {
        self.lhs.len()
    }

    pub fn contains(&self, var: Var) -> bool {
        self.lhs.binary_search(&var).is_ok()
    }

    pub fn with_weight(&self, weight: u64) -> Self {
        debug_assert!(weight >= 1);
        Self {
            lhs: self.lhs.clone(),
            rhs: self.rhs,
            weight,
        }
    }

    /// XOR of the left-hand side under `values`.
    pub fn parity(&self, values: &[bool]) -> bool {
        self.lhs.iter().fold(false, |acc, &v| acc ^ values[v])
    }

    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        self.parity(values) == self.rhs
    }

    /// GF(2) sum of two equations: symmetric difference of the left-hand
    /// sides and XOR of the right-hand sides.
    pub fn sum(&self, other: &Equation, weight: u64) -> Equation {
        let (a, b) = (&self.lhs, &other.lhs);
        let mut lhs = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    lhs.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    lhs.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        lhs.extend_from_slice(&a[i..]);
        lhs.extend_from_slice(&b[j..]);
        Equation::from_sorted(lhs, self.rhs ^ other.rhs, weight)
    }

    /// Replaces variable `from` by `to`; `to` must not already occur.
    pub(crate) fn substitute(&self, from: Var, to: Var) -> Equation {
        debug_assert!(self.contains(from) && (from == to || !self.contains(to)));
        let lhs = self.lhs.iter().map(|&v| if v == from { to } else { v });
        let mut lhs: Vec<Var> = lhs.collect();
        lhs.sort_unstable();
        Equation::from_sorted(lhs, self.rhs, self.weight)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lhs.is_empty() {
            write!(f, "0")?;
        }
        for (i, v) in self.lhs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        write!(f, " = {} (w{})", u8::from(self.rhs), self.weight)
    }
}

/// A 0/1 value per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Self(values)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![false; n])
    }

    /// Variable `i` takes bit `i` of `mask`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self((0..n).map(|i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: Var) -> bool {
        self.0[var]
    }

    pub fn set(&mut self, var: Var, value: bool) {
        self.0[var] = value;
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn into_values(self) -> Vec<bool> {
        self.0
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub satisfied: u64,
    /// Includes the forced-falsified ledger.
    pub falsified: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceProfile {
    /// Largest equation arity, 0 for an empty system.
    pub max_arity: usize,
    /// Largest number of equations containing one variable (copies counted).
    pub max_occurrence: usize,
    pub m: usize,
    pub n: usize,
    pub total_weight: u64,
    pub forced_falsified: u64,
    pub unit_weights: bool,
    pub distinct_lhs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinSystem {
    n: usize,
    equations: Vec<Equation>,
    forced_falsified: u64,
}

impl LinSystem {
    pub fn new(n: usize, equations: Vec<Equation>) -> Result<Self> {
        for eq in &equations {
            if let Some(&var) = eq.lhs.last() {
                if var >= n {
                    return Err(Error::VariableOutOfRange { var, n });
                }
            }
        }
        let system = Self {
            n,
            equations,
            forced_falsified: 0,
        };
        system.checked_total_weight()?;
        Ok(system)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            equations: Vec::new(),
            forced_falsified: 0,
        }
    }

    pub fn with_forced_falsified(mut self, weight: u64) -> Result<Self> {
        self.forced_falsified = weight;
        self.checked_total_weight()?;
        Ok(self)
    }

    /// Builder used by transformations whose output is valid by construction.
    pub(crate) fn from_parts(n: usize, equations: Vec<Equation>, forced_falsified: u64) -> Self {
        debug_assert!(equations
            .iter()
            .all(|eq| eq.lhs.last().map_or(true, |&v| v < n)));
        Self {
            n,
            equations,
            forced_falsified,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.equations.len()
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn forced_falsified(&self) -> u64 {
        self.forced_falsified
    }

    /// W: the sum of the equation weights, excluding the forced ledger.
    pub fn total_weight(&self) -> u64 {
        // construction guarantees this fits
        self.equations.iter().map(|eq| eq.weight).sum()
    }

    fn checked_total_weight(&self) -> Result<u64> {
        self.equations
            .iter()
            .try_fold(self.forced_falsified, |acc, eq| acc.checked_add(eq.weight))
            .ok_or(Error::WeightOverflow)
    }

    /// Number of equations containing each variable.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.n];
        for eq in &self.equations {
            for &v in &eq.lhs {
                occ[v] += 1;
            }
        }
        occ
    }

    /// For each variable, the ids of the equations containing it.
    pub fn occurrence_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.n];
        for (id, eq) in self.equations.iter().enumerate() {
            for &v in &eq.lhs {
                lists[v].push(id);
            }
        }
        lists
    }

    fn check_len(&self, a: &Assignment) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: a.len(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, a: &Assignment) -> Result<Evaluation> {
        self.check_len(a)?;
        let mut satisfied = 0;
        let mut falsified = self.forced_falsified;
        for eq in &self.equations {
            if eq.is_satisfied_by(a.values()) {
                satisfied += eq.weight;
            } else {
                falsified += eq.weight;
            }
        }
        Ok(Evaluation {
            satisfied,
            falsified,
        })
    }

    /// Ids of the equations falsified by `a`, ascending.
    pub fn falsified_ids(&self, a: &Assignment) -> Result<Vec<usize>> {
        self.check_len(a)?;
        Ok(self
            .equations
            .iter()
            .enumerate()
            .filter(|(_, eq)| !eq.is_satisfied_by(a.values()))
            .map(|(id, _)| id)
            .collect())
    }

    /// Caps every weight at `k + 1`. Whether some assignment falsifies at
    /// most `k` is unchanged.
    pub fn cap_weights(&self, k: u64) -> LinSystem {
        let cap = k.saturating_add(1);
        let equations = self
            .equations
            .iter()
            .map(|eq| eq.with_weight(eq.weight.min(cap)))
            .collect();
        Self::from_parts(self.n, equations, self.forced_falsified)
    }

    /// Canonical form: identical `(lhs, rhs)` pairs merged by summing
    /// weights, `0 = 0` dropped, `0 = 1` moved into the forced ledger, and
    /// equations sorted by `(lhs, rhs)`.
    pub fn normalize(&self) -> LinSystem {
        let mut merged: BTreeMap<(&[Var], bool), u64> = BTreeMap::new();
        let mut forced = self.forced_falsified;
        for eq in &self.equations {
            if eq.lhs.is_empty() {
                if eq.rhs {
                    forced += eq.weight;
                }
                continue;
            }
            *merged.entry((&eq.lhs, eq.rhs)).or_insert(0) += eq.weight;
        }
        let equations = merged
            .into_iter()
            .map(|((lhs, rhs), weight)| Equation::from_sorted(lhs.to_vec(), rhs, weight))
            .collect();
        Self::from_parts(self.n, equations, forced)
    }

    /// Splits each weight-`w` equation into `w` consecutive unit copies.
    pub fn expand_unit_weights(&self) -> LinSystem {
        let equations = self
            .equations
            .iter()
            .flat_map(|eq| std::iter::repeat(eq.with_weight(1)).take(eq.weight as usize))
            .collect();
        Self::from_parts(self.n, equations, self.forced_falsified)
    }

    pub fn profile(&self) -> InstanceProfile {
        let mut lhs_seen = std::collections::HashSet::new();
        let distinct_lhs = self.equations.iter().all(|eq| lhs_seen.insert(&eq.lhs));
        InstanceProfile {
            max_arity: self.equations.iter().map(Equation::arity).max().unwrap_or(0),
            max_occurrence: self.occurrences().into_iter().max().unwrap_or(0),
            m: self.m(),
            n: self.n,
            total_weight: self.total_weight(),
            forced_falsified: self.forced_falsified,
            unit_weights: self.equations.iter().all(|eq| eq.weight == 1),
            distinct_lhs,
        }
    }
}

impl fmt::Display for LinSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for eq in &self.equations {
            writeln!(f, "{eq}")?;
        }
        if self.forced_falsified > 0 {
            writeln!(f, "forced falsified: {}", self.forced_falsified)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(lhs: &[Var], rhs: u8, w: u64) -> Equation {
        Equation::new(lhs.iter().copied(), rhs == 1, w).unwrap()
    }

    fn weights(s: &LinSystem) -> Vec<u64> {
        s.equations().iter().map(Equation::weight).collect()
    }

    #[test]
    fn evaluate_examples() {
        let s = LinSystem::new(2, vec![eq(&[0, 1], 1, 2), eq(&[0], 0, 1)]).unwrap();
        let e = s.evaluate(&Assignment::new(vec![false, true])).unwrap();
        assert_eq!((e.satisfied, e.falsified), (3, 0));
        let e = s.evaluate(&Assignment::new(vec![true, true])).unwrap();
        assert_eq!((e.satisfied, e.falsified), (0, 3));

        let empty = LinSystem::empty(0);
        let e = empty.evaluate(&Assignment::zeros(0)).unwrap();
        assert_eq!((e.satisfied, e.falsified), (0, 0));
    }

    #[test]
    fn evaluate_rejects_wrong_length() {
        let s = LinSystem::empty(3);
        assert_eq!(
            s.evaluate(&Assignment::zeros(2)),
            Err(Error::Dimension {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn cap_weights_examples() {
        let s = LinSystem::new(1, vec![eq(&[0], 0, 1), eq(&[0], 1, 5), eq(&[0], 0, 3)]).unwrap();
        assert_eq!(weights(&s.cap_weights(2)), vec![1, 3, 3]);
        let s = LinSystem::new(1, vec![eq(&[0], 0, 1), eq(&[0], 1, 1)]).unwrap();
        assert_eq!(weights(&s.cap_weights(0)), vec![1, 1]);
        let s = LinSystem::new(1, vec![eq(&[0], 0, 7)]).unwrap();
        assert_eq!(weights(&s.cap_weights(3)), vec![4]);
    }

    #[test]
    fn normalize_examples() {
        let s = LinSystem::new(1, vec![eq(&[0], 0, 1), eq(&[0], 0, 2)]).unwrap();
        assert_eq!(s.normalize().equations(), &[eq(&[0], 0, 3)]);

        let s = LinSystem::new(1, vec![eq(&[], 1, 4), eq(&[0], 0, 1)]).unwrap();
        let norm = s.normalize();
        assert_eq!(norm.equations(), &[eq(&[0], 0, 1)]);
        assert_eq!(norm.forced_falsified(), 4);

        let s = LinSystem::new(0, vec![eq(&[], 0, 9)]).unwrap();
        let norm = s.normalize();
        assert!(norm.equations().is_empty());
        assert_eq!(norm.forced_falsified(), 0);
    }

    #[test]
    fn normalize_orders_by_lhs_then_rhs() {
        let s = LinSystem::new(
            3,
            vec![eq(&[1, 2], 0, 1), eq(&[0], 1, 1), eq(&[0], 0, 1), eq(&[0, 2], 1, 1)],
        )
        .unwrap();
        let lhs: Vec<(Vec<Var>, bool)> = s
            .normalize()
            .equations()
            .iter()
            .map(|e| (e.lhs().to_vec(), e.rhs()))
            .collect();
        assert_eq!(
            lhs,
            vec![
                (vec![0], false),
                (vec![0], true),
                (vec![0, 2], true),
                (vec![1, 2], false)
            ]
        );
    }

    #[test]
    fn expand_unit_weights_examples() {
        let s = LinSystem::new(1, vec![eq(&[0], 0, 3)]).unwrap();
        assert_eq!(s.expand_unit_weights().equations(), vec![eq(&[0], 0, 1); 3]);

        let unit = LinSystem::new(2, vec![eq(&[0], 0, 1), eq(&[0, 1], 1, 1)]).unwrap();
        assert_eq!(unit.expand_unit_weights(), unit);

        let s = LinSystem::new(2, vec![eq(&[0, 1], 1, 2), eq(&[1], 0, 1)]).unwrap();
        assert_eq!(
            s.expand_unit_weights().equations(),
            &[eq(&[0, 1], 1, 1), eq(&[0, 1], 1, 1), eq(&[1], 0, 1)]
        );
    }

    #[test]
    fn profile_examples() {
        let s = LinSystem::new(3, vec![eq(&[0, 1, 2], 0, 1); 3]).unwrap();
        let p = s.profile();
        assert_eq!((p.max_arity, p.max_occurrence, p.m, p.total_weight), (3, 3, 3, 3));
        assert!(p.unit_weights);
        assert!(!p.distinct_lhs);

        let p = LinSystem::empty(0).profile();
        assert_eq!((p.max_arity, p.max_occurrence, p.m, p.total_weight), (0, 0, 0, 0));

        let p = LinSystem::new(1, vec![eq(&[0], 1, 5)]).unwrap().profile();
        assert_eq!((p.max_arity, p.max_occurrence, p.m, p.total_weight), (1, 1, 1, 5));
        assert!(!p.unit_weights);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Equation::new([0], false, 0), Err(Error::ZeroWeight));
        assert_eq!(Equation::new([2, 1, 2], false, 1), Err(Error::DuplicateVariable(2)));
        assert_eq!(
            LinSystem::new(2, vec![eq(&[0, 2], 0, 1)]),
            Err(Error::VariableOutOfRange { var: 2, n: 2 })
        );
        assert_eq!(
            LinSystem::new(1, vec![eq(&[0], 0, u64::MAX), eq(&[0], 1, 1)]),
            Err(Error::WeightOverflow)
        );
    }

    #[test]
    fn sum_cancels_shared_variables() {
        let a = eq(&[0, 1, 3], 1, 4);
        let b = eq(&[1, 2], 1, 2);
        assert_eq!(a.sum(&b, 2), eq(&[0, 2, 3], 0, 2));
    }
}
