//! Exact polynomial-time solving when every variable occurs in at most two
//! equations.
//!
//! After repeatedly deleting equations that contain a variable of
//! occurrence one, every variable left lies in exactly two equations. In a
//! connected component the rows of `A` then sum to zero while no proper
//! subset does, so `rank(A) = m - 1`: the component is fully satisfiable
//! when its right-hand sides XOR to 0 and otherwise exactly one equation,
//! any one, must be given up. [`solve_occ2_merge`] reaches the same value by
//! summing pairs of equations that share a variable.

use std::collections::BTreeSet;

use crate::baseline::{F2Matrix, SolveResult};
use crate::error::{Error, Result};
use crate::system::{Assignment, Equation, LinSystem, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedEquation {
    /// Id in the system handed to [`prune_singletons`].
    pub id: usize,
    pub equation: Equation,
    /// Variable that occurred only in this equation when it was removed.
    pub witness: Var,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PruneLog {
    pub removed: Vec<PrunedEquation>,
    /// Ids of the equations that survived, in the residual system's order.
    pub kept: Vec<usize>,
}

impl PruneLog {
    /// Extends an assignment of the residual system to the removed
    /// equations, satisfying all of them.
    pub fn replay(&self, assignment: &mut Assignment) {
        for p in self.removed.iter().rev() {
            let others = p
                .equation
                .lhs()
                .iter()
                .filter(|&&v| v != p.witness)
                .fold(false, |acc, &v| acc ^ assignment.get(v));
            assignment.set(p.witness, others ^ p.equation.rhs());
        }
    }
}

/// Deletes equations containing a variable of occurrence one until none is
/// left. Each deletion can expose new singletons, which are handled in
/// order of discovery.
pub fn prune_singletons(system: &LinSystem) -> (LinSystem, PruneLog) {
    let equations = system.equations();
    let occ_lists = system.occurrence_lists();
    let mut occ: Vec<usize> = occ_lists.iter().map(Vec::len).collect();
    let mut alive = vec![true; equations.len()];
    let mut queue: std::collections::VecDeque<Var> =
        (0..system.n()).filter(|&v| occ[v] == 1).collect();
    let mut log = PruneLog::default();

    while let Some(var) = queue.pop_front() {
        if occ[var] != 1 {
            continue;
        }
        let id = occ_lists[var]
            .iter()
            .copied()
            .find(|&id| alive[id])
            .expect("occurrence count matches live equations");
        alive[id] = false;
        for &v in equations[id].lhs() {
            occ[v] -= 1;
            if occ[v] == 1 {
                queue.push_back(v);
            }
        }
        log.removed.push(PrunedEquation {
            id,
            equation: equations[id].clone(),
            witness: var,
        });
    }

    log.kept = (0..equations.len()).filter(|&id| alive[id]).collect();
    let residual = log.kept.iter().map(|&id| equations[id].clone()).collect();
    let residual = LinSystem::from_parts(system.n(), residual, system.forced_falsified());
    (residual, log)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Equation ids of the input system, ascending.
    pub equation_ids: Vec<usize>,
    /// The component's equations over the full variable range.
    pub system: LinSystem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Ordered by smallest equation id.
    pub components: Vec<Component>,
    /// Component index of every equation.
    pub component_of: Vec<usize>,
}

/// Connected components of the graph on equations in which two equations
/// are adjacent when they share a variable.
pub fn split_components(system: &LinSystem) -> ComponentPartition {
    let m = system.m();
    let mut dsu = Dsu::new(m);
    for ids in system.occurrence_lists() {
        for pair in ids.windows(2) {
            dsu.union(pair[0], pair[1]);
        }
    }

    let mut index_of_root = vec![usize::MAX; m];
    let mut component_of = vec![0; m];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for id in 0..m {
        let root = dsu.find(id);
        if index_of_root[root] == usize::MAX {
            index_of_root[root] = members.len();
            members.push(Vec::new());
        }
        component_of[id] = index_of_root[root];
        members[index_of_root[root]].push(id);
    }

    let components = members
        .into_iter()
        .map(|equation_ids| {
            let eqs = equation_ids
                .iter()
                .map(|&id| system.equations()[id].clone())
                .collect();
            Component {
                system: LinSystem::from_parts(system.n(), eqs, 0),
                equation_ids,
            }
        })
        .collect();
    ComponentPartition {
        components,
        component_of,
    }
}

fn check_occurrence_bound(system: &LinSystem) -> Result<()> {
    let occ = system.occurrences();
    if let Some((var, &d)) = occ.iter().enumerate().find(|(_, &d)| d > 2) {
        return Err(Error::InstanceClass(format!(
            "variable x{} occurs in {d} equations, at most 2 allowed",
            var + 1
        )));
    }
    Ok(())
}

/// Exact optimum for systems in which every variable occurs at most twice.
pub fn solve_occ2(system: &LinSystem) -> Result<SolveResult> {
    check_occurrence_bound(system)?;

    // Constant equations never reach the component logic; keeping the
    // others in place preserves equation ids for the certificate.
    let variable_ids: Vec<usize> = (0..system.m())
        .filter(|&id| system.equations()[id].arity() > 0)
        .collect();
    let core = LinSystem::from_parts(
        system.n(),
        variable_ids
            .iter()
            .map(|&id| system.equations()[id].clone())
            .collect(),
        0,
    );

    let (residual, log) = prune_singletons(&core);
    let partition = split_components(&residual);
    let mut assignment = Assignment::zeros(system.n());

    for component in &partition.components {
        let eqs = component.system.equations();
        let rhs_parity = eqs.iter().fold(false, |acc, eq| acc ^ eq.rhs());
        let mut mat = F2Matrix::new(system.n());
        let dropped = if rhs_parity {
            // lightest equation, first one on ties
            let (pos, _) = eqs
                .iter()
                .enumerate()
                .min_by_key(|(pos, eq)| (eq.weight(), *pos))
                .expect("components are nonempty");
            Some(pos)
        } else {
            None
        };
        for (pos, eq) in eqs.iter().enumerate() {
            if Some(pos) != dropped {
                mat.push_row(eq.lhs(), eq.rhs());
            }
        }
        let local = mat.solve().ok_or_else(|| {
            Error::Contract("component minus one equation must be consistent".into())
        })?;
        for eq in eqs {
            for &v in eq.lhs() {
                assignment.set(v, local.get(v));
            }
        }
    }

    log.replay(&mut assignment);
    SolveResult::from_assignment(system, assignment)
}

/// Optimum value of an occurrence-≤2 system by pairwise merging: two
/// equations sharing a variable are replaced by their sum, weighted with
/// the lighter of the two. The lowest shared variable is merged first.
pub fn solve_occ2_merge(system: &LinSystem) -> Result<u64> {
    check_occurrence_bound(system)?;

    let mut eqs: Vec<Option<Equation>> = system.equations().iter().cloned().map(Some).collect();
    let mut occ: Vec<Vec<usize>> = system.occurrence_lists();
    let mut shared: BTreeSet<Var> = (0..system.n()).filter(|&v| occ[v].len() == 2).collect();

    while let Some(var) = shared.pop_first() {
        let (i, j) = (occ[var][0], occ[var][1]);
        let a = eqs[i].take().expect("live equation");
        let b = eqs[j].take().expect("live equation");
        let merged = a.sum(&b, a.weight().min(b.weight()));
        let id = eqs.len();

        for &v in a.lhs().iter().chain(b.lhs()) {
            occ[v].retain(|&e| e != i && e != j);
        }
        for &v in merged.lhs() {
            occ[v].push(id);
        }
        for &v in a.lhs().iter().chain(b.lhs()) {
            if occ[v].len() == 2 {
                shared.insert(v);
            } else {
                shared.remove(&v);
            }
        }
        eqs.push(Some(merged));
    }

    let unsatisfiable: u64 = eqs
        .iter()
        .flatten()
        .filter(|eq| eq.arity() == 0 && eq.rhs())
        .map(Equation::weight)
        .sum();
    Ok(system.forced_falsified() + unsatisfiable)
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::{brute_force_min_falsified, f2_rank, DEFAULT_VAR_LIMIT};

    fn sys(n: usize, eqs: &[(&[usize], u8, u64)]) -> LinSystem {
        let eqs = eqs
            .iter()
            .map(|(l, r, w)| Equation::new(l.iter().copied(), *r == 1, *w).unwrap())
            .collect();
        LinSystem::new(n, eqs).unwrap()
    }

    #[test]
    fn prune_cascade() {
        let s = sys(3, &[(&[0, 1], 1, 1), (&[1, 2], 0, 1), (&[2], 1, 1)]);
        let (residual, log) = prune_singletons(&s);
        assert_eq!(residual.m(), 0);
        assert_eq!(log.removed.len(), 3);
        assert!(log.kept.is_empty());

        let mut a = Assignment::zeros(3);
        log.replay(&mut a);
        assert_eq!(s.evaluate(&a).unwrap().falsified, 0);
    }

    #[test]
    fn prune_leaves_cycle_alone() {
        let s = sys(2, &[(&[0, 1], 0, 1), (&[0, 1], 1, 1)]);
        let (residual, log) = prune_singletons(&s);
        assert_eq!(residual, s);
        assert!(log.removed.is_empty());
    }

    #[test]
    fn prune_single_equation() {
        let s = sys(1, &[(&[0], 1, 5)]);
        let (residual, log) = prune_singletons(&s);
        assert_eq!(residual.m(), 0);
        assert_eq!(
            log.removed,
            vec![PrunedEquation {
                id: 0,
                equation: s.equations()[0].clone(),
                witness: 0
            }]
        );
    }

    #[test]
    fn split_examples() {
        let s = sys(4, &[(&[0, 1], 0, 1), (&[2, 3], 1, 1)]);
        assert_eq!(split_components(&s).components.len(), 2);
        let s = sys(3, &[(&[0, 1], 0, 1), (&[1, 2], 0, 1), (&[0, 2], 0, 1)]);
        let p = split_components(&s);
        assert_eq!(p.components.len(), 1);
        assert_eq!(p.component_of, vec![0, 0, 0]);
        assert!(split_components(&LinSystem::empty(0)).components.is_empty());
    }

    #[test]
    fn solve_examples() {
        // brute force over 8 assignments gives 1
        let s = sys(3, &[(&[0, 1], 1, 2), (&[1, 2], 0, 3), (&[0, 2], 0, 1)]);
        assert_eq!(brute_force_min_falsified(&s, DEFAULT_VAR_LIMIT).unwrap().falsified_weight, 1);
        let r = solve_occ2(&s).unwrap();
        assert_eq!(r.falsified_weight, 1);
        assert_eq!(r.certificate, vec![2]);

        let s = sys(3, &[(&[0, 1], 0, 5), (&[1, 2], 0, 5), (&[0, 2], 0, 5)]);
        let r = solve_occ2(&s).unwrap();
        assert_eq!(r.falsified_weight, 0);
        assert_eq!(r.assignment, Assignment::zeros(3));

        let s = sys(1, &[(&[0], 0, 1), (&[0], 1, 2)]);
        let r = solve_occ2(&s).unwrap();
        assert_eq!(r.falsified_weight, 1);
        assert_eq!(r.certificate, vec![0]);
    }

    #[test]
    fn ties_drop_smallest_id() {
        let s = sys(2, &[(&[0, 1], 1, 2), (&[0], 0, 2), (&[1], 0, 2)]);
        assert_eq!(solve_occ2(&s).unwrap().certificate, vec![0]);
    }

    #[test]
    fn constants_are_counted() {
        let s = sys(1, &[(&[], 1, 3), (&[], 0, 4), (&[0], 1, 1)]);
        let r = solve_occ2(&s).unwrap();
        assert_eq!(r.falsified_weight, 3);
        assert_eq!(r.certificate, vec![0]);
        assert_eq!(solve_occ2_merge(&s).unwrap(), 3);
    }

    #[test]
    fn merge_examples() {
        let s = sys(1, &[(&[0], 0, 1), (&[0], 1, 2)]);
        assert_eq!(solve_occ2_merge(&s).unwrap(), 1);
        let s = sys(3, &[(&[0, 1], 1, 2), (&[1, 2], 0, 3)]);
        assert_eq!(solve_occ2_merge(&s).unwrap(), 0);
    }

    #[test]
    fn occurrence_bound_is_enforced() {
        let s = sys(1, &[(&[0][..], 0, 1); 3]);
        assert!(matches!(solve_occ2(&s), Err(Error::InstanceClass(_))));
        assert!(matches!(solve_occ2_merge(&s), Err(Error::InstanceClass(_))));
    }

    #[test]
    fn component_rank_is_m_minus_one() {
        // a 4-cycle of equations plus a path that gets pruned away
        let s = sys(
            7,
            &[
                (&[0, 1], 1, 1),
                (&[1, 2], 0, 1),
                (&[2, 3], 1, 1),
                (&[3, 0], 0, 1),
                (&[4, 5], 1, 1),
                (&[5, 6], 1, 1),
            ],
        );
        let (residual, _) = prune_singletons(&s);
        let partition = split_components(&residual);
        assert_eq!(partition.components.len(), 1);
        for c in partition.components {
            let mat = F2Matrix::from_system(&c.system);
            assert_eq!(f2_rank(&mat), c.system.m() - 1);
        }
    }
}
