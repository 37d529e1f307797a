mod common;

use common::{elimination_min_falsified, random_system, rng};
use maxlin2::baseline::{
    brute_force_min_falsified, conditional_expectation_assignment, f2_rank, f2_solve, F2Matrix,
    DEFAULT_VAR_LIMIT,
};
use maxlin2::{Equation, Error, LinSystem};
use proptest::prelude::*;

fn sys(n: usize, eqs: &[(&[usize], u8, u64)]) -> LinSystem {
    let eqs = eqs
        .iter()
        .map(|(l, r, w)| Equation::new(l.iter().copied(), *r == 1, *w).unwrap())
        .collect();
    LinSystem::new(n, eqs).unwrap()
}

fn brute(s: &LinSystem) -> u64 {
    brute_force_min_falsified(s, DEFAULT_VAR_LIMIT)
        .unwrap()
        .falsified_weight
}

#[test]
fn frozen_optima() {
    // odd triangle
    let tri = sys(3, &[(&[0, 1], 1, 1), (&[1, 2], 1, 1), (&[0, 2], 1, 1)]);
    // even 4-cycle of rhs 1 forces x1 = x3; units pull them apart
    let c4 = sys(
        4,
        &[
            (&[0, 1], 1, 2),
            (&[1, 2], 1, 2),
            (&[2, 3], 1, 2),
            (&[0, 3], 1, 2),
            (&[0], 1, 1),
            (&[2], 0, 1),
        ],
    );
    // rows of a 3x3 identity plus their sum with the wrong rhs
    let dep = sys(
        3,
        &[(&[0], 1, 3), (&[1], 0, 3), (&[2], 1, 3), (&[0, 1, 2], 1, 1)],
    );
    let cases = [(tri, 1), (c4, 1), (dep, 1)];
    for (s, expected) in cases {
        assert_eq!(brute(&s), expected, "{s}");
        assert_eq!(elimination_min_falsified(&s), expected, "{s}");
    }
}

#[test]
fn elimination_matches_brute_force() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut r, 1..=12);
        let m = rand::Rng::gen_range(&mut r, 0..=18);
        let s = random_system(&mut r, n, m, 0, 4, 5);
        assert_eq!(elimination_min_falsified(&s), brute(&s), "{s}");
    }
}

#[test]
fn brute_force_capacity() {
    let s = LinSystem::empty(25);
    assert!(matches!(
        brute_force_min_falsified(&s, DEFAULT_VAR_LIMIT),
        Err(Error::Capacity { .. })
    ));
}

fn arb_system(max_n: usize, max_m: usize) -> impl Strategy<Value = LinSystem> {
    (1..=max_n).prop_flat_map(move |n| {
        let eq = (
            proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n.min(4)),
            any::<bool>(),
            1u64..=6,
        )
            .prop_map(|(lhs, rhs, w)| Equation::new(lhs, rhs, w).unwrap());
        proptest::collection::vec(eq, 0..=max_m)
            .prop_map(move |eqs| LinSystem::new(n, eqs).unwrap())
    })
}

proptest! {
    #[test]
    fn half_weight_guarantee(s in arb_system(14, 20)) {
        let r = conditional_expectation_assignment(&s);
        prop_assert!(2 * r.satisfied_weight(&s) >= s.total_weight());
    }

    #[test]
    fn brute_force_beats_expectation(s in arb_system(10, 14)) {
        let exact = brute_force_min_falsified(&s, DEFAULT_VAR_LIMIT).unwrap();
        let approx = conditional_expectation_assignment(&s);
        prop_assert!(exact.falsified_weight <= approx.falsified_weight);
        prop_assert_eq!(s.evaluate(&exact.assignment).unwrap().falsified, exact.falsified_weight);
    }

    #[test]
    fn f2_solution_satisfies_or_rank_jumps(
        rows in proptest::collection::vec(
            (proptest::collection::vec(any::<bool>(), 70), any::<bool>()), 0..12)
    ) {
        let mut mat = F2Matrix::new(70);
        for (bits, rhs) in &rows {
            let cols: Vec<usize> = bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect();
            mat.push_row(&cols, *rhs);
        }
        let rank = f2_rank(&mat);
        prop_assert!(rank <= rows.len());
        match f2_solve(&mat) {
            Some(x) => {
                prop_assert_eq!(mat.augmented_rank(), rank);
                for (bits, rhs) in &rows {
                    let parity = bits.iter().zip(x.values()).filter(|(a, b)| **a && **b).count() % 2 == 1;
                    prop_assert_eq!(parity, *rhs);
                }
            }
            None => prop_assert_eq!(mat.augmented_rank(), rank + 1),
        }
    }
}
