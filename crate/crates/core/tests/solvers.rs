mod common;

use common::{random_graph, random_occ2_system, random_system, rng};
use maxlin2::baseline::{brute_force_min_falsified, DEFAULT_VAR_LIMIT};
use maxlin2::bipartize::{
    brute_force_bipartization, edge_bipartization, expand_weighted_edges,
    min_edge_bipartization, EdgeLabel, Graph, DEFAULT_EDGE_LIMIT,
};
use maxlin2::fpt::{build_graph, rewrite_zero_rhs, solve_below_w};
use maxlin2::occ2::{prune_singletons, solve_occ2, solve_occ2_merge, split_components};
use maxlin2::LinSystem;
use rand::Rng;

fn brute(s: &LinSystem) -> u64 {
    brute_force_min_falsified(s, DEFAULT_VAR_LIMIT)
        .unwrap()
        .falsified_weight
}

#[test]
fn occ2_matches_brute_force() {
    let mut r = rng(1);
    for _ in 0..200 {
        let n = r.gen_range(1..=10);
        let m = r.gen_range(0..=12);
        let s = random_occ2_system(&mut r, n, m, 5);
        let opt = brute(&s);
        let res = solve_occ2(&s).unwrap();
        assert_eq!(res.falsified_weight, opt, "{s}");
        assert_eq!(s.evaluate(&res.assignment).unwrap().falsified, opt);
        assert_eq!(solve_occ2_merge(&s).unwrap(), opt, "{s}");
    }
}

#[test]
fn pruning_keeps_optimum() {
    let mut r = rng(2);
    for _ in 0..100 {
        let s = random_occ2_system(&mut r, 8, 8, 4);
        let (pruned, log) = prune_singletons(&s);
        assert_eq!(brute(&pruned), brute(&s));
        let mut a = brute_force_min_falsified(&pruned, DEFAULT_VAR_LIMIT)
            .unwrap()
            .assignment;
        log.replay(&mut a);
        assert_eq!(s.evaluate(&a).unwrap().falsified, brute(&s));
    }
}

#[test]
fn components_partition_equations() {
    let mut r = rng(3);
    for _ in 0..100 {
        let s = random_occ2_system(&mut r, 10, 10, 3);
        let (pruned, _) = prune_singletons(&s);
        let part = split_components(&pruned);
        let mut seen: Vec<usize> = part
            .components
            .iter()
            .flat_map(|c| c.equation_ids.iter().copied())
            .collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..pruned.m()).collect::<Vec<_>>());
    }
}

#[test]
fn occ2_rejects_third_occurrence() {
    let s = random_system(&mut rng(4), 2, 3, 2, 2, 1);
    assert!(solve_occ2(&s).is_err());
}

#[test]
fn fpt_matches_brute_force() {
    let mut r = rng(5);
    for _ in 0..150 {
        let n = r.gen_range(1..=8);
        let m = r.gen_range(0..=10);
        let s = random_system(&mut r, n, m, 0, 2, 3);
        let opt = brute(&s);
        for k in 0..=4 {
            match solve_below_w(&s, k).unwrap() {
                Some(res) => {
                    assert!(opt <= k);
                    assert_eq!(res.falsified_weight, opt, "{s} k={k}");
                    assert_eq!(s.evaluate(&res.assignment).unwrap().falsified, opt);
                }
                None => assert!(opt > k, "{s} k={k}"),
            }
        }
    }
}

#[test]
fn fpt_graph_has_one_edge_per_equation() {
    let mut r = rng(6);
    for _ in 0..50 {
        let s = random_system(&mut r, 6, 8, 1, 2, 3).cap_weights(2);
        let rw = rewrite_zero_rhs(&s).unwrap();
        let (g, map) = build_graph(&rw, 2).unwrap();
        assert_eq!(g.m(), rw.system.m() + 1);
        assert_eq!(g.n(), map.var_count + 2);
        let last = g.edges().last().unwrap();
        assert_eq!((last.weight, last.label), (3, EdgeLabel::Anchor));
    }
}

#[test]
fn compression_matches_subset_enumeration() {
    let mut r = rng(7);
    for _ in 0..150 {
        let n = r.gen_range(2..=9);
        let m = r.gen_range(0..=14);
        let g = random_graph(&mut r, n, m);
        let best = brute_force_bipartization(&g, g.m(), DEFAULT_EDGE_LIMIT)
            .unwrap()
            .unwrap()
            .deleted_edges
            .len();
        for k in 0..=4 {
            let fast = edge_bipartization(&g, k).unwrap();
            assert_eq!(fast.is_some(), best <= k);
            if let Some(b) = fast {
                assert!(b.deleted_edges.len() <= k);
                assert!(b.is_valid_for(&g));
            }
        }
        let min = min_edge_bipartization(&g).unwrap();
        assert_eq!(min.deleted_edges.len(), best);
        assert!(min.is_valid_for(&g));
    }
}

#[test]
fn weighted_expansion_preserves_cut_cost() {
    // triangle with one heavy edge: cheapest fix deletes a light edge
    let mut g = Graph::new(3);
    g.add_edge(0, 1, 3, EdgeLabel::None).unwrap();
    g.add_edge(1, 2, 1, EdgeLabel::None).unwrap();
    g.add_edge(0, 2, 2, EdgeLabel::None).unwrap();
    let (h, prov) = expand_weighted_edges(&g);
    assert_eq!(h.m(), 3 * 6);
    assert_eq!(prov.len(), h.m());
    let min = min_edge_bipartization(&h).unwrap();
    assert_eq!(min.deleted_edges.len(), 1);
    assert_eq!(prov[min.deleted_edges[0]].original, 1);
}
