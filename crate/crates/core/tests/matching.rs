use cmbip::generators::{all_bipartite_graphs, grid_graph};
use cmbip::{
    enumerate_perfect_matchings, hall_violator, has_unique_perfect_matching, max_matching, BipartiteGraph,
    Uniqueness,
};
use proptest::prelude::*;

/// Permanent of the biadjacency matrix by Ryser's inclusion–exclusion.
fn ryser_permanent(g: &BipartiteGraph) -> i64 {
    let n = g.part_a();
    if n != g.part_b() {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    let mut total = 0i64;
    for cols in 1u32..1 << n {
        let mut product = 1i64;
        for a in 0..n {
            let row_sum = (0..n).filter(|&b| cols >> b & 1 == 1 && g.has_edge(a, b)).count() as i64;
            product *= row_sum;
        }
        let sign = if (n - cols.count_ones() as usize) % 2 == 0 { 1 } else { -1 };
        total += sign * product;
    }
    total
}

/// Largest matching size by trying every edge subset.
fn brute_max_matching(g: &BipartiteGraph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<_> = (0..edges.len()).filter(|k| mask >> k & 1 == 1).map(|k| edges[k]).collect();
        let mut a: Vec<_> = chosen.iter().map(|e| e.0).collect();
        let mut b: Vec<_> = chosen.iter().map(|e| e.1).collect();
        a.sort_unstable();
        a.dedup();
        b.sort_unstable();
        b.dedup();
        if a.len() == chosen.len() && b.len() == chosen.len() {
            best = best.max(chosen.len());
        }
    }
    best
}

fn arb_graph(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(na, nb)| (Just(na), Just(nb), prop::collection::vec(any::<bool>(), na * nb)))
        .prop_map(|(na, nb, bits)| {
            let edges = (0..na * nb).filter(|&k| bits[k]).map(|k| (k / nb, k % nb));
            BipartiteGraph::new(na, nb, edges).unwrap().normalize().graph
        })
}

#[test]
fn enumeration_count_matches_permanent_for_parts_up_to_four() {
    for (na, nb) in [(1, 1), (2, 2), (3, 3), (4, 4), (3, 4), (2, 4)] {
        for (_, g) in all_bipartite_graphs(na, nb).unwrap() {
            let e = enumerate_perfect_matchings(&g, usize::MAX);
            assert!(!e.truncated);
            assert_eq!(e.matchings.len() as i64, ryser_permanent(&g), "{}", g.to_text());
        }
    }
}

#[test]
fn hall_duality_on_the_full_grid() {
    for (_, g) in all_bipartite_graphs(4, 4).unwrap() {
        let m = max_matching(&g);
        if g.part_a() != g.part_b() {
            continue;
        }
        match hall_violator(&g).unwrap() {
            None => assert!(m.is_perfect_in(&g)),
            Some(h) => {
                assert!(!m.is_perfect_in(&g));
                assert!(h.validate(&g), "{}", g.to_text());
            }
        }
    }
}

#[test]
fn enumeration_truncates_exactly_past_the_cap() {
    // K33 has 6 perfect matchings
    let k33 = grid_graph(3, 3, (1 << 9) - 1);
    let at = enumerate_perfect_matchings(&k33, 6);
    assert_eq!((at.matchings.len(), at.truncated), (6, false));
    let below = enumerate_perfect_matchings(&k33, 5);
    assert_eq!((below.matchings.len(), below.truncated), (5, true));
    assert_eq!(has_unique_perfect_matching(&k33), Uniqueness::Multiple);
}

proptest! {
    #[test]
    fn max_matching_is_valid_and_maximum(g in arb_graph(4)) {
        let m = max_matching(&g);
        let mut a: Vec<_> = m.pairs().iter().map(|p| p.0).collect();
        let mut b: Vec<_> = m.pairs().iter().map(|p| p.1).collect();
        a.dedup();
        b.sort_unstable();
        b.dedup();
        prop_assert_eq!(a.len(), m.len());
        prop_assert_eq!(b.len(), m.len());
        prop_assert!(m.pairs().iter().all(|&(x, y)| g.has_edge(x, y)));
        prop_assert_eq!(m.len(), brute_max_matching(&g));
    }

    #[test]
    fn enumerated_matchings_are_distinct_perfect_matchings(g in arb_graph(5)) {
        let e = enumerate_perfect_matchings(&g, 1000);
        for m in &e.matchings {
            prop_assert!(m.is_perfect_in(&g));
        }
        let mut seen = e.matchings.clone();
        seen.sort_by(|x, y| x.pairs().cmp(y.pairs()));
        seen.dedup();
        prop_assert_eq!(seen.len(), e.matchings.len());
    }
}
