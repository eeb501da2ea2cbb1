use proptest::prelude::*;

use kmetric::dimension::{distinctive_set, metric_dimensionality};
use kmetric::distance::all_pairs_distances;
use kmetric::generate;
use kmetric::geodesic;
use kmetric::graph::Graph;

/// Connected graph: seeded random tree plus arbitrary extra edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (3usize..20, any::<u64>(), proptest::collection::vec((0usize..20, 0usize..20), 0..8))
        .prop_map(|(n, seed, extra)| {
            let tree = generate::random_tree(n, seed).unwrap();
            let mut edges = tree.edges();
            for (u, v) in extra {
                let (u, v) = (u % n, v % n);
                if u != v {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            Graph::new(n, &edges).unwrap()
        })
}

proptest! {
    #[test]
    fn distances_are_a_metric(g in connected_graph()) {
        let dm = all_pairs_distances(&g);
        let n = g.vertex_count();
        for u in 0..n {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
    }

    #[test]
    fn distinctive_sets_contain_the_pair(g in connected_graph()) {
        let dm = all_pairs_distances(&g);
        let n = g.vertex_count();
        for x in 0..n {
            for y in x + 1..n {
                let d = distinctive_set(&g, &dm, x, y).unwrap();
                prop_assert!(d.members.contains(&x) && d.members.contains(&y));
                for &z in &d.members {
                    prop_assert_ne!(dm.get(x, z), dm.get(y, z));
                }
            }
        }
    }

    #[test]
    fn dimension_is_at_least_two_and_at_least_a(g in connected_graph()) {
        let dm = all_pairs_distances(&g);
        let dim = metric_dimensionality(&g, &dm).unwrap().k;
        let a = geodesic::shortest_maximal_geodesic(&g, &dm).unwrap().a;
        prop_assert!(dim >= 2);
        prop_assert!(a <= dim);
    }

    #[test]
    fn edge_list_round_trips(g in connected_graph()) {
        let text = g.to_edge_list();
        let back = Graph::parse_edge_list(&text).unwrap();
        prop_assert_eq!(g.edges(), back.edges());
        prop_assert_eq!(text, back.to_edge_list());
    }
}
