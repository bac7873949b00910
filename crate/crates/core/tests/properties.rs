mod common;

use domcheck::graph::graph6::to_graph6_string;
use domcheck::graph::{parse_graph6, random_regular, write_graph6, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for b in 1..n {
                for a in 0..b {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        let bytes = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&bytes).unwrap(), g.clone());
        let text = to_graph6_string(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
    }

    #[test]
    fn random_regular_is_regular_and_reproducible(half in 2usize..12, delta in 1usize..5, seed in any::<u64>()) {
        let n = 2 * half;
        let delta = delta.min(n - 1);
        let g = random_regular(n, delta, seed).unwrap();
        prop_assert_eq!(g.is_regular(), Some(delta));
        prop_assert_eq!(random_regular(n, delta, seed).unwrap(), g);
    }

    #[test]
    fn line_graphs_are_claw_free(g in arb_graph(9)) {
        prop_assume!(g.edge_count() > 0);
        let (l, labels) = g.line_graph().unwrap();
        prop_assert_eq!(l.n(), g.edge_count());
        prop_assert!(l.is_claw_free());
        for a in 0..l.n() {
            for b in a + 1..l.n() {
                prop_assert_eq!(l.has_edge(a, b), labels[a].shares_endpoint(&labels[b]));
            }
        }
    }

    #[test]
    fn claw_detection_matches_definition(g in arb_graph(8)) {
        let adj = common::adjacency(&g);
        let n = g.n();
        let mut claw = false;
        for c in 0..n {
            let nb: Vec<usize> = (0..n).filter(|&v| adj[c] >> v & 1 == 1).collect();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    for k in j + 1..nb.len() {
                        let (x, y, z) = (nb[i], nb[j], nb[k]);
                        if adj[x] >> y & 1 == 0 && adj[x] >> z & 1 == 0 && adj[y] >> z & 1 == 0 {
                            claw = true;
                        }
                    }
                }
            }
        }
        prop_assert_eq!(g.is_claw_free(), !claw);
    }
}
