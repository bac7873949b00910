//! Built-in graph collections for sweeps and tests.

use std::collections::BTreeSet;

use crate::graph::families::*;
use crate::graph::{random_regular, write_graph6, Graph};

/// Named small graphs with known parameters.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("double_star", double_star()),
        ("prism", prism()),
        ("k4", complete(4)),
        ("k33", complete_bipartite(3, 3)),
        ("petersen", petersen()),
        ("cube", cube()),
        ("c5", cycle(5)),
        ("k2", complete(2)),
    ]
}

/// The 3-dimensional cube `Q3`.
pub fn cube() -> Graph {
    let edges = (0..8usize)
        .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
        .filter(|&(u, v)| u < v);
    Graph::from_edges(8, edges.collect::<Vec<_>>()).unwrap()
}

/// `count` connected cubic graphs with orders cycling through
/// `8, 10, .., 16`, the `i`-th drawn from seed `seed + i` (disconnected draws
/// are skipped and the seed advances).
pub fn random_cubic(count: usize, seed: u64) -> Vec<Graph> {
    let orders = [8, 10, 12, 14, 16];
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        let n = orders[out.len() % orders.len()];
        let g = random_regular(n, 3, s).expect("cubic graphs exist on even orders ≥ 4");
        s = s.wrapping_add(1);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Every cubic multigraph on `h` labelled vertices, loops counting twice,
/// as sorted edge lists.
pub fn cubic_multigraphs(h: usize) -> Vec<Multigraph> {
    let slots: Vec<(usize, usize)> = (0..h).flat_map(|a| (a..h).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut degree = vec![0usize; h];
    let mut chosen = Vec::new();
    fn rec(
        slots: &[(usize, usize)],
        from: usize,
        degree: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Multigraph>,
    ) {
        if degree.iter().all(|&d| d == 3) {
            out.push(Multigraph::new(degree.len(), chosen.clone()));
            return;
        }
        for i in from..slots.len() {
            let (a, b) = slots[i];
            let add = |d: &mut Vec<usize>, s: isize| {
                d[a] = (d[a] as isize + s) as usize;
                d[b] = (d[b] as isize + s) as usize;
            };
            add(degree, 1);
            if degree[a] <= 3 && degree[b] <= 3 {
                chosen.push((a, b));
                rec(slots, i, degree, chosen, out);
                chosen.pop();
            }
            add(degree, -1);
        }
    }
    rec(&slots, 0, &mut degree, &mut chosen, &mut out);
    out
}

fn diamond_vectors(len: usize, budget: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=budget {
        for mut rest in diamond_vectors(len - 1, budget - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Connected cubic claw-free graphs on at most `max_n` vertices: `K4`, rings
/// of diamonds, and every graph obtained from a cubic multigraph (loops
/// allowed) by turning each vertex into a triangle and each edge into a
/// string of diamonds. Duplicates with identical labelling are dropped;
/// isomorphic copies under different labellings may remain.
pub fn claw_free_cubic(max_n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut keep = |g: Graph, out: &mut Vec<Graph>| {
        if g.n() <= max_n
            && g.is_cubic()
            && g.is_claw_free()
            && g.is_connected()
            && seen.insert(write_graph6(&g))
        {
            out.push(g);
        }
    };
    if max_n >= 4 {
        keep(complete(4), &mut out);
    }
    for k in 2..=max_n / 4 {
        keep(ring_of_diamonds(k), &mut out);
    }
    for h in (2..).step_by(2).take_while(|h| 3 * h <= max_n) {
        for mg in cubic_multigraphs(h) {
            let budget = (max_n - 3 * h) / 4;
            for diamonds in diamond_vectors(mg.edges.len(), budget) {
                if let Some(g) = expand(&mg, &vec![true; h], &diamonds) {
                    keep(g, &mut out);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multigraph_counts() {
        // On two vertices: the theta, and the dumbbell (two loops, one edge).
        assert_eq!(cubic_multigraphs(2).len(), 2);
        assert!(cubic_multigraphs(4)
            .iter()
            .all(|m| (0..4).all(|v| m.degree(v) == 3)));
    }

    #[test]
    fn claw_free_corpus() {
        let corpus = claw_free_cubic(14);
        assert!(corpus.iter().any(|g| *g == complete(4)));
        assert!(corpus.iter().any(|g| g.n() == 6));
        assert!(corpus
            .iter()
            .all(|g| g.is_cubic() && g.is_claw_free() && g.n() <= 14));
        // The dumbbell needs a diamond on each loop: 6 + 8 = 14 vertices.
        let has_bridge = |g: &Graph| {
            g.edges().iter().any(|e| {
                let rest = Graph::from_edges(
                    g.n(),
                    g.edges().iter().filter(|f| *f != e).map(|f| (f.u, f.v)),
                )
                .unwrap();
                !rest.is_connected()
            })
        };
        assert!(corpus.iter().any(|g| g.n() == 14 && has_bridge(g)));
    }

    #[test]
    fn random_corpus_is_connected_cubic() {
        let c = random_cubic(25, 3);
        assert_eq!(c.len(), 25);
        assert!(c.iter().all(|g| g.is_cubic() && g.is_connected()));
        assert_eq!(c[1].n(), 10);
        assert_eq!(random_cubic(25, 3), c);
    }
}
