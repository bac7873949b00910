//! Named graphs and the cubic claw-free building blocks (vertex truncation,
//! diamond strings) used as fixtures.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges.collect::<Vec<_>>()).unwrap()
}

/// Two adjacent centers 0 and 1, with leaves 2, 3 on vertex 0 and 4, 5 on
/// vertex 1. Non-regular, with domination number 2 but a single-edge
/// maximal matching.
pub fn double_star() -> Graph {
    Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
}

/// Triangles `a1a2a3 = 0,1,2` and `b1b2b3 = 3,4,5` joined by `a_i b_i`.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `{i, i+5}`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a
        .edges()
        .into_iter()
        .map(|e| (e.u, e.v))
        .chain(b.edges().into_iter().map(|e| (e.u + shift, e.v + shift)));
    Graph::from_edges(a.n() + b.n(), edges.collect::<Vec<_>>()).unwrap()
}

/// A multigraph: parallel edges and loops allowed, listed with repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Multigraph {
        assert!(edges.iter().all(|&(a, b)| a < n && b < n));
        Multigraph { n, edges }
    }

    /// Two vertices joined by three parallel edges.
    pub fn theta() -> Multigraph {
        Multigraph::new(2, vec![(0, 1); 3])
    }

    /// A 4-cycle whose opposite edges 0-1 and 2-3 are doubled.
    pub fn doubled_square() -> Multigraph {
        Multigraph::new(4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
    }

    pub fn from_graph(g: &Graph) -> Multigraph {
        Multigraph {
            n: g.n(),
            edges: g.edges().into_iter().map(|e| (e.u, e.v)).collect(),
        }
    }

    /// A loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }
}

/// Expands `h`: each vertex in `truncate` becomes a triangle whose corners
/// take over its incident edges, and edge `i` of `h` is subdivided into a
/// string of `diamonds[i]` diamonds (`K_4` minus an edge, attached at its two
/// degree-2 vertices). Returns `None` when the result is not simple.
pub fn expand(h: &Multigraph, truncate: &[bool], diamonds: &[usize]) -> Option<Graph> {
    assert_eq!(truncate.len(), h.n);
    assert_eq!(diamonds.len(), h.edges.len());
    let mut next = 0usize;
    let mut fresh = |k: usize| {
        let start = next;
        next += k;
        start
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // For each vertex, the attachment points handed out to incident edges.
    let mut ports: Vec<Vec<usize>> = Vec::with_capacity(h.n);
    for (v, &tri) in truncate.iter().enumerate() {
        let deg = h.degree(v);
        if tri {
            let base = fresh(deg);
            for i in 0..deg {
                for j in i + 1..deg {
                    edges.push((base + i, base + j));
                }
            }
            ports.push((base..base + deg).collect());
        } else {
            let id = fresh(1);
            ports.push(vec![id; deg]);
        }
    }
    let mut used = vec![0usize; h.n];
    for (i, &(a, b)) in h.edges.iter().enumerate() {
        let pa = ports[a][used[a]];
        used[a] += 1;
        let pb = ports[b][used[b]];
        used[b] += 1;
        let mut left = pa;
        for _ in 0..diamonds[i] {
            // Diamond: ends e0, e1; middles m0, m1.
            let base = fresh(4);
            let (e0, m0, m1, e1) = (base, base + 1, base + 2, base + 3);
            edges.extend([(e0, m0), (e0, m1), (m0, m1), (m0, e1), (m1, e1), (left, e0)]);
            left = e1;
        }
        edges.push((left, pb));
    }
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in &edges {
        if a == b || !seen.insert((a.min(b), a.max(b))) {
            return None;
        }
    }
    Graph::from_edges(next, edges).ok()
}

/// Diamonds `D_0 .. D_{k-1}` in a ring, each joined to the next by one edge.
pub fn ring_of_diamonds(k: usize) -> Graph {
    assert!(k >= 2);
    let mut edges = Vec::new();
    for i in 0..k {
        let b = 4 * i;
        edges.extend([
            (b, b + 1),
            (b, b + 2),
            (b + 1, b + 2),
            (b + 1, b + 3),
            (b + 2, b + 3),
        ]);
        edges.push((b + 3, (4 * (i + 1)) % (4 * k)));
    }
    Graph::from_edges(4 * k, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_are_as_advertised() {
        assert_eq!(petersen().is_regular(), Some(3));
        assert_eq!(prism().is_regular(), Some(3));
        assert_eq!(complete_bipartite(3, 3).is_regular(), Some(3));
        assert_eq!(double_star().edge_count(), 5);
        assert_eq!(path(4).edge_count(), 3);
    }

    #[test]
    fn truncated_theta_is_the_prism() {
        let g = expand(&Multigraph::theta(), &[true, true], &[0, 0, 0]).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.is_cubic());
        assert!(g.is_claw_free());
    }

    #[test]
    fn untruncated_theta_is_not_simple() {
        assert!(expand(&Multigraph::theta(), &[false, false], &[0, 0, 0]).is_none());
    }

    #[test]
    fn diamond_constructions_are_cubic_claw_free() {
        let g = expand(
            &Multigraph::from_graph(&complete(4)),
            &[false; 4],
            &[1, 0, 0, 0, 0, 0],
        )
        .unwrap();
        assert_eq!(g.n(), 8);
        assert!(g.is_cubic() && g.is_claw_free() && g.is_connected());
        for k in 2..4 {
            let r = ring_of_diamonds(k);
            assert!(r.is_cubic() && r.is_claw_free() && r.is_connected());
        }
        let t = expand(&Multigraph::doubled_square(), &[true; 4], &[0; 6]).unwrap();
        assert_eq!(t.n(), 12);
        assert!(t.is_cubic() && t.is_claw_free());
    }
}
