//! Simple undirected graphs over `0..n` and the structural predicates the
//! solvers and constructions rely on.

mod bitset;
pub mod families;
pub mod generate;
pub mod graph6;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use bitset::VertexSet;
pub use generate::{random_regular, random_regular_with_limit, GenerateError};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("graph has no edges")]
    EmptyEdgeSet,
}

/// An edge in canonical orientation `u < v`. The derived ordering is the
/// lexicographic order on `(u, v)` used for every tie-break in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            debug_assert_eq!(x, self.v);
            self.u
        }
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple undirected graph with one neighbor bit vector per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            rows: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if g.rows[a].contains(b) {
                return Err(GraphError::DuplicateEdge(Edge::new(a, b)));
            }
            g.rows[a].insert(b);
            g.rows[b].insert(a);
            g.edge_count += 1;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// All edges in canonical (lexicographic) order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood of `v` as a mask; requires `n <= 64`.
    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v].to_mask()
    }

    /// Union of closed neighborhoods of `set`.
    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set {
            out.union_with(&self.rows[v]);
        }
        out
    }

    /// `Some(d)` iff every vertex has degree `d`. The null graph reports `None`.
    pub fn is_regular(&self) -> Option<usize> {
        if self.n() == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular() == Some(3)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each as an ascending vertex list, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in &self.rows[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A vertex whose neighborhood contains three pairwise non-adjacent
    /// vertices, together with those three, if one exists.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        for center in 0..self.n() {
            let nbrs = self.rows[center].to_vec();
            for (i, &a) in nbrs.iter().enumerate() {
                for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nbrs[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return Some((center, [a, b, c]));
                        }
                    }
                }
            }
        }
        None
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Line graph; vertex `i` of the result is `edges()[i]` of `self`.
    pub fn line_graph(&self) -> Result<(Graph, Vec<Edge>), GraphError> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        let mut pairs = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            for (j, f) in edges.iter().enumerate().skip(i + 1) {
                if e.shares_endpoint(f) {
                    pairs.push((i, j));
                }
            }
        }
        let lg = Graph::from_edges(edges.len(), pairs).expect("line graph edges are simple");
        Ok((lg, edges))
    }

    /// Subgraph induced by `vertices` (ascending), relabeled to
    /// `0..vertices.len()` in that order. Returns the graph and the map from
    /// new labels to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.rows[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple");
        (g, vertices.to_vec())
    }

    /// Every vertex outside `set` has a neighbor in `set`.
    pub fn dominates(&self, set: &VertexSet) -> bool {
        self.closed_neighborhood_of(set).len() == self.n()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field(
                "edges",
                &self.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(Edge::new(0, 1)))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn degree_sum_matches_edge_count() {
        let g = petersen();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.edges().len(), 15);
    }

    #[test]
    fn regularity_and_connectivity() {
        let fig1 = double_star();
        assert_eq!(fig1.is_regular(), None);
        assert_eq!(fig1.degrees(), vec![3, 3, 1, 1, 1, 1]);
        let k4 = complete(4);
        assert_eq!(k4.is_regular(), Some(3));
        assert!(k4.is_connected());
        let two = disjoint_union(&cycle(3), &cycle(3));
        assert_eq!(two.is_regular(), Some(2));
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn claw_detection() {
        assert!(!star(3).is_claw_free());
        assert!(prism().is_claw_free());
        assert!(!petersen().is_claw_free());
        assert!(complete(4).is_claw_free());
    }

    #[test]
    fn line_graphs() {
        let (l, labels) = star(3).line_graph().unwrap();
        assert_eq!(l, complete(3));
        assert_eq!(
            labels,
            vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(0, 3)]
        );
        let (l, _) = cycle(4).line_graph().unwrap();
        assert_eq!(l.is_regular(), Some(2));
        assert!(l.is_connected());
        assert_eq!(l.n(), 4);
        let (l, _) = complete(2).line_graph().unwrap();
        assert_eq!(l.n(), 1);
        assert_eq!(l.edge_count(), 0);
        assert_eq!(
            Graph::empty(3).line_graph().unwrap_err(),
            GraphError::EmptyEdgeSet
        );
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = disjoint_union(&complete(4), &cycle(3));
        let (h, map) = g.induced_subgraph(&[4, 5, 6]);
        assert_eq!(h, cycle(3));
        assert_eq!(map, vec![4, 5, 6]);
    }
}
