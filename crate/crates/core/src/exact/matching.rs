use thiserror::Error;

use crate::graph::{Edge, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("{0} is not an edge of the host graph")]
    NotAnEdge(Edge),
    #[error("edges {0} and {1} share an endpoint")]
    SharedEndpoint(Edge, Edge),
}

/// Pairwise-disjoint edges of a host graph, kept in canonical order.
///
/// The host is not borrowed; every operation that needs it takes the graph
/// alongside the matching, and `Matching::new` is the only constructor, so a
/// matching always belongs to the graph it was validated against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
    covered: VertexSet,
    edge_of: Vec<Option<usize>>,
}

impl Matching {
    pub fn new<I: IntoIterator<Item = Edge>>(
        g: &Graph,
        edges: I,
    ) -> Result<Matching, MatchingError> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        let mut edge_of = vec![None; g.n()];
        let mut covered = VertexSet::new(g.n());
        for (i, e) in edges.iter().enumerate() {
            if !g.has_edge(e.u, e.v) {
                return Err(MatchingError::NotAnEdge(*e));
            }
            for x in [e.u, e.v] {
                if let Some(j) = edge_of[x] {
                    return Err(MatchingError::SharedEndpoint(edges[j], *e));
                }
                edge_of[x] = Some(i);
                covered.insert(x);
            }
        }
        Ok(Matching {
            edges,
            covered,
            edge_of,
        })
    }

    pub fn empty(g: &Graph) -> Matching {
        Matching::new(g, []).unwrap()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `V(M)`.
    pub fn covered(&self) -> &VertexSet {
        &self.covered
    }

    pub fn unmatched(&self) -> VertexSet {
        self.covered.complement()
    }

    /// Index (in canonical order) of the edge covering `v`.
    pub fn edge_index_of(&self, v: usize) -> Option<usize> {
        self.edge_of.get(v).copied().flatten()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edge_index_of(v).map(|i| self.edges[i].other(v))
    }

    /// Universe size of the host graph.
    pub fn host_order(&self) -> usize {
        self.covered.universe()
    }

    /// Does `d` contain exactly one endpoint of every edge and nothing else?
    pub fn is_transversal(&self, d: &VertexSet) -> bool {
        d.len() == self.len()
            && self
                .edges
                .iter()
                .all(|e| d.contains(e.u) != d.contains(e.v))
    }
}

/// No edge of `g` has both endpoints outside `V(m)`.
pub fn is_maximal_matching(g: &Graph, m: &Matching) -> bool {
    let free = m.unmatched();
    free.iter().all(|v| !g.neighbors(v).intersects(&free))
}

/// Canonical-order greedy maximal matching.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    let mut used = VertexSet::new(g.n());
    let mut chosen = Vec::new();
    for e in g.edges() {
        if !used.contains(e.u) && !used.contains(e.v) {
            used.insert(e.u);
            used.insert(e.v);
            chosen.push(e);
        }
    }
    Matching::new(g, chosen).expect("greedy picks disjoint edges")
}
