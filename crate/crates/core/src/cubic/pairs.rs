use crate::exact::Matching;
use crate::graph::{Graph, VertexSet};

/// Two matching edges `uv`, `u'v'` whose endpoint choices are coupled: `D`
/// takes `{u, v'}` or `{u', v}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplablePair {
    /// Indices into the matching's edge list, ascending.
    pub edges: [usize; 2],
    /// `[u, v, u', v']` under the stored labeling.
    pub labels: [usize; 4],
    /// Residue vertices seeing exactly `{u, u'}` or `{v, v'}`: never in `B`.
    pub x: VertexSet,
    /// Residue vertices seeing exactly `{u, v'}` or `{v, u'}`.
    pub y: VertexSet,
}

impl CouplablePair {
    pub fn outcomes(&self) -> ([usize; 2], [usize; 2]) {
        let [u, v, u2, v2] = self.labels;
        ([u, v2], [u2, v])
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.labels
    }
}

/// Unmatched vertices adjacent to both ends of some matching edge.
pub(crate) fn forced_residue(g: &Graph, m: &Matching) -> VertexSet {
    let mut r0 = VertexSet::new(g.n());
    for w in &m.unmatched() {
        if m.edges()
            .iter()
            .any(|e| g.has_edge(w, e.u) && g.has_edge(w, e.v))
        {
            r0.insert(w);
        }
    }
    r0
}

/// Splits the residue vertices meeting edges `a` and `b` in exactly two
/// vertices by whether those two are "parallel" (`{a.u, b.u}`, `{a.v, b.v}`)
/// or "crossed".
fn split(g: &Graph, m: &Matching, r: &VertexSet, a: usize, b: usize) -> (VertexSet, VertexSet) {
    let (ea, eb) = (m.edge(a), m.edge(b));
    let mut parallel = VertexSet::new(g.n());
    let mut crossed = VertexSet::new(g.n());
    for w in r {
        let hit = [ea.u, ea.v, eb.u, eb.v].map(|x| g.has_edge(w, x));
        match hit {
            [true, false, true, false] | [false, true, false, true] => parallel.insert(w),
            [true, false, false, true] | [false, true, true, false] => crossed.insert(w),
            _ => false,
        };
    }
    (parallel, crossed)
}

/// Greedy in lexicographic order of edge-index pairs. `X` and `Y` depend only
/// on the pair, so one pass yields a maximal disjoint collection.
pub(crate) fn greedy_pairs(g: &Graph, m: &Matching) -> Vec<CouplablePair> {
    let r = m.unmatched().difference(&forced_residue(g, m));
    let mut used = vec![false; m.len()];
    let mut pairs = Vec::new();
    for a in 0..m.len() {
        if used[a] {
            continue;
        }
        for b in a + 1..m.len() {
            if used[b] || used[a] {
                continue;
            }
            let (parallel, crossed) = split(g, m, &r, a, b);
            let (ea, eb) = (m.edge(a), m.edge(b));
            let pair = if parallel.len() > crossed.len() {
                CouplablePair {
                    edges: [a, b],
                    labels: [ea.u, ea.v, eb.u, eb.v],
                    x: parallel,
                    y: crossed,
                }
            } else if crossed.len() > parallel.len() {
                CouplablePair {
                    edges: [a, b],
                    labels: [ea.u, ea.v, eb.v, eb.u],
                    x: crossed,
                    y: parallel,
                }
            } else {
                continue;
            };
            used[a] = true;
            used[b] = true;
            pairs.push(pair);
        }
    }
    debug_assert!(is_maximal_collection(g, m, &pairs));
    pairs
}

/// No two edges outside `pairs` can still be coupled.
pub(crate) fn is_maximal_collection(g: &Graph, m: &Matching, pairs: &[CouplablePair]) -> bool {
    let r = m.unmatched().difference(&forced_residue(g, m));
    let mut used = vec![false; m.len()];
    for p in pairs {
        used[p.edges[0]] = true;
        used[p.edges[1]] = true;
    }
    let free: Vec<usize> = (0..m.len()).filter(|&e| !used[e]).collect();
    free.iter().enumerate().all(|(i, &a)| {
        free[i + 1..].iter().all(|&b| {
            let (p, c) = split(g, m, &r, a, b);
            p.len() == c.len()
        })
    })
}
