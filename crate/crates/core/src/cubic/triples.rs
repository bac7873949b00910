use super::{assemble_scheme, CouplablePair, CubicError, CubicOptions, ResidueClassification};
use crate::dyadic::Dyadic;
use crate::exact::Matching;
use crate::graph::{Graph, VertexSet};
use crate::selection::{expectation_report, SelectionScheme};

/// Three matching edges whose endpoints next to `center` always enter `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerandomizedTriple {
    pub center: usize,
    pub edges: [usize; 3],
    /// `chosen[i]` is the neighbor of `center` on `edges[i]`.
    pub chosen: [usize; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TripleCase {
    /// Another residue vertex has all three neighbors on the triple.
    Case1,
    /// The centre is the only such vertex.
    Case2,
    /// The fixed endpoints dominate the whole graph.
    Order10Shortcut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleTrace {
    pub triple: DerandomizedTriple,
    /// Endpoints of other matching edges that share a residue neighbor with
    /// the triple.
    pub s_tau: VertexSet,
    /// Pool vertices dropped because they see the triple or `s_tau`.
    pub removed: VertexSet,
    pub case: TripleCase,
    /// Exact drop in `E|B|` caused by fixing this triple.
    pub credit: Dyadic,
    /// Whether some other residue vertex has all three neighbors on the triple.
    pub shared_center: bool,
}

impl TripleTrace {
    pub fn s_tau_limit(&self) -> usize {
        if self.case == TripleCase::Case1 {
            12
        } else {
            18
        }
    }

    pub fn removal_limit(&self) -> usize {
        if self.case == TripleCase::Case1 {
            24
        } else {
            34
        }
    }

    pub fn within_bounds(&self) -> bool {
        self.s_tau.len() <= self.s_tau_limit()
            && self.removed.len() <= self.removal_limit()
            && self.credit >= Dyadic::half_pow(3)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TripleRun {
    pub triples: Vec<DerandomizedTriple>,
    pub traces: Vec<TripleTrace>,
    /// The first dominating set produced by the shortcut, if any.
    pub shortcut: Option<VertexSet>,
}

/// `N(center)` when it dominates `g`. Only offered when `center` is unmatched
/// with its three neighbors on distinct matching edges, `|M| ≥ 3` and `g` is
/// connected, so the set never beats `|M|` by accident.
pub fn order10_shortcut(g: &Graph, m: &Matching, center: usize) -> Option<VertexSet> {
    if m.len() < 3 || m.covered().contains(center) || g.degree(center) != 3 || !g.is_connected() {
        return None;
    }
    let nbrs = g.neighbors(center);
    let mut edges: Vec<usize> = nbrs.iter().filter_map(|w| m.edge_index_of(w)).collect();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != 3 {
        return None;
    }
    g.dominates(nbrs).then(|| nbrs.clone())
}

fn triple_for(m: &Matching, g: &Graph, center: usize) -> DerandomizedTriple {
    let chosen: Vec<usize> = g.neighbors(center).to_vec();
    let chosen: [usize; 3] = chosen.try_into().expect("cubic centre");
    let edges = chosen.map(|u| {
        m.edge_index_of(u)
            .expect("neighbors of unmatched vertices are matched")
    });
    DerandomizedTriple {
        center,
        edges,
        chosen,
    }
}

/// Residue vertices whose three matched neighbors must be independent fair
/// coins just before fixing a triple: they must sit in three different
/// random groups.
fn check_independence(
    g: &Graph,
    scheme: &SelectionScheme,
    center: usize,
    w: usize,
) -> Result<(), CubicError> {
    let m = scheme.matching();
    let mut groups: Vec<usize> = g
        .neighbors(w)
        .iter()
        .map(|x| scheme.group_of_edge(m.edge_index_of(x).expect("residue neighbors are matched")))
        .collect();
    let random = groups.iter().all(|&gi| scheme.groups()[gi].is_random());
    groups.sort_unstable();
    groups.dedup();
    if !random || groups.len() != 3 {
        return Err(CubicError::PropertyThreeViolation { center, vertex: w });
    }
    Ok(())
}

/// Fixes triples one at a time around the lowest-index vertex still in the
/// pool, dropping from the pool every vertex that sees the triple or its
/// `S(τ)`, until the pool is empty.
pub fn derandomize_triples(
    g: &Graph,
    m: &Matching,
    pairs: &[CouplablePair],
    class: &ResidueClassification,
    options: CubicOptions,
) -> Result<TripleRun, CubicError> {
    if !g.is_cubic() {
        return Err(CubicError::NotCubic);
    }
    let mut run = TripleRun::default();
    let mut pool = class.r_first.clone();
    let mut scheme = assemble_scheme(m, pairs, &run.triples);
    let mut expected = expectation_report(g, &scheme)?.total;
    while let Some(center) = pool.first() {
        let triple = triple_for(m, g, center);
        let v_tau = VertexSet::from_vertices(
            g.n(),
            triple
                .edges
                .iter()
                .flat_map(|&e| [m.edge(e).u, m.edge(e).v]),
        );

        let mut s_tau = VertexSet::new(g.n());
        let mut shared_center = false;
        for w in &class.r {
            let seen = g.neighbors(w).intersection_len(&v_tau);
            if seen == 0 {
                continue;
            }
            check_independence(g, &scheme, center, w)?;
            shared_center |= w != center && seen == 3;
            for x in g.neighbors(w).iter().filter(|&x| !v_tau.contains(x)) {
                let e = m.edge(m.edge_index_of(x).expect("residue neighbors are matched"));
                s_tau.insert(e.u);
                s_tau.insert(e.v);
            }
        }
        let reach = v_tau.union(&s_tau);
        let removed = VertexSet::from_vertices(
            g.n(),
            pool.iter().filter(|&w| g.neighbors(w).intersects(&reach)),
        );
        debug_assert!(removed.contains(center));
        pool.difference_with(&removed);

        let shortcut = if options.shortcut {
            order10_shortcut(g, m, center)
        } else {
            None
        };
        let case = match (&shortcut, shared_center) {
            (Some(_), _) => TripleCase::Order10Shortcut,
            (None, true) => TripleCase::Case1,
            (None, false) => TripleCase::Case2,
        };
        if run.shortcut.is_none() {
            run.shortcut = shortcut;
        }

        run.triples.push(triple.clone());
        scheme = assemble_scheme(m, pairs, &run.triples);
        let after = expectation_report(g, &scheme)?.total;
        let credit = &expected - &after;
        expected = after;
        run.traces.push(TripleTrace {
            triple,
            s_tau,
            removed,
            case,
            credit,
            shared_center,
        });
    }
    Ok(run)
}
