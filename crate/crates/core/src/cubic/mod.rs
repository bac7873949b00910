//! The refined construction on cubic graphs: couple pairs of matching edges,
//! then fix the endpoints of "triples" around chosen centers, and certify the
//! resulting exact `E|B|` against the accounting that motivates it.
//!
//! Throughout, `R0` is the set of unmatched vertices seeing both ends of one
//! matching edge (always dominated) and `R` is the rest of the unmatched set.

mod certificate;
mod pairs;
mod triples;

use thiserror::Error;

use crate::dyadic::Dyadic;
use crate::exact::{is_maximal_matching, Matching};
use crate::graph::{Graph, VertexSet};
use crate::selection::{
    derandomize_conditional, expectation_report, Group, SelectionError, SelectionScheme,
};
pub use certificate::{
    cubic_certificate, CertificateCheck, CertificateViolation, CubicCertificate,
};
pub use pairs::CouplablePair;
pub use triples::{
    derandomize_triples, order10_shortcut, DerandomizedTriple, TripleCase, TripleRun, TripleTrace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph has a vertex of degree above 3")]
    NotSubcubic,
    #[error("matching is not maximal")]
    NotMaximal,
    #[error("graph is not connected")]
    NotConnected,
    #[error(
        "centre {center}: residue vertex {vertex} does not see three independent fair choices"
    )]
    PropertyThreeViolation { center: usize, vertex: usize },
    #[error(transparent)]
    Selection(#[from] SelectionError),
}

/// Maximal disjoint collection of couplable pairs, greedy in lexicographic
/// order of edge indices.
pub fn find_coupled_pairs(g: &Graph, m: &Matching) -> Result<Vec<CouplablePair>, CubicError> {
    if !g.is_cubic() {
        return Err(CubicError::NotCubic);
    }
    find_coupled_pairs_subcubic(g, m)
}

/// As [`find_coupled_pairs`], accepting any graph of maximum degree ≤ 3.
pub fn find_coupled_pairs_subcubic(
    g: &Graph,
    m: &Matching,
) -> Result<Vec<CouplablePair>, CubicError> {
    if g.max_degree() > 3 {
        return Err(CubicError::NotSubcubic);
    }
    if !is_maximal_matching(g, m) {
        return Err(CubicError::NotMaximal);
    }
    Ok(pairs::greedy_pairs(g, m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassification {
    pub r0: VertexSet,
    pub r: VertexSet,
    pub r1: VertexSet,
    pub r2: VertexSet,
    pub r3: VertexSet,
    /// `R ∖ (R1 ∪ R2 ∪ R3)`: the initial pool of triple centres.
    pub r_first: VertexSet,
    /// Endpoints of coupled edges.
    pub s_paired: VertexSet,
    /// Endpoints of uncoupled edges holding a neighbor of `R0 ∪ R2`.
    pub s_paired_prime: VertexSet,
    pub p: usize,
}

impl ResidueClassification {
    pub fn counts(&self) -> ResidueCounts {
        ResidueCounts {
            r: self.r.len(),
            r0: self.r0.len(),
            r1: self.r1.len(),
            r2: self.r2.len(),
            r3: self.r3.len(),
            r_first: self.r_first.len(),
            p: self.p,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ResidueCounts {
    pub r: usize,
    pub r0: usize,
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub r_first: usize,
    pub p: usize,
}

impl ResidueCounts {
    /// `2 r2 + r1 ≤ 8p`: at most `8p` edges leave the coupled edges.
    pub fn paired_degree_holds(&self) -> bool {
        2 * self.r2 + self.r1 <= 8 * self.p
    }

    pub fn r3_holds(&self) -> bool {
        self.r3 <= 12 * self.r0 + 6 * self.r2
    }

    /// `r_first ≥ r − 13 r0 − 28 p`.
    pub fn r_first_holds(&self) -> bool {
        self.r_first + 13 * self.r0 + 28 * self.p >= self.r
    }
}

pub fn classify_residue(g: &Graph, m: &Matching, pairs: &[CouplablePair]) -> ResidueClassification {
    let n = g.n();
    let r0 = pairs::forced_residue(g, m);
    let r = m.unmatched().difference(&r0);
    let s_paired = VertexSet::from_vertices(n, pairs.iter().flat_map(|p| p.vertices()));
    let mut r1 = VertexSet::new(n);
    let mut r2 = VertexSet::new(n);
    for w in &r {
        match g.neighbors(w).intersection_len(&s_paired) {
            0 => {}
            1 => {
                r1.insert(w);
            }
            _ => {
                r2.insert(w);
            }
        }
    }
    let mut s_paired_prime = VertexSet::new(n);
    for w in &r0.union(&r2) {
        for x in g.neighbors(w) {
            if let Some(partner) = m.partner(x) {
                if !s_paired.contains(x) {
                    s_paired_prime.insert(x);
                    s_paired_prime.insert(partner);
                }
            }
        }
    }
    let mut r3 = VertexSet::new(n);
    for w in &r.difference(&r1).difference(&r2) {
        if g.neighbors(w).intersects(&s_paired_prime) {
            r3.insert(w);
        }
    }
    let r_first = r.difference(&r1).difference(&r2).difference(&r3);
    let class = ResidueClassification {
        r0,
        r,
        r1,
        r2,
        r3,
        r_first,
        s_paired,
        s_paired_prime,
        p: pairs.len(),
    };
    let c = class.counts();
    assert!(c.paired_degree_holds(), "2·r2 + r1 > 8p: {c:?}");
    assert!(
        class.s_paired_prime.len() <= 4 * c.r0 + 2 * c.r2,
        "|S'| > 4·r0 + 2·r2: {c:?}"
    );
    assert!(c.r3_holds(), "r3 > 12·r0 + 6·r2: {c:?}");
    assert!(c.r_first_holds(), "r_first < r − 13·r0 − 28p: {c:?}");
    class
}

/// Coupled pairs first, then fixed triples, then a singleton for every other
/// edge in edge order.
pub(crate) fn assemble_scheme(
    m: &Matching,
    pairs: &[CouplablePair],
    triples: &[DerandomizedTriple],
) -> SelectionScheme {
    let mut grouped = vec![false; m.len()];
    let mut groups = Vec::new();
    for p in pairs {
        let (outcome_a, outcome_b) = p.outcomes();
        grouped[p.edges[0]] = true;
        grouped[p.edges[1]] = true;
        groups.push(Group::CoupledPair {
            edges: p.edges,
            outcome_a,
            outcome_b,
        });
    }
    for t in triples {
        for &e in &t.edges {
            grouped[e] = true;
        }
        groups.push(Group::FixedTriple {
            edges: t.edges,
            chosen: t.chosen,
        });
    }
    groups.extend(
        (0..m.len())
            .filter(|&e| !grouped[e])
            .map(|edge| Group::Singleton { edge }),
    );
    SelectionScheme::new(m.clone(), groups).expect("pairs and triples are disjoint")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicOptions {
    /// Test each triple's fixed endpoints for domination on their own.
    pub shortcut: bool,
}

impl Default for CubicOptions {
    fn default() -> Self {
        CubicOptions { shortcut: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicScheme {
    pub matching: Matching,
    pub scheme: SelectionScheme,
    pub pairs: Vec<CouplablePair>,
    pub classification: ResidueClassification,
    pub run: TripleRun,
}

impl CubicScheme {
    pub fn t(&self) -> usize {
        self.run.traces.len()
    }

    /// A three-vertex dominating set found by the shortcut, if any.
    pub fn shortcut(&self) -> Option<&VertexSet> {
        self.run.shortcut.as_ref()
    }
}

/// Runs the whole construction on a connected cubic graph.
pub fn build_cubic_scheme(
    g: &Graph,
    m: &Matching,
    options: CubicOptions,
) -> Result<CubicScheme, CubicError> {
    if !g.is_cubic() {
        return Err(CubicError::NotCubic);
    }
    if !g.is_connected() {
        return Err(CubicError::NotConnected);
    }
    let pairs = find_coupled_pairs(g, m)?;
    let classification = classify_residue(g, m, &pairs);
    let run = derandomize_triples(g, m, &pairs, &classification, options)?;
    let scheme = assemble_scheme(m, &pairs, &run.triples);
    Ok(CubicScheme {
        matching: m.clone(),
        scheme,
        pairs,
        classification,
        run,
    })
}

/// Dominating set from the construction: per component, the shortcut set if
/// one was found and is smaller, otherwise the conditional-expectation
/// derandomization of the final scheme. Each component's part has at most
/// `⌊|M| + E|B|⌋` vertices.
pub fn cubic_dominating_set(
    g: &Graph,
    m: &Matching,
    options: CubicOptions,
) -> Result<VertexSet, CubicError> {
    if !g.is_cubic() {
        return Err(CubicError::NotCubic);
    }
    if !is_maximal_matching(g, m) {
        return Err(CubicError::NotMaximal);
    }
    let mut d = VertexSet::new(g.n());
    for comp in g.components() {
        let (sub, labels) = g.induced_subgraph(&comp);
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in labels.iter().enumerate() {
            local[v] = i;
        }
        let edges = m
            .edges()
            .iter()
            .filter(|e| local[e.u] != usize::MAX)
            .map(|e| crate::graph::Edge::new(local[e.u], local[e.v]));
        let sub_m = Matching::new(&sub, edges).expect("restriction of a matching");
        let built = build_cubic_scheme(&sub, &sub_m, options)?;
        let expected = expectation_report(&sub, &built.scheme)?.total;
        let limit = (&Dyadic::from_int(sub_m.len()) + &expected).floor();
        let derand = derandomize_conditional(&sub, &built.scheme)?.dominating_set();
        let part = match built.shortcut() {
            Some(s) if s.len() < derand.len() => s.clone(),
            _ => derand,
        };
        assert!(sub.dominates(&part));
        assert!(
            num_bigint::BigInt::from(part.len()) <= limit,
            "{} > ⌊|M| + E|B|⌋ = {limit}",
            part.len()
        );
        for v in &part {
            d.insert(labels[v]);
        }
    }
    debug_assert!(g.dominates(&d));
    Ok(d)
}
