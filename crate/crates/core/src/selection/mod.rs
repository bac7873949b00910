//! Random transversals of a maximal matching and exact accounting for the
//! set `B` of unmatched vertices they leave undominated.
//!
//! `D` picks one endpoint per matching edge; `B` is every unmatched vertex
//! with no neighbor in `D`. `D ∪ B` always dominates, so `E|B|` bounds the
//! excess of `γ` over `|M|`.

mod scheme;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dyadic::Dyadic;
use crate::exact::{is_maximal_matching, Matching};
use crate::graph::{Graph, VertexSet};
pub use scheme::{sample, uniform_scheme, Group, SelectionScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelectionError {
    #[error("matching is not maximal")]
    NotMaximal,
    #[error("vertex {0} is covered by the matching")]
    VertexMatched(usize),
    #[error("group refers to edge {0}, which is not in the matching")]
    EdgeOutOfRange(usize),
    #[error("edge {0} appears in two groups")]
    EdgeInTwoGroups(usize),
    #[error("edge {0} is in no group")]
    EdgeUngrouped(usize),
    #[error("group {0} does not pick exactly one endpoint per edge")]
    MalformedGroup(usize),
    #[error("scheme lives on {scheme} vertices but the graph has {graph}")]
    HostMismatch { scheme: usize, graph: usize },
}

fn check_host(g: &Graph, scheme: &SelectionScheme) -> Result<(), SelectionError> {
    let order = scheme.matching().host_order();
    if order != g.n() {
        return Err(SelectionError::HostMismatch {
            scheme: order,
            graph: g.n(),
        });
    }
    Ok(())
}

/// Unmatched vertices with no neighbor in `d`.
pub fn uncovered_set(g: &Graph, m: &Matching, d: &VertexSet) -> VertexSet {
    let mut b = m.unmatched();
    for u in b.to_vec() {
        if g.neighbors(u).intersects(d) {
            b.remove(u);
        }
    }
    debug_assert!(g.dominates(&d.union(&b)));
    b
}

/// Exact `P[u ∈ B]`. Groups are independent, so the probability that no
/// neighbor of `u` is selected factors over the groups holding them.
pub fn uncovered_probability(
    g: &Graph,
    scheme: &SelectionScheme,
    u: usize,
) -> Result<Dyadic, SelectionError> {
    check_host(g, scheme)?;
    let m = scheme.matching();
    if m.covered().contains(u) {
        return Err(SelectionError::VertexMatched(u));
    }
    let nbrs = g.neighbors(u);
    let mut groups: Vec<usize> = nbrs
        .iter()
        .filter_map(|w| m.edge_index_of(w))
        .map(|e| scheme.group_of_edge(e))
        .collect();
    groups.sort_unstable();
    groups.dedup();
    let mut p = Dyadic::one();
    for gi in groups {
        let miss: Dyadic = scheme.groups()[gi]
            .outcomes(m)
            .into_iter()
            .filter(|(_, chosen)| chosen.iter().all(|&x| !nbrs.contains(x)))
            .map(|(k, _)| Dyadic::half_pow(k))
            .sum();
        p = &p * &miss;
        if p.is_zero() {
            break;
        }
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectationReport {
    pub per_vertex: BTreeMap<usize, Dyadic>,
    pub total: Dyadic,
    /// `(n − 2|M|) / 2^Δ` when the graph is Δ-regular.
    pub bound_rhs: Option<Dyadic>,
}

/// `E|B|` as the sum of `P[u ∈ B]` over unmatched `u`. On a regular graph
/// with an all-singleton scheme the total is asserted against `bound_rhs`.
pub fn expectation_report(
    g: &Graph,
    scheme: &SelectionScheme,
) -> Result<ExpectationReport, SelectionError> {
    check_host(g, scheme)?;
    let m = scheme.matching();
    if !is_maximal_matching(g, m) {
        return Err(SelectionError::NotMaximal);
    }
    let mut per_vertex = BTreeMap::new();
    for u in &m.unmatched() {
        per_vertex.insert(u, uncovered_probability(g, scheme, u)?);
    }
    let total: Dyadic = per_vertex.values().sum();
    let bound_rhs = g.is_regular().filter(|&d| d > 0).map(|delta| {
        let unmatched = (g.n() - 2 * m.len()) as i64;
        Dyadic::new(unmatched, delta as u32)
    });
    if let Some(rhs) = &bound_rhs {
        if scheme
            .groups()
            .iter()
            .all(|gr| matches!(gr, Group::Singleton { .. }))
        {
            assert!(
                total <= *rhs,
                "E|B| = {total} exceeds (n − 2|M|)/2^Δ = {rhs}"
            );
        }
    }
    Ok(ExpectationReport {
        per_vertex,
        total,
        bound_rhs,
    })
}

/// `1 + 2(Δ − 1) / (Δ 2^Δ)`.
pub fn transversal_bound(delta: u32) -> BigRational {
    assert!(delta >= 1, "degree must be positive");
    let d = BigInt::from(delta);
    let correction = BigRational::new(2 * (&d - 1), &d * (BigInt::from(1) << delta));
    BigRational::from_integer(1.into()) + correction
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derandomized {
    pub transversal: VertexSet,
    pub uncovered: VertexSet,
    /// Conditional `E|B|` before any fixing, then after each random group.
    pub trajectory: Vec<Dyadic>,
}

impl Derandomized {
    pub fn dominating_set(&self) -> VertexSet {
        self.transversal.union(&self.uncovered)
    }
}

/// Method of conditional expectations: fixes the random groups in list
/// order, each to the outcome with the smaller conditional `E|B|` (first
/// outcome on ties).
pub fn derandomize_conditional(
    g: &Graph,
    scheme: &SelectionScheme,
) -> Result<Derandomized, SelectionError> {
    let mut current = scheme.clone();
    let mut expected = expectation_report(g, &current)?.total;
    let mut trajectory = vec![expected.clone()];
    for gi in 0..current.groups().len() {
        if !current.groups()[gi].is_random() {
            continue;
        }
        let mut best: Option<(Dyadic, SelectionScheme)> = None;
        for outcome in 0..2 {
            let candidate = current.pinned(gi, outcome);
            let e = expectation_report(g, &candidate)?.total;
            if best.as_ref().is_none_or(|(b, _)| e < *b) {
                best = Some((e, candidate));
            }
        }
        let (e, next) = best.expect("random groups have two outcomes");
        assert!(
            e <= expected,
            "conditional expectation rose from {expected} to {e}"
        );
        expected = e;
        current = next;
        trajectory.push(expected.clone());
    }
    let transversal = sample(&current, 0);
    let uncovered = uncovered_set(g, current.matching(), &transversal);
    assert_eq!(Dyadic::from_int(uncovered.len()), expected);
    Ok(Derandomized {
        transversal,
        uncovered,
        trajectory,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarlo {
    pub trials: u64,
    pub mean: f64,
    pub std_err: f64,
    /// Smallest `|D ∪ B|` seen.
    pub best_size: usize,
}

impl MonteCarlo {
    /// Whether `expected` lies within `k` standard errors of the sample mean.
    /// A zero-variance sample must match exactly (up to rounding).
    pub fn within(&self, expected: f64, k: f64) -> bool {
        let gap = (self.mean - expected).abs();
        if self.std_err == 0.0 {
            gap <= 1e-9
        } else {
            gap <= k * self.std_err
        }
    }
}

/// Draws `trials` transversals from one ChaCha8 stream seeded with `seed`.
pub fn monte_carlo(g: &Graph, scheme: &SelectionScheme, trials: u64, seed: u64) -> MonteCarlo {
    assert!(trials > 0, "at least one trial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = scheme.matching();
    let (mut sum, mut sum_sq) = (0f64, 0f64);
    let mut best_size = usize::MAX;
    for _ in 0..trials {
        let d = scheme.sample_with(&mut rng);
        let b = uncovered_set(g, m, &d).len();
        sum += b as f64;
        sum_sq += (b * b) as f64;
        best_size = best_size.min(d.len() + b);
    }
    let t = trials as f64;
    let mean = sum / t;
    let var = if trials > 1 {
        ((sum_sq - t * mean * mean) / (t - 1.0)).max(0.0)
    } else {
        0.0
    };
    MonteCarlo {
        trials,
        mean,
        std_err: (var / t).sqrt(),
        best_size,
    }
}
