//! Exact domination, edge-domination and independent-domination numbers by
//! branch-and-bound, plus the predicates every construction is checked
//! against.
//!
//! Witnesses are canonical: among all optimal sets the solver reports the
//! lexicographically smallest (as a sorted vertex list, or as a sorted list
//! of canonical edges).

mod matching;
mod search;

use thiserror::Error;

use crate::graph::{Edge, Graph, VertexSet};
pub use matching::{greedy_maximal_matching, is_maximal_matching, Matching, MatchingError};
use search::Masks;

pub const DEFAULT_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, above the exact-solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("solver cap must lie in 1..=64, got {0}")]
    InvalidCap(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InequalityError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("matching is not maximal")]
    NotMaximal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.dominates(d)
}

/// Exhaustive solvers over graphs of at most `cap` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSolver {
    cap: usize,
}

impl Default for ExactSolver {
    fn default() -> Self {
        ExactSolver { cap: DEFAULT_CAP }
    }
}

impl ExactSolver {
    pub fn new(cap: usize) -> Result<ExactSolver, SolverError> {
        if cap == 0 || cap > 64 {
            return Err(SolverError::InvalidCap(cap));
        }
        Ok(ExactSolver { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn masks(&self, g: &Graph) -> Result<Masks, SolverError> {
        if g.n() > self.cap {
            return Err(SolverError::CapExceeded {
                n: g.n(),
                cap: self.cap,
            });
        }
        Ok(Masks::new((0..g.n()).map(|v| g.neighbor_mask(v)).collect()))
    }

    /// γ(g) together with the lexicographically smallest minimum dominating set.
    pub fn domination_number(&self, g: &Graph) -> Result<SolveResult<VertexSet>, SolverError> {
        let masks = self.masks(g)?;
        let (set, nodes) = search::min_dominating(&masks, false);
        let witness = VertexSet::from_mask(g.n(), set);
        debug_assert!(is_dominating(g, &witness));
        Ok(SolveResult {
            value: witness.len(),
            witness,
            nodes_explored: nodes,
        })
    }

    /// i(g): the minimum size of a maximal independent set.
    pub fn independent_domination_number(
        &self,
        g: &Graph,
    ) -> Result<SolveResult<VertexSet>, SolverError> {
        let masks = self.masks(g)?;
        let (set, nodes) = search::min_dominating(&masks, true);
        let witness = VertexSet::from_mask(g.n(), set);
        Ok(SolveResult {
            value: witness.len(),
            witness,
            nodes_explored: nodes,
        })
    }

    /// γ_e(g) together with the lexicographically smallest minimum maximal matching.
    pub fn edge_domination_number(&self, g: &Graph) -> Result<SolveResult<Matching>, SolverError> {
        let masks = self.masks(g)?;
        let edges = g.edges();
        if edges.is_empty() {
            return Err(SolverError::EmptyEdgeSet);
        }
        let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e.u, e.v)).collect();
        let (chosen, nodes) = search::min_maximal_matching(&masks, &pairs);
        let witness = Matching::new(g, chosen.into_iter().map(|i| edges[i]))
            .expect("solver returns a matching");
        debug_assert!(is_maximal_matching(g, &witness));
        Ok(SolveResult {
            value: witness.len(),
            witness,
            nodes_explored: nodes,
        })
    }

    /// Computes γ_e(g), γ(L(g)) and i(L(g)); they coincide on every graph.
    pub fn cross_check_line_graph(&self, g: &Graph) -> Result<LineGraphCheck, SolverError> {
        let edge_domination = self.edge_domination_number(g)?.value;
        let (line, _) = g.line_graph().map_err(|_| SolverError::EmptyEdgeSet)?;
        let line_domination = self.domination_number(&line)?.value;
        let line_independent_domination = self.independent_domination_number(&line)?.value;
        Ok(LineGraphCheck {
            edge_domination,
            line_domination,
            line_independent_domination,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineGraphCheck {
    pub edge_domination: usize,
    pub line_domination: usize,
    pub line_independent_domination: usize,
}

impl LineGraphCheck {
    pub fn holds(&self) -> bool {
        self.edge_domination == self.line_domination
            && self.line_domination == self.line_independent_domination
    }
}

/// Both sides of `Δ(n − 2|M|) ≤ 2(Δ − 1)|M|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct E1Check {
    pub delta: usize,
    pub lhs: i64,
    pub rhs: i64,
}

impl E1Check {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn slack(&self) -> i64 {
        self.rhs - self.lhs
    }
}

/// Counts edges between matched and unmatched vertices from both sides: every
/// unmatched vertex sends Δ of them, every matched vertex at most Δ − 1.
pub fn check_inequality_e1(g: &Graph, m: &Matching) -> Result<E1Check, InequalityError> {
    let delta = g.is_regular().ok_or(InequalityError::NotRegular)?;
    if !is_maximal_matching(g, m) {
        return Err(InequalityError::NotMaximal);
    }
    let n = g.n() as i64;
    let size = m.len() as i64;
    let d = delta as i64;
    let check = E1Check {
        delta,
        lhs: d * (n - 2 * size),
        rhs: 2 * (d - 1) * size,
    };
    assert!(
        check.holds(),
        "inequality (n − 2|M|)Δ ≤ 2(Δ−1)|M| failed on a maximal matching"
    );
    Ok(check)
}

/// Convenience wrappers over the default-capped solver.
pub fn domination_number(g: &Graph) -> Result<SolveResult<VertexSet>, SolverError> {
    ExactSolver::default().domination_number(g)
}

pub fn edge_domination_number(g: &Graph) -> Result<SolveResult<Matching>, SolverError> {
    ExactSolver::default().edge_domination_number(g)
}

pub fn independent_domination_number(g: &Graph) -> Result<SolveResult<VertexSet>, SolverError> {
    ExactSolver::default().independent_domination_number(g)
}

pub fn cross_check_line_graph(g: &Graph) -> Result<LineGraphCheck, SolverError> {
    ExactSolver::default().cross_check_line_graph(g)
}

/// Edge list of a matching as plain pairs, for reports.
pub fn matching_pairs(m: &Matching) -> Vec<[usize; 2]> {
    m.edges().iter().map(|&Edge { u, v }| [u, v]).collect()
}
