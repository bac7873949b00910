//! Local search for a dominating transversal of a maximal matching in a
//! cubic claw-free graph.
//!
//! Starting from any transversal `D`, every accepted move strictly shrinks
//! `B`, the unmatched vertices with no neighbor in `D`. Moves are single
//! endpoint swaps, and, when none helps, a swap along an alternating sequence
//! `v1 u1 c1 v2 u2 c2 ...` grown from a vertex of `B`.

use thiserror::Error;

use crate::exact::{is_maximal_matching, Matching};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Single { edge: usize, to: usize },
    Path { b: usize, edges: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeState {
    pub d: VertexSet,
    /// Unmatched vertices with no neighbor in `d`.
    pub b: VertexSet,
    /// Unmatched vertices with exactly one neighbor in `d`.
    pub c: VertexSet,
    pub moves: Vec<Move>,
}

impl ExchangeState {
    pub fn new(g: &Graph, m: &Matching, d: VertexSet) -> ExchangeState {
        assert!(
            m.is_transversal(&d),
            "D must hold one endpoint of every matching edge"
        );
        let (b, c) = classify(g, m, &d);
        ExchangeState {
            d,
            b,
            c,
            moves: Vec::new(),
        }
    }

    fn apply(&mut self, g: &Graph, m: &Matching, d: VertexSet, mv: Move) {
        debug_assert!(m.is_transversal(&d));
        let (b, c) = classify(g, m, &d);
        assert!(b.len() < self.b.len(), "accepted moves must shrink B");
        self.d = d;
        self.b = b;
        self.c = c;
        self.moves.push(mv);
    }
}

fn classify(g: &Graph, m: &Matching, d: &VertexSet) -> (VertexSet, VertexSet) {
    let mut b = VertexSet::new(g.n());
    let mut c = VertexSet::new(g.n());
    for u in &m.unmatched() {
        match g.neighbors(u).intersection_len(d) {
            0 => b.insert(u),
            1 => c.insert(u),
            _ => false,
        };
    }
    (b, c)
}

fn uncovered_count(g: &Graph, m: &Matching, d: &VertexSet) -> usize {
    m.unmatched()
        .iter()
        .filter(|&u| !g.neighbors(u).intersects(d))
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph has a claw centred at {0}")]
    NotClawFree(usize),
    #[error("matching is not maximal")]
    NotMaximal,
    #[error("sequence from {b} breaks at vertex {vertex}: {reason}")]
    StructureViolation {
        b: usize,
        vertex: usize,
        reason: &'static str,
    },
    #[error("path swap from {b} does not shrink B")]
    NoImprovement { b: usize },
    #[error("no move shrinks B (|B| = {})", state.b.len())]
    NoImprovingMove { state: Box<ExchangeState> },
}

fn check_input(g: &Graph, m: &Matching) -> Result<(), ExchangeError> {
    if !g.is_cubic() {
        return Err(ExchangeError::NotCubic);
    }
    if let Some((center, _)) = g.find_claw() {
        return Err(ExchangeError::NotClawFree(center));
    }
    if !is_maximal_matching(g, m) {
        return Err(ExchangeError::NotMaximal);
    }
    Ok(())
}

/// The lower endpoint of every matching edge.
pub fn initial_transversal(m: &Matching) -> VertexSet {
    VertexSet::from_vertices(m.host_order(), m.edges().iter().map(|e| e.u))
}

/// First edge, in edge order, whose endpoint swap strictly shrinks `B`.
pub fn single_swap_improvement(
    g: &Graph,
    m: &Matching,
    state: &ExchangeState,
) -> Option<(usize, usize)> {
    if state.b.is_empty() {
        return None;
    }
    let current = state.b.len();
    (0..m.len()).find_map(|i| {
        let e = m.edge(i);
        let (from, to) = if state.d.contains(e.u) {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        let mut d = state.d.clone();
        d.remove(from);
        d.insert(to);
        (uncovered_count(g, m, &d) < current).then_some((i, to))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSequence {
    pub b: usize,
    pub v_minus1: usize,
    pub u_minus1: usize,
    pub v0: usize,
    pub u0: usize,
    pub x: usize,
    /// `(v_i, u_i, c_i)` for `i = 1..=k`.
    pub steps: Vec<(usize, usize, usize)>,
    /// `(u_{k+1}, v_{k+1})`; for `k = 0` this is `(u_1, v_1)`.
    pub terminal: (usize, usize),
}

impl SigmaSequence {
    pub fn k(&self) -> usize {
        self.steps.len()
    }

    /// The `D`-side endpoints `u_1 .. u_{k+1}` the swap trades away.
    pub fn swapped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.steps.iter().map(|&(v, u, _)| (u, v)).collect();
        out.push(self.terminal);
        out
    }

    /// Re-checks every structural condition of the sequence.
    pub fn is_valid(&self, g: &Graph, m: &Matching, state: &ExchangeState) -> bool {
        let origin = [
            self.u_minus1,
            self.u0,
            self.v_minus1,
            self.v0,
            self.b,
            self.x,
        ];
        let mut seen: Vec<usize> = origin.to_vec();
        for (i, &(v, u, c)) in self.steps.iter().enumerate() {
            if seen.contains(&v)
                || seen.contains(&u)
                || seen.contains(&c)
                || v == u
                || u == c
                || v == c
            {
                return false;
            }
            seen.extend([v, u, c]);
            let ok = m.partner(u) == Some(v)
                && state.d.contains(u)
                && state.c.contains(c)
                && g.has_edge(u, c)
                && (i + 1 == self.steps.len() || g.has_edge(u, self.steps[i + 1].0));
            if !ok {
                return false;
            }
        }
        let (u, v) = self.terminal;
        m.partner(u) == Some(v) && state.d.contains(u)
    }
}

/// Grows the sequence from `b ∈ B`. `N(b)` holds exactly one adjacent pair;
/// `flip` selects which of its two vertices plays `v1`.
pub fn build_sigma(
    g: &Graph,
    m: &Matching,
    state: &ExchangeState,
    b: usize,
    flip: bool,
) -> Result<SigmaSequence, ExchangeError> {
    check_input(g, m)?;
    let fail = |vertex, reason| Err(ExchangeError::StructureViolation { b, vertex, reason });
    if !state.b.contains(b) {
        return fail(b, "start vertex is not in B");
    }
    let nb = g.neighbors(b).to_vec();
    let partner = |v: usize| {
        m.partner(v)
            .expect("neighbors of unmatched vertices are matched")
    };
    let [p, q] = match nb.iter().enumerate().find_map(|(i, &p)| {
        nb[i + 1..]
            .iter()
            .find(|&&q| g.has_edge(p, q))
            .map(|&q| [p, q])
    }) {
        Some(pair) => pair,
        None => return fail(b, "claw at b"),
    };
    let (v0, v1) = if flip { (q, p) } else { (p, q) };
    let v_minus1 = *nb.iter().find(|&&v| v != p && v != q).expect("cubic");
    let (u_minus1, u0, u1) = (partner(v_minus1), partner(v0), partner(v1));
    assert!(
        u_minus1 != u0 && u0 != u1 && u_minus1 != u1,
        "neighbors of b lie on one matching edge"
    );
    if g.has_edge(v_minus1, v0) || g.has_edge(v_minus1, v1) {
        return fail(v_minus1, "v−1 is adjacent to the pair");
    }
    let Some(x) = g
        .neighbors(v_minus1)
        .iter()
        .find(|&w| w != u_minus1 && w != b)
    else {
        return fail(v_minus1, "v−1 has no third neighbor");
    };
    if !g.has_edge(x, u_minus1) {
        return fail(x, "x is not adjacent to u−1");
    }
    if x == u0 || x == u1 {
        return fail(
            x,
            "x is an endpoint of the pair's edges; a single swap applies",
        );
    }

    let mut seen = vec![u_minus1, u0, v_minus1, v0, b, x];
    let mut steps = Vec::new();
    let (mut v, mut u) = (v1, u1);
    loop {
        if !state.d.contains(u) {
            return fail(u, "u_i is not in D");
        }
        if seen.contains(&v) {
            return fail(v, "v_i repeats");
        }
        if seen.contains(&u) {
            if u == x {
                break;
            }
            return fail(u, "u_i repeats");
        }
        let c = g
            .neighbors(u)
            .iter()
            .find(|&c| state.c.contains(c) && !seen.contains(&c));
        let Some(c) = c else { break };
        seen.extend([v, u, c]);
        steps.push((v, u, c));
        let next = g
            .neighbors(u)
            .iter()
            .find(|&w| w != v && w != c)
            .expect("cubic");
        let Some(next_u) = m.partner(next) else {
            return fail(next, "v_{i+1} is unmatched");
        };
        v = next;
        u = next_u;
    }
    let sigma = SigmaSequence {
        b,
        v_minus1,
        u_minus1,
        v0,
        u0,
        x,
        steps,
        terminal: (u, v),
    };
    debug_assert!(sigma.is_valid(g, m, state));
    Ok(sigma)
}

/// `D' = (D ∖ {u_1 .. u_{k+1}}) ∪ {v_1 .. v_{k+1}}`, required to shrink `B`.
pub fn path_swap(
    g: &Graph,
    m: &Matching,
    state: &ExchangeState,
    sigma: &SigmaSequence,
) -> Result<VertexSet, ExchangeError> {
    let mut d = state.d.clone();
    for (u, v) in sigma.swapped() {
        d.remove(u);
        d.insert(v);
    }
    assert!(m.is_transversal(&d));
    if uncovered_count(g, m, &d) < state.b.len() {
        Ok(d)
    } else {
        Err(ExchangeError::NoImprovement { b: sigma.b })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exchange {
    pub d: VertexSet,
    pub state: ExchangeState,
    /// Path-swap attempts that hit a structure violation or failed to improve.
    pub rejected_attempts: usize,
}

/// A transversal of `m` that dominates `g`. Each round tries single swaps,
/// then path swaps from every `b ∈ B` in both orientations.
pub fn dominating_transversal(g: &Graph, m: &Matching) -> Result<Exchange, ExchangeError> {
    check_input(g, m)?;
    let mut state = ExchangeState::new(g, m, initial_transversal(m));
    let limit = state.b.len();
    let mut rejected = 0;
    while !state.b.is_empty() {
        assert!(state.moves.len() < limit, "more moves than |B| allows");
        if let Some((edge, to)) = single_swap_improvement(g, m, &state) {
            let e = m.edge(edge);
            let mut d = state.d.clone();
            d.remove(e.other(to));
            d.insert(to);
            state.apply(g, m, d, Move::Single { edge, to });
            continue;
        }
        let mut applied = false;
        'search: for b in state.b.to_vec() {
            for flip in [false, true] {
                let attempt = build_sigma(g, m, &state, b, flip)
                    .and_then(|s| path_swap(g, m, &state, &s).map(|d| (s, d)));
                match attempt {
                    Ok((sigma, d)) => {
                        let edges = sigma
                            .swapped()
                            .iter()
                            .map(|&(u, _)| m.edge_index_of(u).expect("matched"))
                            .collect();
                        state.apply(g, m, d, Move::Path { b, edges });
                        applied = true;
                        break 'search;
                    }
                    Err(_) => rejected += 1,
                }
            }
        }
        if !applied {
            return Err(ExchangeError::NoImprovingMove {
                state: Box::new(state),
            });
        }
    }
    assert!(g.dominates(&state.d));
    Ok(Exchange {
        d: state.d.clone(),
        state,
        rejected_attempts: rejected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::edge_domination_number;
    use crate::graph::families::*;
    use crate::graph::Edge;

    #[test]
    fn initial_choices() {
        let g = prism();
        let m = Matching::new(&g, [Edge::new(0, 1), Edge::new(4, 5)]).unwrap();
        assert_eq!(initial_transversal(&m).to_vec(), vec![0, 4]);
        let k2 = complete(2);
        assert_eq!(
            initial_transversal(&Matching::new(&k2, [Edge::new(0, 1)]).unwrap()).to_vec(),
            vec![0]
        );
    }

    #[test]
    fn single_swaps() {
        let g = prism();
        let m = Matching::new(&g, [Edge::new(0, 1), Edge::new(4, 5)]).unwrap();
        let s = ExchangeState::new(&g, &m, initial_transversal(&m));
        assert!(s.b.is_empty());
        assert_eq!(single_swap_improvement(&g, &m, &s), None);

        // On the double star both choices leave two leaves uncovered.
        let fig1 = double_star();
        let m = Matching::new(&fig1, [Edge::new(0, 1)]).unwrap();
        let s = ExchangeState::new(&fig1, &m, VertexSet::from_vertices(6, [0]));
        assert_eq!(s.b.to_vec(), vec![4, 5]);
        assert_eq!(single_swap_improvement(&fig1, &m, &s), None);
    }

    #[test]
    fn small_fixtures() {
        let g = prism();
        let m = Matching::new(&g, [Edge::new(0, 1), Edge::new(4, 5)]).unwrap();
        let ex = dominating_transversal(&g, &m).unwrap();
        assert_eq!(ex.d.len(), 2);
        assert!(g.dominates(&ex.d));
        let k4 = complete(4);
        let pm = Matching::new(&k4, [Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!(dominating_transversal(&k4, &pm).unwrap().d.len(), 2);
        let pet = petersen();
        let m = edge_domination_number(&pet).unwrap().witness;
        assert!(matches!(
            dominating_transversal(&pet, &m),
            Err(ExchangeError::NotClawFree(_))
        ));
        let claw = star(3);
        let m = Matching::new(&claw, [Edge::new(0, 1)]).unwrap();
        assert_eq!(
            dominating_transversal(&claw, &m),
            Err(ExchangeError::NotCubic)
        );
    }

    #[test]
    fn claw_free_expansions() {
        let h = Multigraph::from_graph(&complete(4));
        for diamonds in [[0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]] {
            let g = expand(&h, &[true; 4], &diamonds)
                .or_else(|| expand(&h, &[false; 4], &diamonds))
                .unwrap();
            if !(g.is_cubic() && g.is_claw_free()) {
                continue;
            }
            let m = edge_domination_number(&g).unwrap().witness;
            let ex = dominating_transversal(&g, &m).unwrap();
            assert_eq!(ex.d.len(), m.len());
            assert!(g.dominates(&ex.d));
        }
        for k in 2..=3 {
            let g = ring_of_diamonds(k);
            let m = crate::exact::greedy_maximal_matching(&g);
            let ex = dominating_transversal(&g, &m).unwrap();
            assert!(g.dominates(&ex.d));
        }
    }
}
