use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SelectionError;
use crate::dyadic::Dyadic;
use crate::exact::{is_maximal_matching, Matching};
use crate::graph::{Graph, VertexSet};

/// One independent factor of a selection scheme. Edge fields are indices
/// into the matching's canonical edge list; vertex fields are graph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group {
    /// Either endpoint with probability 1/2.
    Singleton { edge: usize },
    /// `outcome_a` or `outcome_b`, each with probability 1/2; each outcome
    /// holds one endpoint of each edge and the two outcomes are disjoint.
    CoupledPair {
        edges: [usize; 2],
        outcome_a: [usize; 2],
        outcome_b: [usize; 2],
    },
    /// Deterministic: `chosen[i]` is the selected endpoint of `edges[i]`.
    FixedTriple {
        edges: [usize; 3],
        chosen: [usize; 3],
    },
    /// A random group conditioned on one of its outcomes.
    Pinned {
        edges: Vec<usize>,
        chosen: Vec<usize>,
    },
}

impl Group {
    pub fn edges(&self) -> Vec<usize> {
        match self {
            Group::Singleton { edge } => vec![*edge],
            Group::CoupledPair { edges, .. } => edges.to_vec(),
            Group::FixedTriple { edges, .. } => edges.to_vec(),
            Group::Pinned { edges, .. } => edges.clone(),
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Group::Singleton { .. } | Group::CoupledPair { .. })
    }

    /// The outcome distribution as `(k, vertices)` pairs with probability `2^-k`.
    pub fn outcomes(&self, m: &Matching) -> Vec<(u32, Vec<usize>)> {
        match self {
            Group::Singleton { edge } => {
                let e = m.edge(*edge);
                vec![(1, vec![e.u]), (1, vec![e.v])]
            }
            Group::CoupledPair {
                outcome_a,
                outcome_b,
                ..
            } => vec![(1, outcome_a.to_vec()), (1, outcome_b.to_vec())],
            Group::FixedTriple { chosen, .. } => vec![(0, chosen.to_vec())],
            Group::Pinned { chosen, .. } => vec![(0, chosen.clone())],
        }
    }
}

/// A product distribution over transversals of a matching: each group picks
/// its outcome independently of every other group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionScheme {
    matching: Matching,
    groups: Vec<Group>,
    group_of_edge: Vec<usize>,
}

impl SelectionScheme {
    pub fn new(matching: Matching, groups: Vec<Group>) -> Result<SelectionScheme, SelectionError> {
        let mut group_of_edge = vec![usize::MAX; matching.len()];
        for (gi, group) in groups.iter().enumerate() {
            for e in group.edges() {
                let slot = group_of_edge
                    .get_mut(e)
                    .ok_or(SelectionError::EdgeOutOfRange(e))?;
                if *slot != usize::MAX {
                    return Err(SelectionError::EdgeInTwoGroups(e));
                }
                *slot = gi;
            }
            check_group(&matching, gi, group)?;
        }
        if let Some(e) = group_of_edge.iter().position(|&g| g == usize::MAX) {
            return Err(SelectionError::EdgeUngrouped(e));
        }
        Ok(SelectionScheme {
            matching,
            groups,
            group_of_edge,
        })
    }

    /// Every edge an independent fair coin.
    pub fn uniform(matching: Matching) -> SelectionScheme {
        let groups = (0..matching.len())
            .map(|edge| Group::Singleton { edge })
            .collect();
        SelectionScheme::new(matching, groups).expect("singletons partition the matching")
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn group_of_edge(&self, edge: usize) -> usize {
        self.group_of_edge[edge]
    }

    pub fn is_deterministic(&self) -> bool {
        self.groups.iter().all(|g| !g.is_random())
    }

    /// Conditions group `gi` on its `outcome`-th outcome.
    pub fn pinned(&self, gi: usize, outcome: usize) -> SelectionScheme {
        let group = &self.groups[gi];
        let (_, chosen) = group.outcomes(&self.matching).swap_remove(outcome);
        let mut next = self.clone();
        let edges = group.edges();
        let chosen = edges
            .iter()
            .map(|&e| {
                let edge = self.matching.edge(e);
                *chosen
                    .iter()
                    .find(|&&x| edge.contains(x))
                    .expect("outcome covers its edges")
            })
            .collect();
        next.groups[gi] = Group::Pinned { edges, chosen };
        next
    }

    /// Draws one transversal. Each random group consumes one `bool` from the
    /// stream, in group order.
    pub fn sample_with<R: Rng>(&self, rng: &mut R) -> VertexSet {
        let mut d = VertexSet::new(self.matching.host_order());
        for group in &self.groups {
            let mut outcomes = group.outcomes(&self.matching);
            let pick = if group.is_random() {
                usize::from(rng.random::<bool>())
            } else {
                0
            };
            for v in outcomes.swap_remove(pick).1 {
                d.insert(v);
            }
        }
        d
    }

    /// Marginal probability that `v`, an endpoint of a matched edge, is
    /// selected. Computed by enumerating the outcomes of its group.
    pub fn marginal(&self, v: usize) -> Option<Dyadic> {
        let e = self.matching.edge_index_of(v)?;
        let group = &self.groups[self.group_of_edge[e]];
        Some(
            group
                .outcomes(&self.matching)
                .into_iter()
                .filter(|(_, chosen)| chosen.contains(&v))
                .map(|(k, _)| Dyadic::half_pow(k))
                .sum(),
        )
    }
}

fn check_group(m: &Matching, gi: usize, group: &Group) -> Result<(), SelectionError> {
    let bad = || SelectionError::MalformedGroup(gi);
    let is_transversal = |edges: &[usize], chosen: &[usize]| {
        edges.len() == chosen.len()
            && edges
                .iter()
                .all(|&e| chosen.iter().filter(|&&x| m.edge(e).contains(x)).count() == 1)
    };
    match group {
        Group::Singleton { .. } => Ok(()),
        Group::CoupledPair {
            edges,
            outcome_a,
            outcome_b,
        } => {
            let disjoint = outcome_a.iter().all(|x| !outcome_b.contains(x));
            (edges[0] != edges[1]
                && is_transversal(edges, outcome_a)
                && is_transversal(edges, outcome_b)
                && disjoint)
                .then_some(())
                .ok_or_else(bad)
        }
        Group::FixedTriple { edges, chosen } => {
            is_transversal(edges, chosen).then_some(()).ok_or_else(bad)
        }
        Group::Pinned { edges, chosen } => {
            is_transversal(edges, chosen).then_some(()).ok_or_else(bad)
        }
    }
}

/// The all-singletons scheme over a maximal matching.
pub fn uniform_scheme(g: &Graph, m: &Matching) -> Result<SelectionScheme, SelectionError> {
    if !is_maximal_matching(g, m) {
        return Err(SelectionError::NotMaximal);
    }
    Ok(SelectionScheme::uniform(m.clone()))
}

/// Seeded draw: ChaCha8 from `seed`, one bit per random group.
pub fn sample(scheme: &SelectionScheme, seed: u64) -> VertexSet {
    scheme.sample_with(&mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Edge;

    fn prism_matching() -> (Graph, Matching) {
        let g = prism();
        // a1a2 = 0-1, b2b3 = 4-5
        let m = Matching::new(&g, [Edge::new(0, 1), Edge::new(4, 5)]).unwrap();
        (g, m)
    }

    #[test]
    fn uniform_schemes() {
        let fig1 = double_star();
        let m = Matching::new(&fig1, [Edge::new(0, 1)]).unwrap();
        assert_eq!(
            uniform_scheme(&fig1, &m).unwrap().groups(),
            &[Group::Singleton { edge: 0 }]
        );
        let empty = Graph::empty(2);
        assert!(uniform_scheme(&empty, &Matching::empty(&empty))
            .unwrap()
            .groups()
            .is_empty());
        let (g, m) = prism_matching();
        assert_eq!(uniform_scheme(&g, &m).unwrap().groups().len(), 2);
        let c4 = cycle(4);
        let half = Matching::new(&c4, [Edge::new(0, 1)]).unwrap();
        assert_eq!(uniform_scheme(&c4, &half), Err(SelectionError::NotMaximal));
    }

    #[test]
    fn validation_rejects_bad_partitions() {
        let (_, m) = prism_matching();
        assert_eq!(
            SelectionScheme::new(m.clone(), vec![Group::Singleton { edge: 0 }]),
            Err(SelectionError::EdgeUngrouped(1))
        );
        assert_eq!(
            SelectionScheme::new(
                m.clone(),
                vec![Group::Singleton { edge: 0 }, Group::Singleton { edge: 0 }]
            ),
            Err(SelectionError::EdgeInTwoGroups(0))
        );
        // Outcomes that overlap.
        let overlapping = Group::CoupledPair {
            edges: [0, 1],
            outcome_a: [0, 4],
            outcome_b: [0, 5],
        };
        assert_eq!(
            SelectionScheme::new(m.clone(), vec![overlapping]),
            Err(SelectionError::MalformedGroup(0))
        );
        let ok = Group::CoupledPair {
            edges: [0, 1],
            outcome_a: [0, 5],
            outcome_b: [1, 4],
        };
        let scheme = SelectionScheme::new(m, vec![ok]).unwrap();
        for v in [0, 1, 4, 5] {
            assert_eq!(scheme.marginal(v), Some(Dyadic::half_pow(1)));
        }
    }

    #[test]
    fn sampling() {
        let (g, m) = prism_matching();
        let fixed = SelectionScheme::new(
            m.clone(),
            vec![Group::Pinned {
                edges: vec![0, 1],
                chosen: vec![1, 4],
            }],
        )
        .unwrap();
        for seed in 0..10 {
            assert_eq!(sample(&fixed, seed).to_vec(), vec![1, 4]);
        }
        let single = uniform_scheme(
            &complete(2),
            &Matching::new(&complete(2), [Edge::new(0, 1)]).unwrap(),
        )
        .unwrap();
        let seen: std::collections::BTreeSet<Vec<usize>> =
            (0..64).map(|s| sample(&single, s).to_vec()).collect();
        assert_eq!(seen.len(), 2);
        let coupled = SelectionScheme::new(
            m.clone(),
            vec![Group::CoupledPair {
                edges: [0, 1],
                outcome_a: [0, 5],
                outcome_b: [1, 4],
            }],
        )
        .unwrap();
        for seed in 0..64 {
            let d = sample(&coupled, seed).to_vec();
            assert!(d == vec![0, 5] || d == vec![1, 4], "{d:?}");
            assert!(m.is_transversal(&sample(&coupled, seed)));
        }
        let _ = g;
    }

    #[test]
    fn pinning_records_the_outcome() {
        let (_, m) = prism_matching();
        let s = SelectionScheme::uniform(m).pinned(1, 1);
        assert_eq!(
            s.groups()[1],
            Group::Pinned {
                edges: vec![1],
                chosen: vec![5]
            }
        );
        assert!(!s.is_deterministic());
        assert!(s.pinned(0, 0).is_deterministic());
    }
}
