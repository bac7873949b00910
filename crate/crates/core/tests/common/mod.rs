//! Brute-force reference values, written without the library solvers.
#![allow(dead_code)]

use domcheck::exact::Matching;
use domcheck::graph::{Graph, VertexSet};
use domcheck::selection::SelectionScheme;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| {
            g.edges()
                .iter()
                .filter(|e| e.contains(v))
                .fold(0u64, |m, e| m | 1 << e.other(v))
        })
        .collect()
}

fn dominates_mask(adj: &[u64], set: u64) -> bool {
    (0..adj.len()).all(|v| set >> v & 1 == 1 || adj[v] & set != 0)
}

/// Smallest dominating set size by scanning all subsets.
pub fn naive_gamma(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj = adjacency(g);
    (0u64..1 << n)
        .filter(|&s| dominates_mask(&adj, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Every matching of `g`, as lists of edge pairs.
pub fn all_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut out = Vec::new();
    fn rec(
        edges: &[(usize, usize)],
        i: usize,
        used: u64,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == edges.len() {
            out.push(cur.clone());
            return;
        }
        rec(edges, i + 1, used, cur, out);
        let (a, b) = edges[i];
        if used >> a & 1 == 0 && used >> b & 1 == 0 {
            cur.push((a, b));
            rec(edges, i + 1, used | 1 << a | 1 << b, cur, out);
            cur.pop();
        }
    }
    rec(&edges, 0, 0, &mut Vec::new(), &mut out);
    out
}

pub fn is_maximal(g: &Graph, m: &[(usize, usize)]) -> bool {
    let covered = m.iter().fold(0u64, |c, &(a, b)| c | 1 << a | 1 << b);
    g.edges()
        .iter()
        .all(|e| covered >> e.u & 1 == 1 || covered >> e.v & 1 == 1)
}

pub fn maximal_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    all_matchings(g)
        .into_iter()
        .filter(|m| is_maximal(g, m))
        .collect()
}

/// Minimum size of a maximal matching, by enumeration.
pub fn naive_gamma_e(g: &Graph) -> usize {
    maximal_matchings(g).iter().map(Vec::len).min().unwrap_or(0)
}

pub fn to_matching(g: &Graph, m: &[(usize, usize)]) -> Matching {
    Matching::new(g, m.iter().map(|&(a, b)| domcheck::graph::Edge::new(a, b))).unwrap()
}

/// `E|B|` for the uniform scheme: the average over all `2^|M|` transversals
/// of the number of unmatched vertices with no chosen neighbour.
pub fn naive_uniform_expectation(g: &Graph, m: &[(usize, usize)]) -> BigRational {
    let adj = adjacency(g);
    let covered = m.iter().fold(0u64, |c, &(a, b)| c | 1 << a | 1 << b);
    let mut total = 0u64;
    for bits in 0u64..1 << m.len() {
        let d = m.iter().enumerate().fold(0u64, |d, (i, &(a, b))| {
            d | 1 << if bits >> i & 1 == 0 { a } else { b }
        });
        total += (0..g.n())
            .filter(|&u| covered >> u & 1 == 0 && adj[u] & d == 0)
            .count() as u64;
    }
    BigRational::new(BigInt::from(total), BigInt::from(1u64) << m.len())
}

/// `E|B|` for any scheme by enumerating the joint outcome of all groups.
pub fn naive_scheme_expectation(g: &Graph, scheme: &SelectionScheme) -> BigRational {
    let adj = adjacency(g);
    let m = scheme.matching();
    let covered: u64 = m.edges().iter().fold(0, |c, e| c | 1 << e.u | 1 << e.v);
    let groups: Vec<Vec<(u32, Vec<usize>)>> =
        scheme.groups().iter().map(|gr| gr.outcomes(m)).collect();
    let mut sum = BigRational::zero();
    fn rec(
        groups: &[Vec<(u32, Vec<usize>)>],
        i: usize,
        exp: u32,
        d: u64,
        adj: &[u64],
        covered: u64,
        sum: &mut BigRational,
    ) {
        if i == groups.len() {
            let b = (0..adj.len())
                .filter(|&u| covered >> u & 1 == 0 && adj[u] & d == 0)
                .count();
            *sum += BigRational::new(BigInt::from(b), BigInt::from(1u64) << exp);
            return;
        }
        for (k, vs) in &groups[i] {
            let d2 = vs.iter().fold(d, |d, &v| d | 1 << v);
            rec(groups, i + 1, exp + k, d2, adj, covered, sum);
        }
    }
    rec(&groups, 0, 0, 0, &adj, covered, &mut sum);
    sum
}

pub fn mask_of(set: &VertexSet) -> u64 {
    set.iter().fold(0, |m, v| m | 1 << v)
}

/// Seeded Erdős–Rényi graph.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
