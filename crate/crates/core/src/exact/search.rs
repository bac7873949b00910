//! Word-parallel branch-and-bound kernels. Every vertex set here is a `u64`
//! mask, so callers guarantee `n <= 64`.

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

pub(crate) struct Masks {
    pub n: usize,
    pub open: Vec<u64>,
    pub closed: Vec<u64>,
    pub full: u64,
    pub max_degree: usize,
}

impl Masks {
    pub fn new(open: Vec<u64>) -> Masks {
        let n = open.len();
        let closed = open
            .iter()
            .enumerate()
            .map(|(v, &m)| m | (1 << v))
            .collect();
        let max_degree = open
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0);
        Masks {
            n,
            open,
            closed,
            full: full_mask(n),
            max_degree,
        }
    }
}

/// Minimum dominating set: returns (lexicographically smallest optimal set,
/// nodes explored). With `independent`, only independent sets are admitted.
pub(crate) fn min_dominating(masks: &Masks, independent: bool) -> (u64, u64) {
    if masks.n == 0 {
        return (0, 0);
    }
    let mut search = DomSearch {
        masks,
        independent,
        best_size: usize::MAX,
        best: 0,
        nodes: 0,
    };
    let start = greedy_dominating(masks, independent);
    search.best = start;
    search.best_size = start.count_ones() as usize;
    search.branch(0, 0, 0);
    let size = search.best_size;
    // Second pass: the first size-`size` set in include-first vertex order is
    // the lexicographically smallest one.
    let mut lex = LexDom {
        masks,
        independent,
        found: 0,
        nodes: 0,
    };
    let ok = lex.search(0, 0, 0, size);
    assert!(ok, "an optimal dominating set was found but not re-derived");
    (lex.found, search.nodes + lex.nodes)
}

fn greedy_dominating(masks: &Masks, independent: bool) -> u64 {
    let mut dominated = 0u64;
    let mut chosen = 0u64;
    while dominated != masks.full {
        let pick = if independent {
            (!dominated & masks.full).trailing_zeros() as usize
        } else {
            (0..masks.n)
                .max_by_key(|&w| {
                    (
                        (masks.closed[w] & !dominated).count_ones(),
                        std::cmp::Reverse(w),
                    )
                })
                .unwrap()
        };
        chosen |= 1 << pick;
        dominated |= masks.closed[pick];
    }
    chosen
}

struct DomSearch<'a> {
    masks: &'a Masks,
    independent: bool,
    best_size: usize,
    best: u64,
    nodes: u64,
}

impl DomSearch<'_> {
    fn branch(&mut self, dominated: u64, chosen: u64, size: usize) {
        self.nodes += 1;
        let undominated = self.masks.full & !dominated;
        if undominated == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        let cover = self.masks.max_degree + 1;
        let need = (undominated.count_ones() as usize).div_ceil(cover);
        if size + need >= self.best_size {
            return;
        }
        let v = undominated.trailing_zeros() as usize;
        let mut candidates = self.masks.closed[v];
        if self.independent {
            candidates &= undominated;
        }
        let mut order: Vec<usize> = bits(candidates).collect();
        order
            .sort_by_key(|&w| std::cmp::Reverse((self.masks.closed[w] & undominated).count_ones()));
        for w in order {
            self.branch(
                dominated | self.masks.closed[w],
                chosen | (1 << w),
                size + 1,
            );
        }
    }
}

struct LexDom<'a> {
    masks: &'a Masks,
    independent: bool,
    found: u64,
    nodes: u64,
}

impl LexDom<'_> {
    fn search(&mut self, i: usize, dominated: u64, chosen: u64, budget: usize) -> bool {
        self.nodes += 1;
        let undominated = self.masks.full & !dominated;
        if undominated == 0 {
            self.found = chosen;
            return true;
        }
        if budget == 0 || i == self.masks.n {
            return false;
        }
        let cover = self.masks.max_degree + 1;
        if undominated.count_ones() as usize > budget * cover {
            return false;
        }
        let open = self.masks.full & !((1u64 << i) - 1);
        // Vertices still eligible to join: undecided and, for independent
        // sets, not yet dominated.
        let eligible = if self.independent {
            open & undominated
        } else {
            open
        };
        if bits(undominated).any(|u| self.masks.closed[u] & eligible == 0) {
            return false;
        }
        if eligible & (1 << i) != 0
            && self.search(
                i + 1,
                dominated | self.masks.closed[i],
                chosen | (1 << i),
                budget - 1,
            )
        {
            return true;
        }
        self.search(i + 1, dominated, chosen, budget)
    }
}

/// Minimum maximal matching: returns (lexicographically smallest optimal edge
/// list in canonical order, nodes explored).
pub(crate) fn min_maximal_matching(masks: &Masks, edges: &[(usize, usize)]) -> (Vec<usize>, u64) {
    let mut index = vec![vec![usize::MAX; masks.n]; masks.n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let greedy = greedy_matching(masks, edges);
    let mut search = EdgeSearch {
        masks,
        index: &index,
        best_size: greedy.len(),
        stack: Vec::new(),
        nodes: 0,
    };
    search.branch(masks.full);
    let size = search.best_size;
    let mut lex = LexEdges {
        masks,
        edges,
        index: &index,
        chosen: Vec::new(),
        nodes: 0,
    };
    let ok = lex.search(0, masks.full, size);
    assert!(
        ok,
        "an optimal maximal matching was found but not re-derived"
    );
    (lex.chosen, search.nodes + lex.nodes)
}

fn greedy_matching(masks: &Masks, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut free = masks.full;
    let mut out = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if free & (1 << u) != 0 && free & (1 << v) != 0 {
            free &= !((1 << u) | (1 << v));
            out.push(i);
        }
    }
    out
}

/// Lower bound on the number of edges still needed to make the matching
/// maximal, given the set of unmatched vertices.
fn edges_needed(masks: &Masks, free: u64) -> usize {
    let mut free_edges = 0usize;
    for v in bits(free) {
        free_edges += (masks.open[v] & free).count_ones() as usize;
    }
    free_edges /= 2;
    if free_edges == 0 {
        return 0;
    }
    // Each added edge kills at most 2Δ-1 free edges.
    let by_count = free_edges.div_ceil((2 * masks.max_degree).saturating_sub(1).max(1));
    // Each added edge touches at most two edges of a free matching.
    let mut rest = free;
    let mut disjoint = 0usize;
    for v in bits(free) {
        if rest & (1 << v) == 0 {
            continue;
        }
        let nb = masks.open[v] & rest;
        if nb != 0 {
            let w = nb.trailing_zeros();
            rest &= !((1 << v) | (1 << w));
            disjoint += 1;
        }
    }
    by_count.max(disjoint.div_ceil(2))
}

struct EdgeSearch<'a> {
    masks: &'a Masks,
    index: &'a [Vec<usize>],
    best_size: usize,
    stack: Vec<usize>,
    nodes: u64,
}

impl EdgeSearch<'_> {
    fn branch(&mut self, free: u64) {
        self.nodes += 1;
        let size = self.stack.len();
        let Some(a) = bits(free).find(|&v| self.masks.open[v] & free != 0) else {
            if size < self.best_size {
                self.best_size = size;
            }
            return;
        };
        if size + edges_needed(self.masks, free) >= self.best_size {
            return;
        }
        let b = (self.masks.open[a] & free).trailing_zeros() as usize;
        // Some edge touching a or b enters every maximal extension.
        let mut candidates: Vec<(usize, usize)> =
            bits(self.masks.open[a] & free).map(|w| (a, w)).collect();
        candidates.extend(bits(self.masks.open[b] & free & !(1 << a)).map(|w| (b, w)));
        for (x, y) in candidates {
            self.stack.push(self.index[x][y]);
            self.branch(free & !((1 << x) | (1 << y)));
            self.stack.pop();
        }
    }
}

struct LexEdges<'a> {
    masks: &'a Masks,
    edges: &'a [(usize, usize)],
    index: &'a [Vec<usize>],
    chosen: Vec<usize>,
    nodes: u64,
}

impl LexEdges<'_> {
    fn search(&mut self, i: usize, free: u64, budget: usize) -> bool {
        self.nodes += 1;
        let needed = edges_needed(self.masks, free);
        if needed == 0 {
            return true;
        }
        if budget < needed || i == self.edges.len() {
            return false;
        }
        // Every already-skipped edge that is still free must be coverable by
        // an undecided edge.
        for v in bits(free) {
            for w in bits(self.masks.open[v] & free) {
                if w < v || self.index[v][w] >= i {
                    continue;
                }
                let coverable = [v, w]
                    .iter()
                    .any(|&x| bits(self.masks.open[x] & free).any(|y| self.index[x][y] >= i));
                if !coverable {
                    return false;
                }
            }
        }
        let (u, v) = self.edges[i];
        if free & (1 << u) != 0 && free & (1 << v) != 0 {
            self.chosen.push(i);
            if self.search(i + 1, free & !((1 << u) | (1 << v)), budget - 1) {
                return true;
            }
            self.chosen.pop();
        }
        self.search(i + 1, free, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks_of(n: usize, edges: &[(usize, usize)]) -> Masks {
        let mut open = vec![0u64; n];
        for &(u, v) in edges {
            open[u] |= 1 << v;
            open[v] |= 1 << u;
        }
        Masks::new(open)
    }

    #[test]
    fn full_mask_edges() {
        assert_eq!(full_mask(0), 0);
        assert_eq!(full_mask(3), 0b111);
        assert_eq!(full_mask(64), u64::MAX);
    }

    #[test]
    fn path_domination_is_lex_smallest() {
        // P5: 0-1-2-3-4, optimal sets of size 2: {0,3}, {1,3}, {1,4}, ...
        let m = masks_of(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let (set, _) = min_dominating(&m, false);
        assert_eq!(set, 0b01001);
    }

    #[test]
    fn path_matching() {
        // P4 has the single-edge maximal matching {1-2}.
        let edges = [(0, 1), (1, 2), (2, 3)];
        let m = masks_of(4, &edges);
        let (chosen, _) = min_maximal_matching(&m, &edges);
        assert_eq!(chosen, vec![1]);
    }
}
