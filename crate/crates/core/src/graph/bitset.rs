use std::fmt;

const WORD: usize = 64;

/// A set of vertices drawn from the universe `0..universe`.
///
/// Backed by a multi-word bit vector, so it has no size cap. The exact
/// solvers lower these into single `u64` masks when `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(WORD)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low `universe` bits of a mask.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= WORD);
        let mut s = Self::new(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    /// Low word of the set; only meaningful when `universe <= 64`.
    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.universe <= WORD);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts `v`, returning whether it was newly added.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.universe).difference(self)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multi_word_membership() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        assert_eq!(s.complement().len(), 128);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(10, [1, 2, 3]);
        let b = VertexSet::from_vertices(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(a.intersects(&b));
        assert!(VertexSet::from_vertices(10, [1]).is_subset(&a));
        assert_eq!(VertexSet::from_mask(10, 0b110).to_vec(), vec![1, 2]);
    }

    #[test]
    fn empty_universe() {
        let s = VertexSet::new(0);
        assert!(s.is_empty());
        assert_eq!(s.iter().count(), 0);
        assert_eq!(s.to_mask(), 0);
    }
}
