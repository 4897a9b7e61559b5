//! Bit-set of element indices, the canonical identity of ideals,
//! subalgebras and submodules.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = ElemSet::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = ElemSet::empty(universe);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i >> 6] & (1u64 << (i & 63)) != 0
    }

    /// Returns `true` if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Canonical order used for lattice nodes: cardinality, then the sorted
    /// element lists lexicographically.
    pub fn canonical_cmp(&self, other: &ElemSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite abelian group given by tables.
pub trait AdditiveGroup {
    fn group_order(&self) -> usize;
    fn group_zero(&self) -> usize;
    fn group_add(&self, a: usize, b: usize) -> usize;
}

/// Subgroup of an [`AdditiveGroup`] with its members listed in insertion
/// order.
#[derive(Clone, Debug)]
pub struct Span {
    pub set: ElemSet,
    pub members: Vec<usize>,
}

impl Span {
    pub fn zero<G: AdditiveGroup + ?Sized>(g: &G) -> Span {
        let mut set = ElemSet::empty(g.group_order());
        set.insert(g.group_zero());
        Span {
            set,
            members: vec![g.group_zero()],
        }
    }

    /// Wraps a set already known to be a subgroup.
    pub fn from_subgroup(set: ElemSet) -> Span {
        let members = set.to_vec();
        Span { set, members }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    /// Replaces the subgroup `H` by `H + <x>`, adding the cosets `H + jx`.
    pub fn extend<G: AdditiveGroup + ?Sized>(&mut self, g: &G, x: usize) {
        if self.set.contains(x) {
            return;
        }
        let base: Vec<usize> = self.members.clone();
        let mut shift = x;
        while !self.set.contains(shift) {
            for &h in &base {
                let y = g.group_add(h, shift);
                if self.set.insert(y) {
                    self.members.push(y);
                }
            }
            shift = g.group_add(shift, x);
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Cyclic(usize);
    impl AdditiveGroup for Cyclic {
        fn group_order(&self) -> usize {
            self.0
        }
        fn group_zero(&self) -> usize {
            0
        }
        fn group_add(&self, a: usize, b: usize) -> usize {
            (a + b) % self.0
        }
    }

    #[test]
    fn bitset_basics() {
        let mut s = ElemSet::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert_eq!(s.to_vec(), vec![0, 129]);
        assert_eq!(s.len(), 2);
        let t = ElemSet::from_indices(130, [0, 5, 129]);
        assert!(s.is_subset(&t));
        assert!(!t.is_subset(&s));
        assert_eq!(s.intersection(&t), s);
        assert_eq!(s.union(&t), t);
    }

    #[test]
    fn span_of_cyclic_group() {
        let g = Cyclic(12);
        let mut h = Span::zero(&g);
        h.extend(&g, 8);
        assert_eq!(h.set.to_vec(), vec![0, 4, 8]);
        h.extend(&g, 6);
        assert_eq!(h.set.to_vec(), vec![0, 2, 4, 6, 8, 10]);
        h.extend(&g, 3);
        assert_eq!(h.len(), 12);
    }
}
