//! Ideals as canonical element sets, with sums, intersections, products
//! and colons.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::FiniteRing;

#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    set: ElemSet,
}

impl Ideal {
    /// Wraps a set known to be an ideal.
    pub(crate) fn from_set_unchecked(ring: &FiniteRing, set: ElemSet) -> Ideal {
        debug_assert_eq!(set.universe(), ring.order());
        Ideal {
            ring: ring.clone(),
            set,
        }
    }

    /// Validates closure under addition and absorption.
    pub fn from_set(ring: &FiniteRing, set: ElemSet) -> Result<Ideal> {
        if set.universe() != ring.order() || !set.contains(ring.zero()) {
            return Err(Error::Precondition("not an ideal: missing zero".into()));
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(ring.add(a, b)) {
                    return Err(Error::Precondition("not an ideal: sum escapes".into()));
                }
            }
            for r in ring.elements() {
                if !set.contains(ring.mul(r, a)) {
                    return Err(Error::Precondition("not an ideal: product escapes".into()));
                }
            }
        }
        Ok(Ideal::from_set_unchecked(ring, set))
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal::from_set_unchecked(ring, ElemSet::from_indices(ring.order(), [ring.zero()]))
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        Ideal::from_set_unchecked(ring, ElemSet::full(ring.order()))
    }

    /// `Ra`, which is already closed under addition.
    pub fn principal(ring: &FiniteRing, a: usize) -> Ideal {
        Ideal::from_set_unchecked(
            ring,
            ElemSet::from_indices(ring.order(), ring.elements().map(|r| ring.mul(r, a))),
        )
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn elements(&self) -> Vec<usize> {
        self.set.to_vec()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.set.len() == self.ring.order()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.set.is_subset(&other.set)
    }

    /// Number of cosets.
    pub fn index(&self) -> usize {
        self.ring.order() / self.len()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut set = self.set.clone();
        let mine = self.elements();
        for b in other.set.iter() {
            for &a in &mine {
                set.insert(self.ring.add(a, b));
            }
        }
        Ideal::from_set_unchecked(&self.ring, set)
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal::from_set_unchecked(&self.ring, self.set.intersection(&other.set))
    }

    /// `IJ`, the ideal generated by all products.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in self.set.iter() {
            for b in other.set.iter() {
                gens.push(self.ring.mul(a, b));
            }
        }
        ideal_generated(&self.ring, &gens)
    }

    /// `I^k`, with `I^0 = R`.
    pub fn power(&self, k: usize) -> Ideal {
        let mut acc = Ideal::whole(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `(I : J) = {r : rJ ⊆ I}`.
    pub fn colon(&self, other: &Ideal) -> Ideal {
        colon(self, other)
    }

    pub fn canonical_cmp(&self, other: &Ideal) -> std::cmp::Ordering {
        self.set.canonical_cmp(&other.set)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set && self.ring.same_tables(&other.ring)
    }
}

impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.set)
    }
}

/// Smallest ideal containing `gens`: the sum of the principal ideals.
pub fn ideal_generated(ring: &FiniteRing, gens: &[usize]) -> Ideal {
    let mut acc = Ideal::zero(ring);
    for &g in gens {
        if !acc.contains(g) {
            acc = acc.sum(&Ideal::principal(ring, g));
        }
    }
    acc
}

/// `(I : J) = {r : rJ ⊆ I}`.
pub fn colon(i: &Ideal, j: &Ideal) -> Ideal {
    let ring = i.ring();
    let js = j.elements();
    let set = ElemSet::from_indices(
        ring.order(),
        ring.elements()
            .filter(|&r| js.iter().all(|&b| i.contains(ring.mul(r, b)))),
    );
    Ideal::from_set_unchecked(ring, set)
}

/// Every ideal of `R` once, in canonical order, obtained by closing the
/// principal ideals under sums.
pub fn all_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    Limits::check_lattice("ideal enumeration", ring.order())?;
    let mut principals: Vec<Ideal> = Vec::new();
    let mut seen_p = HashSet::new();
    for a in ring.elements() {
        let p = Ideal::principal(ring, a);
        if seen_p.insert(p.set.clone()) {
            principals.push(p);
        }
    }
    let mut seen: HashSet<ElemSet> = principals.iter().map(|p| p.set.clone()).collect();
    let mut out = principals.clone();
    let mut queue: VecDeque<Ideal> = principals.iter().cloned().collect();
    while let Some(i) = queue.pop_front() {
        for p in &principals {
            if p.is_subset(&i) {
                continue;
            }
            let s = i.sum(p);
            if seen.insert(s.set.clone()) {
                out.push(s.clone());
                queue.push_back(s);
            }
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{is_spir, make_gf, make_zmod};

    #[test]
    fn generated_ideals() {
        let z12 = make_zmod(12).unwrap();
        assert_eq!(ideal_generated(&z12, &[4]).elements(), vec![0, 4, 8]);
        assert!(ideal_generated(&z12, &[]).is_zero());
        assert!(ideal_generated(&z12, &[1]).is_whole());
        assert_eq!(ideal_generated(&z12, &[4, 6]).elements(), vec![0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn ideal_counts() {
        let z4 = make_zmod(4).unwrap();
        let ideals = all_ideals(&z4).unwrap();
        let sets: Vec<Vec<usize>> = ideals.iter().map(|i| i.elements()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(all_ideals(&make_gf(2, 2).unwrap()).unwrap().len(), 2);
        // oracle: ideals of Z/n correspond to divisors of n
        for n in 2..40usize {
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(all_ideals(&make_zmod(n).unwrap()).unwrap().len(), divisors, "n={n}");
        }
    }

    #[test]
    fn spir_ideals_form_a_chain() {
        let z27 = make_zmod(27).unwrap();
        let w = is_spir(&z27).unwrap();
        let ideals = all_ideals(&z27).unwrap();
        assert_eq!(ideals.len(), w.index + 1);
        for (i, id) in ideals.iter().enumerate() {
            let expected = Ideal::principal(&z27, z27.pow(w.generator, (w.index - i) as u64));
            assert_eq!(*id, expected);
        }
    }

    #[test]
    fn colon_and_products() {
        let z12 = make_zmod(12).unwrap();
        let i = ideal_generated(&z12, &[4]);
        assert_eq!(colon(&i, &Ideal::whole(&z12)), i);
        let two = ideal_generated(&z12, &[2]);
        assert_eq!(colon(&i, &two), ideal_generated(&z12, &[2]));
        assert_eq!(two.product(&two), ideal_generated(&z12, &[4]));
        assert_eq!(two.power(0), Ideal::whole(&z12));
        assert_eq!(Ideal::from_set(&z12, ElemSet::from_indices(12, [0, 3])).is_err(), true);
    }
}
