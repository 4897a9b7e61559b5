use std::fmt;

use super::FiniteRing;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// A unital ring homomorphism given by its table of images.
#[derive(Clone, PartialEq, Eq)]
pub struct RingHom {
    source: FiniteRing,
    target: FiniteRing,
    map: Vec<usize>,
}

impl RingHom {
    /// Validates that `map` preserves zero, one, sums and products.
    pub fn new(source: FiniteRing, target: FiniteRing, map: Vec<usize>) -> Result<RingHom> {
        let h = RingHom::new_unchecked(source, target, map)?;
        h.check()?;
        Ok(h)
    }

    /// Only checks the table shape.
    pub(crate) fn new_unchecked(
        source: FiniteRing,
        target: FiniteRing,
        map: Vec<usize>,
    ) -> Result<RingHom> {
        if map.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.order()) {
            return Err(Error::InvalidHom(format!("image {bad} out of range")));
        }
        Ok(RingHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(ring: &FiniteRing) -> RingHom {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            map: ring.elements().collect(),
        }
    }

    /// Checks every homomorphism law on all pairs.
    pub fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.zero()) != t.zero() {
            return Err(Error::InvalidHom("zero not preserved".into()));
        }
        if self.apply(s.one()) != t.one() {
            return Err(Error::InvalidHom("one not preserved".into()));
        }
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(s.add(a, b)) != t.add(self.apply(a), self.apply(b)) {
                    return Err(Error::InvalidHom(format!("sum not preserved at ({a},{b})")));
                }
                if self.apply(s.mul(a, b)) != t.mul(self.apply(a), self.apply(b)) {
                    return Err(Error::InvalidHom(format!(
                        "product not preserved at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn target(&self) -> &FiniteRing {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingHom) -> Result<RingHom> {
        if !self.target.same_tables(&other.source) {
            return Err(Error::InvalidHom("composition of mismatched maps".into()));
        }
        Ok(RingHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&a| other.apply(a)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.order()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }

    pub fn image(&self) -> ElemSet {
        ElemSet::from_indices(self.target.order(), self.map.iter().copied())
    }

    /// Preimage of a subset of the target.
    pub fn preimage(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.source.order(),
            self.source.elements().filter(|&a| set.contains(self.apply(a))),
        )
    }

    /// Image of a subset of the source.
    pub fn map_set(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.target.order(), set.iter().map(|a| self.apply(a)))
    }

    pub fn kernel(&self) -> ElemSet {
        let mut z = ElemSet::empty(self.target.order());
        z.insert(self.target.zero());
        self.preimage(&z)
    }

    /// Inverse map when the homomorphism is bijective.
    pub fn inverse(&self) -> Option<RingHom> {
        if !(self.is_injective() && self.is_surjective()) {
            return None;
        }
        let mut inv = vec![0; self.target.order()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Some(RingHom {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingHom({} -> {}, {:?})",
            self.source.label(),
            self.target.label(),
            self.map
        )
    }
}
