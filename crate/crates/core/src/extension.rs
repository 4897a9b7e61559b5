//! Ring extensions `R ⊆ S` given by an injective homomorphism, and the
//! subring and submodule generation used to walk `[R,S]`.

use crate::elemset::{ElemSet, Span};
use crate::error::{Error, Result};
use crate::ring::{product, FiniteRing, RingHom};

/// An intermediate algebra, identified by its element set in `S`.
pub type Subalgebra = ElemSet;

#[derive(Clone, Debug)]
pub struct Extension {
    base: FiniteRing,
    top: FiniteRing,
    embed: RingHom,
    image: ElemSet,
}

/// An extension cut out of a larger one, with the inclusion of its top ring.
#[derive(Clone, Debug)]
pub struct SubExtension {
    pub ext: Extension,
    /// `T₂ → S`.
    pub inclusion: RingHom,
}

impl SubExtension {
    /// Element set of the sub-extension's top transported into `S`.
    pub fn lift(&self, set: &ElemSet) -> ElemSet {
        self.inclusion.map_set(set)
    }
}

impl Extension {
    pub fn new(embed: RingHom) -> Result<Extension> {
        if !embed.is_injective() {
            return Err(Error::InvalidExtension("embedding is not injective".into()));
        }
        let image = embed.image();
        Ok(Extension {
            base: embed.source().clone(),
            top: embed.target().clone(),
            embed,
            image,
        })
    }

    /// Validates `map` as a homomorphism before checking injectivity.
    pub fn from_map(base: &FiniteRing, top: &FiniteRing, map: Vec<usize>) -> Result<Extension> {
        Extension::new(RingHom::new(base.clone(), top.clone(), map)?)
    }

    pub fn identity(ring: &FiniteRing) -> Extension {
        Extension::new(RingHom::identity(ring)).expect("identity is injective")
    }

    /// `R ⊆ R^n` along `r ↦ (r, …, r)`.
    pub fn diagonal(ring: &FiniteRing, n: usize) -> Result<Extension> {
        let pr = product(&vec![ring.clone(); n])?;
        Extension::new(pr.diagonal.expect("equal factors have a diagonal"))
    }

    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn top(&self) -> &FiniteRing {
        &self.top
    }

    pub fn embed(&self) -> &RingHom {
        &self.embed
    }

    /// The bottom of `[R,S]`.
    pub fn image(&self) -> &ElemSet {
        &self.image
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.top.order())
    }

    pub fn is_trivial(&self) -> bool {
        self.image.len() == self.top.order()
    }

    /// Closed under addition and multiplication and containing the image.
    pub fn is_subalgebra(&self, set: &ElemSet) -> bool {
        if !self.image.is_subset(set) {
            return false;
        }
        let m = set.to_vec();
        m.iter().all(|&a| {
            m.iter().all(|&b| {
                set.contains(self.top.add(a, b)) && set.contains(self.top.mul(a, b))
            })
        })
    }

    /// `T[s] = Σ_k T·s^k` for a subalgebra `T`.
    pub fn adjoin(&self, t: &ElemSet, s: usize) -> ElemSet {
        if t.contains(s) {
            return t.clone();
        }
        let s_ring = &self.top;
        let gens = additive_generators(s_ring, t);
        let mut span = Span::from_subgroup(t.clone());
        let mut powers = ElemSet::empty(s_ring.order());
        let mut p = s;
        while powers.insert(p) {
            for &g in &gens {
                span.extend(s_ring, s_ring.mul(g, p));
            }
            p = s_ring.mul(p, s);
        }
        span.set
    }

    /// Smallest subalgebra containing the image and `gens`.
    pub fn generate(&self, gens: &[usize]) -> ElemSet {
        gens.iter()
            .fold(self.image.clone(), |t, &g| self.adjoin(&t, g))
    }

    /// `N + Rx` for an `R`-submodule `N` of `S`.
    pub fn module_extend(&self, n: &ElemSet, x: usize) -> ElemSet {
        let mut span = Span::from_subgroup(n.clone());
        for r in self.image.iter() {
            span.extend(&self.top, self.top.mul(r, x));
        }
        span.set
    }

    /// Whether an additive subgroup is closed under multiplication.
    pub fn is_multiplicative(&self, set: &ElemSet) -> bool {
        let gens = additive_generators(&self.top, set);
        gens.iter()
            .all(|&a| gens.iter().all(|&b| set.contains(self.top.mul(a, b))))
    }

    /// The subalgebra as a ring of its own, with its inclusion into `S`.
    pub fn subalgebra_ring(&self, set: &ElemSet) -> Result<(FiniteRing, RingHom)> {
        if !self.is_subalgebra(set) {
            return Err(Error::InvalidExtension("not an intermediate algebra".into()));
        }
        let label = format!("subalgebra of {} with {} elements", self.top.label(), set.len());
        Ok(crate::ring::construct_subring(&self.top, set, label))
    }

    /// `T₁ ⊆ T₂` for intermediate algebras `T₁ ⊆ T₂`. The base stays `R`
    /// when `T₁` is the image, and the top stays `S` when `T₂` is all of `S`.
    pub fn sub_extension(&self, lower: &ElemSet, upper: &ElemSet) -> Result<SubExtension> {
        if !lower.is_subset(upper) {
            return Err(Error::InvalidExtension("lower algebra not contained in upper".into()));
        }
        let (utop, uincl) = if upper.len() == self.top.order() {
            (self.top.clone(), RingHom::identity(&self.top))
        } else {
            self.subalgebra_ring(upper)?
        };
        let mut pos = vec![usize::MAX; self.top.order()];
        for (i, &m) in uincl.table().iter().enumerate() {
            pos[m] = i;
        }
        let embed = if *lower == self.image {
            let map = self.embed.table().iter().map(|&a| pos[a]).collect();
            RingHom::new_unchecked(self.base.clone(), utop.clone(), map)?
        } else {
            let (lring, lincl) = self.subalgebra_ring(lower)?;
            let map = lincl.table().iter().map(|&a| pos[a]).collect();
            RingHom::new_unchecked(lring, utop.clone(), map)?
        };
        Ok(SubExtension {
            ext: Extension::new(embed)?,
            inclusion: uincl,
        })
    }

    /// Same extension with the base replaced by the intermediate algebra
    /// `T`, keeping `S` and its element indices.
    pub fn over(&self, t: &ElemSet) -> Result<Extension> {
        Ok(self.sub_extension(t, &self.full())?.ext)
    }

    /// `R ⊆ T` for an intermediate algebra `T`.
    pub fn up_to(&self, t: &ElemSet) -> Result<SubExtension> {
        self.sub_extension(&self.image.clone(), t)
    }
}

/// A generating set of the additive subgroup `set`, chosen greedily in index
/// order.
pub(crate) fn additive_generators(ring: &FiniteRing, set: &ElemSet) -> Vec<usize> {
    let mut span = Span::zero(ring);
    let mut gens = Vec::new();
    for a in set.iter() {
        if !span.contains(a) {
            span.extend(ring, a);
            gens.push(a);
        }
    }
    gens
}
