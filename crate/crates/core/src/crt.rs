//! Extensions `R ⊆ ∏ R/Iⱼ` built from families of ideals: conductors, the
//! minimality criterion, the weak CRT, and reduction to zero conductor.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::closures::seminormalization;
use crate::elemset::{ElemSet, Span};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::ideal::{all_ideals, colon, ideal_generated, Ideal};
use crate::ring::{is_local, make_gf, make_zmod, product, quotient, FiniteRing, ProductRing};
use crate::spectrum::{conductor, is_maximal};

/// Ideals `I₁..Iₙ` of `R` with zero intersection, and `Jⱼ = ∩_{k≠j} I_k`.
#[derive(Clone, Debug)]
pub struct SeparatingFamily {
    pub ring: FiniteRing,
    pub ideals: Vec<Ideal>,
    pub complements: Vec<Ideal>,
}

impl SeparatingFamily {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// `Σ Jⱼ`.
    pub fn complement_sum(&self) -> Ideal {
        self.complements
            .iter()
            .fold(Ideal::zero(&self.ring), |acc, j| acc.sum(j))
    }

    /// `∩ (Iⱼ + Jⱼ)`.
    pub fn local_intersection(&self) -> Ideal {
        self.ideals
            .iter()
            .zip(&self.complements)
            .fold(Ideal::whole(&self.ring), |acc, (i, j)| acc.intersection(&i.sum(j)))
    }
}

#[derive(Clone, Debug)]
pub struct CrtExtension {
    pub family: SeparatingFamily,
    pub extension: Extension,
    pub product: ProductRing,
    /// Set when the input family had nonzero intersection `K` and `R` was
    /// replaced by `R/K`.
    pub notice: Option<String>,
}

fn intersect_all<'a>(ring: &FiniteRing, it: impl Iterator<Item = &'a Ideal>) -> Ideal {
    it.fold(Ideal::whole(ring), |acc, i| acc.intersection(i))
}

/// Builds `R ⊆ ∏ R/Iⱼ`, first passing to `R/∩Iⱼ` when the intersection is
/// not zero. Repeated ideals are kept.
pub fn make_crt(ring: &FiniteRing, ideals: &[Ideal]) -> Result<CrtExtension> {
    if ideals.len() < 2 {
        return Err(Error::InvalidFamily("at least two ideals are required".into()));
    }
    for (j, i) in ideals.iter().enumerate() {
        if !i.ring().same_tables(ring) {
            return Err(Error::InvalidFamily(format!("ideal {} belongs to another ring", j + 1)));
        }
        if i.is_whole() {
            return Err(Error::InvalidFamily(format!("ideal {} is the whole ring", j + 1)));
        }
    }
    let k = intersect_all(ring, ideals.iter());
    let (ring, ideals, notice) = if k.is_zero() {
        (ring.clone(), ideals.to_vec(), None)
    } else {
        let q = quotient(ring, &k)?;
        let imgs = ideals
            .iter()
            .map(|i| Ideal::from_set_unchecked(&q.ring, q.projection.map_set(i.set())))
            .collect();
        let notice = format!(
            "ideals intersect in {} elements; replaced the ring by its quotient of order {}",
            k.len(),
            q.ring.order()
        );
        (q.ring, imgs, Some(notice))
    };
    let complements: Vec<Ideal> = (0..ideals.len())
        .map(|j| {
            intersect_all(
                &ring,
                ideals.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, i)| i),
            )
        })
        .collect();
    let quotients = ideals
        .iter()
        .map(|i| quotient(&ring, i))
        .collect::<Result<Vec<_>>>()?;
    let factors: Vec<FiniteRing> = quotients.iter().map(|q| q.ring.clone()).collect();
    let pr = product(&factors)?;
    let projections: Vec<_> = quotients.iter().map(|q| q.projection.clone()).collect();
    let extension = Extension::new(pr.induced(&projections)?)?;
    Ok(CrtExtension {
        family: SeparatingFamily {
            ring,
            ideals,
            complements,
        },
        extension,
        product: pr,
        notice,
    })
}

/// Family given by generator lists, one per ideal.
pub fn make_crt_from_generators(ring: &FiniteRing, gens: &[Vec<usize>]) -> Result<CrtExtension> {
    for g in gens.iter().flatten() {
        if *g >= ring.order() {
            return Err(Error::InvalidFamily(format!("element {g} out of range")));
        }
    }
    let ideals: Vec<Ideal> = gens.iter().map(|g| ideal_generated(ring, g)).collect();
    make_crt(ring, &ideals)
}

/// Outcome of the pairwise-sum criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub minimal: bool,
    /// Least pair `(j₀, k₀)` (0-based, `j₀ < k₀`) with `I_j₀ + I_k₀` maximal.
    pub witness: Option<(usize, usize)>,
    /// Pairs that are neither comaximal nor the witness.
    pub offending_pairs: Vec<(usize, usize)>,
}

impl CrtExtension {
    pub fn ring(&self) -> &FiniteRing {
        &self.family.ring
    }

    /// `Σ Jⱼ = ∩ (Iⱼ + Jⱼ) = (R:𝓡)`, each side computed separately.
    pub fn conductor_by_formula(&self) -> Result<Ideal> {
        let sum = self.family.complement_sum();
        let inter = self.family.local_intersection();
        let direct = conductor(&self.extension);
        if sum != inter || sum != direct {
            return Err(Error::FormulaViolation(format!(
                "ΣJ = {:?}, ∩(I+J) = {:?}, conductor = {:?}",
                sum, inter, direct
            )));
        }
        Ok(direct)
    }

    /// For `n > 2`: exactly one pair `I_j + I_k` is maximal and all other
    /// pairs are comaximal.
    pub fn is_minimal_crt(&self) -> Result<CriterionVerdict> {
        let n = self.family.len();
        if n <= 2 {
            return Err(Error::Precondition(
                "pairwise criterion needs more than two ideals; use is_minimal_crt2".into(),
            ));
        }
        let ideals = &self.family.ideals;
        let mut witness = None;
        let mut offending = Vec::new();
        for j in 0..n {
            for k in j + 1..n {
                let s = ideals[j].sum(&ideals[k]);
                if s.is_whole() {
                    continue;
                }
                if witness.is_none() && is_maximal(&s) {
                    witness = Some((j, k));
                } else {
                    offending.push((j, k));
                }
            }
        }
        Ok(CriterionVerdict {
            minimal: witness.is_some() && offending.is_empty(),
            witness,
            offending_pairs: offending,
        })
    }

    /// Two ideals: minimal iff `I + J` is maximal (the intersection is zero
    /// by construction).
    pub fn is_minimal_crt2(&self) -> Result<bool> {
        if self.family.len() != 2 {
            return Err(Error::Precondition("exactly two ideals required".into()));
        }
        let f = &self.family;
        let i = &f.ideals[0];
        let j = &f.ideals[1];
        Ok(i.intersection(j).is_zero() && is_maximal(&i.sum(j)))
    }

    /// `Iⱼ + ∩_{k≠j} I_k = ∩_{k≠j} (Iⱼ + I_k)` for each `j`.
    pub fn weak_crt_check(&self) -> Vec<bool> {
        let f = &self.family;
        (0..f.len())
            .map(|j| {
                let lhs = f.ideals[j].sum(&f.complements[j]);
                let rhs = intersect_all(
                    &f.ring,
                    f.ideals
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, i)| i.sum(&f.ideals[j]))
                        .collect::<Vec<_>>()
                        .iter(),
                );
                lhs == rhs
            })
            .collect()
    }

    /// `R/C ⊆ ∏ R/(Iⱼ + Jⱼ)` with `C = ΣJⱼ`, dropping factors where
    /// `Iⱼ + Jⱼ = R`.
    pub fn reduce_to_zero_conductor(&self) -> Result<Reduction> {
        let f = &self.family;
        let c = f.complement_sum();
        if c.is_whole() {
            return Ok(Reduction::Isomorphism);
        }
        let q = quotient(&f.ring, &c)?;
        let mut kept = Vec::new();
        let mut ideals = Vec::new();
        for (j, (i, jj)) in f.ideals.iter().zip(&f.complements).enumerate() {
            let s = i.sum(jj);
            if !s.is_whole() {
                kept.push(j);
                ideals.push(Ideal::from_set_unchecked(&q.ring, q.projection.map_set(s.set())));
            }
        }
        if ideals.len() < 2 {
            return Ok(Reduction::Isomorphism);
        }
        Ok(Reduction::Reduced {
            crt: Box::new(make_crt(&q.ring, &ideals)?),
            kept,
        })
    }

    /// For local `R` with maximal ideal `M` and zero conductor: `T = R + M𝓡`
    /// equals `⁺R` and `(R:T) = (0:M)`.
    pub fn seminormalization_of_crt(&self) -> Result<CrtSeminormalization> {
        let r = self.ring();
        let m = is_local(r).ok_or_else(|| Error::Precondition("base ring is not local".into()))?;
        if !self.conductor_by_formula()?.is_zero() {
            return Err(Error::Precondition("conductor is not zero".into()));
        }
        let ext = &self.extension;
        let s = ext.top();
        let mut span = Span::from_subgroup(ext.image().clone());
        for a in m.set().iter() {
            let x = ext.embed().apply(a);
            for y in s.elements() {
                span.extend(s, s.mul(x, y));
            }
        }
        let t = span.set;
        let fixpoint = seminormalization(ext);
        if t != fixpoint {
            return Err(Error::FormulaViolation(format!(
                "R + M𝓡 has {} elements, seminormalization has {}",
                t.len(),
                fixpoint.len()
            )));
        }
        let cond = conductor(&ext.up_to(&t)?.ext);
        let ann = colon(&Ideal::zero(r), &m);
        if cond != ann {
            return Err(Error::FormulaViolation(format!(
                "(R:T) = {:?} but (0:M) = {:?}",
                cond, ann
            )));
        }
        Ok(CrtSeminormalization {
            t,
            conductor: cond,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring_order": self.ring().order(),
            "ideals": self.family.ideals.iter().map(|i| i.elements()).collect::<Vec<_>>(),
            "complements": self.family.complements.iter().map(|i| i.elements()).collect::<Vec<_>>(),
            "product_order": self.product.ring.order(),
            "notice": self.notice,
        })
    }
}

#[derive(Clone, Debug)]
pub enum Reduction {
    /// `C = R`, or at most one factor survives: `R/C ≅ ∏`.
    Isomorphism,
    Reduced {
        crt: Box<CrtExtension>,
        /// Original positions of the surviving ideals.
        kept: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtSeminormalization {
    /// `R + M𝓡`.
    pub t: ElemSet,
    /// `(R:T) = (0:M)`.
    pub conductor: Ideal,
}

fn small_rings() -> Result<Vec<FiniteRing>> {
    let mut out = Vec::new();
    for n in 2..=64 {
        out.push(make_zmod(n)?);
    }
    let f2 = make_gf(2, 1)?;
    let f3 = make_gf(3, 1)?;
    let f4 = make_gf(2, 2)?;
    let f5 = make_gf(5, 1)?;
    for fs in [
        vec![f2.clone(), f2.clone()],
        vec![f2.clone(), f3.clone()],
        vec![f3.clone(), f3.clone()],
        vec![f2.clone(), f2.clone(), f2.clone()],
        vec![f4.clone(), f2.clone()],
        vec![f2.clone(), f5.clone()],
        vec![f4.clone(), f4.clone()],
        vec![f2.clone(), f2.clone(), f3.clone()],
    ] {
        out.push(product(&fs)?.ring);
    }
    Ok(out)
}

/// Deterministic pseudo-random families over `Z/n` (`n ≤ 64`) and products
/// of small fields, with `|𝓡| ≤ max_top`. Two of every three families have
/// three or four ideals.
pub fn random_families(seed: u64, count: usize, max_top: usize) -> Result<Vec<CrtExtension>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rings = small_rings()?;
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 100 * count + 1000 {
            return Err(Error::Bound("could not generate enough families".into()));
        }
        let ring = rings.choose(&mut rng).expect("nonempty");
        let proper: Vec<Ideal> = all_ideals(ring)?
            .into_iter()
            .filter(|i| !i.is_whole())
            .collect();
        let width = if out.len() % 3 == 0 {
            2
        } else {
            rng.gen_range(3..=4)
        };
        let ideals: Vec<Ideal> = (0..width)
            .map(|_| proper.choose(&mut rng).expect("a proper ideal exists").clone())
            .collect();
        let top: usize = ideals.iter().map(|i| i.index()).product();
        if top > max_top {
            continue;
        }
        out.push(make_crt(ring, &ideals)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::intermediate_algebras;

    fn z12(gens: &[usize]) -> CrtExtension {
        let r = make_zmod(12).unwrap();
        let g: Vec<Vec<usize>> = gens.iter().map(|&x| vec![x]).collect();
        make_crt_from_generators(&r, &g).unwrap()
    }

    #[test]
    fn coprime_pair_is_an_isomorphism() {
        let r = make_zmod(6).unwrap();
        let c = make_crt_from_generators(&r, &[vec![2], vec![3]]).unwrap();
        assert_eq!(intermediate_algebras(&c.extension).unwrap().count(), 1);
        assert!(c.conductor_by_formula().unwrap().is_whole());
        assert!(matches!(c.reduce_to_zero_conductor().unwrap(), Reduction::Isomorphism));
    }

    #[test]
    fn diagonal_family() {
        let r = make_zmod(4).unwrap();
        let c = make_crt_from_generators(&r, &[vec![], vec![]]).unwrap();
        assert_eq!(c.product.ring.order(), 16);
        assert!(c.conductor_by_formula().unwrap().is_zero());
        assert!(c.is_minimal_crt().is_err());
        assert!(!c.is_minimal_crt2().unwrap());
        let t = c.seminormalization_of_crt().unwrap();
        assert_eq!(t.t.len(), 8);
        assert_eq!(t.conductor.elements(), vec![0, 2]);
    }

    #[test]
    fn z8_seminormalization_conductor() {
        let r = make_zmod(8).unwrap();
        let c = make_crt_from_generators(&r, &[vec![], vec![]]).unwrap();
        let t = c.seminormalization_of_crt().unwrap();
        assert_eq!(t.conductor.elements(), vec![0, 4]);
    }

    #[test]
    fn z12_families() {
        let c = z12(&[4, 3, 3]);
        assert!(c.notice.is_none());
        let orders: Vec<usize> = c.product.factors.iter().map(|f| f.order()).collect();
        assert_eq!(orders, vec![4, 3, 3]);
        let v = c.is_minimal_crt().unwrap();
        assert!(v.minimal);
        assert_eq!(v.witness, Some((1, 2)));
        assert_eq!(intermediate_algebras(&c.extension).unwrap().count(), 2);
        assert!(c.weak_crt_check().iter().all(|&b| b));
        let cond = c.conductor_by_formula().unwrap();
        assert_eq!(cond, ideal_generated(c.ring(), &[3]));
        match c.reduce_to_zero_conductor().unwrap() {
            Reduction::Reduced { crt, kept } => {
                assert_eq!(kept, vec![1, 2]);
                assert_eq!(crt.ring().order(), 3);
                assert!(crt.conductor_by_formula().unwrap().is_zero());
                assert_eq!(intermediate_algebras(&crt.extension).unwrap().count(), 2);
            }
            Reduction::Isomorphism => panic!("expected a reduction"),
        }

        let c = z12(&[4, 3, 6]);
        let v = c.is_minimal_crt().unwrap();
        assert!(!v.minimal);
        assert_eq!(v.offending_pairs.len(), 1);
        assert_ne!(intermediate_algebras(&c.extension).unwrap().count(), 2);
    }

    #[test]
    fn two_ideal_test() {
        let r = make_zmod(9).unwrap();
        let c = make_crt_from_generators(&r, &[vec![3], vec![]]).unwrap();
        assert!(c.is_minimal_crt2().unwrap());
        assert_eq!(intermediate_algebras(&c.extension).unwrap().count(), 2);
    }

    #[test]
    fn normalisation_and_errors() {
        let r = make_zmod(12).unwrap();
        let c = make_crt_from_generators(&r, &[vec![2], vec![2]]).unwrap();
        assert!(c.notice.is_some());
        assert_eq!(c.ring().order(), 2);
        assert!(matches!(
            make_crt_from_generators(&r, &[vec![1], vec![2]]),
            Err(Error::InvalidFamily(_))
        ));
        assert!(matches!(
            make_crt_from_generators(&r, &[vec![2]]),
            Err(Error::InvalidFamily(_))
        ));
    }

    #[test]
    fn random_families_are_deterministic() {
        let a = random_families(7, 12, 256).unwrap();
        let b = random_families(7, 12, 256).unwrap();
        assert_eq!(a.len(), 12);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.to_json(), y.to_json());
            assert!(x.product.ring.order() <= 256);
        }
        assert!(a.iter().filter(|c| c.family.len() > 2).count() >= 6);
    }
}
