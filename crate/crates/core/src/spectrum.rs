//! Prime and maximal ideals, conductors and supports.

use crate::elemset::ElemSet;
use crate::error::Result;
use crate::extension::Extension;
use crate::ideal::{all_ideals, Ideal};
use crate::ring::{is_local, local_decomposition, FiniteRing};

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub primes: Vec<Ideal>,
    pub maximals: Vec<Ideal>,
    pub nilradical: Ideal,
    pub jacobson: Ideal,
}

impl SpectrumReport {
    /// `V(I)`: primes containing `I`.
    pub fn v(&self, i: &Ideal) -> Vec<Ideal> {
        self.primes
            .iter()
            .filter(|p| i.is_subset(p))
            .cloned()
            .collect()
    }
}

/// `P ≠ R` and `ab ∈ P` forces `a ∈ P` or `b ∈ P`.
pub fn is_prime(p: &Ideal) -> bool {
    let ring = p.ring();
    if p.is_whole() {
        return false;
    }
    let outside: Vec<usize> = ring.elements().filter(|&a| !p.contains(a)).collect();
    outside
        .iter()
        .all(|&a| outside.iter().all(|&b| !p.contains(ring.mul(a, b))))
}

/// `R/M` is a field: every element outside `M` is invertible modulo `M`.
pub fn is_maximal(m: &Ideal) -> bool {
    let ring = m.ring();
    if m.is_whole() {
        return false;
    }
    ring.elements().filter(|&a| !m.contains(a)).all(|a| {
        ring.elements()
            .any(|b| m.contains(ring.sub(ring.mul(a, b), ring.one())))
    })
}

pub fn spectrum(ring: &FiniteRing) -> Result<SpectrumReport> {
    let ideals = all_ideals(ring)?;
    let primes: Vec<Ideal> = ideals.iter().filter(|i| is_prime(i)).cloned().collect();
    let maximals: Vec<Ideal> = primes.iter().filter(|i| is_maximal(i)).cloned().collect();
    let meet = |list: &[Ideal]| {
        list.iter()
            .fold(Ideal::whole(ring), |acc, p| acc.intersection(p))
    };
    Ok(SpectrumReport {
        nilradical: meet(&primes),
        jacobson: meet(&maximals),
        primes,
        maximals,
    })
}

/// Maximal ideals only, one per local factor, without enumerating ideals.
pub fn maximal_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    let d = local_decomposition(ring)?;
    let mut out = Vec::new();
    for f in &d.factors {
        let m = is_local(&f.ring).expect("factors are local");
        out.push(Ideal::from_set_unchecked(ring, f.projection.preimage(m.set())));
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

pub fn nilpotents(ring: &FiniteRing) -> ElemSet {
    ElemSet::from_indices(
        ring.order(),
        ring.elements()
            .filter(|&a| ring.pow(a, ring.order() as u64) == ring.zero()),
    )
}

/// `(R:S) = {r ∈ R : rS ⊆ R}` as an ideal of `R`.
pub fn conductor(ext: &Extension) -> Ideal {
    let s = ext.top();
    let image = ext.image();
    let set = ElemSet::from_indices(
        ext.base().order(),
        ext.base().elements().filter(|&r| {
            let x = ext.embed().apply(r);
            s.elements().all(|y| image.contains(s.mul(x, y)))
        }),
    );
    Ideal::from_set_unchecked(ext.base(), set)
}

/// The conductor as a subset of `S`; it is an ideal of `S`.
pub fn conductor_in_top(ext: &Extension) -> Ideal {
    let c = conductor(ext);
    Ideal::from_set_unchecked(ext.top(), ext.embed().map_set(c.set()))
}

/// Pulls an ideal of `S` back to `R`.
pub fn contract(ext: &Extension, q: &Ideal) -> Ideal {
    Ideal::from_set_unchecked(ext.base(), ext.embed().preimage(q.set()))
}

/// Ideal of `S` generated by the image of an ideal of `R`.
pub fn extend_ideal(ext: &Extension, i: &Ideal) -> Ideal {
    let gens: Vec<usize> = i.set().iter().map(|a| ext.embed().apply(a)).collect();
    crate::ideal::ideal_generated(ext.top(), &gens)
}

/// Maximal ideals `M` of `R` where `R_M ≠ S_M`. The localization at `M` is
/// the local factor `eR` with `e ∉ M`, and `S_M = φ(e)S`.
pub fn support_of_extension(ext: &Extension) -> Result<Vec<Ideal>> {
    let r = ext.base();
    let s = ext.top();
    let d = local_decomposition(r)?;
    let mut out = Vec::new();
    for f in &d.factors {
        let e = ext.embed().apply(f.idempotent);
        let local_top = ElemSet::from_indices(s.order(), s.elements().map(|y| s.mul(e, y)));
        if local_top.len() > f.ring.order() {
            let m = is_local(&f.ring).expect("factors are local");
            out.push(Ideal::from_set_unchecked(r, f.projection.preimage(m.set())));
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_generated;
    use crate::poly::Poly;
    use crate::ring::{make_gf, make_zmod, poly_quotient, product, RingHom};

    #[test]
    fn spectra() {
        let z12 = make_zmod(12).unwrap();
        let sp = spectrum(&z12).unwrap();
        let maxs: Vec<Vec<usize>> = sp.maximals.iter().map(|m| m.elements()).collect();
        assert_eq!(maxs.len(), 2);
        assert!(maxs.contains(&ideal_generated(&z12, &[2]).elements()));
        assert!(maxs.contains(&ideal_generated(&z12, &[3]).elements()));
        assert_eq!(sp.primes.len(), 2);
        assert_eq!(sp.nilradical.set(), &nilpotents(&z12));
        assert_eq!(sp.nilradical.elements(), vec![0, 6]);
        assert_eq!(maximal_ideals(&z12).unwrap(), sp.maximals);

        let f4 = make_gf(2, 2).unwrap();
        let sp = spectrum(&f4).unwrap();
        assert_eq!(sp.primes.len(), 1);
        assert!(sp.primes[0].is_zero());

        let z4 = make_zmod(4).unwrap();
        let sp = spectrum(&z4).unwrap();
        assert_eq!(sp.primes, sp.maximals);
        assert_eq!(sp.primes[0].elements(), vec![0, 2]);
        assert_eq!(sp.v(&Ideal::zero(&z4)).len(), 1);
    }

    #[test]
    fn conductors() {
        let z4 = make_zmod(4).unwrap();
        let diag = Extension::diagonal(&z4, 2).unwrap();
        assert!(conductor(&diag).is_zero());
        assert!(conductor(&Extension::identity(&z4)).is_whole());
        let f2 = make_zmod(2).unwrap();
        let dual = poly_quotient(&f2, &Poly::new(&f2, vec![0, 0, 1]), &[]).unwrap();
        let ext = Extension::new(dual.embedding).unwrap();
        assert!(conductor(&ext).is_zero());
        // the conductor is the largest subset of R that is an ideal of S
        let c = conductor_in_top(&diag);
        assert!(Ideal::from_set(diag.top(), c.set().clone()).is_ok());
    }

    #[test]
    fn supports() {
        let z4 = make_zmod(4).unwrap();
        let diag = Extension::diagonal(&z4, 2).unwrap();
        let sup = support_of_extension(&diag).unwrap();
        assert_eq!(sup.len(), 1);
        assert_eq!(sup[0].elements(), vec![0, 2]);
        assert!(support_of_extension(&Extension::identity(&z4)).unwrap().is_empty());

        let z6 = make_zmod(6).unwrap();
        let z2 = make_zmod(2).unwrap();
        let pr = product(&[z6.clone(), z2.clone()]).unwrap();
        let mod2 = RingHom::new(z6.clone(), z2, (0..6).map(|k| k % 2).collect()).unwrap();
        let emb = pr.induced(&[RingHom::identity(&z6), mod2]).unwrap();
        let ext = Extension::new(emb).unwrap();
        let sup = support_of_extension(&ext).unwrap();
        assert_eq!(sup.len(), 1);
        assert_eq!(sup[0], ideal_generated(&z6, &[2]));
    }
}
