//! Minimal extensions: the inert / decomposed / ramified classification,
//! the special ramified case, pointwise minimality, and the bijection
//! between `[R, R+Rt]` and ideals of `R/(R:S)`.

use serde_json::{json, Value};

use crate::elemset::{ElemSet, Span};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::ideal::{all_ideals, Ideal};
use crate::lattice::{intermediate_algebras, LatticeReport};
use crate::predicates::is_integral;
use crate::ring::is_local;
use crate::spectrum::{conductor, conductor_in_top, extend_ideal, is_maximal, spectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinimalKind {
    Inert,
    Decomposed,
    Ramified,
    NotMinimal,
}

impl MinimalKind {
    pub fn name(self) -> &'static str {
        match self {
            MinimalKind::Inert => "inert",
            MinimalKind::Decomposed => "decomposed",
            MinimalKind::Ramified => "ramified",
            MinimalKind::NotMinimal => "not_minimal",
        }
    }
}

/// Ideals of `S` that certify the case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// `S/M` is a field of degree `degree` over `R/M`, `degree` prime.
    Inert { degree: u32 },
    /// `M = M₁ ∩ M₂` with both residue maps bijective.
    Decomposed { m1: Ideal, m2: Ideal },
    /// `M'² ⊆ M ⊂ M'`, `S/M` of dimension 2 over `R/M`.
    Ramified { m_prime: Ideal },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalClassification {
    pub kind: MinimalKind,
    /// `M = (R:S)`, an ideal of `R`; present for minimal extensions.
    pub crucial: Option<Ideal>,
    pub witness: Witness,
}

impl MinimalClassification {
    pub fn to_json(&self) -> Value {
        let witness = match &self.witness {
            Witness::None => Value::Null,
            Witness::Inert { degree } => json!({ "residue_degree": degree }),
            Witness::Decomposed { m1, m2 } => {
                json!({ "m1": m1.elements(), "m2": m2.elements() })
            }
            Witness::Ramified { m_prime } => json!({ "m_prime": m_prime.elements() }),
        };
        json!({
            "kind": self.kind.name(),
            "crucial_ideal": self.crucial.as_ref().map(|c| c.elements()),
            "witness": witness,
        })
    }
}

pub fn is_minimal(ext: &Extension) -> Result<bool> {
    Ok(intermediate_algebras(ext)?.count() == 2)
}

pub fn classify_minimal(ext: &Extension) -> Result<MinimalClassification> {
    let lattice = intermediate_algebras(ext)?;
    classify_minimal_in(ext, &lattice)
}

/// `Some(d)` when `big = small^d`.
fn log_exact(big: usize, small: usize) -> Option<u32> {
    let mut d = 0;
    let mut x = 1usize;
    while x < big {
        x *= small;
        d += 1;
    }
    (x == big).then_some(d)
}

fn is_prime_u32(d: u32) -> bool {
    d >= 2 && (2..d).take_while(|k| k * k <= d).all(|k| d % k != 0)
}

/// Classification against an already computed lattice of `ext`.
pub fn classify_minimal_in(
    ext: &Extension,
    lattice: &LatticeReport,
) -> Result<MinimalClassification> {
    if lattice.count() != 2 {
        return Ok(MinimalClassification {
            kind: MinimalKind::NotMinimal,
            crucial: None,
            witness: Witness::None,
        });
    }
    if !is_integral(ext) {
        return Err(Error::UnreachableCase(
            "non-integral minimal extension of finite rings".into(),
        ));
    }
    let m = conductor(ext);
    if !is_maximal(&m) {
        return Err(Error::ClassificationFailure(format!(
            "conductor {:?} is not a maximal ideal",
            m
        )));
    }
    let q = m.index();
    let ms = conductor_in_top(ext);
    let s_max = spectrum(ext.top())?.maximals;
    let mut matches = Vec::new();

    if s_max.contains(&ms) {
        if let Some(d) = log_exact(ms.index(), q) {
            if is_prime_u32(d) {
                matches.push((MinimalKind::Inert, Witness::Inert { degree: d }));
            }
        }
    }
    for (i, m1) in s_max.iter().enumerate() {
        for m2 in &s_max[i + 1..] {
            if m1.intersection(m2) == ms && m1.index() == q && m2.index() == q {
                matches.push((
                    MinimalKind::Decomposed,
                    Witness::Decomposed {
                        m1: m1.clone(),
                        m2: m2.clone(),
                    },
                ));
            }
        }
    }
    for mp in &s_max {
        if ms.is_subset(mp)
            && ms != *mp
            && mp.product(mp).is_subset(&ms)
            && ms.index() == q * q
            && mp.index() == q
        {
            matches.push((
                MinimalKind::Ramified,
                Witness::Ramified {
                    m_prime: mp.clone(),
                },
            ));
        }
    }
    match matches.len() {
        1 => {
            let (kind, witness) = matches.pop().unwrap();
            Ok(MinimalClassification {
                kind,
                crucial: Some(m),
                witness,
            })
        }
        0 => Err(Error::ClassificationFailure(
            "minimal extension matches none of the three cases".into(),
        )),
        n => Err(Error::ClassificationFailure(format!(
            "minimal extension matches {n} cases"
        ))),
    }
}

/// Minimal ramified with `M² = MN = 0` and `N² = M` for the maximal ideals
/// `M` of `R` and `N` of `S`, products taken in `S`.
pub fn is_special_minimal_ramified(ext: &Extension) -> Result<bool> {
    let m = is_local(ext.base()).ok_or(Error::NotLocal)?;
    let n = is_local(ext.top()).ok_or(Error::NotLocal)?;
    if classify_minimal(ext)?.kind != MinimalKind::Ramified {
        return Ok(false);
    }
    let ms = extend_ideal(ext, &m);
    Ok(ms.product(&ms).is_zero() && ms.product(&n).is_zero() && n.product(&n) == ms)
}

/// `R ⊂ R[t]` is minimal for every `t ∈ S` outside `R`.
pub fn is_pointwise_minimal(ext: &Extension) -> Result<bool> {
    Ok(is_pointwise_minimal_in(ext, &intermediate_algebras(ext)?))
}

pub(crate) fn is_pointwise_minimal_in(ext: &Extension, lattice: &LatticeReport) -> bool {
    let mut done = ElemSet::empty(ext.top().order());
    for t in ext.top().elements() {
        if ext.image().contains(t) || done.contains(t) {
            continue;
        }
        let rt = ext.adjoin(ext.image(), t);
        match lattice.index_of(&rt) {
            Some(i) if lattice.covers(lattice.bottom(), i) => {}
            _ => return false,
        }
        done.insert(t);
    }
    true
}

/// The pairing `J ↦ R + Jt` between ideals `J ⊇ (R:S)` of `R` and `[R,S]`
/// when `S = R + Rt`.
#[derive(Clone, Debug)]
pub struct GilbertBijection {
    pub generator: usize,
    pub conductor: Ideal,
    pub pairs: Vec<(Ideal, ElemSet)>,
}

pub fn gilbert_bijection(ext: &Extension) -> Result<GilbertBijection> {
    let full = ext.full();
    let t = ext
        .top()
        .elements()
        .find(|&t| ext.module_extend(ext.image(), t) == full)
        .ok_or_else(|| Error::NotApplicable("S is not of the form R + Rt".into()))?;
    let c = conductor(ext);
    let lattice = intermediate_algebras(ext)?;
    let mut pairs = Vec::new();
    for j in all_ideals(ext.base())?.into_iter().filter(|j| c.is_subset(j)) {
        let mut span = Span::from_subgroup(ext.image().clone());
        for a in j.set().iter() {
            span.extend(ext.top(), ext.top().mul(ext.embed().apply(a), t));
        }
        pairs.push((j, span.set));
    }
    let mut images: Vec<&ElemSet> = pairs.iter().map(|(_, s)| s).collect();
    images.sort();
    images.dedup();
    let onto = pairs.iter().all(|(_, s)| lattice.contains(s));
    if images.len() != pairs.len() || !onto || pairs.len() != lattice.count() {
        return Err(Error::FormulaViolation(format!(
            "{} ideals over the conductor, {} intermediate algebras, {} distinct images",
            pairs.len(),
            lattice.count(),
            images.len()
        )));
    }
    Ok(GilbertBijection {
        generator: t,
        conductor: c,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::ring::{make_gf, make_zmod, poly_quotient, RingHom};

    fn gf_ext(p: u64, a: u32, b: u32) -> Extension {
        let small = make_gf(p, a).unwrap();
        let big = make_gf(p, b).unwrap();
        // brute-force search for an injective hom
        let n = small.order();
        let m = big.order();
        let mut map = vec![0; n];
        fn search(
            i: usize,
            map: &mut Vec<usize>,
            small: &crate::ring::FiniteRing,
            big: &crate::ring::FiniteRing,
            m: usize,
        ) -> Option<RingHom> {
            if i == map.len() {
                return RingHom::new(small.clone(), big.clone(), map.clone()).ok();
            }
            for v in 0..m {
                map[i] = v;
                if let Some(h) = search(i + 1, map, small, big, m) {
                    return Some(h);
                }
            }
            None
        }
        let h = search(0, &mut map, &small, &big, m).unwrap();
        Extension::new(h).unwrap()
    }

    fn dual(k: &crate::ring::FiniteRing) -> Extension {
        let q = poly_quotient(k, &Poly::new(k, vec![0, 0, 1]), &[]).unwrap();
        Extension::new(q.embedding).unwrap()
    }

    #[test]
    fn three_kinds() {
        let inert = classify_minimal(&gf_ext(2, 1, 2)).unwrap();
        assert_eq!(inert.kind, MinimalKind::Inert);
        assert!(inert.crucial.unwrap().is_zero());
        assert_eq!(inert.witness, Witness::Inert { degree: 2 });

        let f2 = make_gf(2, 1).unwrap();
        let dec = classify_minimal(&Extension::diagonal(&f2, 2).unwrap()).unwrap();
        assert_eq!(dec.kind, MinimalKind::Decomposed);
        assert!(dec.crucial.unwrap().is_zero());

        let ram = classify_minimal(&dual(&f2)).unwrap();
        assert_eq!(ram.kind, MinimalKind::Ramified);
        assert!(ram.crucial.unwrap().is_zero());

        let not = classify_minimal(&Extension::diagonal(&f2, 3).unwrap()).unwrap();
        assert_eq!(not.kind, MinimalKind::NotMinimal);
        assert!(not.crucial.is_none());
    }

    #[test]
    fn degree_three_residue_extension_is_inert() {
        let c = classify_minimal(&gf_ext(2, 1, 3)).unwrap();
        assert_eq!(c.witness, Witness::Inert { degree: 3 });
    }

    #[test]
    fn special_ramified() {
        let f2 = make_gf(2, 1).unwrap();
        assert!(is_special_minimal_ramified(&dual(&f2)).unwrap());
        let z6 = make_zmod(6).unwrap();
        assert_eq!(
            is_special_minimal_ramified(&Extension::identity(&z6)),
            Err(Error::NotLocal)
        );
        // Z/8 ⊆ Z/8[ε] is not even minimal
        let z8 = make_zmod(8).unwrap();
        assert!(!is_special_minimal_ramified(&dual(&z8)).unwrap());
    }

    #[test]
    fn pointwise_minimality() {
        let f4 = make_gf(2, 2).unwrap();
        let ext = Extension::diagonal(&f4, 2).unwrap();
        assert!(is_pointwise_minimal(&ext).unwrap());
        assert!(is_minimal(&ext).unwrap());
        let f2 = make_gf(2, 1).unwrap();
        let ext = Extension::diagonal(&f2, 3).unwrap();
        assert!(is_pointwise_minimal(&ext).unwrap());
        assert!(!is_minimal(&ext).unwrap());
        let q = poly_quotient(&f2, &Poly::new(&f2, vec![0, 0, 0, 1]), &[]).unwrap();
        let ext = Extension::new(q.embedding).unwrap();
        assert!(!is_pointwise_minimal(&ext).unwrap());
    }

    #[test]
    fn gilbert_pairings() {
        let z4 = make_zmod(4).unwrap();
        let g = gilbert_bijection(&Extension::diagonal(&z4, 2).unwrap()).unwrap();
        assert_eq!(g.pairs.len(), 3);
        let f2 = make_gf(2, 1).unwrap();
        assert_eq!(gilbert_bijection(&dual(&f2)).unwrap().pairs.len(), 2);
        let f3 = make_gf(3, 1).unwrap();
        assert_eq!(
            gilbert_bijection(&Extension::diagonal(&f3, 2).unwrap())
                .unwrap()
                .pairs
                .len(),
            2
        );
        let err = gilbert_bijection(&Extension::diagonal(&f2, 3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotApplicable(_)));
    }
}
