//! Units, idempotents, local factors and the SPIR test.

use super::construct::{product, ProductRing};
use super::{FiniteRing, RingHom};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

pub fn units(ring: &FiniteRing) -> Vec<usize> {
    ring.elements()
        .filter(|&a| ring.elements().any(|b| ring.mul(a, b) == ring.one()))
        .collect()
}

pub fn idempotents(ring: &FiniteRing) -> Vec<usize> {
    ring.elements().filter(|&e| ring.mul(e, e) == e).collect()
}

/// Only `0` and `1` are idempotent.
pub fn is_connected(ring: &FiniteRing) -> bool {
    idempotents(ring).len() == 2
}

pub fn is_field(ring: &FiniteRing) -> bool {
    units(ring).len() == ring.order() - 1
}

/// The unique maximal ideal, when the non-units form an ideal.
pub fn is_local(ring: &FiniteRing) -> Option<Ideal> {
    let u = ElemSet::from_indices(ring.order(), units(ring));
    let non: Vec<usize> = ring.elements().filter(|&a| !u.contains(a)).collect();
    for &a in &non {
        for &b in &non {
            if u.contains(ring.add(a, b)) {
                return None;
            }
        }
    }
    Some(Ideal::from_set_unchecked(
        ring,
        ElemSet::from_indices(ring.order(), non),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpirWitness {
    /// Least index `t` with `Rt = M`.
    pub generator: usize,
    /// Least `p` with `t^p = 0`.
    pub index: usize,
}

/// Witness that `R` is local, not a field, with principal maximal ideal.
pub fn is_spir(ring: &FiniteRing) -> Option<SpirWitness> {
    let m = is_local(ring)?;
    if m.is_zero() {
        return None;
    }
    let t = m
        .elements()
        .into_iter()
        .find(|&t| Ideal::principal(ring, t) == m)?;
    let mut p = 1;
    let mut x = t;
    while x != ring.zero() {
        x = ring.mul(x, t);
        p += 1;
    }
    Some(SpirWitness {
        generator: t,
        index: p,
    })
}

/// Least `n` with `M^n = 0` for the maximal ideal `M` of a local ring.
pub fn nilpotency_index(ring: &FiniteRing) -> Result<usize> {
    let m = is_local(ring).ok_or(Error::NotLocal)?;
    let mut n = 1;
    let mut p = m.clone();
    while !p.is_zero() {
        p = p.product(&m);
        n += 1;
    }
    Ok(n)
}

/// The local ring `eR` with identity `e`.
#[derive(Clone, Debug)]
pub struct LocalFactor {
    pub ring: FiniteRing,
    /// `r ↦ er`.
    pub projection: RingHom,
    pub idempotent: usize,
}

#[derive(Clone, Debug)]
pub struct LocalDecomposition {
    pub factors: Vec<LocalFactor>,
    pub product: ProductRing,
    /// `R → ∏ eR`, a ring isomorphism.
    pub iso: RingHom,
}

fn primitive_idempotents(ring: &FiniteRing) -> Vec<usize> {
    let ids = idempotents(ring);
    ids.iter()
        .copied()
        .filter(|&e| e != ring.zero())
        .filter(|&e| {
            ids.iter()
                .all(|&f| f == ring.zero() || f == e || ring.mul(e, f) != f)
        })
        .collect()
}

/// Splits `R` along its primitive idempotents, ordered by index.
pub fn local_decomposition(ring: &FiniteRing) -> Result<LocalDecomposition> {
    let mut factors = Vec::new();
    for e in primitive_idempotents(ring) {
        let members =
            ElemSet::from_indices(ring.order(), ring.elements().map(|r| ring.mul(e, r))).to_vec();
        let mut pos = vec![usize::MAX; ring.order()];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let label = format!("{}e{}", ring.label(), e);
        let local = FiniteRing::build(
            members.len(),
            pos[ring.zero()],
            pos[e],
            label,
            |a, b| pos[ring.add(members[a], members[b])],
            |a, b| pos[ring.mul(members[a], members[b])],
        );
        let map = ring.elements().map(|r| pos[ring.mul(e, r)]).collect();
        let projection = RingHom::new_unchecked(ring.clone(), local.clone(), map)?;
        factors.push(LocalFactor {
            ring: local,
            projection,
            idempotent: e,
        });
    }
    let rings: Vec<FiniteRing> = factors.iter().map(|f| f.ring.clone()).collect();
    let product = product(&rings)?;
    let homs: Vec<RingHom> = factors.iter().map(|f| f.projection.clone()).collect();
    let iso = product.induced(&homs)?;
    if !(iso.is_injective() && iso.is_surjective()) {
        return Err(Error::FormulaViolation(
            "ring is not the product of its local factors".into(),
        ));
    }
    Ok(LocalDecomposition {
        factors,
        product,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_gf, make_zmod, poly_quotient};
    use crate::poly::Poly;

    #[test]
    fn idempotents_of_small_rings() {
        let z4 = make_zmod(4).unwrap();
        assert_eq!(idempotents(&z4), vec![0, 1]);
        assert!(is_connected(&z4));
        let z6 = make_zmod(6).unwrap();
        assert_eq!(idempotents(&z6), vec![0, 1, 3, 4]);
        assert!(!is_connected(&z6));
        assert_eq!(idempotents(&make_gf(3, 2).unwrap()).len(), 2);
    }

    #[test]
    fn local_rings_and_spirs() {
        assert_eq!(
            is_spir(&make_zmod(4).unwrap()),
            Some(SpirWitness {
                generator: 2,
                index: 2
            })
        );
        assert_eq!(
            is_spir(&make_zmod(8).unwrap()),
            Some(SpirWitness {
                generator: 2,
                index: 3
            })
        );
        assert_eq!(is_spir(&make_gf(2, 2).unwrap()), None);
        assert!(is_local(&make_zmod(6).unwrap()).is_none());
        assert!(is_field(&make_zmod(7).unwrap()));
        assert!(!is_field(&make_zmod(9).unwrap()));
        // F2[x,y]/(x,y)^2 is local but its maximal ideal is not principal
        let f2 = make_zmod(2).unwrap();
        let a = poly_quotient(&f2, &Poly::new(&f2, vec![0, 0, 1]), &[]).unwrap();
        let x = a.var;
        let b = poly_quotient(
            &a.ring,
            &Poly::new(&a.ring, vec![0, 0, 1]),
            &[Poly::new(&a.ring, vec![0, x])],
        )
        .unwrap();
        assert_eq!(b.ring.order(), 8);
        assert!(is_local(&b.ring).is_some());
        assert!(is_spir(&b.ring).is_none());
    }

    #[test]
    fn nilpotency() {
        assert_eq!(nilpotency_index(&make_zmod(4).unwrap()), Ok(2));
        assert_eq!(nilpotency_index(&make_gf(2, 2).unwrap()), Ok(1));
        assert_eq!(nilpotency_index(&make_zmod(27).unwrap()), Ok(3));
        assert_eq!(nilpotency_index(&make_zmod(6).unwrap()), Err(Error::NotLocal));
    }

    #[test]
    fn decomposition_of_z12() {
        let z12 = make_zmod(12).unwrap();
        let d = local_decomposition(&z12).unwrap();
        let orders: Vec<usize> = d.factors.iter().map(|f| f.ring.order()).collect();
        // 4·Z/12 = {0,4,8} has three elements, 9·Z/12 has four
        assert_eq!(orders, vec![3, 4]);
        assert_eq!(
            d.factors.iter().map(|f| f.idempotent).collect::<Vec<_>>(),
            vec![4, 9]
        );
        d.iso.check().unwrap();
        let f = make_gf(2, 2).unwrap();
        assert_eq!(local_decomposition(&f).unwrap().factors.len(), 1);
    }

    #[test]
    fn decomposition_matches_factorisation() {
        for n in 2..=64usize {
            let mut m = n;
            let mut primes = 0;
            let mut p = 2;
            while m > 1 {
                if m % p == 0 {
                    primes += 1;
                    while m % p == 0 {
                        m /= p;
                    }
                }
                p += 1;
            }
            let d = local_decomposition(&make_zmod(n).unwrap()).unwrap();
            assert_eq!(d.factors.len(), primes, "n={n}");
            for f in &d.factors {
                assert!(is_local(&f.ring).is_some());
            }
        }
    }
}
