//! Ring constructors: residue rings, Galois fields, products, polynomial
//! quotients and quotients by ideals.

use super::{FiniteRing, RingHom};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{ideal_generated, Ideal};
use crate::limits::Limits;
use crate::poly::Poly;

/// The ring of integers modulo `n`, elements `0..n` in their natural order.
pub fn make_zmod(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    Limits::check_order("Z/n", n as u128)?;
    Ok(FiniteRing::build(
        n,
        0,
        1,
        format!("Z/{n}"),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    ))
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Monic polynomial of degree `deg` over `Z/p` whose lower coefficients are
/// the base-`p` digits of `m`, most significant digit on `x^(deg-1)`.
fn monic_from_index(ring: &FiniteRing, p: usize, deg: usize, mut m: usize) -> Poly {
    let mut c = vec![0; deg + 1];
    c[deg] = 1;
    for i in 0..deg {
        c[i] = m % p;
        m /= p;
    }
    Poly::new(ring, c)
}

fn is_irreducible(ring: &FiniteRing, p: usize, f: &Poly) -> bool {
    let deg = f.degree().unwrap_or(0);
    for d in 1..=deg / 2 {
        for m in 0..p.pow(d as u32) {
            let g = monic_from_index(ring, p, d, m);
            if f.rem_monic(ring, &g).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The field with `p^k` elements, built as `Z/p[x]/(f)` for the first monic
/// irreducible `f` of degree `k` (coefficients read from `x^(k-1)` down).
pub fn make_gf(p: u64, k: u32) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::InvalidCharacteristic(p));
    }
    if k == 0 {
        return Err(Error::Precondition("extension degree must be positive".into()));
    }
    let size = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    Limits::check_order("GF(p^k)", size)?;
    let base = make_zmod(p as usize)?;
    let (p, k) = (p as usize, k as usize);
    let f = (0..p.pow(k as u32))
        .map(|m| monic_from_index(&base, p, k, m))
        .find(|f| is_irreducible(&base, p, f))
        .expect("irreducible polynomials exist in every degree");
    let q = poly_quotient(&base, &f, &[])?;
    let label = if k == 1 {
        format!("GF({p})")
    } else {
        format!("GF({p}^{k})")
    };
    Ok(q.ring.relabeled(label))
}

/// A product ring with its projections.
#[derive(Clone, Debug)]
pub struct ProductRing {
    pub ring: FiniteRing,
    pub factors: Vec<FiniteRing>,
    pub projections: Vec<RingHom>,
    /// `r ↦ (r, …, r)`, present when all factors have identical tables.
    pub diagonal: Option<RingHom>,
    weights: Vec<usize>,
}

impl ProductRing {
    /// Index of the tuple `(a_1, …, a_n)`; the first component is the most
    /// significant digit.
    pub fn encode(&self, components: &[usize]) -> usize {
        components
            .iter()
            .zip(&self.weights)
            .map(|(&a, &w)| a * w)
            .sum()
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        decode(&self.factors, &self.weights, x)
    }

    pub fn component(&self, x: usize, i: usize) -> usize {
        (x / self.weights[i]) % self.factors[i].order()
    }

    /// The map `r ↦ (h_1(r), …, h_n(r))` induced by maps out of a common
    /// source.
    pub fn induced(&self, homs: &[RingHom]) -> Result<RingHom> {
        if homs.len() != self.factors.len() {
            return Err(Error::InvalidHom("one map per factor required".into()));
        }
        let source = homs[0].source().clone();
        for (h, f) in homs.iter().zip(&self.factors) {
            if !h.source().same_tables(&source) || !h.target().same_tables(f) {
                return Err(Error::InvalidHom("maps do not match the factors".into()));
            }
        }
        let map = source
            .elements()
            .map(|r| {
                let comps: Vec<usize> = homs.iter().map(|h| h.apply(r)).collect();
                self.encode(&comps)
            })
            .collect();
        RingHom::new_unchecked(source, self.ring.clone(), map)
    }
}

fn decode(factors: &[FiniteRing], weights: &[usize], x: usize) -> Vec<usize> {
    factors
        .iter()
        .zip(weights)
        .map(|(f, &w)| (x / w) % f.order())
        .collect()
}

/// Componentwise product of the factors.
pub fn product(factors: &[FiniteRing]) -> Result<ProductRing> {
    if factors.is_empty() {
        return Err(Error::Precondition("empty product".into()));
    }
    let size = factors
        .iter()
        .try_fold(1u128, |acc, f| acc.checked_mul(f.order() as u128))
        .unwrap_or(u128::MAX);
    let order = Limits::check_order("product", size)?;
    let mut weights = vec![1; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        weights[i] = weights[i + 1] * factors[i + 1].order();
    }
    let enc = |c: &[usize]| -> usize { c.iter().zip(&weights).map(|(&a, &w)| a * w).sum() };
    let zero = enc(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    let one = enc(&factors.iter().map(|f| f.one()).collect::<Vec<_>>());
    let label = factors
        .iter()
        .map(|f| {
            if f.label().contains(" x ") {
                format!("({})", f.label())
            } else {
                f.label().to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" x ");
    let decoded: Vec<Vec<usize>> = (0..order).map(|x| decode(factors, &weights, x)).collect();
    let ring = FiniteRing::build(
        order,
        zero,
        one,
        label,
        |a, b| {
            let c: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.add(decoded[a][i], decoded[b][i]))
                .collect();
            enc(&c)
        },
        |a, b| {
            let c: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.mul(decoded[a][i], decoded[b][i]))
                .collect();
            enc(&c)
        },
    );
    let projections = factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let map = decoded.iter().map(|c| c[i]).collect();
            RingHom::new_unchecked(ring.clone(), f.clone(), map)
        })
        .collect::<Result<Vec<_>>>()?;
    let diagonal = if factors.iter().all(|f| f.same_tables(&factors[0])) {
        let base = factors[0].clone();
        let map = base
            .elements()
            .map(|r| enc(&vec![r; factors.len()]))
            .collect();
        Some(RingHom::new_unchecked(base, ring.clone(), map)?)
    } else {
        None
    };
    Ok(ProductRing {
        ring,
        factors: factors.to_vec(),
        projections,
        diagonal,
        weights,
    })
}

/// `R[x]/(monic, relations…)` with the structure map from `R`.
#[derive(Clone, Debug)]
pub struct PolyQuotient {
    pub ring: FiniteRing,
    pub embedding: RingHom,
    /// Class of the indeterminate.
    pub var: usize,
}

/// Builds `R[x]/(monic)` as a free `R`-module of rank `deg(monic)` and then
/// divides out the ideal generated by `relations`. The structure map need not
/// be injective.
pub fn poly_quotient(base: &FiniteRing, monic: &Poly, relations: &[Poly]) -> Result<PolyQuotient> {
    let d = match monic.degree() {
        None | Some(0) => {
            return Err(Error::Precondition(
                "modulus must have degree at least one".into(),
            ))
        }
        Some(d) => d,
    };
    if monic.leading() != Some(base.one()) {
        return Err(Error::NotMonic);
    }
    let n = base.order();
    let size = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    let order = Limits::check_order("polynomial quotient", size)?;

    // element index = Σ c_i n^i
    let coeffs = |mut x: usize| -> Vec<usize> {
        let mut c = vec![0; d];
        for ci in c.iter_mut() {
            *ci = x % n;
            x /= n;
        }
        c
    };
    let index = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &ci| acc * n + ci) };
    let all: Vec<Vec<usize>> = (0..order).map(coeffs).collect();

    let mut add = vec![0u16; order * order];
    for a in 0..order {
        for b in a..order {
            let c: Vec<usize> = (0..d).map(|i| base.add(all[a][i], all[b][i])).collect();
            let s = index(&c) as u16;
            add[a * order + b] = s;
            add[b * order + a] = s;
        }
    }
    // x·v, reducing x^d = -(f_0 + … + f_{d-1} x^{d-1})
    let shift: Vec<usize> = (0..order)
        .map(|v| {
            let c = &all[v];
            let top = c[d - 1];
            let s: Vec<usize> = (0..d)
                .map(|i| {
                    let lower = if i == 0 { base.zero() } else { c[i - 1] };
                    base.sub(lower, base.mul(top, monic.coeff(base, i)))
                })
                .collect();
            index(&s)
        })
        .collect();
    // scalar[r][v] = r·v
    let scalar: Vec<usize> = (0..n)
        .flat_map(|r| {
            let all = &all;
            (0..order).map(move |v| {
                let s: Vec<usize> = all[v].iter().map(|&c| base.mul(r, c)).collect();
                index(&s)
            })
        })
        .collect();
    // a·b = a_0·b + x·((a div n)·b)
    let mut mul = vec![0u16; order * order];
    for a in 0..order {
        let (low, rest) = (a % n, a / n);
        for b in 0..order {
            let head = scalar[low * order + b];
            let tail = if rest == 0 {
                0
            } else {
                shift[mul[rest * order + b] as usize]
            };
            mul[a * order + b] = add[head * order + tail];
        }
    }
    let var_poly = Poly::var(base).rem_monic(base, monic);
    let var = index(
        &(0..d)
            .map(|i| var_poly.coeff(base, i))
            .collect::<Vec<_>>(),
    );
    let label = format!(
        "{}[x]/({})",
        base.label(),
        std::iter::once(monic)
            .chain(relations)
            .map(|p| p.display(base, "x"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let free = FiniteRing::from_raw(order, 0, base.one(), label.clone(), add, mul);
    let embedding = RingHom::new_unchecked(base.clone(), free.clone(), base.elements().collect())?;
    if relations.is_empty() {
        return Ok(PolyQuotient {
            ring: free,
            embedding,
            var,
        });
    }
    // evaluate each relation at the class of x
    let gens: Vec<usize> = relations
        .iter()
        .map(|rel| {
            rel.coeffs()
                .iter()
                .rev()
                .fold(free.zero(), |acc, &c| free.add(free.mul(acc, var), c))
        })
        .collect();
    let ideal = ideal_generated(&free, &gens);
    let q = quotient(&free, &ideal)?;
    Ok(PolyQuotient {
        ring: q.ring.relabeled(label),
        embedding: embedding.then(&q.projection)?,
        var: q.projection.apply(var),
    })
}

/// `R/I` with the projection.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub ring: FiniteRing,
    pub projection: RingHom,
    /// Least element of each coset, indexed by class.
    pub representatives: Vec<usize>,
}

/// Quotient by a proper ideal; classes are numbered in increasing order of
/// their least member.
pub fn quotient(ring: &FiniteRing, ideal: &Ideal) -> Result<QuotientRing> {
    if !ideal.ring().same_tables(ring) {
        return Err(Error::Precondition("ideal belongs to another ring".into()));
    }
    if ideal.len() == ring.order() {
        return Err(Error::TrivialQuotient);
    }
    let members = ideal.elements();
    let mut class = vec![usize::MAX; ring.order()];
    let mut reps = Vec::new();
    for a in ring.elements() {
        if class[a] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(a);
        for &i in &members {
            class[ring.add(a, i)] = c;
        }
    }
    let order = reps.len();
    let label = format!("{}/I", ring.label());
    let q = FiniteRing::build(
        order,
        class[ring.zero()],
        class[ring.one()],
        label,
        |x, y| class[ring.add(reps[x], reps[y])],
        |x, y| class[ring.mul(reps[x], reps[y])],
    );
    let projection = RingHom::new_unchecked(ring.clone(), q.clone(), class)?;
    Ok(QuotientRing {
        ring: q,
        projection,
        representatives: reps,
    })
}

/// Subring given by a subset closed under the operations, relabeled in
/// increasing index order, with its inclusion map.
pub(crate) fn subring(ring: &FiniteRing, set: &ElemSet, label: String) -> (FiniteRing, RingHom) {
    let members = set.to_vec();
    let mut pos = vec![usize::MAX; ring.order()];
    for (i, &m) in members.iter().enumerate() {
        pos[m] = i;
    }
    let sub = FiniteRing::build(
        members.len(),
        pos[ring.zero()],
        pos[ring.one()],
        label,
        |a, b| pos[ring.add(members[a], members[b])],
        |a, b| pos[ring.mul(members[a], members[b])],
    );
    let incl = RingHom::new_unchecked(sub.clone(), ring.clone(), members)
        .expect("inclusion table has the right shape");
    (sub, incl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{is_spir, units};

    fn poly(r: &FiniteRing, c: &[usize]) -> Poly {
        Poly::new(r, c.to_vec())
    }

    #[test]
    fn zmod_small() {
        assert_eq!(make_zmod(1).unwrap_err(), Error::InvalidOrder(1));
        let z2 = make_zmod(2).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.add(1, 1), 0);
        let z4 = make_zmod(4).unwrap();
        let w = is_spir(&z4).unwrap();
        assert_eq!((w.generator, w.index), (2, 2));
        for r in [2, 3, 4, 6, 9, 12] {
            make_zmod(r).unwrap().check_axioms().unwrap();
        }
    }

    #[test]
    fn gf_fields() {
        assert_eq!(make_gf(2, 1).unwrap(), make_zmod(2).unwrap());
        assert_eq!(make_gf(4, 1).unwrap_err(), Error::InvalidCharacteristic(4));
        let f4 = make_gf(2, 2).unwrap();
        assert_eq!(f4.order(), 4);
        assert_eq!(units(&f4).len(), 3);
        let f9 = make_gf(3, 2).unwrap();
        assert_eq!(units(&f9).len(), 8);
        f9.check_axioms().unwrap();
        // x^2 + 1 is the chosen modulus: the class of x squares to -1
        assert_eq!(f9.mul(3, 3), f9.neg(f9.one()));
        assert!(make_gf(2, 13).unwrap_err().is_size_limit());
        // oracle: x^2+1 has no root mod 3 hence is irreducible
        assert!((0..3).all(|a| (a * a + 1) % 3 != 0));
    }

    #[test]
    fn product_of_z2_z3_is_z6() {
        let pr = product(&[make_zmod(2).unwrap(), make_zmod(3).unwrap()]).unwrap();
        assert!(pr.diagonal.is_none());
        let z6 = make_zmod(6).unwrap();
        // CRT map k ↦ (k mod 2, k mod 3) identifies the tables
        let map: Vec<usize> = (0..6).map(|k| pr.encode(&[k % 2, k % 3])).collect();
        let h = RingHom::new(z6, pr.ring.clone(), map).unwrap();
        assert!(h.is_injective() && h.is_surjective());
        pr.ring.check_axioms().unwrap();
    }

    #[test]
    fn unary_product_and_diagonal() {
        let z2 = make_zmod(2).unwrap();
        let pr = product(std::slice::from_ref(&z2)).unwrap();
        assert_eq!(pr.ring, z2);
        let f2 = make_gf(2, 1).unwrap();
        let pr = product(&[f2.clone(), f2.clone(), f2.clone()]).unwrap();
        assert_eq!(pr.ring.order(), 8);
        let d = pr.diagonal.clone().unwrap();
        d.check().unwrap();
        assert!(d.is_injective());
        for p in &pr.projections {
            p.check().unwrap();
        }
    }

    #[test]
    fn polynomial_quotients() {
        let f2 = make_zmod(2).unwrap();
        let gf4 = poly_quotient(&f2, &poly(&f2, &[1, 1, 1]), &[]).unwrap();
        assert_eq!(gf4.ring, make_gf(2, 2).unwrap());
        let dual = poly_quotient(&f2, &poly(&f2, &[0, 0, 1]), &[]).unwrap();
        assert_eq!(dual.ring.order(), 4);
        assert_eq!(dual.ring.mul(dual.var, dual.var), dual.ring.zero());
        dual.ring.check_axioms().unwrap();
        assert_eq!(
            poly_quotient(&f2, &Poly::new(&make_zmod(3).unwrap(), vec![0, 2]), &[]).unwrap_err(),
            Error::NotMonic
        );
    }

    #[test]
    fn special_extension_ring_has_eight_elements() {
        let f2 = make_zmod(2).unwrap();
        let r = poly_quotient(&f2, &poly(&f2, &[0, 0, 1]), &[]).unwrap();
        let (ring, t) = (&r.ring, r.var);
        // x^2 - t and x*t over R = F2[t]/(t^2)
        let monic = Poly::new(ring, vec![ring.neg(t), 0, 1]);
        let rel = Poly::new(ring, vec![0, t]);
        let s = poly_quotient(ring, &monic, &[rel]).unwrap();
        assert_eq!(s.ring.order(), 8);
        assert!(s.embedding.is_injective());
        s.ring.check_axioms().unwrap();
        s.embedding.check().unwrap();
        let x = s.var;
        let te = s.embedding.apply(t);
        assert_eq!(s.ring.mul(x, x), te);
        assert_eq!(s.ring.mul(x, te), s.ring.zero());
    }

    #[test]
    fn quotients_by_ideals() {
        let z4 = make_zmod(4).unwrap();
        let q = quotient(&z4, &ideal_generated(&z4, &[2])).unwrap();
        assert_eq!(q.ring, make_zmod(2).unwrap());
        let z12 = make_zmod(12).unwrap();
        let q = quotient(&z12, &ideal_generated(&z12, &[4])).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert_eq!(q.ring, make_zmod(4).unwrap());
        let q = quotient(&z12, &ideal_generated(&z12, &[])).unwrap();
        assert_eq!(q.ring, z12);
        assert_eq!(
            quotient(&z12, &ideal_generated(&z12, &[1])).unwrap_err(),
            Error::TrivialQuotient
        );
        q.projection.check().unwrap();
    }
}
