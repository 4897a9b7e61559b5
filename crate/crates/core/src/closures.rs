//! Seminormalization, t-closure and integral closure inside a finite
//! extension, and the closure formulas for diagonal maps into products.

use serde_json::{json, Value};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::lattice::LatticeReport;
use crate::predicates::{
    is_infra_integral, is_seminormal, is_subintegral, is_tclosed, monic_relation_degree, set_sum,
};
use crate::ring::{is_local, product};

/// Grows `T` from the image of `R`, adjoining every `b` (in index order)
/// accepted by `admit(T, b)`, until nothing more is admitted.
fn fixpoint(ext: &Extension, admit: impl Fn(&ElemSet, usize) -> bool) -> ElemSet {
    let mut t = ext.image().clone();
    loop {
        let mut grew = false;
        for b in ext.top().elements() {
            if !t.contains(b) && admit(&t, b) {
                t = ext.adjoin(&t, b);
                grew = true;
            }
        }
        if !grew {
            return t;
        }
    }
}

/// `⁺R`: adjoin every `b` with `b², b³ ∈ T` until stable.
pub fn seminormalization(ext: &Extension) -> ElemSet {
    let s = ext.top();
    fixpoint(ext, |t, b| {
        let b2 = s.mul(b, b);
        t.contains(b2) && t.contains(s.mul(b2, b))
    })
}

/// `ᵗR`: adjoin every `b` with `b² − rb, b³ − rb² ∈ T` for some `r ∈ T`.
pub fn t_closure(ext: &Extension) -> ElemSet {
    let s = ext.top();
    fixpoint(ext, |t, b| {
        let b2 = s.mul(b, b);
        let b3 = s.mul(b2, b);
        t.iter()
            .any(|r| t.contains(s.sub(b2, s.mul(r, b))) && t.contains(s.sub(b3, s.mul(r, b2))))
    })
}

/// Elements of `S` satisfying a monic relation over `R`.
pub fn integral_closure(ext: &Extension) -> ElemSet {
    ElemSet::from_indices(
        ext.top().order(),
        ext.top()
            .elements()
            .filter(|&s| monic_relation_degree(ext, s).is_some()),
    )
}

/// `R ⊆ ⁺R ⊆ ᵗR ⊆ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub base: ElemSet,
    pub seminormalization: ElemSet,
    pub tclosure: ElemSet,
    pub top: ElemSet,
}

impl CanonicalDecomposition {
    pub fn to_json(&self) -> Value {
        let part = |s: &ElemSet| json!({ "order": s.len(), "elements": s.to_vec() });
        json!({
            "base": part(&self.base),
            "seminormalization": part(&self.seminormalization),
            "t_closure": part(&self.tclosure),
            "top": part(&self.top),
        })
    }
}

/// Both closures, with the chain and its defining properties checked.
pub fn canonical_decomposition(ext: &Extension) -> Result<CanonicalDecomposition> {
    let d = CanonicalDecomposition {
        base: ext.image().clone(),
        seminormalization: seminormalization(ext),
        tclosure: t_closure(ext),
        top: ext.full(),
    };
    if !(d.base.is_subset(&d.seminormalization) && d.seminormalization.is_subset(&d.tclosure)) {
        return Err(Error::FormulaViolation("closures are not nested".into()));
    }
    if !is_subintegral(&ext.up_to(&d.seminormalization)?.ext)? {
        return Err(Error::FormulaViolation("R ⊆ ⁺R is not subintegral".into()));
    }
    if !is_seminormal(&ext.over(&d.seminormalization)?) {
        return Err(Error::FormulaViolation("⁺R ⊆ S is not seminormal".into()));
    }
    if !is_tclosed(&ext.over(&d.tclosure)?) {
        return Err(Error::FormulaViolation("ᵗR ⊆ S is not t-closed".into()));
    }
    Ok(d)
}

/// Largest node `T` of `[R,S]` with `R ⊆ T` satisfying `pred`, checked to
/// contain every other such node.
fn greatest_node(
    ext: &Extension,
    lattice: &LatticeReport,
    pred: impl Fn(&Extension) -> Result<bool>,
) -> Result<ElemSet> {
    let mut good = Vec::new();
    for node in lattice.nodes() {
        if pred(&ext.up_to(node)?.ext)? {
            good.push(node.clone());
        }
    }
    let best = good
        .iter()
        .max_by_key(|n| n.len())
        .cloned()
        .ok_or_else(|| Error::FormulaViolation("no node qualifies".into()))?;
    if !good.iter().all(|n| n.is_subset(&best)) {
        return Err(Error::FormulaViolation("qualifying nodes have no maximum".into()));
    }
    Ok(best)
}

/// Lattice oracle: greatest `T` with `R ⊆ T` subintegral.
pub fn seminormalization_by_lattice(ext: &Extension, lattice: &LatticeReport) -> Result<ElemSet> {
    greatest_node(ext, lattice, is_subintegral)
}

/// Lattice oracle: greatest `T` with `R ⊆ T` infra-integral.
pub fn t_closure_by_lattice(ext: &Extension, lattice: &LatticeReport) -> Result<ElemSet> {
    greatest_node(ext, lattice, is_infra_integral)
}

/// Closures of the diagonal `R → ∏Rᵢ` against their product formulas.
#[derive(Clone, Debug)]
pub struct DiagonalReport {
    pub extension: Extension,
    pub seminormalization: ElemSet,
    /// `R + ∏Nᵢ`.
    pub seminormalization_formula: ElemSet,
    pub tclosure: ElemSet,
    /// `∏ ᵗRᵢ`.
    pub tclosure_formula: ElemSet,
}

impl DiagonalReport {
    pub fn seminormalization_ok(&self) -> bool {
        self.seminormalization == self.seminormalization_formula
    }

    pub fn tclosure_ok(&self) -> bool {
        self.tclosure == self.tclosure_formula
    }

    pub fn passed(&self) -> bool {
        self.seminormalization_ok() && self.tclosure_ok()
    }
}

/// For a local `R` and subintegral `R ⊆ Rᵢ`, compares `⁺R` in `∏Rᵢ` with
/// `R + ∏Nᵢ` and `ᵗR` with `∏ ᵗRᵢ`.
pub fn verify_diagonal_formulas(factors: &[Extension]) -> Result<DiagonalReport> {
    let first = factors
        .first()
        .ok_or_else(|| Error::Precondition("no factors".into()))?;
    let r = first.base();
    if is_local(r).is_none() {
        return Err(Error::Precondition("base ring is not local".into()));
    }
    let mut maxes = Vec::new();
    for f in factors {
        if !f.base().same_tables(r) {
            return Err(Error::Precondition("factors have different base rings".into()));
        }
        if !is_subintegral(f)? {
            return Err(Error::Precondition(format!(
                "{} over {} is not subintegral",
                f.top().label(),
                r.label()
            )));
        }
        maxes.push(is_local(f.top()).ok_or_else(|| {
            Error::Precondition("subintegral factor over a local ring is not local".into())
        })?);
    }
    let tops: Vec<_> = factors.iter().map(|f| f.top().clone()).collect();
    let pr = product(&tops)?;
    let embeds: Vec<_> = factors.iter().map(|f| f.embed().clone()).collect();
    let ext = Extension::new(pr.induced(&embeds)?)?;

    let tuples = |sets: &[ElemSet]| {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for s in sets {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    s.iter().map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        ElemSet::from_indices(pr.ring.order(), acc.iter().map(|c| pr.encode(c)))
    };
    let n_sets: Vec<ElemSet> = maxes.iter().map(|m| m.set().clone()).collect();
    let sn_formula = set_sum(&pr.ring, ext.image(), &tuples(&n_sets));
    let t_sets: Vec<ElemSet> = factors.iter().map(t_closure).collect();
    Ok(DiagonalReport {
        seminormalization: seminormalization(&ext),
        seminormalization_formula: sn_formula,
        tclosure: t_closure(&ext),
        tclosure_formula: tuples(&t_sets),
        extension: ext,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::intermediate_algebras;
    use crate::poly::Poly;
    use crate::ring::{make_gf, make_zmod, poly_quotient, FiniteRing, RingHom};

    fn dual(k: &FiniteRing) -> Extension {
        let q = poly_quotient(k, &Poly::new(k, vec![0, 0, 1]), &[]).unwrap();
        Extension::new(q.embedding).unwrap()
    }

    #[test]
    fn diagonal_of_spir() {
        let z4 = make_zmod(4).unwrap();
        let ext = Extension::diagonal(&z4, 2).unwrap();
        let sn = seminormalization(&ext);
        assert_eq!(sn.len(), 8);
        // (a,b) with a ≡ b mod 2
        let expected: Vec<usize> = (0..16).filter(|x| (x / 4) % 2 == (x % 4) % 2).collect();
        assert_eq!(sn.to_vec(), expected);
        assert_eq!(t_closure(&ext).len(), 16);
        let lat = intermediate_algebras(&ext).unwrap();
        assert_eq!(seminormalization_by_lattice(&ext, &lat).unwrap(), sn);
        assert_eq!(t_closure_by_lattice(&ext, &lat).unwrap().len(), 16);
        let d = canonical_decomposition(&ext).unwrap();
        assert_eq!(d.tclosure, d.top);
    }

    #[test]
    fn fields() {
        let f2 = make_gf(2, 1).unwrap();
        let ext = Extension::diagonal(&f2, 3).unwrap();
        assert_eq!(seminormalization(&ext), *ext.image());
        assert_eq!(t_closure(&ext).len(), 8);
        let f4 = make_gf(2, 2).unwrap();
        let ext = Extension::new(RingHom::new(f2.clone(), f4, vec![0, 1]).unwrap()).unwrap();
        let d = canonical_decomposition(&ext).unwrap();
        assert_eq!(d.seminormalization, d.base);
        assert_eq!(d.tclosure, d.base);
        assert_eq!(integral_closure(&ext).len(), 4);
        let e = dual(&f2);
        assert_eq!(seminormalization(&e).len(), 4);
        let id = Extension::identity(&f2);
        let d = canonical_decomposition(&id).unwrap();
        assert_eq!(d.base, d.top);
    }

    #[test]
    fn diagonal_formulas() {
        let z4 = make_zmod(4).unwrap();
        let e = dual(&z4);
        let rep = verify_diagonal_formulas(&[e.clone(), e.clone()]).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.seminormalization.len(), 128);
        let single = verify_diagonal_formulas(std::slice::from_ref(&e)).unwrap();
        assert!(single.passed());
        assert_eq!(single.seminormalization.len(), 16);
        let f2 = make_gf(2, 1).unwrap();
        let e2 = dual(&f2);
        assert!(verify_diagonal_formulas(&[e2.clone(), e2]).unwrap().passed());
        // F2 ⊆ F4 is not subintegral
        let f4 = make_gf(2, 2).unwrap();
        let bad = Extension::new(RingHom::new(f2, f4, vec![0, 1]).unwrap()).unwrap();
        assert!(matches!(
            verify_diagonal_formulas(&[bad]),
            Err(Error::Precondition(_))
        ));
    }
}
