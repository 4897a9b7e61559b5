//! Structural predicates of an extension `R ⊆ S`: integrality conditions,
//! seminormality, t-closedness and the quadratic / Δ / Δ₀ conditions.

use serde_json::{json, Value};

use crate::elemset::{ElemSet, Span};
use crate::error::Result;
use crate::extension::{additive_generators, Extension};
use crate::ideal::Ideal;
use crate::lattice::{adjunction_closure, LatticeReport};
use crate::ring::FiniteRing;
use crate::spectrum::{contract, spectrum};

/// Cap on the number of intermediate `R`-submodules examined by the Δ₀ test.
pub const MODULE_ENUMERATION_CAP: usize = 200_000;

/// Least `d ≥ 1` with `s^d ∈ R + Rs + … + Rs^(d-1)`, which yields a monic
/// relation of degree `d`.
pub fn monic_relation_degree(ext: &Extension, s: usize) -> Option<usize> {
    let top = ext.top();
    let mut span = Span::from_subgroup(ext.image().clone());
    let mut p = s;
    for d in 1..=top.order() {
        if span.contains(p) {
            return Some(d);
        }
        for r in ext.image().iter() {
            span.extend(top, top.mul(r, p));
        }
        p = top.mul(p, s);
    }
    None
}

pub fn is_integral(ext: &Extension) -> bool {
    ext.top()
        .elements()
        .all(|s| monic_relation_degree(ext, s).is_some())
}

/// For each prime `Q` of `S`, `|R/(Q∩R)| = |S/Q|` (the residue map is
/// injective, so equal sizes make it an isomorphism).
pub fn is_infra_integral(ext: &Extension) -> Result<bool> {
    let sp = spectrum(ext.top())?;
    Ok(sp
        .primes
        .iter()
        .all(|q| contract(ext, q).index() == q.index()))
}

/// Infra-integral with `Q ↦ Q∩R` a bijection of spectra.
pub fn is_subintegral(ext: &Extension) -> Result<bool> {
    if !is_infra_integral(ext)? {
        return Ok(false);
    }
    let sr = spectrum(ext.base())?;
    let ss = spectrum(ext.top())?;
    let mut images: Vec<Ideal> = ss.primes.iter().map(|q| contract(ext, q)).collect();
    images.sort_by(|a, b| a.canonical_cmp(b));
    images.dedup();
    Ok(images.len() == ss.primes.len() && images.len() == sr.primes.len())
}

/// `b², b³ ∈ R` forces `b ∈ R`.
pub fn is_seminormal(ext: &Extension) -> bool {
    let (s, img) = (ext.top(), ext.image());
    s.elements().all(|b| {
        img.contains(b) || !(img.contains(s.mul(b, b)) && img.contains(s.pow(b, 3)))
    })
}

/// `b² − rb, b³ − rb² ∈ R` for some `r ∈ R` forces `b ∈ R`.
pub fn is_tclosed(ext: &Extension) -> bool {
    let (s, img) = (ext.top(), ext.image());
    s.elements().filter(|&b| !img.contains(b)).all(|b| {
        let b2 = s.mul(b, b);
        let b3 = s.mul(b2, b);
        !img.iter().any(|r| {
            img.contains(s.sub(b2, s.mul(r, b))) && img.contains(s.sub(b3, s.mul(r, b2)))
        })
    })
}

/// `R + Rt` is a ring for every `t ∈ S`.
pub fn is_quadratic(ext: &Extension) -> bool {
    let mut checked = ElemSet::empty(ext.top().order());
    for t in ext.top().elements() {
        if ext.image().contains(t) || checked.contains(t) {
            continue;
        }
        let m = ext.module_extend(ext.image(), t);
        if !ext.is_multiplicative(&m) {
            return false;
        }
        checked.insert(t);
    }
    true
}

/// Additive sum of two subgroups.
pub fn set_sum(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut span = Span::from_subgroup(a.clone());
    for g in additive_generators(ring, b) {
        span.extend(ring, g);
    }
    span.set
}

/// `T₁ + T₂ ∈ [R,S]` for all intermediate algebras.
pub fn is_delta(ext: &Extension, lattice: &LatticeReport) -> bool {
    let n = lattice.nodes();
    (0..n.len()).all(|i| {
        (i + 1..n.len()).all(|j| {
            n[i].is_subset(&n[j])
                || n[j].is_subset(&n[i])
                || lattice.contains(&set_sum(ext.top(), &n[i], &n[j]))
        })
    })
}

/// All `R`-submodules of `S` containing `R`.
pub fn intermediate_modules(ext: &Extension) -> Result<Vec<ElemSet>> {
    let order: Vec<usize> = ext.top().elements().collect();
    adjunction_closure(
        ext.image().clone(),
        &order,
        |n, x| ext.module_extend(n, x),
        MODULE_ENUMERATION_CAP,
    )
}

/// Every `R`-submodule between `R` and `S` is a ring.
pub fn is_delta0(ext: &Extension) -> Result<bool> {
    Ok(intermediate_modules(ext)?
        .iter()
        .all(|m| ext.is_multiplicative(m)))
}

/// The predicates reported together by the `classify` command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateReport {
    pub integral: bool,
    pub infra_integral: bool,
    pub subintegral: bool,
    pub seminormal: bool,
    pub tclosed: bool,
    pub quadratic: bool,
    pub delta: bool,
    pub delta0: bool,
    pub pointwise_minimal: bool,
}

impl PredicateReport {
    pub fn compute(ext: &Extension, lattice: &LatticeReport) -> Result<PredicateReport> {
        Ok(PredicateReport {
            integral: is_integral(ext),
            infra_integral: is_infra_integral(ext)?,
            subintegral: is_subintegral(ext)?,
            seminormal: is_seminormal(ext),
            tclosed: is_tclosed(ext),
            quadratic: is_quadratic(ext),
            delta: is_delta(ext, lattice),
            delta0: is_delta0(ext)?,
            pointwise_minimal: crate::minimal::is_pointwise_minimal_in(ext, lattice),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "integral": self.integral,
            "infra_integral": self.infra_integral,
            "subintegral": self.subintegral,
            "seminormal": self.seminormal,
            "t_closed": self.tclosed,
            "quadratic": self.quadratic,
            "delta": self.delta,
            "delta0": self.delta0,
            "pointwise_minimal": self.pointwise_minimal,
        })
    }
}
