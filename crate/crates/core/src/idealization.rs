//! The idealization `R(+)M` with `(r,m)(s,n) = (rs, rn + sm)`, and the
//! correspondence between submodules of `M` and algebras in `[R, R(+)M]`.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::ideal::{all_ideals, Ideal};
use crate::lattice::{intermediate_algebras, LatticeReport};
use crate::limits::Limits;
use crate::module::FiniteModule;
use crate::ring::{is_field, is_local, is_spir, product, FiniteRing, RingHom};

#[derive(Clone, Debug)]
pub struct Idealization {
    pub ring: FiniteRing,
    /// `r ↦ (r, 0)`.
    pub embedding: RingHom,
    pub module: FiniteModule,
}

/// Builds `R(+)M`; the pair `(r, m)` has index `r·|M| + m`.
pub fn idealize(base: &FiniteRing, module: &FiniteModule) -> Result<Idealization> {
    if !module.ring().same_tables(base) {
        return Err(Error::InvalidModule("module is over another ring".into()));
    }
    let m = module.order();
    let order = Limits::check_order("idealization", base.order() as u128 * m as u128)?;
    let split = |x: usize| (x / m, x % m);
    let label = format!("{}(+){}", base.label(), module.label());
    let ring = FiniteRing::build(
        order,
        base.zero() * m + module.zero(),
        base.one() * m + module.zero(),
        label,
        |a, b| {
            let ((r, x), (s, y)) = (split(a), split(b));
            base.add(r, s) * m + module.add(x, y)
        },
        |a, b| {
            let ((r, x), (s, y)) = (split(a), split(b));
            base.mul(r, s) * m + module.add(module.act(r, y), module.act(s, x))
        },
    );
    let embedding = RingHom::new_unchecked(
        base.clone(),
        ring.clone(),
        base.elements().map(|r| r * m + module.zero()).collect(),
    )?;
    Ok(Idealization {
        ring,
        embedding,
        module: module.clone(),
    })
}

impl Idealization {
    pub fn extension(&self) -> Extension {
        Extension::new(self.embedding.clone()).expect("r ↦ (r,0) is injective")
    }

    pub fn pair(&self, r: usize, m: usize) -> usize {
        r * self.module.order() + m
    }

    pub fn components(&self, x: usize) -> (usize, usize) {
        (x / self.module.order(), x % self.module.order())
    }

    /// `R(+)N` as a subset of `R(+)M`.
    pub fn subalgebra_of(&self, n: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.ring.order(),
            self.embedding
                .source()
                .elements()
                .flat_map(|r| n.iter().map(move |x| (r, x)))
                .map(|(r, x)| self.pair(r, x)),
        )
    }
}

/// `N ↦ R(+)N` matched node for node against `[R, R(+)M]`.
#[derive(Clone, Debug)]
pub struct IdealizationBijection {
    pub idealization: Idealization,
    pub submodules: LatticeReport,
    pub algebras: LatticeReport,
    /// `(submodule index, algebra index)`.
    pub pairs: Vec<(usize, usize)>,
}

impl IdealizationBijection {
    pub fn nu(&self) -> usize {
        self.submodules.count()
    }

    /// Same covering relation on both sides.
    pub fn preserves_order(&self) -> bool {
        let map: Vec<usize> = self.pairs.iter().map(|&(_, a)| a).collect();
        let mut ours: Vec<(usize, usize)> = self
            .submodules
            .hasse_edges()
            .into_iter()
            .map(|(x, y)| (map[x], map[y]))
            .collect();
        ours.sort_unstable();
        ours == self.algebras.hasse_edges()
    }
}

pub fn idealization_lattice_bijection(
    base: &FiniteRing,
    module: &FiniteModule,
) -> Result<IdealizationBijection> {
    let id = idealize(base, module)?;
    let submodules = module.submodules()?;
    let algebras = intermediate_algebras(&id.extension())?;
    let mut pairs = Vec::new();
    for (i, n) in submodules.nodes().iter().enumerate() {
        let t = id.subalgebra_of(n);
        let j = algebras.index_of(&t).ok_or_else(|| {
            Error::FormulaViolation(format!("R(+)N for submodule #{i} is not an intermediate algebra"))
        })?;
        pairs.push((i, j));
    }
    if submodules.count() != algebras.count() {
        return Err(Error::FormulaViolation(format!(
            "{} submodules but {} intermediate algebras",
            submodules.count(),
            algebras.count()
        )));
    }
    let out = IdealizationBijection {
        idealization: id,
        submodules,
        algebras,
        pairs,
    };
    if !out.preserves_order() {
        return Err(Error::FormulaViolation("covering relations differ".into()));
    }
    Ok(out)
}

/// `ℓ[R(+)N, R(+)M]` and `|[R(+)N, R(+)M]|` against `L(M/N)` and `ν(M/N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReport {
    pub interval_length: usize,
    pub interval_count: usize,
    pub quotient_length: usize,
    pub quotient_nu: usize,
}

impl IntervalReport {
    pub fn passed(&self) -> bool {
        self.interval_length == self.quotient_length && self.interval_count == self.quotient_nu
    }
}

pub fn interval_length(id: &Idealization, n: &ElemSet) -> Result<IntervalReport> {
    let ext = id.extension();
    let lower = id.subalgebra_of(n);
    let interval = intermediate_algebras(&ext.over(&lower)?)?;
    let (q, _) = id.module.quotient(n)?;
    Ok(IntervalReport {
        interval_length: interval.length(),
        interval_count: interval.count(),
        quotient_length: q.module_length(),
        quotient_nu: q.nu()?,
    })
}

/// For a cyclic `M = Re` over a SPIR or field `R` with maximal ideal `P`:
/// the submodules are exactly `P^j e`.
#[derive(Clone, Debug)]
pub struct UniserialReport {
    pub generator: usize,
    /// `(0:e)`.
    pub annihilator: Ideal,
    pub chain: Vec<ElemSet>,
    pub nu: usize,
    /// Number of ideals of `R/C`.
    pub nu_quotient: usize,
    pub lattice_is_chain: bool,
}

impl UniserialReport {
    pub fn passed(&self) -> bool {
        self.lattice_is_chain && self.nu == self.nu_quotient
    }
}

pub fn uniserial_structure_check(module: &FiniteModule) -> Result<UniserialReport> {
    let r = module.ring();
    let p = is_local(r).ok_or(Error::NotLocal)?;
    if !(is_field(r) || is_spir(r).is_some()) {
        return Err(Error::Precondition("ring is neither a field nor a SPIR".into()));
    }
    let e = module
        .is_cyclic()
        .ok_or_else(|| Error::NotApplicable("module is not cyclic".into()))?;
    let c = module.annihilator_of(e);
    let lattice = module.submodules()?;
    let mut chain: Vec<ElemSet> = Vec::new();
    let mut pj = Ideal::whole(r);
    loop {
        let s = ElemSet::from_indices(module.order(), pj.set().iter().map(|a| module.act(a, e)));
        if chain.last() != Some(&s) {
            chain.push(s.clone());
        }
        if s.len() == 1 {
            break;
        }
        pj = pj.product(&p);
    }
    chain.reverse();
    let lattice_is_chain = lattice.count() == chain.len()
        && chain.iter().all(|s| lattice.contains(s))
        && lattice.is_chain();
    let nu_quotient = all_ideals(r)?.iter().filter(|j| c.is_subset(j)).count();
    Ok(UniserialReport {
        generator: e,
        annihilator: c,
        chain,
        nu: lattice.count(),
        nu_quotient,
        lattice_is_chain,
    })
}

/// `ν` of `kⁿ` acting on itself componentwise, expected `2ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub field_order: usize,
    pub n: usize,
    pub nu: usize,
    pub expected: usize,
}

pub fn componentwise_census(field: &FiniteRing, n: usize) -> Result<CensusReport> {
    if !is_field(field) {
        return Err(Error::Precondition("census needs a field".into()));
    }
    let r = product(&vec![field.clone(); n])?.ring;
    let e = FiniteModule::regular(&r);
    Ok(CensusReport {
        field_order: field.order(),
        n,
        nu: e.nu()?,
        expected: 1 << n,
    })
}
