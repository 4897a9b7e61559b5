//! The verification corpus: twelve numbered checks, each run against
//! independently computed values, grouped into suites `s2`–`s6`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::closures::{
    seminormalization, seminormalization_by_lattice, t_closure, t_closure_by_lattice,
    verify_diagonal_formulas,
};
use crate::combinatorics::{
    bell, enumerate_exal, exal_bound_check, partition_bijection,
    stirling2, LambdaMatrix,
};
use crate::crt::{make_crt_from_generators, random_families, CrtExtension, Reduction};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::ideal::{ideal_generated, Ideal};
use crate::idealization::{
    componentwise_census, idealization_lattice_bijection, idealize, interval_length,
};
use crate::lattice::{intermediate_algebras, DEFAULT_CHAIN_CAP};
use crate::minimal::{
    classify_minimal, is_minimal, is_pointwise_minimal, is_special_minimal_ramified, MinimalKind,
};
use crate::module::FiniteModule;
use crate::poly::Poly;
use crate::predicates::{is_delta, is_delta0, is_quadratic, set_sum};
use crate::ring::{
    idempotents, is_connected, is_local, make_gf, make_zmod, nilpotency_index, poly_quotient,
    product, quotient, FiniteRing,
};
use crate::spectrum::{conductor, is_maximal};

/// Seed of the pseudo-random separating families.
pub const CRT_SEED: u64 = 20_240_311;
pub const CRT_FAMILIES: usize = 24;
pub const CRT_MAX_TOP: usize = 256;
/// Closure oracles run on extensions with `|S|` at most this.
pub const CLOSURE_MAX_TOP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    S2,
    S3,
    S4,
    S5,
    S6,
}

impl Suite {
    pub fn criteria(self) -> Vec<usize> {
        match self {
            Suite::All => (1..=12).collect(),
            Suite::S2 => vec![1, 4, 9],
            Suite::S3 => vec![2, 5, 6, 8],
            Suite::S4 => vec![3],
            Suite::S5 => vec![7, 10, 11],
            Suite::S6 => vec![12],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::S2 => "s2",
            Suite::S3 => "s3",
            Suite::S4 => "s4",
            Suite::S5 => "s5",
            Suite::S6 => "s6",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "s2" => Suite::S2,
            "s3" => Suite::S3,
            "s4" => Suite::S4,
            "s5" => Suite::S5,
            "s6" => Suite::S6,
            other => return Err(Error::Precondition(format!("unknown suite {other:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const TITLES: [&str; 12] = [
    "Bell counts for K ⊆ Kⁿ",
    "SPIR counts for R ⊆ R²",
    "Stirling/Exal counts",
    "minimal-extension trichotomy",
    "conductor formula for separating families",
    "pairwise minimality criterion",
    "idealization lattice bijection",
    "closure oracles",
    "special minimal ramified extension",
    "pointwise minimality",
    "submodule census of kⁿ",
    "property suites",
];

#[derive(Clone, Debug, Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: BTreeMap<String, Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn ok<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    fn note(&mut self, key: &str, v: Value) {
        self.notes.insert(key.to_string(), v);
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: BTreeMap<String, Value>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "passed": self.passed(),
            "checks": self.checks,
            "failures": self.failures,
            "notes": self.notes,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(CriterionReport::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "suite": self.suite.name(),
            "passed": self.passed(),
            "criteria": self.criteria.iter().map(CriterionReport::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn run_suite(suite: Suite) -> SuiteReport {
    SuiteReport {
        suite,
        criteria: suite.criteria().into_iter().map(run_criterion).collect(),
    }
}

pub fn run_criterion(id: usize) -> CriterionReport {
    let mut t = Tally::default();
    let body: fn(&mut Tally) -> Result<()> = match id {
        1 => bell_counts,
        2 => spir_counts,
        3 => exal_counts,
        4 => trichotomy,
        5 => conductor_formula,
        6 => pairwise_criterion,
        7 => idealizations,
        8 => closure_oracles,
        9 => special_ramified,
        10 => pointwise,
        11 => census,
        12 => properties,
        _ => |t: &mut Tally| {
            t.check(false, || "no such criterion".into());
            Ok(())
        },
    };
    if let Err(e) = body(&mut t) {
        t.failures.push(format!("aborted: {e}"));
    }
    CriterionReport {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        checks: t.checks,
        failures: t.failures,
        notes: t.notes,
    }
}

/// A named extension of the corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub ext: Extension,
}

fn entry(name: impl Into<String>, ext: Extension) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        ext,
    }
}

fn fields() -> Result<Vec<FiniteRing>> {
    Ok(vec![make_gf(2, 1)?, make_gf(3, 1)?, make_gf(2, 2)?])
}

/// `F2[t]/(t^k)`.
fn truncated(k: usize) -> Result<FiniteRing> {
    let f2 = make_gf(2, 1)?;
    let mut c = vec![0; k + 1];
    c[k] = 1;
    Ok(poly_quotient(&f2, &Poly::new(&f2, c), &[])?.ring)
}

/// `R ⊆ R[ε]`, `ε² = 0`.
fn dual(r: &FiniteRing) -> Result<Extension> {
    let q = poly_quotient(r, &Poly::new(r, vec![r.zero(), r.zero(), r.one()]), &[])?;
    Extension::new(q.embedding)
}

fn spirs() -> Result<Vec<FiniteRing>> {
    Ok(vec![
        make_zmod(4)?,
        make_zmod(8)?,
        make_zmod(9)?,
        make_zmod(27)?,
        truncated(3)?,
    ])
}

fn diagonals() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for k in fields()? {
        for n in 2..=4 {
            out.push(entry(format!("{} ⊆ {}^{n}", k.label(), k.label()), Extension::diagonal(&k, n)?));
        }
    }
    for r in spirs()? {
        out.push(entry(format!("{} ⊆ {}^2", r.label(), r.label()), Extension::diagonal(&r, 2)?));
    }
    Ok(out)
}

fn crt_families() -> Result<Vec<CrtExtension>> {
    random_families(CRT_SEED, CRT_FAMILIES, CRT_MAX_TOP)
}

/// `(ring, ideal generators of R/I per summand)`.
fn idealization_pairs() -> Result<Vec<(FiniteRing, FiniteModule)>> {
    let f2 = make_gf(2, 1)?;
    let f3 = make_gf(3, 1)?;
    let f4 = make_gf(2, 2)?;
    let z4 = make_zmod(4)?;
    let z6 = make_zmod(6)?;
    let z8 = make_zmod(8)?;
    let z9 = make_zmod(9)?;
    let d2 = truncated(2)?;
    let f2f2 = product(&[f2.clone(), f2.clone()])?.ring;
    let specs: Vec<(&FiniteRing, Vec<Vec<usize>>)> = vec![
        (&f2, vec![vec![], vec![]]),
        (&z4, vec![vec![]]),
        (&z8, vec![vec![]]),
        (&f2, vec![vec![]]),
        (&f3, vec![vec![], vec![]]),
        (&f2, vec![vec![], vec![], vec![]]),
        (&f4, vec![vec![], vec![]]),
        (&z4, vec![vec![2]]),
        (&z4, vec![vec![], vec![2]]),
        (&z9, vec![vec![]]),
        (&z9, vec![vec![3]]),
        (&z6, vec![vec![]]),
        (&d2, vec![vec![]]),
        (&f2f2, vec![vec![]]),
        (&z8, vec![vec![4]]),
        (&z4, vec![vec![], vec![]]),
        (&f3, vec![vec![], vec![], vec![]]),
    ];
    specs
        .into_iter()
        .map(|(r, gens)| {
            let ideals: Vec<Ideal> = gens.iter().map(|g| ideal_generated(r, g)).collect();
            Ok((r.clone(), FiniteModule::cyclic_sum(r, &ideals)?))
        })
        .collect()
}

fn diagonal_formula_inputs() -> Result<Vec<Vec<Extension>>> {
    let f2 = make_gf(2, 1)?;
    let z4 = make_zmod(4)?;
    let d2 = truncated(2)?;
    Ok(vec![
        vec![dual(&f2)?, dual(&f2)?],
        vec![dual(&f2)?, dual(&f2)?, dual(&f2)?],
        vec![dual(&z4)?, dual(&z4)?],
        vec![dual(&z4)?, Extension::identity(&z4)],
        vec![dual(&d2)?, dual(&d2)?],
        vec![Extension::identity(&z4), Extension::identity(&z4)],
    ])
}

fn extras() -> Result<Vec<CorpusEntry>> {
    let f2 = make_gf(2, 1)?;
    let f4 = make_gf(2, 2)?;
    let f2_in_f4 = Extension::from_map(&f2, &f4, vec![0, 1])?;
    let z12 = make_zmod(12)?;
    let crt = make_crt_from_generators(&z12, &[vec![4], vec![3], vec![3]])?;
    Ok(vec![
        entry("F2 ⊆ F4", f2_in_f4),
        entry("F2 ⊆ F2^2", Extension::diagonal(&f2, 2)?),
        entry("F2 ⊆ F2[e]", dual(&f2)?),
        entry("Z/12 ⊆ Z/4 x Z/3 x Z/3", crt.extension),
    ])
}

/// Every extension the checks compute a lattice for.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = diagonals()?;
    for (i, c) in crt_families()?.into_iter().enumerate() {
        out.push(entry(format!("random family #{i} over {}", c.ring().label()), c.extension));
    }
    for (r, m) in idealization_pairs()? {
        let id = idealize(&r, &m)?;
        out.push(entry(format!("{} ⊆ {}", r.label(), id.ring.label()), id.extension()));
    }
    for fs in diagonal_formula_inputs()? {
        let tops: Vec<FiniteRing> = fs.iter().map(|f| f.top().clone()).collect();
        let pr = product(&tops)?;
        let embeds: Vec<_> = fs.iter().map(|f| f.embed().clone()).collect();
        let ext = Extension::new(pr.induced(&embeds)?)?;
        out.push(entry(format!("{} ⊆ {}", ext.base().label(), pr.ring.label()), ext));
    }
    out.extend(extras()?);
    Ok(out)
}

fn bell_counts(t: &mut Tally) -> Result<()> {
    let mut counts = Vec::new();
    for k in fields()? {
        for n in 2..=4 {
            let lattice = intermediate_algebras(&Extension::diagonal(&k, n)?)?;
            let b = bell(n)?;
            t.eq(lattice.count() as u64, b, &format!("|[{0}, {0}^{n}]|", k.label()));
            let bij = partition_bijection(&k, n)?;
            t.check(bij.passed(), || {
                format!("partition map for {}^{n} is not a bijection", k.label())
            });
            counts.push(json!([k.label(), n, lattice.count()]));
        }
    }
    t.note("counts", json!(counts));
    Ok(())
}

fn spir_counts(t: &mut Tally) -> Result<()> {
    let mut counts = Vec::new();
    for r in spirs()? {
        let ext = Extension::diagonal(&r, 2)?;
        let lattice = intermediate_algebras(&ext)?;
        let n = nilpotency_index(&r)?;
        t.eq(lattice.count(), n + 1, &format!("|[{0}, {0}^2]|", r.label()));
        let m = is_local(&r).ok_or(Error::NotLocal)?;
        let pr = product(&[r.clone(), r.clone()])?;
        let mut expected: Vec<ElemSet> = Vec::new();
        for i in 0..=n {
            let mi = m.power(i);
            let square = ElemSet::from_indices(
                pr.ring.order(),
                mi.set().iter().flat_map(|a| mi.set().iter().map(move |b| (a, b)))
                    .map(|(a, b)| pr.encode(&[a, b])),
            );
            expected.push(set_sum(&pr.ring, ext.image(), &square));
        }
        expected.sort_by(|a, b| a.canonical_cmp(b));
        expected.dedup();
        t.check(expected.as_slice() == lattice.nodes(), || {
            format!("nodes of [{0}, {0}^2] differ from R + M^i R^2", r.label())
        });
        counts.push(json!([r.label(), n, lattice.count()]));
    }
    t.note("counts", json!(counts));
    Ok(())
}

/// All `n×p` matrices of idempotents, filtered by the three row conditions.
fn brute_force_exal(ring: &FiniteRing, p: usize, n: usize) -> Vec<LambdaMatrix> {
    let ids = idempotents(ring);
    let cells = n * p;
    let mut pick = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        let m = LambdaMatrix {
            rows: (0..n).map(|i| (0..p).map(|j| ids[pick[i * p + j]]).collect()).collect(),
        };
        if m.is_valid(ring) && m.is_injective(ring) {
            out.push(m);
        }
        let Some(k) = pick.iter().rposition(|&x| x + 1 < ids.len()) else {
            return out;
        };
        pick[k] += 1;
        pick[k + 1..].iter_mut().for_each(|x| *x = 0);
    }
}

fn exal_counts(t: &mut Tally) -> Result<()> {
    let shapes = [(2, 3), (2, 4), (3, 4)];
    let connected = vec![make_zmod(4)?, make_gf(3, 1)?, truncated(2)?];
    let mut rows = Vec::new();
    for r in &connected {
        t.check(is_connected(r), || format!("{} is not connected", r.label()));
        for &(p, n) in &shapes {
            let rep = exal_bound_check(r, p, n)?;
            t.eq(rep.classes as u64, rep.stirling, &format!("Exal images of {} ({p},{n})", r.label()));
            let fact: u64 = (1..=p as u64).product();
            t.eq(rep.raw as u64, fact * rep.stirling, &format!("Exal maps of {} ({p},{n})", r.label()));
            rows.push(rep.to_json());
        }
    }
    let f2 = make_gf(2, 1)?;
    let f2f2 = product(&[f2.clone(), f2])?.ring;
    for &(p, n) in &shapes {
        let rep = exal_bound_check(&f2f2, p, n)?;
        t.check(rep.within_bounds(), || {
            format!("F2xF2 ({p},{n}): {} images outside [S, S²]", rep.classes)
        });
        let s = stirling2(n, p)?;
        t.eq(rep.upper_bound, (s * s) as u128, "upper bound for F2xF2");
        let brute = brute_force_exal(&f2f2, p, n);
        let structured = enumerate_exal(&f2f2, p, n)?;
        t.eq(brute.len(), structured.len(), &format!("F2xF2 ({p},{n}) brute force"));
        let mut b = brute;
        b.sort();
        let mut s2 = structured;
        s2.sort();
        t.check(b == s2, || format!("F2xF2 ({p},{n}): matrix sets differ"));
        rows.push(rep.to_json());
    }
    t.note("reports", json!(rows));
    Ok(())
}

fn trichotomy(t: &mut Tally) -> Result<()> {
    let mut kinds: BTreeMap<&'static str, usize> = BTreeMap::new();
    for e in corpus()? {
        let Some(lattice) = t.ok(intermediate_algebras(&e.ext), &e.name) else {
            continue;
        };
        for (a, b) in lattice.hasse_edges() {
            let Some(sub) = t.ok(e.ext.sub_extension(lattice.node(a), lattice.node(b)), &e.name) else {
                continue;
            };
            let Some(c) = t.ok(classify_minimal(&sub.ext), &format!("{} edge {a}->{b}", e.name)) else {
                continue;
            };
            t.check(c.kind != MinimalKind::NotMinimal, || {
                format!("{} edge {a}->{b} is not minimal", e.name)
            });
            let crucial_ok = c
                .crucial
                .as_ref()
                .is_some_and(|m| is_maximal(m) && *m == conductor(&sub.ext));
            t.check(crucial_ok, || format!("{} edge {a}->{b}: crucial ideal", e.name));
            *kinds.entry(c.kind.name()).or_default() += 1;
        }
    }
    t.note("kinds", json!(kinds));
    Ok(())
}

fn conductor_formula(t: &mut Tally) -> Result<()> {
    let fams = crt_families()?;
    t.check(fams.len() >= 20, || "fewer than 20 families".into());
    let mut over_zmod = 0;
    for (i, c) in fams.iter().enumerate() {
        if c.ring().label().starts_with("Z/") {
            over_zmod += 1;
        }
        let r = c.conductor_by_formula();
        t.check(r.is_ok(), || format!("family #{i}: {}", r.unwrap_err()));
    }
    t.check(over_zmod > 0 && over_zmod < fams.len(), || {
        "families do not mix Z/n and field products".into()
    });
    t.note("families", json!(fams.len()));
    t.note("over_zmod", json!(over_zmod));
    Ok(())
}

fn pairwise_criterion(t: &mut Tally) -> Result<()> {
    let mut wide = 0;
    let mut minimal = 0;
    for (i, c) in crt_families()?.iter().enumerate() {
        if c.family.len() <= 2 {
            continue;
        }
        wide += 1;
        let verdict = c.is_minimal_crt()?;
        let by_lattice = intermediate_algebras(&c.extension)?.count() == 2;
        minimal += by_lattice as usize;
        t.check(verdict.minimal == by_lattice, || {
            format!(
                "family #{i} over {}: criterion says {}, lattice says {}",
                c.ring().label(),
                verdict.minimal,
                by_lattice
            )
        });
    }
    t.check(wide > 0, || "no families with more than two ideals".into());
    let z12 = make_zmod(12)?;
    for (gens, want) in [([4, 3, 3], true), ([4, 3, 6], false)] {
        let g: Vec<Vec<usize>> = gens.iter().map(|&x| vec![x]).collect();
        let c = make_crt_from_generators(&z12, &g)?;
        t.eq(c.is_minimal_crt()?.minimal, want, &format!("criterion for Z/12 {gens:?}"));
        t.eq(is_minimal(&c.extension)?, want, &format!("lattice for Z/12 {gens:?}"));
    }
    t.note("wide_families", json!(wide));
    t.note("minimal_wide_families", json!(minimal));
    Ok(())
}

fn idealizations(t: &mut Tally) -> Result<()> {
    let pairs = idealization_pairs()?;
    t.check(pairs.len() >= 15, || "fewer than 15 pairs".into());
    let mut nus = Vec::new();
    for (r, m) in &pairs {
        let name = format!("{} with {}", r.label(), m.label());
        let Some(b) = t.ok(idealization_lattice_bijection(r, m), &name) else {
            continue;
        };
        let nu = m.nu()?;
        t.eq(b.algebras.count(), nu, &format!("|[R, R(+)M]| for {name}"));
        for n in b.submodules.nodes() {
            let rep = interval_length(&b.idealization, n)?;
            t.check(rep.passed(), || format!("{name}: interval above a submodule: {rep:?}"));
        }
        nus.push(json!([r.label(), m.label(), nu]));
    }
    for (i, want) in [(0, 5), (1, 3), (2, 4)] {
        let (_, m) = &pairs[i];
        t.eq(m.nu()?, want, &format!("ν of {}", m.label()));
    }
    t.note("nu", json!(nus));
    Ok(())
}

fn closure_oracles(t: &mut Tally) -> Result<()> {
    let mut compared = 0;
    for e in corpus()? {
        if e.ext.top().order() > CLOSURE_MAX_TOP {
            continue;
        }
        compared += 1;
        let lattice = intermediate_algebras(&e.ext)?;
        let sn = seminormalization(&e.ext);
        let tc = t_closure(&e.ext);
        if let Some(want) = t.ok(seminormalization_by_lattice(&e.ext, &lattice), &e.name) {
            t.check(sn == want, || format!("{}: seminormalization differs from lattice", e.name));
        }
        if let Some(want) = t.ok(t_closure_by_lattice(&e.ext, &lattice), &e.name) {
            t.check(tc == want, || format!("{}: t-closure differs from lattice", e.name));
        }
    }
    for fs in diagonal_formula_inputs()? {
        if let Some(rep) = t.ok(verify_diagonal_formulas(&fs), "diagonal formulas") {
            t.check(rep.passed(), || {
                format!("diagonal formulas fail over {}", rep.extension.base().label())
            });
        }
    }
    let mut crt_checked = 0;
    let z4 = make_zmod(4)?;
    let z8 = make_zmod(8)?;
    let z9 = make_zmod(9)?;
    let d2 = truncated(2)?;
    let mut fams = vec![
        make_crt_from_generators(&z4, &[vec![], vec![]])?,
        make_crt_from_generators(&z8, &[vec![], vec![]])?,
        make_crt_from_generators(&z9, &[vec![], vec![], vec![]])?,
        make_crt_from_generators(&d2, &[vec![], vec![]])?,
        make_crt_from_generators(&z4, &[vec![], vec![2]])?,
        make_crt_from_generators(&z8, &[vec![], vec![2]])?,
    ];
    fams.extend(crt_families()?.into_iter().filter(|c| is_local(c.ring()).is_some()));
    for c in &fams {
        let reduced = match c.reduce_to_zero_conductor()? {
            Reduction::Isomorphism => continue,
            Reduction::Reduced { crt, .. } => *crt,
        };
        crt_checked += 1;
        let res = reduced.seminormalization_of_crt();
        t.check(res.is_ok(), || format!("CRT family over {}: {}", c.ring().label(), res.unwrap_err()));
    }
    t.note("closure_extensions", json!(compared));
    t.note("crt_families", json!(crt_checked));
    Ok(())
}

fn special_ramified(t: &mut Tally) -> Result<()> {
    let f2 = make_gf(2, 1)?;
    let r = poly_quotient(&f2, &Poly::new(&f2, vec![0, 0, 1]), &[])?;
    let (ring, tt) = (&r.ring, r.var);
    let build = |monic: Vec<usize>, rels: Vec<Poly>| -> Result<Extension> {
        Extension::new(poly_quotient(ring, &Poly::new(ring, monic), &rels)?.embedding)
    };
    let x_t = Poly::new(ring, vec![0, tt]);
    let special = build(vec![ring.neg(tt), 0, 1], vec![x_t.clone()])?;
    t.eq(special.top().order(), 8, "order of R[X]/(X²−t, Xt)");
    t.eq(is_special_minimal_ramified(&special)?, true, "special extension");
    let no_xt = build(vec![ring.neg(tt), 0, 1], vec![])?;
    t.eq(is_special_minimal_ramified(&no_xt)?, false, "without Xt");
    let no_t = build(vec![0, 0, 1], vec![x_t])?;
    t.eq(is_special_minimal_ramified(&no_t)?, false, "X² in place of X²−t");
    Ok(())
}

fn pointwise(t: &mut Tally) -> Result<()> {
    let f4 = make_gf(2, 2)?;
    let e = Extension::diagonal(&f4, 2)?;
    t.eq(is_pointwise_minimal(&e)?, true, "F4 ⊆ F4² pointwise minimal");
    t.eq(is_minimal(&e)?, true, "F4 ⊆ F4² minimal");
    let f2 = make_gf(2, 1)?;
    let e = Extension::diagonal(&f2, 3)?;
    t.eq(is_pointwise_minimal(&e)?, true, "F2 ⊆ F2³ pointwise minimal");
    t.eq(is_minimal(&e)?, false, "F2 ⊆ F2³ minimal");
    Ok(())
}

fn census(t: &mut Tally) -> Result<()> {
    let mut rows = Vec::new();
    for k in [make_gf(2, 1)?, make_gf(3, 1)?] {
        for n in 2..=3 {
            let rep = componentwise_census(&k, n)?;
            t.eq(rep.nu, 1 << n, &format!("ν of {}^{n}", k.label()));
            rows.push(json!([k.label(), n, rep.nu]));
        }
    }
    t.note("nu", json!(rows));
    Ok(())
}

fn constructor_rings() -> Result<Vec<FiniteRing>> {
    let mut out = Vec::new();
    for n in 2..=36 {
        out.push(make_zmod(n)?);
    }
    for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4)] {
        out.push(make_gf(p, k)?);
    }
    for k in 2..=4 {
        out.push(truncated(k)?);
    }
    let f2 = make_gf(2, 1)?;
    let z4 = make_zmod(4)?;
    out.push(product(&[f2.clone(), z4.clone(), make_gf(3, 1)?])?.ring);
    out.push(poly_quotient(&z4, &Poly::new(&z4, vec![1, 1, 1]), &[])?.ring);
    let z12 = make_zmod(12)?;
    out.push(quotient(&z12, &ideal_generated(&z12, &[6]))?.ring);
    for (r, m) in idealization_pairs()? {
        out.push(idealize(&r, &m)?.ring);
    }
    for e in extras()? {
        let lattice = intermediate_algebras(&e.ext)?;
        for node in lattice.nodes() {
            out.push(e.ext.subalgebra_ring(node)?.0);
        }
    }
    Ok(out)
}

fn properties(t: &mut Tally) -> Result<()> {
    let rings = constructor_rings()?;
    for r in &rings {
        let res = r.check_axioms();
        t.check(res.is_ok(), || format!("{}: {}", r.label(), res.unwrap_err()));
    }
    t.note("rings_checked", json!(rings.len()));

    let mut delta_checked = 0;
    let mut nodes_checked = 0;
    for e in corpus()? {
        let lattice = intermediate_algebras(&e.ext)?;
        for i in 0..lattice.count() {
            nodes_checked += 1;
            t.check(lattice.irreducible_decomposition(i).is_some(), || {
                format!("{}: node {i} does not recompose", e.name)
            });
        }
        if e.ext.top().order() > CLOSURE_MAX_TOP {
            continue;
        }
        match is_delta0(&e.ext) {
            Ok(d0) => {
                delta_checked += 1;
                let rhs = is_quadratic(&e.ext) && is_delta(&e.ext, &lattice);
                t.check(d0 == rhs, || format!("{}: Δ₀ = {d0}, quadratic ∧ Δ = {rhs}", e.name));
            }
            Err(err) if err.is_size_limit() => {}
            Err(err) => t.check(false, || format!("{}: {err}", e.name)),
        }
    }
    t.note("delta_checked", json!(delta_checked));
    t.note("lattice_nodes", json!(nodes_checked));

    let mut modules: Vec<FiniteModule> = idealization_pairs()?.into_iter().map(|(_, m)| m).collect();
    for r in rings.iter().filter(|r| r.order() <= 64) {
        modules.push(FiniteModule::regular(r));
    }
    for m in &modules {
        let lattice = m.submodules()?;
        let chains = lattice.maximal_chains(DEFAULT_CHAIN_CAP);
        t.check(chains.graded, || format!("{}: maximal chains of unequal length", m.label()));
        t.eq(lattice.length(), m.module_length(), &format!("length of {}", m.label()));
    }
    t.note("modules_checked", json!(modules.len()));
    Ok(())
}
