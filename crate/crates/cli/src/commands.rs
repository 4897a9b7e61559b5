//! One function per subcommand. Each returns the JSON report, a plain-text
//! rendering, and whether the command's own checks passed.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use ringlat::closures::canonical_decomposition;
use ringlat::combinatorics::{bell, exal_classes, exal_raw, stirling2};
use ringlat::crt::{make_crt, Reduction};
use ringlat::idealization::{idealization_lattice_bijection, interval_length};
use ringlat::lattice::intermediate_algebras;
use ringlat::minimal::classify_minimal_in;
use ringlat::predicates::PredicateReport;
use ringlat::suite::{run_suite, Suite};
use ringlat::{ElemSet, Extension};

use crate::error::CliError;
use crate::eval::{eval_ring, resolve_extension, Embedding, RingCtx};
use crate::parse::{parse_ideal_family, parse_modspec, parse_ring};

#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

fn passed(json: Value, text: String) -> Output {
    Output {
        json,
        text,
        ok: true,
    }
}

pub fn load_ring(src: &str) -> Result<RingCtx, CliError> {
    eval_ring(&parse_ring(src)?)
}

pub fn load_extension(base: &str, top: &str, embed: &Embedding) -> Result<Extension, CliError> {
    resolve_extension(&load_ring(base)?, &load_ring(top)?, embed)
}

fn header(ext: &Extension) -> Value {
    json!({
        "schema": 1,
        "base": ext.base().label(),
        "top": ext.top().label(),
        "base_order": ext.base().order(),
        "top_order": ext.top().order(),
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(x), Value::Object(y)) = (a.as_object_mut(), b) {
        x.extend(y);
    }
    a
}

fn set_text(s: &ElemSet) -> String {
    format!("{} elements {:?}", s.len(), s.to_vec())
}

pub fn lattice(base: &str, top: &str, embed: &Embedding, dot: Option<&Path>) -> Result<Output, CliError> {
    let ext = load_extension(base, top, embed)?;
    let l = intermediate_algebras(&ext)?;
    if let Some(path) = dot {
        let name = format!("[{}, {}]", ext.base().label(), ext.top().label());
        std::fs::write(path, l.to_dot(&name)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    let mut text = String::new();
    let _ = writeln!(text, "[{}, {}]: {} algebras, length {}", ext.base().label(), ext.top().label(), l.count(), l.length());
    for (i, n) in l.nodes().iter().enumerate() {
        let _ = writeln!(text, "  #{i}: {}", set_text(n));
    }
    let edges: Vec<String> = l.hasse_edges().iter().map(|(a, b)| format!("{a}->{b}")).collect();
    let _ = writeln!(text, "  covers: {}", edges.join(" "));
    Ok(passed(merge(header(&ext), l.to_json()), text))
}

pub fn classify(base: &str, top: &str, embed: &Embedding) -> Result<Output, CliError> {
    let ext = load_extension(base, top, embed)?;
    let l = intermediate_algebras(&ext)?;
    let c = classify_minimal_in(&ext, &l)?;
    let p = PredicateReport::compute(&ext, &l)?;
    let mut text = format!("{}\n", c.kind.name());
    if let Some(m) = &c.crucial {
        let _ = writeln!(text, "crucial ideal: {:?}", m.elements());
    }
    if let Value::Object(map) = p.to_json() {
        for (k, v) in map {
            let _ = writeln!(text, "{k}: {v}");
        }
    }
    let body = json!({
        "count": l.count(),
        "classification": c.to_json(),
        "predicates": p.to_json(),
    });
    Ok(passed(merge(header(&ext), body), text))
}

pub fn closures(base: &str, top: &str, embed: &Embedding) -> Result<Output, CliError> {
    let ext = load_extension(base, top, embed)?;
    let d = canonical_decomposition(&ext)?;
    let text = format!(
        "R:          {}\nseminormal: {}\nt-closure:  {}\nS:          {}\n",
        set_text(&d.base),
        set_text(&d.seminormalization),
        set_text(&d.tclosure),
        set_text(&d.top)
    );
    Ok(passed(merge(header(&ext), d.to_json()), text))
}

pub fn crt(ring: &str, ideals: &str) -> Result<Output, CliError> {
    let r = load_ring(ring)?;
    let family = parse_ideal_family(ideals)?
        .iter()
        .map(|g| r.ideal(g))
        .collect::<Result<Vec<_>, _>>()?;
    let c = make_crt(&r.ring, &family)?;
    let conductor = c.conductor_by_formula()?;
    let n = c.family.len();
    let criterion = if n > 2 {
        let v = c.is_minimal_crt()?;
        json!({
            "minimal": v.minimal,
            "witness": v.witness,
            "offending_pairs": v.offending_pairs,
        })
    } else if n == 2 {
        json!({ "minimal": c.is_minimal_crt2()? })
    } else {
        json!({ "minimal": Value::Null })
    };
    let weak = c.weak_crt_check();
    let reduction = match c.reduce_to_zero_conductor()? {
        Reduction::Isomorphism => json!({ "kind": "isomorphism" }),
        Reduction::Reduced { crt, kept } => json!({
            "kind": "reduced",
            "kept": kept,
            "ring_order": crt.ring().order(),
            "product_order": crt.product.ring.order(),
        }),
    };
    let lattice_count = match intermediate_algebras(&c.extension) {
        Ok(l) => json!(l.count()),
        Err(e) if e.is_size_limit() => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let mut text = String::new();
    let _ = writeln!(text, "{} ideals, product of order {}", n, c.product.ring.order());
    if let Some(note) = &c.notice {
        let _ = writeln!(text, "note: {note}");
    }
    let _ = writeln!(text, "conductor: {:?}", conductor.elements());
    let _ = writeln!(text, "criterion: {criterion}");
    let _ = writeln!(text, "weak CRT: {weak:?}");
    let _ = writeln!(text, "reduction: {reduction}");
    let _ = writeln!(text, "algebras: {lattice_count}");
    let json = json!({
        "schema": 1,
        "ring": r.ring.label(),
        "family": c.to_json(),
        "conductor": conductor.elements(),
        "criterion": criterion,
        "weak_crt": weak,
        "reduction": reduction,
        "lattice_count": lattice_count,
    });
    Ok(passed(json, text))
}

pub fn idealize(ring: &str, module: &str) -> Result<Output, CliError> {
    let r = load_ring(ring)?;
    let (m, _) = r.module(&parse_modspec(module)?)?;
    let b = idealization_lattice_bijection(&r.ring, &m)?;
    let mut intervals_ok = true;
    for n in b.submodules.nodes() {
        intervals_ok &= interval_length(&b.idealization, n)?.passed();
    }
    let nu = b.nu();
    let length = m.module_length();
    let text = format!(
        "M = {} over {}: |M| = {}, ν(M) = {nu}, L(M) = {length}\n|[R, R(+)M]| = {}\nbijection: ok\nintervals: {}\n",
        m.label(),
        r.ring.label(),
        m.order(),
        b.algebras.count(),
        if intervals_ok { "ok" } else { "MISMATCH" }
    );
    let json = json!({
        "schema": 1,
        "ring": r.ring.label(),
        "module": m.label(),
        "module_order": m.order(),
        "nu": nu,
        "length": length,
        "algebras": b.algebras.count(),
        "bijection": true,
        "intervals": intervals_ok,
    });
    Ok(Output {
        json,
        text,
        ok: intervals_ok,
    })
}

fn number(v: impl Into<Value> + ToString) -> Output {
    let text = format!("{}\n", v.to_string());
    passed(v.into(), text)
}

pub fn count_bell(n: usize) -> Result<Output, CliError> {
    Ok(number(bell(n)?))
}

pub fn count_stirling(n: usize, p: usize) -> Result<Output, CliError> {
    Ok(number(stirling2(n, p)?))
}

/// Images of injective maps `R^p → R^n`, or the maps themselves.
pub fn count_exal(ring: &str, p: usize, n: usize, maps: bool) -> Result<Output, CliError> {
    let r = load_ring(ring)?;
    Ok(number(if maps {
        exal_raw(&r.ring, p, n)?
    } else {
        exal_classes(&r.ring, p, n)?
    } as u64))
}

pub fn verify(suite: &str) -> Result<Output, CliError> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite);
    let mut text = String::new();
    for c in &report.criteria {
        let _ = writeln!(
            text,
            "criterion {:2} {}: {}",
            c.id,
            if c.passed() { "PASS" } else { "FAIL" },
            c.title
        );
        for f in &c.failures {
            let _ = writeln!(text, "    {f}");
        }
    }
    Ok(Output {
        json: report.to_json(),
        text,
        ok: report.passed(),
    })
}
