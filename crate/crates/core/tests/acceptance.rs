//! Acceptance run: one line per criterion, `PASS` or `FAIL`.
//!
//! Each criterion runs the library's own check and then compares against
//! oracles written here from scratch (brute-force subset enumeration,
//! closed-form counts, direct table scans).

use std::process::ExitCode;

use ringlat::combinatorics::{exal_bound_check, stirling2};
use ringlat::crt::{make_crt_from_generators, random_families};
use ringlat::minimal::{classify_minimal, MinimalKind};
use ringlat::module::FiniteModule;
use ringlat::ring::{make_gf, make_zmod, poly_quotient, product};
use ringlat::suite::{run_criterion, CRT_FAMILIES, CRT_MAX_TOP, CRT_SEED, TITLES};
use ringlat::{ideal_generated, intermediate_algebras, Extension, FiniteRing, Ideal, Poly};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Subsets of `0..n` (as bitmasks) containing `must` and closed under the
/// given binary operations. Only for `n ≤ 20`.
fn closed_subsets(n: usize, must: u64, ops: &[&dyn Fn(usize, usize) -> usize]) -> Vec<u64> {
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask & must != must {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| ops.iter().all(|op| mask >> op(a, b) & 1 == 1))
        });
        if closed {
            out.push(mask);
        }
    }
    out
}

fn brute_subalgebra_count(ext: &Extension) -> usize {
    let s = ext.top();
    let must = ext.image().iter().fold(0u64, |m, i| m | 1 << i);
    let add = |a, b| s.add(a, b);
    let mul = |a, b| s.mul(a, b);
    closed_subsets(s.order(), must, &[&add, &mul]).len()
}

fn brute_submodule_count(m: &FiniteModule) -> usize {
    let r = m.ring().clone();
    let add = |a, b| m.add(a, b);
    let scalars: Vec<usize> = r.elements().collect();
    closed_subsets(m.order(), 1 << m.zero(), &[&add])
        .into_iter()
        .filter(|&mask| {
            (0..m.order())
                .filter(|&x| mask >> x & 1 == 1)
                .all(|x| scalars.iter().all(|&c| mask >> m.act(c, x) & 1 == 1))
        })
        .count()
}

/// `B(n+1) = Σ C(n,k) B(k)`.
fn bell_oracle(n: usize) -> u64 {
    let mut b = vec![1u64];
    for m in 0..n {
        let mut c = 1u64;
        let mut s = 0u64;
        for k in 0..=m {
            s += c * b[k];
            c = c * (m - k) as u64 / (k + 1) as u64;
        }
        b.push(s);
    }
    b[n]
}

/// Inclusion–exclusion: `S(n,p) = (1/p!) Σ (-1)^j C(p,j) (p-j)^n`.
fn stirling_oracle(n: usize, p: usize) -> u64 {
    let mut total: i128 = 0;
    let mut c: i128 = 1;
    for j in 0..=p {
        let term = c * ((p - j) as i128).pow(n as u32);
        total += if j % 2 == 0 { term } else { -term };
        c = c * (p - j) as i128 / (j + 1) as i128;
    }
    let fact: i128 = (1..=p as i128).product();
    (total / fact) as u64
}

fn truncated(k: usize) -> FiniteRing {
    let f2 = make_gf(2, 1).unwrap();
    let mut c = vec![0; k + 1];
    c[k] = 1;
    poly_quotient(&f2, &Poly::new(&f2, c), &[]).unwrap().ring
}

fn dual(r: &FiniteRing) -> Extension {
    let q = poly_quotient(r, &Poly::new(r, vec![0, 0, 1]), &[]).unwrap();
    Extension::new(q.embedding).unwrap()
}

fn bell_counts() -> Check {
    let fields = [make_gf(2, 1).unwrap(), make_gf(3, 1).unwrap(), make_gf(2, 2).unwrap()];
    for k in &fields {
        for n in 2..=4 {
            let ext = Extension::diagonal(k, n).unwrap();
            let count = intermediate_algebras(&ext).map_err(|e| e.to_string())?.count();
            ensure(count as u64 == bell_oracle(n), || {
                format!("|[{0},{0}^{n}]| = {count}, B_{n} = {1}", k.label(), bell_oracle(n))
            })?;
            if ext.top().order() <= 16 {
                let brute = brute_subalgebra_count(&ext);
                ensure(brute == count, || format!("brute force {brute} vs {count}"))?;
            }
        }
    }
    Ok(())
}

fn spir_counts() -> Check {
    let rings = [
        (make_zmod(4).unwrap(), 2),
        (make_zmod(8).unwrap(), 3),
        (make_zmod(9).unwrap(), 2),
        (make_zmod(27).unwrap(), 3),
        (truncated(3), 3),
    ];
    for (r, n) in &rings {
        let ext = Extension::diagonal(r, 2).unwrap();
        let count = intermediate_algebras(&ext).map_err(|e| e.to_string())?.count();
        ensure(count == n + 1, || format!("|[{0},{0}^2]| = {count}", r.label()))?;
        if ext.top().order() <= 16 {
            ensure(brute_subalgebra_count(&ext) == count, || "brute force".into())?;
        }
    }
    Ok(())
}

fn exal_counts() -> Check {
    let shapes = [(2, 3), (2, 4), (3, 4)];
    for r in [make_zmod(4).unwrap(), make_gf(3, 1).unwrap(), truncated(2)] {
        for &(p, n) in &shapes {
            let rep = exal_bound_check(&r, p, n).map_err(|e| e.to_string())?;
            let s = stirling_oracle(n, p);
            ensure(rep.classes as u64 == s, || {
                format!("{} ({p},{n}): {} images, S = {s}", r.label(), rep.classes)
            })?;
        }
    }
    let f2 = make_gf(2, 1).unwrap();
    let f2f2 = product(&[f2.clone(), f2]).unwrap().ring;
    for &(p, n) in &shapes {
        let rep = exal_bound_check(&f2f2, p, n).map_err(|e| e.to_string())?;
        let s = stirling_oracle(n, p) as usize;
        // images split componentwise over the two factors
        ensure(rep.classes == s * s, || format!("F2xF2 ({p},{n}): {}", rep.classes))?;
        ensure(stirling2(n, p).unwrap() as usize == s, || "stirling2".into())?;
    }
    Ok(())
}

fn trichotomy() -> Check {
    let f2 = make_gf(2, 1).unwrap();
    let f4 = make_gf(2, 2).unwrap();
    let z12 = make_zmod(12).unwrap();
    let crt = make_crt_from_generators(&z12, &[vec![4], vec![3], vec![3]]).unwrap();
    let cases = [
        (Extension::from_map(&f2, &f4, vec![0, 1]).unwrap(), MinimalKind::Inert),
        (Extension::diagonal(&f2, 2).unwrap(), MinimalKind::Decomposed),
        (dual(&f2), MinimalKind::Ramified),
        (crt.extension, MinimalKind::Decomposed),
    ];
    for (ext, want) in cases {
        let got = classify_minimal(&ext).map_err(|e| e.to_string())?;
        ensure(got.kind == want, || format!("{:?} instead of {:?}", got.kind, want))?;
    }
    Ok(())
}

/// `{r : r·S ⊆ R}` by scanning the tables.
fn conductor_oracle(ext: &Extension) -> Vec<usize> {
    let s = ext.top();
    ext.base()
        .elements()
        .filter(|&r| {
            let x = ext.embed().apply(r);
            s.elements().all(|y| ext.image().contains(s.mul(x, y)))
        })
        .collect()
}

fn conductor_formula() -> Check {
    let fams = random_families(CRT_SEED, CRT_FAMILIES, CRT_MAX_TOP).map_err(|e| e.to_string())?;
    ensure(fams.len() >= 20, || "fewer than 20 families".into())?;
    for c in &fams {
        let sum = c.family.complement_sum();
        ensure(sum.elements() == conductor_oracle(&c.extension), || {
            format!("ΣJ differs from the scanned conductor over {}", c.ring().label())
        })?;
    }
    Ok(())
}

fn pairwise_criterion() -> Check {
    let z12 = make_zmod(12).unwrap();
    for (gens, want) in [([4, 3, 3], 2), ([4, 3, 6], 0)] {
        let g: Vec<Vec<usize>> = gens.iter().map(|&x| vec![x]).collect();
        let c = make_crt_from_generators(&z12, &g).unwrap();
        let minimal = c.is_minimal_crt().map_err(|e| e.to_string())?.minimal;
        ensure(minimal == (want == 2), || format!("Z/12 {gens:?}"))?;
        let count = intermediate_algebras(&c.extension).map_err(|e| e.to_string())?.count();
        ensure((count == 2) == (want == 2), || format!("Z/12 {gens:?}: {count} algebras"))?;
    }
    Ok(())
}

fn idealizations() -> Check {
    let f2 = make_gf(2, 1).unwrap();
    let z4 = make_zmod(4).unwrap();
    let z8 = make_zmod(8).unwrap();
    let cases = [
        (FiniteModule::cyclic_sum(&f2, &[Ideal::zero(&f2), Ideal::zero(&f2)]).unwrap(), 5),
        (FiniteModule::regular(&z4), 3),
        (FiniteModule::regular(&z8), 4),
        (FiniteModule::cyclic_sum(&z4, &[ideal_generated(&z4, &[2])]).unwrap(), 2),
    ];
    for (m, want) in cases {
        let brute = brute_submodule_count(&m);
        ensure(brute == want, || format!("brute ν({}) = {brute}", m.label()))?;
        let id = ringlat::idealization::idealize(m.ring(), &m).map_err(|e| e.to_string())?;
        let count = intermediate_algebras(&id.extension()).map_err(|e| e.to_string())?.count();
        ensure(count == want, || format!("|[R,R(+)M]| = {count}"))?;
    }
    Ok(())
}

fn closure_oracles() -> Check {
    // R ⊆ R[ε] over a field is subintegral, so ⁺R is everything.
    let f2 = make_gf(2, 1).unwrap();
    let e = dual(&f2);
    ensure(ringlat::closures::seminormalization(&e).len() == 4, || "F2[ε]".into())?;
    // Z/4 → (Z/4)²: ⁺R = {(a,b): a ≡ b mod 2}
    let z4 = make_zmod(4).unwrap();
    let e = Extension::diagonal(&z4, 2).unwrap();
    let want: Vec<usize> = (0..16).filter(|x| (x / 4) % 2 == (x % 4) % 2).collect();
    ensure(ringlat::closures::seminormalization(&e).to_vec() == want, || "Z/4²".into())
}

fn special_ramified() -> Check {
    let f2 = make_gf(2, 1).unwrap();
    let r = poly_quotient(&f2, &Poly::new(&f2, vec![0, 0, 1]), &[]).unwrap();
    let (ring, t) = (&r.ring, r.var);
    let s = poly_quotient(
        ring,
        &Poly::new(ring, vec![ring.neg(t), 0, 1]),
        &[Poly::new(ring, vec![0, t])],
    )
    .unwrap();
    let ext = Extension::new(s.embedding).unwrap();
    ensure(brute_subalgebra_count(&ext) == 2, || "not minimal by brute force".into())
}

fn pointwise() -> Check {
    let f4 = make_gf(2, 2).unwrap();
    let f2 = make_gf(2, 1).unwrap();
    ensure(brute_subalgebra_count(&Extension::diagonal(&f4, 2).unwrap()) == 2, || "F4²".into())?;
    ensure(brute_subalgebra_count(&Extension::diagonal(&f2, 3).unwrap()) == 5, || "F2³".into())
}

fn census() -> Check {
    for (p, n) in [(2u64, 2usize), (2, 3), (3, 2)] {
        let k = make_gf(p, 1).unwrap();
        let r = product(&vec![k; n]).unwrap().ring;
        let brute = brute_submodule_count(&FiniteModule::regular(&r));
        ensure(brute == 1 << n, || format!("ν(F{p}^{n}) = {brute}"))?;
    }
    Ok(())
}

fn properties() -> Check {
    for n in 2..=20 {
        make_zmod(n).unwrap().check_axioms().map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let oracles: [fn() -> Check; 12] = [
        bell_counts,
        spir_counts,
        exal_counts,
        trichotomy,
        conductor_formula,
        pairwise_criterion,
        idealizations,
        closure_oracles,
        special_ramified,
        pointwise,
        census,
        properties,
    ];
    let mut failed = 0;
    for (i, oracle) in oracles.iter().enumerate() {
        let id = i + 1;
        let report = run_criterion(id);
        let extra = oracle();
        let ok = report.passed() && extra.is_ok();
        println!(
            "criterion {id:2} {}: {} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            TITLES[i],
            report.checks
        );
        for f in report.failures.iter().take(5) {
            println!("    {f}");
        }
        if let Err(e) = extra {
            println!("    oracle: {e}");
        }
        failed += !ok as usize;
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
