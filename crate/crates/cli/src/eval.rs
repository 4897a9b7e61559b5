//! Turns syntax trees into rings, elements and embeddings.

use std::collections::BTreeMap;

use ringlat::idealization::idealize;
use ringlat::module::FiniteModule;
use ringlat::ring::{make_gf, make_zmod, poly_quotient, product, quotient, ProductRing};
use ringlat::{ideal_generated, Extension, FiniteRing, Ideal, Poly, RingHom};

use crate::ast::{Cyclic, ElemExpr, ModSpec, RingExpr};
use crate::error::CliError;

/// A ring together with the names usable in element expressions.
#[derive(Clone, Debug)]
pub struct RingCtx {
    pub ring: FiniteRing,
    pub symbols: BTreeMap<String, usize>,
    /// Factor contexts when the ring is a product, for tuple literals.
    pub factors: Option<(ProductRing, Vec<RingCtx>)>,
}

impl RingCtx {
    fn plain(ring: FiniteRing) -> RingCtx {
        RingCtx {
            ring,
            symbols: BTreeMap::new(),
            factors: None,
        }
    }

    /// Symbols carried along a map out of this ring.
    fn push_symbols(&self, map: &RingHom) -> BTreeMap<String, usize> {
        self.symbols
            .iter()
            .map(|(k, &v)| (k.clone(), map.apply(v)))
            .collect()
    }

    pub fn elem(&self, e: &ElemExpr) -> Result<usize, CliError> {
        let r = &self.ring;
        Ok(match e {
            ElemExpr::Int(n) => r.times(r.one(), *n),
            ElemExpr::Sym(s) => *self.symbols.get(s).ok_or_else(|| {
                CliError::Usage(format!("unknown symbol {s:?} in {}", r.label()))
            })?,
            ElemExpr::Tuple(items) => {
                let (pr, ctxs) = self.factors.as_ref().ok_or_else(|| {
                    CliError::Usage(format!("tuple literal in {}, which is not a product", r.label()))
                })?;
                if items.len() != ctxs.len() {
                    return Err(CliError::Usage(format!(
                        "tuple has {} components, {} has {} factors",
                        items.len(),
                        r.label(),
                        ctxs.len()
                    )));
                }
                let comps = items
                    .iter()
                    .zip(ctxs)
                    .map(|(x, c)| c.elem(x))
                    .collect::<Result<Vec<_>, _>>()?;
                pr.encode(&comps)
            }
            ElemExpr::Neg(a) => r.neg(self.elem(a)?),
            ElemExpr::Add(a, b) => r.add(self.elem(a)?, self.elem(b)?),
            ElemExpr::Sub(a, b) => r.sub(self.elem(a)?, self.elem(b)?),
            ElemExpr::Mul(a, b) => r.mul(self.elem(a)?, self.elem(b)?),
            ElemExpr::Pow(a, k) => r.pow(self.elem(a)?, *k as u64),
        })
    }

    /// A polynomial in `var` with coefficients in this ring.
    pub fn poly(&self, e: &ElemExpr, var: &str) -> Result<Poly, CliError> {
        let r = &self.ring;
        Ok(match e {
            ElemExpr::Sym(s) if s == var => Poly::var(r),
            ElemExpr::Int(_) | ElemExpr::Sym(_) | ElemExpr::Tuple(_) => {
                Poly::constant(r, self.elem(e)?)
            }
            ElemExpr::Neg(a) => self.poly(a, var)?.neg(r),
            ElemExpr::Add(a, b) => self.poly(a, var)?.add(r, &self.poly(b, var)?),
            ElemExpr::Sub(a, b) => self.poly(a, var)?.sub(r, &self.poly(b, var)?),
            ElemExpr::Mul(a, b) => self.poly(a, var)?.mul(r, &self.poly(b, var)?),
            ElemExpr::Pow(a, k) => self.poly(a, var)?.pow(r, *k as u64),
        })
    }

    pub fn ideal(&self, gens: &[ElemExpr]) -> Result<Ideal, CliError> {
        let g = gens
            .iter()
            .map(|e| self.elem(e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ideal_generated(&self.ring, &g))
    }

    pub fn module(&self, spec: &ModSpec) -> Result<(FiniteModule, Vec<Option<usize>>), CliError> {
        let ideals = spec
            .0
            .iter()
            .map(|c| match c {
                Cyclic::Free => Ok(Ideal::zero(&self.ring)),
                Cyclic::Zero => Ok(Ideal::whole(&self.ring)),
                Cyclic::Quotient(gens) => self.ideal(gens),
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(FiniteModule::cyclic_sum_with_generators(&self.ring, &ideals)?)
    }
}

fn to_usize(n: u64, what: &str) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Usage(format!("{what} {n} is too large")))
}

pub fn eval_ring(expr: &RingExpr) -> Result<RingCtx, CliError> {
    let mut ctx = match expr {
        RingExpr::ZMod(n) => RingCtx::plain(make_zmod(to_usize(*n, "modulus")?)?),
        RingExpr::Gf { p, k } => {
            let mut ctx = RingCtx::plain(make_gf(*p, *k)?);
            if *k > 1 {
                // the class of the indeterminate has index p
                ctx.symbols.insert("g".into(), *p as usize);
            }
            ctx
        }
        RingExpr::Product(items) => {
            let ctxs = items.iter().map(eval_ring).collect::<Result<Vec<_>, _>>()?;
            let rings: Vec<FiniteRing> = ctxs.iter().map(|c| c.ring.clone()).collect();
            let pr = product(&rings)?;
            let mut symbols = BTreeMap::new();
            for i in 0..ctxs.len() {
                let comps: Vec<usize> = ctxs
                    .iter()
                    .enumerate()
                    .map(|(j, c)| if i == j { c.ring.one() } else { c.ring.zero() })
                    .collect();
                symbols.insert(format!("e{}", i + 1), pr.encode(&comps));
            }
            RingCtx {
                ring: pr.ring.clone(),
                symbols,
                factors: Some((pr, ctxs)),
            }
        }
        RingExpr::PolyQuot {
            base,
            var,
            monic,
            relations,
        } => {
            let b = eval_ring(base)?;
            if b.symbols.contains_key(var) {
                return Err(CliError::Usage(format!(
                    "variable {var:?} already names an element of {}",
                    b.ring.label()
                )));
            }
            let m = b.poly(monic, var)?;
            let rels = relations
                .iter()
                .map(|r| b.poly(r, var))
                .collect::<Result<Vec<_>, _>>()?;
            let q = poly_quotient(&b.ring, &m, &rels)?;
            let mut symbols = b.push_symbols(&q.embedding);
            symbols.insert(var.clone(), q.var);
            RingCtx {
                ring: q.ring,
                symbols,
                factors: None,
            }
        }
        RingExpr::Quot { base, gens } => {
            let b = eval_ring(base)?;
            let q = quotient(&b.ring, &b.ideal(gens)?)?;
            RingCtx {
                symbols: b.push_symbols(&q.projection),
                ring: q.ring,
                factors: None,
            }
        }
        RingExpr::Idealize { base, module } => {
            let b = eval_ring(base)?;
            let (m, gens) = b.module(module)?;
            let id = idealize(&b.ring, &m)?;
            let mut symbols = b.push_symbols(&id.embedding);
            for (i, g) in gens.iter().enumerate() {
                if let Some(g) = g {
                    symbols.insert(format!("m{}", i + 1), id.pair(b.ring.zero(), *g));
                }
            }
            RingCtx {
                ring: id.ring,
                symbols,
                factors: None,
            }
        }
    };
    ctx.ring = ctx.ring.relabeled(expr.to_string());
    if let Some((pr, _)) = ctx.factors.as_mut() {
        pr.ring = ctx.ring.clone();
    }
    Ok(ctx)
}

/// The map fixing `1` and sending each named symbol of `base` to the
/// element of the same name in `target`, extended by sums and products.
pub fn canonical_hom(base: &RingCtx, target: &RingCtx) -> Result<RingHom, CliError> {
    let (r, s) = (&base.ring, &target.ring);
    let mut map: Vec<Option<usize>> = vec![None; r.order()];
    let mut known: Vec<usize> = Vec::new();
    let assign = |map: &mut Vec<Option<usize>>, known: &mut Vec<usize>, a: usize, b: usize| {
        match map[a] {
            Some(old) if old != b => Err(CliError::Usage(format!(
                "no ring map {} -> {} respects the named elements",
                r.label(),
                s.label()
            ))),
            Some(_) => Ok(false),
            None => {
                map[a] = Some(b);
                known.push(a);
                Ok(true)
            }
        }
    };
    assign(&mut map, &mut known, r.zero(), s.zero())?;
    assign(&mut map, &mut known, r.one(), s.one())?;
    for (name, &a) in &base.symbols {
        let b = *target.symbols.get(name).ok_or_else(|| {
            CliError::Usage(format!("{name:?} has no counterpart in {}", s.label()))
        })?;
        assign(&mut map, &mut known, a, b)?;
    }
    loop {
        let snapshot = known.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let (x, y) = (map[a].unwrap(), map[b].unwrap());
                assign(&mut map, &mut known, r.add(a, b), s.add(x, y))?;
                assign(&mut map, &mut known, r.mul(a, b), s.mul(x, y))?;
            }
        }
        if known.len() == snapshot.len() {
            break;
        }
    }
    let table = map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            CliError::Usage(format!("{} is not generated by its named elements", r.label()))
        })?;
    Ok(RingHom::new(r.clone(), s.clone(), table)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Embedding {
    Diagonal,
    FirstFactor,
    Explicit(Vec<usize>),
}

impl std::str::FromStr for Embedding {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Embedding, CliError> {
        match s {
            "diagonal" => Ok(Embedding::Diagonal),
            "first-factor" => Ok(Embedding::FirstFactor),
            _ => {
                let list = s.strip_prefix("explicit:").ok_or_else(|| {
                    CliError::Usage(format!(
                        "unknown embedding {s:?}: use diagonal, first-factor or explicit:<i0,i1,…>"
                    ))
                })?;
                list.split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|_| {
                            CliError::Usage(format!("bad index {t:?} in explicit embedding"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map(Embedding::Explicit)
            }
        }
    }
}

fn factor_map(
    target: &RingCtx,
    per_factor: impl Fn(usize, &RingCtx) -> Result<RingHom, CliError>,
) -> Result<RingHom, CliError> {
    let (pr, ctxs) = target.factors.as_ref().ok_or_else(|| {
        CliError::Usage(format!("{} is not a product", target.ring.label()))
    })?;
    let homs = ctxs
        .iter()
        .enumerate()
        .map(|(i, c)| per_factor(i, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(pr.induced(&homs)?)
}

/// `base ⊆ top` through the requested map.
pub fn resolve_extension(base: &RingCtx, top: &RingCtx, how: &Embedding) -> Result<Extension, CliError> {
    let hom = match how {
        Embedding::Explicit(table) => RingHom::new(base.ring.clone(), top.ring.clone(), table.clone())?,
        Embedding::Diagonal => match canonical_hom(base, top) {
            Ok(h) => h,
            Err(direct) if top.factors.is_some() => {
                factor_map(top, |_, c| canonical_hom(base, c)).map_err(|_| direct)?
            }
            Err(e) => return Err(e),
        },
        Embedding::FirstFactor => {
            let unnamed = RingCtx::plain(base.ring.clone());
            factor_map(top, |i, c| {
                if i == 0 {
                    canonical_hom(base, c)
                } else {
                    canonical_hom(&unnamed, c).map_err(|_| {
                        CliError::Usage(format!(
                            "first-factor needs {} to be generated by 1 so that {} receives k ↦ k·1",
                            base.ring.label(),
                            c.ring.label()
                        ))
                    })
                }
            })?
        }
    };
    Ok(Extension::new(hom)?)
}
