//! Syntax trees for ring expressions and element expressions, printed with
//! the fewest parentheses that parse back to the same tree.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    ZMod(u64),
    Gf { p: u64, k: u32 },
    /// Left-associative chain `A x B x C`; an explicitly parenthesized
    /// product inside stays nested.
    Product(Vec<RingExpr>),
    /// `base[var]/(monic, relations…)`.
    PolyQuot {
        base: Box<RingExpr>,
        var: String,
        monic: ElemExpr,
        relations: Vec<ElemExpr>,
    },
    /// `base/(g1, g2, …)`.
    Quot { base: Box<RingExpr>, gens: Vec<ElemExpr> },
    Idealize { base: Box<RingExpr>, module: ModSpec },
}

/// `R/I₁ + R/I₂ + …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSpec(pub Vec<Cyclic>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cyclic {
    /// `R`
    Free,
    /// `R/(g1, …)`
    Quotient(Vec<ElemExpr>),
    /// `0`
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemExpr {
    Int(u64),
    Sym(String),
    /// `(a, b, …)` with at least two components.
    Tuple(Vec<ElemExpr>),
    Neg(Box<ElemExpr>),
    Add(Box<ElemExpr>, Box<ElemExpr>),
    Sub(Box<ElemExpr>, Box<ElemExpr>),
    Mul(Box<ElemExpr>, Box<ElemExpr>),
    Pow(Box<ElemExpr>, u32),
}

impl ElemExpr {
    fn precedence(&self) -> u8 {
        match self {
            ElemExpr::Add(..) | ElemExpr::Sub(..) => 1,
            ElemExpr::Mul(..) => 2,
            ElemExpr::Neg(_) => 3,
            ElemExpr::Pow(..) => 4,
            ElemExpr::Int(_) | ElemExpr::Sym(_) | ElemExpr::Tuple(_) => 5,
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &ElemExpr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for ElemExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemExpr::Int(n) => write!(f, "{n}"),
            ElemExpr::Sym(s) => write!(f, "{s}"),
            ElemExpr::Tuple(items) => {
                write!(f, "(")?;
                write_list(f, items)?;
                write!(f, ")")
            }
            ElemExpr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, a.precedence() < 3)
            }
            ElemExpr::Add(a, b) | ElemExpr::Sub(a, b) => {
                let op = if matches!(self, ElemExpr::Add(..)) { " + " } else { " - " };
                wrap(f, a, a.precedence() < 1)?;
                write!(f, "{op}")?;
                wrap(f, b, b.precedence() <= 1)
            }
            ElemExpr::Mul(a, b) => {
                wrap(f, a, a.precedence() < 2)?;
                write!(f, "*")?;
                wrap(f, b, b.precedence() <= 2)
            }
            ElemExpr::Pow(a, e) => {
                wrap(f, a, a.precedence() < 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[ElemExpr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

impl fmt::Display for ModSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match c {
                Cyclic::Free => write!(f, "R")?,
                Cyclic::Zero => write!(f, "0")?,
                Cyclic::Quotient(gens) => {
                    write!(f, "R/(")?;
                    write_list(f, gens)?;
                    write!(f, ")")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::ZMod(n) => write!(f, "Z/{n}"),
            RingExpr::Gf { p, k: 1 } => write!(f, "GF({p})"),
            RingExpr::Gf { p, k } => write!(f, "GF({p}^{k})"),
            RingExpr::Product(items) => {
                for (i, r) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if matches!(r, RingExpr::Product(_)) {
                        write!(f, "({r})")?;
                    } else {
                        write!(f, "{r}")?;
                    }
                }
                Ok(())
            }
            RingExpr::PolyQuot {
                base,
                var,
                monic,
                relations,
            } => {
                write_base(f, base)?;
                write!(f, "[{var}]/({monic}")?;
                for r in relations {
                    write!(f, ", {r}")?;
                }
                write!(f, ")")
            }
            RingExpr::Quot { base, gens } => {
                write_base(f, base)?;
                write!(f, "/(")?;
                write_list(f, gens)?;
                write!(f, ")")
            }
            RingExpr::Idealize { base, module } => write!(f, "idealize({base}, {module})"),
        }
    }
}

fn write_base(f: &mut fmt::Formatter<'_>, base: &RingExpr) -> fmt::Result {
    if matches!(base, RingExpr::Product(_)) {
        write!(f, "({base})")
    } else {
        write!(f, "{base}")
    }
}
