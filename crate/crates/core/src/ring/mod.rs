//! Finite commutative unital rings stored as dense operation tables.

mod construct;
mod hom;
mod structure;

pub use construct::{
    make_gf, make_zmod, poly_quotient, product, quotient, PolyQuotient, ProductRing,
    QuotientRing,
};
pub(crate) use construct::subring as construct_subring;
pub use hom::RingHom;
pub use structure::{
    idempotents, is_connected, is_field, is_local, is_spir, local_decomposition,
    nilpotency_index, units, LocalDecomposition, LocalFactor, SpirWitness,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::elemset::AdditiveGroup;
use crate::error::{Error, Result};
use crate::limits::HARD_MAX_ORDER;

struct Tables {
    order: usize,
    zero: usize,
    one: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    label: String,
}

/// A finite commutative ring with identity. Cloning is cheap; the tables
/// are shared and immutable.
#[derive(Clone)]
pub struct FiniteRing {
    t: Arc<Tables>,
}

impl FiniteRing {
    /// Builds the tables by evaluating `add` and `mul` on every pair. The
    /// caller guarantees the result is a ring; nothing is validated.
    pub(crate) fn build(
        order: usize,
        zero: usize,
        one: usize,
        label: impl Into<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> FiniteRing {
        assert!(order <= HARD_MAX_ORDER);
        let mut at = vec![0u16; order * order];
        let mut mt = vec![0u16; order * order];
        for a in 0..order {
            for b in a..order {
                let s = add(a, b) as u16;
                let p = mul(a, b) as u16;
                at[a * order + b] = s;
                at[b * order + a] = s;
                mt[a * order + b] = p;
                mt[b * order + a] = p;
            }
        }
        FiniteRing::from_raw(order, zero, one, label.into(), at, mt)
    }

    fn from_raw(
        order: usize,
        zero: usize,
        one: usize,
        label: String,
        add: Vec<u16>,
        mul: Vec<u16>,
    ) -> FiniteRing {
        let mut neg = vec![0u16; order];
        for a in 0..order {
            let row = &add[a * order..(a + 1) * order];
            neg[a] = row.iter().position(|&s| s as usize == zero).unwrap_or(0) as u16;
        }
        FiniteRing {
            t: Arc::new(Tables {
                order,
                zero,
                one,
                add,
                mul,
                neg,
                label,
            }),
        }
    }

    /// Builds a ring from explicit tables, checking every axiom.
    pub fn from_tables(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        label: impl Into<String>,
    ) -> Result<FiniteRing> {
        let n = add.len();
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        if n > HARD_MAX_ORDER {
            return Err(Error::SizeLimit {
                what: "ring",
                size: n as u128,
                limit: HARD_MAX_ORDER,
            });
        }
        if mul.len() != n || add.iter().chain(&mul).any(|row| row.len() != n) {
            return Err(Error::InvalidTables("tables must be square".into()));
        }
        if zero >= n || one >= n {
            return Err(Error::InvalidTables("zero or one out of range".into()));
        }
        if add.iter().chain(&mul).flatten().any(|&v| v >= n) {
            return Err(Error::InvalidTables("table entry out of range".into()));
        }
        let flat = |t: &Vec<Vec<usize>>| t.iter().flatten().map(|&v| v as u16).collect();
        let ring = FiniteRing::from_raw(n, zero, one, label.into(), flat(&add), flat(&mul));
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Checks every ring axiom over all element pairs and triples.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order();
        let fail = |m: String| Err(Error::InvalidTables(m));
        if self.zero() == self.one() {
            return fail("one equals zero".into());
        }
        for a in 0..n {
            if self.add(a, self.zero()) != a {
                return fail(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, self.one()) != a {
                return fail(format!("{a} * 1 != {a}"));
            }
            if self.add(a, self.neg(a)) != self.zero() {
                return fail(format!("{a} has no additive inverse"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("multiplication not commutative at ({a},{b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!(
                            "multiplication not associative at ({a},{b},{c})"
                        ));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.t.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.t.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.t.one
    }

    pub fn label(&self) -> &str {
        &self.t.label
    }

    /// Same tables under a different label.
    pub fn relabeled(&self, label: impl Into<String>) -> FiniteRing {
        FiniteRing {
            t: Arc::new(Tables {
                order: self.t.order,
                zero: self.t.zero,
                one: self.t.one,
                add: self.t.add.clone(),
                mul: self.t.mul.clone(),
                neg: self.t.neg.clone(),
                label: label.into(),
            }),
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.t.add[a * self.t.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.t.mul[a * self.t.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.t.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `k * 1` for an integer `k` (negative values use additive inverses).
    pub fn from_int(&self, k: i64) -> usize {
        let x = self.times(self.one(), k.unsigned_abs());
        if k < 0 {
            self.neg(x)
        } else {
            x
        }
    }

    /// `k * a` as repeated addition.
    pub fn times(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = self.zero();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> usize {
        let mut k = 1;
        let mut x = self.one();
        while x != self.zero() {
            x = self.add(x, self.one());
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn elem(&self, index: usize) -> RingElem<'_> {
        assert!(index < self.order());
        RingElem { ring: self, index }
    }

    /// Whether the two rings have identical tables (labels ignored).
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.t, &other.t)
            || (self.t.order == other.t.order
                && self.t.zero == other.t.zero
                && self.t.one == other.t.one
                && self.t.add == other.t.add
                && self.t.mul == other.t.mul)
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_tables(other)
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.label(), self.order())
    }
}

impl AdditiveGroup for FiniteRing {
    fn group_order(&self) -> usize {
        self.order()
    }
    fn group_zero(&self) -> usize {
        self.zero()
    }
    fn group_add(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

/// An element together with its ring, for arithmetic with operators.
#[derive(Clone, Copy)]
pub struct RingElem<'a> {
    ring: &'a FiniteRing,
    index: usize,
}

impl<'a> RingElem<'a> {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ring(&self) -> &'a FiniteRing {
        self.ring
    }

    pub fn pow(self, e: u64) -> RingElem<'a> {
        self.ring.elem(self.ring.pow(self.index, e))
    }

    pub fn is_zero(&self) -> bool {
        self.index == self.ring.zero()
    }
}

impl PartialEq for RingElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.ring.same_tables(other.ring)
    }
}

impl fmt::Debug for RingElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.index)
    }
}

impl<'a> Add for RingElem<'a> {
    type Output = RingElem<'a>;
    fn add(self, rhs: Self) -> Self::Output {
        self.ring.elem(self.ring.add(self.index, rhs.index))
    }
}

impl<'a> Sub for RingElem<'a> {
    type Output = RingElem<'a>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.ring.elem(self.ring.sub(self.index, rhs.index))
    }
}

impl<'a> Mul for RingElem<'a> {
    type Output = RingElem<'a>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.ring.elem(self.ring.mul(self.index, rhs.index))
    }
}

impl<'a> Neg for RingElem<'a> {
    type Output = RingElem<'a>;
    fn neg(self) -> Self::Output {
        self.ring.elem(self.ring.neg(self.index))
    }
}
