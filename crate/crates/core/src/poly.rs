//! Dense univariate polynomials with coefficients in a [`FiniteRing`].

use crate::ring::FiniteRing;

/// Coefficients from the constant term upwards; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<usize>,
}

impl Poly {
    pub fn new(ring: &FiniteRing, mut coeffs: Vec<usize>) -> Poly {
        while coeffs.last() == Some(&ring.zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(ring: &FiniteRing, c: usize) -> Poly {
        Poly::new(ring, vec![c])
    }

    /// The indeterminate.
    pub fn var(ring: &FiniteRing) -> Poly {
        Poly::new(ring, vec![ring.zero(), ring.one()])
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    pub fn coeff(&self, ring: &FiniteRing, i: usize) -> usize {
        self.coeffs.get(i).copied().unwrap_or(ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<usize> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, ring: &FiniteRing, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| ring.add(self.coeff(ring, i), other.coeff(ring, i)))
            .collect();
        Poly::new(ring, c)
    }

    pub fn neg(&self, ring: &FiniteRing) -> Poly {
        Poly::new(ring, self.coeffs.iter().map(|&c| ring.neg(c)).collect())
    }

    pub fn sub(&self, ring: &FiniteRing, other: &Poly) -> Poly {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul(&self, ring: &FiniteRing, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = ring.add(c[i + j], ring.mul(a, b));
            }
        }
        Poly::new(ring, c)
    }

    pub fn pow(&self, ring: &FiniteRing, e: u64) -> Poly {
        let mut acc = Poly::constant(ring, ring.one());
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, ring: &FiniteRing, monic: &Poly) -> Poly {
        let d = monic.degree().expect("nonzero modulus");
        debug_assert_eq!(monic.leading(), Some(ring.one()));
        let mut c = self.coeffs.clone();
        while c.len() > d {
            let top = c.len() - 1;
            let lead = c[top];
            if lead != ring.zero() {
                for (i, &m) in monic.coeffs.iter().enumerate() {
                    let k = top - d + i;
                    c[k] = ring.sub(c[k], ring.mul(lead, m));
                }
            }
            c.pop();
        }
        Poly::new(ring, c)
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display(&self, ring: &FiniteRing, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == ring.zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(match (c == ring.one(), mono.is_empty()) {
                (_, true) => format!("{c}"),
                (true, false) => mono,
                (false, false) => format!("{c}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}
