use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::unipoly::write_poly;
use super::{Rational, UniPoly};

/// Sparse polynomial in `t1, t2` over ℚ, keyed by `(deg_t1, deg_t2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(Rational::one(), 0, 0)
    }

    pub fn t1() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn t2() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, d1: u32, d2: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(d1, d2, c);
        p
    }

    /// `u(t1) · t2^n`.
    pub fn from_stratum(u: &UniPoly, n: u32) -> Self {
        let mut p = BiPoly::zero();
        for (d, c) in u.terms() {
            p.add_term(d, n, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, d1: u32, d2: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((d1, d2)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(d1, d2));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d1: u32, d2: u32) -> Rational {
        self.coeffs.get(&(d1, d2)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest t2-degree present.
    pub fn t2_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(_, d2)| *d2).max()
    }

    /// The coefficient of `t2^n`, as a polynomial in `t1`.
    pub fn stratum(&self, n: u32) -> UniPoly {
        let mut u = UniPoly::zero();
        for ((d1, d2), c) in &self.coeffs {
            if *d2 == n {
                u.add_term(*d1, c.clone());
            }
        }
        u
    }

    /// All nonzero strata, by ascending t2-degree.
    pub fn strata(&self) -> BTreeMap<u32, UniPoly> {
        let mut out: BTreeMap<u32, UniPoly> = BTreeMap::new();
        for ((d1, d2), c) in &self.coeffs {
            out.entry(*d2).or_default().add_term(*d1, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Formal partial derivative in `t2`.
    pub fn d_dt2(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((d1, d2), c) in &self.coeffs {
            if *d2 > 0 {
                out.add_term(*d1, d2 - 1, c * &Rational::from(*d2));
            }
        }
        out
    }

    /// `t2 ∂/∂t2`, which scales each `t2^n` stratum by `n`.
    pub fn euler_t2(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((d1, d2), c) in &self.coeffs {
            out.add_term(*d1, *d2, c * &Rational::from(*d2));
        }
        out
    }

    pub fn mul_t1(&self) -> BiPoly {
        BiPoly { coeffs: self.coeffs.iter().map(|((a, b), c)| ((a + 1, *b), c.clone())).collect() }
    }

    pub fn eval(&self, t1: &Rational, t2: &Rational) -> Rational {
        self.coeffs.iter().map(|((a, b), c)| c * &t1.pow(*a) * t2.pow(*b)).sum()
    }
}

/// Partial derivative in `t2`.
pub fn bipoly_d_dt2(a: &BiPoly) -> BiPoly {
    a.d_dt2()
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // descending t1-degree, then t2-degree
        write_poly(f, self.coeffs.iter().rev().map(|((a, b), c)| (c, vec![("t1", *a), ("t2", *b)])))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.coeffs {
            out.add_term(*a, *b, c.clone());
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.coeffs {
            out.add_term(*a, *b, -c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a1, b1), c1) in &self.coeffs {
            for ((a2, b2), c2) in &rhs.coeffs {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}
