use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::Rational;
use crate::error::{Error, Result};

/// Sparse univariate polynomial over ℚ. Zero coefficients are never stored,
/// so the zero polynomial is the empty map and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::monomial(c, 0)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        UniPoly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, deg: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        UniPoly { coeffs }
    }

    /// `t - root`.
    pub fn linear(root: &Rational) -> Self {
        let mut p = UniPoly::t();
        p.add_term(0, -root);
        p
    }

    /// Monic polynomial `∏ (t - r)` over the given roots (with multiplicity).
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Rational>>(roots: I) -> Self {
        // ∏ (t − aᵢ/bᵢ) = ∏ (bᵢt − aᵢ) / ∏ bᵢ, multiplied out in integers.
        let mut dense = vec![BigInt::one()];
        let mut scale = BigInt::one();
        for r in roots {
            let (a, b) = (r.numer(), r.denom());
            let mut next = vec![BigInt::zero(); dense.len() + 1];
            for (k, c) in dense.iter().enumerate() {
                next[k + 1] += c * b;
                next[k] -= c * a;
            }
            dense = next;
            scale *= b;
        }
        let mut p = UniPoly::zero();
        for (k, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                let c = Rational::from_bigints(c, scale.clone()).expect("nonzero denominator");
                p.coeffs.insert(k as u32, c);
            }
        }
        p
    }

    /// Dense coefficients, lowest degree first.
    pub fn from_dense(coeffs: &[Rational]) -> Self {
        let mut p = UniPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i as u32, c.clone());
        }
        p
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn add_term(&mut self, deg: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(deg).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> Rational {
        self.coeffs.get(&deg).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|(d, v)| (*d, v * c)).collect() }
    }

    pub fn shift_degree(&self, by: u32) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|(d, v)| (d + by, v.clone())).collect() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner in integers: with c_k = N_k/D and x = a/b,
        // f(x)·D·b^d = Σ N_k a^k b^{d−k}.
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        let den = self.coeffs.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut b_pow = BigInt::one();
        for d in (0..=deg).rev() {
            acc *= a;
            if let Some(c) = self.coeffs.get(&d) {
                acc += c.numer() * (&den / c.denom()) * &b_pow;
            }
            if d > 0 {
                b_pow *= b;
            }
        }
        Rational::from_bigints(acc, den * b_pow).expect("nonzero denominator")
    }

    pub fn derivative(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (d, c) in &self.coeffs {
            if *d > 0 {
                out.add_term(d - 1, c * &Rational::from(*d));
            }
        }
        out
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lc_inv = divisor.leading_coeff().unwrap().recip()?;
        let mut quotient = UniPoly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap() * &lc_inv;
            let shift = rd - dd;
            quotient.add_term(shift, factor.clone());
            for (d, c) in &divisor.coeffs {
                rem.add_term(d + shift, -(c * &factor));
            }
        }
        Ok((quotient, rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic gcd; `gcd(0, 0) = 0`. Runs the primitive remainder sequence
    /// over ℤ.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_empty() {
            let r = primitive_part(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        let mut out = UniPoly::zero();
        for (k, c) in a.into_iter().enumerate() {
            out.add_term(k as u32, Rational::from(c));
        }
        out.monic()
    }

    /// Dense integer coefficients of a primitive multiple; empty for zero.
    fn primitive(&self) -> Vec<BigInt> {
        let Some(deg) = self.degree() else { return Vec::new() };
        let den = self.coeffs.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let dense = (0..=deg)
            .map(|k| self.coeffs.get(&k).map_or_else(BigInt::zero, |c| c.numer() * (&den / c.denom())))
            .collect();
        primitive_part(dense)
    }

    /// True when `gcd(f, f')` is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Whether this polynomial equals `c·∏(t - r)` over exactly the given
    /// roots with multiplicity, for some nonzero constant `c`.
    pub fn has_root_multiset(&self, roots: &[Rational]) -> bool {
        let mut rest = self.clone();
        for r in roots {
            match rest.divmod(&UniPoly::linear(r)) {
                Ok((q, rem)) if rem.is_zero() => rest = q,
                _ => return false,
            }
        }
        rest.degree() == Some(0)
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn primitive_part(v: Vec<BigInt>) -> Vec<BigInt> {
    let v = trim(v);
    let content = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// `lc(b)^k·a mod b` with integer arithmetic throughout.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, c) in b.iter().enumerate() {
            r[k + shift] -= &lr * c;
        }
        r = trim(r);
    }
    r
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.coeffs.iter().rev().map(|(d, c)| (c, vec![("t", *d)])))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficients as `"num/den"` strings, lowest degree first.
impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_dense().serialize(serializer)
    }
}

/// Shared pretty printer for sparse polynomials: terms arrive as
/// `(coefficient, [(variable, exponent)])` in print order.
pub(crate) fn write_poly<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Rational, Vec<(&'static str, u32)>)>,
{
    let mut first = true;
    for (c, vars) in terms {
        let mono: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{}", mono.join("*"))?;
        } else {
            write!(f, "{abs}*{}", mono.join("*"))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, -c);
        }
        out
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}
