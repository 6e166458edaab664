//! Admissible levels and weights of osp(1|2), the vacuum polynomial, and
//! ξ-grading arithmetic.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, PairViolation, Result};
use crate::exactmath::{Rational, UniPoly};
use crate::pbw::Gen;
use crate::q;

/// `(p, q)` with `𝓁 + 3/2 = p/(2q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissiblePair {
    pub p: i64,
    pub q: i64,
}

impl AdmissiblePair {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let fail = |reason| Err(Error::InvalidPair { p, q, reason });
        if p < 2 || q < 1 {
            return fail(PairViolation::Range);
        }
        if (p - q).rem_euclid(2) != 0 {
            return fail(PairViolation::Parity);
        }
        if ((p - q) / 2).gcd(&q) != 1 {
            return fail(PairViolation::Gcd);
        }
        Ok(AdmissiblePair { p, q })
    }

    /// `𝓁 = p/(2q) − 3/2`.
    pub fn level(&self) -> Rational {
        self.shifted_level() - q!(3, 2)
    }

    /// `l = 𝓁 + 3/2 = p/(2q)`.
    pub fn shifted_level(&self) -> Rational {
        q!(self.p, 2 * self.q)
    }

    /// The grid point `(m, s)`, checked.
    pub fn weight(&self, m: i64, s: i64) -> Result<AdmissibleWeight> {
        let on_grid = (1..self.p).contains(&m) && (0..self.q).contains(&s) && (m + s) % 2 == 1;
        if !on_grid {
            return Err(Error::NotAdmissible { p: self.p, q: self.q, m, s });
        }
        Ok(AdmissibleWeight { m, s, j: q!(m - 1, 2) - self.shifted_level() * q!(s) })
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `validate_pair`: the pair if all three conditions hold.
pub fn validate_pair(p: i64, q: i64) -> Result<AdmissiblePair> {
    AdmissiblePair::new(p, q)
}

/// Valid pairs with `p ≤ max_p`, `q ≤ max_q`, ordered by `(p, q)`.
pub fn valid_pairs_in_box(max_p: i64, max_q: i64) -> Vec<AdmissiblePair> {
    (2..=max_p).flat_map(|p| (1..=max_q).filter_map(move |q| AdmissiblePair::new(p, q).ok())).collect()
}

/// Valid pairs with `p·q ≤ max_pq`, ordered by `(p, q)`.
pub fn valid_pairs_up_to_product(max_pq: i64) -> Vec<AdmissiblePair> {
    (2..=max_pq).flat_map(|p| (1..=max_pq / p).filter_map(move |q| AdmissiblePair::new(p, q).ok())).collect()
}

/// `j = (m−1)/2 − l·s` on the admissible grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissibleWeight {
    pub m: i64,
    pub s: i64,
    pub j: Rational,
}

impl fmt::Display for AdmissibleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.s)
    }
}

/// All grid points, sorted by `(s, m)`.
pub fn enumerate_weights(pair: &AdmissiblePair) -> Vec<AdmissibleWeight> {
    let mut out = Vec::new();
    for s in 0..pair.q {
        for m in 1..pair.p {
            if (m + s) % 2 == 1 {
                out.push(pair.weight(m, s).expect("grid point"));
            }
        }
    }
    out
}

/// The grid point whose value is `j`, found by solving `m = 2(j + ls) + 1`
/// for each `s`.
pub fn unique_ms(pair: &AdmissiblePair, j: &Rational) -> Option<AdmissibleWeight> {
    let l = pair.shifted_level();
    (0..pair.q).find_map(|s| {
        let m = (j + &(&l * q!(s))) * q!(2) + q!(1);
        pair.weight(m.to_i64()?, s).ok()
    })
}

/// `f(t) = ∏ (t − (i−1)/2 + j·l)` over `1 ≤ i ≤ p−1`, `0 ≤ j ≤ q−1`, `i+j` odd.
pub fn vacuum_polynomial(pair: &AdmissiblePair) -> UniPoly {
    let l = pair.shifted_level();
    let mut roots = Vec::new();
    for j in 0..pair.q {
        for i in 1..pair.p {
            if (i + j) % 2 == 1 {
                roots.push(q!(i - 1, 2) - &l * q!(j));
            }
        }
    }
    UniPoly::from_roots(&roots)
}

/// Integer weights `(m−1)/2` for odd `m ≤ p−1`.
pub fn ordinary_weights(pair: &AdmissiblePair) -> Vec<i64> {
    (1..pair.p).filter(|m| m % 2 == 1).map(|m| (m - 1) / 2).collect()
}

/// Integer pairs `(m, s)` with `|s| ≤ s_bound` and
/// `j = (m−1)/2 − s(𝓁 + 3/2)`, `m+s` odd, and `m, s` both nonnegative with
/// `m > 0` or both negative.
///
/// This is a bounded search: an empty result does not prove irreducibility.
pub fn reducibility_witnesses(level: &Rational, j: &Rational, s_bound: u32) -> Result<Vec<(i64, i64)>> {
    let l = level + &q!(3, 2);
    if l.is_zero() {
        return Err(Error::CriticalLevel);
    }
    let bound = s_bound as i64;
    let mut out = Vec::new();
    for s in -bound..=bound {
        let m = j * &q!(2) + q!(1) + &l * q!(2 * s);
        let Some(m) = m.to_i64() else { continue };
        let sign_ok = (m > 0 && s >= 0) || (m < 0 && s < 0);
        if sign_ok && (m + s).rem_euclid(2) == 1 {
            out.push((m, s));
        }
    }
    Ok(out)
}

/// The ξ-shifted conformal structure `ω_ξ = ω + (ξ/2) L(−1) h`, with
/// `κ₁ = 0`, `κ₂ = 𝓁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingShift {
    pub xi: Rational,
    pub kappa1: Rational,
    pub kappa2: Rational,
}

impl GradingShift {
    pub fn new(xi: Rational, level: Rational) -> Result<Self> {
        check_xi(&xi)?;
        Ok(GradingShift { xi, kappa1: Rational::zero(), kappa2: level })
    }

    pub fn weight(&self, g: Gen) -> Rational {
        weight_of(g, &self.xi)
    }

    /// `−6ξ(κ₁ + ξκ₂)`, added to the base central charge.
    pub fn central_charge_shift(&self) -> Rational {
        -(q!(6) * &self.xi * (&self.kappa1 + &self.xi * &self.kappa2))
    }
}

fn check_xi(xi: &Rational) -> Result<()> {
    if xi.is_positive() && *xi < 1 {
        Ok(())
    } else {
        Err(Error::XiOutOfRange(xi.to_string()))
    }
}

fn weight_of(g: Gen, xi: &Rational) -> Rational {
    // L'(0) = L(0) − (ξ/2)h(0) on the weight-one state g(−1)𝟙
    q!(1) - xi * &q!(g.h_weight(), 2)
}

/// L′(0)-weight of `g(−1)𝟙`: `h ↦ 1, e ↦ 1−ξ, f ↦ 1+ξ, x ↦ 1−ξ/2, y ↦ 1+ξ/2`.
pub fn xi_weight(generator: &str, xi: &Rational) -> Result<Rational> {
    let g: Gen = generator.parse()?;
    check_xi(xi)?;
    Ok(weight_of(g, xi))
}

/// `−6ξ²𝓁`.
pub fn central_charge_shift(xi: &Rational, level: &Rational) -> Result<Rational> {
    Ok(GradingShift::new(xi.clone(), level.clone())?.central_charge_shift())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: i64, q: i64) -> AdmissiblePair {
        AdmissiblePair::new(p, q).unwrap()
    }

    #[test]
    fn validation() {
        let p = pair(5, 1);
        assert_eq!(p.level(), q!(1));
        assert_eq!(p.shifted_level(), q!(5, 2));
        assert!(matches!(validate_pair(2, 2), Err(Error::InvalidPair { reason: PairViolation::Gcd, .. })));
        assert!(matches!(validate_pair(3, 2), Err(Error::InvalidPair { reason: PairViolation::Parity, .. })));
        assert!(matches!(validate_pair(1, 1), Err(Error::InvalidPair { reason: PairViolation::Range, .. })));
    }

    #[test]
    fn weights_examples() {
        let js = |p, q| enumerate_weights(&pair(p, q)).into_iter().map(|w| (w.m, w.s, w.j)).collect::<Vec<_>>();
        assert_eq!(js(5, 1), vec![(1, 0, q!(0)), (3, 0, q!(1))]);
        assert_eq!(js(2, 4), vec![(1, 0, q!(0)), (1, 2, q!(-1, 2))]);
        let mut vals: Vec<_> = js(5, 3).into_iter().map(|w| w.2).collect();
        vals.sort();
        let mut expect = vec![q!(0), q!(1), q!(-1, 3), q!(2, 3), q!(-5, 3), q!(-2, 3)];
        expect.sort();
        assert_eq!(vals, expect);
    }

    #[test]
    fn inversion() {
        let w = unique_ms(&pair(5, 1), &q!(1)).unwrap();
        assert_eq!((w.m, w.s), (3, 0));
        let w = unique_ms(&pair(5, 3), &q!(-2, 3)).unwrap();
        assert_eq!((w.m, w.s), (3, 2));
        assert!(unique_ms(&pair(5, 1), &q!(1, 2)).is_none());
    }

    #[test]
    fn vacuum_polynomials() {
        assert_eq!(vacuum_polynomial(&pair(5, 1)).to_string(), "t^2 - t");
        assert_eq!(vacuum_polynomial(&pair(2, 4)).to_string(), "t^2 + 1/2*t");
        let f = vacuum_polynomial(&pair(5, 3));
        assert_eq!(f.degree(), Some(6));
    }

    #[test]
    fn ordinary() {
        assert_eq!(ordinary_weights(&pair(5, 1)), vec![0, 1]);
        assert_eq!(ordinary_weights(&pair(8, 2)), vec![0, 1, 2, 3]);
        assert_eq!(ordinary_weights(&pair(2, 4)), vec![0]);
    }

    #[test]
    fn witnesses() {
        assert!(reducibility_witnesses(&q!(1), &q!(1), 3).unwrap().contains(&(3, 0)));
        assert!(reducibility_witnesses(&q!(1), &q!(1, 3), 5).unwrap().is_empty());
        assert!(reducibility_witnesses(&q!(0), &q!(0), 1).unwrap().contains(&(1, 0)));
        assert_eq!(reducibility_witnesses(&q!(-3, 2), &q!(0), 1), Err(Error::CriticalLevel));
    }

    #[test]
    fn grading() {
        assert_eq!(xi_weight("e", &q!(1, 2)).unwrap(), q!(1, 2));
        assert_eq!(xi_weight("h", &q!(1, 7)).unwrap(), q!(1));
        assert_eq!(xi_weight("y", &q!(1, 3)).unwrap(), q!(7, 6));
        assert_eq!(xi_weight("f", &q!(1, 3)).unwrap(), q!(4, 3));
        assert_eq!(xi_weight("x", &q!(1, 2)).unwrap(), q!(3, 4));
        assert!(matches!(xi_weight("k", &q!(1, 2)), Err(Error::UnknownGenerator(_))));
        assert!(matches!(xi_weight("e", &q!(1)), Err(Error::XiOutOfRange(_))));
        assert_eq!(central_charge_shift(&q!(1, 2), &q!(1)).unwrap(), q!(-3, 2));
        assert_eq!(central_charge_shift(&q!(2, 5), &q!(0)).unwrap(), q!(0));
        assert_eq!(central_charge_shift(&q!(1, 3), &q!(-5, 4)).unwrap(), q!(5, 6));
    }
}
