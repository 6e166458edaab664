//! Exact rational scalars and sparse uni/bivariate polynomials over ℚ.
//!
//! Everything downstream is computed in exact arithmetic; there is no
//! floating point in any algorithmic path.

mod bipoly;
mod rational;
mod unipoly;

pub use bipoly::{bipoly_d_dt2, BiPoly};
pub use rational::{rat_arith, RatOp, Rational};
pub use unipoly::UniPoly;

/// `q·b + r` for the pair returned by [`UniPoly::divmod`].
pub fn upoly_divmod(a: &UniPoly, b: &UniPoly) -> crate::Result<(UniPoly, UniPoly)> {
    a.divmod(b)
}
