//! Exact computations for affine osp(1|2) at admissible levels: weights,
//! Zhu algebra bimodules, fusion rules, PBW identities and singular vectors.

pub mod admissible;
pub mod error;
pub mod exactmath;
pub mod fusion;
pub mod pbw;
pub mod verma;
pub mod zhu;

pub use error::{Error, PairViolation, Result};
