//! Super PBW normal forms in U(osp(1|2)) and U(L₀), the P/Q calculus, the
//! anti-automorphism σ and the projected MFF words.

mod algebra;
mod identities;
mod mff;

pub use algebra::{bracket, nf_mul, Algebra, Gen, Mono, UEElement};
pub use identities::{
    default_alpha_grid, monomial, pq, sigma, verify_pq_identities, xy_power_factorization, xy_power_factors,
    FactorizationCheck, IdentityCheck, IdentityReport, PqKind,
};
pub use mff::{
    closed_form_projection, mff_word, theta, verify_projection, Letter, MffKind, MffWord, PqWord, Projection,
    ProjectionCheck, ProjectionStatus,
};
