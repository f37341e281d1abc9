//! Exact arithmetic: rationals, the cyclotomic field `Q(zeta_s)`, sparse
//! multivariate polynomials, and normal forms in the ambient function ring
//! `R_L = Q(zeta_s)(x_1..x_n)[y_1..y_n] / (y_i^s - f(x_i))`.
//!
//! Everything here is exact; no floating point enters the symbolic layer.

pub mod cyclo;
pub mod mpoly;
pub mod rat;
pub mod rl;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloElem};
pub use mpoly::{poly_gcd, squarefree_check, MPoly, Monomial, Vars};
pub use rat::{parse_rat, rat, rat_int, render_rat, Rat};
pub use rl::{normal_form, RLElem, RingCtx};

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("inverse of zero in Q(zeta_{0})")]
    ZeroInverse(u32),
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("expected a univariate polynomial")]
    Multivariate,
    #[error("cannot parse `{0}` as an exact rational")]
    BadRational(String),
    #[error("operands live in different polynomial rings")]
    VarMismatch,
    #[error("denominator must be free of the y-variables")]
    DenominatorHasY,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division is only supported by elements with y-free value")]
    NonInvertible,
}
