//! Extended-precision special functions over the `mpcore` kernel.
//!
//! The centerpiece is the Lerch transcendent Phi(z, s, v) with
//! shape-dependent evaluation routes ([`lerch_phi`]) and an s-derivative
//! ([`lerch_phi_sderiv`]). Supporting cast: log-gamma and gamma on the cut
//! plane, polygamma up to order 4, Hurwitz zeta with its s-derivative by
//! Euler-Maclaurin summation, Bernoulli numbers and polynomials, and the
//! classical constants, each of which is computable along two independent
//! in-library routes for cross-validation.
//!
//! All functions take and return `mpcore` complex values and honor the
//! principal branch on negative real arguments.

pub mod bernoulli;
pub mod constants;
pub mod gamma;
pub mod hurwitz;
pub mod lerch;
pub mod polygamma;

pub use bernoulli::{bernoulli, bernoulli_float, bernoulli_poly};
pub use gamma::{gamma, log_gamma};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv};
pub use lerch::{
    lerch_phi, lerch_phi_forced, lerch_phi_neg_int, lerch_phi_sderiv, EvalRoute, LerchArgs,
    MAX_NEG_INT_ORDER,
};
pub use polygamma::{polygamma, MAX_POLYGAMMA_ORDER};
