//! Catalogue of closed-form identities built on the extended-precision
//! Hurwitz-Lerch machinery, with deterministic domain sampling and a
//! residual-based checker.
//!
//! The crate exposes three layers:
//!
//! * [`registry`] lists every identity as an executable LHS/RHS pair with
//!   metadata (tier, parameter domains, per-factor evaluators for products).
//! * [`sample_domain`] draws reproducible parameter samples that respect
//!   each identity's validity region and pole margins.
//! * [`check`], [`check_infinite`] and [`run_identity`] evaluate both
//!   sides, assign verdicts, confirm failures at escalated precision and
//!   adjudicate systematic failures against registered alternate readings.

mod checker;
mod eval;
mod registry;
mod sampler;
mod types;

pub use checker::{
    check, check_infinite, run_identity, IdentityOutcome, BOUND_DEPTHS, DEFAULT_TRUNCATION,
    SYSTEMATIC_FAILURE_MIN,
};
pub use registry::{eval_side, lookup, registry};
pub use sampler::sample_domain;
pub use types::{
    AltReading, CheckResult, FactorFn, Identity, Kind, ParamSample, Side, SideFn, Tier, Verdict,
};
