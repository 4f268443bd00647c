//! Extended-precision numeric kernel: a precision policy type, complex
//! arithmetic over MPFR floats with principal-branch elementary functions,
//! series summation engines (direct, alternating-accelerated, unit-circle),
//! and a finite-difference fallback derivative.
//!
//! Everything downstream (special functions, identity checking) builds on
//! these primitives and inherits their conventions: precision travels
//! through [`PrecisionContext`], branch cuts resolve to the upper sheet,
//! and convergence failures surface as data (`converged = false`) or as
//! [`Error::NonConverged`], never as silently wrong values.

mod complex;
mod context;
mod diff;
mod error;
mod series;

pub use complex::ComplexValue;
pub use context::{PrecisionContext, MIN_DIGITS, MIN_GUARD_DIGITS, MIN_MAX_TERMS};
pub use diff::fd_derivative;
pub use error::{Error, Result};
pub use series::{sum_series, unit_circle_sum, CompensatedSum, SeriesMode, SeriesResult};

pub use rug::Float;
