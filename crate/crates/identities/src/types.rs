//! Core vocabulary for the identity registry and checker.

use std::collections::BTreeMap;
use std::fmt;

use mpcore::{ComplexValue, Error, PrecisionContext, Result};
use rug::Float;

/// Where an identity sits in the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tier {
    Core,
    Product,
    Constant,
    Functional,
    Limit,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::Core => "core",
            Tier::Product => "product",
            Tier::Constant => "constant",
            Tier::Functional => "functional",
            Tier::Limit => "limit",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the two sides are compared.
///
/// `Finite` identities equate two closed expressions. The `Infinite*`
/// variants equate a convergent infinite product with its limit; the suffix
/// records the geometric decay ratio of successive partial-product deltas
/// (1/3 or 1/9), which drives the truncation tail estimate. `Bound` entries
/// assert a strict inequality of partial products against an n-independent
/// bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Finite,
    InfiniteThird,
    InfiniteNinth,
    Bound,
}

impl Kind {
    pub fn is_limit(self) -> bool {
        matches!(self, Kind::InfiniteThird | Kind::InfiniteNinth)
    }

    /// Geometric ratio used for tail extrapolation of partial products.
    pub fn tail_ratio(self) -> Option<(i64, i64)> {
        match self {
            Kind::InfiniteThird => Some((1, 3)),
            Kind::InfiniteNinth => Some((1, 9)),
            _ => None,
        }
    }
}

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    SuspectedDiscrepancy,
    EvalError,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::SuspectedDiscrepancy => "suspected-discrepancy",
            Verdict::EvalError => "eval-error",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which side of an identity to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// Evaluator for one side of an identity.
pub type SideFn = fn(&ParamSample, &PrecisionContext) -> Result<ComplexValue>;

/// Single factor of a product identity at index p (used for incremental
/// partial products when checking limits and bounds).
pub type FactorFn = fn(&ParamSample, i64, &PrecisionContext) -> Result<ComplexValue>;

/// An alternate reading of an ambiguously printed identity. It is evaluated
/// automatically when the primary reading fails systematically.
#[derive(Clone)]
pub struct AltReading {
    pub description: &'static str,
    pub lhs: SideFn,
    pub rhs: SideFn,
}

/// One entry of the registry.
#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub title: &'static str,
    /// Formula sketch identifying the statement being checked.
    pub anchor: &'static str,
    pub tier: Tier,
    pub kind: Kind,
    /// Parameter names with their sampling-domain descriptors.
    pub params: &'static [(&'static str, &'static str)],
    pub lhs: SideFn,
    pub rhs: SideFn,
    /// Per-index factor for product/bound identities; enables single-pass
    /// truncation sweeps.
    pub factor: Option<FactorFn>,
    pub alt: Option<AltReading>,
    /// Short description of the evaluation strategy for reports.
    pub route_notes: &'static str,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("tier", &self.tier)
            .field("kind", &self.kind)
            .finish()
    }
}

/// A concrete assignment of parameter values, tagged with the generator seed
/// that produced it.
#[derive(Clone, Debug)]
pub struct ParamSample {
    pub values: BTreeMap<String, ComplexValue>,
    pub seed: u64,
}

impl ParamSample {
    pub fn new(seed: u64) -> Self {
        ParamSample {
            values: BTreeMap::new(),
            seed,
        }
    }

    pub fn with(mut self, name: &str, value: ComplexValue) -> Self {
        self.values.insert(name.to_owned(), value);
        self
    }

    pub fn with_int(self, name: &str, value: i64) -> Self {
        let v = ComplexValue::new(Float::with_val(64, value), Float::with_val(64, 0));
        self.with(name, v)
    }

    pub fn value(&self, name: &str) -> Result<&ComplexValue> {
        self.values
            .get(name)
            .ok_or_else(|| Error::invalid(format!("sample is missing parameter `{name}`")))
    }

    /// Parameter as a complex value at the working precision of `ctx`.
    pub fn cx(&self, name: &str, ctx: &PrecisionContext) -> Result<ComplexValue> {
        Ok(self.value(name)?.with_prec(ctx.prec_bits()))
    }

    /// Parameter that must be real, as a float at the working precision.
    pub fn real(&self, name: &str, ctx: &PrecisionContext) -> Result<Float> {
        let v = self.value(name)?;
        if !v.im().is_zero() {
            return Err(Error::invalid(format!(
                "parameter `{name}` must be real for this identity"
            )));
        }
        Ok(Float::with_val(ctx.prec_bits(), v.re()))
    }

    /// Parameter that must be a small integer (|x| <= 2^32).
    pub fn integer(&self, name: &str) -> Result<i64> {
        self.value(name)?
            .as_small_integer(1 << 32)
            .ok_or_else(|| Error::invalid(format!("parameter `{name}` must be a small integer")))
    }

    /// Compact "k=v, ..." rendering for notes and error messages.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (i, (name, v)) in self.values.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(name);
            out.push('=');
            out.push_str(&v.to_string_digits(17));
        }
        out
    }
}

/// Result of checking one identity against one sample.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub identity_id: String,
    pub sample: ParamSample,
    pub lhs_value: Option<ComplexValue>,
    pub rhs_value: Option<ComplexValue>,
    pub abs_residual: Option<Float>,
    /// Componentwise relative residual (absolute where a component collapses
    /// below the significance floor). For `Bound` identities this is the
    /// signed worst relative margin, negative when the bound holds strictly.
    pub rel_residual: Option<Float>,
    pub verdict: Verdict,
    pub route_notes: String,
}

impl CheckResult {
    pub(crate) fn error(identity_id: &str, sample: &ParamSample, note: String) -> Self {
        CheckResult {
            identity_id: identity_id.to_owned(),
            sample: sample.clone(),
            lhs_value: None,
            rhs_value: None,
            abs_residual: None,
            rel_residual: None,
            verdict: Verdict::EvalError,
            route_notes: note,
        }
    }
}
