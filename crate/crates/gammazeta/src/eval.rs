use crate::error::{Error, Result};
use num_complex::Complex64;

/// Complex scalar used for orders, shifts and function values throughout.
pub type ComplexScalar = Complex64;

/// Evaluation-route selection policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodPolicy {
    /// Pick the route from the argument regime (series threshold below).
    #[default]
    Auto,
    /// Force the direct series route.
    SeriesOnly,
    /// Force the quadrature route where one exists.
    QuadratureOnly,
}

/// With `Auto` policy, direct series summation is used when `Re(x)` is at
/// least this threshold: the geometric ratio is then at most `e^{-0.05}`,
/// i.e. roughly 460 terms per decade of accuracy. Below it, accelerated or
/// delegated routes take over.
pub const AUTO_SERIES_THRESHOLD: f64 = 0.05;

/// Tolerances and effort budgets shared by all evaluation routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Relative tolerance target. Must be at least 8 machine epsilons.
    pub rel_tol: f64,
    /// Absolute tolerance floor (protects values near zero).
    pub abs_tol: f64,
    /// Series term budget. Must be at least 16.
    pub max_terms: usize,
    /// Starting quadrature size. Must be at least 4; capped at 256 by the
    /// adaptive doubling engine.
    pub quad_nodes: usize,
    /// Route selection policy.
    pub method_policy: MethodPolicy,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-300,
            max_terms: 2_000_000,
            quad_nodes: 64,
            method_policy: MethodPolicy::Auto,
        }
    }
}

impl EvalConfig {
    /// Check the configuration invariants.
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol >= 8.0 * f64::EPSILON) {
            return Err(Error::Domain(format!(
                "rel_tol {} below 8 machine epsilons",
                self.rel_tol
            )));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::Domain("abs_tol must be positive".into()));
        }
        if self.max_terms < 16 {
            return Err(Error::Domain("max_terms must be at least 16".into()));
        }
        if self.quad_nodes < 4 {
            return Err(Error::Domain("quad_nodes must be at least 4".into()));
        }
        Ok(())
    }

    /// Stopping threshold for a partial result of magnitude `scale`.
    pub(crate) fn threshold(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale)
    }
}

/// Which route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Method {
    Series,
    AcceleratedSeries,
    Quadrature,
    ClosedForm,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Series => "Series",
            Method::AcceleratedSeries => "AcceleratedSeries",
            Method::Quadrature => "Quadrature",
            Method::ClosedForm => "ClosedForm",
        };
        f.write_str(s)
    }
}

/// Universal return type: value, claimed error bound, work done, route tag.
///
/// `error_estimate` is an upper-bound claim; the test suite checks actual
/// errors against ten times the claim on every golden value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: ComplexScalar,
    pub error_estimate: f64,
    pub effort: usize,
    pub method: Method,
}

impl EvalResult {
    pub(crate) fn new(
        value: ComplexScalar,
        error_estimate: f64,
        effort: usize,
        method: Method,
    ) -> Self {
        EvalResult {
            value,
            error_estimate: error_estimate.max(0.0),
            effort,
            method,
        }
    }
}
