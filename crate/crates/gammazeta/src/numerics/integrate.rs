//! Adaptive semi-infinite quadrature built on generalized Gauss-Laguerre
//! rules with the exponential weight folded into the weights.

use crate::error::{Error, Result};
use crate::eval::{ComplexScalar, EvalConfig, EvalResult, Method};
use crate::numerics::laguerre::{rule, MAX_NODES};
use crate::numerics::sum::CompensatedComplex;
use crate::numerics::transform::RealFunction;

/// Raw quadrature outcome before being wrapped into an [`EvalResult`].
pub(crate) struct QuadValue {
    pub value: ComplexScalar,
    pub error: f64,
    pub effort: usize,
}

/// Approximate integral(0, inf) t^a g(t) dt for a g that decays like
/// e^{-rate t} times something bounded. The substitution u = rate*t maps
/// the problem onto a generalized Gauss-Laguerre rule with power a; the
/// rule's e^{-u} weight is pre-peeled into the stored weights, so g is
/// sampled as-is. Node count doubles until two consecutive levels agree
/// within tolerance.
///
/// Requires a > -1 and rate > 0. g must carry its own decay and stay
/// bounded at the origin; any power behaviour at 0 belongs in t^a.
pub(crate) fn adaptive_power_quad(
    a: f64,
    rate: f64,
    g: &dyn Fn(f64) -> ComplexScalar,
    cfg: &EvalConfig,
) -> Result<QuadValue> {
    cfg.validate()?;
    if !(a > -1.0) || !a.is_finite() {
        return Err(Error::Domain(format!(
            "quadrature power exponent {a} must exceed -1"
        )));
    }
    if !(rate > 0.0) || !rate.is_finite() {
        return Err(Error::Domain(format!(
            "quadrature decay rate {rate} must be positive"
        )));
    }
    let scale = rate.powf(-(a + 1.0));
    if !scale.is_finite() {
        return Err(Error::NonFinite("quadrature scale factor".into()));
    }

    let eval = |n: usize| -> Result<ComplexScalar> {
        let r = rule(n, a)?;
        let mut acc = CompensatedComplex::new();
        for i in 0..n {
            let t = r.nodes[i] / rate;
            let w = r.peeled[i];
            let gv = g(t);
            if !gv.re.is_finite() || !gv.im.is_finite() {
                return Err(Error::NonFinite(format!("integrand at t = {t}")));
            }
            acc.add(gv * w);
        }
        Ok(acc.total() * scale)
    };

    let mut n_lo = (cfg.quad_nodes / 2).clamp(4, MAX_NODES);
    let mut n_hi = (2 * n_lo).min(MAX_NODES);
    if n_hi <= n_lo {
        n_lo = MAX_NODES / 2;
        n_hi = MAX_NODES;
    }

    let mut prev = eval(n_lo)?;
    let mut effort = n_lo;
    let mut n = n_hi;
    loop {
        let cur = eval(n)?;
        effort += n;
        let err = (cur - prev).norm();
        if err <= cfg.threshold(cur.norm()) {
            return Ok(QuadValue {
                value: cur,
                error: err,
                effort,
            });
        }
        if n >= MAX_NODES {
            return Err(Error::NotConverged { effort });
        }
        prev = cur;
        n = (2 * n).min(MAX_NODES);
    }
}

/// Integrate f over (0, inf).
///
/// `weight_exponent` is a decay hint: f(t) e^{weight_exponent t} is
/// assumed bounded, so the quadrature nodes are scaled to that rate.
/// When it is zero the function's own declared exponential rate is used
/// instead (falling back to 1 if none is declared). The function's power
/// behaviour at the origin, t^{-sigma1} as t -> 0, is folded into the
/// quadrature rule so integrable endpoint singularities converge at
/// full rate.
pub fn integrate_semi_infinite(
    f: &RealFunction<'_>,
    weight_exponent: f64,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    if !(weight_exponent >= 0.0) || !weight_exponent.is_finite() {
        return Err(Error::Domain(format!(
            "weight exponent {weight_exponent} must be finite and >= 0"
        )));
    }
    let sigma1 = f.sigma1();
    let a = -sigma1;
    let rate = if weight_exponent > 0.0 {
        weight_exponent
    } else if f.exp_rate() > 0.0 {
        f.exp_rate()
    } else {
        1.0
    };
    let value = if sigma1 == 0.0 {
        adaptive_power_quad(a, rate, &|t| f.eval(t), cfg)?
    } else {
        // peel the origin power so g stays bounded near zero
        adaptive_power_quad(a, rate, &|t| f.eval(t) * t.powf(sigma1), cfg)?
    };
    Ok(EvalResult::new(
        value.value,
        value.error,
        value.effort,
        Method::Quadrature,
    ))
}
