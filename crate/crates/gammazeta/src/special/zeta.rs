//! Riemann zeta on Re > 0 through the alternating (eta) series, with a
//! Hurwitz-type Euler-Maclaurin continuation where the eta prefactor
//! degenerates.

use crate::error::{Error, Result};
use crate::eval::{ComplexScalar, EvalConfig, EvalResult, Method, MethodPolicy};
use crate::numerics::accel::euler_accelerate;
use std::f64::consts::LN_2;

/// Bernoulli numbers B_2, B_4, ..., B_14.
const BERNOULLI: [f64; 7] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
];
/// (2k)! for k = 1..=7.
const FACT_2K: [f64; 7] = [
    2.0,
    24.0,
    720.0,
    40_320.0,
    3_628_800.0,
    479_001_600.0,
    87_178_291_200.0,
];

/// Leading direct terms before the Euler-Maclaurin correction takes over.
const EM_SHIFT: usize = 28;

/// `|1 - 2^{1-s}|` below this switches zeta to the Euler-Maclaurin route:
/// the eta quotient loses all precision near the zeros of its prefactor
/// (s = 1 + 2 pi i k / ln 2), and near s = 1 the quotient is 0/0.
const ETA_PREFACTOR_GUARD: f64 = 0.05;

/// Hurwitz zeta sum_{n>=0} (n+v)^{-s} by Euler-Maclaurin with `shift`
/// leading terms and seven Bernoulli corrections. Returns the value and an
/// error estimate (the first omitted correction term).
///
/// Valid for s != 1 with Re(s) > -12 and Re(v) + shift large enough that
/// the expansion point sits far to the right; callers here always have
/// Re(v) > 0. Machine precision for the parameter ranges in this crate.
pub(crate) fn hurwitz_em(
    s: ComplexScalar,
    v: ComplexScalar,
    shift: usize,
) -> Result<(ComplexScalar, f64)> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("hurwitz zeta at s = 1".into()));
    }
    if v.re + shift as f64 <= 1.0 {
        return Err(Error::Domain(format!(
            "hurwitz expansion point {} too far left",
            v.re + shift as f64
        )));
    }
    let mut acc = crate::numerics::sum::CompensatedComplex::new();
    for n in 0..shift {
        acc.add((v + n as f64).powc(-s));
    }
    let t = v + shift as f64;
    // integral term plus half-weight boundary term
    acc.add(t.powc(1.0 - s) / (s - 1.0));
    acc.add(t.powc(-s) * 0.5);
    // Bernoulli corrections: B_{2k}/(2k)! * (s)_{2k-1} * t^{-s-2k+1}
    let t_minus_2 = t.powc(ComplexScalar::new(-2.0, 0.0));
    let mut poch = s;
    let mut tpow = t.powc(-s - 1.0);
    let mut last = 0.0;
    for k in 0..BERNOULLI.len() {
        let term = poch * tpow * (BERNOULLI[k] / FACT_2K[k]);
        acc.add(term);
        last = term.norm();
        let kf = (2 * k) as f64;
        poch = poch * (s + (kf + 1.0)) * (s + (kf + 2.0));
        tpow *= t_minus_2;
    }
    let value = acc.total();
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NonFinite("hurwitz euler-maclaurin".into()));
    }
    // the expansion is asymptotic; the last included term tracks the
    // first omitted one closely for the t used here
    Ok((value, last))
}

fn eta_config() -> EvalConfig {
    EvalConfig {
        rel_tol: 1e-14,
        abs_tol: 1e-300,
        max_terms: 2_000_000,
        quad_nodes: 64,
        method_policy: MethodPolicy::Auto,
    }
}

/// Riemann zeta with route and effort accounting.
///
/// Domain: Re(s) > 0, s != 1 (a simple pole). The primary route divides
/// the accelerated Dirichlet eta series by 1 - 2^{1-s}; where that
/// prefactor degenerates, a direct Euler-Maclaurin continuation of the
/// Dirichlet series takes over.
pub fn riemann_zeta_result(s: ComplexScalar) -> Result<EvalResult> {
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "zeta restricted to positive real part, got {}",
            s.re
        )));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("zeta at s = 1".into()));
    }
    let prefactor = ComplexScalar::new(1.0, 0.0) - ((1.0 - s) * LN_2).exp();
    if prefactor.norm() < ETA_PREFACTOR_GUARD {
        let (value, em_err) = hurwitz_em(s, ComplexScalar::new(1.0, 0.0), EM_SHIFT)?;
        let err = em_err + 4.0 * f64::EPSILON * value.norm();
        return Ok(EvalResult::new(
            value,
            err,
            EM_SHIFT + BERNOULLI.len(),
            Method::ClosedForm,
        ));
    }
    let eta = euler_accelerate(
        |n| {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            ComplexScalar::from(n as f64 + 1.0).powc(-s) * sign
        },
        &eta_config(),
    )?;
    let value = eta.value / prefactor;
    let err = (eta.error_estimate + 4.0 * f64::EPSILON * eta.value.norm()) / prefactor.norm();
    Ok(EvalResult::new(
        value,
        err,
        eta.effort,
        Method::AcceleratedSeries,
    ))
}

/// Riemann zeta value on Re(s) > 0, s != 1.
pub fn riemann_zeta(s: ComplexScalar) -> Result<ComplexScalar> {
    riemann_zeta_result(s).map(|r| r.value)
}
