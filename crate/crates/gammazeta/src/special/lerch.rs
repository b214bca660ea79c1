//! Hurwitz-Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n / (n+v)^s.

use crate::error::{Error, Result};
use crate::eval::{ComplexScalar, EvalConfig, EvalResult, Method};
use crate::numerics::accel::euler_accelerate;
use crate::numerics::sum::sum_series;
use crate::special::zeta::hurwitz_em;
use std::f64::consts::PI;

/// Tolerance for "on the unit circle" / "equals a special point" tests;
/// delegated arguments arrive with a few ulps of rounding.
const CIRCLE_EPS: f64 = 4.0 * f64::EPSILON;

/// Terms between exact refreshes of the incremental power z^n.
const POWER_REFRESH: usize = 64;

/// Validated parameter triple for the Lerch transcendent.
///
/// Domain: |z| <= 1 and v not a nonpositive integer; on the unit circle
/// Re(s) > 1 is required, except at z = -1 where the alternating series
/// only needs Re(s) > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchParams {
    z: ComplexScalar,
    s: ComplexScalar,
    v: ComplexScalar,
}

impl LerchParams {
    pub fn new(z: ComplexScalar, s: ComplexScalar, v: ComplexScalar) -> Result<Self> {
        for (name, w) in [("z", z), ("s", s), ("v", v)] {
            if !w.re.is_finite() || !w.im.is_finite() {
                return Err(Error::Domain(format!("lerch parameter {name} not finite")));
            }
        }
        if v.im == 0.0 && v.re <= 0.0 && v.re.fract() == 0.0 {
            return Err(Error::Domain(format!(
                "lerch v = {} is a nonpositive integer",
                v.re
            )));
        }
        let r = z.norm();
        if r > 1.0 + CIRCLE_EPS {
            return Err(Error::Domain(format!("lerch |z| = {r} exceeds 1")));
        }
        if r >= 1.0 - CIRCLE_EPS {
            let minus_one = (z + 1.0).norm() <= CIRCLE_EPS;
            if minus_one {
                if s.re <= 0.0 {
                    return Err(Error::Domain(
                        "lerch at z = -1 requires Re(s) > 0".into(),
                    ));
                }
            } else if s.re <= 1.0 {
                return Err(Error::Domain(
                    "lerch on the unit circle requires Re(s) > 1".into(),
                ));
            }
        }
        Ok(LerchParams { z, s, v })
    }

    pub fn z(&self) -> ComplexScalar {
        self.z
    }
    pub fn s(&self) -> ComplexScalar {
        self.s
    }
    pub fn v(&self) -> ComplexScalar {
        self.v
    }
}

/// Upper bound on the series tail after the term of index `n` (so the
/// remaining sum runs over m >= n+1). Returns infinity while no usable
/// bound exists; `sum_series` keeps going in that case.
fn tail_after(n: usize, zabs: f64, s: ComplexScalar, v: ComplexScalar) -> f64 {
    let sigma = s.re;
    let r = v.re + n as f64 + 1.0;
    if r <= 0.0 {
        return f64::INFINITY;
    }
    let mut best = f64::INFINITY;
    if zabs < 1.0 {
        if sigma >= 0.0 {
            // |m+v|^{-sigma} and |arg(m+v)| both shrink as m grows
            let theta = v.im.abs().atan2(r);
            let m = r.powf(-sigma) * (s.im.abs() * theta).exp();
            best = best.min(zabs.powi(n as i32 + 1) * m / (1.0 - zabs));
        } else {
            // polynomial growth: majorize term ratios by a fixed factor
            let u = r + v.im.abs();
            let rho = zabs * (-sigma / u).exp();
            if rho < 1.0 {
                let m = u.powf(-sigma) * (s.im.abs() * PI).exp();
                best = best.min(zabs.powi(n as i32 + 1) * m / (1.0 - rho));
            }
        }
    }
    if sigma > 1.0 {
        // integral test on absolute values, valid for any |z| <= 1
        let theta = v.im.abs().atan2(r);
        let phase = (s.im.abs() * theta).exp();
        best = best.min(phase * (r.powf(-sigma) + r.powf(1.0 - sigma) / (sigma - 1.0)));
    }
    best
}

/// Evaluate the Lerch transcendent.
///
/// Routes: closed form at z = 0; Euler-Maclaurin continuation of the
/// Hurwitz sum at z = 1; Euler acceleration for Re(z) < -1/2 (covering
/// z = -1); tail-bounded direct summation otherwise. Powers use the
/// principal branch, (n+v)^s = exp(s Log(n+v)).
pub fn lerch_phi(p: &LerchParams, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    let (z, s, v) = (p.z, p.s, p.v);

    if z.norm() == 0.0 {
        let value = v.powc(-s);
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::NonFinite("lerch leading term".into()));
        }
        return Ok(EvalResult::new(
            value,
            f64::EPSILON * value.norm(),
            1,
            Method::ClosedForm,
        ));
    }

    if (z - 1.0).norm() <= CIRCLE_EPS {
        let (value, em_err) = hurwitz_em(s, v, 28)?;
        let err = em_err + 4.0 * f64::EPSILON * value.norm();
        return Ok(EvalResult::new(value, err, 35, Method::ClosedForm));
    }

    if z.re < -0.5 {
        let mut zn = ComplexScalar::new(1.0, 0.0);
        return euler_accelerate(
            |n| {
                if n > 0 {
                    zn = if n % POWER_REFRESH == 0 {
                        z.powu(n as u32)
                    } else {
                        zn * z
                    };
                }
                zn * (v + n as f64).powc(-s)
            },
            cfg,
        );
    }

    let zabs = z.norm();
    let mut zn = ComplexScalar::new(1.0, 0.0);
    sum_series(
        |n| {
            if n > 0 {
                zn = if n % POWER_REFRESH == 0 {
                    z.powu(n as u32)
                } else {
                    zn * z
                };
            }
            zn * (v + n as f64).powc(-s)
        },
        |n| tail_after(n, zabs, s, v),
        cfg,
    )
}
