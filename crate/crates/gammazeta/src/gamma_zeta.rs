//! The exponentially weighted zeta-type functions
//!
//! ```text
//! phi_family:  Phi_nu(alpha; x) = sum_{n>=0} e^{-(n+nu+1)x} / (n+nu+1)^alpha
//! psi_family:  Psi_nu(alpha; x) = sum_{n>=0} (-1)^n e^{-(n+nu+1)x} / (n+nu+1)^alpha
//! ```
//!
//! with three evaluation routes (direct series, Hurwitz-Lerch
//! delegation, Weyl-integral quadrature), the negative-order calculus,
//! and residuals for the shift-duality, duplication, and semigroup
//! identities these functions satisfy.

use crate::error::{Error, Result};
use crate::eval::{ComplexScalar, EvalConfig, EvalResult, MethodPolicy, AUTO_SERIES_THRESHOLD};
use crate::numerics::sum::sum_series;
use crate::numerics::transform::{weyl_transform, RealFunction};
use crate::special::gamma::gamma;
use crate::special::lerch::{lerch_phi, LerchParams};
use std::f64::consts::{LN_2, PI};

/// Terms between exact refreshes of the running factor e^{-nx}.
const POWER_REFRESH: usize = 64;

/// Evaluation point (nu, alpha, x) shared by the Phi and Psi families.
///
/// nu must exceed -1 so every series base n+nu+1 is positive and the
/// powers stay branch-free; alpha is unrestricted; x needs Re(x) > 0,
/// or x = 0 with the per-family condition on Re(alpha) checked at
/// evaluation time (Phi: > 1, Psi: > 0). Purely imaginary nonzero x is
/// rejected: convergence there is conditional at best.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaZetaPoint {
    nu: f64,
    alpha: ComplexScalar,
    x: ComplexScalar,
}

impl GammaZetaPoint {
    pub fn new(nu: f64, alpha: ComplexScalar, x: ComplexScalar) -> Result<Self> {
        if !nu.is_finite() || nu <= -1.0 {
            return Err(Error::Domain(format!(
                "order shift nu = {nu} must be a finite real > -1 (series bases must stay positive)"
            )));
        }
        if !alpha.re.is_finite() || !alpha.im.is_finite() {
            return Err(Error::Domain("order alpha must be finite".into()));
        }
        if !x.re.is_finite() || !x.im.is_finite() {
            return Err(Error::Domain("shift x must be finite".into()));
        }
        let at_zero = x.re == 0.0 && x.im == 0.0;
        if !(x.re > 0.0 || at_zero) {
            return Err(Error::Domain(format!(
                "shift x = {x} needs Re(x) > 0 (or exactly x = 0)"
            )));
        }
        Ok(GammaZetaPoint { nu, alpha, x })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
    pub fn alpha(&self) -> ComplexScalar {
        self.alpha
    }
    pub fn x(&self) -> ComplexScalar {
        self.x
    }

    fn is_zero_shift(&self) -> bool {
        self.x.re == 0.0 && self.x.im == 0.0
    }
}

fn require_phi_domain(p: &GammaZetaPoint) -> Result<()> {
    if p.is_zero_shift() && !(p.alpha.re > 1.0) {
        return Err(Error::Domain(
            "at x = 0 the one-signed series needs Re(alpha) > 1".into(),
        ));
    }
    Ok(())
}

fn require_psi_domain(p: &GammaZetaPoint) -> Result<()> {
    if p.is_zero_shift() && !(p.alpha.re > 0.0) {
        return Err(Error::Domain(
            "at x = 0 the alternating series needs Re(alpha) > 0".into(),
        ));
    }
    Ok(())
}

/// Upper bound on |sum over m > n| of e^{-(m+nu+1) Re x} (m+nu+1)^{-Re alpha}.
///
/// Writing c = m+nu+1 >= r := n+nu+2 and sigma = Re(alpha), each term's
/// magnitude is e^{-c Re x} c^{-sigma} (the base is a positive real, so
/// Im(alpha) contributes only a unit-modulus phase). Three bounds apply:
///
/// * sigma >= 0, Re x > 0: magnitudes are decreasing, so the tail is
///   below the first omitted magnitude times the geometric mass
///   1/(1 - e^{-Re x}).
/// * sigma < 0, Re x > 0: the term ratio is e^{-Re x}((c+1)/c)^{-sigma}
///   <= e^{-Re x} e^{-sigma/r} =: rho; when rho < 1 the tail is below
///   the first omitted magnitude / (1 - rho).
/// * sigma > 1, any Re x >= 0: e^{-c Re x} <= e^{-r Re x}, and the
///   integral test bounds sum c^{-sigma} by r^{-sigma} + r^{1-sigma}/(sigma-1).
///
/// The minimum of the applicable bounds is returned; the third one is
/// what keeps near-zero shifts from needing astronomically many terms.
/// When `alternating` is set and everything is real with decreasing
/// magnitudes, the partial sums bracket the limit and the first omitted
/// magnitude alone is also valid.
fn series_tail(
    n: usize,
    nu: f64,
    alpha: ComplexScalar,
    x: ComplexScalar,
    alternating: bool,
) -> f64 {
    let sigma = alpha.re;
    let rex = x.re;
    let r = nu + n as f64 + 2.0;
    let first = (-r * rex - sigma * r.ln()).exp();
    let mut best = f64::INFINITY;
    if rex > 0.0 {
        let q = (-rex).exp();
        if sigma >= 0.0 {
            best = first / (1.0 - q);
        } else {
            let rho = q * (-sigma / r).exp();
            if rho < 1.0 {
                best = first / (1.0 - rho);
            }
        }
    }
    if sigma > 1.0 {
        let integral = (-r * rex).exp() * (r.powf(-sigma) + r.powf(1.0 - sigma) / (sigma - 1.0));
        best = best.min(integral);
    }
    if alternating && x.im == 0.0 && alpha.im == 0.0 && rex * r + sigma > 0.0 {
        best = best.min(first);
    }
    best
}

fn family_series(p: &GammaZetaPoint, alternating: bool, cfg: &EvalConfig) -> Result<EvalResult> {
    let (nu, alpha, x) = (p.nu, p.alpha, p.x);
    let base0 = nu + 1.0;
    let q = (-x).exp();
    let mut running = (-base0 * x).exp();
    sum_series(
        |n| {
            if n > 0 {
                running = if n % POWER_REFRESH == 0 {
                    (-(n as f64 + base0) * x).exp()
                } else {
                    running * q
                };
            }
            let c = n as f64 + base0;
            let term = running * (-alpha * c.ln()).exp();
            if alternating && n % 2 == 1 {
                -term
            } else {
                term
            }
        },
        |n| series_tail(n, nu, alpha, x, alternating),
        cfg,
    )
}

fn lerch_point(p: &GammaZetaPoint, negate: bool) -> Result<LerchParams> {
    let mut z = (-p.x).exp();
    if negate {
        z = -z;
    }
    LerchParams::new(z, p.alpha, ComplexScalar::new(p.nu + 1.0, 0.0))
}

fn delegate_lerch(p: &GammaZetaPoint, negate: bool, cfg: &EvalConfig) -> Result<EvalResult> {
    let params = lerch_point(p, negate)?;
    let inner = lerch_phi(&params, cfg)?;
    let prefactor = (-(p.nu + 1.0) * p.x).exp();
    Ok(EvalResult::new(
        prefactor * inner.value,
        prefactor.norm() * inner.error_estimate,
        inner.effort,
        inner.method,
    ))
}

fn family_quadrature(p: &GammaZetaPoint, alternating: bool, cfg: &EvalConfig) -> Result<EvalResult> {
    if p.x.im != 0.0 {
        return Err(Error::Domain(
            "quadrature route needs a real shift; use a series route for complex x".into(),
        ));
    }
    let x = p.x.re;
    if !(x > 0.0) {
        return Err(Error::Domain("quadrature route needs x > 0".into()));
    }
    if !(p.alpha.re > 0.0) {
        return Err(Error::Domain(
            "quadrature route needs Re(alpha) > 0; negative orders are series-only".into(),
        ));
    }
    let nu = p.nu;
    // The kernel decays like e^{-(nu+1)t}. For small x its near pole at
    // t = -x sits close to the path; the transform engine handles that
    // by falling back to its split rule, so declare the true rate only.
    let rate = nu + 1.0;
    let kernel = move |t: f64| {
        let d = (t + x).exp_m1();
        let d = if alternating { d + 2.0 } else { d };
        ComplexScalar::new((-nu * t).exp() / d, 0.0)
    };
    let f = RealFunction::exponential(0.0, rate, &kernel)?;
    let m = crate::numerics::transform::mellin_transform(&f, p.alpha, cfg)?;
    let g = gamma(p.alpha)?;
    let prefactor = (-nu * x).exp();
    let value = m.value * prefactor / g;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NonFinite("quadrature normalization".into()));
    }
    Ok(EvalResult::new(
        value,
        m.error_estimate * prefactor / g.norm(),
        m.effort,
        crate::eval::Method::Quadrature,
    ))
}

fn route(p: &GammaZetaPoint, alternating: bool, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    match cfg.method_policy {
        MethodPolicy::Auto => {
            if p.x.re >= AUTO_SERIES_THRESHOLD {
                family_series(p, alternating, cfg)
            } else {
                delegate_lerch(p, alternating, cfg)
            }
        }
        MethodPolicy::SeriesOnly => family_series(p, alternating, cfg),
        MethodPolicy::QuadratureOnly => family_quadrature(p, alternating, cfg),
    }
}

/// Phi_nu(alpha; x), the one-signed family.
pub fn phi(p: &GammaZetaPoint, cfg: &EvalConfig) -> Result<EvalResult> {
    require_phi_domain(p)?;
    route(p, false, cfg)
}

/// Psi_nu(alpha; x), the alternating family.
pub fn psi(p: &GammaZetaPoint, cfg: &EvalConfig) -> Result<EvalResult> {
    require_psi_domain(p)?;
    route(p, true, cfg)
}

/// Phi via the Hurwitz-Lerch reduction
/// Phi_nu(alpha; x) = e^{-(nu+1)x} L(e^{-x}, alpha, nu+1),
/// where L is the Lerch transcendent. Always available on the Phi domain.
pub fn phi_via_lerch(p: &GammaZetaPoint, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    require_phi_domain(p)?;
    delegate_lerch(p, false, cfg)
}

/// Psi via Psi_nu(alpha; x) = e^{-(nu+1)x} L(-e^{-x}, alpha, nu+1).
pub fn psi_via_lerch(p: &GammaZetaPoint, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    require_psi_domain(p)?;
    delegate_lerch(p, true, cfg)
}

/// Phi at nonpositive orders. The series continues verbatim to
/// Re(alpha) <= 0 provided Re(x) > 0 strictly, where the exponential
/// decay dominates the polynomially growing powers; term-wise
/// differentiation shows the result equals (-1)^m (d/dx)^m of the
/// order-(alpha+m) value, which is what the tests pin.
pub fn phi_negative_order(p: &GammaZetaPoint, cfg: &EvalConfig) -> Result<EvalResult> {
    if !(p.x.re > 0.0) {
        return Err(Error::Domain(
            "nonpositive orders need Re(x) > 0 strictly".into(),
        ));
    }
    phi(p, cfg)
}

/// Psi at nonpositive orders; see [`phi_negative_order`].
pub fn psi_negative_order(p: &GammaZetaPoint, cfg: &EvalConfig) -> Result<EvalResult> {
    if !(p.x.re > 0.0) {
        return Err(Error::Domain(
            "nonpositive orders need Re(x) > 0 strictly".into(),
        ));
    }
    psi(p, cfg)
}

/// The shift duality: Psi_nu(alpha; x) = e^{i pi (nu+1)} Phi_nu(alpha; x + i pi).
///
/// This evaluates the right-hand side. The branch is the principal one
/// (+i pi shift); for integer nu the factor degenerates to (-1)^{nu+1}.
pub fn psi_from_phi_shift(p: &GammaZetaPoint, cfg: &EvalConfig) -> Result<EvalResult> {
    if !(p.x.re > 0.0) {
        return Err(Error::Domain("the shift duality needs Re(x) > 0".into()));
    }
    let shifted = GammaZetaPoint::new(p.nu, p.alpha, p.x + ComplexScalar::new(0.0, PI))?;
    let r = phi(&shifted, cfg)?;
    let factor = (ComplexScalar::new(0.0, PI) * (p.nu + 1.0)).exp();
    Ok(EvalResult::new(
        factor * r.value,
        r.error_estimate,
        r.effort,
        r.method,
    ))
}

/// Residual of the duplication identity
/// Psi_{2nu}(alpha; x) = Phi_{2nu}(alpha; x) - 2^{1-alpha} Phi_nu(alpha; 2x),
/// evaluated as |lhs - rhs|. Zero up to roundoff when the identity holds.
pub fn duplication_residual(
    nu: f64,
    alpha: ComplexScalar,
    x: ComplexScalar,
    cfg: &EvalConfig,
) -> Result<f64> {
    let lhs = psi(&GammaZetaPoint::new(2.0 * nu, alpha, x)?, cfg)?;
    let p1 = phi(&GammaZetaPoint::new(2.0 * nu, alpha, x)?, cfg)?;
    let p2 = phi(&GammaZetaPoint::new(nu, alpha, 2.0 * x)?, cfg)?;
    let two_pow = ((1.0 - alpha) * LN_2).exp();
    Ok((lhs.value - p1.value + two_pow * p2.value).norm())
}

/// Residual of the order semigroup: applying the order-alpha integral
/// transform to x -> Phi_nu(beta; x) lands on Phi_nu(alpha+beta; x).
/// Computed as |Phi_nu(alpha+beta; x) - (1/Gamma(alpha)) integral(0, inf)
/// t^{alpha-1} Phi_nu(beta; x+t) dt|.
pub fn weyl_semigroup_residual(
    nu: f64,
    alpha: ComplexScalar,
    beta: ComplexScalar,
    x: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "semigroup residual needs a real shift x > 0, got {x}"
        )));
    }
    let lhs = phi(&GammaZetaPoint::new(nu, alpha + beta, ComplexScalar::new(x, 0.0))?, cfg)?;
    let inner = |t: f64| match GammaZetaPoint::new(nu, beta, ComplexScalar::new(x + t, 0.0))
        .and_then(|p| phi(&p, cfg))
    {
        Ok(r) => r.value,
        Err(_) => ComplexScalar::new(f64::NAN, f64::NAN),
    };
    let f = RealFunction::exponential(0.0, nu + 1.0, &inner)?;
    let rhs = weyl_transform(&f, alpha, ComplexScalar::new(0.0, 0.0), cfg)?;
    Ok((lhs.value - rhs.value).norm())
}
