//! Physics-facing layer: occupancy distributions, the Bose-Einstein and
//! Fermi-Dirac integral functions as specializations of the Phi/Psi
//! families, the relation connecting them, their convolution
//! representations, and the anyon interpolation G_nu between the two
//! statistics.

use crate::error::{Error, Result};
use crate::eval::{ComplexScalar, EvalConfig, EvalResult};
use crate::gamma_zeta::{phi, psi, GammaZetaPoint};
use crate::numerics::transform::{mellin_transform, weyl_transform, RealFunction};
use crate::special::gamma::gamma;

/// A single-particle state of an ideal quantum gas: kinetic energy,
/// chemical potential, and thermal energy, all in the same energy units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoState {
    epsilon: f64,
    mu: f64,
    tau: f64,
}

impl ThermoState {
    pub fn new(epsilon: f64, mu: f64, tau: f64) -> Result<Self> {
        if !epsilon.is_finite() || epsilon < 0.0 {
            return Err(Error::Domain(format!(
                "kinetic energy {epsilon} must be finite and nonnegative"
            )));
        }
        if !mu.is_finite() {
            return Err(Error::Domain("chemical potential must be finite".into()));
        }
        if !tau.is_finite() || !(tau > 0.0) {
            return Err(Error::Domain(format!(
                "thermal energy {tau} must be finite and positive"
            )));
        }
        Ok(ThermoState { epsilon, mu, tau })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// (epsilon - mu)/tau, the argument every distribution depends on.
    fn reduced(&self) -> f64 {
        (self.epsilon - self.mu) / self.tau
    }
}

/// Classical occupancy e^{(mu - epsilon)/tau}.
pub fn maxwell_occupancy(s: &ThermoState) -> f64 {
    (-s.reduced()).exp()
}

/// Bose-Einstein occupancy 1/(e^{(epsilon-mu)/tau} - 1).
///
/// Defined only above the chemical potential; at epsilon = mu the
/// occupancy diverges.
pub fn bose_occupancy(s: &ThermoState) -> Result<f64> {
    if !(s.epsilon > s.mu) {
        return Err(Error::Domain(
            "boson occupancy needs energy above the chemical potential".into(),
        ));
    }
    Ok(1.0 / s.reduced().exp_m1())
}

/// Fermi-Dirac occupancy 1/(e^{(epsilon-mu)/tau} + 1).
pub fn fermi_occupancy(s: &ThermoState) -> f64 {
    1.0 / (s.reduced().exp() + 1.0)
}

/// The Bose-Einstein integral function
/// B_q(x) = (1/Gamma(q+1)) integral(0, inf) t^q/(e^{t-x} - 1) dt,
/// evaluated through its series form B_q(x) = Phi_0(q+1; -x).
///
/// Defined for x < 0, or x = 0 with q > 0. For x > 0 the integrand has
/// a pole on the path at t = x and no principal value is taken; q must
/// exceed -1 for the t^q factor to be integrable at the origin.
pub fn bose_einstein_integral(q: f64, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !q.is_finite() || q <= -1.0 {
        return Err(Error::Domain(format!(
            "index q = {q} must be finite and > -1"
        )));
    }
    if !x.is_finite() {
        return Err(Error::Domain("argument x must be finite".into()));
    }
    if x > 0.0 {
        return Err(Error::Domain(
            "positive x puts a pole of the Bose integrand on the path; undefined here".into(),
        ));
    }
    if x == 0.0 && !(q > 0.0) {
        return Err(Error::Domain(
            "at x = 0 the Bose integral converges only for q > 0".into(),
        ));
    }
    let p = GammaZetaPoint::new(0.0, ComplexScalar::new(q + 1.0, 0.0), ComplexScalar::new(-x, 0.0))?;
    phi(&p, cfg)
}

/// The Fermi-Dirac integral function
/// F_q(x) = (1/Gamma(q+1)) integral(0, inf) t^q/(e^{t-x} + 1) dt.
///
/// For x <= 0 this is the series form F_q(x) = Psi_0(q+1; -x); for
/// x > 0 the series argument leaves its convergence region, so the
/// defining integral is evaluated by quadrature directly. Needs q > -1.
pub fn fermi_dirac_integral(q: f64, x: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    if !q.is_finite() || q <= -1.0 {
        return Err(Error::Domain(format!(
            "index q = {q} must be finite and > -1"
        )));
    }
    if !x.is_finite() {
        return Err(Error::Domain("argument x must be finite".into()));
    }
    if x <= 0.0 {
        let p =
            GammaZetaPoint::new(0.0, ComplexScalar::new(q + 1.0, 0.0), ComplexScalar::new(-x, 0.0))?;
        return psi(&p, cfg);
    }
    // kernel 1/(e^{t-x} + 1) is finite at t = 0 and decays like e^{x-t}
    let kernel = move |t: f64| ComplexScalar::new(1.0 / ((t - x).exp() + 1.0), 0.0);
    let f = RealFunction::exponential(0.0, 1.0, &kernel)?;
    let alpha = ComplexScalar::new(q + 1.0, 0.0);
    let m = mellin_transform(&f, alpha, cfg)?;
    let g = gamma(alpha)?;
    Ok(EvalResult::new(
        m.value / g,
        m.error_estimate / g.norm(),
        m.effort,
        m.method,
    ))
}

/// Which exponent the duplication-type relation between F and B uses.
///
/// `AsPrinted` keeps the 2^{1-alpha} factor of the source formula;
/// `Corrected` uses 2^{-alpha}, the factor the stated substitution
/// actually produces. The residuals let the data decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentVariant {
    AsPrinted,
    Corrected,
}

/// Residual of F_alpha(x) = B_alpha(x) - 2^{e} B_alpha(2x), with
/// e = 1-alpha (`AsPrinted`) or e = -alpha (`Corrected`).
pub fn be_fd_relation_residual(
    alpha: f64,
    x: f64,
    variant: ExponentVariant,
    cfg: &EvalConfig,
) -> Result<f64> {
    if !alpha.is_finite() || !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "index alpha = {alpha} must be finite and positive"
        )));
    }
    if !x.is_finite() || !(x < 0.0) {
        return Err(Error::Domain(format!(
            "argument x = {x} must be finite and negative"
        )));
    }
    let f = fermi_dirac_integral(alpha, x, cfg)?;
    let b = bose_einstein_integral(alpha, x, cfg)?;
    let b2 = bose_einstein_integral(alpha, 2.0 * x, cfg)?;
    let e = match variant {
        ExponentVariant::AsPrinted => 1.0 - alpha,
        ExponentVariant::Corrected => -alpha,
    };
    let factor = 2.0f64.powf(e);
    Ok((f.value - b.value + factor * b2.value).norm())
}

/// Residual of the convolution representation
/// B_{alpha+beta-1}(x) = (1/Gamma(alpha)) integral(0, inf)
/// t^{alpha-1} B_{beta-1}(x - t) dt, for x < 0.
pub fn be_convolution_residual(alpha: f64, beta: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    convolution_residual(alpha, beta, x, cfg, bose_einstein_integral)
}

/// Residual of the same representation for the Fermi-Dirac family.
pub fn fd_convolution_residual(alpha: f64, beta: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    convolution_residual(alpha, beta, x, cfg, fermi_dirac_integral)
}

fn convolution_residual(
    alpha: f64,
    beta: f64,
    x: f64,
    cfg: &EvalConfig,
    family: fn(f64, f64, &EvalConfig) -> Result<EvalResult>,
) -> Result<f64> {
    if !alpha.is_finite() || !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "transform order alpha = {alpha} must be finite and positive"
        )));
    }
    if !beta.is_finite() || !(beta > 0.0) {
        return Err(Error::Domain(format!(
            "inner index beta - 1 = {} must exceed -1",
            beta - 1.0
        )));
    }
    if !x.is_finite() || !(x < 0.0) {
        return Err(Error::Domain(format!(
            "argument x = {x} must be finite and negative"
        )));
    }
    let lhs = family(alpha + beta - 1.0, x, cfg)?;
    // the shifted argument x - t stays negative, so every inner
    // evaluation is on the series side; decay in t is e^{x-t}
    let inner = |t: f64| match family(beta - 1.0, x - t, cfg) {
        Ok(r) => r.value,
        Err(_) => ComplexScalar::new(f64::NAN, f64::NAN),
    };
    let f = RealFunction::exponential(0.0, 1.0, &inner)?;
    let rhs = weyl_transform(&f, ComplexScalar::new(alpha, 0.0), ComplexScalar::new(0.0, 0.0), cfg)?;
    Ok((lhs.value - rhs.value).norm())
}

/// Interpolation weights (a, b) for the anyon integral, with the
/// endpoint conditions a(0) = 1, b(0) = 0, a(1) = 0, b(1) = 1 that pin
/// the Bose and Fermi limits.
pub struct AnyonWeights {
    a: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    b: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

const WEIGHT_ENDPOINT_TOL: f64 = 1e-12;

impl AnyonWeights {
    pub fn new(
        a: impl Fn(f64) -> f64 + Send + Sync + 'static,
        b: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let checks = [
            (a(0.0), 1.0, "a(0) = 1"),
            (b(0.0), 0.0, "b(0) = 0"),
            (a(1.0), 0.0, "a(1) = 0"),
            (b(1.0), 1.0, "b(1) = 1"),
        ];
        for (got, want, name) in checks {
            if !got.is_finite() || (got - want).abs() > WEIGHT_ENDPOINT_TOL {
                return Err(Error::Domain(format!(
                    "weight endpoint condition {name} violated (got {got})"
                )));
            }
        }
        Ok(AnyonWeights {
            a: Box::new(a),
            b: Box::new(b),
        })
    }

    pub fn a(&self, nu: f64) -> f64 {
        (self.a)(nu)
    }
    pub fn b(&self, nu: f64) -> f64 {
        (self.b)(nu)
    }
}

/// The minimal weights satisfying the endpoint conditions: a = 1-nu, b = nu.
impl Default for AnyonWeights {
    fn default() -> Self {
        AnyonWeights {
            a: Box::new(|nu| 1.0 - nu),
            b: Box::new(|nu| nu),
        }
    }
}

/// The interpolating integral function
/// G_nu(alpha; x) = a(nu) Phi_nu(alpha; x) + b(nu) Psi_{nu-1}(alpha; x),
/// which connects the Bose-Einstein (nu = 0) and Fermi-Dirac (nu = 1)
/// specializations.
///
/// nu is restricted to [0, 1]. The endpoints short-circuit: nu = 0
/// returns exactly phi(0, alpha, x) without touching the Psi term
/// (whose order would be singular there), and nu = 1 returns exactly
/// psi(0, alpha, x).
pub fn anyon_integral(
    nu: f64,
    alpha: ComplexScalar,
    x: ComplexScalar,
    w: &AnyonWeights,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    if !nu.is_finite() || !(0.0..=1.0).contains(&nu) {
        return Err(Error::Domain(format!(
            "interpolation parameter nu = {nu} must lie in [0, 1]"
        )));
    }
    if nu == 0.0 {
        return phi(&GammaZetaPoint::new(0.0, alpha, x)?, cfg);
    }
    if nu == 1.0 {
        return psi(&GammaZetaPoint::new(0.0, alpha, x)?, cfg);
    }
    let pa = phi(&GammaZetaPoint::new(nu, alpha, x)?, cfg)?;
    let pb = psi(&GammaZetaPoint::new(nu - 1.0, alpha, x)?, cfg)?;
    let (wa, wb) = (w.a(nu), w.b(nu));
    Ok(EvalResult::new(
        wa * pa.value + wb * pb.value,
        wa.abs() * pa.error_estimate + wb.abs() * pb.error_estimate,
        pa.effort + pb.effort,
        pa.method,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::sum::Compensated;
    use std::f64::consts::{LN_2, PI};

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }
    fn tight() -> EvalConfig {
        EvalConfig {
            rel_tol: 1e-13,
            ..EvalConfig::default()
        }
    }

    #[test]
    fn thermo_state_validation() {
        assert!(ThermoState::new(-0.1, 0.0, 1.0).is_err());
        assert!(ThermoState::new(1.0, 0.0, 0.0).is_err());
        assert!(ThermoState::new(1.0, 0.0, -2.0).is_err());
        assert!(ThermoState::new(1.0, f64::NAN, 1.0).is_err());
        let s = ThermoState::new(2.0, -1.0, 0.5).unwrap();
        assert_eq!(s.epsilon(), 2.0);
        assert_eq!(s.mu(), -1.0);
        assert_eq!(s.tau(), 0.5);
    }

    #[test]
    fn occupancy_closed_points() {
        let s = ThermoState::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(fermi_occupancy(&s), 0.5);
        assert_eq!(maxwell_occupancy(&s), 1.0);
        assert!(bose_occupancy(&s).is_err());

        let s = ThermoState::new(LN_2, 0.0, 1.0).unwrap();
        assert!((bose_occupancy(&s).unwrap() - 1.0).abs() < 1e-15);

        let s = ThermoState::new(1.0, 0.0, 1.0).unwrap();
        assert!((maxwell_occupancy(&s) - (-1.0f64).exp()).abs() < 1e-16);
        let s = ThermoState::new(2.0, 0.0, 1.0).unwrap();
        assert!((maxwell_occupancy(&s) - (-2.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn occupancies_approach_maxwell() {
        let s = ThermoState::new(20.0, 0.0, 1.0).unwrap();
        let m = maxwell_occupancy(&s);
        assert!((bose_occupancy(&s).unwrap() - m).abs() < 1e-8 * m);
        assert!((fermi_occupancy(&s) - m).abs() < 1e-8 * m);
    }

    #[test]
    fn bose_integral_examples() {
        let r = bose_einstein_integral(1.0, 0.0, &cfg()).unwrap();
        assert!((r.value.re - PI * PI / 6.0).abs() < 1e-10);

        // deep negative x: the first series term e^x dominates
        let r = bose_einstein_integral(0.5, -20.0, &cfg()).unwrap();
        let m = (-20.0f64).exp();
        assert!((r.value.re - m).abs() < 1e-7 * m);

        // oracle first: sum_{m>=1} e^{-m} m^{-5/2}; 60 terms leave a
        // tail below e^{-61}
        let mut acc = Compensated::new();
        for m in (1..=60u32).rev() {
            let mf = m as f64;
            acc.add((-mf).exp() * mf.powf(-2.5));
        }
        let oracle = acc.total();
        assert!((oracle - 0.395_728_010_380_337_58).abs() < 1e-15);
        let r = bose_einstein_integral(1.5, -1.0, &tight()).unwrap();
        assert!((r.value.re - oracle).abs() < 1e-12);
    }

    #[test]
    fn bose_integral_domain() {
        assert!(matches!(
            bose_einstein_integral(1.0, 0.5, &cfg()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            bose_einstein_integral(0.0, 0.0, &cfg()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            bose_einstein_integral(-1.0, -1.0, &cfg()),
            Err(Error::Domain(_))
        ));
        // fractional index above -1 is fine away from x = 0
        assert!(bose_einstein_integral(-0.5, -1.0, &cfg()).is_ok());
    }

    #[test]
    fn fermi_integral_examples() {
        let r = fermi_dirac_integral(1.0, 0.0, &cfg()).unwrap();
        assert!((r.value.re - PI * PI / 12.0).abs() < 1e-10);

        // closed form F_0(x) = ln(1 + e^x), independent of the quadrature
        let oracle = (1.0 + 1.0f64.exp()).ln();
        assert!((oracle - 1.313_261_687_518_222_8).abs() < 1e-15);
        let r = fermi_dirac_integral(0.0, 1.0, &cfg()).unwrap();
        assert!(
            (r.value.re - oracle).abs() < 1e-9 * oracle,
            "got {} want {oracle}",
            r.value.re
        );
        assert!((r.value.re - oracle).abs() <= 10.0 * r.error_estimate.max(f64::EPSILON));

        // oracle: alternating sum_{m>=1} (-1)^{m-1} e^{-2m} m^{-3/2};
        // 200 terms leave a tail below e^{-402}
        let mut acc = Compensated::new();
        for m in (1..=200u32).rev() {
            let mf = m as f64;
            let t = (-2.0 * mf).exp() * mf.powf(-1.5);
            acc.add(if m % 2 == 1 { t } else { -t });
        }
        let oracle = acc.total();
        assert!((oracle - 0.129_298_513_320_075_59).abs() < 1e-15);
        let r = fermi_dirac_integral(0.5, -2.0, &tight()).unwrap();
        assert!((r.value.re - oracle).abs() < 1e-12);
    }

    #[test]
    fn fermi_integral_index_domain() {
        assert!(matches!(
            fermi_dirac_integral(-1.0, 1.0, &cfg()),
            Err(Error::Domain(_))
        ));
        assert!(fermi_dirac_integral(-0.5, -1.0, &cfg()).is_ok());
        assert!(fermi_dirac_integral(-0.5, 1.0, &cfg()).is_ok());
    }

    #[test]
    fn fermi_route_switch_is_continuous() {
        for q in [0.5, 1.0, 2.0] {
            let below = fermi_dirac_integral(q, -1e-8, &cfg()).unwrap();
            let above = fermi_dirac_integral(q, 1e-8, &cfg()).unwrap();
            let rel = (below.value - above.value).norm() / below.value.norm();
            assert!(rel < 1e-6, "q={q}: {rel:e}");
        }
    }

    #[test]
    fn maxwell_limit_of_integrals() {
        let m = (-30.0f64).exp();
        for q in [0.5, 1.0] {
            let b = bose_einstein_integral(q, -30.0, &cfg()).unwrap();
            assert!((b.value.re / m - 1.0).abs() < 1e-9);
            let f = fermi_dirac_integral(q, -30.0, &cfg()).unwrap();
            assert!((f.value.re / m - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn relation_residual_corrected_holds() {
        let res =
            be_fd_relation_residual(1.0, -1.0, ExponentVariant::Corrected, &cfg()).unwrap();
        assert!(res < 1e-10, "{res:e}");

        for alpha in [0.5, 1.0, 2.0, 3.5] {
            for x in [-0.25, -1.0, -3.0] {
                let res =
                    be_fd_relation_residual(alpha, x, ExponentVariant::Corrected, &cfg()).unwrap();
                assert!(res < 1e-9, "alpha={alpha} x={x}: {res:e}");
            }
        }

        // near x = 0 both sides go to closed zeta/eta forms
        let res =
            be_fd_relation_residual(2.0, -1e-6, ExponentVariant::Corrected, &cfg()).unwrap();
        assert!(res < 1e-5);
    }

    #[test]
    fn relation_residual_as_printed_fails() {
        let res =
            be_fd_relation_residual(1.0, -1.0, ExponentVariant::AsPrinted, &cfg()).unwrap();
        assert!(res > 1e-3, "{res:e}");
    }

    #[test]
    fn relation_residual_domain() {
        assert!(be_fd_relation_residual(0.0, -1.0, ExponentVariant::Corrected, &cfg()).is_err());
        assert!(be_fd_relation_residual(1.0, 0.0, ExponentVariant::Corrected, &cfg()).is_err());
        assert!(be_fd_relation_residual(1.0, 0.5, ExponentVariant::Corrected, &cfg()).is_err());
    }

    #[test]
    fn convolution_residuals() {
        assert!(be_convolution_residual(1.0, 2.0, -1.0, &cfg()).unwrap() < 1e-6);
        assert!(be_convolution_residual(2.0, 1.0, -0.5, &cfg()).unwrap() < 1e-6);
        assert!(fd_convolution_residual(1.0, 1.0, -1.0, &cfg()).unwrap() < 1e-6);

        assert!(be_convolution_residual(0.0, 1.0, -1.0, &cfg()).is_err());
        assert!(be_convolution_residual(1.0, 0.0, -1.0, &cfg()).is_err());
        assert!(be_convolution_residual(1.0, 1.0, 0.5, &cfg()).is_err());
    }

    #[test]
    fn anyon_endpoints_are_bit_exact() {
        let w = AnyonWeights::default();
        let alpha = ComplexScalar::new(2.0, 0.0);
        let x = ComplexScalar::new(1.0, 0.0);

        let g0 = anyon_integral(0.0, alpha, x, &w, &cfg()).unwrap();
        let p = phi(&GammaZetaPoint::new(0.0, alpha, x).unwrap(), &cfg()).unwrap();
        assert_eq!(g0.value.re.to_bits(), p.value.re.to_bits());
        assert_eq!(g0.value.im.to_bits(), p.value.im.to_bits());

        let g1 = anyon_integral(1.0, alpha, x, &w, &cfg()).unwrap();
        let q = psi(&GammaZetaPoint::new(0.0, alpha, x).unwrap(), &cfg()).unwrap();
        assert_eq!(g1.value.re.to_bits(), q.value.re.to_bits());
        assert_eq!(g1.value.im.to_bits(), q.value.im.to_bits());
    }

    #[test]
    fn anyon_midpoint_golden_value() {
        // oracle: 0.5 Phi_{1/2}(2;1) + 0.5 Psi_{-1/2}(2;1), both summed
        // directly; bases n+3/2 and n+1/2, 100 terms leave tails
        // below e^{-101}
        let mut a = Compensated::new();
        let mut b = Compensated::new();
        for n in (0..100i32).rev() {
            let c1 = n as f64 + 1.5;
            a.add((-c1).exp() / (c1 * c1));
            let c2 = n as f64 + 0.5;
            let t = (-c2).exp() / (c2 * c2);
            b.add(if n % 2 == 0 { t } else { -t });
        }
        let oracle = 0.5 * a.total() + 0.5 * b.total();
        assert!((oracle - 1.226_782_188_451_673_1).abs() < 1e-15);

        let w = AnyonWeights::default();
        let g = anyon_integral(
            0.5,
            ComplexScalar::new(2.0, 0.0),
            ComplexScalar::new(1.0, 0.0),
            &w,
            &tight(),
        )
        .unwrap();
        assert!((g.value.re - oracle).abs() < 1e-12, "got {}", g.value.re);
    }

    #[test]
    fn anyon_parameter_domain() {
        let w = AnyonWeights::default();
        let alpha = ComplexScalar::new(2.0, 0.0);
        let x = ComplexScalar::new(1.0, 0.0);
        assert!(anyon_integral(-0.1, alpha, x, &w, &cfg()).is_err());
        assert!(anyon_integral(1.1, alpha, x, &w, &cfg()).is_err());
        assert!(anyon_integral(f64::NAN, alpha, x, &w, &cfg()).is_err());
    }

    #[test]
    fn anyon_weights_endpoint_validation() {
        assert!(AnyonWeights::new(|nu| 1.0 - nu, |nu| nu).is_ok());
        let trig = AnyonWeights::new(
            |nu| (PI * nu / 2.0).cos().powi(2),
            |nu| (PI * nu / 2.0).sin().powi(2),
        )
        .unwrap();
        assert!((trig.a(0.3) + trig.b(0.3) - 1.0).abs() < 1e-15);

        assert!(AnyonWeights::new(|_| 1.0, |nu| nu).is_err());
        assert!(AnyonWeights::new(|nu| 1.0 + nu, |nu| nu).is_err());
    }

    #[test]
    fn anyon_custom_weights_interpolate() {
        let trig = AnyonWeights::new(
            |nu| (PI * nu / 2.0).cos().powi(2),
            |nu| (PI * nu / 2.0).sin().powi(2),
        )
        .unwrap();
        let g = anyon_integral(
            0.3,
            ComplexScalar::new(2.0, 0.0),
            ComplexScalar::new(1.0, 0.0),
            &trig,
            &cfg(),
        )
        .unwrap();
        assert!(g.value.re.is_finite() && g.value.re > 0.0);
    }

    #[test]
    fn anyon_interior_continuity() {
        // away from the nu -> 0 edge the interpolation varies smoothly;
        // finite differences at step 1e-4 stay small
        let w = AnyonWeights::default();
        let alpha = ComplexScalar::new(2.0, 0.0);
        let x = ComplexScalar::new(1.0, 0.0);
        for nu in [0.4, 0.5, 0.6, 0.7, 0.8] {
            let g0 = anyon_integral(nu, alpha, x, &w, &cfg()).unwrap();
            let g1 = anyon_integral(nu + 1e-4, alpha, x, &w, &cfg()).unwrap();
            let diff = (g1.value - g0.value).norm();
            assert!(diff < 5e-3, "nu={nu}: {diff:e}");
        }
    }
}
