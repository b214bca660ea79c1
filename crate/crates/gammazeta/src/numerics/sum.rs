//! Compensated summation and tail-bounded series evaluation.

use crate::error::{Error, Result};
use crate::eval::{ComplexScalar, EvalConfig, EvalResult, Method};

/// Neumaier (Kahan-Babuska) compensated accumulator for `f64`.
///
/// Keeps the running error of every addition in a carry term, so the
/// accumulated rounding error stays O(eps) independent of term count.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    pub fn new() -> Self {
        Compensated::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Componentwise compensated accumulator for complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedComplex {
    re: Compensated,
    im: Compensated,
}

impl CompensatedComplex {
    pub fn new() -> Self {
        CompensatedComplex::default()
    }

    #[inline]
    pub fn add(&mut self, v: ComplexScalar) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    #[inline]
    pub fn total(&self) -> ComplexScalar {
        ComplexScalar::new(self.re.total(), self.im.total())
    }
}

/// Sum `term(0) + term(1) + ...` until the caller-supplied tail bound drops
/// below tolerance.
///
/// `tail_bound(n)` must satisfy `|sum over m > n of term(m)| <= tail_bound(n)`
/// and be nonincreasing; return `f64::INFINITY` from it while no bound is
/// available yet. Stops at the first `n` with
/// `tail_bound(n) <= max(abs_tol, rel_tol * |partial sum|)`.
pub fn sum_series(
    mut term: impl FnMut(usize) -> ComplexScalar,
    mut tail_bound: impl FnMut(usize) -> f64,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    let mut acc = CompensatedComplex::new();
    for n in 0..cfg.max_terms {
        let t = term(n);
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(Error::NonFinite(format!("series term at index {n}")));
        }
        acc.add(t);
        let partial = acc.total();
        let tb = tail_bound(n);
        if tb <= cfg.threshold(partial.norm()) {
            return Ok(EvalResult::new(partial, tb, n + 1, Method::Series));
        }
    }
    Err(Error::NotConverged {
        effort: cfg.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn compensated_sum_of_ten_million_tenths() {
        // 0.1 is inexact in binary; naive summation drifts around 1e-8.
        let mut acc = Compensated::new();
        for _ in 0..10_000_000 {
            acc.add(0.1);
        }
        let rel = (acc.total() - 1.0e6).abs() / 1.0e6;
        assert!(rel < 1e-9, "relative error {rel}");
    }

    #[test]
    fn geometric_series_sums_to_two() {
        let r = sum_series(
            |n| ComplexScalar::new(0.5f64.powi(n as i32), 0.0),
            |n| 0.5f64.powi(n as i32),
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.method, Method::Series);
        assert!((r.value.re - 2.0).abs() < 1e-10 * 2.0);
        assert_eq!(r.value.im, 0.0);
    }

    #[test]
    fn zero_series_stops_immediately() {
        let r = sum_series(|_| ComplexScalar::new(0.0, 0.0), |_| 0.0, &cfg()).unwrap();
        assert_eq!(r.value, ComplexScalar::new(0.0, 0.0));
        assert!(r.effort <= 16);
    }

    #[test]
    fn exp_weighted_squares_match_brute_force_oracle() {
        // Oracle: direct compensated summation of 10^6 terms of
        // e^{-n}/(n+1)^2, written independently of sum_series.
        let mut oracle = Compensated::new();
        for n in 0..1_000_000u32 {
            let nf = n as f64;
            oracle.add((-nf).exp() / ((nf + 1.0) * (nf + 1.0)));
        }
        let oracle = oracle.total();

        let e = std::f64::consts::E;
        let r = sum_series(
            |n| {
                let nf = n as f64;
                ComplexScalar::new((-nf).exp() / ((nf + 1.0) * (nf + 1.0)), 0.0)
            },
            // geometric tail: terms decay faster than e^{-n}
            |n| (-(n as f64 + 1.0)).exp() / (1.0 - 1.0 / e),
            &cfg(),
        )
        .unwrap();
        let rel = (r.value.re - oracle).abs() / oracle.abs();
        assert!(rel < 1e-10, "relative error {rel}");
    }

    #[test]
    fn reports_not_converged_when_budget_exhausted() {
        let tight = EvalConfig {
            max_terms: 32,
            ..EvalConfig::default()
        };
        let err = sum_series(
            |n| ComplexScalar::new(1.0 / (n as f64 + 1.0), 0.0),
            |_| f64::INFINITY,
            &tight,
        )
        .unwrap_err();
        assert_eq!(err, Error::NotConverged { effort: 32 });
    }

    #[test]
    fn non_finite_term_is_an_error() {
        let err = sum_series(
            |n| {
                if n == 3 {
                    ComplexScalar::new(f64::INFINITY, 0.0)
                } else {
                    ComplexScalar::new(0.0, 0.0)
                }
            },
            |_| f64::INFINITY,
            &cfg(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonFinite(_)));
    }
}
