//! Euler transformation for alternating series.

use crate::error::{Error, Result};
use crate::eval::{ComplexScalar, EvalConfig, EvalResult, Method};
use crate::numerics::sum::CompensatedComplex;

/// Beyond this many terms the averaging table costs more than it buys;
/// an alternating series that has not converged by then will not.
const ACCEL_WINDOW: usize = 4096;

/// Sum an alternating series by repeated averaging of partial sums
/// (the classic Euler transformation in van Wijngaarden's running form).
///
/// The caller asserts the terms alternate in sign pattern; the transform
/// then converges geometrically even when the raw series converges slowly
/// or only in the Abel sense (e.g. `sum (-1)^n = 1/2`).
///
/// The table keeps one anti-diagonal: after consuming partial sum `s_k`,
/// `row[j]` holds the `j`-times-averaged estimate, and `row.last()` is the
/// current best. The error estimate is the change in that estimate.
pub fn euler_accelerate(
    mut term: impl FnMut(usize) -> ComplexScalar,
    cfg: &EvalConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    let limit = cfg.max_terms.min(ACCEL_WINDOW);
    let mut partial = CompensatedComplex::new();
    let mut row: Vec<ComplexScalar> = Vec::new();
    let mut prev_estimate = ComplexScalar::new(0.0, 0.0);

    for k in 0..limit {
        let t = term(k);
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(Error::NonFinite(format!("series term at index {k}")));
        }
        partial.add(t);

        // next anti-diagonal: new[0] = s_k, new[j+1] = (old[j] + new[j]) / 2
        let mut carry = partial.total();
        for slot in row.iter_mut() {
            let old = *slot;
            *slot = carry;
            carry = (old + carry) * 0.5;
        }
        row.push(carry);

        let estimate = *row.last().expect("row is nonempty");
        if k >= 3 {
            let err = (estimate - prev_estimate).norm();
            if err <= cfg.threshold(estimate.norm()) {
                return Ok(EvalResult::new(
                    estimate,
                    err,
                    k + 1,
                    Method::AcceleratedSeries,
                ));
            }
        }
        prev_estimate = estimate;
    }
    Err(Error::NotConverged { effort: limit })
}
