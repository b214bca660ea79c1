//! Gauss-Laguerre rules (plain and generalized) via the Golub-Welsch
//! eigenvalue method, with weight tables cached per (n, exponent).

use crate::error::{Error, Result};
use crate::special::gamma::ln_gamma_real;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub const MAX_NODES: usize = 256;

/// Nodes and weights for the weight function `t^a e^{-t}` on `(0, inf)`.
///
/// `weights` are the plain Golub-Welsch weights (they sum to Gamma(1+a));
/// `peeled[i] = weights[i] * e^{nodes[i]}`, computed without underflow, for
/// integrating functions that carry their own exponential decay.
#[derive(Debug)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub peeled: Vec<f64>,
}

/// Symmetric tridiagonal QL with implicit shifts.
///
/// `d` is the diagonal, `e` the subdiagonal (`e[n-1]` is workspace), and
/// `z` a vector rotated along: seeded with `(sqrt(mu0), 0, ..., 0)` it ends
/// holding signed square roots of the quadrature weights. Eigenvalues come
/// back in `d`, sorted ascending with `z` permuted to match.
fn imtqlx(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    const MAX_SWEEPS: usize = 30;
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut j = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                if e[m].abs() <= f64::EPSILON * (d[m].abs() + d[m + 1].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if j >= MAX_SWEEPS {
                return Err(Error::NonFinite(
                    "tridiagonal eigensolver failed to converge".into(),
                ));
            }
            j += 1;
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                if g.abs() <= f.abs() {
                    c = g / f;
                    r = c.hypot(1.0);
                    e[i + 1] = f * r;
                    s = 1.0 / r;
                    c *= s;
                } else {
                    s = f / g;
                    r = s.hypot(1.0);
                    e[i + 1] = g * r;
                    c = 1.0 / r;
                    s *= c;
                }
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // selection sort, ascending eigenvalues, carrying z along
    for i in 0..n {
        let mut k = i;
        for j in (i + 1)..n {
            if d[j] < d[k] {
                k = j;
            }
        }
        if k != i {
            d.swap(i, k);
            z.swap(i, k);
        }
    }
    Ok(())
}

fn compute_rule(n: usize, a: f64) -> Result<QuadRule> {
    if n == 0 || n > MAX_NODES {
        return Err(Error::Unsupported(format!(
            "quadrature size {n} outside 1..={MAX_NODES}"
        )));
    }
    if !(a > -1.0) || !a.is_finite() {
        return Err(Error::Unsupported(format!(
            "weight exponent {a} must exceed -1"
        )));
    }
    // Jacobi matrix of the generalized Laguerre recurrence
    let mut d: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + 1.0 + a).collect();
    let mut e: Vec<f64> = (0..n)
        .map(|k| {
            let kf = k as f64 + 1.0;
            (kf * (kf + a)).sqrt()
        })
        .collect();
    let mut z = vec![0.0; n];
    // total mass of the weight function: integral of t^a e^{-t} = Gamma(1+a)
    z[0] = (0.5 * ln_gamma_real(1.0 + a)).exp();
    imtqlx(&mut d, &mut e, &mut z)?;

    let weights: Vec<f64> = z.iter().map(|zi| zi * zi).collect();
    // peeled weight w*e^x as (z*e^{x/2})^2: both factors stay in normal
    // f64 range for every node of rules up to MAX_NODES, where w itself
    // would underflow beyond x ~ 745
    let peeled: Vec<f64> = d
        .iter()
        .zip(&z)
        .map(|(x, zi)| {
            let h = zi * (0.5 * x).exp();
            h * h
        })
        .collect();
    for (x, p) in d.iter().zip(&peeled) {
        if !x.is_finite() || !p.is_finite() {
            return Err(Error::NonFinite("quadrature rule construction".into()));
        }
    }
    Ok(QuadRule {
        nodes: d,
        weights,
        peeled,
    })
}

type RuleCache = Mutex<HashMap<(usize, u64), Arc<QuadRule>>>;

fn cache() -> &'static RuleCache {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cached rule lookup. Thread-safe; a rule is computed at most once per
/// (size, exponent) pair per process.
pub fn rule(n: usize, a: f64) -> Result<Arc<QuadRule>> {
    let key = (n, a.to_bits());
    if let Some(r) = cache().lock().expect("rule cache poisoned").get(&key) {
        return Ok(Arc::clone(r));
    }
    let fresh = Arc::new(compute_rule(n, a)?);
    let mut guard = cache().lock().expect("rule cache poisoned");
    let entry = guard.entry(key).or_insert(fresh);
    Ok(Arc::clone(entry))
}

/// Classical Gauss-Laguerre rule (weight `e^{-t}`): `n` ascending nodes and
/// positive weights summing to 1, exact for polynomials of degree `2n-1`.
pub fn gauss_laguerre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || n > MAX_NODES {
        return Err(Error::Unsupported(format!(
            "gauss_laguerre size {n} outside 1..={MAX_NODES}"
        )));
    }
    let r = rule(n, 0.0)?;
    Ok((r.nodes.clone(), r.weights.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_rule_is_node_one_weight_one() {
        let (x, w) = gauss_laguerre(1).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_point_rule_matches_roots_of_l2() {
        // L2(t) = (t^2 - 4t + 2)/2 has roots 2 -+ sqrt 2; the weight
        // formula gives (2 +- sqrt 2)/4, checked by exactness on 1..t^3.
        let (x, w) = gauss_laguerre(2).unwrap();
        let s = 2.0f64.sqrt();
        assert!((x[0] - (2.0 - s)).abs() < 1e-14);
        assert!((x[1] - (2.0 + s)).abs() < 1e-14);
        assert!((w[0] - (2.0 + s) / 4.0).abs() < 1e-14);
        assert!((w[1] - (2.0 - s) / 4.0).abs() < 1e-14);
        for k in 0..=3u32 {
            let quad: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(k as i32)).sum();
            let exact = (1..=k).map(f64::from).product::<f64>().max(1.0);
            assert!((quad - exact).abs() < 1e-13 * exact);
        }
    }

    #[test]
    fn weights_sum_to_one_for_every_size() {
        for n in (1..=16).chain([24, 32, 48, 64, 96, 128, 192, 256]) {
            let (_, w) = gauss_laguerre(n).unwrap();
            let mut acc = crate::numerics::sum::Compensated::new();
            for wi in &w {
                acc.add(*wi);
            }
            assert!(
                (acc.total() - 1.0).abs() < 1e-14,
                "n={n} sum deviates by {}",
                (acc.total() - 1.0).abs()
            );
        }
    }

    #[test]
    fn nodes_ascend() {
        for n in [2, 7, 64, 256] {
            let (x, _) = gauss_laguerre(n).unwrap();
            assert!(x.windows(2).all(|p| p[0] < p[1]));
            assert!(x[0] > 0.0);
        }
    }

    #[test]
    fn monomial_exactness_up_to_degree_2n_minus_1() {
        // Gamma(k+1) = k! by compensated product-free accumulation.
        for n in 1..=32usize {
            let (x, w) = gauss_laguerre(n).unwrap();
            let mut exact = 1.0f64;
            for k in 0..=(2 * n - 1) {
                if k > 0 {
                    exact *= k as f64;
                }
                let mut acc = crate::numerics::sum::Compensated::new();
                for (xi, wi) in x.iter().zip(&w) {
                    acc.add(wi * xi.powi(k as i32));
                }
                let rel = (acc.total() - exact).abs() / exact;
                assert!(rel < 1e-12, "n={n} k={k} rel={rel}");
            }
        }
    }

    #[test]
    fn out_of_range_sizes_are_unsupported() {
        assert!(matches!(gauss_laguerre(0), Err(Error::Unsupported(_))));
        assert!(matches!(gauss_laguerre(257), Err(Error::Unsupported(_))));
    }

    #[test]
    fn generalized_rule_integrates_its_weight_mass() {
        // integral of t^a e^{-t} = Gamma(1+a)
        for a in [-0.5, 0.5, 1.5, 2.5] {
            let r = rule(32, a).unwrap();
            let total: f64 = r.weights.iter().sum();
            let expect = (ln_gamma_real(1.0 + a)).exp();
            assert!(
                (total - expect).abs() < 1e-13 * expect,
                "a={a} total={total} expect={expect}"
            );
        }
    }

    #[test]
    fn generalized_rule_integrates_monomials() {
        // integral of t^{a+k} e^{-t} = Gamma(a+k+1)
        let a = 0.75;
        let r = rule(24, a).unwrap();
        for k in 0..=10u32 {
            let quad: f64 = r
                .nodes
                .iter()
                .zip(&r.weights)
                .map(|(x, w)| w * x.powi(k as i32))
                .sum();
            let exact = ln_gamma_real(a + k as f64 + 1.0).exp();
            let rel = (quad - exact).abs() / exact;
            assert!(rel < 1e-12, "k={k} rel={rel}");
        }
    }

    #[test]
    fn peeled_weights_match_scaled_laguerre_formula_at_largest_nodes() {
        // Independent check of w*e^x through the classical weight identity
        // w_i = Gamma(n+a+1) x_i / (n! (n+1)^2 L_{n+1}(x_i)^2), evaluated
        // with the half-exponential scaled recurrence
        // Lhat_k(x) = L_k(x) e^{-x/2} so that nothing overflows.
        let n = 256;
        let a = 0.0;
        let r = rule(n, a).unwrap();
        let lhat = |x: f64| {
            let mut lm = (-0.5 * x).exp();
            let mut l = (1.0 + a - x) * (-0.5 * x).exp();
            for k in 1..=n {
                let kf = k as f64;
                let next = ((2.0 * kf + 1.0 + a - x) * l - (kf + a) * lm) / (kf + 1.0);
                lm = l;
                l = next;
            }
            l // Lhat_{n+1}(x)
        };
        let c = (ln_gamma_real(n as f64 + a + 1.0) - ln_gamma_real(n as f64 + 1.0)).exp();
        let np1 = (n as f64 + 1.0) * (n as f64 + 1.0);
        for i in (n - 8)..n {
            let x = r.nodes[i];
            let l = lhat(x);
            let reference = c * x / (np1 * l * l);
            let rel = (r.peeled[i] - reference).abs() / reference;
            assert!(rel < 1e-9, "node {i} x={x} rel={rel}");
        }
        // the largest nodes sit beyond the e^x overflow threshold for
        // plain weights, which is what the peeled table is for
        assert!(r.nodes[n - 1] > 745.0);
    }
}
