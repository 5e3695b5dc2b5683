use num_complex::Complex64;

use super::SatakeError;
use crate::polycore::{squarefree_decomposition, IntPolynomial};

const START_OFFSET: f64 = 0.376;

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Positive root of `x^n - sum_{k<n} |c_k| x^k` for monic `c`: every root
/// of `c` lies in the closed disc of this radius.
pub(crate) fn cauchy_bound(c: &[f64]) -> f64 {
    let n = c.len() - 1;
    let abs: Vec<f64> = c[..n].iter().map(|a| a.abs()).collect();
    if abs.iter().all(|&a| a == 0.0) {
        return 0.0;
    }
    let f = |x: f64| {
        let mut v = 1.0;
        let mut d = 0.0;
        for k in (0..n).rev() {
            d = d * x + v;
            v = v * x - abs[k];
        }
        (v, d)
    };
    let mut x = 1.0 + abs.iter().cloned().fold(0.0, f64::max);
    for _ in 0..200 {
        let (v, d) = f(x);
        let next = x - v / d;
        if next.is_nan() || next >= x || next <= 0.0 {
            break;
        }
        x = next;
    }
    x
}

/// Aberth–Ehrlich iteration on a monic polynomial with simple roots.
fn aberth(c: &[f64], tol: f64, max_iter: usize) -> Result<Vec<Complex64>, SatakeError> {
    let n = c.len() - 1;
    if n == 1 {
        return Ok(vec![Complex64::new(-c[0], 0.0)]);
    }
    let radius = cauchy_bound(c);
    if radius == 0.0 {
        return Ok(vec![Complex64::new(0.0, 0.0); n]);
    }
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + START_OFFSET;
            Complex64::from_polar(radius, phi)
        })
        .collect();
    let mut settled = 0;
    for _ in 0..max_iter {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let w = ratio / (1.0 - ratio * repulsion);
            if w.is_finite() {
                z[k] -= w;
                max_step = max_step.max(w.norm() / z[k].norm().max(f64::MIN_POSITIVE));
            }
        }
        if max_step < 1e-14 {
            settled += 1;
            if settled >= 2 {
                break;
            }
        }
    }
    let max_coeff = c.iter().map(|a| a.abs()).fold(0.0, f64::max);
    let scale = max_coeff * radius.max(1.0).powi(n as i32);
    let residual = z.iter().map(|&r| horner(c, r).0.norm()).fold(0.0, f64::max);
    if residual.is_nan() || residual > tol * scale {
        return Err(SatakeError::NumericalFailure {
            residual,
            reason: "root finder did not converge",
        });
    }
    Ok(z)
}

/// All roots of `p` with multiplicity.
///
/// Each squarefree factor of `p` is solved separately, so repeated roots
/// are found to full precision rather than to the square root of it.
pub fn complex_roots(
    p: &IntPolynomial,
    tol: f64,
    max_iter: usize,
) -> Result<Vec<Complex64>, SatakeError> {
    if p.is_zero() || p.is_constant() {
        return Err(SatakeError::Domain(
            "root finding needs a nonconstant polynomial",
        ));
    }
    let mut out = Vec::with_capacity(p.deg());
    for (part, mult) in squarefree_decomposition(p)? {
        let raw = part.to_f64_coeffs();
        let lc = *raw.last().expect("nonconstant");
        let c: Vec<f64> = raw.iter().map(|a| a / lc).collect();
        for r in aberth(&c, tol, max_iter)? {
            out.extend(std::iter::repeat_n(r, mult as usize));
        }
    }
    Ok(out)
}

/// `max |p(tau)| / sum |a_k| |tau|^k` over the given roots.
pub(crate) fn relative_residual(p: &IntPolynomial, roots: &[Complex64]) -> f64 {
    let c = p.to_f64_coeffs();
    roots
        .iter()
        .map(|&r| {
            let scale: f64 = c
                .iter()
                .enumerate()
                .map(|(k, a)| a.abs() * r.norm().powi(k as i32))
                .sum();
            horner(&c, r).0.norm() / scale
        })
        .fold(0.0, f64::max)
}
