//! Frobenius angles, the Satake parameter, and the component group of its
//! centralizer in the adjoint dual group, computed three ways.

mod brute;
mod roots;

pub use brute::{brute_details, component_group_brute, BruteDetails, MAX_BRUTE_RANK};
pub use roots::complex_roots;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polycore::PolyError;
use crate::rootdata::{
    alcove_reduce, omega_fixed, omega_witness, OmegaPairing, RootDataError, SpinRootDatum,
};
use crate::weil::{is_even, WeilPolynomial};

pub const DEFAULT_MAX_ITER: usize = 500;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum SatakeError {
    #[error("numerical failure ({reason}); best residual {residual:e}")]
    NumericalFailure { residual: f64, reason: &'static str },
    #[error("rank {g} exceeds the enumeration budget")]
    RankTooLarge { g: usize },
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("inconsistent enumeration: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SatakeParameter {
    pub g: usize,
    pub q: u64,
    /// `theta_1 >= ... >= theta_g`, each in `[0, 1/2]`.
    pub angles: Vec<f64>,
    pub similitude_angle: f64,
    /// `tau_1, ..., tau_g, tau_{g+1}, ..., tau_{2g}` with
    /// `tau_{g+j} = q / tau_j`.
    pub roots: Vec<Complex64>,
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Exact,
    Alcove,
    Brute,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Exact => "exact",
            Route::Alcove => "alcove",
            Route::Brute => "brute",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentGroupResult {
    pub order: usize,
    pub route: Route,
    /// For the alcove route at a fixed point: the sums `y_j + y_{g-j+1}`.
    pub witness: Option<Vec<OmegaPairing>>,
}

/// Roots of `P` paired as `(tau, q/tau)`, angles in `[0, 1/2]` sorted
/// descending.
pub fn satake_parameter(w: &WeilPolynomial, tol: f64) -> Result<SatakeParameter, SatakeError> {
    let q = w.q() as f64;
    let sqrt_q = q.sqrt();
    let mut rest = complex_roots(w.poly(), tol, DEFAULT_MAX_ITER)?;
    for z in rest.iter_mut() {
        if z.im.abs() < tol * sqrt_q {
            z.im = 0.0;
        }
    }
    let failure = |residual: f64, reason| SatakeError::NumericalFailure { residual, reason };

    let mut pairs: Vec<(Complex64, Complex64)> = Vec::with_capacity(w.g());
    while let Some(tau) = rest.pop() {
        let (idx, err) = rest
            .iter()
            .enumerate()
            .map(|(i, &s)| (i, (tau * s - q).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .ok_or(failure(f64::INFINITY, "odd number of roots"))?;
        if err >= tol * q {
            return Err(failure(err / q, "roots do not pair as tau, q/tau"));
        }
        let partner = rest.swap_remove(idx);
        for z in [tau, partner] {
            let dev = (z.norm() - sqrt_q).abs();
            if dev >= tol * sqrt_q {
                return Err(failure(dev / sqrt_q, "root off the circle |tau| = sqrt q"));
            }
        }
        pairs.push(if tau.im >= 0.0 {
            (tau, partner)
        } else {
            (partner, tau)
        });
    }
    let angle = |z: Complex64| z.arg().abs() / (2.0 * PI);
    pairs.sort_by(|a, b| angle(b.0).total_cmp(&angle(a.0)));

    let angles: Vec<f64> = pairs.iter().map(|p| angle(p.0)).collect();
    let roots: Vec<Complex64> = pairs
        .iter()
        .map(|p| p.0)
        .chain(pairs.iter().map(|p| p.1))
        .collect();
    let residual = roots::relative_residual(w.poly(), &roots);
    Ok(SatakeParameter {
        g: w.g(),
        q: w.q(),
        angles,
        similitude_angle: 0.0,
        roots,
        residual,
    })
}

/// Coefficients, low-to-high, of `prod (T - t_j)(T - t_0 / t_j)` with
/// `t_j = exp(2 pi i theta_j)`.
pub fn similitude_char_poly(sp: &SatakeParameter) -> Vec<Complex64> {
    let t0 = Complex64::from_polar(1.0, 2.0 * PI * sp.similitude_angle);
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &theta in &sp.angles {
        let t = Complex64::from_polar(1.0, 2.0 * PI * theta);
        for root in [t, t0 / t] {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * root;
            }
            coeffs = next;
        }
    }
    coeffs
}

/// Order 2 exactly when `P` is even.
pub fn component_group_exact(w: &WeilPolynomial) -> ComponentGroupResult {
    ComponentGroupResult {
        order: if is_even(w) { 2 } else { 1 },
        route: Route::Exact,
        witness: None,
    }
}

/// Order 2 exactly when the alcove point of the Satake parameter is fixed
/// by `rho`.
pub fn component_group_alcove(
    w: &WeilPolynomial,
    tol: f64,
) -> Result<ComponentGroupResult, SatakeError> {
    let sp = satake_parameter(w, tol)?;
    let datum = SpinRootDatum::build(w.g())?;
    let pt = alcove_reduce(&sp.angles, tol)?;
    let fixed = omega_fixed(&datum, &pt, tol);
    Ok(ComponentGroupResult {
        order: if fixed { 2 } else { 1 },
        route: Route::Alcove,
        witness: fixed.then(|| omega_witness(&pt)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::IntPolynomial;
    use crate::weil::validate;

    const TOL: f64 = 1e-9;

    fn w(c: &[i64], q: u64) -> WeilPolynomial {
        validate(&IntPolynomial::from_i64s(c), q).unwrap()
    }

    fn twist_pair() -> WeilPolynomial {
        let f = &IntPolynomial::from_i64s(&[7, -1, 1]) * &IntPolynomial::from_i64s(&[7, 1, 1]);
        validate(&f, 7).unwrap()
    }

    fn sextic() -> WeilPolynomial {
        let a = IntPolynomial::from_i64s(&[3, -1, 1]);
        let b = IntPolynomial::from_i64s(&[3, 1, 1]);
        validate(&(&a.pow(2) * &b), 3).unwrap()
    }

    #[test]
    fn angles_of_examples() {
        let sp = satake_parameter(&w(&[7, 0, 1], 7), TOL).unwrap();
        assert!((sp.angles[0] - 0.25).abs() < 1e-12);

        let sp = satake_parameter(&w(&[3, -1, 1], 3), TOL).unwrap();
        let expected = 11f64.sqrt().atan2(1.0) / (2.0 * PI);
        assert!((sp.angles[0] - expected).abs() < 1e-12);
        assert!((sp.angles[0] - 0.2033926253306657).abs() < 1e-12);

        let sp = satake_parameter(&w(&[9, 0, -6, 0, 1], 3), TOL).unwrap();
        assert_eq!(sp.angles, vec![0.5, 0.0]);
        assert!(sp.residual < 1e-10);
    }

    #[test]
    fn roots_are_paired() {
        let sp = satake_parameter(&sextic(), TOL).unwrap();
        let q = 3.0;
        for j in 0..sp.g {
            assert!((sp.roots[j] * sp.roots[sp.g + j] - q).norm() < 1e-9 * q);
        }
        assert_eq!(sp.angles.len(), 3);
        assert!(sp.angles.windows(2).all(|a| a[0] >= a[1]));
    }

    #[test]
    fn char_poly_examples() {
        let sp = |angles: Vec<f64>| SatakeParameter {
            g: angles.len(),
            q: 7,
            angles,
            similitude_angle: 0.0,
            roots: Vec::new(),
            residual: 0.0,
        };
        let c = similitude_char_poly(&sp(vec![0.25]));
        let expect = [1.0, 0.0, 1.0];
        assert!(c.iter().zip(expect).all(|(a, b)| (a - b).norm() < 1e-12));
        let c = similitude_char_poly(&sp(vec![0.0]));
        let expect = [1.0, -2.0, 1.0];
        assert!(c.iter().zip(expect).all(|(a, b)| (a - b).norm() < 1e-12));

        let c = similitude_char_poly(&satake_parameter(&twist_pair(), TOL).unwrap());
        assert!(c[1].norm() < 1e-9 && c[3].norm() < 1e-9);
    }

    #[test]
    fn exact_route() {
        assert_eq!(component_group_exact(&w(&[7, 0, 1], 7)).order, 2);
        assert_eq!(component_group_exact(&w(&[3, -1, 1], 3)).order, 1);
        let f = &IntPolynomial::from_i64s(&[7, 0, 1]) * &IntPolynomial::from_i64s(&[7, -1, 1]);
        assert_eq!(component_group_exact(&validate(&f, 7).unwrap()).order, 1);
    }

    #[test]
    fn alcove_route() {
        let r = component_group_alcove(&w(&[7, 0, 1], 7), TOL).unwrap();
        assert_eq!(r.order, 2);
        let wit = r.witness.unwrap();
        assert!((wit[0].sum - 0.5).abs() < 1e-12);
        assert_eq!(
            component_group_alcove(&w(&[3, -1, 1], 3), TOL)
                .unwrap()
                .order,
            1
        );
        let r = component_group_alcove(&w(&[9, 0, -6, 0, 1], 3), TOL).unwrap();
        assert_eq!(r.order, 2);
        assert_eq!(component_group_alcove(&twist_pair(), TOL).unwrap().order, 2);
    }

    #[test]
    fn brute_route() {
        assert_eq!(
            component_group_brute(&w(&[7, 0, 1], 7), TOL).unwrap().order,
            2
        );
        assert_eq!(
            component_group_brute(&w(&[3, -1, 1], 3), TOL)
                .unwrap()
                .order,
            1
        );
        assert_eq!(component_group_brute(&sextic(), TOL).unwrap().order, 1);
        assert_eq!(
            component_group_brute(&w(&[9, 0, -6, 0, 1], 3), TOL)
                .unwrap()
                .order,
            2
        );
        assert_eq!(component_group_brute(&twist_pair(), TOL).unwrap().order, 2);
    }
}
