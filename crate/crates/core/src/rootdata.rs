//! Root data of type `B_g` / `C_g` for `Spin_{2g+1}` and its dual, in the
//! `y`-coordinates `y_j = <f_j, x>`, with the fundamental alcove and the
//! order-two element `rho` of `Omega`.

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum RootDataError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("root datum self-check failed: {0}")]
    Inconsistent(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinRootDatum {
    pub g: usize,
    /// `e_1 - e_2, ..., e_{g-1} - e_g, e_g` in `e`-coordinates.
    pub simple_roots_b: Vec<Vec<i64>>,
    /// `f_1 - f_2, ..., f_{g-1} - f_g, 2 f_g` in `f`-coordinates.
    pub simple_coroots_c: Vec<Vec<i64>>,
    pub highest_coroot: Vec<i64>,
    /// `(b_0, ..., b_g)`.
    pub marks: Vec<i64>,
    /// `varpi_1, ..., varpi_g` in `y`-coordinates.
    pub fundamental_weights: Vec<Vec<Rational64>>,
    /// `v_0 = 0, v_j = varpi_j / b_j`.
    pub alcove_vertices: Vec<Vec<Rational64>>,
}

fn pairing(coroot: &[i64], y: &[Rational64]) -> Rational64 {
    coroot
        .iter()
        .zip(y)
        .map(|(&c, &v)| Rational64::from_integer(c) * v)
        .sum()
}

impl SpinRootDatum {
    pub fn build(g: usize) -> Result<Self, RootDataError> {
        if g == 0 {
            return Err(RootDataError::Domain("rank must be positive"));
        }
        let unit = |i: usize, scale: i64| {
            let mut v = vec![0; g];
            v[i] = scale;
            v
        };
        let step = |i: usize| {
            let mut v = unit(i, 1);
            v[i + 1] = -1;
            v
        };
        let mut simple_roots_b: Vec<Vec<i64>> = (0..g - 1).map(step).collect();
        simple_roots_b.push(unit(g - 1, 1));
        let mut simple_coroots_c: Vec<Vec<i64>> = (0..g - 1).map(step).collect();
        simple_coroots_c.push(unit(g - 1, 2));
        let highest_coroot = unit(0, 2);

        let mut marks = vec![1];
        marks.extend(std::iter::repeat_n(2, g - 1));
        marks.push(1);

        let half = Rational64::new(1, 2);
        let fundamental_weights: Vec<Vec<Rational64>> = (1..=g)
            .map(|j| {
                if j == g {
                    vec![half; g]
                } else {
                    (0..g)
                        .map(|i| {
                            if i < j {
                                Rational64::one()
                            } else {
                                Rational64::zero()
                            }
                        })
                        .collect()
                }
            })
            .collect();
        let mut alcove_vertices = vec![vec![Rational64::zero(); g]];
        for (j, w) in fundamental_weights.iter().enumerate() {
            let b = Rational64::from_integer(marks[j + 1]);
            alcove_vertices.push(w.iter().map(|&c| c / b).collect());
        }

        let datum = SpinRootDatum {
            g,
            simple_roots_b,
            simple_coroots_c,
            highest_coroot,
            marks,
            fundamental_weights,
            alcove_vertices,
        };
        datum.self_check()?;
        Ok(datum)
    }

    fn self_check(&self) -> Result<(), RootDataError> {
        for (i, c) in self.simple_coroots_c.iter().enumerate() {
            for (j, w) in self.fundamental_weights.iter().enumerate() {
                let expect = if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                };
                if pairing(c, w) != expect {
                    return Err(RootDataError::Inconsistent("weights not dual to coroots"));
                }
            }
        }
        let mut sum = vec![0; self.g];
        for (c, &b) in self.simple_coroots_c.iter().zip(&self.marks[1..]) {
            for (s, &x) in sum.iter_mut().zip(c) {
                *s += b * x;
            }
        }
        if sum != self.highest_coroot || self.marks[0] != 1 {
            return Err(RootDataError::Inconsistent(
                "marks do not expand the highest coroot",
            ));
        }
        if self.hyperspecial_vertices() != vec![0, self.g] {
            return Err(RootDataError::Inconsistent("hyperspecial vertices"));
        }
        if self.fundamental_group_order() != 2 {
            return Err(RootDataError::Inconsistent("fundamental group order"));
        }
        Ok(())
    }

    /// `<a, y>` for a coroot `a` in `f`-coordinates.
    pub fn pairing(&self, coroot: &[i64], y: &[Rational64]) -> Rational64 {
        pairing(coroot, y)
    }

    /// Indices `j` with `b_j = 1`.
    pub fn hyperspecial_vertices(&self) -> Vec<usize> {
        (0..=self.g).filter(|&j| self.marks[j] == 1).collect()
    }

    /// Index of the coroot lattice in `Z^g`, the determinant of the simple
    /// coroot matrix (lower bidiagonal apart from the last row).
    pub fn fundamental_group_order(&self) -> i64 {
        let n = self.g;
        let mut m: Vec<Vec<Rational64>> = self
            .simple_coroots_c
            .iter()
            .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        let mut det = Rational64::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return 0;
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= m[col][col];
            let (top, rest) = m.split_at_mut(col + 1);
            let prow = &top[col];
            for row in rest {
                let f = row[col] / prow[col];
                for (x, &p) in row[col..].iter_mut().zip(&prow[col..]) {
                    *x -= f * p;
                }
            }
        }
        det.to_integer().abs()
    }

    /// `rho` on exact points: `y_j -> 1/2 - y_{g-j+1}`.
    pub fn rho_exact(&self, y: &[Rational64]) -> Vec<Rational64> {
        let half = Rational64::new(1, 2);
        y.iter().rev().map(|&v| half - v).collect()
    }
}

/// A point of the closed alcove `1/2 >= y_1 >= ... >= y_g >= 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlcovePoint {
    pub y: Vec<f64>,
    pub tolerance: f64,
}

impl AlcovePoint {
    pub fn new(y: Vec<f64>, tolerance: f64) -> Result<Self, RootDataError> {
        let pt = AlcovePoint { y, tolerance };
        if !pt.in_closed_alcove() {
            return Err(RootDataError::Domain("point outside the closed alcove"));
        }
        Ok(pt)
    }

    pub fn g(&self) -> usize {
        self.y.len()
    }

    pub fn in_closed_alcove(&self) -> bool {
        let t = self.tolerance;
        let (Some(&first), Some(&last)) = (self.y.first(), self.y.last()) else {
            return false;
        };
        first <= 0.5 + t && last >= -t && self.y.windows(2).all(|w| w[0] >= w[1] - t)
    }

    /// `(x_0, ..., x_g)` with `x_0 = 1 - 2 y_1`, `x_j = y_j - y_{j+1}`,
    /// `x_g = 2 y_g`; these are nonnegative and `sum b_j x_j = 1`.
    pub fn kac_coordinates(&self) -> Vec<f64> {
        let g = self.g();
        let mut x = Vec::with_capacity(g + 1);
        x.push(1.0 - 2.0 * self.y[0]);
        x.extend(self.y.windows(2).map(|w| w[0] - w[1]));
        x.push(2.0 * self.y[g - 1]);
        x
    }

    pub fn from_kac(x: &[f64], tolerance: f64) -> Result<Self, RootDataError> {
        if x.len() < 2 {
            return Err(RootDataError::Domain("need at least two Kac coordinates"));
        }
        let g = x.len() - 1;
        let mut y = vec![0.0; g];
        y[g - 1] = x[g] / 2.0;
        for j in (0..g - 1).rev() {
            y[j] = y[j + 1] + x[j + 1];
        }
        AlcovePoint::new(y, tolerance)
    }
}

/// Representative in the closed alcove of the orbit of `raw` under the
/// affine Weyl group: reduce mod 1, fold `y -> 1 - y` above 1/2, sort.
pub fn alcove_reduce(raw: &[f64], tol: f64) -> Result<AlcovePoint, RootDataError> {
    if raw.is_empty() {
        return Err(RootDataError::Domain("empty coordinate vector"));
    }
    if raw.iter().any(|y| !y.is_finite()) || !tol.is_finite() {
        return Err(RootDataError::Domain("non-finite coordinate"));
    }
    let mut y: Vec<f64> = raw
        .iter()
        .map(|&v| {
            let r = v.rem_euclid(1.0);
            let r = if r >= 1.0 { 0.0 } else { r };
            if r > 0.5 {
                1.0 - r
            } else {
                r
            }
        })
        .collect();
    y.sort_by(|a, b| b.total_cmp(a));
    Ok(AlcovePoint { y, tolerance: tol })
}

fn check_point(dat: &SpinRootDatum, pt: &AlcovePoint) -> Result<(), RootDataError> {
    if pt.g() != dat.g {
        return Err(RootDataError::Domain("point rank differs from datum rank"));
    }
    if !pt.in_closed_alcove() {
        return Err(RootDataError::Domain("point outside the closed alcove"));
    }
    Ok(())
}

/// `rho(y) = (1/2 - y_g, ..., 1/2 - y_1)`, mapping `v_j` to `v_{g-j}`.
pub fn omega_rho(dat: &SpinRootDatum, pt: &AlcovePoint) -> Result<AlcovePoint, RootDataError> {
    check_point(dat, pt)?;
    Ok(AlcovePoint {
        y: pt.y.iter().rev().map(|&v| 0.5 - v).collect(),
        tolerance: pt.tolerance,
    })
}

pub fn omega_fixed(dat: &SpinRootDatum, pt: &AlcovePoint, tol: f64) -> bool {
    omega_rho(dat, pt).is_ok_and(|r| r.y.iter().zip(&pt.y).all(|(a, b)| (a - b).abs() < tol))
}

/// One pair `(j, g-j+1)` (1-based) and the sum `y_j + y_{g-j+1}`, which
/// is 1/2 at a fixed point of `rho`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaPairing {
    pub j: usize,
    pub k: usize,
    pub sum: f64,
}

pub fn omega_witness(pt: &AlcovePoint) -> Vec<OmegaPairing> {
    let g = pt.g();
    (1..=g.div_ceil(2))
        .map(|j| OmegaPairing {
            j,
            k: g - j + 1,
            sum: pt.y[j - 1] + pt.y[g - j],
        })
        .collect()
}
