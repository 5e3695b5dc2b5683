//! Knapp–Stein R-group by enumerating the Weyl group of type `C_g` as
//! signed permutations.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{satake_parameter, ComponentGroupResult, Route, SatakeError};
use crate::weil::WeilPolynomial;

pub const MAX_BRUTE_RANK: usize = 7;

/// `(w y)_i = sign[i] * y[perm[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SignedPerm {
    perm: Vec<u8>,
    sign: Vec<i8>,
}

impl SignedPerm {
    fn identity(g: usize) -> Self {
        SignedPerm {
            perm: (0..g as u8).collect(),
            sign: vec![1; g],
        }
    }

    fn act_f(&self, y: &[f64]) -> Vec<f64> {
        self.perm
            .iter()
            .zip(&self.sign)
            .map(|(&p, &s)| s as f64 * y[p as usize])
            .collect()
    }

    fn act_i(&self, y: &[i64]) -> Vec<i64> {
        self.perm
            .iter()
            .zip(&self.sign)
            .map(|(&p, &s)| s as i64 * y[p as usize])
            .collect()
    }

    /// `self * other`, acting as `other` first.
    fn compose(&self, other: &Self) -> Self {
        let g = self.perm.len();
        let mut perm = vec![0; g];
        let mut sign = vec![0; g];
        for i in 0..g {
            let j = self.perm[i] as usize;
            perm[i] = other.perm[j];
            sign[i] = self.sign[i] * other.sign[j];
        }
        SignedPerm { perm, sign }
    }

    /// Reflection in the coroot `a` of type `C`: `y -> y - <a, y> a^v` with
    /// `a^v = 2a / <a, a>`.
    fn reflection(a: &[i64]) -> Self {
        let g = a.len();
        let support: Vec<usize> = (0..g).filter(|&i| a[i] != 0).collect();
        let mut w = SignedPerm::identity(g);
        match support.as_slice() {
            [i] => w.sign[*i] = -1,
            [i, j] => {
                let s = if a[*i] == a[*j] { -1 } else { 1 };
                w.perm.swap(*i, *j);
                w.sign[*i] = s;
                w.sign[*j] = s;
            }
            _ => unreachable!("coroots have support one or two"),
        }
        w
    }
}

fn all_signed_perms(g: usize) -> Vec<SignedPerm> {
    let mut perms: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..g {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..g as u8)
                    .filter(|i| !p.contains(i))
                    .map(|i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut out = Vec::with_capacity(perms.len() << g);
    for perm in perms {
        for mask in 0u32..1 << g {
            let sign = (0..g)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            out.push(SignedPerm {
                perm: perm.clone(),
                sign,
            });
        }
    }
    out
}

/// The type-`C` coroots `+-f_i +- f_j` (`i < j`) and `+-2 f_i`.
fn all_coroots(g: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..g {
        for j in i + 1..g {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; g];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
        for s in [2, -2] {
            let mut v = vec![0; g];
            v[i] = s;
            out.push(v);
        }
    }
    out
}

fn near_integer(x: f64, tol: f64) -> bool {
    (x - x.round()).abs() < tol
}

/// `d` lies in `Z^g` or in `Z^g + (1/2, ..., 1/2)`: the translations that
/// act trivially on the adjoint torus.
fn in_adjoint_lattice(d: &[f64], tol: f64) -> bool {
    d.iter().all(|&x| near_integer(x, tol)) || d.iter().all(|&x| near_integer(x - 0.5, tol))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteDetails {
    /// `|W_s|`.
    pub stabilizer_order: usize,
    /// `|W(R_s)|`, generated by reflections in the integral coroots.
    pub reflection_subgroup_order: usize,
    pub integral_coroots: usize,
    /// `|W_s| / |W(R_s)|`.
    pub quotient_order: usize,
    /// Elements of `W_s` preserving a positive system of `R_s`.
    pub preserving_order: usize,
}

/// Full enumeration for the angle vector `y`.
pub fn brute_details(y: &[f64], tol: f64) -> Result<BruteDetails, SatakeError> {
    let g = y.len();
    if g > MAX_BRUTE_RANK {
        return Err(SatakeError::RankTooLarge { g });
    }
    if g == 0 {
        return Err(SatakeError::Domain("empty angle vector"));
    }
    let stabilizer: HashSet<SignedPerm> = all_signed_perms(g)
        .into_iter()
        .filter(|w| {
            let d: Vec<f64> = w.act_f(y).iter().zip(y).map(|(a, b)| a - b).collect();
            in_adjoint_lattice(&d, tol)
        })
        .collect();

    let pair = |a: &[i64]| a.iter().zip(y).map(|(&c, &v)| c as f64 * v).sum::<f64>();
    let integral: Vec<Vec<i64>> = all_coroots(g)
        .into_iter()
        .filter(|a| near_integer(pair(a), tol))
        .collect();

    let generators: Vec<SignedPerm> = integral.iter().map(|a| SignedPerm::reflection(a)).collect();
    let mut seen: HashSet<SignedPerm> = HashSet::from([SignedPerm::identity(g)]);
    let mut queue = VecDeque::from([SignedPerm::identity(g)]);
    while let Some(w) = queue.pop_front() {
        for s in &generators {
            let next = s.compose(&w);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    if !seen.iter().all(|w| stabilizer.contains(w)) {
        return Err(SatakeError::Inconsistent(
            "reflection subgroup leaves the stabilizer",
        ));
    }

    // A generic functional with distinct positive weights picks out a
    // positive system of R_s.
    let functional: Vec<f64> = (0..g)
        .map(|i| (g - i) as f64 + 0.1 * (i as f64).sqrt())
        .collect();
    let positive = |a: &[i64]| {
        a.iter()
            .zip(&functional)
            .map(|(&c, &f)| c as f64 * f)
            .sum::<f64>()
            > 0.0
    };
    let positives: HashSet<Vec<i64>> = integral.iter().filter(|a| positive(a)).cloned().collect();
    let preserving_order = stabilizer
        .iter()
        .filter(|w| positives.iter().all(|a| positives.contains(&w.act_i(a))))
        .count();

    let stabilizer_order = stabilizer.len();
    let reflection_subgroup_order = seen.len();
    if !stabilizer_order.is_multiple_of(reflection_subgroup_order) {
        return Err(SatakeError::Inconsistent(
            "reflection subgroup order does not divide",
        ));
    }
    Ok(BruteDetails {
        stabilizer_order,
        reflection_subgroup_order,
        integral_coroots: integral.len(),
        quotient_order: stabilizer_order / reflection_subgroup_order,
        preserving_order,
    })
}

/// Order of the R-group as `|W_s| / |W(R_s)|`.
pub fn component_group_brute(
    w: &WeilPolynomial,
    tol: f64,
) -> Result<ComponentGroupResult, SatakeError> {
    if w.g() > MAX_BRUTE_RANK {
        return Err(SatakeError::RankTooLarge { g: w.g() });
    }
    let sp = satake_parameter(w, tol)?;
    let details = brute_details(&sp.angles, tol)?;
    if details.quotient_order != details.preserving_order {
        return Err(SatakeError::Inconsistent("R-group definitions disagree"));
    }
    Ok(ComponentGroupResult {
        order: details.quotient_order,
        route: Route::Brute,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_sizes() {
        assert_eq!(all_signed_perms(3).len(), 48);
        assert_eq!(all_coroots(3).len(), 18);
    }

    #[test]
    fn reflections_are_involutions() {
        for a in all_coroots(3) {
            let s = SignedPerm::reflection(&a);
            assert_eq!(s.compose(&s), SignedPerm::identity(3));
            assert_eq!(s.act_i(&a), a.iter().map(|x| -x).collect::<Vec<_>>());
        }
    }

    #[test]
    fn supersingular_elliptic() {
        let d = brute_details(&[0.25], 1e-9).unwrap();
        assert_eq!(d.stabilizer_order, 2);
        assert_eq!(d.integral_coroots, 0);
        assert_eq!((d.quotient_order, d.preserving_order), (2, 2));
    }

    #[test]
    fn generic_angle() {
        let d = brute_details(&[0.2033926253306657], 1e-9).unwrap();
        assert_eq!((d.stabilizer_order, d.quotient_order), (1, 1));
    }

    #[test]
    fn boundary_point() {
        // y = (1/2, 0): only +-2f_1, +-2f_2 are integral, so W(R_s) is the
        // four sign changes; the swap moves y by (-1/2, 1/2) and stabilizes.
        let d = brute_details(&[0.5, 0.0], 1e-9).unwrap();
        assert_eq!(d.stabilizer_order, 8);
        assert_eq!(d.reflection_subgroup_order, 4);
        assert_eq!((d.quotient_order, d.preserving_order), (2, 2));
    }

    #[test]
    fn rank_budget() {
        assert!(matches!(
            brute_details(&[0.1; 8], 1e-9),
            Err(SatakeError::RankTooLarge { g: 8 })
        ));
    }
}
