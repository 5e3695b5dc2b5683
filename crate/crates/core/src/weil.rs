//! Weil q-polynomials and the isogeny-class invariants read off them.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polycore::{
    is_irreducible, is_small_prime, power_map, squarefree_part, strip_factor, sturm_count,
    IntPolynomial, PolyError, QuadraticSurd,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum WeilError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("degree must be even and at least 2")]
    BadDegree,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("functional equation fails at k={k}")]
    FunctionalEquationFailed { k: usize },
    #[error("roots off the Weil circle: {inside} of {degree} real-transform roots inside (-2 sqrt q, 2 sqrt q)")]
    RootsOffWeilCircle { inside: usize, degree: usize },
    #[error("class is not isotypic")]
    NotIsotypic,
    #[error("internal contradiction: {0}")]
    InternalContradiction(&'static str),
    #[error("integer overflow computing q^r")]
    Overflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A validated triple `(P, q, g)`: `P` monic of degree `2g`, satisfying the
/// functional equation, with every root of absolute value `sqrt q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWeil")]
pub struct WeilPolynomial {
    poly: IntPolynomial,
    q: u64,
    p: u64,
    g: usize,
}

#[derive(Deserialize)]
struct RawWeil {
    poly: IntPolynomial,
    q: u64,
}

impl TryFrom<RawWeil> for WeilPolynomial {
    type Error = WeilError;

    fn try_from(raw: RawWeil) -> Result<Self, WeilError> {
        validate(&raw.poly, raw.q)
    }
}

impl WeilPolynomial {
    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The prime with `q = p^k`.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn g(&self) -> usize {
        self.g
    }
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    (1..=q.ilog2()).find_map(|k| {
        let root = q.nth_root(k);
        (root.checked_pow(k) == Some(q) && is_small_prime(root)).then_some((root, k))
    })
}

fn check_functional_equation(p: &IntPolynomial, q: u64) -> Result<usize, WeilError> {
    let deg = p.degree().ok_or(WeilError::BadDegree)?;
    if deg == 0 || deg % 2 == 1 {
        return Err(WeilError::BadDegree);
    }
    let g = deg / 2;
    let q = BigInt::from(q);
    let mut qk = BigInt::one();
    for k in 0..=g {
        if p.coeff(g - k) != &qk * p.coeff(g + k) {
            return Err(WeilError::FunctionalEquationFailed { k });
        }
        qk *= &q;
    }
    Ok(g)
}

/// Checks, in order: prime power, degree, monic, functional equation,
/// roots on the circle of radius `sqrt q` (exactly, by Sturm on the real
/// transform).
pub fn validate(p: &IntPolynomial, q: u64) -> Result<WeilPolynomial, WeilError> {
    let (prime, _) = prime_power(q).ok_or(WeilError::NotPrimePower(q))?;
    match p.degree() {
        Some(d) if d >= 2 && d % 2 == 0 => {}
        _ => return Err(WeilError::BadDegree),
    }
    if !p.is_monic() {
        return Err(WeilError::NotMonic);
    }
    let g = check_functional_equation(p, q)?;
    check_modulus(p, q)?;
    Ok(WeilPolynomial {
        poly: p.clone(),
        q,
        p: prime,
        g,
    })
}

fn check_modulus(p: &IntPolynomial, q: u64) -> Result<(), WeilError> {
    let h = real_weil_transform(p, q)?;
    let four_q = BigInt::from(4) * BigInt::from(q);
    let s = q.sqrt();
    let (h, lo, hi) = if s * s == q {
        let two_s = BigInt::from(2 * s);
        let (h, _) = strip_factor(&h, &IntPolynomial::new(vec![-&two_s, BigInt::one()]));
        let (h, _) = strip_factor(&h, &IntPolynomial::new(vec![two_s, BigInt::one()]));
        let bound = 2 * s as i64;
        (
            h,
            QuadraticSurd::integer(-bound),
            QuadraticSurd::integer(bound),
        )
    } else {
        let (h, _) = strip_factor(&h, &IntPolynomial::new(vec![-four_q, 0.into(), 1.into()]));
        let d = BigInt::from(q);
        (
            h,
            QuadraticSurd::scaled_root(-2, &d)?,
            QuadraticSurd::scaled_root(2, &d)?,
        )
    };
    let h1 = squarefree_part(&h)?;
    let degree = h1.deg();
    if degree == 0 {
        return Ok(());
    }
    let inside = sturm_count(&h1, &lo, &hi)?;
    if inside != degree {
        return Err(WeilError::RootsOffWeilCircle { inside, degree });
    }
    Ok(())
}

/// The monic degree-`g` polynomial `h` with `P(T) = T^g h(T + q/T)`.
///
/// With `x = T + q/T`, `T^k + q^k T^-k = D_k(x)` where `D_0 = 2`,
/// `D_1 = x` and `D_k = x D_{k-1} - q D_{k-2}`, so
/// `h = a_g + sum_k a_{g+k} D_k`.
pub fn real_weil_transform(p: &IntPolynomial, q: u64) -> Result<IntPolynomial, WeilError> {
    let g = check_functional_equation(p, q)?;
    let qq = IntPolynomial::constant(q.into());
    let x = IntPolynomial::x();
    let mut prev = IntPolynomial::constant(2.into());
    let mut cur = x.clone();
    let mut h = IntPolynomial::constant(p.coeff(g));
    for k in 1..=g {
        h = &h + &cur.scale(&p.coeff(g + k));
        let next = &(&x * &cur) - &(&qq * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(h)
}

/// `P(-T)`: the class twisted by the unramified quadratic character.
pub fn quadratic_twist(w: &WeilPolynomial) -> WeilPolynomial {
    WeilPolynomial {
        poly: w.poly.negate_variable(),
        ..w.clone()
    }
}

pub fn is_even(w: &WeilPolynomial) -> bool {
    w.poly.is_even()
}

/// The class over `F_{q^r}`: roots raised to the `r`-th power.
pub fn base_change(w: &WeilPolynomial, r: u32) -> Result<WeilPolynomial, WeilError> {
    if r == 0 {
        return Err(PolyError::Domain("base change degree must be positive").into());
    }
    if r == 1 {
        return Ok(w.clone());
    }
    let q = w.q.checked_pow(r).ok_or(WeilError::Overflow)?;
    let poly = power_map(&w.poly, r)?;
    validate(&poly, q)
        .map_err(|_| WeilError::InternalContradiction("base change is not a Weil polynomial"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenyClassInvariants {
    pub radical: IntPolynomial,
    pub center_dim: usize,
    pub is_isotypic: bool,
    pub is_even: bool,
    pub twist: IntPolynomial,
    pub center_dim_quadratic: usize,
}

pub fn invariants(w: &WeilPolynomial) -> Result<IsogenyClassInvariants, WeilError> {
    let radical = squarefree_part(&w.poly)?;
    let quad = squarefree_part(&power_map(&w.poly, 2)?)?;
    Ok(IsogenyClassInvariants {
        center_dim: radical.deg(),
        is_isotypic: is_irreducible(&radical)?,
        radical,
        is_even: is_even(w),
        twist: w.poly.negate_variable(),
        center_dim_quadratic: quad.deg(),
    })
}

/// For an isotypic class, the `m` with `M^(r) = M_{base change}^m`, where
/// `m = deg M / deg rad(P^(r))`. Returns `InternalContradiction` when `m`
/// does not divide `r`; this does occur, e.g. `T^2 + 3T + 9` over `F_9`
/// with `r = 3` has `m = 2`.
pub fn base_change_index(w: &WeilPolynomial, r: u32) -> Result<u32, WeilError> {
    let inv = invariants(w)?;
    if !inv.is_isotypic {
        return Err(WeilError::NotIsotypic);
    }
    let bc = base_change(w, r)?;
    let bc_radical = squarefree_part(bc.poly())?;
    let (cd, cd_bc) = (inv.center_dim, bc_radical.deg());
    if cd % cd_bc != 0 {
        return Err(WeilError::InternalContradiction(
            "center dimension does not divide",
        ));
    }
    let m = u32::try_from(cd / cd_bc).map_err(|_| WeilError::Overflow)?;
    if !r.is_multiple_of(m) {
        return Err(WeilError::InternalContradiction("index does not divide r"));
    }
    if power_map(&inv.radical, r)? != bc_radical.pow(m) {
        return Err(WeilError::InternalContradiction(
            "radical power identity fails",
        ));
    }
    Ok(m)
}

/// For isotypic classes: `center_dim == 2 * center_dim_quadratic`, which is
/// equivalent to evenness.
pub fn even_criterion_centers(w: &WeilPolynomial) -> Result<bool, WeilError> {
    let inv = invariants(w)?;
    if !inv.is_isotypic {
        return Err(WeilError::NotIsotypic);
    }
    Ok(inv.center_dim == 2 * inv.center_dim_quadratic)
}
