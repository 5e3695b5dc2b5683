//! Subresultant resultants over an integral domain, and the power map
//! `g(T) -> prod (T - tau^r)` built on top of them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntPolynomial, PolyError};

/// The little ring interface the subresultant chain needs: an integral
/// domain with exact division.
pub trait Domain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; `None` if `o` does not divide `self`.
    fn div_exact(&self, o: &Self) -> Option<Self>;

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Domain for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::zero()
    }
    fn one() -> Self {
        IntPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        IntPolynomial::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        IntPolynomial::div_exact(self, o)
    }
}

/// Polynomial over a [`Domain`], low-to-high, trimmed.
type DPoly<R> = Vec<R>;

fn trim<R: Domain>(mut p: DPoly<R>) -> DPoly<R> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn prem<R: Domain>(a: &DPoly<R>, b: &DPoly<R>) -> DPoly<R> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.clone();
    }
    let lc = b[db].clone();
    let mut r = a.clone();
    for k in (0..=a.len() - b.len()).rev() {
        let t = r[k + db].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lc);
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = r[k + i].sub(&t.mul(bc));
        }
    }
    r.truncate(db);
    trim(r)
}

/// Resultant of `a` and `b` (coefficients low-to-high) by the subresultant
/// pseudo-remainder chain.
pub fn resultant_over<R: Domain>(a: &[R], b: &[R]) -> Result<R, PolyError> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return Ok(R::zero());
    }
    let mut s = R::one();
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = s.neg();
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        return Ok(s.mul(&b[0].pow(a.len() - 1)));
    }
    let inexact = PolyError::Internal("inexact division in subresultant chain");
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg();
        }
        let r = prem(&a, &b);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r
            .iter()
            .map(|c| c.div_exact(&divisor))
            .collect::<Option<Vec<_>>>()
            .ok_or(inexact.clone())?;
        g = a[a.len() - 1].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .ok_or(inexact.clone())?,
        };
        if b.is_empty() {
            return Ok(R::zero());
        }
        if b.len() == 1 {
            let da = a.len() - 1;
            let hh = b[0].pow(da).div_exact(&h.pow(da - 1)).ok_or(inexact)?;
            return Ok(s.mul(&hh));
        }
    }
}

/// Resultant of two integer polynomials.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> Result<BigInt, PolyError> {
    resultant_over(a.coeffs(), b.coeffs())
}

/// Discriminant up to sign and leading-coefficient normalization:
/// `Res(p, p') / lc(p)`.
pub fn discriminant(p: &IntPolynomial) -> Result<BigInt, PolyError> {
    let r = resultant(p, &p.derivative())?;
    Domain::div_exact(&r, &p.leading_coeff()).ok_or(PolyError::Internal("discriminant division"))
}

/// `g^(r)(T) = prod (T - tau_j^r)` over the roots of the monic `g`, as the
/// resultant in `S` of `g(S)` and `T - S^r`.
pub fn power_map(g: &IntPolynomial, r: u32) -> Result<IntPolynomial, PolyError> {
    if r == 0 {
        return Err(PolyError::Domain("power map exponent must be positive"));
    }
    if !g.is_monic() {
        return Err(PolyError::Domain("power map needs a monic polynomial"));
    }
    if r == 1 || g.degree() == Some(0) {
        return Ok(g.clone());
    }
    let a: Vec<IntPolynomial> = g
        .coeffs()
        .iter()
        .map(|c| IntPolynomial::constant(c.clone()))
        .collect();
    let mut b = vec![IntPolynomial::zero(); r as usize + 1];
    b[0] = IntPolynomial::x();
    b[r as usize] = IntPolynomial::constant(BigInt::from(-1));
    let res = resultant_over(&a, &b)?;
    let res = if res.leading_coeff() == BigInt::from(-1) {
        -res
    } else {
        res
    };
    if !res.is_monic() || res.degree() != g.degree() {
        return Err(PolyError::Internal(
            "power map resultant is not monic of the input degree",
        ));
    }
    Ok(res)
}
