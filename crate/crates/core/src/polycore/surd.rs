use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntPolynomial, PolyError};

/// The real number `a + b*sqrt(d)` with rational `a`, `b` and `d > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self, PolyError> {
        if !d.is_positive() {
            return Err(PolyError::Domain("surd radicand must be positive"));
        }
        Ok(QuadraticSurd { a, b, d })
    }

    pub fn integer(a: i64) -> Self {
        QuadraticSurd {
            a: BigRational::from_integer(a.into()),
            b: BigRational::zero(),
            d: BigInt::from(1),
        }
    }

    /// `b * sqrt(d)` for integers `b` and `d > 0`.
    pub fn scaled_root(b: i64, d: &BigInt) -> Result<Self, PolyError> {
        Self::new(
            BigRational::zero(),
            BigRational::from_integer(b.into()),
            d.clone(),
        )
    }

    /// Exact sign of `a + b*sqrt(d)`: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        surd_sign(&self.a, &self.b, &self.d)
    }

    /// Exact comparison. Surds over different radicands compare only when
    /// one of them is rational.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, PolyError> {
        let diff_a = &self.a - &other.a;
        let sign = if self.d == other.d {
            surd_sign(&diff_a, &(&self.b - &other.b), &self.d)
        } else if other.b.is_zero() {
            surd_sign(&diff_a, &self.b, &self.d)
        } else if self.b.is_zero() {
            surd_sign(&diff_a, &(-&other.b), &other.d)
        } else {
            return Err(PolyError::Domain(
                "cannot compare surds over different radicands",
            ));
        };
        Ok(sign.cmp(&0))
    }

    /// Exact value of `p` at this point, as `(A, B)` with `p(x) = A + B*sqrt(d)`.
    pub fn eval(&self, p: &IntPolynomial) -> (BigRational, BigRational) {
        let d = BigRational::from_integer(self.d.clone());
        let mut acc_a = BigRational::zero();
        let mut acc_b = BigRational::zero();
        for c in p.coeffs().iter().rev() {
            let na =
                &acc_a * &self.a + &acc_b * &self.b * &d + BigRational::from_integer(c.clone());
            let nb = &acc_a * &self.b + &acc_b * &self.a;
            acc_a = na;
            acc_b = nb;
        }
        (acc_a, acc_b)
    }

    /// Exact sign of `p` at this point.
    pub fn sign_of(&self, p: &IntPolynomial) -> i32 {
        let (a, b) = self.eval(p);
        surd_sign(&a, &b, &self.d)
    }
}

fn surd_sign(a: &BigRational, b: &BigRational, d: &BigInt) -> i32 {
    let sa = sign(a);
    let sb = sign(b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite signs: the larger of a^2 and b^2 d wins.
    let a2 = a * a;
    let b2d = b * b * BigRational::from_integer(d.clone());
    match a2.cmp(&b2d) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

fn sign(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(a: i64, b: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            d.into(),
        )
        .unwrap()
    }

    #[test]
    fn sign_rule() {
        assert_eq!(surd(3, -1, 8).signum(), 1); // 3 - 2.83
        assert_eq!(surd(2, -1, 5).signum(), -1); // 2 - 2.24
        assert_eq!(surd(-3, 1, 9).signum(), 0);
        assert_eq!(surd(0, -2, 3).signum(), -1);
        assert_eq!(surd(0, 0, 3).signum(), 0);
    }

    #[test]
    fn evaluates_on_the_boundary() {
        // x^2 - 12 vanishes at 2*sqrt(3).
        let p = IntPolynomial::from_i64s(&[-12, 0, 1]);
        assert_eq!(surd(0, 2, 3).sign_of(&p), 0);
        assert_eq!(surd(0, 1, 3).sign_of(&p), -1);
        // x - 1 at -2*sqrt(3)
        let l = IntPolynomial::from_i64s(&[-1, 1]);
        assert_eq!(surd(0, -2, 3).sign_of(&l), -1);
    }

    #[test]
    fn rejects_nonpositive_radicand() {
        assert!(QuadraticSurd::new(BigRational::zero(), BigRational::zero(), 0.into()).is_err());
    }
}
