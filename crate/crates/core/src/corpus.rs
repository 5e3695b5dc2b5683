//! Input records and the seeded generator of Weil polynomials used for
//! batch runs and property tests.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::polycore::{BigIntRepr, IntPolynomial};
use crate::weil::{prime_power, validate, WeilError, WeilPolynomial};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub even: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin_packet_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_isotypic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_dim_quadratic: Option<usize>,
}

/// One input line: `coeffs` low-to-high with the leading 1 written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputRecord {
    pub label: String,
    pub q: u64,
    pub coeffs: Vec<BigIntRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl InputRecord {
    pub fn new(label: impl Into<String>, q: u64, poly: &IntPolynomial) -> Self {
        InputRecord {
            label: label.into(),
            q,
            coeffs: poly.coeffs().iter().cloned().map(BigIntRepr).collect(),
            expected: None,
        }
    }

    /// The polynomial as written; a trailing entry other than 1 (including
    /// a trailing zero) is rejected rather than normalized away.
    pub fn polynomial(&self) -> Result<IntPolynomial, WeilError> {
        match self.coeffs.last() {
            Some(c) if c.0.is_one() => {}
            _ => return Err(WeilError::NotMonic),
        }
        Ok(IntPolynomial::new(
            self.coeffs.iter().map(|c| c.0.clone()).collect(),
        ))
    }

    pub fn validate(&self) -> Result<WeilPolynomial, WeilError> {
        validate(&self.polynomial()?, self.q)
    }
}

/// Which shapes of product the generator may emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// Independent `T^2 - aT + q` factors.
    Generic,
    /// Factors in twist pairs `a, -a`; the result is even.
    TwistSymmetric,
    /// Generic, but with `(T^2 - q)^2` blocks when `q` is not a square.
    Boundary,
}

fn quadratic(a: i64, q: u64) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::from(q), BigInt::from(-a), BigInt::one()])
}

fn boundary_block(q: u64) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::from(-(q as i64)), 0.into(), BigInt::one()]).pow(2)
}

/// `count` Weil polynomials of degree `2g` over `F_q`, reproducible from
/// `seed`. Each is a product of quadratics `T^2 - aT + q` with `a^2 <= 4q`,
/// mixed with twist-symmetric products and `(T^2 - q)^2` blocks.
pub fn generate(q: u64, g: usize, count: usize, seed: u64) -> Result<Vec<InputRecord>, WeilError> {
    if prime_power(q).is_none() {
        return Err(WeilError::NotPrimePower(q));
    }
    if g == 0 {
        return Err(WeilError::BadDegree);
    }
    let bound = (4 * q).sqrt() as i64;
    let square = q.sqrt() * q.sqrt() == q;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let shape = match rng.gen_range(0..10) {
            0..=4 => Shape::Generic,
            5..=7 => Shape::TwistSymmetric,
            _ => Shape::Boundary,
        };
        let mut factors = Vec::new();
        let mut slots = g;
        while slots > 0 {
            let a = rng.gen_range(-bound..=bound);
            match shape {
                Shape::TwistSymmetric if slots >= 2 => {
                    factors.push(quadratic(a, q));
                    factors.push(quadratic(-a, q));
                    slots -= 2;
                }
                Shape::TwistSymmetric => {
                    factors.push(quadratic(0, q));
                    slots -= 1;
                }
                Shape::Boundary if !square && slots >= 2 && rng.gen_bool(0.5) => {
                    factors.push(boundary_block(q));
                    slots -= 2;
                }
                _ => {
                    factors.push(quadratic(a, q));
                    slots -= 1;
                }
            }
        }
        let poly: IntPolynomial = factors.into_iter().product();
        out.push(InputRecord::new(
            format!("gen-q{q}-g{g}-s{seed}-{i}"),
            q,
            &poly,
        ));
    }
    Ok(out)
}
