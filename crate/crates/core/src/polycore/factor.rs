//! Factorization over the rationals: squarefree decomposition, factoring
//! modulo a small good prime, quadratic Hensel lifting, and exhaustive
//! Zassenhaus recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{Fp, PrimeField};
use super::{squarefree_decomposition, IntPolynomial, PolyError};

/// Irreducible factors with multiplicities. Factors are primitive with
/// positive leading coefficient and sorted by (degree, coefficients); the
/// product of `factor^mult` equals the input up to a rational constant.
pub fn factor_rational(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, u32)>, PolyError> {
    if p.is_constant() {
        return Err(PolyError::Domain("cannot factor a constant polynomial"));
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        for f in factor_squarefree(&part)? {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// True iff `p` is irreducible over the rationals (one factor, multiplicity one).
pub fn is_irreducible(p: &IntPolynomial) -> Result<bool, PolyError> {
    let f = factor_rational(p)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

/// Smallest prime `>= 5` not dividing the leading coefficient and for which
/// `f mod p` stays squarefree, i.e. not dividing the discriminant.
pub fn good_prime(f: &IntPolynomial) -> u64 {
    let lc = f.leading_coeff();
    (5u64..)
        .filter(|&n| is_small_prime(n))
        .find(|&p| {
            if (&lc % BigInt::from(p)).is_zero() {
                return false;
            }
            PrimeField::new(p).is_squarefree(&PrimeField::new(p).reduce(f))
        })
        .expect("a good prime exists")
}

pub(crate) fn is_small_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn factor_squarefree(f: &IntPolynomial) -> Result<Vec<IntPolynomial>, PolyError> {
    let f = f.primitive_part();
    if f.deg() <= 1 {
        return Ok(vec![f]);
    }
    let p = good_prime(&f);
    let field = PrimeField::new(p);
    let modular = field.factor_squarefree(&field.reduce(&f));
    if modular.len() == 1 {
        return Ok(vec![f]);
    }
    let lc = f.leading_coeff();
    let bound = BigInt::from(2) * lc.abs() * mignotte_bound(&f);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut steps = 0;
    while modulus <= bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = multifactor_lift(&f, &modular, field, steps)?;
    recombine(&f, lifted, &modulus)
}

/// `2^n * ||f||_2`, rounded up: bounds the coefficients of any integer factor.
fn mignotte_bound(f: &IntPolynomial) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    (BigInt::one() << f.deg()) * (norm2.sqrt() + 1)
}

fn fp_to_int(a: &Fp) -> IntPolynomial {
    IntPolynomial::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

fn reduce_mod(a: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric_mod(a: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m >> 1;
    IntPolynomial::new(
        a.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic polynomial, reduced mod `m`.
fn div_rem_monic(
    a: &IntPolynomial,
    h: &IntPolynomial,
    m: &BigInt,
) -> (IntPolynomial, IntPolynomial) {
    let (q, r) = a.pseudo_div_rem(h).expect("monic divisor is nonzero");
    (reduce_mod(&q, m), reduce_mod(&r, m))
}

struct Lift {
    g: IntPolynomial,
    h: IntPolynomial,
    s: IntPolynomial,
    t: IntPolynomial,
}

/// One quadratic Hensel step from `m` to `m^2`. Requires `f = g h`,
/// `s g + t h = 1` mod `m`, with `h` monic, `deg s < deg h`, `deg t < deg g`.
fn hensel_step(f: &IntPolynomial, l: Lift, m: &BigInt) -> Lift {
    let m2 = m * m;
    let e = reduce_mod(&(f - &(&l.g * &l.h)), &m2);
    let (q, r) = div_rem_monic(&(&l.s * &e), &l.h, &m2);
    let g = reduce_mod(&(&(&l.g + &(&l.t * &e)) + &(&q * &l.g)), &m2);
    let h = reduce_mod(&(&l.h + &r), &m2);

    let b = reduce_mod(
        &(&(&(&l.s * &g) + &(&l.t * &h)) - &IntPolynomial::one()),
        &m2,
    );
    let (c, d) = div_rem_monic(&(&l.s * &b), &h, &m2);
    let s = reduce_mod(&(&l.s - &d), &m2);
    let t = reduce_mod(&(&(&l.t - &(&l.t * &b)) - &(&c * &g)), &m2);
    Lift { g, h, s, t }
}

/// Lifts `f = lc * prod u_i (mod p)` to monic factors mod `p^(2^steps)`,
/// peeling one factor at a time.
fn multifactor_lift(
    f: &IntPolynomial,
    modular: &[Fp],
    field: PrimeField,
    steps: u32,
) -> Result<Vec<IntPolynomial>, PolyError> {
    let p = BigInt::from(field.p);
    let mut modulus = p.clone();
    for _ in 0..steps {
        modulus = &modulus * &modulus;
    }
    let lc_mod_p = field.reduce_int(&f.leading_coeff());
    let mut current = reduce_mod(f, &modulus);
    let mut out = Vec::with_capacity(modular.len());
    for i in 0..modular.len() - 1 {
        let h0 = &modular[i];
        let g0 = modular[i + 1..]
            .iter()
            .fold(vec![lc_mod_p], |acc, u| field.poly_mul(&acc, u));
        let (one, s0, t0) = field.ext_gcd(&g0, h0);
        if one != vec![1] {
            return Err(PolyError::Internal("modular factors are not coprime"));
        }
        let mut lift = Lift {
            g: fp_to_int(&g0),
            h: fp_to_int(h0),
            s: fp_to_int(&s0),
            t: fp_to_int(&t0),
        };
        let mut m = p.clone();
        for _ in 0..steps {
            lift = hensel_step(&current, lift, &m);
            m = &m * &m;
        }
        out.push(lift.h);
        current = lift.g;
    }
    // What remains is lc * u_last; scale it monic.
    let lc = current.leading_coeff();
    let inv = mod_inverse(&lc, &modulus)
        .ok_or(PolyError::Internal("leading coefficient not invertible"))?;
    out.push(reduce_mod(&current.scale(&inv), &modulus));
    Ok(out)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Zassenhaus recombination over subsets of increasing size.
fn recombine(
    f: &IntPolynomial,
    lifted: Vec<IntPolynomial>,
    modulus: &BigInt,
) -> Result<Vec<IntPolynomial>, PolyError> {
    let mut remaining = lifted;
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let lc = rest.leading_coeff();
        for subset in combinations(remaining.len(), size) {
            let lc_poly = IntPolynomial::constant(lc.clone());
            let (chosen, others): (Vec<_>, Vec<_>) =
                (0..remaining.len()).partition(|i| subset.contains(i));
            let g = symmetric_mod(
                &chosen.iter().fold(lc_poly.clone(), |acc, &i| {
                    reduce_mod(&(&acc * &remaining[i]), modulus)
                }),
                modulus,
            );
            let h = symmetric_mod(
                &others.iter().fold(lc_poly.clone(), |acc, &i| {
                    reduce_mod(&(&acc * &remaining[i]), modulus)
                }),
                modulus,
            );
            if &g * &h == rest.scale(&lc) {
                found.push(g.primitive_part());
                rest = h.primitive_part();
                remaining = others.into_iter().map(|i| remaining[i].clone()).collect();
                continue 'outer;
            }
        }
        size += 1;
    }
    found.push(rest.primitive_part());
    Ok(found)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
