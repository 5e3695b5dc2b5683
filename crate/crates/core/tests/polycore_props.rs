use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use spinpacket::polycore::{
    factor_rational, power_map, resultant, squarefree_part, sturm_count, IntPolynomial,
};
use spinpacket::satake::complex_roots;
use spinpacket::QuadraticSurd;

fn monic(lower: Vec<i64>) -> IntPolynomial {
    let mut c = lower;
    c.push(1);
    IntPolynomial::from_i64s(&c)
}

fn arb_monic(max_deg: usize, range: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-range..=range, 1..=max_deg).prop_map(monic)
}

fn arb_poly(max_deg: usize, range: i64) -> impl Strategy<Value = IntPolynomial> {
    (prop::collection::vec(-range..=range, 1..=max_deg), 1..=3i64).prop_map(|(mut c, lc)| {
        c.push(lc);
        IntPolynomial::from_i64s(&c)
    })
}

/// Power sums `p_1..p_n` of the roots of a monic polynomial by Newton's
/// identities.
fn power_sums(f: &IntPolynomial, n: usize) -> Vec<BigInt> {
    let d = f.degree().unwrap();
    // e_k with sign: f = T^d + c_{d-1} T^{d-1} + ..., c_{d-k} = (-1)^k e_k.
    let c = |k: usize| {
        if k <= d {
            f.coeff(d - k)
        } else {
            BigInt::zero()
        }
    };
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        // p_k + c_1 p_{k-1} + ... + c_{k-1} p_1 + k c_k = 0 (c_j = 0 for j > d).
        let mut s = BigInt::from(k) * c(k);
        for j in 1..k {
            s += c(j) * &p[k - j];
        }
        p[k] = -s;
    }
    p.remove(0);
    p
}

/// Sylvester matrix determinant by fraction-free Bareiss elimination.
fn sylvester_resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for k in 0..=m {
            row[i + k] = a.coeff(m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for k in 0..=n {
            row[i + k] = b.coeff(n - k);
        }
        rows.push(row);
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if rows[k][k].is_zero() {
            match (k + 1..size).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j]) / &prev;
                rows[i][j] = v;
            }
        }
        prev = rows[k][k].clone();
    }
    sign * &rows[size - 1][size - 1]
}

fn has_rational_root(f: &IntPolynomial) -> bool {
    let a0 = f.coeff(0);
    if a0.is_zero() {
        return true;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out
    };
    let lc = f.leading_coeff();
    for num in divisors(&a0) {
        for den in divisors(&lc) {
            for s in [num.clone(), -num.clone()] {
                // f(s/den) * den^d == 0
                let d = f.degree().unwrap();
                let v: BigInt = f
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * s.pow(i as u32) * den.pow((d - i) as u32))
                    .sum();
                if v.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn spot_irreducible(f: &IntPolynomial) -> bool {
    match f.degree().unwrap() {
        1 => true,
        2 => {
            let disc = f.coeff(1).pow(2) - BigInt::from(4) * f.coeff(0) * f.coeff(2);
            disc.is_negative() || disc.sqrt().pow(2) != disc
        }
        3 => !has_rational_root(f),
        _ => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_map_composes(g in arb_monic(4, 5), r in 1u32..=4, s in 1u32..=4) {
        let lhs = power_map(&power_map(&g, r).unwrap(), s).unwrap();
        prop_assert_eq!(lhs, power_map(&g, r * s).unwrap());
    }

    #[test]
    fn power_map_identity(g in arb_monic(6, 20)) {
        prop_assert_eq!(power_map(&g, 1).unwrap(), g);
    }

    #[test]
    fn power_map_matches_newton_sums(g in arb_monic(5, 6), r in 2u32..=4) {
        let d = g.degree().unwrap();
        let mapped = power_map(&g, r).unwrap();
        let all = power_sums(&g, d * r as usize);
        let expect: Vec<BigInt> = (1..=d).map(|k| all[k * r as usize - 1].clone()).collect();
        prop_assert_eq!(power_sums(&mapped, d), expect);
    }

    #[test]
    fn resultant_matches_sylvester(a in arb_poly(5, 9), b in arb_poly(5, 9)) {
        prop_assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b));
    }

    #[test]
    fn squarefree_of_square(p in arb_poly(6, 9)) {
        prop_assert_eq!(squarefree_part(&(&p * &p)).unwrap(), squarefree_part(&p).unwrap());
    }

    #[test]
    fn factorization_reassembles(
        parts in prop::collection::vec((arb_poly(3, 6), 1u32..=2), 1..=3)
    ) {
        let p: IntPolynomial = parts.iter().map(|(f, m)| f.pow(*m)).product();
        let factors = factor_rational(&p).unwrap();
        let back: IntPolynomial = factors.iter().map(|(f, m)| f.pow(*m)).product();
        prop_assert_eq!(back.primitive_part(), p.primitive_part());
        for (f, _) in &factors {
            prop_assert!(f.leading_coeff().is_positive());
            prop_assert!(f.content().is_one());
            prop_assert!(spot_irreducible(f), "reducible factor {}", f);
        }
        let sorted = factors.windows(2).all(|w| w[0].0.canonical_cmp(&w[1].0).is_le());
        prop_assert!(sorted);
    }
}

#[test]
fn sturm_matches_numeric_real_roots() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 200 {
        let deg = rng.gen_range(1..=10);
        let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-20..=20)).collect();
        c.push(rng.gen_range(1..=4));
        let p = squarefree_part(&IntPolynomial::from_i64s(&c)).unwrap();
        if p.degree() == Some(0) {
            continue;
        }
        let lc = p.leading_coeff().abs();
        let max = p.coeffs().iter().map(|x| x.abs()).max().unwrap();
        let bound = (max / &lc) + BigInt::from(2);
        let bound = i64::try_from(bound).unwrap();
        let exact = sturm_count(
            &p,
            &QuadraticSurd::integer(-bound),
            &QuadraticSurd::integer(bound),
        )
        .unwrap();
        let roots = complex_roots(&p, 1e-9, 1000).unwrap();
        let numeric = roots
            .iter()
            .filter(|z| z.im.abs() < 1e-9 * (1.0 + z.norm()))
            .count();
        assert_eq!(exact, numeric, "polynomial {p}");
        checked += 1;
    }
}

#[test]
fn spec_factor_examples() {
    let f = factor_rational(&IntPolynomial::from_i64s(&[9, 0, 5, 0, 1])).unwrap();
    let expected = vec![
        (IntPolynomial::from_i64s(&[3, -1, 1]), 1),
        (IntPolynomial::from_i64s(&[3, 1, 1]), 1),
    ];
    assert_eq!(f, expected);
}
