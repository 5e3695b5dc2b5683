use num_bigint::BigInt;
use proptest::prelude::*;

use spinpacket::corpus::generate;
use spinpacket::polycore::{power_map, squarefree_part, IntPolynomial};
use spinpacket::satake::complex_roots;
use spinpacket::weil::{
    base_change, base_change_index, even_criterion_centers, invariants, is_even, quadratic_twist,
    real_weil_transform, validate, WeilError, WeilPolynomial,
};

const QS: [u64; 7] = [2, 3, 4, 5, 7, 9, 13];

fn arb_weil() -> impl Strategy<Value = WeilPolynomial> {
    (prop::sample::select(QS.to_vec()), 1usize..=4, any::<u64>())
        .prop_map(|(q, g, seed)| generate(q, g, 1, seed).unwrap()[0].validate().unwrap())
}

/// `T^g h(T + q/T) = sum_k h_k (T^2 + q)^k T^(g-k)`, expanded directly.
fn expand_transform(h: &IntPolynomial, q: u64, g: usize) -> IntPolynomial {
    let t2q = IntPolynomial::from_i64s(&[q as i64, 0, 1]);
    (0..=g)
        .map(|k| {
            let term = &t2q.pow(k as u32) * &IntPolynomial::monomial(BigInt::from(1), g - k);
            term.scale(&h.coeff(k))
        })
        .fold(IntPolynomial::zero(), |a, b| &a + &b)
}

/// Polynomials obeying the functional equation, with random middle and
/// upper coefficients; roots may or may not sit on the circle.
fn arb_functional(q: u64) -> impl Strategy<Value = IntPolynomial> {
    (1usize..=3)
        .prop_flat_map(move |g| prop::collection::vec(-12i64..=12, g))
        .prop_map(move |upper| {
            let g = upper.len();
            let mut c = vec![BigInt::from(0); 2 * g + 1];
            c[2 * g] = BigInt::from(1);
            for (k, &a) in upper.iter().enumerate() {
                // upper[0] is a_g, upper[k] is a_{g+k}
                c[g + k] = BigInt::from(a);
            }
            for k in 1..=g {
                c[g - k] = BigInt::from(q).pow(k as u32) * &c[g + k];
            }
            IntPolynomial::new(c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn twist_is_an_involution(w in arb_weil()) {
        prop_assert_eq!(quadratic_twist(&quadratic_twist(&w)), w);
    }

    #[test]
    fn even_iff_twist_fixed(w in arb_weil()) {
        prop_assert_eq!(is_even(&w), quadratic_twist(&w).poly() == w.poly());
    }

    #[test]
    fn base_change_composes(w in arb_weil(), r in 1u32..=3, s in 1u32..=3) {
        let lhs = base_change(&base_change(&w, r).unwrap(), s).unwrap();
        prop_assert_eq!(lhs, base_change(&w, r * s).unwrap());
    }

    #[test]
    fn even_halves_center(w in arb_weil()) {
        let inv = invariants(&w).unwrap();
        if inv.is_even {
            prop_assert_eq!(inv.center_dim, 2 * inv.center_dim_quadratic);
        }
    }

    #[test]
    fn isotypic_center_criterion(w in arb_weil()) {
        match even_criterion_centers(&w) {
            Ok(b) => prop_assert_eq!(b, is_even(&w)),
            Err(e) => {
                prop_assert_eq!(e, WeilError::NotIsotypic);
                prop_assert!(!invariants(&w).unwrap().is_isotypic);
            }
        }
    }

    /// `M^(r) = rad(P^(r))^m` with `m = deg M / deg rad(P^(r)) <= r` always;
    /// `m | r` can fail (`T^2 + 3T + 9`, `q = 9`, `r = 3` has `m = 2`), and
    /// then the index reports the contradiction.
    #[test]
    fn index_identity(w in arb_weil(), r in prop::sample::select(vec![2u32, 3, 4, 6])) {
        let inv = invariants(&w).unwrap();
        if inv.is_isotypic {
            let rad = squarefree_part(base_change(&w, r).unwrap().poly()).unwrap();
            let m = (inv.center_dim / rad.degree().unwrap()) as u32;
            prop_assert_eq!(inv.center_dim % rad.degree().unwrap(), 0);
            prop_assert!(m <= r);
            prop_assert_eq!(power_map(&inv.radical, r).unwrap(), rad.pow(m));
            match base_change_index(&w, r) {
                Ok(k) => prop_assert!(k == m && r % m == 0),
                Err(WeilError::InternalContradiction(_)) => prop_assert!(r % m != 0),
                Err(e) => prop_assert!(false, "unexpected error {:?}", e),
            }
        }
    }

    #[test]
    fn transform_expands_back(w in arb_weil()) {
        let h = real_weil_transform(w.poly(), w.q()).unwrap();
        prop_assert_eq!(h.degree(), Some(w.g()));
        prop_assert_eq!(&expand_transform(&h, w.q(), w.g()), w.poly());
    }

    #[test]
    fn radical_divides(w in arb_weil()) {
        let inv = invariants(&w).unwrap();
        prop_assert!(w.poly().div_exact(&inv.radical).is_some());
        prop_assert_eq!(inv.center_dim, inv.radical.degree().unwrap());
    }

    /// The exact modulus check agrees with numeric root moduli.
    #[test]
    fn modulus_check_matches_numerics(
        (q, p) in prop::sample::select(QS.to_vec()).prop_flat_map(|q| (Just(q), arb_functional(q)))
    ) {
        let roots = complex_roots(&p, 1e-9, 1000).unwrap();
        let sq = (q as f64).sqrt();
        let on_circle = roots.iter().all(|z| (z.norm() - sq).abs() < 1e-6 * sq);
        match validate(&p, q) {
            Ok(_) => prop_assert!(on_circle, "accepted {} with roots off the circle", p),
            Err(WeilError::RootsOffWeilCircle { .. }) => {
                prop_assert!(!on_circle, "rejected {} with roots on the circle", p)
            }
            Err(e) => prop_assert!(false, "unexpected error {:?}", e),
        }
    }
}

#[test]
fn generated_and_base_changed_records_validate() {
    for q in QS {
        for g in 1..=4 {
            for rec in generate(q, g, 15, 77).unwrap() {
                let w = rec.validate().unwrap();
                for r in 1..=3 {
                    assert!(base_change(&w, r).is_ok(), "{} r={r}", rec.label);
                }
            }
        }
    }
}
