use num_complex::Complex64;
use proptest::prelude::*;

use spinpacket::rootdata::{
    alcove_reduce, omega_fixed, omega_rho, AlcovePoint, SpinRootDatum, DEFAULT_TOL,
};

/// Uniform-ish closed-alcove points: sorted draws from `[0, 1/2]`.
fn arb_alcove(max_g: usize) -> impl Strategy<Value = AlcovePoint> {
    prop::collection::vec(0.0f64..=0.5, 1..=max_g).prop_map(|mut y| {
        y.sort_by(|a, b| b.total_cmp(a));
        AlcovePoint::new(y, DEFAULT_TOL).unwrap()
    })
}

fn close(a: &[f64], b: &[f64], eps: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < eps)
}

/// Fixed-point test through the torus: with `t_j = exp(2 pi i y_j)` and
/// trivial similitude, the multiset `{1/t_j}` equals `{-t_k}`.
fn torus_fixed(y: &[f64], eps: f64) -> bool {
    let t = |v: f64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * v);
    let lhs: Vec<Complex64> = y.iter().map(|&v| t(v).inv()).collect();
    let mut rhs: Vec<Complex64> = y.iter().map(|&v| -t(v)).collect();
    lhs.iter()
        .all(|a| match rhs.iter().position(|b| (a - b).norm() < eps) {
            Some(i) => {
                rhs.swap_remove(i);
                true
            }
            None => false,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rho_is_an_involution(pt in arb_alcove(8)) {
        let d = SpinRootDatum::build(pt.g()).unwrap();
        let once = omega_rho(&d, &pt).unwrap();
        prop_assert!(once.in_closed_alcove());
        let twice = omega_rho(&d, &once).unwrap();
        prop_assert!(close(&twice.y, &pt.y, 1e-15));
    }

    #[test]
    fn rho_reverses_kac_coordinates(pt in arb_alcove(8)) {
        let d = SpinRootDatum::build(pt.g()).unwrap();
        let mut x = pt.kac_coordinates();
        x.reverse();
        prop_assert!(close(&omega_rho(&d, &pt).unwrap().kac_coordinates(), &x, 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduce_is_idempotent(raw in prop::collection::vec(-5.0f64..5.0, 1..=8)) {
        let once = alcove_reduce(&raw, DEFAULT_TOL).unwrap();
        prop_assert!(once.in_closed_alcove());
        let twice = alcove_reduce(&once.y, DEFAULT_TOL).unwrap();
        prop_assert_eq!(once.y, twice.y);
    }

    #[test]
    fn reduce_ignores_weyl_moves(
        raw in prop::collection::vec(-5.0f64..5.0, 1..=8),
        flips in prop::collection::vec(any::<bool>(), 8),
        shifts in prop::collection::vec(-3i32..=3, 8),
        rot in 0usize..8,
    ) {
        let base = alcove_reduce(&raw, DEFAULT_TOL).unwrap();
        let mut moved: Vec<f64> = raw
            .iter()
            .enumerate()
            .map(|(i, &y)| if flips[i] { -y } else { y } + shifts[i] as f64)
            .collect();
        let n = moved.len();
        moved.rotate_left(rot % n);
        let other = alcove_reduce(&moved, DEFAULT_TOL).unwrap();
        prop_assert!(close(&base.y, &other.y, 1e-12));
    }

    /// `y_j + y_{g-j+1} = 1/2` and the torus relation `t_0/t_j = -t_{g-j+1}`
    /// describe the same fixed points. Points are built symmetric half the time.
    #[test]
    fn fixed_point_characterizations_agree(
        pt in arb_alcove(7),
        symmetrize in any::<bool>(),
    ) {
        let d = SpinRootDatum::build(pt.g()).unwrap();
        let pt = if symmetrize {
            let g = pt.g();
            let mut y = pt.y.clone();
            for j in 0..g / 2 {
                y[g - 1 - j] = 0.5 - y[j];
            }
            if g % 2 == 1 {
                y[g / 2] = 0.25;
            }
            y.sort_by(|a, b| b.total_cmp(a));
            AlcovePoint::new(y, DEFAULT_TOL).unwrap()
        } else {
            pt
        };
        let fixed = omega_fixed(&d, &pt, 1e-9);
        prop_assert_eq!(fixed, torus_fixed(&pt.y, 1e-7));
        if symmetrize {
            prop_assert!(fixed);
        }
    }
}

#[test]
fn omega_has_order_two() {
    for g in 1..=8 {
        let d = SpinRootDatum::build(g).unwrap();
        assert_eq!(d.fundamental_group_order(), 2);
        // rho is not the identity: it moves the origin to v_g.
        let origin = AlcovePoint::new(vec![0.0; g], DEFAULT_TOL).unwrap();
        let moved = omega_rho(&d, &origin).unwrap();
        assert_eq!(moved.y, vec![0.5; g]);
        assert_eq!(omega_rho(&d, &moved).unwrap(), origin);
    }
}
