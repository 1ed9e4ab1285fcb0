use super::*;
use crate::MeroKind;

fn hp(a: f64, b: f64) -> HyperbolicParams {
    HyperbolicParams::new(a, b).unwrap()
}

fn close(a: C64, b: C64, rel: f64) -> bool {
    (a - b).norm() <= rel * b.norm().max(1e-300)
}

#[test]
fn log_e_oracle_values() {
    let cases = [
        ((1.0, 1.0), C64::new(0.5, 0.0), C64::new(0.18065887047651836219, -0.31272863678263592733)),
        ((1.0, 0.8), C64::new(0.3, -0.4), C64::new(-0.31213375403466047366, -0.3303962961169769978)),
        ((2.0, 0.5), C64::new(-1.1, 0.6), C64::new(1.6131870201084094403, 0.42480368818915603553)),
    ];
    for ((ap, am), z, want) in cases {
        let got = log_e_strip(&hp(ap, am), z).unwrap();
        assert!(close(got, want, 1e-11), "{z}: {got} vs {want}");
    }
}

#[test]
fn log_e_at_origin_and_boundary() {
    let p = hp(1.0, 1.0);
    assert_eq!(log_e_strip(&p, c(0.0)).unwrap(), c(0.0));
    assert!(log_e_strip(&p, C64::new(0.2, 1.0)).is_err());
}

#[test]
fn g_oracle_values() {
    let r2 = core::f64::consts::SQRT_2;
    let cases = [
        ((1.0, 1.0), C64::new(0.5, 0.0), C64::new(0.81069548521268043257, -0.58546804375283937617)),
        ((1.0, 0.8), C64::new(0.3, 0.2), C64::new(1.2704348820621958386, -0.43477540691289372832)),
        ((2.0, 0.5), C64::new(-2.5, -0.4), C64::new(-0.03310961050441933798, -0.027752868487106927219)),
        ((1.0, r2), C64::new(1.7, 0.9), C64::new(-25.45532653091317356, -15.725697549477417567)),
    ];
    for ((ap, am), z, want) in cases {
        let p = hp(ap, am);
        let fast = g_fast(&p, z);
        assert!(close(fast, want, 1e-12), "fast {z}: {fast} vs {want}");
        let ratio = g_mero_via_e(&p, z).unwrap().value;
        assert!(close(ratio, want, 1e-10), "ratio {z}: {ratio} vs {want}");
    }
}

#[test]
fn corr_matches_direct_route() {
    for &(ap, am) in &[(1.0, 1.0), (1.0, 0.8), (2.0, 0.5)] {
        let p = hp(ap, am);
        for &z in &[C64::new(0.8, 0.1), C64::new(1.5, -0.3), C64::new(2.5, 0.9), C64::new(-1.2, 0.4)] {
            let direct = g_fast(&p, z) * (-g_lead(&p, z)).exp() - 1.0;
            let split = g_corr(&p, z).exp() - 1.0;
            assert!((direct - split).norm() < 1e-12, "{z}: {direct} vs {split}");
        }
    }
}

#[test]
fn corr_is_exponentially_small() {
    let p = hp(1.0, 1.0);
    let c5 = g_corr(&p, c(5.0)).norm();
    let c6 = g_corr(&p, c(6.0)).norm();
    assert!(c5 < 1e-12 && c5 > 1e-16);
    let rate = libm::log(c5 / c6);
    assert!((rate - 2.0 * PI).abs() < 0.3, "{rate}");
}

#[test]
fn ladder_routes_agree() {
    for &(ap, am) in &[(1.0, 1.0), (1.0, core::f64::consts::SQRT_2), (2.0, 0.5)] {
        let p = hp(ap, am);
        for &z in &[C64::new(0.3, 1.4), C64::new(-0.7, 2.9), C64::new(1.1, 4.2)] {
            let a = e_entire_route(&p, z, LadderRoute::PlusFirst).unwrap().value;
            let b = e_entire_route(&p, z, LadderRoute::MinusFirst).unwrap().value;
            assert!(close(a, b, 1e-10), "{z}: {a} vs {b}");
        }
    }
}

#[test]
fn e_zero_kinds() {
    let p = hp(1.0, core::f64::consts::SQRT_2);
    let e = e_entire(&p, C64::new(0.0, p.a)).unwrap();
    assert_eq!(e.kind, MeroKind::Zero(1));
    assert!(e.leading.is_some());
    let p = hp(1.0, 1.0);
    let e = e_entire(&p, C64::new(0.0, 2.0)).unwrap();
    assert_eq!(e.kind, MeroKind::Zero(2));
    assert!(e.leading.is_some());
    assert_eq!(e_entire(&p, c(0.0)).unwrap().value, c(1.0));
}

#[test]
fn e_zero_leading_coefficient_matches_difference_quotient() {
    let p = hp(1.0, core::f64::consts::SQRT_2);
    let z0 = C64::new(0.0, p.a + 1.0);
    let lead = e_entire(&p, z0).unwrap().leading.unwrap();
    let t = 1e-5;
    let near = e_entire(&p, z0 + c(t)).unwrap().value / t;
    assert!(close(near, lead, 1e-4), "{near} vs {lead}");
}

#[test]
fn g_poles_and_zeros() {
    let p = hp(1.0, 1.0);
    let g0 = g_mero(&p, C64::new(0.0, -1.0)).unwrap();
    assert_eq!(g0.kind, MeroKind::Pole(1));
    let want = g_residue_minus_ia(&p);
    // G(z) ≈ lead / (z + ia), and (-z - ia) G → -lead
    assert!(close(-g0.leading.unwrap(), want, 1e-9));
    let gz = g_mero(&p, C64::new(0.0, 2.0)).unwrap();
    assert_eq!(gz.kind, MeroKind::Zero(2));
    let via_e = g_mero_via_e(&p, C64::new(0.0, -2.0)).unwrap();
    assert_eq!(via_e.kind, MeroKind::Pole(2));
    assert_eq!(g_mero(&p, c(0.0)).unwrap().value, c(1.0));
}

#[test]
fn residue_constant() {
    let p = hp(4.0, 1.0);
    assert!(close(g_residue_minus_ia(&p), c(1.0) / (PI * I), 1e-15));
    let p = hp(1.0, 1.0);
    let r1 = residue_probe(&p, 1e-2).norm();
    let r2 = residue_probe(&p, 1e-3).norm();
    assert!(r2 < 1e-2 && r2 < r1);
}

#[test]
fn modulus_on_real_line() {
    let p = hp(1.0, core::f64::consts::SQRT_2);
    for k in -30..30 {
        let z = c(0.37 * k as f64);
        assert!((g_fast(&p, z).norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn log_gamma_oracle() {
    let cases = [
        (C64::new(3.0, 4.0), C64::new(-1.7566267846037841105, 4.7426644380346579282)),
        (C64::new(-7.3, 0.2), C64::new(-8.0379725729189845863, -24.337286753302470801)),
        (C64::new(0.1, -30.0), C64::new(-47.565423555699172694, -71.406325063462139443)),
    ];
    for (z, want) in cases {
        let got = log_gamma(z).unwrap();
        assert!(close(got, want, 1e-13), "{z}: {got} vs {want}");
    }
}

