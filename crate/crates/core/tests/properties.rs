use std::f64::consts::PI;

use hypcm_core::gamma::log_gamma;
use hypcm_core::hypgamma::g;
use hypcm_core::kernels::{phase_phi, u_value};
use hypcm_core::{HyperbolicParams, C64};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = HyperbolicParams> {
    (0.5f64..2.0, 0.5f64..2.0).prop_map(|(p, m)| HyperbolicParams::new(p, m).unwrap())
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn g_reflection(p in params(), re in -3.0f64..3.0, t in -0.9f64..0.9) {
        let z = C64::new(re, t * p.a);
        prop_assert!(rel(g(&p, z) * g(&p, -z), C64::new(1.0, 0.0)) < 1e-11);
    }

    #[test]
    fn g_unimodular_on_reals(p in params(), x in -5.0f64..5.0) {
        prop_assert!((g(&p, C64::new(x, 0.0)).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn g_difference_equation(p in params(), re in -2.0f64..2.0, t in -0.4f64..0.4, plus in any::<bool>()) {
        let (ad, aod) = if plus { (p.a_plus, p.a_minus) } else { (p.a_minus, p.a_plus) };
        let z = C64::new(re, t * p.a_s);
        let lhs = g(&p, z + C64::new(0.0, ad / 2.0)) / g(&p, z - C64::new(0.0, ad / 2.0));
        let rhs = (z * PI / aod).cosh() * 2.0;
        prop_assert!(rel(lhs, rhs) < 1e-9, "{lhs} vs {rhs}");
    }

    #[test]
    fn u_reflection_and_modulus(p in params(), s in 0.05f64..0.95, x in -4.0f64..4.0) {
        let b = C64::new(s * 2.0 * p.a, 0.0);
        let z = C64::new(x, 0.0);
        let (u, um) = (u_value(&p, b, z), u_value(&p, b, -z));
        prop_assert!(rel(u * um, C64::new(1.0, 0.0)) < 1e-10);
        prop_assert!((u.norm() - 1.0).abs() < 1e-10);
        prop_assert!((phase_phi(&p, b).norm() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_recurrence(re in 0.1f64..20.0, im in -20.0f64..20.0) {
        let z = C64::new(re, im);
        let d = log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap() - z.ln();
        let k = (d.im / (2.0 * PI)).round();
        prop_assert!(d.re.abs() < 1e-11 * (1.0 + z.norm()), "{d}");
        prop_assert!((d.im - 2.0 * PI * k).abs() < 1e-11 * (1.0 + z.norm()), "{d}");
    }
}
