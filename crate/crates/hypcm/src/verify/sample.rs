use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use hypcm_core::{HyperbolicParams, C64};

use super::registry::CheckId;
use super::Plan;
use crate::wire::{fmt_complex, fmt_real, fmt_vector};

/// A labelled data series, emitted by sweeps.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

pub(crate) struct Sample {
    pub residual: f64,
    pub point: String,
    pub failed: bool,
    pub growth: bool,
    pub series: Vec<Series>,
}

impl Sample {
    pub fn new(residual: f64, point: String) -> Self {
        if residual.is_nan() {
            return Sample::failed(format!("{point}: residual is NaN"));
        }
        Sample { residual, point, failed: false, growth: false, series: Vec::new() }
    }

    pub fn failed(point: String) -> Self {
        Sample { residual: f64::INFINITY, point, failed: true, growth: false, series: Vec::new() }
    }
}

/// Couplings tried by default, in units of `a`.
pub const B_GRID: [f64; 4] = [0.4, 0.9, 1.0, 1.3];

/// Per-sample state: the parameter pair, a private random stream and the
/// text description of the point being evaluated.
pub(crate) struct Ctx {
    pub p: HyperbolicParams,
    /// How many times the grid has been cycled before this sample.
    pub round: usize,
    rng: ChaCha8Rng,
    b_override: Option<f64>,
    desc: Vec<String>,
}

fn mix(seed: u64, id: CheckId, k: usize) -> u64 {
    // splitmix-style scrambling keeps neighbouring streams unrelated
    let mut z = seed ^ ((id as u64 + 1) << 40) ^ (k as u64);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Ctx {
    pub fn new(id: CheckId, plan: &Plan, k: usize) -> Self {
        let n = plan.grid.len().max(1);
        let p = plan.grid[k % n];
        let mut ctx = Ctx {
            p,
            round: k / n,
            rng: ChaCha8Rng::seed_from_u64(mix(plan.seed, id, k)),
            b_override: plan.b,
            desc: Vec::new(),
        };
        ctx.desc.push(format!("a=({},{})", fmt_real(p.a_plus), fmt_real(p.a_minus)));
        ctx
    }

    pub fn describe(&self) -> String {
        self.desc.join(" ")
    }

    pub fn note(&mut self, key: &str, v: &str) {
        self.desc.push(format!("{key}={v}"));
    }

    pub fn note_c(&mut self, key: &str, z: C64) {
        self.note(key, &fmt_complex(z));
    }

    pub fn note_v(&mut self, key: &str, v: &[C64]) {
        let s = format!("[{}]", fmt_vector(v));
        self.note(key, &s);
    }

    pub fn u(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn reals(&mut self, n: usize, lo: f64, hi: f64) -> Vec<C64> {
        (0..n).map(|_| C64::new(self.u(lo, hi), 0.0)).collect()
    }

    /// Like [`Ctx::reals`], with every pair at least `gap` apart; the
    /// eigenfunctions vanish on coincidences, which ruins relative residuals.
    pub fn spaced(&mut self, n: usize, lo: f64, hi: f64, gap: f64) -> Vec<C64> {
        loop {
            let v = self.reals(n, lo, hi);
            if (0..n).all(|j| (j + 1..n).all(|k| (v[j].re - v[k].re).abs() >= gap)) {
                return v;
            }
        }
    }

    /// A real coupling from the default grid below `limit`, or the override.
    pub fn b_below(&mut self, limit: f64) -> f64 {
        let b = match self.b_override {
            Some(b) => b,
            None => {
                let a = self.p.a;
                let ok: Vec<f64> = B_GRID.iter().map(|f| f * a).filter(|&b| b < limit && b < 2.0 * a).collect();
                if ok.is_empty() {
                    0.9 * limit.min(2.0 * a)
                } else {
                    ok[self.round % ok.len()]
                }
            }
        };
        self.note("b", &fmt_real(b));
        b
    }

    /// The finished description with a sample result.
    pub fn done(&self, residual: f64) -> Sample {
        Sample::new(residual, self.describe())
    }
}

pub(crate) fn rel(a: C64, b: C64) -> f64 {
    let s = a.norm().max(b.norm());
    if s == 0.0 {
        0.0
    } else {
        (a - b).norm() / s
    }
}

pub(crate) fn dispatch(id: CheckId, c: &mut Ctx) -> hypcm_core::error::Result<Sample> {
    use super::{special, three, two};
    use CheckId::*;
    match id {
        GReflection => special::g_reflection(c),
        GModulusReal => special::g_modulus_real(c),
        EAde => special::e_ade(c),
        EZeroCatalog => special::e_zero_catalog(c),
        GammaValues => special::gamma_values(c),
        FourierFormula => special::fourier_formula(c),
        HypIntegral1d => special::hyp_integral_1d(c),
        HypIntegral2d => special::hyp_integral_2d(c),
        ResidueMinusIa => special::residue_minus_ia(c),
        UProperties => special::u_properties(c),
        J2RepConsistency => two::rep_consistency(c),
        J2Duality => two::duality(c),
        J2Symmetry => two::symmetry(c),
        J2SecondDuality => two::second_duality(c),
        J2EigenAde => two::eigen_ade(c),
        P2Invariances => two::p2_invariances(c),
        P2EigenAde => two::p2_eigen_ade(c),
        E2Props => two::e2_props(c),
        E2Asymptotics => two::e2_asymptotics(c),
        E2BoundProbe => two::e2_bound_probe(c),
        E2Selfdual => two::e2_selfdual(c),
        F2Symmetries => two::f2_symmetries(c),
        J3RepConsistency => three::rep_consistency(c),
        J3Duality => three::duality(c),
        J3Symmetry => three::symmetry(c),
        J3Reflection => three::reflection(c),
        J3EigenAde => three::eigen_ade(c),
        P3Invariances => three::p3_invariances(c),
        P3EigenAde => three::p3_eigen_ade(c),
        E3Props => three::e3_props(c),
        E3Asymptotics => three::e3_asymptotics(c),
        E3BoundProbe => three::e3_bound_probe(c),
        E3SelfdualProbe => three::e3_selfdual_probe(c),
        MuIntegralEq => three::mu_integral_eq(c),
    }
}

/// Monotone growth across a whole sweep, by more than `factor` overall.
pub(crate) fn grows(values: &[f64], factor: f64) -> bool {
    values.len() >= 3
        && values.windows(2).all(|w| w[1] > w[0])
        && values[values.len() - 1] > factor * values[0]
}
