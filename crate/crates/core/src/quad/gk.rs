//! 21-point Gauss-Kronrod panel rule and the bisection driver.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::C64;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_685_130_695,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

pub const POINTS_PER_PANEL: usize = 21;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Panel {
    pub lo: f64,
    pub hi: f64,
    pub value: C64,
    pub error: f64,
}

fn finite(v: C64) -> bool {
    v.re.is_finite() && v.im.is_finite()
}

/// One panel: Kronrod value and a QUADPACK-style error estimate.
pub(crate) fn panel<F: Fn(f64) -> C64>(f: &F, lo: f64, hi: f64) -> Result<Panel> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut fv = [C64::new(0.0, 0.0); 21];
    let fc = f(center);
    if !finite(fc) {
        return Err(Error::NonFiniteSample { at: center });
    }
    fv[20] = fc;
    let mut kron = fc * WGK[10];
    let mut gauss = C64::new(0.0, 0.0);
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        if !finite(f1) {
            return Err(Error::NonFiniteSample { at: center - dx });
        }
        if !finite(f2) {
            return Err(Error::NonFiniteSample { at: center + dx });
        }
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        kron += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = kron * 0.5;
    let mut asc = WGK[10] * (fc - mean).norm();
    let mut abs = WGK[10] * fc.norm();
    for j in 0..10 {
        asc += WGK[j] * ((fv[2 * j] - mean).norm() + (fv[2 * j + 1] - mean).norm());
        abs += WGK[j] * (fv[2 * j].norm() + fv[2 * j + 1].norm());
    }
    let h = half.abs();
    let value = kron * half;
    let mut err = ((kron - gauss) * half).norm();
    let asc = asc * h;
    let abs = abs * h;
    if asc != 0.0 && err != 0.0 {
        let s = libm::pow(200.0 * err / asc, 1.5);
        err = if s < 1.0 { asc * s } else { asc };
    }
    let floor = 50.0 * f64::EPSILON * abs;
    if floor > err {
        err = floor;
    }
    Ok(Panel { lo, hi, value, error: err })
}

pub(crate) struct Adaptive {
    pub value: C64,
    pub error: f64,
    pub panels: usize,
    pub converged: bool,
}

/// Bisects the worst panel until the summed estimate meets
/// `max(abs_tol, rel_tol |I|)` or the evaluation budget is spent.
pub(crate) fn adapt<F: Fn(f64) -> C64>(
    f: &F,
    breaks: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    budget: usize,
) -> Result<Adaptive> {
    let mut panels: Vec<Panel> = Vec::with_capacity(breaks.len() * 2);
    for w in breaks.windows(2) {
        panels.push(panel(f, w[0], w[1])?);
    }
    let mut evals = panels.len() * POINTS_PER_PANEL;
    loop {
        let value: C64 = panels.iter().fold(C64::new(0.0, 0.0), |s, p| s + p.value);
        let error: f64 = panels.iter().map(|p| p.error).sum();
        let target = abs_tol.max(rel_tol * value.norm());
        if error <= target {
            return Ok(Adaptive { value, error, panels: panels.len(), converged: true });
        }
        if evals + 2 * POINTS_PER_PANEL > budget {
            return Ok(Adaptive { value, error, panels: panels.len(), converged: false });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .fold((0usize, -1.0f64), |acc, (i, p)| if p.error > acc.1 { (i, p.error) } else { acc });
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.lo + p.hi);
        if !(mid > p.lo && mid < p.hi) {
            // panel can no longer be split in floating point
            let value: C64 = panels.iter().fold(p.value, |s, q| s + q.value);
            return Ok(Adaptive { value, error, panels: panels.len() + 1, converged: false });
        }
        panels.push(panel(f, p.lo, mid)?);
        panels.push(panel(f, mid, p.hi)?);
        evals += 2 * POINTS_PER_PANEL;
        // keep summation order independent of the refinement history
        panels.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap_or(core::cmp::Ordering::Equal));
    }
}
