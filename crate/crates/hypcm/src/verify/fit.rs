use serde::Serialize;

use hypcm_core::Error;

/// Least-squares fit of `ln|difference|` against separation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecayFit {
    /// `(separation, ln|difference|)`.
    pub points: Vec<(f64, f64)>,
    pub fitted_slope: f64,
    pub expected_rate: f64,
    /// `|slope + expected| / expected`.
    pub rel_error: f64,
}

impl DecayFit {
    /// `max(0, 1 - |slope|/expected)` for a decaying fit, 1 otherwise: how far
    /// the measured decay falls short of the expected rate.
    pub fn shortfall(&self) -> f64 {
        if self.fitted_slope >= 0.0 {
            return 1.0;
        }
        (1.0 - (-self.fitted_slope) / self.expected_rate).max(0.0)
    }
}

/// Smallest difference treated as resolved; below it the data has hit the
/// floating point floor.
pub const FLOOR: f64 = 1e-290;

pub fn fit_decay_rate(separations: &[f64], differences: &[f64], expected: f64) -> Result<DecayFit, Error> {
    if separations.len() != differences.len() {
        return Err(Error::DimensionMismatch { expected: separations.len(), got: differences.len() });
    }
    if separations.len() < 2 || separations.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("separations must be strictly increasing"));
    }
    if !(expected > 0.0) {
        return Err(Error::InvalidArgument("expected rate must be positive"));
    }
    if differences.iter().any(|&d| !(d > FLOOR) || !d.is_finite()) {
        return Err(Error::DegenerateFit);
    }
    let points: Vec<(f64, f64)> = separations.iter().zip(differences).map(|(&s, &d)| (s, d.ln())).collect();
    let n = points.len() as f64;
    let (ms, ml) = points.iter().fold((0.0, 0.0), |(a, b), (s, l)| (a + s / n, b + l / n));
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (s, l) in &points {
        sxy += (s - ms) * (l - ml);
        sxx += (s - ms) * (s - ms);
    }
    let fitted_slope = sxy / sxx;
    let rel_error = (fitted_slope + expected).abs() / expected;
    Ok(DecayFit { points, fitted_slope, expected_rate: expected, rel_error })
}
