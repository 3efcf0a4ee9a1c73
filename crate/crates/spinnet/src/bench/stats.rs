use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sample::{BenchError, Formula, Sample};
use crate::asymptotics::{approx_9j_45, approx_9j_63};

/// Error statistics of one grid cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub formula: Formula,
    #[serde(rename = "J")]
    pub big_j: u32,
    pub twice_jm: u32,
    pub n_samples: usize,
    pub seed: u64,
    pub rms_dev: f64,
    pub rms_mag: f64,
    pub frac_err: f64,
    pub zero_frac: f64,
    /// rms of the exact values over the samples whose approximation is 0.
    #[serde(skip)]
    pub rms_mag_zero: Option<f64>,
}

fn approximate(formula: Formula, s: &Sample) -> Result<f64, BenchError> {
    Ok(match formula {
        Formula::Asym63 => approx_9j_63(&s.labels)?,
        Formula::Asym45 => approx_9j_45(&s.labels)?,
        Formula::Exact => s.exact,
    })
}

/// rms deviation and magnitude over all samples, zero approximations included.
pub fn error_stats(
    samples: &[Sample],
    formula: Formula,
    big_j: u32,
    twice_jm: u32,
    seed: u64,
) -> Result<BenchRecord, BenchError> {
    if samples.is_empty() {
        return Err(BenchError::EmptyCount);
    }
    let approx: Vec<f64> = samples.par_iter().map(|s| approximate(formula, s)).collect::<Result<_, _>>()?;
    let n = samples.len() as f64;
    let mut dev = 0.0;
    let mut mag = 0.0;
    let mut zero_mag = 0.0;
    let mut zeros = 0usize;
    for (s, &a) in samples.iter().zip(&approx) {
        dev += (a - s.exact).powi(2);
        mag += s.exact.powi(2);
        if a == 0.0 && s.exact != 0.0 {
            zeros += 1;
            zero_mag += s.exact.powi(2);
        }
    }
    let rms_dev = (dev / n).sqrt();
    let rms_mag = (mag / n).sqrt();
    Ok(BenchRecord {
        formula,
        big_j,
        twice_jm,
        n_samples: samples.len(),
        seed,
        rms_dev,
        rms_mag,
        frac_err: rms_dev / rms_mag,
        zero_frac: zeros as f64 / n,
        rms_mag_zero: (zeros > 0).then(|| (zero_mag / zeros as f64).sqrt()),
    })
}

/// Least-squares slope of `ln value` against `ln J`.
pub fn scaling_fit(points: &[(f64, f64)]) -> Result<f64, BenchError> {
    if points.len() < 3 {
        return Err(BenchError::TooFewPoints(points.len()));
    }
    if let Some(&(j, v)) = points.iter().find(|p| p.0.is_nan() || p.1.is_nan() || p.0 <= 0.0 || p.1 <= 0.0) {
        return Err(BenchError::NonPositive(v, j));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    Ok(sxy / sxx)
}
