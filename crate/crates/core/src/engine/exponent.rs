use std::collections::BTreeMap;

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, StudentsT};

use super::BenchRecord;
use crate::error::{Error, Result};

/// Least-squares fit of log(mean rainbow size) against log(N).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    pub std_err: f64,
    /// 95% confidence interval for the slope (Student t, n − 2 dof).
    pub ci_low: f64,
    pub ci_high: f64,
    /// `(N, mean size)` per grid point.
    pub points: Vec<(u64, f64)>,
}

pub fn estimate_exponent(records: &[BenchRecord]) -> Result<ExponentFit> {
    let mut by_n: BTreeMap<u64, Vec<f64>> = BTreeMap::new();
    for r in records {
        by_n.entry(r.n).or_default().push(r.rainbow_size as f64);
    }
    if by_n.len() < 4 {
        return Err(Error::Parameter(format!(
            "need at least 4 distinct N values, got {}",
            by_n.len()
        )));
    }
    if let Some((n, sizes)) = by_n.iter().find(|(_, s)| s.len() < 3) {
        return Err(Error::Parameter(format!(
            "need at least 3 trials per N, N = {n} has {}",
            sizes.len()
        )));
    }

    let points: Vec<(u64, f64)> = by_n
        .iter()
        .map(|(&n, sizes)| (n, sizes.iter().sum::<f64>() / sizes.len() as f64))
        .collect();
    if points.iter().any(|&(_, m)| m <= 0.0) {
        return Err(Error::Parameter("mean rainbow size must be positive".into()));
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, m)| m.ln()).collect();
    let len = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / len;
    let my = ys.iter().sum::<f64>() / len;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ssr: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let dof = len - 2.0;
    let std_err = (ssr / dof / sxx).sqrt();
    let t = StudentsT::new(0.0, 1.0, dof)
        .map_err(|e| Error::Invariant(e.to_string()))?
        .inverse_cdf(0.975);
    Ok(ExponentFit {
        slope,
        intercept,
        std_err,
        ci_low: slope - t * std_err,
        ci_high: slope + t * std_err,
        points,
    })
}
