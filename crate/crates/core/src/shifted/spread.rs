//! Shifted dominance of a row whose diagonal equals its off-diagonal sum.

use crate::error::{Error, Result};

fn check_nonnegative(y: &[f64]) -> Result<()> {
    match y.iter().position(|&v| v < 0.0 || !v.is_finite()) {
        Some(index) => Err(Error::NegativeEntry {
            index,
            value: y[index],
        }),
        None => Ok(()),
    }
}

/// `sup_{x>=0} (ρ - x - Σ_k |y_k - x|)` with `ρ = Σ_k y_k`.
///
/// The objective is concave and piecewise linear with breakpoints at the
/// entries, so the maximum is attained at `0` or at some `y_k`.
pub fn spread_sup(y: &[f64]) -> Result<f64> {
    check_nonnegative(y)?;
    let rho: f64 = y.iter().sum();
    let value = |x: f64| rho - x - y.iter().map(|&v| (v - x).abs()).sum::<f64>();
    Ok(std::iter::once(0.0)
        .chain(y.iter().copied())
        .map(value)
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Worst and best `spread_sup` over vectors of length `n - 1` summing to `rho`.
pub fn spread_extremes(n: usize, rho: f64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("spread needs N >= 2, got {n}")));
    }
    if rho < 0.0 || !rho.is_finite() {
        return Err(Error::NegativeEntry { index: 0, value: rho });
    }
    Ok((0.0, rho * (n as f64 - 2.0) / (n as f64 - 1.0)))
}
