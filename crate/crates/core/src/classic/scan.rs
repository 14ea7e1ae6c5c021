//! Locating the extreme real points of a bounded region given only a
//! membership predicate.
//!
//! The window starts at a caller-supplied interval (the Gershgorin interval
//! for the spectral regions). While the predicate holds at the outer edge,
//! the window width is doubled outward. The window is then marched in
//! `width / 1024` steps, together with any hint points that fall inside it,
//! to bracket the outermost transition, and the bracket is bisected to
//! [`BISECTION_TOLERANCE`]. The returned point always satisfies the
//! predicate.

use crate::error::{Error, Result};

pub const MARCH_STEPS: usize = 1024;
pub const BISECTION_TOLERANCE: f64 = 1e-9;
const MAX_DOUBLINGS: usize = 64;

/// Smallest point of `{z : pred(z)}` seen by the scan.
pub fn leftmost(pred: impl Fn(f64) -> bool, window: (f64, f64), hints: &[f64]) -> Result<f64> {
    let (mut lo, mut hi) = window;
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "scan window ({lo}, {hi}) is not a finite interval"
        )));
    }
    let mut hints = hints.to_vec();
    hints.extend([lo, hi]);
    if hi == lo {
        let w = lo.abs().max(1.0);
        lo -= w;
        hi += w;
    }

    let mut doublings = 0;
    while pred(lo) {
        lo = hi - 2.0 * (hi - lo);
        doublings += 1;
        if doublings > MAX_DOUBLINGS {
            return Err(Error::NoConvergence { sweeps: doublings });
        }
    }

    let mut widenings = 0;
    loop {
        if let Some((outside, inside)) = bracket(&pred, lo, hi, &hints) {
            return Ok(bisect(&pred, outside, inside));
        }
        // nothing found yet; the region lies further right
        let w = hi - lo;
        hi += w;
        widenings += 1;
        if widenings > MAX_DOUBLINGS {
            return Err(Error::NoConvergence { sweeps: widenings });
        }
    }
}

/// Largest point of `{z : pred(z)}` seen by the scan.
pub fn rightmost(pred: impl Fn(f64) -> bool, window: (f64, f64), hints: &[f64]) -> Result<f64> {
    let mirrored: Vec<f64> = hints.iter().map(|h| -h).collect();
    leftmost(|z| pred(-z), (-window.1, -window.0), &mirrored).map(|z| -z)
}

// First marched point where pred holds, with the preceding (failing) point.
fn bracket(pred: &impl Fn(f64) -> bool, lo: f64, hi: f64, hints: &[f64]) -> Option<(f64, f64)> {
    let step = (hi - lo) / MARCH_STEPS as f64;
    let mut points: Vec<f64> = (0..=MARCH_STEPS).map(|k| lo + k as f64 * step).collect();
    points.extend(hints.iter().copied().filter(|&h| h > lo && h < hi));
    points.sort_by(f64::total_cmp);
    points.dedup();

    let mut prev = points[0];
    for &p in &points[1..] {
        if pred(p) {
            return Some((prev, p));
        }
        prev = p;
    }
    None
}

fn bisect(pred: &impl Fn(f64) -> bool, mut outside: f64, mut inside: f64) -> f64 {
    while (inside - outside).abs() > BISECTION_TOLERANCE {
        let mid = 0.5 * (inside + outside);
        if mid == inside || mid == outside {
            break;
        }
        if pred(mid) {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_edges() {
        let pred = |z: f64| (-2.5..=3.25).contains(&z);
        let lo = leftmost(pred, (-10.0, 10.0), &[]).unwrap();
        let hi = rightmost(pred, (-10.0, 10.0), &[]).unwrap();
        assert!(pred(lo) && pred(hi));
        assert!((lo + 2.5).abs() <= BISECTION_TOLERANCE);
        assert!((hi - 3.25).abs() <= BISECTION_TOLERANCE);
    }

    #[test]
    fn window_grows_when_region_pokes_out() {
        let pred = |z: f64| (-100.0..=1.0).contains(&z);
        let lo = leftmost(pred, (0.0, 1.0), &[]).unwrap();
        assert!((lo + 100.0).abs() <= BISECTION_TOLERANCE);
    }

    #[test]
    fn isolated_points_are_found_through_hints() {
        let pred = |z: f64| z == 1.0 || z == 2.0 || z == 3.0;
        let lo = leftmost(pred, (1.0, 3.0), &[1.0, 2.0, 3.0]).unwrap();
        let hi = rightmost(pred, (1.0, 3.0), &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!((lo, hi), (1.0, 3.0));
    }

    #[test]
    fn degenerate_window() {
        let pred = |z: f64| z == 5.0;
        assert_eq!(leftmost(pred, (5.0, 5.0), &[5.0]).unwrap(), 5.0);
        assert_eq!(rightmost(pred, (5.0, 5.0), &[5.0]).unwrap(), 5.0);
    }

    #[test]
    fn rejects_bad_window() {
        assert!(leftmost(|_| true, (1.0, 0.0), &[]).is_err());
        assert!(leftmost(|_| true, (f64::NAN, 0.0), &[]).is_err());
    }
}
