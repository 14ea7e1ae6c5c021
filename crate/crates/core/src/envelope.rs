//! Pointwise extrema of finitely many lines, and their exact optimization.
//!
//! A lower envelope `g(x) = min_k (slope_k x + intercept_k)` is concave, so
//! its supremum over `x >= 0` is attained either at `x = 0` or where a line
//! of nonnegative slope crosses a line of nonpositive slope. Enumerating
//! those crossings is exact and needs `O(m²)` work for `m` lines.

use crate::classic::Witness;
use crate::error::{Error, Result};

/// Tolerance for treating two envelope values as equal.
pub const EQUALITY_TOLERANCE: f64 = 1e-9;

/// One affine piece `slope · x + intercept`, tagged with the row (or pair of
/// rows) whose bound it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub slope: f64,
    pub intercept: f64,
    pub source: Witness,
}

impl Line {
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    /// `min_k (slope_k x + intercept_k)`, maximized over `x >= 0`.
    Lower,
    /// `max_k (slope_k x + intercept_k)`, minimized over `x <= 0`.
    Upper,
}

/// A nonempty set of lines whose pointwise min (or max) is bounded in the
/// direction it is optimized.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearEnvelope {
    lines: Vec<Line>,
    sense: Sense,
}

/// The optimum of an envelope.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedBound {
    pub value: f64,
    /// Smallest optimal shift for a lower envelope (`>= 0`); largest for an
    /// upper envelope (`<= 0`), i.e. the one closest to zero.
    pub x_star: f64,
    /// Indices of the lines attaining the optimum at `x_star`.
    pub active: Vec<usize>,
    /// Envelope value at `x = 0`.
    pub unshifted: f64,
    /// Whether shifting strictly improves on `unshifted`, decided by the
    /// one-sided derivative of the envelope at zero.
    pub improved: bool,
}

impl LinearEnvelope {
    pub fn new(lines: Vec<Line>, sense: Sense) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::InvalidArgument("envelope has no lines".into()));
        }
        if lines.iter().any(|l| !l.slope.is_finite() || !l.intercept.is_finite()) {
            return Err(Error::InvalidArgument("envelope line is not finite".into()));
        }
        // min over x >= 0 and max over x <= 0 both stay bounded exactly when
        // some line has nonpositive slope
        if !lines.iter().any(|l| l.slope <= 0.0) {
            return Err(Error::InvalidArgument(
                "envelope is unbounded in its optimization direction".into(),
            ));
        }
        Ok(Self { lines, sense })
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// Pointwise min (lower) or max (upper) at `x`.
    pub fn eval(&self, x: f64) -> f64 {
        let values = self.lines.iter().map(|l| l.eval(x));
        match self.sense {
            Sense::Lower => values.fold(f64::INFINITY, f64::min),
            Sense::Upper => values.fold(f64::NEG_INFINITY, f64::max),
        }
    }

    /// Indices of lines within [`EQUALITY_TOLERANCE`] of the envelope at `x`.
    pub fn active_at(&self, x: f64) -> Vec<usize> {
        let v = self.eval(x);
        (0..self.lines.len())
            .filter(|&k| (self.lines[k].eval(x) - v).abs() <= EQUALITY_TOLERANCE)
            .collect()
    }

    /// Flips an upper envelope on `x <= 0` into a lower one on `x >= 0`:
    /// `max_k (S x + T)` at `x = -t` equals `-min_k (S t - T)`.
    fn mirrored(&self) -> Self {
        let sense = match self.sense {
            Sense::Lower => Sense::Upper,
            Sense::Upper => Sense::Lower,
        };
        let lines = self
            .lines
            .iter()
            .map(|l| Line {
                slope: l.slope,
                intercept: -l.intercept,
                source: l.source,
            })
            .collect();
        Self { lines, sense }
    }

    /// Whether the envelope improves when moving off zero in its admissible
    /// direction: the right derivative at 0 (lower) is positive, or the left
    /// derivative at 0 (upper) is positive.
    pub fn improves_at_zero(&self) -> bool {
        // Right derivative of a min at 0 is its smallest active slope. For a
        // max moving left, the value drops iff every active slope is positive.
        // Both reduce to the same test.
        self.active_at(0.0)
            .into_iter()
            .map(|k| self.lines[k].slope)
            .fold(f64::INFINITY, f64::min)
            > 0.0
    }

    /// Exact optimum: `sup_{x>=0}` for a lower envelope, `inf_{x<=0}` for an
    /// upper one.
    pub fn optimize(&self) -> ShiftedBound {
        match self.sense {
            Sense::Lower => self.sup_nonnegative(),
            Sense::Upper => {
                let m = self.mirrored().sup_nonnegative();
                ShiftedBound {
                    value: -m.value,
                    x_star: if m.x_star == 0.0 { 0.0 } else { -m.x_star },
                    active: m.active,
                    unshifted: -m.unshifted,
                    improved: m.improved,
                }
            }
        }
    }

    fn sup_nonnegative(&self) -> ShiftedBound {
        let mut candidates = vec![0.0];
        for la in self.lines.iter().filter(|l| l.slope >= 0.0) {
            for lb in self.lines.iter().filter(|l| l.slope <= 0.0) {
                if lb.slope >= la.slope {
                    continue;
                }
                let x = (lb.intercept - la.intercept) / (la.slope - lb.slope);
                if x > 0.0 {
                    candidates.push(x);
                }
            }
        }
        candidates.sort_by(f64::total_cmp);

        let values: Vec<f64> = candidates.iter().map(|&x| self.eval(x)).collect();
        let best_v = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let best_x = candidates
            .iter()
            .zip(&values)
            .find(|&(_, &v)| v >= best_v - EQUALITY_TOLERANCE)
            .map(|(&x, _)| x)
            .unwrap_or(0.0);
        let unshifted = self.eval(0.0);
        ShiftedBound {
            value: best_v,
            x_star: best_x,
            active: self.active_at(best_x),
            unshifted,
            improved: self.improves_at_zero(),
        }
    }
}
