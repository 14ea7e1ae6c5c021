//! Unshifted inclusion-region bounds.
//!
//! Gershgorin and Brauer have closed forms. Melman and
//! Cvetković–Kostić–Varga regions are only available as membership
//! predicates, so their extreme real points are located by scanning
//! (see [`scan`]).

mod brauer;
mod ckv;
mod gershgorin;
mod melman;
pub mod scan;

use std::fmt;

pub use brauer::{brauer_bounds, brauer_pair_lower, brauer_pair_upper};
pub use ckv::{ckv_bounds, ckv_bounds_best_singleton, ckv_region_contains};
pub use gershgorin::gershgorin_bounds;
pub use melman::{melman_bounds, melman_region_contains};

/// Identifies which bounding method produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Gershgorin,
    Brauer,
    Melman,
    Ckv,
    ShiftedGershgorin,
    ShiftedBrauer,
    Tilde,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Gershgorin,
        Method::Brauer,
        Method::Melman,
        Method::Ckv,
        Method::ShiftedGershgorin,
        Method::ShiftedBrauer,
        Method::Tilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Gershgorin => "gershgorin",
            Method::Brauer => "brauer",
            Method::Melman => "melman",
            Method::Ckv => "ckv",
            Method::ShiftedGershgorin => "shifted-gershgorin",
            Method::ShiftedBrauer => "shifted-brauer",
            Method::Tilde => "tilde",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The row, pair of rows, or region piece that attains a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Row(usize),
    Pair(usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Row(i) => write!(f, "row {i}"),
            Witness::Pair(i, j) => write!(f, "pair ({i},{j})"),
        }
    }
}

/// Lower and upper spectral bounds from one method.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub method: Method,
    pub lower: f64,
    pub upper: f64,
    pub witness_lower: Witness,
    pub witness_upper: Witness,
    /// Shift used for the lower bound (`>= 0`, zero when unshifted).
    pub shift_lower: f64,
    /// Shift used for the upper bound (`<= 0`, zero when unshifted).
    pub shift_upper: f64,
}

impl BoundReport {
    pub(crate) fn unshifted(
        method: Method,
        lower: f64,
        witness_lower: Witness,
        upper: f64,
        witness_upper: Witness,
    ) -> Self {
        Self {
            method,
            lower,
            upper,
            witness_lower,
            witness_upper,
            shift_lower: 0.0,
            shift_upper: 0.0,
        }
    }

    /// Whether `[lower, upper]` contains `z` up to `tol`.
    pub fn contains(&self, z: f64, tol: f64) -> bool {
        self.lower - tol <= z && z <= self.upper + tol
    }
}
