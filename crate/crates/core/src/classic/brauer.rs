use super::{BoundReport, Method, Witness};
use crate::matrix::SymmetricMatrix;

// The oval |z - a||z - b| <= R_i R_j meets the real axis (on the outer
// side of both centers) at the roots of z^2 - (a+b) z + ab - R_i R_j,
// which are (a+b)/2 ± sqrt(((a-b)/2)^2 + R_i R_j).

/// Smaller root of the Brauer quadratic for a pair.
#[inline]
pub fn brauer_pair_lower(a_ii: f64, a_jj: f64, r_i: f64, r_j: f64) -> f64 {
    let half_gap = 0.5 * (a_ii - a_jj);
    0.5 * (a_ii + a_jj) - (half_gap * half_gap + r_i * r_j).sqrt()
}

/// Larger root of the Brauer quadratic for a pair.
#[inline]
pub fn brauer_pair_upper(a_ii: f64, a_jj: f64, r_i: f64, r_j: f64) -> f64 {
    let half_gap = 0.5 * (a_ii - a_jj);
    0.5 * (a_ii + a_jj) + (half_gap * half_gap + r_i * r_j).sqrt()
}

/// Extreme real points of the union of Brauer ovals of Cassini.
///
/// For `n == 1` both bounds are `a_00`.
pub fn brauer_bounds(a: &SymmetricMatrix) -> BoundReport {
    let n = a.dim();
    if n == 1 {
        let v = a.get(0, 0);
        return BoundReport::unshifted(Method::Brauer, v, Witness::Row(0), v, Witness::Row(0));
    }
    let radii = a.radii();
    let mut lower = (f64::INFINITY, (0, 1));
    let mut upper = (f64::NEG_INFINITY, (0, 1));
    for i in 0..n {
        for j in (i + 1)..n {
            let (aii, ajj) = (a.get(i, i), a.get(j, j));
            let lo = brauer_pair_lower(aii, ajj, radii[i], radii[j]);
            let hi = brauer_pair_upper(aii, ajj, radii[i], radii[j]);
            if lo < lower.0 {
                lower = (lo, (i, j));
            }
            if hi > upper.0 {
                upper = (hi, (i, j));
            }
        }
    }
    BoundReport::unshifted(
        Method::Brauer,
        lower.0,
        Witness::Pair(lower.1 .0, lower.1 .1),
        upper.0,
        Witness::Pair(upper.1 .0, upper.1 .1),
    )
}
