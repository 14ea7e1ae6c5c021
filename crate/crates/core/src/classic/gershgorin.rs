use super::{BoundReport, Method, Witness};
use crate::matrix::SymmetricMatrix;

/// `lower = min_i (a_ii - R_i)`, `upper = max_i (a_ii + R_i)`.
///
/// Witnesses are the lowest-index rows attaining each extreme.
pub fn gershgorin_bounds(a: &SymmetricMatrix) -> BoundReport {
    let radii = a.radii();
    let mut lower = (f64::INFINITY, 0);
    let mut upper = (f64::NEG_INFINITY, 0);
    for (i, r) in radii.iter().enumerate() {
        let lo = a.get(i, i) - r;
        let hi = a.get(i, i) + r;
        if lo < lower.0 {
            lower = (lo, i);
        }
        if hi > upper.0 {
            upper = (hi, i);
        }
    }
    BoundReport::unshifted(
        Method::Gershgorin,
        lower.0,
        Witness::Row(lower.1),
        upper.0,
        Witness::Row(upper.1),
    )
}
