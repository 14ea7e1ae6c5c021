use super::brauer::{brauer_pair_lower, brauer_pair_upper};
use super::{gershgorin_bounds, scan, BoundReport, Method, Witness};
use crate::error::Result;
use crate::matrix::SymmetricMatrix;

// Relative slack added to every membership inequality. Enlarging the region
// keeps the extracted bounds sound; the slack lets exact boundary points
// such as 2×2 eigenvalues register as members in floating point.
const MEMBERSHIP_SLACK: f64 = 1e-12;

pub(super) fn slack(a: &SymmetricMatrix, z: f64) -> f64 {
    let mut s = z.abs().max(1.0);
    for i in 0..a.dim() {
        for &v in a.row(i) {
            s = s.max(v.abs());
        }
    }
    MEMBERSHIP_SLACK * s * s
}

fn omega_contains(a: &SymmetricMatrix, radii: &[f64], i: usize, j: usize, z: f64, eps: f64) -> bool {
    let aij = a.get(i, j).abs();
    let lhs = ((z - a.get(i, i)) * (z - a.get(j, j)) - a.get(i, j) * a.get(j, i)).abs();
    let rest_i = (radii[i] - aij).max(0.0);
    let rest_j = (radii[j] - aij).max(0.0);
    let rhs = (z - a.get(j, j)).abs() * rest_i + aij * rest_j;
    lhs <= rhs + eps
}

// Lowest row i such that z lies in every Omega_ij, j != i.
fn melman_row(a: &SymmetricMatrix, radii: &[f64], z: f64) -> Option<usize> {
    let n = a.dim();
    if n == 1 {
        return (z == a.get(0, 0)).then_some(0);
    }
    let eps = slack(a, z);
    (0..n).find(|&i| (0..n).all(|j| j == i || omega_contains(a, radii, i, j, z, eps)))
}

/// Whether `z` lies in `∪_i ∩_{j≠i} Ω_ij(A)`.
pub fn melman_region_contains(a: &SymmetricMatrix, z: f64) -> bool {
    melman_row(a, &a.radii(), z).is_some()
}

fn hints(a: &SymmetricMatrix, radii: &[f64]) -> Vec<f64> {
    let n = a.dim();
    let mut h = Vec::new();
    for i in 0..n {
        let d = a.get(i, i);
        h.extend([d, d - radii[i], d + radii[i]]);
        for j in (i + 1)..n {
            let dj = a.get(j, j);
            // eigenvalues of the 2×2 principal block and Brauer roots
            let off = a.get(i, j).abs();
            h.push(brauer_pair_lower(d, dj, off, off));
            h.push(brauer_pair_upper(d, dj, off, off));
            h.push(brauer_pair_lower(d, dj, radii[i], radii[j]));
            h.push(brauer_pair_upper(d, dj, radii[i], radii[j]));
        }
    }
    h
}

/// Extreme real points of the Melman region, located by scan and bisection.
pub fn melman_bounds(a: &SymmetricMatrix) -> Result<BoundReport> {
    let radii = a.radii();
    let g = gershgorin_bounds(a);
    let h = hints(a, &radii);
    let pred = |z: f64| melman_row(a, &radii, z).is_some();
    let lower = scan::leftmost(pred, (g.lower, g.upper), &h)?;
    let upper = scan::rightmost(pred, (g.lower, g.upper), &h)?;
    let wl = melman_row(a, &radii, lower).unwrap_or(0);
    let wu = melman_row(a, &radii, upper).unwrap_or(0);
    Ok(BoundReport::unshifted(
        Method::Melman,
        lower,
        Witness::Row(wl),
        upper,
        Witness::Row(wu),
    ))
}
