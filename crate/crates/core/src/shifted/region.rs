//! Positive-definiteness certificates from the shifted Gershgorin bound.

use rayon::prelude::*;

use super::gershgorin::{deltas, lower_lines, shifted_gersh_lower};
use crate::classic::gershgorin_bounds;
use crate::eigen::eigen_oracle;
use crate::io::format_number;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    /// Shifted lower bound strictly positive.
    PositiveDefinite,
    /// Shifted lower bound exactly zero.
    PositiveSemidefinite,
    NotCertified,
}

/// Whether the shifted Gershgorin lower bound is nonnegative.
pub fn pd_certify(a: &SymmetricMatrix) -> bool {
    shifted_gersh_lower(a).value >= 0.0
}

pub fn certify_definiteness(a: &SymmetricMatrix) -> Definiteness {
    let v = shifted_gersh_lower(a).value;
    if v > 0.0 {
        Definiteness::PositiveDefinite
    } else if v == 0.0 {
        Definiteness::PositiveSemidefinite
    } else {
        Definiteness::NotCertified
    }
}

/// Shifts `x >= 0` at which every row of `A - x·1` is strictly dominant.
/// The right end is always open; the left end is closed only at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdWindow {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
}

impl PdWindow {
    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        above && x < self.hi
    }
}

pub fn pd_window(a: &SymmetricMatrix) -> Option<PdWindow> {
    let mut w = PdWindow {
        lo: 0.0,
        hi: f64::INFINITY,
        lo_closed: true,
    };
    for l in lower_lines(a).lines() {
        if l.slope > 0.0 {
            // x > -s / r
            let t = -l.intercept / l.slope;
            if t > w.lo || (t == w.lo && w.lo_closed) {
                w.lo = t;
                w.lo_closed = false;
            }
        } else if l.slope < 0.0 {
            w.hi = w.hi.min(l.intercept / -l.slope);
        } else if l.intercept <= 0.0 {
            return None;
        }
    }
    (w.lo < w.hi).then_some(w)
}

/// `coeffs · (y, z) >= offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub coeffs: [f64; 2],
    pub offset: f64,
}

impl HalfPlane {
    pub fn value(&self, p: [f64; 2]) -> f64 {
        self.coeffs[0] * p[0] + self.coeffs[1] * p[1] - self.offset
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        self.value(p) >= 0.0
    }

    // Divide by the smallest nonzero coefficient magnitude.
    fn normalized(self) -> Self {
        let m = self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .filter(|&c| c > 0.0)
            .fold(f64::INFINITY, f64::min);
        if !m.is_finite() {
            return self;
        }
        Self {
            coeffs: [self.coeffs[0] / m, self.coeffs[1] / m],
            offset: self.offset / m,
        }
    }
}

impl std::fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = Vec::new();
        for (c, name) in self.coeffs.iter().zip(["y", "z"]) {
            match *c {
                0.0 => {}
                1.0 => terms.push(name.to_string()),
                c => terms.push(format!("{}{name}", format_number(c))),
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} >= {}", terms.join(" + "), format_number(self.offset))
    }
}

/// Intersection of half-planes in the two free diagonal entries.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfPlaneRegion {
    pub inequalities: Vec<HalfPlane>,
}

impl HalfPlaneRegion {
    pub fn contains(&self, y: f64, z: f64) -> bool {
        self.inequalities.iter().all(|h| h.contains([y, z]))
    }

    pub fn is_empty_set(&self) -> bool {
        self.inequalities
            .iter()
            .any(|h| h.coeffs == [0.0, 0.0] && h.offset > 0.0)
    }
}

// A row of the parametrized matrix: its diagonal is coef · (y, z) + constant.
struct AffineRow {
    coef: [f64; 2],
    constant: f64,
    sorted_off: Vec<f64>,
}

/// Half-planes in `(y, z)` describing where the shifted Gershgorin bound of
/// `[[y, a, b], [a, z, c], [b, c, d]]` is nonnegative.
///
/// A shift `x >= 0` with `min_k (r_k x + s_k) >= 0` exists iff `s_l >= 0` for
/// every line of nonpositive slope and `|r_l| s_k + r_k s_l >= 0` for every
/// positive-slope `k` and negative-slope `l`. Each `s_k` is a minimum over
/// rows, so each condition splits into one inequality per row choice.
pub fn region_halfplanes_3x3(offdiag: (f64, f64, f64), d: f64) -> HalfPlaneRegion {
    let (a, b, c) = offdiag;
    let sorted = |mut v: Vec<f64>| {
        v.sort_by(f64::total_cmp);
        v
    };
    let rows = [
        AffineRow {
            coef: [1.0, 0.0],
            constant: 0.0,
            sorted_off: sorted(vec![a, b]),
        },
        AffineRow {
            coef: [0.0, 1.0],
            constant: 0.0,
            sorted_off: sorted(vec![a, c]),
        },
        AffineRow {
            coef: [0.0, 0.0],
            constant: d,
            sorted_off: sorted(vec![b, c]),
        },
    ];
    region_from_rows(&rows)
}

fn region_from_rows(rows: &[AffineRow]) -> HalfPlaneRegion {
    let n = rows.len();
    // s_{i,k} - coef_i · (y, z)
    let consts: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| deltas(&r.sorted_off).into_iter().map(|dl| r.constant + dl).collect())
        .collect();
    let slope = |k: usize| n as f64 - 2.0 * (k as f64 + 1.0);

    let mut raw = Vec::new();
    for l in (0..n).filter(|&l| slope(l) <= 0.0) {
        for (i, row) in rows.iter().enumerate() {
            raw.push(HalfPlane {
                coeffs: row.coef,
                offset: -consts[i][l],
            });
        }
    }
    for k in (0..n).filter(|&k| slope(k) > 0.0) {
        for l in (0..n).filter(|&l| slope(l) < 0.0) {
            let (wk, wl) = (-slope(l), slope(k));
            for (i, ri) in rows.iter().enumerate() {
                for (j, rj) in rows.iter().enumerate() {
                    raw.push(HalfPlane {
                        coeffs: [wk * ri.coef[0] + wl * rj.coef[0], wk * ri.coef[1] + wl * rj.coef[1]],
                        offset: -(wk * consts[i][k] + wl * consts[j][l]),
                    });
                }
            }
        }
    }
    prune(raw)
}

fn prune(raw: Vec<HalfPlane>) -> HalfPlaneRegion {
    let mut kept: Vec<HalfPlane> = Vec::new();
    for h in raw.into_iter().map(HalfPlane::normalized) {
        if h.coeffs == [0.0, 0.0] {
            if h.offset > 0.0 {
                return HalfPlaneRegion { inequalities: vec![h] };
            }
            continue;
        }
        let duplicate = kept.iter().any(|k| {
            k.coeffs == h.coeffs && (k.offset - h.offset).abs() <= 1e-12 * (1.0 + h.offset.abs())
        });
        if !duplicate {
            kept.push(h);
        }
    }

    let mut i = 0;
    while i < kept.len() {
        let others: Vec<HalfPlane> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| *h)
            .collect();
        if is_redundant(&kept[i], &others) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }

    kept.sort_by(|p, q| {
        let nz = |h: &HalfPlane| h.coeffs.iter().filter(|&&c| c != 0.0).count();
        nz(p)
            .cmp(&nz(q))
            .then(q.coeffs[0].total_cmp(&p.coeffs[0]))
            .then(p.coeffs[1].total_cmp(&q.coeffs[1]))
            .then(p.offset.total_cmp(&q.offset))
    });
    HalfPlaneRegion { inequalities: kept }
}

// `h` can be dropped iff no point of its boundary line lies strictly inside
// every other half-plane. All coefficients are nonnegative, so the others
// cut out an upward-closed set that must cross h's boundary; sampling the
// line between consecutive crossings with the other boundaries is exact.
fn is_redundant(h: &HalfPlane, others: &[HalfPlane]) -> bool {
    let c = h.coeffs;
    let norm2 = c[0] * c[0] + c[1] * c[1];
    let p0 = [c[0] * h.offset / norm2, c[1] * h.offset / norm2];
    let dir = [-c[1], c[0]];
    let at = |t: f64| [p0[0] + t * dir[0], p0[1] + t * dir[1]];

    let mut ts: Vec<f64> = others
        .iter()
        .filter_map(|g| {
            let slope = g.coeffs[0] * dir[0] + g.coeffs[1] * dir[1];
            (slope != 0.0).then(|| -g.value(p0) / slope)
        })
        .collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();

    let mut samples = Vec::new();
    match (ts.first(), ts.last()) {
        (Some(&first), Some(&last)) => {
            samples.push(first - 1.0 - first.abs());
            samples.push(last + 1.0 + last.abs());
            samples.extend(ts.windows(2).map(|w| 0.5 * (w[0] + w[1])));
        }
        _ => samples.push(0.0),
    }

    !samples.iter().any(|&t| {
        let p = at(t);
        others
            .iter()
            .all(|g| g.value(p) > 1e-9 * (1.0 + g.offset.abs()))
    })
}

/// Sampling grid for [`region_raster`]: `steps` points per axis, endpoints
/// included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub y: (f64, f64),
    pub z: (f64, f64),
    pub steps: usize,
}

impl Grid {
    pub fn square(lo: f64, hi: f64, steps: usize) -> Self {
        Self {
            y: (lo, hi),
            z: (lo, hi),
            steps,
        }
    }

    fn axis(range: (f64, f64), steps: usize, k: usize) -> f64 {
        if steps <= 1 {
            range.0
        } else {
            range.0 + (range.1 - range.0) * k as f64 / (steps - 1) as f64
        }
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.steps * self.steps);
        for a in 0..self.steps {
            for b in 0..self.steps {
                out.push((Self::axis(self.y, self.steps, a), Self::axis(self.z, self.steps, b)));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RasterPoint {
    pub y: f64,
    pub z: f64,
    pub shifted_value: f64,
    pub member_shifted: bool,
    /// Every row diagonally dominant without shifting.
    pub member_box: bool,
    /// Smallest eigenvalue nonnegative (to within `1e-9`).
    pub member_exact: bool,
}

const EXACT_TOLERANCE: f64 = 1e-9;

/// Membership grids over the two free diagonal entries `free = (i, j)`.
///
/// `offdiag` lists the strict upper triangle row by row; `fixed_diag` gives
/// the remaining diagonal entries in index order.
pub fn region_raster(
    offdiag: &[f64],
    free: (usize, usize),
    fixed_diag: &[f64],
    grid: Grid,
) -> Result<Vec<RasterPoint>> {
    let n = fixed_diag.len() + 2;
    if offdiag.len() != n * (n - 1) / 2 {
        return Err(Error::DimensionMismatch {
            expected: n * (n - 1) / 2,
            got: offdiag.len(),
        });
    }
    let (fi, fj) = free;
    for idx in [fi, fj] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    if fi == fj {
        return Err(Error::InvalidArgument("free entries must differ".into()));
    }
    let g = [grid.y.0, grid.y.1, grid.z.0, grid.z.1];
    if g.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidArgument("grid range is not finite".into()));
    }

    let mut upper = vec![vec![0.0; n]; n];
    let mut it = offdiag.iter();
    for (i, row) in upper.iter_mut().enumerate() {
        for v in row.iter_mut().skip(i + 1) {
            *v = *it.next().expect("length checked");
        }
    }
    let mut diag = vec![0.0; n];
    let mut fixed = fixed_diag.iter();
    for (k, v) in diag.iter_mut().enumerate() {
        if k != fi && k != fj {
            *v = *fixed.next().expect("length checked");
        }
    }

    grid.points()
        .into_par_iter()
        .map(|(y, z)| {
            let mut d = diag.clone();
            d[fi] = y;
            d[fj] = z;
            let m = SymmetricMatrix::from_upper_fn(n, |i, j| if i == j { d[i] } else { upper[i][j] })?;
            let s = shifted_gersh_lower(&m).value;
            Ok(RasterPoint {
                y,
                z,
                shifted_value: s,
                member_shifted: s >= 0.0,
                member_box: gershgorin_bounds(&m).lower >= 0.0,
                member_exact: eigen_oracle(&m)?.min() >= -EXACT_TOLERANCE,
            })
        })
        .collect()
}

/// CSV with header `y,z,member_shifted,member_box,member_exact`, flags as 0/1.
pub fn raster_csv(points: &[RasterPoint]) -> String {
    let mut s = String::from("y,z,member_shifted,member_box,member_exact\n");
    for p in points {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            format_number(p.y),
            format_number(p.z),
            p.member_shifted as u8,
            p.member_box as u8,
            p.member_exact as u8
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aneg() -> SymmetricMatrix {
        SymmetricMatrix::from_rows(&[[6.0, 1.0, 3.0], [1.0, 7.0, 4.0], [3.0, 4.0, 5.0]]).unwrap()
    }

    fn hp(y: f64, z: f64, o: f64) -> HalfPlane {
        HalfPlane {
            coeffs: [y, z],
            offset: o,
        }
    }

    #[test]
    fn window_for_worked_example() {
        let w = pd_window(&aneg()).unwrap();
        assert_eq!(w.lo, 2.0);
        assert!(!w.lo_closed);
        assert!((w.hi - 10.0 / 3.0).abs() < 1e-12);
        assert!(w.contains(3.0) && !w.contains(2.0));
    }

    #[test]
    fn window_contains_optimal_shift() {
        let a = SymmetricMatrix::from_rows(&[[6.0, 5.0, 5.0], [5.0, 6.0, 5.0], [5.0, 5.0, 6.0]])
            .unwrap();
        assert!(pd_window(&a).unwrap().contains(5.0));
        assert_eq!(certify_definiteness(&a), Definiteness::PositiveDefinite);
        assert!(pd_certify(&a));
    }

    #[test]
    fn window_edge_cases() {
        let d = SymmetricMatrix::from_diagonal(&[-1.0, 1.0]).unwrap();
        assert_eq!(pd_window(&d), None);
        assert!(!pd_certify(&d));
        let id = SymmetricMatrix::identity(3).unwrap();
        let w = pd_window(&id).unwrap();
        assert!(w.lo_closed && w.contains(0.0));
        let z = SymmetricMatrix::zeros(2).unwrap();
        assert_eq!(certify_definiteness(&z), Definiteness::PositiveSemidefinite);
        assert_eq!(pd_window(&z), None);
    }

    #[test]
    fn worked_region() {
        let r = region_halfplanes_3x3((2.0, 1.0, 2.0), 4.0);
        assert_eq!(
            r.inequalities,
            vec![hp(1.0, 0.0, 2.0), hp(0.0, 1.0, 2.0), hp(1.0, 1.0, 5.0)]
        );
        assert_eq!(r.inequalities[2].to_string(), "y + z >= 5");
    }

    #[test]
    fn diagonal_region() {
        let r = region_halfplanes_3x3((0.0, 0.0, 0.0), 3.0);
        assert_eq!(r.inequalities, vec![hp(1.0, 0.0, 0.0), hp(0.0, 1.0, 0.0)]);
    }

    #[test]
    fn infeasible_region() {
        // third row can never be dominant with d = -1
        let r = region_halfplanes_3x3((1.0, 1.0, 1.0), -1.0);
        assert!(r.is_empty_set());
        assert!(!r.contains(100.0, 100.0));
    }

    #[test]
    fn coefficients_are_nonnegative() {
        for off in [(2.0, 0.0, 2.0), (-1.0, 3.0, 0.5), (4.0, 4.0, -2.0)] {
            let r = region_halfplanes_3x3(off, 5.0);
            for h in &r.inequalities {
                assert!(h.coeffs.iter().all(|&c| c >= 0.0), "{h:?}");
            }
        }
    }

    #[test]
    fn raster_worked_point() {
        let pts = region_raster(&[2.0, 1.0, 2.0], (0, 1), &[4.0], Grid::square(3.0, 3.0, 1)).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].member_shifted);
        assert!((pts[0].shifted_value - 0.5).abs() < 1e-12);
        let pts = region_raster(&[2.0, 1.0, 2.0], (0, 1), &[4.0], Grid {
            y: (2.0 - 1e-9, 2.0 - 1e-9),
            z: (3.0, 3.0),
            steps: 1,
        })
        .unwrap();
        assert!(!pts[0].member_shifted);
    }

    #[test]
    fn raster_validation() {
        assert!(region_raster(&[1.0], (0, 1), &[4.0], Grid::square(0.0, 1.0, 2)).is_err());
        assert!(region_raster(&[1.0, 1.0, 1.0], (0, 0), &[4.0], Grid::square(0.0, 1.0, 2)).is_err());
        assert!(region_raster(&[1.0, 1.0, 1.0], (0, 3), &[4.0], Grid::square(0.0, 1.0, 2)).is_err());
    }

    #[test]
    fn raster_csv_layout() {
        let pts = region_raster(&[2.0, 1.0, 2.0], (0, 1), &[4.0], Grid::square(0.0, 8.0, 3)).unwrap();
        let csv = raster_csv(&pts);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("y,z,member_shifted,member_box,member_exact"));
        assert_eq!(lines.count(), 9);
        assert_eq!((pts[1].y, pts[1].z), (0.0, 4.0));
    }
}
