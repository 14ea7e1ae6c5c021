//! Shifted Brauer bounds.
//!
//! For each pair of rows the smaller Cassini-oval root of `A - x·1` is
//!
//! ```text
//! f_ij(A, x) = (a_ii + a_jj)/2 - x - sqrt(((a_ii - a_jj)/2)² + R_i(x) R_j(x))
//! ```
//!
//! with `R_i(x) = Σ_{k≠i} |a_ik - x|`. Every `x >= 0` gives a valid lower
//! bound `min_{i≠j} f_ij(A, x)`, but the pair functions are not concave, so
//! the maximization over `x` is a candidate search rather than a proof of
//! optimality. When all diagonal entries agree, averaging the two rows'
//! dominances gives a concave envelope that is optimized exactly instead.

use crate::classic::Witness;
use crate::envelope::{LinearEnvelope, Line, Sense};
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::shifted::{deltas, shifted_gersh_lower};

const GRID_POINTS: usize = 1024;
const GOLDEN_TOLERANCE: f64 = 1e-8;
const REFINED_MAXIMA: usize = 8;
const EQUAL_DIAGONAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrauerShiftResult {
    pub value: f64,
    pub x_star: f64,
    /// Pair attaining the minimum at `x_star`.
    pub pair: (usize, usize),
    /// Whether `value` is the proven supremum (the equal-diagonal path).
    pub exact: bool,
}

/// `f_ij` from the two rows' diagonals and off-diagonal entries.
pub fn f_pair_rows(a_ii: f64, off_i: &[f64], a_jj: f64, off_j: &[f64], x: f64) -> f64 {
    let ri: f64 = off_i.iter().map(|v| (v - x).abs()).sum();
    let rj: f64 = off_j.iter().map(|v| (v - x).abs()).sum();
    pair_root(a_ii, a_jj, ri, rj, x)
}

#[inline]
fn pair_root(a_ii: f64, a_jj: f64, ri: f64, rj: f64, x: f64) -> f64 {
    let h = 0.5 * (a_ii - a_jj);
    let radicand = h * h + ri * rj;
    debug_assert!(radicand >= 0.0);
    0.5 * (a_ii + a_jj) - x - radicand.sqrt()
}

pub fn f_pair(a: &SymmetricMatrix, i: usize, j: usize, x: f64) -> Result<f64> {
    a.check_index(i)?;
    a.check_index(j)?;
    if i == j {
        return Err(Error::InvalidArgument(format!("pair needs distinct rows, got ({i}, {i})")));
    }
    let r = a.shifted_radii(x);
    Ok(pair_root(a.get(i, i), a.get(j, j), r[i], r[j], x))
}

/// `min_{i<j} f_ij(A, x)` with the lexicographically first minimizing pair.
pub fn pair_min(a: &SymmetricMatrix, x: f64) -> (f64, (usize, usize)) {
    let n = a.dim();
    let r = a.shifted_radii(x);
    let mut best = (f64::INFINITY, (0, 1));
    for i in 0..n {
        for j in (i + 1)..n {
            let v = pair_root(a.get(i, i), a.get(j, j), r[i], r[j], x);
            if v < best.0 {
                best = (v, (i, j));
            }
        }
    }
    best
}

// Roots inside (lo, hi) where x + sqrt(C + (α+βx)(γ+ηx)) is stationary while
// the product is decreasing, so the derivative of the root is -1 there.
fn stationary_points(
    (alpha, beta): (f64, f64),
    (gamma, eta): (f64, f64),
    c: f64,
    (lo, hi): (f64, f64),
) -> Vec<f64> {
    let be = beta * eta;
    let b = alpha * eta + beta * gamma;
    let c0 = alpha * gamma + c;
    let qa = 4.0 * be * (be - 1.0);
    let qb = 4.0 * b * (be - 1.0);
    let qc = b * b - 4.0 * c0;
    let mut roots = Vec::new();
    if qa.abs() < 1e-300 {
        if qb.abs() > 1e-300 {
            roots.push(-qc / qb);
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc >= 0.0 {
            let s = disc.sqrt();
            roots.push((-qb - s) / (2.0 * qa));
            roots.push((-qb + s) / (2.0 * qa));
        }
    }
    roots
        .into_iter()
        .filter(|&x| x > lo && x < hi && 2.0 * be * x + b <= 0.0)
        .collect()
}

fn golden_max(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut g1, mut g2) = (g(x1), g(x2));
    while hi - lo > GOLDEN_TOLERANCE {
        if g1 < g2 {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - phi * (hi - lo);
            g1 = g(x1);
        }
    }
    if g1 >= g2 {
        (x1, g1)
    } else {
        (x2, g2)
    }
}

/// Best shifted Brauer lower bound found over a candidate set in
/// `[0, max(0, max_{i≠j} a_ij)]`; beyond that range the pair functions only
/// decrease.
pub fn shifted_brauer_lower(a: &SymmetricMatrix) -> BrauerShiftResult {
    let n = a.dim();
    if n == 1 {
        return BrauerShiftResult {
            value: a.get(0, 0),
            x_star: 0.0,
            pair: (0, 0),
            exact: true,
        };
    }
    let mut breaks: Vec<f64> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .map(|(i, j)| a.get(i, j))
        .collect();
    let x_max = breaks.iter().copied().fold(0.0, f64::max);
    breaks.retain(|&v| v >= 0.0);
    breaks.extend([0.0, x_max]);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();

    let mut candidates = breaks.clone();
    for w in breaks.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let mid = 0.5 * (lo + hi);
        candidates.push(mid);
        // both radii are affine on (lo, hi)
        let lin: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let off = a.off_diagonal_row(i);
                let slope = off.iter().map(|&v| if v < mid { 1.0 } else { -1.0 }).sum::<f64>();
                let at_mid: f64 = off.iter().map(|v| (v - mid).abs()).sum();
                (at_mid - slope * mid, slope)
            })
            .collect();
        for i in 0..n {
            for j in (i + 1)..n {
                let h = 0.5 * (a.get(i, i) - a.get(j, j));
                candidates.extend(stationary_points(lin[i], lin[j], h * h, (lo, hi)));
            }
        }
    }
    if x_max > 0.0 {
        candidates.extend((0..=GRID_POINTS).map(|k| x_max * k as f64 / GRID_POINTS as f64));
    }
    let seed = shifted_gersh_lower(a).x_star;
    if seed <= x_max {
        candidates.push(seed);
    }
    if let Ok(t) = tilde_shifted_lower(a) {
        if t.x_star <= x_max {
            candidates.push(t.x_star);
        }
    }
    candidates.retain(|x| x.is_finite() && (0.0..=x_max).contains(x));
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let values: Vec<f64> = candidates.iter().map(|&x| pair_min(a, x).0).collect();

    // refine around the strongest local maxima of the sampled profile
    let m = candidates.len();
    let mut peaks: Vec<usize> = (0..m)
        .filter(|&k| (k == 0 || values[k] >= values[k - 1]) && (k + 1 == m || values[k] >= values[k + 1]))
        .collect();
    peaks.sort_by(|&p, &q| values[q].total_cmp(&values[p]).then(p.cmp(&q)));
    peaks.truncate(REFINED_MAXIMA);
    let mut refined = Vec::new();
    for k in peaks {
        let lo = candidates[k.saturating_sub(1)];
        let hi = candidates[(k + 1).min(m - 1)];
        if hi > lo {
            refined.push(golden_max(|x| pair_min(a, x).0, lo, hi));
        }
    }

    let mut best = (values[0], candidates[0]);
    for (&x, &v) in candidates.iter().zip(&values) {
        if v > best.0 {
            best = (v, x);
        }
    }
    for (x, v) in refined {
        if v > best.0 || (v == best.0 && x < best.1) {
            best = (v, x);
        }
    }
    let (value, pair) = pair_min(a, best.1);
    BrauerShiftResult {
        value,
        x_star: best.1,
        pair,
        exact: false,
    }
}

/// Upper counterpart, `-shifted_brauer_lower(-A)` with the shift negated.
pub fn shifted_brauer_upper(a: &SymmetricMatrix) -> BrauerShiftResult {
    let b = shifted_brauer_lower(&a.negate());
    BrauerShiftResult {
        value: -b.value,
        x_star: if b.x_star == 0.0 { 0.0 } else { -b.x_star },
        pair: b.pair,
        exact: b.exact,
    }
}

fn common_diagonal(a: &SymmetricMatrix) -> Result<f64> {
    let q = a.get(0, 0);
    for i in 1..a.dim() {
        let v = a.get(i, i);
        if (v - q).abs() > EQUAL_DIAGONAL_TOLERANCE {
            return Err(Error::UnequalDiagonal {
                first: q,
                index: i,
                value: v,
            });
        }
    }
    Ok(q)
}

/// Lines `(n - 1 - k) x + min_{i<j} (q + δ_{i,j,k} / 2)`, `k = 1..2n-1`,
/// where `δ_{i,j,k}` runs over the `2n - 2` combined off-diagonal entries of
/// rows `i` and `j`. Their lower envelope is `min_{i≠j} (d_i + d_j) / 2`.
pub fn tilde_lines(a: &SymmetricMatrix) -> Result<LinearEnvelope> {
    let q = common_diagonal(a)?;
    let n = a.dim();
    if n < 2 {
        return Err(Error::InvalidArgument("pair bound needs n >= 2".into()));
    }
    let rows: Vec<Vec<f64>> = (0..n).map(|i| a.off_diagonal_row(i)).collect();
    let mut best = vec![(f64::INFINITY, (0usize, 1usize)); 2 * n - 1];
    for i in 0..n {
        for j in (i + 1)..n {
            let mut y = rows[i].clone();
            y.extend_from_slice(&rows[j]);
            y.sort_by(f64::total_cmp);
            for (k, d) in deltas(&y).into_iter().enumerate() {
                let s = q + 0.5 * d;
                if s < best[k].0 {
                    best[k] = (s, (i, j));
                }
            }
        }
    }
    let lines = best
        .into_iter()
        .enumerate()
        .map(|(k, (s, (i, j)))| Line {
            slope: n as f64 - 2.0 - k as f64,
            intercept: s,
            source: Witness::Pair(i, j),
        })
        .collect();
    LinearEnvelope::new(lines, Sense::Lower)
}

/// Exact supremum of the averaged pair bound for equal-diagonal matrices.
pub fn tilde_shifted_lower(a: &SymmetricMatrix) -> Result<BrauerShiftResult> {
    let env = tilde_lines(a)?;
    let b = env.optimize();
    let pair = b
        .active
        .first()
        .map(|&k| match env.lines()[k].source {
            Witness::Pair(i, j) => (i, j),
            Witness::Row(i) => (i, i),
        })
        .unwrap_or((0, 1));
    Ok(BrauerShiftResult {
        value: b.value,
        x_star: b.x_star,
        pair,
        exact: true,
    })
}
