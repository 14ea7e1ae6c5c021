//! Shifted Gershgorin bounds.
//!
//! For `x >= 0`, every eigenvalue of `A` is at least the smallest diagonal
//! dominance of `A - x·1`:
//!
//! ```text
//! d_i(A, x) = a_ii - x - Σ_{j≠i} |a_ij - x|
//! ```
//!
//! Sorting row `i`'s off-diagonal entries `y_1 <= … <= y_{n-1}` turns
//! `d_i(A, ·)` into `min_k ((n - 2k) x + a_ii + δ_{i,k})` with
//! `δ_{i,k} = Σ_{j<k} y_j - Σ_{j>=k} y_j`. Taking the minimum over rows
//! per `k` leaves `n` lines whose lower envelope is optimized exactly.

use crate::classic::{gershgorin_bounds, BoundReport, Method, Witness};
use crate::envelope::{LinearEnvelope, Line, Sense, ShiftedBound, EQUALITY_TOLERANCE};
use crate::error::Result;
use crate::matrix::SymmetricMatrix;

/// Diagonal dominance of row `i` of `A - x·1`.
pub fn d_lower(a: &SymmetricMatrix, i: usize, x: f64) -> Result<f64> {
    a.check_index(i)?;
    Ok(a.get(i, i) - x - off_diagonal_spread(a, i, x))
}

/// Right edge of the Gershgorin disk of row `i` of `A - x·1`.
pub fn d_upper(a: &SymmetricMatrix, i: usize, x: f64) -> Result<f64> {
    a.check_index(i)?;
    Ok(a.get(i, i) - x + off_diagonal_spread(a, i, x))
}

fn off_diagonal_spread(a: &SymmetricMatrix, i: usize, x: f64) -> f64 {
    a.row(i)
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &v)| (v - x).abs())
        .sum()
}

/// `min_i d_i(A, x)`, evaluated directly from the definition.
pub fn min_dominance(a: &SymmetricMatrix, x: f64) -> f64 {
    (0..a.dim())
        .map(|i| a.get(i, i) - x - off_diagonal_spread(a, i, x))
        .fold(f64::INFINITY, f64::min)
}

/// `δ_{i,k}` for `k = 1..=n` (returned 0-based), from sorted off-diagonals.
pub(crate) fn deltas(sorted: &[f64]) -> Vec<f64> {
    let total: f64 = sorted.iter().sum();
    let mut prefix = 0.0;
    let mut out = Vec::with_capacity(sorted.len() + 1);
    for k in 0..=sorted.len() {
        out.push(prefix - (total - prefix));
        if k < sorted.len() {
            prefix += sorted[k];
        }
    }
    out
}

fn sorted_off_diagonal(a: &SymmetricMatrix, i: usize) -> Vec<f64> {
    let mut y = a.off_diagonal_row(i);
    y.sort_by(f64::total_cmp);
    y
}

/// Per-row intercepts `s_{i,k} = a_ii + δ_{i,k}`, `k = 1..=n` (0-based).
pub fn row_intercepts(a: &SymmetricMatrix, i: usize) -> Result<Vec<f64>> {
    a.check_index(i)?;
    let aii = a.get(i, i);
    Ok(deltas(&sorted_off_diagonal(a, i))
        .into_iter()
        .map(|d| aii + d)
        .collect())
}

/// The `n` lines `r_k x + s_k` with `r_k = n - 2k`, `s_k = min_i s_{i,k}`.
/// Each line's source is the lowest-index row attaining `s_k`.
pub fn lower_lines(a: &SymmetricMatrix) -> LinearEnvelope {
    let n = a.dim();
    let mut best = vec![(f64::INFINITY, 0usize); n];
    for i in 0..n {
        let aii = a.get(i, i);
        for (k, d) in deltas(&sorted_off_diagonal(a, i)).into_iter().enumerate() {
            let s = aii + d;
            if s < best[k].0 {
                best[k] = (s, i);
            }
        }
    }
    let lines = best
        .into_iter()
        .enumerate()
        .map(|(k, (s, i))| Line {
            slope: n as f64 - 2.0 * (k as f64 + 1.0),
            intercept: s,
            source: Witness::Row(i),
        })
        .collect();
    LinearEnvelope::new(lines, Sense::Lower).expect("slope -n line is always present")
}

/// The `n` lines `R_k x + S_k` with `R_k = 2k - n - 2`, `S_k = max_i (a_ii - δ_{i,k})`,
/// whose upper envelope is `max_i D_i(A, x)`.
pub fn upper_lines(a: &SymmetricMatrix) -> LinearEnvelope {
    let n = a.dim();
    let mut best = vec![(f64::NEG_INFINITY, 0usize); n];
    for i in 0..n {
        let aii = a.get(i, i);
        for (k, d) in deltas(&sorted_off_diagonal(a, i)).into_iter().enumerate() {
            let s = aii - d;
            if s > best[k].0 {
                best[k] = (s, i);
            }
        }
    }
    let lines = best
        .into_iter()
        .enumerate()
        .map(|(k, (s, i))| Line {
            slope: 2.0 * (k as f64 + 1.0) - n as f64 - 2.0,
            intercept: s,
            source: Witness::Row(i),
        })
        .collect();
    LinearEnvelope::new(lines, Sense::Upper).expect("slope -n line is always present")
}

/// `sup_{x>=0} min_k (r_k x + s_k)`, found by exact enumeration over `lines`.
pub fn envelope_sup(lines: &LinearEnvelope) -> ShiftedBound {
    lines.optimize()
}

/// Shifted Gershgorin lower bound.
///
/// The value at `x = 0` is taken from the radii directly, so the result is
/// never below the unshifted bound even by a rounding error.
pub fn shifted_gersh_lower(a: &SymmetricMatrix) -> ShiftedBound {
    let env = lower_lines(a);
    let mut b = env.optimize();
    let g0 = min_dominance(a, 0.0);
    b.unshifted = g0;
    if g0 >= b.value {
        b.value = g0;
        b.x_star = 0.0;
        b.active = env.active_at(0.0);
    }
    b
}

/// Shifted Gershgorin upper bound, `-shifted_gersh_lower(-A)` with the shift
/// negated.
pub fn shifted_gersh_upper(a: &SymmetricMatrix) -> ShiftedBound {
    let b = shifted_gersh_lower(&a.negate());
    ShiftedBound {
        value: -b.value,
        x_star: if b.x_star == 0.0 { 0.0 } else { -b.x_star },
        active: b.active,
        unshifted: -b.unshifted,
        improved: b.improved,
    }
}

/// Whether some `x > 0` strictly improves the Gershgorin lower bound, from
/// the right derivative of the envelope at zero.
pub fn local_improvement_lower(a: &SymmetricMatrix) -> bool {
    lower_lines(a).improves_at_zero()
}

/// Whether some `x < 0` strictly improves the Gershgorin upper bound.
pub fn local_improvement_upper(a: &SymmetricMatrix) -> bool {
    upper_lines(a).improves_at_zero()
}

/// Closed-form optimum over pairs of lines.
///
/// Pairs `(k, l)` with `k <= n/2 < l` and `s_l >= s_k` cross at
/// `x = (s_l - s_k) / (2(l - k))` with height
/// `((n/2 - k) s_l + (l - n/2) s_k) / (l - k)`. The optimum is the smallest
/// such height, or the smallest intercept `s_l` of a nonpositive-slope line
/// when that is lower (the optimum then sits at `x = 0`).
pub fn closed_form_lower(a: &SymmetricMatrix) -> ShiftedBound {
    let env = lower_lines(a);
    let s: Vec<f64> = env.lines().iter().map(|l| l.intercept).collect();
    let n = s.len();
    let half = n as f64 / 2.0;

    // (value, x, line indices), ties broken towards smaller x
    let mut best: Option<(f64, f64, Vec<usize>)> = None;
    let mut offer = |v: f64, x: f64, active: Vec<usize>| {
        let better = match &best {
            None => true,
            Some((bv, bx, _)) => v < *bv || (v == *bv && x < *bx),
        };
        if better {
            best = Some((v, x, active));
        }
    };

    for l in 1..=n {
        if (l as f64) >= half {
            offer(s[l - 1], 0.0, vec![l - 1]);
        }
    }
    for k in (1..=n).filter(|&k| (k as f64) <= half) {
        for l in (1..=n).filter(|&l| (l as f64) > half) {
            let (sk, sl) = (s[k - 1], s[l - 1]);
            if sl < sk {
                continue;
            }
            let span = (l - k) as f64;
            let value = ((half - k as f64) * sl + (l as f64 - half) * sk) / span;
            let x = (sl - sk) / (2.0 * span);
            offer(value, x, vec![k - 1, l - 1]);
        }
    }

    let (value, x_star, active) = best.expect("line l = n always qualifies");
    ShiftedBound {
        value,
        x_star,
        active,
        unshifted: env.eval(0.0),
        improved: env.improves_at_zero(),
    }
}

/// `(x, min_i d_i(A, x))` for each requested shift.
pub fn profile_lower(a: &SymmetricMatrix, xs: &[f64]) -> Vec<(f64, f64)> {
    xs.iter().map(|&x| (x, min_dominance(a, x))).collect()
}

/// Shifted Gershgorin lower and upper bounds as a [`BoundReport`].
pub fn shifted_gershgorin_report(a: &SymmetricMatrix) -> BoundReport {
    let lo_env = lower_lines(a);
    let lo = shifted_gersh_lower(a);
    let hi = shifted_gersh_upper(a);
    let hi_env = lower_lines(&a.negate());
    let witness = |env: &LinearEnvelope, active: &[usize]| {
        active
            .first()
            .map(|&k| env.lines()[k].source)
            .unwrap_or(Witness::Row(0))
    };
    BoundReport {
        method: Method::ShiftedGershgorin,
        lower: lo.value,
        upper: hi.value,
        witness_lower: witness(&lo_env, &lo.active),
        witness_upper: witness(&hi_env, &hi.active),
        shift_lower: lo.x_star,
        shift_upper: hi.x_star,
    }
}

/// Whether the shifted lower bound strictly beats the unshifted one, by
/// more than the envelope equality tolerance.
pub fn improves_on_gershgorin(a: &SymmetricMatrix) -> bool {
    shifted_gersh_lower(a).value > gershgorin_bounds(a).lower + EQUALITY_TOLERANCE
}
