//! Reference computations for the integration tests. Everything here is
//! written from the definitions, independently of the library's algorithms.
#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shiftbound::SymmetricMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// Upper triangle drawn row by row, then mirrored.
fn mirrored(n: usize, mut draw: impl FnMut() -> f64) -> SymmetricMatrix {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = draw();
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    SymmetricMatrix::from_rows(&rows).unwrap()
}

pub fn uniform_matrix(n: usize, lo: f64, hi: f64, rng: &mut impl Rng) -> SymmetricMatrix {
    mirrored(n, || rng.gen_range(lo..hi))
}

pub fn int_matrix(n: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> SymmetricMatrix {
    mirrored(n, || rng.gen_range(lo..=hi) as f64)
}

pub fn equal_diagonal(mut a: Vec<Vec<f64>>, q: f64) -> SymmetricMatrix {
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = q;
    }
    SymmetricMatrix::from_rows(&a).unwrap()
}

pub fn to_rows(a: &SymmetricMatrix) -> Vec<Vec<f64>> {
    (0..a.dim()).map(|i| a.row(i).to_vec()).collect()
}

/// `min_i (a_ii - x - Σ_{j≠i} |a_ij - x|)`.
pub fn naive_dominance(a: &SymmetricMatrix, x: f64) -> f64 {
    let n = a.dim();
    (0..n)
        .map(|i| {
            let r: f64 = (0..n).filter(|&j| j != i).map(|j| (a.get(i, j) - x).abs()).sum();
            a.get(i, i) - x - r
        })
        .fold(f64::INFINITY, f64::min)
}

/// `min_{i≠j}` of the smaller root of `(z - a_ii)(z - a_jj) = R_i R_j` for `A - x·1`,
/// solved with the quadratic formula.
pub fn naive_brauer(a: &SymmetricMatrix, x: f64) -> f64 {
    let n = a.dim();
    let r: Vec<f64> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i).map(|j| (a.get(i, j) - x).abs()).sum())
        .collect();
    let mut best = f64::INFINITY;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (p, q) = (a.get(i, i) - x, a.get(j, j) - x);
            // z² - (p+q) z + pq - R_i R_j = 0
            let b = -(p + q);
            let c = p * q - r[i] * r[j];
            let z = (-b - (b * b - 4.0 * c).sqrt()) / 2.0;
            best = best.min(z);
        }
    }
    best
}

/// Best value of `f` over a uniform grid on `[0, hi]`.
pub fn grid_sup(f: impl Fn(f64) -> f64, hi: f64, steps: usize) -> (f64, f64) {
    let mut best = (f(0.0), 0.0);
    for k in 1..=steps {
        let x = hi * k as f64 / steps as f64;
        let v = f(x);
        if v > best.0 {
            best = (v, x);
        }
    }
    best
}

pub fn largest_abs(a: &SymmetricMatrix) -> f64 {
    (0..a.dim())
        .flat_map(|i| a.row(i).to_vec())
        .fold(0.0, |m, v: f64| m.max(v.abs()))
}
