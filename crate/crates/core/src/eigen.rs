//! Ground-truth eigenvalues by cyclic Jacobi rotations.
//!
//! Each sweep visits every `(p, q)` pair above the diagonal once and applies
//! the plane rotation that annihilates `a_pq`. Sweeps repeat until the
//! off-diagonal Frobenius norm drops below `OFF_DIAGONAL_TOLERANCE`
//! (relative to `max(1, ‖A‖_F)`).

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Largest dimension the oracle accepts.
pub const MAX_DIM: usize = 256;
/// Sweep cap before declaring non-convergence.
pub const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

/// Eigenvalues sorted nondecreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Smallest eigenvalue `λ_1`.
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Largest eigenvalue `λ_n`.
    pub fn max(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// Eigenvalues with their (column) eigenvectors, sorted by eigenvalue.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    /// `vectors[k]` is the unit eigenvector for `spectrum.eigenvalues()[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Eigenvalues of `a`, sorted nondecreasing.
pub fn eigen_oracle(a: &SymmetricMatrix) -> Result<Spectrum> {
    jacobi(a, false).map(|d| d.spectrum)
}

/// Full eigendecomposition of `a`.
pub fn eigen_decomposition(a: &SymmetricMatrix) -> Result<EigenDecomposition> {
    jacobi(a, true)
}

fn jacobi(a: &SymmetricMatrix, want_vectors: bool) -> Result<EigenDecomposition> {
    let n = a.dim();
    if n > MAX_DIM {
        return Err(Error::TooLarge {
            n,
            limit: MAX_DIM,
        });
    }

    let mut m: Vec<f64> = (0..n).flat_map(|i| a.row(i).to_vec()).collect();
    let mut v = if want_vectors {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    } else {
        Vec::new()
    };

    let scale = m.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let threshold = OFF_DIAGONAL_TOLERANCE * scale;

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_norm(&m, n) < threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].total_cmp(&m[j * n + j]));
    let eigenvalues = order.iter().map(|&i| m[i * n + i]).collect();
    let vectors = if want_vectors {
        order
            .iter()
            .map(|&k| (0..n).map(|i| v[i * n + k]).collect())
            .collect()
    } else {
        Vec::new()
    };
    Ok(EigenDecomposition {
        spectrum: Spectrum { eigenvalues },
        vectors,
    })
}

fn off_norm(m: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * m[i * n + j] * m[i * n + j];
        }
    }
    s.sqrt()
}

// Rotation in the (p, q) plane chosen so that the updated a_pq is zero.
fn rotate(m: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = m[p * n + p];
    let aqq = m[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        let akp = m[k * n + p];
        let akq = m[k * n + q];
        m[k * n + p] = c * akp - s * akq;
        m[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = m[p * n + k];
        let aqk = m[q * n + k];
        m[p * n + k] = c * apk - s * aqk;
        m[q * n + k] = s * apk + c * aqk;
    }
    m[p * n + q] = 0.0;
    m[q * n + p] = 0.0;

    if !v.is_empty() {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
        }
    }
}
