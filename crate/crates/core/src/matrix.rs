//! Dense real symmetric matrices.
//!
//! Storage is row-major, `data[i * n + j]`. Both triangles are stored; the
//! constructors enforce that they agree, so every accessor can read either.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Largest asymmetry the programmatic constructors accept before rejecting.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// A dense real symmetric `n × n` matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds a matrix from rows, accepting asymmetry up to
    /// [`SYMMETRY_TOLERANCE`] and symmetrizing by averaging.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        Self::build(rows, SYMMETRY_TOLERANCE)
    }

    /// Builds a matrix from rows, requiring exact symmetry.
    pub fn from_rows_exact<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        Self::build(rows, 0.0)
    }

    fn build<R: AsRef<[f64]>>(rows: &[R], tol: f64) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(n, data, tol)
    }

    fn from_row_major(n: usize, mut data: Vec<f64>, tol: f64) -> Result<Self> {
        for i in 0..n {
            for j in 0..n {
                if !data[i * n + j].is_finite() {
                    return Err(Error::NonFinite { i, j });
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let a_ij = data[i * n + j];
                let a_ji = data[j * n + i];
                if a_ij != a_ji {
                    if (a_ij - a_ji).abs() > tol {
                        return Err(Error::NotSymmetric { i, j, a_ij, a_ji });
                    }
                    let mean = 0.5 * (a_ij + a_ji);
                    data[i * n + j] = mean;
                    data[j * n + i] = mean;
                }
            }
        }
        Ok(Self { n, data })
    }

    /// Builds a matrix from a generator evaluated on the upper triangle
    /// (`i <= j`) and mirrored.
    pub fn from_upper_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Self::from_row_major(n, data, 0.0)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::from_upper_fn(n, |_, _| 0.0)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_upper_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        Self::from_upper_fn(diag.len(), |i, j| if i == j { diag[i] } else { 0.0 })
    }

    /// Dimension `n`.
    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Row `i` as a slice.
    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// Off-diagonal entries of row `i`, in column order.
    pub fn off_diagonal_row(&self, i: usize) -> Vec<f64> {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| v)
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `A - x·1`, where `1` is the all-ones matrix.
    pub fn shift(&self, x: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&v| v - x).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&v| -v).collect(),
        }
    }

    /// Symmetric permutation `PᵀAP`: entry `(i, j)` of the result is
    /// `a[perm[i]][perm[j]]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
            seen[p] = true;
        }
        Self::from_upper_fn(self.n, |i, j| self.get(perm[i], perm[j]))
    }

    /// Gershgorin radius `R_i(A) = Σ_{j≠i} |a_ij|`.
    pub fn row_radius(&self, i: usize) -> Result<f64> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(self.radius_unchecked(i))
    }

    #[inline]
    pub(crate) fn radius_unchecked(&self, i: usize) -> f64 {
        self.row(i)
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.abs())
            .sum()
    }

    /// All Gershgorin radii.
    pub fn radii(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.radius_unchecked(i)).collect()
    }

    /// Radii of `A - x·1` without materializing the shifted matrix.
    pub fn shifted_radii(&self, x: f64) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| (v - x).abs())
                    .sum()
            })
            .collect()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            })
        }
    }
}

impl Index<(usize, usize)> for SymmetricMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl fmt::Display for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
