use super::melman::slack;
use super::{gershgorin_bounds, scan, BoundReport, Method, Witness};
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Row sums split by a vertex subset `S`: `in_s[i] = R_i^S`,
/// `out_s[i] = R_i^{S̄}`.
struct SplitRadii {
    member: Vec<bool>,
    in_s: Vec<f64>,
    out_s: Vec<f64>,
}

impl SplitRadii {
    fn new(a: &SymmetricMatrix, subset: &[usize]) -> Result<Self> {
        let n = a.dim();
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut member = vec![false; n];
        for &s in subset {
            a.check_index(s)?;
            member[s] = true;
        }
        let mut in_s = vec![0.0; n];
        let mut out_s = vec![0.0; n];
        for i in 0..n {
            for (j, &inside) in member.iter().enumerate() {
                if j == i {
                    continue;
                }
                if inside {
                    in_s[i] += a.get(i, j).abs();
                } else {
                    out_s[i] += a.get(i, j).abs();
                }
            }
        }
        Ok(Self {
            member,
            in_s,
            out_s,
        })
    }

    // Γ_i^S for i in S, else V_ij^S for i in S, j outside S.
    fn locate(&self, a: &SymmetricMatrix, z: f64) -> Option<Witness> {
        let n = a.dim();
        let eps = slack(a, z);
        let s_rows = (0..n).filter(|&i| self.member[i]);
        for i in s_rows.clone() {
            if (z - a.get(i, i)).abs() <= self.in_s[i] + eps {
                return Some(Witness::Row(i));
            }
        }
        for i in s_rows {
            let fi = (z - a.get(i, i)).abs() - self.in_s[i];
            for j in (0..n).filter(|&j| !self.member[j]) {
                let fj = (z - a.get(j, j)).abs() - self.out_s[j];
                if fi * fj <= self.out_s[i] * self.in_s[j] + eps {
                    return Some(Witness::Pair(i, j));
                }
            }
        }
        None
    }

    fn hints(&self, a: &SymmetricMatrix) -> Vec<f64> {
        let n = a.dim();
        let mut h = Vec::new();
        for i in 0..n {
            let d = a.get(i, i);
            h.extend([d, d - self.in_s[i], d + self.in_s[i]]);
        }
        for i in (0..n).filter(|&i| self.member[i]) {
            for j in (0..n).filter(|&j| !self.member[j]) {
                let p = self.out_s[i] * self.in_s[j];
                // outer real crossings of (|z-a_ii| - R_i^S)(|z-a_jj| - R_j^S̄) = p
                let (u, v) = (a.get(i, i) - self.in_s[i], a.get(j, j) - self.out_s[j]);
                h.push(0.5 * (u + v) - (0.25 * (u - v) * (u - v) + p).sqrt());
                let (u, v) = (a.get(i, i) + self.in_s[i], a.get(j, j) + self.out_s[j]);
                h.push(0.5 * (u + v) + (0.25 * (u - v) * (u - v) + p).sqrt());
            }
        }
        h
    }
}

/// Whether `z` lies in `(∪_{i∈S} Γ_i^S) ∪ (∪_{i∈S, j∉S} V_ij^S)`.
pub fn ckv_region_contains(a: &SymmetricMatrix, subset: &[usize], z: f64) -> Result<bool> {
    Ok(SplitRadii::new(a, subset)?.locate(a, z).is_some())
}

/// Extreme real points of the CKV region for the vertex subset `subset`.
pub fn ckv_bounds(a: &SymmetricMatrix, subset: &[usize]) -> Result<BoundReport> {
    let split = SplitRadii::new(a, subset)?;
    let g = gershgorin_bounds(a);
    let h = split.hints(a);
    let pred = |z: f64| split.locate(a, z).is_some();
    let lower = scan::leftmost(pred, (g.lower, g.upper), &h)?;
    let upper = scan::rightmost(pred, (g.lower, g.upper), &h)?;
    let wl = split.locate(a, lower).unwrap_or(Witness::Row(0));
    let wu = split.locate(a, upper).unwrap_or(Witness::Row(0));
    Ok(BoundReport::unshifted(Method::Ckv, lower, wl, upper, wu))
}

/// Best CKV bounds over all singleton subsets `{i}`: the largest lower
/// bound and the smallest upper bound, each from its own subset.
pub fn ckv_bounds_best_singleton(a: &SymmetricMatrix) -> Result<BoundReport> {
    let mut best: Option<BoundReport> = None;
    for i in 0..a.dim() {
        let r = ckv_bounds(a, &[i])?;
        best = Some(match best {
            None => r,
            Some(mut b) => {
                if r.lower > b.lower {
                    b.lower = r.lower;
                    b.witness_lower = r.witness_lower;
                }
                if r.upper < b.upper {
                    b.upper = r.upper;
                    b.witness_upper = r.witness_upper;
                }
                b
            }
        });
    }
    Ok(best.expect("dimension is at least 1"))
}
