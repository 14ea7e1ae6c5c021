//! Seeded random-matrix comparison of unshifted and shifted lower bounds.

use rand::Rng;
use rayon::prelude::*;

use crate::classic::{brauer_bounds, gershgorin_bounds};
use crate::eigen::eigen_oracle;
use crate::envelope::EQUALITY_TOLERANCE;
use crate::error::{Error, Result};
use crate::graph::{sample_rng, RNG_NAME};
use crate::io::format_number;
use crate::matrix::SymmetricMatrix;
use crate::shifted::shifted_gersh_lower;

/// Symmetric matrix with upper-triangle entries uniform on the integers
/// `lo..=hi`, drawn row by row.
pub fn random_symmetric_int(n: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Result<SymmetricMatrix> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty integer range {lo}..={hi}")));
    }
    SymmetricMatrix::from_upper_fn(n, |_, _| rng.gen_range(lo..=hi) as f64)
}

/// Symmetric matrix with upper-triangle entries uniform on `[lo, hi)`.
pub fn random_symmetric_uniform(n: usize, lo: f64, hi: f64, rng: &mut impl Rng) -> Result<SymmetricMatrix> {
    if lo >= hi || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidArgument(format!("bad range [{lo}, {hi})")));
    }
    SymmetricMatrix::from_upper_fn(n, |_, _| rng.gen_range(lo..hi))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRecord {
    pub sample: usize,
    pub lb_gershgorin: f64,
    pub lb_brauer: f64,
    pub ls_gershgorin: f64,
    pub lambda1: f64,
}

impl ComparisonRecord {
    pub fn compute(sample: usize, a: &SymmetricMatrix) -> Result<Self> {
        Ok(Self {
            sample,
            lb_gershgorin: gershgorin_bounds(a).lower,
            lb_brauer: brauer_bounds(a).lower,
            ls_gershgorin: shifted_gersh_lower(a).value,
            lambda1: eigen_oracle(a)?.min(),
        })
    }

    /// `(λ_1 - lsG, λ_1 - lbB)`.
    pub fn errors(&self) -> (f64, f64) {
        (self.lambda1 - self.ls_gershgorin, self.lambda1 - self.lb_brauer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonSummary {
    /// `lsG > lbB` beyond the tie tolerance.
    pub wins: usize,
    pub ties: usize,
    pub losses: usize,
}

impl ComparisonSummary {
    pub fn from_records(records: &[ComparisonRecord]) -> Self {
        let mut s = Self {
            wins: 0,
            ties: 0,
            losses: 0,
        };
        for r in records {
            let d = r.ls_gershgorin - r.lb_brauer;
            if d.abs() <= EQUALITY_TOLERANCE {
                s.ties += 1;
            } else if d > 0.0 {
                s.wins += 1;
            } else {
                s.losses += 1;
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.wins + self.ties + self.losses
    }

    pub fn win_rate(&self) -> f64 {
        self.wins as f64 / self.total().max(1) as f64
    }

    /// `wins,ties,losses,win_rate`.
    pub fn csv_line(&self) -> String {
        format!("{},{},{},{}", self.wins, self.ties, self.losses, format_number(self.win_rate()))
    }
}

/// Entry range of the comparison matrices.
pub const ENTRY_RANGE: (i64, i64) = (0, 10);

/// `samples` random integer matrices of size `n`, each from its own
/// substream of `seed`, in sample order.
pub fn compare_experiment(
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<(Vec<ComparisonRecord>, ComparisonSummary)> {
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let records = (0..samples)
        .into_par_iter()
        .map(|k| {
            let a = random_symmetric_int(n, ENTRY_RANGE.0, ENTRY_RANGE.1, &mut sample_rng(seed, k))?;
            ComparisonRecord::compute(k, &a)
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = ComparisonSummary::from_records(&records);
    Ok((records, summary))
}

/// Records reordered by `lbB` ascending, sample id breaking ties.
pub fn sorted_by_brauer(records: &[ComparisonRecord]) -> Vec<ComparisonRecord> {
    let mut v = records.to_vec();
    v.sort_by(|a, b| a.lb_brauer.total_cmp(&b.lb_brauer).then(a.sample.cmp(&b.sample)));
    v
}

/// CSV with header `sample,lbG,lbB,lsG,lambda1`, preceded by a `# rng=` line.
pub fn comparison_csv(records: &[ComparisonRecord]) -> String {
    let mut s = format!("# rng={RNG_NAME}\nsample,lbG,lbB,lsG,lambda1\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.sample,
            format_number(r.lb_gershgorin),
            format_number(r.lb_brauer),
            format_number(r.ls_gershgorin),
            format_number(r.lambda1)
        ));
    }
    s
}

/// Scatter points `(λ_1 - lsG, λ_1 - lbB)` as CSV.
pub fn scatter_csv(records: &[ComparisonRecord]) -> String {
    let mut s = String::from("sample,err_lsG,err_lbB\n");
    for r in records {
        let (e1, e2) = r.errors();
        s.push_str(&format!("{},{},{}\n", r.sample, format_number(e1), format_number(e2)));
    }
    s
}
