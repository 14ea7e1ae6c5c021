//! Degree-sequence lower bounds on the smallest adjacency eigenvalue.
//!
//! Shifting the adjacency matrix by `x ∈ [0, 1]` turns every off-diagonal
//! entry into `-x` or `1 - x`, so the shifted row bounds depend only on the
//! degrees. All three closed forms below are the shifted optimizers
//! evaluated at a few shifts.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::eigen::eigen_oracle;
use crate::io::format_number;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from unordered pairs, rejecting loops, duplicates (in
    /// either orientation), and endpoints outside `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::IndexOutOfRange { index: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = (u.min(v), u.max(v));
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
            .expect("complete graph edges are valid")
    }

    /// `i ~ j` iff their cyclic distance is between 1 and `k`.
    pub fn circulant(n: usize, k: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                let d = (v - u).min(n - (v - u));
                if d >= 1 && d <= k {
                    g.edges.insert((u, v));
                }
            }
        }
        g
    }

    /// One `G(n, p)` draw: each pair is an edge independently with
    /// probability `p`, visited in lexicographic order.
    pub fn erdos_renyi(n: usize, p: f64, rng: &mut impl Rng) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.edges.insert((u, v));
                }
            }
        }
        g
    }
}

impl fmt::Display for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// 0/1 adjacency matrix with zero diagonal.
pub fn adjacency(g: &UndirectedGraph) -> Result<SymmetricMatrix> {
    SymmetricMatrix::from_upper_fn(g.n, |i, j| if i != j && g.has_edge(i, j) { 1.0 } else { 0.0 })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSummary {
    /// Degrees sorted from largest to smallest.
    pub degrees: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub second_max: usize,
    pub second_min: usize,
    /// Average of the two largest degrees.
    pub max_pair: f64,
    /// Average of the two smallest degrees.
    pub min_pair: f64,
}

impl DegreeSummary {
    /// With a single vertex the "second" statistics repeat the only degree.
    pub fn new(g: &UndirectedGraph) -> Result<Self> {
        if g.n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut degrees = g.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let m = degrees.len();
        let (max, min) = (degrees[0], degrees[m - 1]);
        let second_max = degrees[1.min(m - 1)];
        let second_min = degrees[m.saturating_sub(2)];
        Ok(Self {
            max_pair: (max + second_max) as f64 / 2.0,
            min_pair: (min + second_min) as f64 / 2.0,
            degrees,
            max,
            min,
            second_max,
            second_min,
        })
    }
}

/// Which shift produced a degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphCase {
    /// `x = 0`: `-Δ`.
    Unshifted,
    /// `x = 1/2`: `-n/2`.
    Pivot,
    /// `x = 1`: `δ - n`.
    Complement,
}

impl GraphCase {
    pub fn shift(self) -> f64 {
        match self {
            Self::Unshifted => 0.0,
            Self::Pivot => 0.5,
            Self::Complement => 1.0,
        }
    }
}

impl fmt::Display for GraphCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Unshifted => "unshifted",
            Self::Pivot => "pivot",
            Self::Complement => "complement",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphBound {
    pub value: f64,
    pub case: GraphCase,
}

impl GraphBound {
    pub fn shift(&self) -> f64 {
        self.case.shift()
    }
}

// Largest of the candidates; ties resolve to the earliest entry.
fn best_of(cands: &[(f64, GraphCase)]) -> GraphBound {
    let mut best = cands[0];
    for &c in &cands[1..] {
        if c.0 > best.0 {
            best = c;
        }
    }
    GraphBound {
        value: best.0,
        case: best.1,
    }
}

// max{-Δ, -n/2, δ - n}: the pivot is listed first so that boundary ties
// report x = 1/2.
fn three_case(n: usize, max: f64, min: f64) -> GraphBound {
    best_of(&[
        (-(n as f64) / 2.0, GraphCase::Pivot),
        (-max, GraphCase::Unshifted),
        (min - n as f64, GraphCase::Complement),
    ])
}

/// Shifted Gershgorin bound of the adjacency matrix in closed form.
pub fn gersh_graph_lower(g: &UndirectedGraph) -> Result<GraphBound> {
    let s = DegreeSummary::new(g)?;
    Ok(three_case(g.n, s.max as f64, s.min as f64))
}

/// The same three cases with the top-two and bottom-two degree averages.
pub fn pair_gersh_graph_lower(g: &UndirectedGraph) -> Result<GraphBound> {
    if g.n < 2 {
        return Err(Error::InvalidArgument("pair bound needs n >= 2".into()));
    }
    let s = DegreeSummary::new(g)?;
    Ok(three_case(g.n, s.max_pair, s.min_pair))
}

/// Shifted Brauer bound of the adjacency matrix at `x ∈ {0, 1/2, 1}`,
/// preferring the smallest shift on ties.
pub fn brauer_graph_lower(g: &UndirectedGraph) -> Result<GraphBound> {
    if g.n < 2 {
        return Err(Error::InvalidArgument("pair bound needs n >= 2".into()));
    }
    let s = DegreeSummary::new(g)?;
    let n = g.n as f64;
    let top = ((s.max * s.second_max) as f64).sqrt();
    let co_min = n - 1.0 - s.min as f64;
    let co_second = n - 1.0 - s.second_min as f64;
    Ok(best_of(&[
        (-top, GraphCase::Unshifted),
        (-n / 2.0, GraphCase::Pivot),
        (-1.0 - (co_min * co_second).sqrt(), GraphCase::Complement),
    ]))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErRecord {
    pub sample: usize,
    pub lambda1: f64,
    pub bound: f64,
}

impl ErRecord {
    pub fn gap(&self) -> f64 {
        self.lambda1 - self.bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErSummary {
    pub samples: usize,
    pub min_gap: f64,
    pub max_gap: f64,
    pub mean_gap: f64,
    /// Records with `bound > lambda1 + 1e-7`.
    pub violations: usize,
}

pub const SOUNDNESS_TOLERANCE: f64 = 1e-7;

/// Name of the generator behind every seeded experiment.
pub const RNG_NAME: &str = "ChaCha8Rng(seed, stream = sample index)";

pub(crate) fn sample_rng(seed: u64, sample: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample as u64);
    rng
}

/// Oracle `λ_1` and [`brauer_graph_lower`] for `samples` draws of `G(n, p)`.
pub fn er_experiment(n: usize, p: f64, samples: usize, seed: u64) -> Result<Vec<ErRecord>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} is outside [0, 1]")));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("graphs need n >= 2".into()));
    }
    (0..samples)
        .into_par_iter()
        .map(|sample| {
            let g = UndirectedGraph::erdos_renyi(n, p, &mut sample_rng(seed, sample));
            Ok(ErRecord {
                sample,
                lambda1: eigen_oracle(&adjacency(&g)?)?.min(),
                bound: brauer_graph_lower(&g)?.value,
            })
        })
        .collect()
}

pub fn er_summary(records: &[ErRecord]) -> ErSummary {
    let gaps: Vec<f64> = records.iter().map(ErRecord::gap).collect();
    ErSummary {
        samples: records.len(),
        min_gap: gaps.iter().copied().fold(f64::INFINITY, f64::min),
        max_gap: gaps.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        mean_gap: gaps.iter().sum::<f64>() / gaps.len().max(1) as f64,
        violations: gaps.iter().filter(|&&g| g < -SOUNDNESS_TOLERANCE).count(),
    }
}

/// CSV with header `sample,lambda1,bound,gap`, preceded by a `# rng=` line.
pub fn er_csv(records: &[ErRecord], offset: f64) -> String {
    let mut s = format!("# rng={RNG_NAME}\nsample,lambda1,bound,gap\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{}\n",
            r.sample,
            format_number(r.lambda1 + offset),
            format_number(r.bound + offset),
            format_number(r.gap())
        ));
    }
    s
}
