use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shiftbound::shifted::Grid;

#[derive(Debug, Parser)]
#[command(name = "shiftbound", version, about = "Shifted Gershgorin and Brauer eigenvalue bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower and upper spectral bounds of a matrix.
    Bounds(BoundsArgs),
    /// Bound of `A - x·1` as a function of the shift.
    Profile(ProfileArgs),
    /// Degree-based bounds on the smallest adjacency eigenvalue.
    Graph(GraphArgs),
    /// Diagonal entries that certify positive semidefiniteness.
    Region(RegionArgs),
    /// Best shifted dominance of a row with given off-diagonal magnitudes.
    Spread(SpreadArgs),
    /// Random integer matrices: shifted Gershgorin against Brauer.
    Bench(BenchArgs),
    /// Erdos-Renyi graphs: smallest eigenvalue against the Brauer graph bound.
    Er(ErArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Gershgorin,
    Brauer,
    Melman,
    Ckv,
    ShiftedGershgorin,
    ShiftedBrauer,
    Tilde,
    All,
}

impl MethodArg {
    /// The spelling accepted on the command line.
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file, `-` for stdin.
    #[arg(long, value_name = "PATH")]
    pub file: String,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// shifted-gershgorin, shifted-brauer or tilde.
    #[arg(long, value_enum, default_value_t = MethodArg::ShiftedGershgorin)]
    pub method: MethodArg,
    /// Profile a single Brauer pair instead.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pub pair: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// gershgorin, tilde, brauer, shifted-brauer or all.
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    pub method: MethodArg,
    /// Report bounds for `A + I` (unit diagonal) instead of `A`.
    #[arg(long)]
    pub unit_diagonal: bool,
}

/// `lo:hi:steps` for a square grid or `ylo:yhi:zlo:zhi:steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec(pub Grid);

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let (ranges, steps) = parts.split_at(parts.len().saturating_sub(1));
        let steps: usize = steps
            .first()
            .and_then(|t| t.parse().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| format!("bad step count in '{s}'"))?;
        let vals = ranges
            .iter()
            .map(|t| t.parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect::<Option<Vec<f64>>>()
            .ok_or_else(|| format!("bad number in '{s}'"))?;
        let grid = match vals[..] {
            [lo, hi] => Grid::square(lo, hi, steps),
            [ylo, yhi, zlo, zhi] => Grid {
                y: (ylo, yhi),
                z: (zlo, zhi),
                steps,
            },
            _ => return Err(format!("expected lo:hi:steps or ylo:yhi:zlo:zhi:steps, got '{s}'")),
        };
        Ok(GridSpec(grid))
    }
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// The two diagonal entries treated as unknowns (`y`, `z`).
    #[arg(long, num_args = 2, value_names = ["I", "J"], default_values_t = [0, 1])]
    pub free: Vec<usize>,
    /// Rasterize membership on a grid instead of listing half-planes.
    #[arg(long, value_name = "SPEC")]
    pub grid: Option<GridSpec>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpreadArgs {
    /// Whitespace-separated nonnegative values, `-` for stdin.
    #[arg(long, value_name = "PATH")]
    pub file: String,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write per-sample records here.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Order records by the Brauer bound.
    #[arg(long)]
    pub sorted: bool,
    /// Write error scatter data here.
    #[arg(long, value_name = "PATH")]
    pub scatter: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ErArgs {
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long, default_value_t = 0.9)]
    pub p: f64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub unit_diagonal: bool,
}
