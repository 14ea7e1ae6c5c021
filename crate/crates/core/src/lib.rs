//! Classical and shift-improved eigenvalue bounds for real symmetric
//! matrices.
//!
//! Every bound here holds for the matrix `A - x·1` for any scalar `x`, where
//! `1` is the all-ones matrix. Because `1` is positive semidefinite, a lower
//! bound on `A - x·1` with `x >= 0` is also a lower bound on `A`, and the
//! library searches for the shift that makes it largest.
//!
//! ```
//! use shiftbound::{shifted_gersh_lower, gershgorin_bounds, SymmetricMatrix};
//!
//! let a = SymmetricMatrix::from_rows(&[[6.0, 5.0, 5.0], [5.0, 6.0, 5.0], [5.0, 5.0, 6.0]]).unwrap();
//! assert_eq!(gershgorin_bounds(&a).lower, -4.0);
//! let s = shifted_gersh_lower(&a);
//! assert_eq!((s.value, s.x_star), (1.0, 5.0));
//! ```

pub mod brauer_shift;
pub mod classic;
pub mod eigen;
pub mod envelope;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod shifted;

pub use brauer_shift::{
    f_pair, f_pair_rows, pair_min, shifted_brauer_lower, shifted_brauer_upper, tilde_lines,
    tilde_shifted_lower, BrauerShiftResult,
};
pub use classic::{
    brauer_bounds, ckv_bounds, ckv_bounds_best_singleton, ckv_region_contains, gershgorin_bounds,
    melman_bounds, melman_region_contains, BoundReport, Method, Witness,
};
pub use eigen::{eigen_decomposition, eigen_oracle, EigenDecomposition, Spectrum};
pub use envelope::{LinearEnvelope, Line, Sense, ShiftedBound};
pub use error::{Error, Result};
pub use graph::{
    adjacency, brauer_graph_lower, er_experiment, gersh_graph_lower, pair_gersh_graph_lower,
    DegreeSummary, GraphBound, GraphCase, UndirectedGraph,
};
pub use io::{format_number, parse_graph, parse_matrix};
pub use matrix::SymmetricMatrix;
pub use shifted::{
    closed_form_lower, d_lower, d_upper, local_improvement_lower, lower_lines, pd_certify,
    pd_window, profile_lower, region_halfplanes_3x3, region_raster, shifted_gersh_lower,
    shifted_gersh_upper, spread_extremes, spread_sup, upper_lines,
};
