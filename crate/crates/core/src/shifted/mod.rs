//! Bounds obtained by subtracting a multiple of the all-ones matrix before
//! applying Gershgorin, with their positive-definiteness and spread
//! consequences.

mod gershgorin;
mod region;
mod spread;

pub use gershgorin::{
    closed_form_lower, d_lower, d_upper, envelope_sup, improves_on_gershgorin,
    local_improvement_lower, local_improvement_upper, lower_lines, min_dominance, profile_lower,
    row_intercepts, shifted_gersh_lower, shifted_gersh_upper, shifted_gershgorin_report,
    upper_lines,
};
pub(crate) use gershgorin::deltas;
pub use region::{
    certify_definiteness, pd_certify, pd_window, raster_csv, region_halfplanes_3x3, region_raster,
    Definiteness, Grid, HalfPlane, HalfPlaneRegion, PdWindow, RasterPoint,
};
pub use spread::{spread_extremes, spread_sup};
