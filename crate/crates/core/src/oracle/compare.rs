use serde::Serialize;

use crate::landscape::surface_distance;
use crate::repr::SurfacePoint;

use super::{chord_3d, unfold_geodesic, MeshGraph};

/// Slack for the chord and mesh bracket.
const BRACKET_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareOptions {
    pub tolerance: f64,
    pub max_faces: usize,
    pub subdivisions: usize,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            tolerance: 1e-9,
            max_faces: 8,
            subdivisions: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub surface_distance: f64,
    pub unfold_geodesic: f64,
    pub mesh_upper_bound: f64,
    pub chord_3d: f64,
    pub fallback: bool,
    /// `|surface_distance - unfold_geodesic| <= tolerance`.
    pub matches_oracle: bool,
    /// `chord_3d <= surface_distance <= mesh_upper_bound`.
    pub bracketed: bool,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.matches_oracle && self.bracketed
    }
}

/// Checks the formula distance against every oracle. Reuse `mesh` across
/// calls; building it dominates the cost at high resolution.
pub fn compare(
    a: &SurfacePoint<f64>,
    b: &SurfacePoint<f64>,
    opts: &CompareOptions,
    mesh: &MeshGraph,
) -> CompareReport {
    debug_assert_eq!(mesh.subdivisions(), opts.subdivisions);
    let d = surface_distance(a, b);
    let oracle = unfold_geodesic(a, b, opts.max_faces);
    let upper = mesh.shortest(a, b);
    let chord = chord_3d(a, b);
    let x = d.distance;
    CompareReport {
        surface_distance: x,
        unfold_geodesic: oracle,
        mesh_upper_bound: upper,
        chord_3d: chord,
        fallback: d.fallback,
        matches_oracle: (x - oracle).abs() <= opts.tolerance,
        bracketed: chord <= x + BRACKET_SLACK && x <= upper + BRACKET_SLACK,
    }
}
