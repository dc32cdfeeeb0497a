//! Independent ground truth for the landscape formulas.
//!
//! Nothing here evaluates the closed forms: distances come from a 3D
//! embedding, exhaustive unfolding of dual paths, and a graph search.

mod compare;
mod embedding;
mod mesh;
mod unfold;

pub use compare::{compare, CompareOptions, CompareReport};
pub use embedding::{dist3, embed_3d, embedding, Embedding3, EmbeddingError, Vec3, VERTEX_TABLE};
pub use mesh::{mesh_upper_bound, MeshGraph};
pub use unfold::{chain_chord, unfold_geodesic, UnfoldChain, Vec2};

/// Straight-line distance in space between two surface points.
pub fn chord_3d(a: &crate::repr::SurfacePoint<f64>, b: &crate::repr::SurfacePoint<f64>) -> f64 {
    dist3(embed_3d(a.representation()), embed_3d(b.representation()))
}
