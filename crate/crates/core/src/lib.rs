//! Geodesic distances on the surface of the regular octahedron.
//!
//! Points are given in face-local coordinates (see [`Representation`]).
//! Distances come from a small set of closed-form unfoldings, the
//! *landscapes*, and are cross-checked by the [`oracle`] module.

pub mod landscape;
pub mod oracle;
pub mod repr;
pub mod scalar;
pub mod topology;
pub mod witness;

pub use landscape::{
    shortest_path, surface_distance, trail_crossings, trail_length, unfold_path, Crossing,
    DistanceResult, LandscapeError, LandscapeId, LandscapeInstance, PlacedFace, TrailResult,
};
pub use repr::{
    canonicalize, flip_home_face, rotate_shared_face, sample_uniform, vertex_representations,
    OrientedPoint, PointLiteral, ReprError, Representation, SurfacePoint,
};
pub use scalar::Scalar;
pub use witness::{WitnessRow, WITNESS_ROWS};
pub use topology::{
    canonical_frame, relation, CanonicalFrame, Chirality, FaceId, FaceRelation, TopologyError,
    VertexLabel,
};

pub type Representation64 = Representation<f64>;
pub type Representation32 = Representation<f32>;
pub type SurfacePoint64 = SurfacePoint<f64>;
pub type SurfacePoint32 = SurfacePoint<f32>;
pub type TrailResult64 = TrailResult<f64>;
pub type TrailResult32 = TrailResult<f32>;
pub type DistanceResult64 = DistanceResult<f64>;
pub type DistanceResult32 = DistanceResult<f32>;
