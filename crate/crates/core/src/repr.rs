//! Surface coordinates: `(home, shared, x, y)` quadruples and the moves that
//! re-express a point without moving it.
//!
//! A representation places the home face in the plane with its edge towards
//! the shared face on the segment `(0,0)-(1,0)`, the face above it, and the
//! exterior facing the viewer. The `(0,0)` corner is therefore the start of
//! that edge when walking the home face counter-clockwise from outside.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::topology::{
    are_adjacent, edge_between, face_vertices, neighbor_slot, neighbors_ccw, CanonicalFrame,
    Chirality, FaceId, TopologyError, VertexLabel,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReprError {
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("point is not on the shared edge (y = {0})")]
    NotOnSharedEdge(f64),
    #[error("representation ({home}, {shared}) does not match frame roles ({n1}, {n2})")]
    FrameMismatch {
        home: FaceId,
        shared: FaceId,
        n1: FaceId,
        n2: FaceId,
    },
    #[error("the shared-face rotation needs a chirality-preserving frame")]
    MirroredFrame,
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

impl ReprError {
    /// Stable short name, used in machine-readable error records.
    pub fn kind(&self) -> &'static str {
        match self {
            ReprError::InvalidRepresentation(_) => "InvalidRepresentation",
            ReprError::NotOnSharedEdge(_) => "NotOnSharedEdge",
            ReprError::FrameMismatch { .. } => "FrameMismatch",
            ReprError::MirroredFrame => "MirroredFrame",
            ReprError::Topology(_) => "InvalidRepresentation",
        }
    }
}

/// A point located in its home face's local frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Representation<T> {
    home: FaceId,
    shared: FaceId,
    x: T,
    y: T,
}

/// Checks the closed-triangle constraints `y >= 0`, `y <= √3 x`, `y <= √3 (1 - x)`.
pub fn in_base_triangle<T: Scalar>(x: T, y: T) -> bool {
    let eps = T::EPS_IN;
    x.is_finite()
        && y.is_finite()
        && y >= -eps
        && y <= T::SQRT_3 * x + eps
        && y <= T::SQRT_3 * (T::one() - x) + eps
}

/// One application of the shared-face rotation to standard-position coordinates:
/// `(x, y) -> ((1 - x + √3 y) / 2, (√3 - √3 x - y) / 2)`.
#[inline]
pub fn rotate_coords<T: Scalar>(x: T, y: T) -> (T, T) {
    let s3 = T::SQRT_3;
    let h = T::half();
    ((T::one() - x + s3 * y) * h, (s3 - s3 * x - y) * h)
}

impl<T: Scalar> Representation<T> {
    pub fn new(home: FaceId, shared: FaceId, x: T, y: T) -> Result<Self, ReprError> {
        if !are_adjacent(home, shared) {
            return Err(ReprError::InvalidRepresentation(format!(
                "shared face {shared} is not adjacent to home face {home}"
            )));
        }
        if !in_base_triangle(x, y) {
            return Err(ReprError::InvalidRepresentation(format!(
                "({x}, {y}) lies outside the face triangle"
            )));
        }
        Ok(Representation { home, shared, x, y })
    }

    pub(crate) fn new_unchecked(home: FaceId, shared: FaceId, x: T, y: T) -> Self {
        debug_assert!(are_adjacent(home, shared));
        Representation { home, shared, x, y }
    }

    pub fn home(&self) -> FaceId {
        self.home
    }

    pub fn shared(&self) -> FaceId {
        self.shared
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn y(&self) -> T {
        self.y
    }

    pub fn coords(&self) -> (T, T) {
        (self.x, self.y)
    }

    /// Vertices sitting at `(0,0)`, `(1,0)` and the apex `(1/2, √3/2)`.
    pub fn corners(&self) -> [VertexLabel; 3] {
        corners_for(self.home, self.shared)
    }

    /// Barycentric weights of the point with respect to [`corners`](Self::corners).
    pub fn weights(&self) -> [T; 3] {
        let apex = self.y / T::tri_height();
        let end = self.x - apex * T::half();
        [T::one() - end - apex, end, apex]
    }

    /// Same point, shared face advanced to the next counter-clockwise neighbor.
    pub fn rotate_shared(&self) -> Self {
        let k = neighbor_slot(self.home, self.shared).expect("valid representation");
        let next = neighbors_ccw(self.home)[(k + 1) % 3];
        let (x, y) = rotate_coords(self.x, self.y);
        Representation::new_unchecked(self.home, next, x, y)
    }

    /// Re-expresses the point with `target` as shared face (0, 1 or 2 rotations).
    pub fn with_shared(&self, target: FaceId) -> Result<Self, ReprError> {
        let from = neighbor_slot(self.home, self.shared).expect("valid representation");
        let to = neighbor_slot(self.home, target)
            .ok_or(TopologyError::NotAdjacent(self.home, target))?;
        let mut r = *self;
        for _ in 0..(to + 3 - from) % 3 {
            r = r.rotate_shared();
        }
        Ok(r)
    }

    pub fn on_shared_edge(&self) -> bool {
        self.y.abs() <= T::EPS_IN
    }

    pub fn cast<U: Scalar>(&self) -> Representation<U> {
        Representation {
            home: self.home,
            shared: self.shared,
            x: U::from(self.x).expect("finite"),
            y: U::from(self.y).expect("finite"),
        }
    }
}

pub(crate) fn corners_for(home: FaceId, shared: FaceId) -> [VertexLabel; 3] {
    let (start, end) = edge_between(home, shared).expect("shared face adjacent to home");
    let apex = face_vertices(home)
        .into_iter()
        .find(|&v| v != start && v != end)
        .expect("triangle");
    [start, end, apex]
}

/// Point coordinates from barycentric weights given per vertex label.
pub(crate) fn coords_from_weights<T: Scalar>(
    home: FaceId,
    shared: FaceId,
    weights: &[(VertexLabel, T)],
) -> (T, T) {
    let c = corners_for(home, shared);
    let w = |v: VertexLabel| {
        weights
            .iter()
            .find(|(u, _)| *u == v)
            .map(|&(_, w)| w)
            .unwrap_or_else(T::zero)
    };
    let (end, apex) = (w(c[1]), w(c[2]));
    (end + apex * T::half(), apex * T::tri_height())
}

/// Shared-face rotation within a frame: `(F_n1, F_n2, x, y)` becomes `(F_n1, F_n6, ..)`.
pub fn rotate_shared_face<T: Scalar>(
    r: &Representation<T>,
    frame: &CanonicalFrame,
) -> Result<Representation<T>, ReprError> {
    if r.home != frame.face(1) || r.shared != frame.face(2) {
        return Err(ReprError::FrameMismatch {
            home: r.home,
            shared: r.shared,
            n1: frame.face(1),
            n2: frame.face(2),
        });
    }
    if frame.chirality() != Chirality::Preserving {
        return Err(ReprError::MirroredFrame);
    }
    let out = r.rotate_shared();
    debug_assert_eq!(out.shared, frame.face(6));
    Ok(out)
}

/// `(F_a, F_b, x, 0)` names the same edge point as `(F_b, F_a, 1 - x, 0)`.
pub fn flip_home_face<T: Scalar>(r: &Representation<T>) -> Result<Representation<T>, ReprError> {
    if !r.on_shared_edge() {
        return Err(ReprError::NotOnSharedEdge(r.y.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(Representation::new_unchecked(
        r.shared,
        r.home,
        T::one() - r.x,
        T::zero(),
    ))
}

/// The four `(F_a, F_b, 0, 0)` representations of a vertex, walking its face
/// cycle from the smallest incident face.
pub fn vertex_representations<T: Scalar>(v: VertexLabel) -> Vec<Representation<T>> {
    let start = v.faces()[0];
    let mut out = Vec::with_capacity(4);
    let mut face = start;
    loop {
        let corners = face_vertices(face);
        let k = corners.iter().position(|&c| c == v).expect("incident face");
        let next = neighbors_ccw(face)[k];
        out.push(Representation::new_unchecked(face, next, T::zero(), T::zero()));
        face = next;
        if face == start {
            break;
        }
    }
    debug_assert_eq!(out.len(), 4);
    out
}

/// A point of the surface held in canonical form.
///
/// The canonical representation is the lexicographically smallest
/// `(home, shared)` pair among all representations of the point, after
/// snapping barycentric weights within `EPS_IN` of an edge to zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfacePoint<T> {
    canonical: Representation<T>,
    #[serde(skip)]
    weights: [T; 3],
}

impl<T: Scalar> SurfacePoint<T> {
    pub fn new(home: FaceId, shared: FaceId, x: T, y: T) -> Result<Self, ReprError> {
        canonicalize(&Representation::new(home, shared, x, y)?)
    }

    pub fn representation(&self) -> &Representation<T> {
        &self.canonical
    }

    pub fn home(&self) -> FaceId {
        self.canonical.home
    }

    /// Snapped barycentric weights aligned with the canonical corners.
    pub fn weights(&self) -> [T; 3] {
        self.weights
    }

    /// Vertices with nonzero weight, i.e. the smallest closed cell holding the point.
    pub fn support(&self) -> Vec<(VertexLabel, T)> {
        self.canonical
            .corners()
            .into_iter()
            .zip(self.weights)
            .filter(|(_, w)| *w > T::zero())
            .collect()
    }

    /// Every face whose closed triangle contains the point, ascending.
    pub fn incident_faces(&self) -> Vec<FaceId> {
        let support: Vec<VertexLabel> = self.support().into_iter().map(|(v, _)| v).collect();
        FaceId::ALL
            .into_iter()
            .filter(|&f| support.iter().all(|v| v.contains(f)))
            .collect()
    }

    /// Coordinates of the point in the frame `(home, shared)`; `home` must be incident.
    pub fn expressed_in(&self, home: FaceId, shared: FaceId) -> Result<Representation<T>, ReprError> {
        if !self.incident_faces().contains(&home) {
            return Err(ReprError::InvalidRepresentation(format!(
                "point does not lie on face {home}"
            )));
        }
        if !are_adjacent(home, shared) {
            return Err(TopologyError::NotAdjacent(home, shared).into());
        }
        let (x, y) = coords_from_weights(home, shared, &self.support());
        Ok(Representation::new_unchecked(home, shared, x, y))
    }

    /// Same point up to the snapping tolerance.
    pub fn coincides(&self, other: &SurfacePoint<T>) -> bool {
        let a = &self.canonical;
        let b = &other.canonical;
        a.home == b.home
            && a.shared == b.shared
            && (a.x - b.x).abs() <= T::EPS_IN
            && (a.y - b.y).abs() <= T::EPS_IN
    }

    pub fn cast<U: Scalar>(&self) -> SurfacePoint<U> {
        SurfacePoint {
            canonical: self.canonical.cast(),
            weights: self.weights.map(|w| U::from(w).expect("finite")),
        }
    }
}

/// Normalizes any valid representation to the point's canonical form.
pub fn canonicalize<T: Scalar>(r: &Representation<T>) -> Result<SurfacePoint<T>, ReprError> {
    if !are_adjacent(r.home, r.shared) || !in_base_triangle(r.x, r.y) {
        return Err(ReprError::InvalidRepresentation(format!(
            "({}, {}, {}, {}) is not a valid representation",
            r.home, r.shared, r.x, r.y
        )));
    }
    let corners = r.corners();
    let raw = r.weights();
    let mut w = raw;
    // Weight times triangle height is the distance to the opposite edge.
    for wi in w.iter_mut() {
        if *wi * T::tri_height() < T::EPS_IN {
            *wi = T::zero();
        }
    }
    let total = w[0] + w[1] + w[2];
    let w = w.map(|wi| wi / total);
    let support: Vec<(VertexLabel, T)> = corners
        .into_iter()
        .zip(w)
        .filter(|(_, wi)| *wi > T::zero())
        .collect();

    let home = FaceId::ALL
        .into_iter()
        .find(|&f| support.iter().all(|(v, _)| v.contains(f)))
        .expect("the original home face always qualifies");
    let shared = neighbors_ccw(home).into_iter().min().expect("three neighbors");

    // Already canonical up to rounding: keep the input bits so that
    // canonicalizing twice is exact.
    let noise = T::epsilon() * T::lit(8.0);
    let settled = home == r.home
        && shared == r.shared
        && raw
            .iter()
            .zip(w)
            .all(|(&a, b)| b > T::zero() || a.abs() * T::tri_height() <= noise);
    let canonical = if settled {
        *r
    } else {
        let (x, y) = coords_from_weights(home, shared, &support);
        Representation::new_unchecked(home, shared, x, y)
    };
    let in_support = |v: VertexLabel| support.iter().any(|(u, _)| *u == v);
    let mut weights = canonical.weights();
    for (v, wi) in canonical.corners().into_iter().zip(weights.iter_mut()) {
        if !in_support(v) {
            *wi = T::zero();
        }
    }
    Ok(SurfacePoint { canonical, weights })
}

/// Deterministic, area-uniform points: the face is uniform over the eight, the
/// position uniform over the triangle via the fold-over map.
pub fn sample_uniform<T: Scalar>(seed: u64, count: usize) -> Vec<SurfacePoint<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let face = FaceId::of(rng.random_range(1..=8u8));
            let (mut r1, mut r2): (f64, f64) = (rng.random(), rng.random());
            if r1 + r2 > 1.0 {
                r1 = 1.0 - r1;
                r2 = 1.0 - r2;
            }
            let x = r1 + 0.5 * r2;
            let y = r2 * <f64 as Scalar>::tri_height();
            let shared = neighbors_ccw(face).into_iter().min().expect("three neighbors");
            let r = Representation::new_unchecked(face, shared, T::lit(x), T::lit(y));
            canonicalize(&r).expect("sampled point lies in the triangle")
        })
        .collect()
}

/// Planar position inside an orientation; may leave the base triangle.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct OrientedPoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> OrientedPoint<T> {
    pub fn new(x: T, y: T) -> Self {
        OrientedPoint { x, y }
    }

    pub fn distance(&self, other: &OrientedPoint<T>) -> T {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// JSON point literal, `{"home":"F3","shared":"F4","x":0.4,"y":0.3}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointLiteral {
    pub home: FaceId,
    pub shared: FaceId,
    pub x: f64,
    pub y: f64,
}

impl PointLiteral {
    pub fn to_representation<T: Scalar>(&self) -> Result<Representation<T>, ReprError> {
        Representation::new(self.home, self.shared, T::lit(self.x), T::lit(self.y))
    }

    pub fn to_point<T: Scalar>(&self) -> Result<SurfacePoint<T>, ReprError> {
        canonicalize(&self.to_representation()?)
    }
}

impl<T: Scalar> From<&Representation<T>> for PointLiteral {
    fn from(r: &Representation<T>) -> Self {
        PointLiteral {
            home: r.home,
            shared: r.shared,
            x: r.x.to_f64().expect("finite"),
            y: r.y.to_f64().expect("finite"),
        }
    }
}
