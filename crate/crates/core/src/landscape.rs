//! The nine landscapes, their trail lengths, and the surface distance.
//!
//! Every landscape is described by the roles its faces play in a
//! [`CanonicalFrame`]. Lengths are computed two ways: [`trail_length`]
//! evaluates the closed-form expression for the landscape, while
//! [`trail_crossings`] unfolds the faces into the plane and intersects the
//! chord with each fold edge. The second route also decides containment.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::repr::{corners_for, OrientedPoint, ReprError, Representation, SurfacePoint};
use crate::scalar::Scalar;
use crate::topology::{
    canonical_frame, edge_between, face_vertices, relation, CanonicalFrame, Chirality, FaceId,
    FaceRelation, VertexLabel,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LandscapeError {
    #[error("landscape {id} does not apply to faces that are {relation:?}")]
    WrongRelation { id: LandscapeId, relation: FaceRelation },
    #[error("point on {found} where landscape {id} expects face {expected}")]
    FrameMismatch {
        id: LandscapeId,
        expected: FaceId,
        found: FaceId,
    },
    #[error("landscape {0} assumes a chirality-preserving frame")]
    ChiralityMismatch(LandscapeId),
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// One of the valid landscapes `L1..L9`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LandscapeId(u8);

// Role sequences of the dual paths, origin first.
const ROLE_PATHS: [&[usize]; 9] = [
    &[1, 2],
    &[1, 2, 5],
    &[1, 6, 5],
    &[1, 6, 5, 8],
    &[1, 2, 3, 8],
    &[1, 4, 7, 8],
    &[1, 6, 7, 8],
    &[1, 2, 5, 8],
    &[1, 4, 3, 8],
];

impl LandscapeId {
    pub const ALL: [LandscapeId; 9] = [
        LandscapeId(1),
        LandscapeId(2),
        LandscapeId(3),
        LandscapeId(4),
        LandscapeId(5),
        LandscapeId(6),
        LandscapeId(7),
        LandscapeId(8),
        LandscapeId(9),
    ];

    pub fn new(index: u8) -> Option<Self> {
        (1..=9).contains(&index).then_some(LandscapeId(index))
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    pub fn relation(self) -> FaceRelation {
        match self.0 {
            1 => FaceRelation::Adjacent,
            2 | 3 => FaceRelation::NeitherAdjacentNorOpposite,
            _ => FaceRelation::Opposite,
        }
    }

    /// Landscapes whose minimum gives the distance for a face relation.
    pub fn for_relation(rel: FaceRelation) -> &'static [LandscapeId] {
        match rel {
            FaceRelation::Same => &[],
            FaceRelation::Adjacent => &Self::ALL[0..1],
            FaceRelation::NeitherAdjacentNorOpposite => &Self::ALL[1..3],
            FaceRelation::Opposite => &Self::ALL[3..9],
        }
    }

    pub fn role_path(self) -> &'static [usize] {
        ROLE_PATHS[(self.0 - 1) as usize]
    }

    /// Role of the destination face: `n2`, `n5` or `n8`.
    pub fn destination_role(self) -> usize {
        *self.role_path().last().expect("non-empty")
    }

    /// Shared face the closed form expects for the destination point.
    pub fn destination_shared_role(self) -> usize {
        match self.0 {
            1 => 1,
            2 | 3 => 6,
            _ => 7,
        }
    }

    /// Chirality of the frame the closed form was derived in.
    pub fn chirality(self) -> Chirality {
        Chirality::Preserving
    }
}

impl fmt::Debug for LandscapeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

impl fmt::Display for LandscapeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.0)
    }
}

impl FromStr for LandscapeId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix(['L', 'l'])
            .and_then(|d| d.parse::<u8>().ok())
            .and_then(LandscapeId::new)
            .ok_or_else(|| format!("bad landscape label {s:?}"))
    }
}

impl Serialize for LandscapeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LandscapeId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A landscape bound to concrete faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LandscapeInstance {
    pub id: LandscapeId,
    pub frame: CanonicalFrame,
    pub dual_path: Vec<FaceId>,
}

impl LandscapeInstance {
    pub fn new(id: LandscapeId, frame: CanonicalFrame) -> Self {
        let dual_path = id.role_path().iter().map(|&r| frame.face(r)).collect();
        LandscapeInstance { id, frame, dual_path }
    }
}

/// Where a trail passes from one face of its landscape into the next.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing<T> {
    /// Fold edge, directed counter-clockwise around the face being left.
    pub edge: (VertexLabel, VertexLabel),
    pub point: OrientedPoint<T>,
    /// Position along `edge`, 0 at its first vertex.
    pub t: T,
}

/// A face of an unfolded landscape with its corners in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlacedFace<T> {
    pub face: FaceId,
    pub corners: [(VertexLabel, OrientedPoint<T>); 3],
}

impl<T: Scalar> PlacedFace<T> {
    fn position(&self, v: VertexLabel) -> OrientedPoint<T> {
        self.corners
            .iter()
            .find(|(u, _)| *u == v)
            .map(|&(_, p)| p)
            .expect("vertex belongs to the placed face")
    }

    /// Planar image of a point given in this face's local representation.
    pub fn place(&self, r: &Representation<T>) -> OrientedPoint<T> {
        debug_assert_eq!(r.home(), self.face);
        let mut out = OrientedPoint::new(T::zero(), T::zero());
        for (v, w) in r.corners().into_iter().zip(r.weights()) {
            let p = self.position(v);
            out.x = out.x + w * p.x;
            out.y = out.y + w * p.y;
        }
        out
    }

    /// Barycentric weights of a planar point with respect to `corners`.
    pub fn weights_of(&self, p: OrientedPoint<T>) -> [T; 3] {
        let [a, b, c] = self.corners.map(|(_, q)| q);
        let det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
        let wb = ((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / det;
        let wc = ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / det;
        [T::one() - wb - wc, wb, wc]
    }
}

/// A straight trail drawn in an unfolded landscape.
#[derive(Debug, Clone, PartialEq)]
pub struct TrailResult<T> {
    /// `None` for same-face and coincident pairs.
    pub landscape: Option<LandscapeInstance>,
    pub faces: Vec<FaceId>,
    pub start: OrientedPoint<T>,
    pub end: OrientedPoint<T>,
    pub layout: Vec<PlacedFace<T>>,
    /// One per fold edge when contained; when not, the crossings found before
    /// the chord left the landscape.
    pub crossings: Vec<Crossing<T>>,
    pub contained: bool,
    chord: T,
}

impl<T: Scalar> TrailResult<T> {
    /// Trail length, or `None` when the chord leaves the landscape.
    pub fn length(&self) -> Option<T> {
        self.contained.then_some(self.chord)
    }

    /// Planar chord length regardless of containment.
    pub fn chord_length(&self) -> T {
        self.chord
    }

    /// Trail pieces per face, as planar segments in landscape order.
    pub fn segments(&self) -> Vec<(FaceId, OrientedPoint<T>, OrientedPoint<T>)> {
        let mut stops = vec![self.start];
        stops.extend(self.crossings.iter().map(|c| c.point));
        stops.push(self.end);
        self.faces
            .iter()
            .zip(stops.windows(2))
            .map(|(&f, w)| (f, w[0], w[1]))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult<T> {
    pub distance: T,
    /// Every minimizing landscape, ascending; empty for same-face pairs.
    pub argmin: Vec<LandscapeId>,
    /// Trail of the first minimizer.
    pub trail: TrailResult<T>,
    /// Set when no candidate trail was contained and the unfiltered minimum
    /// was used instead.
    pub fallback: bool,
    pub relation: FaceRelation,
}

fn check_inputs<T: Scalar>(
    id: LandscapeId,
    p1: &Representation<T>,
    p2: &Representation<T>,
    frame: &CanonicalFrame,
) -> Result<(Representation<T>, Representation<T>), LandscapeError> {
    let rel = relation(p1.home(), p2.home());
    if rel != id.relation() {
        return Err(LandscapeError::WrongRelation { id, relation: rel });
    }
    if frame.chirality() != id.chirality() {
        return Err(LandscapeError::ChiralityMismatch(id));
    }
    for (expected, found) in [
        (frame.face(1), p1.home()),
        (frame.face(id.destination_role()), p2.home()),
    ] {
        if expected != found {
            return Err(LandscapeError::FrameMismatch { id, expected, found });
        }
    }
    let q1 = p1.with_shared(frame.face(2))?;
    let q2 = p2.with_shared(frame.face(id.destination_shared_role()))?;
    Ok((q1, q2))
}

/// Closed-form trail length. `p1 = (F_n1, F_n2, x1, y1)`, and `p2` is
/// `(F_n2, F_n1, ..)` for L1, `(F_n5, F_n6, ..)` for L2/L3 and
/// `(F_n8, F_n7, ..)` for L4..L9.
fn closed_form<T: Scalar>(id: LandscapeId, x1: T, y1: T, x2: T, y2: T) -> T {
    let s3 = T::SQRT_3;
    let one = T::one();
    let two = T::two();
    let h = T::half();
    // p1 after one and two shared-face rotations.
    let u1 = (one - x1 + s3 * y1) * h;
    let v1 = (s3 - s3 * x1 - y1) * h;
    let uu1 = (two - x1 - s3 * y1) * h;
    let vv1 = (s3 * x1 - y1) * h;
    let (dx, dy) = match id.index() {
        1 => (x1 + x2 - one, y1 + y2),
        2 => (u1 - x2 + one, v1 - y2),
        3 => (
            x1 - one - (one - x2 + s3 * y2) * h,
            y1 - (s3 - s3 * x2 - y2) * h,
        ),
        4 => (
            uu1 - (-two + x2 + s3 * y2) * h,
            vv1 - (two * s3 - s3 * x2 + y2) * h,
        ),
        5 => (u1 + x2, v1 + y2 - s3),
        6 => (
            x1 - (-one + x2 - s3 * y2) * h,
            y1 - (s3 * x2 + y2 + s3) * h,
        ),
        7 => (
            x1 - (two + x2 + s3 * y2) * h,
            y1 - (-s3 * x2 + y2 + two * s3) * h,
        ),
        8 => (uu1 + x2 - two, vv1 + y2 - s3),
        9 => (
            u1 - (T::lit(3.0) + x2 - s3 * y2) * h,
            v1 - (s3 + s3 * x2 + y2) * h,
        ),
        _ => unreachable!("landscape ids are 1..=9"),
    };
    dx.hypot(dy)
}

/// Closed-form length of the trail from `p1` to `p2` in landscape `id`.
///
/// `p1` must lie on the frame's `n1` and `p2` on the landscape's destination
/// role; either may use any shared face, they are rotated as needed. No
/// containment check is made.
pub fn trail_length<T: Scalar>(
    id: LandscapeId,
    p1: &Representation<T>,
    p2: &Representation<T>,
    frame: &CanonicalFrame,
) -> Result<T, LandscapeError> {
    let (q1, q2) = check_inputs(id, p1, p2, frame)?;
    Ok(closed_form(id, q1.x(), q1.y(), q2.x(), q2.y()))
}

/// Unfolds `path` into the plane, starting with `path[0]` in standard
/// position for the shared face `first_shared`.
pub fn unfold_path<T: Scalar>(path: &[FaceId], first_shared: FaceId) -> Vec<PlacedFace<T>> {
    let base = corners_for(path[0], first_shared);
    let first = PlacedFace {
        face: path[0],
        corners: [
            (base[0], OrientedPoint::new(T::zero(), T::zero())),
            (base[1], OrientedPoint::new(T::one(), T::zero())),
            (base[2], OrientedPoint::new(T::half(), T::tri_height())),
        ],
    };
    let mut out = vec![first];
    for w in path.windows(2) {
        let prev = *out.last().expect("non-empty");
        let (p, q) = edge_between(w[0], w[1]).expect("consecutive faces are adjacent");
        let (pp, pq) = (prev.position(p), prev.position(q));
        let far = prev
            .corners
            .iter()
            .find(|(v, _)| *v != p && *v != q)
            .expect("triangle")
            .1;
        let apex = face_vertices(w[1])
            .into_iter()
            .find(|&v| v != p && v != q)
            .expect("triangle");
        // Equilateral neighbors: the far corner mirrors through the edge midpoint.
        let placed = OrientedPoint::new(pp.x + pq.x - far.x, pp.y + pq.y - far.y);
        out.push(PlacedFace {
            face: w[1],
            corners: [(q, pq), (p, pp), (apex, placed)],
        });
    }
    out
}

fn cross<T: Scalar>(ax: T, ay: T, bx: T, by: T) -> T {
    ax * by - ay * bx
}

/// Intersects the chord `start -> end` with every fold edge of `layout`.
/// Returns the crossings found and whether the chord stays in the landscape.
pub(crate) fn cross_folds<T: Scalar>(
    layout: &[PlacedFace<T>],
    start: OrientedPoint<T>,
    end: OrientedPoint<T>,
) -> (Vec<Crossing<T>>, bool) {
    let eps = T::EPS_IN;
    let (zero, one) = (T::zero(), T::one());
    let (dx, dy) = (end.x - start.x, end.y - start.y);
    let len = dx.hypot(dy);
    let mut crossings = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut last_s = zero;

    for w in layout.windows(2) {
        let (u, v) = edge_between(w[0].face, w[1].face).expect("adjacent");
        let (a, b) = (w[0].position(u), w[0].position(v));
        let (ex, ey) = (b.x - a.x, b.y - a.y);
        let (rx, ry) = (a.x - start.x, a.y - start.y);
        let den = cross(dx, dy, ex, ey);

        let hit = if den.abs() > eps * len.max(eps) {
            let s = cross(rx, ry, ex, ey) / den;
            let t = cross(rx, ry, dx, dy) / den;
            (s >= last_s - eps && s <= one + eps && t >= -eps && t <= one + eps).then_some((s, t))
        } else if cross(ex, ey, -rx, -ry).abs() > eps {
            // Parallel to the edge line without touching it.
            None
        } else if len <= eps {
            // Degenerate chord sitting on the edge line.
            let t = -(rx * ex + ry * ey);
            (t >= -eps && t <= one + eps).then_some((last_s, t))
        } else {
            // Chord runs along the edge line: take the first shared point.
            let l2 = len * len;
            let sa = (rx * dx + ry * dy) / l2;
            let sb = ((b.x - start.x) * dx + (b.y - start.y) * dy) / l2;
            let lo = sa.min(sb).max(last_s);
            let hi = sa.max(sb).min(one);
            (lo <= hi + eps).then(|| {
                let px = start.x + lo * dx - a.x;
                let py = start.y + lo * dy - a.y;
                (lo, px * ex + py * ey)
            })
        };

        let Some((s, t)) = hit else {
            return (crossings, false);
        };
        let s = s.max(last_s).min(one);
        let t = t.max(zero).min(one);
        last_s = s;
        crossings.push(Crossing {
            edge: (u, v),
            point: OrientedPoint::new(a.x + t * ex, a.y + t * ey),
            t,
        });
    }
    (crossings, true)
}

fn planar_trail<T: Scalar>(
    landscape: Option<LandscapeInstance>,
    path: Vec<FaceId>,
    q1: &Representation<T>,
    q2: &Representation<T>,
) -> TrailResult<T> {
    let layout = unfold_path::<T>(&path, q1.shared());
    let start = layout[0].place(q1);
    let end = layout.last().expect("non-empty").place(q2);
    let (crossings, contained) = cross_folds(&layout, start, end);
    TrailResult {
        landscape,
        faces: path,
        start,
        end,
        layout,
        crossings,
        contained,
        chord: start.distance(&end),
    }
}

/// Lays out landscape `id` in the orientation `(L, F_n1, F_n2)` and draws the
/// chord from `p1` to `p2`, reporting its fold-edge crossings.
pub fn trail_crossings<T: Scalar>(
    id: LandscapeId,
    p1: &Representation<T>,
    p2: &Representation<T>,
    frame: &CanonicalFrame,
) -> Result<TrailResult<T>, LandscapeError> {
    let (q1, q2) = check_inputs(id, p1, p2, frame)?;
    let instance = LandscapeInstance::new(id, *frame);
    let path = instance.dual_path.clone();
    Ok(planar_trail(Some(instance), path, &q1, &q2))
}

fn single_face_trail<T: Scalar>(a: &SurfacePoint<T>, b: &SurfacePoint<T>) -> TrailResult<T> {
    let ra = *a.representation();
    let rb = b
        .expressed_in(ra.home(), ra.shared())
        .expect("both points lie on the home face");
    planar_trail(None, vec![ra.home()], &ra, &rb)
}

/// Geodesic distance between two surface points.
///
/// Same-face pairs use the planar distance inside the face; otherwise the
/// minimum over the landscapes for the faces' relation, counting only
/// contained trails.
pub fn surface_distance<T: Scalar>(a: &SurfacePoint<T>, b: &SurfacePoint<T>) -> DistanceResult<T> {
    let rel = relation(a.home(), b.home());
    if a.coincides(b) || rel == FaceRelation::Same {
        let trail = single_face_trail(a, b);
        let distance = if a.coincides(b) { T::zero() } else { trail.chord };
        return DistanceResult {
            distance,
            argmin: Vec::new(),
            trail,
            fallback: false,
            relation: rel,
        };
    }

    let (p1, p2) = (a.representation(), b.representation());
    let frame = canonical_frame(p1.home(), p1.shared(), p2.home())
        .expect("distinct faces and a valid shared face")
        .frame;
    let candidates: Vec<(LandscapeId, T, TrailResult<T>)> = LandscapeId::for_relation(rel)
        .iter()
        .map(|&id| {
            let len = trail_length(id, p1, p2, &frame).expect("frame matches the pair");
            let trail = trail_crossings(id, p1, p2, &frame).expect("frame matches the pair");
            (id, len, trail)
        })
        .collect();

    let fallback = !candidates.iter().any(|(_, _, t)| t.contained);
    let pool = || {
        candidates
            .iter()
            .filter(move |(_, _, t)| fallback || t.contained)
    };
    let best = pool()
        .map(|(_, len, _)| *len)
        .fold(T::infinity(), T::min);
    let argmin: Vec<LandscapeId> = pool()
        .filter(|(_, len, _)| *len <= best + T::TIE_EPS)
        .map(|(id, _, _)| *id)
        .collect();
    let trail = candidates
        .iter()
        .find(|(id, _, _)| *id == argmin[0])
        .map(|(_, _, t)| t.clone())
        .expect("argmin is non-empty");

    DistanceResult {
        distance: best,
        argmin,
        trail,
        fallback,
        relation: rel,
    }
}

/// The trail realizing [`surface_distance`].
pub fn shortest_path<T: Scalar>(a: &SurfacePoint<T>, b: &SurfacePoint<T>) -> TrailResult<T> {
    surface_distance(a, b).trail
}
