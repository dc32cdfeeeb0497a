//! Combinatorial model of the octahedron as labeled on its fixed net.
//!
//! Faces are `F1..F8`; each vertex is named by the set of four faces that
//! meet at it. The net lays the faces out with their exterior towards the
//! viewer, so every counter-clockwise order below is "counter-clockwise as
//! seen from outside the solid".

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("face index {0} is outside 1..=8")]
    InvalidFace(i64),
    #[error("cannot parse face label {0:?}")]
    BadFaceLabel(String),
    #[error("{0:?} is not one of the six octahedron vertices")]
    InvalidVertex(Vec<u8>),
    #[error("faces {0} and {1} are not adjacent")]
    NotAdjacent(FaceId, FaceId),
    #[error("origin and destination are both {0}")]
    SameFace(FaceId),
    #[error("role assignment {0:?} violates the frame invariants")]
    InvalidFrame([u8; 8]),
    #[error("topology table inconsistency: {0}")]
    Inconsistent(String),
}

/// One of the eight faces `F1..F8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceId(u8);

impl FaceId {
    pub const ALL: [FaceId; 8] = [
        FaceId(1),
        FaceId(2),
        FaceId(3),
        FaceId(4),
        FaceId(5),
        FaceId(6),
        FaceId(7),
        FaceId(8),
    ];

    pub fn new(index: u8) -> Result<Self, TopologyError> {
        if (1..=8).contains(&index) {
            Ok(FaceId(index))
        } else {
            Err(TopologyError::InvalidFace(index as i64))
        }
    }

    /// Panics on an index outside `1..=8`; for literals in tests and tables.
    pub const fn of(index: u8) -> Self {
        assert!(index >= 1 && index <= 8);
        FaceId(index)
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    pub(crate) const fn slot(self) -> usize {
        (self.0 - 1) as usize
    }

    /// Opposite faces have indices summing to 9.
    pub const fn opposite(self) -> FaceId {
        FaceId(9 - self.0)
    }

    const fn bit(self) -> u8 {
        1 << (self.0 - 1)
    }
}

impl fmt::Debug for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl FromStr for FaceId {
    type Err = TopologyError;

    /// Accepts `"F3"`, `"f3"` or a bare `"3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix(['F', 'f']).unwrap_or(s);
        let index: i64 = digits
            .parse()
            .map_err(|_| TopologyError::BadFaceLabel(s.to_string()))?;
        u8::try_from(index)
            .map_err(|_| TopologyError::InvalidFace(index))
            .and_then(FaceId::new)
    }
}

impl Serialize for FaceId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FaceId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vertex, named by the four faces incident to it. Stored as a face bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel(u8);

const fn mask4(a: u8, b: u8, c: u8, d: u8) -> u8 {
    (1 << (a - 1)) | (1 << (b - 1)) | (1 << (c - 1)) | (1 << (d - 1))
}

const V1467: VertexLabel = VertexLabel(mask4(1, 4, 6, 7));
const V1256: VertexLabel = VertexLabel(mask4(1, 2, 5, 6));
const V1234: VertexLabel = VertexLabel(mask4(1, 2, 3, 4));
const V2358: VertexLabel = VertexLabel(mask4(2, 3, 5, 8));
const V3478: VertexLabel = VertexLabel(mask4(3, 4, 7, 8));
const V5678: VertexLabel = VertexLabel(mask4(5, 6, 7, 8));

impl VertexLabel {
    /// The six vertices, in the order they are listed alongside the net.
    pub const ALL: [VertexLabel; 6] = [V1467, V1256, V1234, V2358, V3478, V5678];

    pub fn from_faces(faces: &[u8]) -> Result<Self, TopologyError> {
        let invalid = || TopologyError::InvalidVertex(faces.to_vec());
        let mut mask = 0u8;
        for &f in faces {
            let bit = FaceId::new(f).map_err(|_| invalid())?.bit();
            if mask & bit != 0 {
                return Err(invalid());
            }
            mask |= bit;
        }
        Self::ALL
            .iter()
            .copied()
            .find(|v| v.0 == mask)
            .ok_or_else(invalid)
    }

    pub fn contains(self, face: FaceId) -> bool {
        self.0 & face.bit() != 0
    }

    /// Incident faces in ascending index order.
    pub fn faces(self) -> [FaceId; 4] {
        let mut out = [FaceId(1); 4];
        let mut k = 0;
        for f in FaceId::ALL {
            if self.contains(f) {
                out[k] = f;
                k += 1;
            }
        }
        debug_assert_eq!(k, 4);
        out
    }

    pub fn face_indices(self) -> [u8; 4] {
        self.faces().map(FaceId::index)
    }

    pub(crate) fn slot(self) -> usize {
        Self::ALL
            .iter()
            .position(|&v| v == self)
            .expect("vertex labels are only constructed from the table")
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.face_indices().cmp(&other.face_indices())
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.face_indices();
        write!(f, "{{{a},{b},{c},{d}}}")
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.face_indices().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let faces = Vec::<u8>::deserialize(deserializer)?;
        VertexLabel::from_faces(&faces).map_err(serde::de::Error::custom)
    }
}

/// Corners of each face, counter-clockwise seen from outside, read off the net.
const FACE_VERTICES: [[VertexLabel; 3]; 8] = [
    [V1234, V1256, V1467], // F1
    [V2358, V1256, V1234], // F2
    [V2358, V1234, V3478], // F3
    [V1234, V1467, V3478], // F4
    [V1256, V2358, V5678], // F5
    [V1256, V5678, V1467], // F6
    [V5678, V3478, V1467], // F7
    [V2358, V3478, V5678], // F8
];

/// Neighbor `k` shares the directed edge `FACE_VERTICES[f][k] -> FACE_VERTICES[f][k+1]`.
const NEIGHBORS_CCW: [[u8; 3]; 8] = [
    [2, 6, 4], // F1
    [5, 1, 3], // F2
    [2, 4, 8], // F3
    [1, 7, 3], // F4
    [2, 8, 6], // F5
    [5, 7, 1], // F6
    [8, 4, 6], // F7
    [3, 7, 5], // F8
];

/// Corners of `face`, counter-clockwise seen from outside.
pub fn face_vertices(face: FaceId) -> [VertexLabel; 3] {
    FACE_VERTICES[face.slot()]
}

/// Neighbors of `face` in counter-clockwise order (seen from outside).
pub fn neighbors_ccw(face: FaceId) -> [FaceId; 3] {
    NEIGHBORS_CCW[face.slot()].map(FaceId)
}

pub fn are_adjacent(a: FaceId, b: FaceId) -> bool {
    neighbors_ccw(a).contains(&b)
}

/// Position of `neighbor` in the counter-clockwise neighbor list of `face`.
pub fn neighbor_slot(face: FaceId, neighbor: FaceId) -> Option<usize> {
    neighbors_ccw(face).iter().position(|&g| g == neighbor)
}

/// Shared edge of two adjacent faces, directed counter-clockwise around `a`.
pub fn edge_between(a: FaceId, b: FaceId) -> Option<(VertexLabel, VertexLabel)> {
    let k = neighbor_slot(a, b)?;
    let v = face_vertices(a);
    Some((v[k], v[(k + 1) % 3]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FaceRelation {
    Same,
    Adjacent,
    NeitherAdjacentNorOpposite,
    Opposite,
}

pub fn relation(a: FaceId, b: FaceId) -> FaceRelation {
    if a == b {
        FaceRelation::Same
    } else if a.opposite() == b {
        FaceRelation::Opposite
    } else if are_adjacent(a, b) {
        FaceRelation::Adjacent
    } else {
        FaceRelation::NeitherAdjacentNorOpposite
    }
}

/// Whether a role relabeling keeps or reverses the rotational sense of the net.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chirality {
    /// `n2, n6, n4` run counter-clockwise about `n1`, as `F2, F6, F4` do about `F1`.
    Preserving,
    /// The mirror image: `n2, n4, n6` run counter-clockwise about `n1`.
    Mirrored,
}

/// Assignment of the generic roles `n1..n8` to concrete faces.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalFrame {
    roles: [FaceId; 8],
    chirality: Chirality,
}

impl CanonicalFrame {
    pub const IDENTITY: CanonicalFrame = CanonicalFrame {
        roles: FaceId::ALL,
        chirality: Chirality::Preserving,
    };

    /// The unique frame of the given chirality with `n1 = origin`, `n2 = second`.
    pub fn new(
        origin: FaceId,
        second: FaceId,
        chirality: Chirality,
    ) -> Result<Self, TopologyError> {
        let k = neighbor_slot(origin, second).ok_or(TopologyError::NotAdjacent(origin, second))?;
        let around = neighbors_ccw(origin);
        let next = around[(k + 1) % 3];
        let last = around[(k + 2) % 3];
        let (n4, n6) = match chirality {
            Chirality::Preserving => (last, next),
            Chirality::Mirrored => (next, last),
        };
        let roles = [
            origin,
            second,
            n6.opposite(),
            n4,
            n4.opposite(),
            n6,
            second.opposite(),
            origin.opposite(),
        ];
        Ok(CanonicalFrame { roles, chirality })
    }

    /// Builds a frame from an explicit role tuple, checking both invariants.
    pub fn from_roles(roles: [u8; 8], chirality: Chirality) -> Result<Self, TopologyError> {
        let faces = roles
            .iter()
            .map(|&r| FaceId::new(r))
            .collect::<Result<Vec<_>, _>>()?;
        let frame = CanonicalFrame {
            roles: faces.try_into().expect("eight roles"),
            chirality,
        };
        if frame.satisfies_invariants() {
            Ok(frame)
        } else {
            Err(TopologyError::InvalidFrame(roles))
        }
    }

    /// All 24 frames of one chirality, in ascending role-tuple order.
    pub fn enumerate(chirality: Chirality) -> Vec<CanonicalFrame> {
        let mut out: Vec<_> = FaceId::ALL
            .iter()
            .flat_map(|&o| {
                neighbors_ccw(o)
                    .into_iter()
                    .map(move |s| CanonicalFrame::new(o, s, chirality).expect("neighbor"))
            })
            .collect();
        out.sort_by_key(|f| f.role_indices());
        out
    }

    /// Face playing role `n_k`; `k` is 1-based as in the formulas.
    pub fn face(&self, k: usize) -> FaceId {
        self.roles[k - 1]
    }

    pub fn origin(&self) -> FaceId {
        self.roles[0]
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    /// 1-based role of `face` in this frame.
    pub fn role_of(&self, face: FaceId) -> usize {
        self.roles.iter().position(|&f| f == face).expect("frame is a bijection") + 1
    }

    pub fn role_indices(&self) -> [u8; 8] {
        self.roles.map(FaceId::index)
    }

    /// Same origin, with the old `n6` promoted to `n2`: one step of the
    /// shared-face rotation about the origin face.
    pub fn advanced(&self) -> CanonicalFrame {
        CanonicalFrame::new(self.face(1), self.face(6), self.chirality)
            .expect("n6 is adjacent to n1")
    }

    /// Opposite roles sum to 9, and `n2, n4, n6` sit about `n1` in the rotational
    /// sense required by the chirality.
    pub fn satisfies_invariants(&self) -> bool {
        let mut seen = 0u8;
        for f in self.roles {
            seen |= f.bit();
        }
        if seen != 0xff {
            return false;
        }
        if (1..=8).any(|b| self.face(b).opposite() != self.face(9 - b)) {
            return false;
        }
        let Some(k) = neighbor_slot(self.face(1), self.face(2)) else {
            return false;
        };
        let around = neighbors_ccw(self.face(1));
        let (next, last) = (around[(k + 1) % 3], around[(k + 2) % 3]);
        match self.chirality {
            Chirality::Preserving => next == self.face(6) && last == self.face(4),
            Chirality::Mirrored => next == self.face(4) && last == self.face(6),
        }
    }
}

impl fmt::Debug for CanonicalFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalFrame({:?}, {:?})", self.role_indices(), self.chirality)
    }
}

/// A frame picked for an ordered face pair, plus how far `p1`'s shared face
/// must be rotated to reach the frame's `n2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameChoice {
    pub frame: CanonicalFrame,
    pub relation: FaceRelation,
    /// Number of shared-face rotations (0, 1 or 2) taking `shared_a` to `n2`.
    pub rotations: u8,
}

/// Role that the destination face takes for each relation.
pub fn destination_role(rel: FaceRelation) -> Option<usize> {
    match rel {
        FaceRelation::Same => None,
        FaceRelation::Adjacent => Some(2),
        FaceRelation::NeitherAdjacentNorOpposite => Some(5),
        FaceRelation::Opposite => Some(8),
    }
}

/// Chirality-preserving frame with `n1 = a` and `b` in the role its relation
/// dictates (`n2`, `n5` or `n8`); ties go to the smallest role tuple.
pub fn canonical_frame(a: FaceId, shared_a: FaceId, b: FaceId) -> Result<FrameChoice, TopologyError> {
    canonical_frame_with(a, shared_a, b, Chirality::Preserving)
}

pub fn canonical_frame_with(
    a: FaceId,
    shared_a: FaceId,
    b: FaceId,
    chirality: Chirality,
) -> Result<FrameChoice, TopologyError> {
    if a == b {
        return Err(TopologyError::SameFace(a));
    }
    let from = neighbor_slot(a, shared_a).ok_or(TopologyError::NotAdjacent(a, shared_a))?;
    let rel = relation(a, b);
    let role = destination_role(rel).expect("distinct faces");
    let frame = neighbors_ccw(a)
        .into_iter()
        .map(|s| CanonicalFrame::new(a, s, chirality).expect("neighbor"))
        .filter(|f| f.face(role) == b)
        .min_by_key(|f| f.role_indices())
        .expect("every ordered pair of distinct faces has a frame");
    let to = neighbor_slot(a, frame.face(2)).expect("n2 adjacent to n1");
    let rotations = ((to + 3 - from) % 3) as u8;
    Ok(FrameChoice { frame, relation: rel, rotations })
}

/// Every simple path of 2..=`max_len` faces in the face-adjacency graph from
/// `from` to `to`, sorted lexicographically by face index.
pub fn enumerate_dual_paths(from: FaceId, to: FaceId, max_len: usize) -> Vec<Vec<FaceId>> {
    fn walk(path: &mut Vec<FaceId>, to: FaceId, max_len: usize, out: &mut Vec<Vec<FaceId>>) {
        let last = *path.last().expect("non-empty");
        if last == to {
            if path.len() >= 2 {
                out.push(path.clone());
            }
            return;
        }
        if path.len() == max_len {
            return;
        }
        let mut next = neighbors_ccw(last);
        next.sort();
        for g in next {
            if !path.contains(&g) {
                path.push(g);
                walk(path, to, max_len, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    if from == to || max_len < 2 {
        return out;
    }
    walk(&mut vec![from], to, max_len, &mut out);
    out
}

/// Serializable dump of the topology tables, for documentation tooling.
#[derive(Debug, Clone, Serialize)]
pub struct TopologyTable {
    pub faces: Vec<FaceEntry>,
    pub vertices: Vec<VertexLabel>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceEntry {
    pub face: FaceId,
    pub opposite: FaceId,
    pub vertices_ccw: [VertexLabel; 3],
    pub neighbors_ccw: [FaceId; 3],
}

pub fn table() -> TopologyTable {
    TopologyTable {
        faces: FaceId::ALL
            .iter()
            .map(|&face| FaceEntry {
                face,
                opposite: face.opposite(),
                vertices_ccw: face_vertices(face),
                neighbors_ccw: neighbors_ccw(face),
            })
            .collect(),
        vertices: VertexLabel::ALL.to_vec(),
    }
}

/// Cross-checks the transcribed tables against the vertex incidence sets.
pub fn verify_tables() -> Result<(), TopologyError> {
    let bad = |msg: String| Err(TopologyError::Inconsistent(msg));
    for f in FaceId::ALL {
        let corners = face_vertices(f);
        let incident: Vec<_> = VertexLabel::ALL.iter().filter(|v| v.contains(f)).collect();
        if incident.len() != 3 || corners.iter().any(|c| !c.contains(f)) {
            return bad(format!("{f} corners disagree with vertex labels"));
        }
        for (k, g) in neighbors_ccw(f).into_iter().enumerate() {
            let (p, q) = (corners[k], corners[(k + 1) % 3]);
            if !(p.contains(g) && q.contains(g)) {
                return bad(format!("{f} edge {k} is not shared with {g}"));
            }
            // A consistently oriented surface walks every edge once in each direction.
            if edge_between(g, f) != Some((q, p)) {
                return bad(format!("edge {f}|{g} has inconsistent orientation"));
            }
        }
        for g in FaceId::ALL {
            let shared = VertexLabel::ALL
                .iter()
                .filter(|v| v.contains(f) && v.contains(g))
                .count();
            if (f != g && shared == 2) != are_adjacent(f, g) {
                return bad(format!("adjacency of {f},{g} disagrees with shared vertices"));
            }
            if (shared == 0) != (g == f.opposite()) {
                return bad(format!("{f},{g} opposite rule fails"));
            }
        }
    }
    Ok(())
}
