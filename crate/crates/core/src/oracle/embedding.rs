use std::sync::OnceLock;

use thiserror::Error;

use crate::repr::Representation;
use crate::topology::{are_adjacent, face_vertices, neighbors_ccw, FaceId, VertexLabel};

pub type Vec3 = [f64; 3];

const S: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Vertex coordinates in `VertexLabel::ALL` order, as produced by
/// [`Embedding3::derive`].
pub const VERTEX_TABLE: [Vec3; 6] = [
    [0.0, 0.0, S],  // 1467
    [0.0, S, 0.0],  // 1256
    [S, 0.0, 0.0],  // 1234
    [0.0, 0.0, -S], // 2358
    [0.0, -S, 0.0], // 3478
    [-S, 0.0, 0.0], // 5678
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmbeddingError {
    #[error("edge {0}-{1} has length {2}")]
    EdgeLength(VertexLabel, VertexLabel, f64),
    #[error("faces {0} and {1}: shared-edge adjacency disagrees with the topology")]
    Adjacency(FaceId, FaceId),
    #[error("face {0} is clockwise seen from outside")]
    Chirality(FaceId),
}

pub(crate) fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn scale(a: Vec3, k: f64) -> Vec3 {
    [a[0] * k, a[1] * k, a[2] * k]
}

pub(crate) fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross3(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn dist3(a: Vec3, b: Vec3) -> f64 {
    let d = sub(a, b);
    dot(d, d).sqrt()
}

fn unit(a: Vec3) -> Vec3 {
    scale(a, 1.0 / dot(a, a).sqrt())
}

/// Unit-edge octahedron in space, one coordinate triple per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding3 {
    coords: [Vec3; 6],
}

impl Embedding3 {
    /// Places F1 on the positive octant and unfolds the rest of the surface
    /// across shared edges with the octahedral dihedral angle.
    pub fn derive() -> Self {
        let mut coords: [Option<Vec3>; 6] = [None; 6];
        let f1 = face_vertices(FaceId::of(1));
        for (k, v) in f1.iter().enumerate() {
            let mut p = [0.0; 3];
            p[k] = S;
            coords[v.slot()] = Some(p);
        }
        let cos_d: f64 = -1.0 / 3.0;
        let sin_d = (1.0 - cos_d * cos_d).sqrt();
        let h = 3f64.sqrt() / 2.0;

        let mut placed = [false; 8];
        placed[0] = true;
        let mut queue = vec![FaceId::of(1)];
        while let Some(face) = queue.pop() {
            let [a, b, c] = face_vertices(face).map(|v| coords[v.slot()].expect("placed"));
            let normal = unit(cross3(sub(b, a), sub(c, a)));
            for nb in neighbors_ccw(face) {
                if placed[nb.slot()] {
                    continue;
                }
                let fv = face_vertices(face);
                let apex = face_vertices(nb)
                    .into_iter()
                    .find(|v| !fv.contains(v))
                    .expect("neighbor has one new vertex");
                let (p, q, r) = {
                    let shared: Vec<_> = fv.iter().filter(|v| face_vertices(nb).contains(v)).collect();
                    let far = fv.iter().find(|v| !shared.contains(v)).expect("triangle");
                    (
                        coords[shared[0].slot()].expect("placed"),
                        coords[shared[1].slot()].expect("placed"),
                        coords[far.slot()].expect("placed"),
                    )
                };
                let m = scale(add(p, q), 0.5);
                let u = unit(sub(r, m));
                let pos = add(m, scale(add(scale(u, cos_d), scale(normal, -sin_d)), h));
                match coords[apex.slot()] {
                    Some(old) => debug_assert!(dist3(old, pos) < 1e-12),
                    None => coords[apex.slot()] = Some(pos),
                }
                placed[nb.slot()] = true;
                queue.push(nb);
            }
        }
        Embedding3 {
            coords: coords.map(|c| c.expect("every vertex reached")),
        }
    }

    pub fn from_table() -> Self {
        Embedding3 {
            coords: VERTEX_TABLE,
        }
    }

    pub fn vertex(&self, v: VertexLabel) -> Vec3 {
        self.coords[v.slot()]
    }

    pub fn face_corners(&self, face: FaceId) -> [Vec3; 3] {
        face_vertices(face).map(|v| self.vertex(v))
    }

    /// Checks edge lengths, shared-edge adjacency and outward orientation.
    pub fn validate(&self) -> Result<(), EmbeddingError> {
        for f in FaceId::ALL {
            let vs = face_vertices(f);
            for k in 0..3 {
                let (a, b) = (vs[k], vs[(k + 1) % 3]);
                let len = dist3(self.vertex(a), self.vertex(b));
                if (len - 1.0).abs() > 1e-12 {
                    return Err(EmbeddingError::EdgeLength(a, b, len));
                }
            }
            let [a, b, c] = self.face_corners(f);
            let centroid = scale(add(add(a, b), c), 1.0 / 3.0);
            if dot(cross3(sub(b, a), sub(c, a)), centroid) <= 0.0 {
                return Err(EmbeddingError::Chirality(f));
            }
        }
        for f in FaceId::ALL {
            for g in FaceId::ALL {
                if f >= g {
                    continue;
                }
                let shared = self
                    .face_corners(f)
                    .iter()
                    .filter(|p| self.face_corners(g).iter().any(|q| dist3(**p, *q) < 1e-12))
                    .count();
                if (shared == 2) != are_adjacent(f, g) {
                    return Err(EmbeddingError::Adjacency(f, g));
                }
            }
        }
        Ok(())
    }
}

/// The validated embedding shared by the oracle.
pub fn embedding() -> &'static Embedding3 {
    static CELL: OnceLock<Embedding3> = OnceLock::new();
    CELL.get_or_init(|| {
        let e = Embedding3::derive();
        e.validate().expect("derived embedding is a unit octahedron");
        e
    })
}

/// 3D position of a surface point.
pub fn embed_3d(r: &Representation<f64>) -> Vec3 {
    let e = embedding();
    r.corners()
        .into_iter()
        .zip(r.weights())
        .fold([0.0; 3], |acc, (v, w)| add(acc, scale(e.vertex(v), w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_matches_table() {
        let d = Embedding3::derive();
        d.validate().unwrap();
        for v in VertexLabel::ALL {
            assert!(dist3(d.vertex(v), Embedding3::from_table().vertex(v)) < 1e-12, "{v}");
        }
    }

    #[test]
    fn mirrored_embedding_fails_chirality() {
        let mut e = Embedding3::from_table();
        for c in &mut e.coords {
            c[0] = -c[0];
        }
        assert!(matches!(e.validate(), Err(EmbeddingError::Chirality(_))));
    }

    #[test]
    fn corner_and_centroid() {
        let f = FaceId::of;
        let v = embed_3d(&Representation::new(f(1), f(2), 0.0, 0.0).unwrap());
        let v1234 = VertexLabel::from_faces(&[1, 2, 3, 4]).unwrap();
        assert!(dist3(v, embedding().vertex(v1234)) < 1e-15);
        let c = embed_3d(&Representation::new(f(1), f(2), 0.5, 3f64.sqrt() / 6.0).unwrap());
        let [a, b, d] = embedding().face_corners(f(1));
        let mean = scale(add(add(a, b), d), 1.0 / 3.0);
        assert!(dist3(c, mean) < 1e-15);
    }
}
