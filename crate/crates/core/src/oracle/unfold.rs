use crate::repr::SurfacePoint;
use crate::topology::{enumerate_dual_paths, face_vertices, FaceId, VertexLabel};

use super::embedding::{dist3, embed_3d, embedding, Vec3};

pub type Vec2 = [f64; 2];

const EPS: f64 = 1e-9;
const SAMPLES: usize = 16;

/// A dual path laid flat, each triangle placed from 3D edge lengths alone.
#[derive(Debug, Clone, PartialEq)]
pub struct UnfoldChain {
    pub faces: Vec<FaceId>,
    pub triangles: Vec<[(VertexLabel, Vec2); 3]>,
}

fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn d2(a: Vec2, b: Vec2) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Point at distances `ra` from `a` and `rb` from `b`, on the left of `a -> b`
/// when `left` holds.
fn circle_point(a: Vec2, b: Vec2, ra: f64, rb: f64, left: bool) -> Vec2 {
    let d = d2(a, b);
    let along = (ra * ra - rb * rb + d * d) / (2.0 * d);
    let up = (ra * ra - along * along).max(0.0).sqrt();
    let (ux, uy) = ((b[0] - a[0]) / d, (b[1] - a[1]) / d);
    let sign = if left { 1.0 } else { -1.0 };
    [a[0] + along * ux - sign * up * uy, a[1] + along * uy + sign * up * ux]
}

impl UnfoldChain {
    pub fn new(faces: &[FaceId]) -> Self {
        let e = embedding();
        let first = face_vertices(faces[0]);
        let [p0, p1, p2] = first.map(|v| e.vertex(v));
        let a = [0.0, 0.0];
        let b = [dist3(p0, p1), 0.0];
        let c = circle_point(a, b, dist3(p0, p2), dist3(p1, p2), true);
        let mut triangles = vec![[(first[0], a), (first[1], b), (first[2], c)]];

        for w in faces.windows(2) {
            let prev = *triangles.last().expect("non-empty");
            let next = face_vertices(w[1]);
            let shared: Vec<(VertexLabel, Vec2)> =
                prev.iter().copied().filter(|(v, _)| next.contains(v)).collect();
            assert_eq!(shared.len(), 2, "{} and {} share an edge", w[0], w[1]);
            let far = prev
                .iter()
                .find(|(v, _)| !next.contains(v))
                .expect("triangle")
                .1;
            let apex = next
                .into_iter()
                .find(|v| shared.iter().all(|(s, _)| s != v))
                .expect("triangle");
            let (sa, sb) = (shared[0], shared[1]);
            let far_left = orient(sa.1, sb.1, far) > 0.0;
            let pos = circle_point(
                sa.1,
                sb.1,
                dist3(e.vertex(sa.0), e.vertex(apex)),
                dist3(e.vertex(sb.0), e.vertex(apex)),
                !far_left,
            );
            triangles.push([sa, sb, (apex, pos)]);
        }
        UnfoldChain {
            faces: faces.to_vec(),
            triangles,
        }
    }

    /// Planar image of a 3D point lying on face `k` of the chain.
    pub fn place(&self, k: usize, p: Vec3) -> Vec2 {
        let e = embedding();
        let tri = self.triangles[k];
        let [a, b, c] = tri.map(|(v, _)| e.vertex(v));
        // Barycentric weights from sub-triangle areas.
        let area = |x: Vec3, y: Vec3, z: Vec3| {
            let u = super::embedding::sub(y, x);
            let v = super::embedding::sub(z, x);
            let n = super::embedding::cross3(u, v);
            super::embedding::dot(n, n).sqrt()
        };
        let total = area(a, b, c);
        let wa = area(p, b, c) / total;
        let wb = area(a, p, c) / total;
        let wc = 1.0 - wa - wb;
        let [(_, pa), (_, pb), (_, pc)] = tri;
        [
            wa * pa[0] + wb * pb[0] + wc * pc[0],
            wa * pa[1] + wb * pb[1] + wc * pc[1],
        ]
    }

    fn shared_edge(&self, k: usize) -> (Vec2, Vec2) {
        let next = self.triangles[k + 1];
        let mut it = self.triangles[k]
            .iter()
            .filter(|(v, _)| next.iter().any(|(u, _)| u == v))
            .map(|&(_, p)| p);
        (it.next().expect("shared"), it.next().expect("shared"))
    }

    fn in_triangle(&self, k: usize, p: Vec2) -> bool {
        let [(_, a), (_, b), (_, c)] = self.triangles[k];
        let s = orient(a, b, c).signum();
        [orient(a, b, p), orient(b, c, p), orient(c, a, p)]
            .iter()
            .all(|o| o * s >= -EPS)
    }

    /// Whether the segment `a -> b` runs through the chain, crossing each
    /// shared edge in order and never leaving the triangles.
    pub fn contains_chord(&self, a: Vec2, b: Vec2) -> bool {
        let len = d2(a, b);
        let mut last = 0.0;
        for k in 0..self.faces.len() - 1 {
            let (p, q) = self.shared_edge(k);
            let s = if len <= EPS {
                let t = ((a[0] - p[0]) * (q[0] - p[0]) + (a[1] - p[1]) * (q[1] - p[1])) / d2(p, q).powi(2);
                let foot = [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])];
                if d2(a, foot) > EPS || !(-EPS..=1.0 + EPS).contains(&t) {
                    return false;
                }
                last
            } else {
                let (oa, ob) = (orient(p, q, a), orient(p, q, b));
                let (op, oq) = (orient(a, b, p) / len, orient(a, b, q) / len);
                if op * oq > EPS * EPS && op.abs() > EPS && oq.abs() > EPS {
                    return false;
                }
                if (oa - ob).abs() <= EPS * len {
                    // Chord parallel to the edge line; it must lie on it.
                    if oa.abs() > EPS {
                        return false;
                    }
                    let proj = |x: Vec2| ((x[0] - a[0]) * (b[0] - a[0]) + (x[1] - a[1]) * (b[1] - a[1])) / (len * len);
                    let lo = proj(p).min(proj(q)).max(last);
                    if lo > proj(p).max(proj(q)).min(1.0) + EPS {
                        return false;
                    }
                    lo
                } else {
                    let s = oa / (oa - ob);
                    if s < last - EPS || !(-EPS..=1.0 + EPS).contains(&s) {
                        return false;
                    }
                    s.max(last)
                }
            };
            last = s;
        }
        (0..SAMPLES).all(|i| {
            let s = (i as f64 + 0.5) / SAMPLES as f64;
            let x = [a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])];
            (0..self.faces.len()).any(|k| self.in_triangle(k, x))
        })
    }
}

/// Contained chord length between `a` and `b` along `faces`, if any.
/// `faces` must start on a face of `a` and end on a face of `b`.
pub fn chain_chord(faces: &[FaceId], a: &SurfacePoint<f64>, b: &SurfacePoint<f64>) -> Option<f64> {
    let chain = UnfoldChain::new(faces);
    let pa = chain.place(0, embed_3d(a.representation()));
    let pb = chain.place(faces.len() - 1, embed_3d(b.representation()));
    chain.contains_chord(pa, pb).then(|| d2(pa, pb))
}

/// Exhaustive unfolding search: the shortest contained chord over all simple
/// dual paths of at most `max_faces` faces joining a face of `a` to a face of `b`.
pub fn unfold_geodesic(a: &SurfacePoint<f64>, b: &SurfacePoint<f64>, max_faces: usize) -> f64 {
    assert!(max_faces >= 2, "max_faces must be at least 2");
    let (ea, eb) = (embed_3d(a.representation()), embed_3d(b.representation()));
    let fa = a.incident_faces();
    let fb = b.incident_faces();
    if fa.iter().any(|f| fb.contains(f)) {
        return dist3(ea, eb);
    }
    let mut best = f64::INFINITY;
    for &s in &fa {
        for &t in &fb {
            for path in enumerate_dual_paths(s, t, max_faces) {
                if let Some(len) = chain_chord(&path, a, b) {
                    best = best.min(len);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{canonicalize, Representation};

    fn pt(h: u8, s: u8, x: f64, y: f64) -> SurfacePoint<f64> {
        canonicalize(&Representation::new(FaceId::of(h), FaceId::of(s), x, y).unwrap()).unwrap()
    }

    #[test]
    fn chains_are_unit_triangles_sharing_edges() {
        let f = FaceId::of;
        for path in enumerate_dual_paths(f(1), f(8), 8) {
            let chain = UnfoldChain::new(&path);
            for tri in &chain.triangles {
                for k in 0..3 {
                    assert!((d2(tri[k].1, tri[(k + 1) % 3].1) - 1.0).abs() < 1e-12);
                }
            }
            for w in chain.triangles.windows(2) {
                let common = w[0]
                    .iter()
                    .filter(|(v, p)| w[1].iter().any(|(u, q)| u == v && d2(*p, *q) < 1e-12))
                    .count();
                assert_eq!(common, 2);
            }
        }
    }

    #[test]
    fn adjacent_witness() {
        let d = unfold_geodesic(&pt(1, 2, 0.5, 0.2), &pt(2, 1, 0.5, 0.2), 8);
        assert!((d - 0.4).abs() < 1e-12);
    }

    #[test]
    fn same_face_is_planar() {
        let d = unfold_geodesic(&pt(5, 2, 0.1, 0.1), &pt(5, 2, 0.4, 0.5), 8);
        assert!((d - 0.3f64.hypot(0.4)).abs() < 1e-12);
    }

    #[test]
    fn antipodal_vertices() {
        let d = unfold_geodesic(&pt(1, 2, 0.0, 0.0), &pt(5, 6, 0.0, 0.0), 8);
        assert!((d - 3f64.sqrt()).abs() < 1e-12);
    }
}
