use crate::repr::SurfacePoint;
use crate::topology::{face_vertices, FaceId, VertexLabel};

use super::embedding::{add, dist3, embed_3d, embedding, scale, sub, Vec3};

/// Surface graph on the boundary lattice points of a subdivided octahedron.
///
/// Any two nodes on a common face are joined by their straight segment, so
/// every graph path is a surface path and the search only discretizes where
/// a path crosses an edge.
#[derive(Debug, Clone)]
pub struct MeshGraph {
    subdivisions: usize,
    nodes: Vec<Vec3>,
    node_faces: Vec<Vec<usize>>,
    face_nodes: [Vec<usize>; 8],
}

impl MeshGraph {
    pub fn new(subdivisions: usize) -> Self {
        assert!(subdivisions >= 1, "subdivisions must be at least 1");
        let e = embedding();
        let mut nodes = Vec::new();
        let mut node_faces = Vec::new();
        let mut face_nodes: [Vec<usize>; 8] = Default::default();
        let faces_of = |vs: &[VertexLabel]| -> Vec<usize> {
            FaceId::ALL
                .iter()
                .filter(|f| vs.iter().all(|v| v.contains(**f)))
                .map(|f| f.index() as usize - 1)
                .collect()
        };
        let mut push = |p: Vec3, faces: Vec<usize>, nodes: &mut Vec<Vec3>| {
            let id = nodes.len();
            nodes.push(p);
            for &f in &faces {
                face_nodes[f].push(id);
            }
            node_faces.push(faces);
        };

        for v in VertexLabel::ALL {
            push(e.vertex(v), faces_of(&[v]), &mut nodes);
        }
        let mut edges: Vec<(VertexLabel, VertexLabel)> = Vec::new();
        for f in FaceId::ALL {
            let vs = face_vertices(f);
            for k in 0..3 {
                let (a, b) = (vs[k].min(vs[(k + 1) % 3]), vs[k].max(vs[(k + 1) % 3]));
                if !edges.contains(&(a, b)) {
                    edges.push((a, b));
                }
            }
        }
        for (a, b) in edges {
            let (pa, pb) = (e.vertex(a), e.vertex(b));
            for i in 1..subdivisions {
                let t = i as f64 / subdivisions as f64;
                push(add(pa, scale(sub(pb, pa), t)), faces_of(&[a, b]), &mut nodes);
            }
        }
        MeshGraph {
            subdivisions,
            nodes,
            node_faces,
            face_nodes,
        }
    }

    pub fn subdivisions(&self) -> usize {
        self.subdivisions
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Shortest graph path from `a` to `b`, with both points joined to every
    /// node of their incident faces.
    pub fn shortest(&self, a: &SurfacePoint<f64>, b: &SurfacePoint<f64>) -> f64 {
        if a.coincides(b) {
            return 0.0;
        }
        let n = self.nodes.len();
        let (src, dst) = (n, n + 1);
        let pos = |i: usize, extra: &[Vec3; 2]| if i < n { self.nodes[i] } else { extra[i - n] };
        let extra = [embed_3d(a.representation()), embed_3d(b.representation())];
        let slot = |f: FaceId| f.index() as usize - 1;
        let extra_faces: [Vec<usize>; 2] = [
            a.incident_faces().into_iter().map(slot).collect(),
            b.incident_faces().into_iter().map(slot).collect(),
        ];

        let mut dist = vec![f64::INFINITY; n + 2];
        let mut done = vec![false; n + 2];
        dist[src] = 0.0;
        loop {
            let mut u = usize::MAX;
            let mut best = f64::INFINITY;
            for (i, &d) in dist.iter().enumerate() {
                if !done[i] && d < best {
                    best = d;
                    u = i;
                }
            }
            if u == usize::MAX || u == dst {
                break;
            }
            done[u] = true;
            let pu = pos(u, &extra);
            let faces = if u < n { &self.node_faces[u] } else { &extra_faces[u - n] };
            for &f in faces {
                let members = self.face_nodes[f].iter().copied().chain(
                    (0..2).filter(|&k| extra_faces[k].contains(&f)).map(|k| n + k),
                );
                for v in members {
                    if done[v] {
                        continue;
                    }
                    let cand = best + dist3(pu, pos(v, &extra));
                    if cand < dist[v] {
                        dist[v] = cand;
                    }
                }
            }
        }
        dist[dst]
    }
}

/// Upper bound on the geodesic distance from a subdivided surface graph.
pub fn mesh_upper_bound(a: &SurfacePoint<f64>, b: &SurfacePoint<f64>, subdivisions: usize) -> f64 {
    MeshGraph::new(subdivisions).shortest(a, b)
}
