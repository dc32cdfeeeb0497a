//! SVG drawing of the fixed octahedron net with a trail on top.

use std::fmt::Write as _;

use octa_geodesic::topology::face_vertices;
use octa_geodesic::{FaceId, OrientedPoint, TrailResult64};

const H: f64 = 0.866_025_403_784_438_6;
const MARGIN: f64 = 0.25;

// Net points, unit edge, y up.
const A: [f64; 2] = [0.0, 0.0];
const B: [f64; 2] = [1.0, 0.0];
const C: [f64; 2] = [2.0, 0.0];
const D: [f64; 2] = [2.5, H];
const E: [f64; 2] = [3.0, 0.0];
const G: [f64; 2] = [3.5, -H];
const HH: [f64; 2] = [2.5, -H];
const I: [f64; 2] = [1.5, -H];
const J: [f64; 2] = [1.0, -2.0 * H];
const K: [f64; 2] = [0.5, -H];

/// Net corners of each face, in the order of `face_vertices`.
pub const NET_FACES: [[[f64; 2]; 3]; 8] = [
    [K, I, B],
    [J, I, K],
    [HH, G, E],
    [K, B, A],
    [I, HH, C],
    [I, C, B],
    [C, E, D],
    [HH, E, C],
];

pub fn net_face(face: FaceId) -> [[f64; 2]; 3] {
    NET_FACES[face.index() as usize - 1]
}

const MIN_X: f64 = 0.0;
const MAX_X: f64 = 3.5;
const MIN_Y: f64 = -2.0 * H;
const MAX_Y: f64 = H;

/// Maps a point of the trail's landscape layout onto the net copy of `face`.
fn to_net(trail: &TrailResult64, face: FaceId, p: OrientedPoint<f64>) -> [f64; 2] {
    let placed = trail
        .layout
        .iter()
        .find(|pf| pf.face == face)
        .expect("segment face is in the layout");
    let w = placed.weights_of(p);
    let net = net_face(face);
    let order = face_vertices(face);
    let mut out = [0.0, 0.0];
    for ((v, _), wi) in placed.corners.iter().zip(w) {
        let k = order.iter().position(|u| u == v).expect("vertex of face");
        out[0] += wi * net[k][0];
        out[1] += wi * net[k][1];
    }
    out
}

/// Net-plane segments of the trail, one per face crossed.
pub fn net_segments(trail: &TrailResult64) -> Vec<(FaceId, [f64; 2], [f64; 2])> {
    trail
        .segments()
        .into_iter()
        .map(|(f, p, q)| (f, to_net(trail, f, p), to_net(trail, f, q)))
        .collect()
}

struct Canvas {
    scale: f64,
}

impl Canvas {
    fn x(&self, p: [f64; 2]) -> f64 {
        (p[0] - MIN_X + MARGIN) * self.scale
    }

    fn y(&self, p: [f64; 2]) -> f64 {
        (MAX_Y - p[1] + MARGIN) * self.scale
    }

    fn pt(&self, p: [f64; 2]) -> String {
        format!("{:.3},{:.3}", self.x(p), self.y(p))
    }
}

/// Renders the net and the trail. Output depends only on the inputs.
pub fn render_svg(trail: &TrailResult64, scale: f64) -> String {
    let c = Canvas { scale };
    let width = (MAX_X - MIN_X + 2.0 * MARGIN) * scale;
    let height = (MAX_Y - MIN_Y + 2.0 * MARGIN) * scale;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(s, r##"<g class="net" fill="none" stroke="#444" stroke-width="1">"##);
    for face in FaceId::ALL {
        let [a, b, d] = net_face(face);
        let _ = writeln!(
            s,
            r#"<polygon id="{face}" points="{} {} {}"/>"#,
            c.pt(a),
            c.pt(b),
            c.pt(d)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g class="labels" font-family="sans-serif" font-size="{:.3}" text-anchor="middle" fill="#444">"##,
        0.18 * scale
    );
    for face in FaceId::ALL {
        let [a, b, d] = net_face(face);
        let m = [(a[0] + b[0] + d[0]) / 3.0, (a[1] + b[1] + d[1]) / 3.0];
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}">{face}</text>"#, c.x(m), c.y(m));
    }
    let _ = writeln!(s, "</g>");

    let segments = net_segments(trail);
    let mut d = String::new();
    for (_, p, q) in &segments {
        if !d.is_empty() {
            d.push(' ');
        }
        let _ = write!(d, "M{} L{}", c.pt(*p), c.pt(*q));
    }
    let _ = writeln!(
        s,
        r##"<path class="trail" fill="none" stroke="#c0392b" stroke-width="2" d="{d}"/>"##
    );
    if let (Some(first), Some(last)) = (segments.first(), segments.last()) {
        for p in [first.1, last.2] {
            let _ = writeln!(
                s,
                r##"<circle class="point" cx="{:.3}" cy="{:.3}" r="{:.3}" fill="#2c3e50"/>"##,
                c.x(p),
                c.y(p),
                0.04 * scale
            );
        }
    }
    let _ = writeln!(s, "</svg>");
    s
}
