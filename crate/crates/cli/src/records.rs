//! JSON-lines records: parsing queries and shaping results.

use octa_geodesic::{
    shortest_path, surface_distance, FaceId, FaceRelation, LandscapeId, PointLiteral, SurfacePoint64,
    TrailResult64, VertexLabel,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Deserialize)]
pub struct QueryRecord {
    pub p1: PointLiteral,
    pub p2: PointLiteral,
    #[serde(default)]
    pub id: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub error: ErrorBody,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DistanceRecord {
    pub distance: f64,
    pub argmin: Vec<LandscapeId>,
    pub relation: FaceRelation,
    pub fallback: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossingRecord {
    pub edge: [VertexLabel; 2],
    pub t: f64,
    pub point: [f64; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct PathRecord {
    pub distance: f64,
    pub landscape: Option<LandscapeId>,
    pub faces: Vec<FaceId>,
    pub start: [f64; 2],
    pub end: [f64; 2],
    pub crossings: Vec<CrossingRecord>,
    pub contained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
}

impl PathRecord {
    pub fn new(distance: f64, trail: &TrailResult64, id: Option<String>) -> Self {
        PathRecord {
            distance,
            landscape: trail.landscape.as_ref().map(|l| l.id),
            faces: trail.faces.clone(),
            start: [trail.start.x, trail.start.y],
            end: [trail.end.x, trail.end.y],
            crossings: trail
                .crossings
                .iter()
                .map(|c| CrossingRecord {
                    edge: [c.edge.0, c.edge.1],
                    t: c.t,
                    point: [c.point.x, c.point.y],
                })
                .collect(),
            contained: trail.contained,
            id,
        }
    }
}

/// A parsed query with both points canonicalized.
#[derive(Debug, Clone)]
pub struct Query {
    pub a: SurfacePoint64,
    pub b: SurfacePoint64,
    pub id: Option<String>,
}

/// Parses one input line. `line` is 1-based and only used for error records.
pub fn parse_query(text: &str, line: usize) -> Result<Query, ErrorRecord> {
    let record: QueryRecord = serde_json::from_str(text).map_err(|e| ErrorRecord {
        error: ErrorBody {
            kind: "MalformedRecord",
            line,
            message: e.to_string(),
        },
        id: serde_json::from_str::<serde_json::Value>(text)
            .ok()
            .and_then(|v| v.get("id")?.as_str().map(str::to_owned)),
    })?;
    let invalid = |e: octa_geodesic::ReprError| ErrorRecord {
        error: ErrorBody {
            kind: e.kind(),
            line,
            message: e.to_string(),
        },
        id: record.id.clone(),
    };
    let a = record.p1.to_point().map_err(invalid)?;
    let b = record.p2.to_point().map_err(invalid)?;
    Ok(Query { a, b, id: record.id })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Distance,
    Path,
}

/// Output of a batch run: one JSON line per non-blank input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Batch {
    pub lines: Vec<String>,
    pub errors: usize,
}

fn answer(mode: Mode, q: Query) -> String {
    let d = surface_distance(&q.a, &q.b);
    let out = match mode {
        Mode::Distance => serde_json::to_string(&DistanceRecord {
            distance: d.distance,
            argmin: d.argmin,
            relation: d.relation,
            fallback: d.fallback,
            id: q.id,
        }),
        Mode::Path => serde_json::to_string(&PathRecord::new(d.distance, &d.trail, q.id)),
    };
    out.expect("records serialize")
}

/// Answers every query line in parallel, keeping input order. Blank lines
/// are skipped.
pub fn run_batch(input: &str, mode: Mode) -> Batch {
    let work: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    let results: Vec<Result<String, String>> = work
        .par_iter()
        .map(|&(line, text)| match parse_query(text, line) {
            Ok(q) => Ok(answer(mode, q)),
            Err(e) => Err(serde_json::to_string(&e).expect("records serialize")),
        })
        .collect();
    let errors = results.iter().filter(|r| r.is_err()).count();
    Batch {
        lines: results.into_iter().map(|r| r.unwrap_or_else(|e| e)).collect(),
        errors,
    }
}

/// Distance of the shortest trail for a parsed query, used by `render`.
pub fn trail_for(q: &Query) -> TrailResult64 {
    shortest_path(&q.a, &q.b)
}
