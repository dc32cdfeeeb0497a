//! Seeded comparison of the landscape distance against the oracles.

use octa_geodesic::oracle::{compare, CompareOptions, CompareReport, MeshGraph};
use octa_geodesic::{sample_uniform, topology::VertexLabel, vertex_representations, canonicalize, SurfacePoint64, WITNESS_ROWS};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidateOptions {
    pub seed: u64,
    pub count: usize,
    pub compare: CompareOptions,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: String,
    #[serde(flatten)]
    pub report: CompareReport,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub fallbacks: usize,
    pub max_oracle_error: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone)]
pub struct Validation {
    pub failures: Vec<CaseReport>,
    pub summary: Summary,
}

fn fixed_cases() -> Vec<(String, SurfacePoint64, SurfacePoint64)> {
    let mut cases: Vec<_> = WITNESS_ROWS
        .iter()
        .map(|row| {
            (
                format!("witness {}", row.landscape),
                row.p1.to_point().expect("witness rows are valid"),
                row.p2.to_point().expect("witness rows are valid"),
            )
        })
        .collect();
    let vertex = |faces: [u8; 4]| {
        let v = VertexLabel::from_faces(&faces).expect("vertex label");
        canonicalize(&vertex_representations::<f64>(v)[0]).expect("vertex")
    };
    cases.push(("antipodal vertices".into(), vertex([1, 2, 3, 4]), vertex([5, 6, 7, 8])));
    let p = WITNESS_ROWS[0].p1.to_point().expect("valid");
    cases.push(("coincident points".into(), p, p));
    cases
}

pub fn run_validation(opts: &ValidateOptions) -> Validation {
    let mesh = MeshGraph::new(opts.compare.subdivisions);
    let mut cases = fixed_cases();
    let pts = sample_uniform::<f64>(opts.seed, 2 * opts.count);
    cases.extend(
        pts.chunks(2)
            .enumerate()
            .map(|(i, w)| (format!("random {i}"), w[0], w[1])),
    );
    let reports: Vec<CaseReport> = cases
        .par_iter()
        .map(|(case, a, b)| {
            let report = compare(a, b, &opts.compare, &mesh);
            CaseReport {
                case: case.clone(),
                passed: report.passed() && !report.fallback,
                report,
            }
        })
        .collect();
    let failures: Vec<CaseReport> = reports.iter().filter(|r| !r.passed).cloned().collect();
    let summary = Summary {
        seed: opts.seed,
        checked: reports.len(),
        passed: reports.len() - failures.len(),
        failed: failures.len(),
        fallbacks: reports.iter().filter(|r| r.report.fallback).count(),
        max_oracle_error: reports
            .iter()
            .map(|r| (r.report.surface_distance - r.report.unfold_geodesic).abs())
            .fold(0.0, f64::max),
        tolerance: opts.compare.tolerance,
    };
    Validation { failures, summary }
}
