//! Point pairs for which each landscape is the unique shortest route.
//!
//! Given in the identity frame, where role `n_k` is face `F_k`.

use crate::landscape::LandscapeId;
use crate::repr::PointLiteral;
use crate::topology::FaceId;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessRow {
    pub landscape: LandscapeId,
    pub p1: PointLiteral,
    pub p2: PointLiteral,
}

const fn lit(home: u8, shared: u8, x: f64, y: f64) -> PointLiteral {
    PointLiteral {
        home: FaceId::of(home),
        shared: FaceId::of(shared),
        x,
        y,
    }
}

const fn row(id: usize, p1: PointLiteral, p2: PointLiteral) -> WitnessRow {
    WitnessRow {
        landscape: LandscapeId::ALL[id - 1],
        p1,
        p2,
    }
}

pub const WITNESS_ROWS: [WitnessRow; 9] = [
    row(1, lit(1, 2, 0.5, 0.2), lit(2, 1, 0.5, 0.2)),
    row(2, lit(1, 2, 0.5, 0.1), lit(5, 6, 0.8, 0.1)),
    row(3, lit(1, 2, 0.8, 0.1), lit(5, 6, 0.5, 0.1)),
    row(4, lit(1, 2, 0.9, 1.0 / 6.0), lit(8, 7, 0.9, 1.0 / 6.0)),
    row(5, lit(1, 2, 0.1, 0.1), lit(8, 7, 0.4, 2.0 / 3.0)),
    row(6, lit(1, 2, 0.4, 2.0 / 3.0), lit(8, 7, 0.1, 0.1)),
    row(7, lit(1, 2, 0.6, 2.0 / 3.0), lit(8, 7, 0.9, 0.1)),
    row(8, lit(1, 2, 0.9, 0.1), lit(8, 7, 0.6, 2.0 / 3.0)),
    row(9, lit(1, 2, 0.1, 1.0 / 6.0), lit(8, 7, 0.1, 1.0 / 6.0)),
];
