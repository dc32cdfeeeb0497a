//! Batch front end for the octahedron geodesic engine.

pub mod records;
pub mod render;
pub mod validate;

pub use records::{parse_query, run_batch, Batch, Mode, Query, QueryRecord};
pub use render::render_svg;
pub use validate::{run_validation, ValidateOptions, Validation};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// I/O failure, or a validation run with failing cases.
    pub const FAILURE: i32 = 1;
    /// At least one malformed or invalid input record.
    pub const BAD_RECORD: i32 = 2;
}
