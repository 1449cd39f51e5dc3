//! Library half of the `promislow` command line: the serialized unit
//! document with its canonical JSON and text renderings, and the per-point
//! verification report shared by `verify` and `sweep`.

pub mod checks;
pub mod document;

pub use checks::{run_point, PointReport};
pub use document::{render_text, Components, Term, UnitDocument};
