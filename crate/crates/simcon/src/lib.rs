//! Standard-library companion to `simcon-core`: a rayon-backed executor for
//! the enumeration engine, wall-clock budgets, JSON and CSV output, the
//! randomized property suites and the `simcon` command line.

pub mod cli;
pub mod engine;
pub mod json;
pub mod table;
pub mod verify;

pub use engine::{available_threads, count, run_count, RayonExecutor, RunError};
