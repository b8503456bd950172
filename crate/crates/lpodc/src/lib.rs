//! Command-line layer over `lpodc-core`: a thread-pool executor, seeded
//! random programs, cross-checks and report rendering.

pub mod check;
pub mod cli;
pub mod gen;
pub mod pool;
pub mod report;
