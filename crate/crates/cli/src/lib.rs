//! Experiment driver around `ccx-core`: one claim runner per geometric
//! statement, deterministic seeded sampling, and JSON/CSV/SVG/PGM
//! emission. The `ccx` binary is a thin command-line front end over
//! [`claims`].

pub mod claims;
pub mod config;
pub mod render;
pub mod report;
pub mod sampling;

pub use config::{OutputFormat, RunConfig, DEFAULT_SEED};
pub use report::ClaimReport;
