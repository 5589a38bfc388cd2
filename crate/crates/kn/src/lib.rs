//! Verification runs, reports and JSON formats on top of `kn-core`.

pub mod cli;
pub mod error;
pub mod json;
pub mod report;
pub mod sampling;
pub mod suite;

pub use error::{Result, ToolkitError};
