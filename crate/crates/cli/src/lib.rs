//! Command-line front end for `spsw-core`: surface documents, reports and
//! the example reproduction harness.

pub mod app;
pub mod document;
pub mod error;
pub mod json;
pub mod report;
pub mod reproduce;

pub use app::{run, Outcome};
pub use error::CliError;
