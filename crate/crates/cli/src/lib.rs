//! Command-line front end: documents, suites, corpus and reports.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod error;
pub mod field;
pub mod report;

pub use error::{CliError, Result};
