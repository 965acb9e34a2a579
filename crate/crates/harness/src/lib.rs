//! Example builders, seeded generators, lemma checks, fuzz campaigns and the `gradelie` CLI.

pub mod analyze;
pub mod checks;
pub mod cli;
pub mod document;
pub mod examples;
pub mod fuzz;
pub mod generate;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("input error {0}")]
    Input(#[from] document::DocError),
    #[error(transparent)]
    Core(#[from] gradelie_core::Error),
    #[error("structure mismatch: {0}")]
    Structure(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}
