//! Command-line front end for `assoform-core`: JSON reports, seeded random
//! inputs and the verification suites behind `assoform verify`.

pub mod commands;
pub mod report;
pub mod sample;
pub mod suites;

pub use report::{Report, Status};
pub use sample::Sampler;
pub use suites::Suite;
