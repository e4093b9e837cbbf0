//! File formats, rendering and the command-line front end for `actop-core`.

pub mod cli;
pub mod file;
pub mod render;
mod suites;

pub use suites::verify_all;
