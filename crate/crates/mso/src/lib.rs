//! File formats, report serialization and threaded searches on top of
//! `mso-core`, plus the `mso` command-line front end.

pub mod cli;
pub mod decimal;
pub mod dot;
pub mod edgelist;
pub mod error;
pub mod graph6;
pub mod input;
pub mod report;
pub mod sample;
pub mod search;
pub mod specs;
pub mod suites;

pub use error::{MsoError, Result};
