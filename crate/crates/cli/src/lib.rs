//! File formats, sweeps and the command-line front end for `bzinfo-core`.

pub mod cli;
pub mod formats;
pub mod sweep;
