//! File formats, the command-line driver and the acceptance suite for
//! `spectope-core`.

pub mod acceptance;
pub mod cli;
pub mod data;
pub mod io;
