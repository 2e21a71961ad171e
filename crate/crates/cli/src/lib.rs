//! Library side of the `loday` command: input files, reports, the
//! verification suite and the subcommands built on them.

pub mod commands;
pub mod files;
pub mod report;
pub mod suite;
