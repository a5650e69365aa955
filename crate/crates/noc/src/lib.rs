//! File formats, table reproduction and the command line for
//! [`noc_core`].

pub mod cli;
pub mod format;
pub mod tables;
