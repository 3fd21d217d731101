//! File formats for the command-line front end: DIMACS graphs and
//! canonical JSON certificates.

pub mod certificate;
pub mod format;
