//! File formats, reports, the regression corpus and the command-line front end for
//! [`morphic_core`].

pub mod cli;
pub mod corpus;
pub mod format;
pub mod report;
