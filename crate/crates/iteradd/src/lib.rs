//! Parsers, report formats and the verification suites behind the
//! `iteradd` command line tool.

pub mod format;
pub mod parse;
pub mod report;
pub mod verify;
