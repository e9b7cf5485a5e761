//! Command-line front end for `mrba-core`: expression parsing, rendering,
//! and the seeded property suites.

pub mod command;
pub mod parse;
pub mod serialize;
pub mod suites;

pub use command::{eval_command, Outcome};
pub use parse::{parse, parse_in, ParseError};
