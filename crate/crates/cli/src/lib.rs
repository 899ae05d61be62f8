//! Library half of the command line front end: the JSON document format,
//! verdict structures, and command implementations. The binary in `main.rs`
//! only parses arguments and forwards here, so everything is testable in
//! process.

pub mod commands;
pub mod document;
pub mod verdict;

/// Process exit codes: 0 success, 1 a check failed on valid input, 2 the
/// input could not be read or parsed.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
