//! Library side of the CLI: output envelopes, JSON/CSV conversion,
//! subcommand implementations and the verification suites.

pub mod commands;
pub mod convert;
pub mod envelope;
pub mod verify;
