//! Exact combinatorics of unipotently supported class functions on
//! `SL_n(F_q)`: Springer blocks, Kostka/Green polynomial data, generalized
//! Gelfand-Graev inner products, Lusztig-series parameter sets, almost
//! character transforms and the scalar constants attached to character
//! sheaves.
//!
//! Everything is computed in exact arithmetic: rationals are
//! arbitrary-precision, roots of unity live in cyclotomic fields
//! represented in the power basis, and half-integer powers of `q` are
//! tracked through the formal symbol `u` with `u^2 = q`.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the CLI
//! live in the companion crate `charsheaf-cli`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod almost;
pub mod exactalg;
pub mod fforacle;
pub mod gggr;
pub mod lseries;
pub mod orbits;
pub mod sheaves;
pub mod springer;

#[path = "green/mod.rs"]
pub mod green;

use core::fmt;

/// Default cap on the order of a matrix group the brute-force oracle is
/// willing to enumerate.
pub const DEFAULT_GROUP_ORDER_CAP: u64 = 1_000_000;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Sizes of two combinatorial objects do not match (e.g. a character
    /// label paired with a class of a different symmetric group).
    SizeMismatch,
    /// A requested enumeration exceeds the configured cap.
    CapExceeded { requested: u64, cap: u64 },
    /// A divisibility hypothesis fails (e.g. `t` does not divide a part).
    DivisibilityViolated,
    /// Cyclic-group orders that must agree do not.
    OrderMismatch,
    /// A multiplicity-one location test did not have a unique solution.
    UniquenessViolation,
    /// A search completed without finding the certified object.
    NoSolution,
    /// A label is malformed for the requested context.
    InvalidLabel,
    /// The finite-field tower needed is outside the supported table.
    UnsupportedField,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch => write!(f, "size mismatch"),
            Error::CapExceeded { requested, cap } => {
                write!(f, "cap exceeded: {requested} > {cap}")
            }
            Error::DivisibilityViolated => write!(f, "divisibility hypothesis violated"),
            Error::OrderMismatch => write!(f, "cyclic group order mismatch"),
            Error::UniquenessViolation => write!(f, "multiplicity-one test failed"),
            Error::NoSolution => write!(f, "no solution found"),
            Error::InvalidLabel => write!(f, "malformed label"),
            Error::UnsupportedField => write!(f, "field extension outside supported table"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
