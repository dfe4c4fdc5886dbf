//! Exact arithmetic and symmetric-group character machinery.

pub mod chars;
pub mod cyclo;
pub mod partition;

pub use chars::{
    extended_char_value, restriction_multiplicity, sn_char_value, CharTable, ExtendedCharLabel,
    SnCharLabel,
};
pub use cyclo::{CycLaurent, Cyclotomic, LaurentFraction, Rat};
pub use partition::{Multipartition, Partition};

/// The conjugate partition (see [`Partition::dual`]).
pub fn dual_partition(p: &Partition) -> Partition {
    p.dual()
}

/// `n(lambda) = sum (i-1) lambda_i`.
pub fn b_invariant(p: &Partition) -> u64 {
    p.b_invariant()
}
