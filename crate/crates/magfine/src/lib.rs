//! Exact-arithmetic workbench for the free magmatic algebra on planar
//! binary trees.
//!
//! The free magmatic algebra has the planar binary trees as its basis and
//! grafting as its product. On top of the product lives a coassociative
//! coproduct obtained by splitting trees between consecutive leaves, and
//! the interplay between the two is rich enough to pin down the space of
//! primitive elements exactly: its dimensions are the Fine numbers
//! `1, 0, 1, 2, 6, 18, 57, 186, ...`. Everything here is computed over
//! exact rationals; there is no floating point anywhere in the crate.
//!
//! The pieces:
//!
//! * [`trees`] — enumeration, grafting and splitting of planar binary
//!   trees, plus the labeled trees without unary or binary vertices that
//!   index the primitive operations.
//! * [`magma`] — sparse rational elements of the free magmatic algebra,
//!   the associator, and the higher primitive operations built from it.
//! * [`coalgebra`] — the reduced and full coproducts, the coradical
//!   filtration, the projection idempotent onto primitives, and the
//!   decomposition of every element into right combs of primitives.
//! * [`primitives`] — exact kernel and rank computations on multilinear
//!   components, exhibiting the Fine-number dimensions.
//! * [`series`] — truncated power series over the rationals and the
//!   generating-function identities tying the counts together.
//! * [`report`] — the machine-readable check reports behind the `magfine`
//!   binary.
//!
//! Each capability has a runnable example under `examples/`; start with
//! `cargo run --example enumerate_trees`.

pub mod coalgebra;
pub mod magma;
pub mod primitives;
pub mod report;
pub mod sample;
pub mod series;
pub mod trees;

use num::BigRational;
use thiserror::Error;

pub use coalgebra::TensorElement;
pub use magma::{MagElement, Term};
pub use primitives::{ExactMatrix, MultilinearBasis};
pub use series::{SeriesKind, TruncatedSeries};
pub use trees::{BinaryTree, FineTree};

/// Errors reported by the fallible operations of this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("expected a positive number of leaves")]
    ZeroLeaves,
    #[error("split position {position} out of range for a tree with {leaves} leaves")]
    SplitOutOfRange { position: usize, leaves: usize },
    #[error("malformed tree code at byte {position}: {reason}")]
    MalformedCode { position: usize, reason: String },
    #[error("expected a nonempty argument list")]
    EmptyArguments,
    #[error("no operation with arity {arity} and slot {slot}: need arity >= 3 and 1 <= slot <= arity-2")]
    MuOutOfRange { arity: usize, slot: usize },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("word of length {word} cannot label a tree with {leaves} leaves")]
    WordLength { word: usize, leaves: usize },
    #[error("vertex of arity {arity} with label {label}: need arity >= 3 and 1 <= label <= arity-2")]
    BadVertex { arity: usize, label: usize },
    #[error("element has a unit component; only augmentation-ideal elements are accepted")]
    UnitComponent,
    #[error("series interpretation mismatch ({left} vs {right})")]
    KindMismatch {
        left: SeriesKind,
        right: SeriesKind,
    },
    #[error("series has constant term {found}, expected {expected}")]
    ConstantTerm { expected: String, found: String },
    #[error("series cannot be reverted: the coefficient of x must be nonzero")]
    NotRevertible,
    #[error("coefficient of x^{index} is {value} where an integer was expected")]
    NonIntegerCoefficient { index: usize, value: String },
    #[error("truncation order {order} too small for this check (need at least {min})")]
    OrderTooSmall { order: usize, min: usize },
}

/// The exact rational `n`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// The exact rational `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_transfer_between_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<BinaryTree>();
        assert_send_sync::<FineTree>();
        assert_send_sync::<Term>();
        assert_send_sync::<MagElement>();
        assert_send_sync::<TensorElement>();
        assert_send_sync::<TruncatedSeries>();
        assert_send_sync::<ExactMatrix>();
        assert_send_sync::<Error>();
    }

    #[test]
    fn rational_helpers() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(rat(3) + ratio(1, 2), ratio(7, 2));
    }
}
