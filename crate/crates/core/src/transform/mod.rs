//! Proof transformations on checked derivations.
//!
//! Every operation here is a total function on valid inputs: given a
//! derivation that checks in its stated source calculus, it produces a
//! derivation of the stated endsequent that checks in the stated target
//! calculus. The checker is the oracle; the test-suites re-check every
//! output.

mod core_extract;
mod equality;
mod invert;
mod schema_util;
mod separate;
mod structural;
mod weaken;

pub use core_extract::atomic_core;
pub use equality::{eq_contract, eq_cut, normalize_repl, EmptyNormalizer, EqNormalizer};
pub use invert::invert;
pub use separate::{separate, separate_cutcs, separate_r_inference};
pub use structural::{
    eliminate_structural, expand_structural, identity_derivation, RNormalizer,
};
pub use weaken::{substitute_derivation, weaken, weaken_to, Side};

use crate::calculus::{Calculus, Derivation};
use crate::syntax::Fresh;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    /// The input violates the operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The input is valid but outside the shapes the transformation can
    /// handle (e.g. zero-premiss schemas, exotic schema/flavor pairs).
    #[error("unsupported input: {0}")]
    Unsupported(String),
    /// The lexicographic termination measure of the cut separation
    /// failed to decrease; indicates a kernel bug.
    #[error("termination metric did not decrease: {0}")]
    Metric(String),
    /// Internal invariant failure; indicates a kernel bug.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub(crate) type TResult = Result<Derivation, TransformError>;

/// Shared state threaded through a transformation run: the calculus and
/// the deterministic fresh-parameter counter.
pub(crate) struct Ctx<'a> {
    pub cal: &'a Calculus,
    pub fresh: Fresh,
}

impl<'a> Ctx<'a> {
    pub fn new(cal: &'a Calculus) -> Ctx<'a> {
        Ctx { cal, fresh: Fresh::new() }
    }
}
