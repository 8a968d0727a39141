//! A decidable infinite-index world: ultimately periodic subsets of the
//! naturals, a fixed nonprincipal ultrafilter on them, and eventually
//! affine functions whose quotient is a nonstandard model of arithmetic.
//!
//! Everything here is exact.  An [`UPSet`] carries an explicit finite
//! prefix and a repeating residue pattern, so Boolean structure and the
//! ultrafilter decision are total functions, no approximation involved.
//! That buys executable witnesses for phenomena that finite algebras
//! cannot show at all: a countable maximal antichain the ultrafilter
//! misses, a strictly descending chain through the ultrafilter with meet
//! zero, ill-founded order in the quotient, and the failure of the
//! rectangle product to generate an ultrafilter.

pub mod func;
pub mod input;
pub mod rectangle;
pub mod ultrapower;
pub mod upset;
pub mod witness;

pub use func::{comparison_eq, comparison_lt, EAFunction};
pub use input::{eafunction_from_json, eafunction_to_json, upset_from_json, upset_to_json};
pub use rectangle::{rectangle_failure_demo, RectangleFailureReport, TriangleSet};
pub use ultrapower::{
    illfoundedness_witness, IllfoundednessReport, OrderReport, SymbolicUltrapower,
};
pub use upset::{u_membership, UPSet};
pub use witness::{witness_suite, WitnessSuite};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    /// Function values must stay inside the naturals.
    #[error("function value would be negative at n = {at}")]
    NegativeValue { at: u64 },
    /// Exception list length must equal the threshold.
    #[error("threshold {threshold} needs {threshold} exception value(s), got {got}")]
    ExceptionCount { threshold: u64, got: usize },
    /// Malformed serialized input.
    #[error("bad input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, OmegaError>;
