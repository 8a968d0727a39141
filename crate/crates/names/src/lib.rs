//! Set-theoretic names over a finite Boolean algebra.
//!
//! A [`Name`] is a finite set of pairs (subname, algebra element).  The
//! atomic values of membership, equality, and inclusion between names are
//! computed by the standard double recursion ([`atomic`]); formula values
//! are delegated to the `fol` evaluation recursion over a finite
//! [`NamePool`] that stands in for the proper class of all names.
//!
//! The ground universe is hereditarily finite sets ([`HFSet`]) with a
//! configurable rank cap, because the calculus needs an enumerable,
//! absolute base.  Check names embed that universe ([`check_name`]); the
//! marker predicate for "is a check name" joins over the pool's check
//! fragment, so every statement about the ground model is relative to the
//! declared fragment.  Interpretation by a filter ([`val`]) goes back down
//! to hereditarily finite sets.

pub mod atomic;
pub mod construct;
pub mod filter;
pub mod gdot;
pub mod hf;
pub mod input;
pub mod name;
pub mod pool;

pub use atomic::{bv_atomic, AtomicEvaluator, AtomicRel};
pub use construct::{powerset_name, separation_name, POWERSET_PAIR_LIMIT};
pub use filter::{rank_check, val, Filter, RankReport};
pub use gdot::{encode_element, generic_filter_laws, generic_name, membership_value, GenericLawsReport};
pub use hf::{HFSet, DEFAULT_RANK_CAP};
pub use input::{hf_from_json, hf_to_json, name_from_json, name_to_json};
pub use name::{check_name, mix, Name};
pub use pool::{bv_formula, bv_formula_in, NamePool};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NamesError {
    /// Operands built over different algebras.
    #[error("names belong to different algebras ({left} vs {right} atoms)")]
    MixedAlgebras { left: usize, right: usize },
    /// Antichain length and assignment length disagree.
    #[error("antichain has {antichain} element(s) but {assigned} name(s) were assigned")]
    MixArity { antichain: usize, assigned: usize },
    /// A name required to be in the pool is not.
    #[error("name of rank {rank} is outside the pool")]
    NameOutsidePool { rank: usize },
    /// Filter validation failure.
    #[error("not a filter: {0}")]
    BadFilter(String),
    /// The power-set construction would enumerate too many candidate
    /// subnames.
    #[error("power-set name needs 2^{pairs} candidate subnames (limit 2^{limit})")]
    SizeGuard { pairs: usize, limit: usize },
    /// Malformed serialized input.
    #[error("bad input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Fol(#[from] fol::FolError),
    #[error(transparent)]
    Kernel(#[from] ba_kernel::KernelError),
}

pub type Result<T> = std::result::Result<T, NamesError>;
