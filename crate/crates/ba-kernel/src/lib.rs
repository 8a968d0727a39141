//! Finite complete Boolean algebras and the lattice plumbing built on them:
//! antichains and their common refinements, posets with regular-open
//! completions, partition-induced complete subalgebras, products, two-step
//! iterations, ideals and quotients.
//!
//! Every algebra is canonicalized as the powerset of a finite atom set, so
//! all other presentations (posets, subalgebras, products, quotients) are
//! normalized to that form together with explicit morphisms. Atoms keep every
//! verification oracle exhaustive.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so everything here is safe to use concurrently.

mod algebra;
mod antichain;
mod enumerate;
mod ideal;
mod input;
mod poset;
mod product;
mod subalgebra;

pub use algebra::{Algebra, Element, DEFAULT_ATOM_CAP, MASK_LIMIT};
pub use antichain::{common_refinement, is_maximal_antichain, Antichain, RefinementMap};
pub use enumerate::{labeled_posets, random_poset, set_partitions};
pub use ideal::{local_ideal, quotient, small_ideal, Ideal, IdealLaws, Quotient};
pub use input::{AlgebraInput, IdealInput, PosetInput};
pub use poset::{check_ro_agreement, Poset, RoAgreement, RoCompletion, RoOracle};
pub use product::{iteration_algebra, product_algebra, Iteration, Product};
pub use subalgebra::{is_complete_subalgebra, Partition};

/// Errors shared by every constructor and operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    /// Operands live in algebras with different atom counts.
    #[error("mixed algebras: operand atom counts {left} and {right} differ")]
    MixedAlgebras { left: usize, right: usize },
    /// A constructed algebra would exceed the configured atom ceiling.
    #[error("atom cap exceeded: {requested} atoms requested, cap is {cap}")]
    AtomCapExceeded { requested: usize, cap: usize },
    /// Atom index outside the owning algebra.
    #[error("atom index {index} out of range for a {atoms}-atom algebra")]
    AtomOutOfRange { index: usize, atoms: usize },
    /// The input relation is not a partial order.
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    /// A claimed antichain fails pairwise disjointness or contains zero.
    #[error("not an antichain: {0}")]
    NotAntichain(String),
    /// An operation requires a maximal antichain (join = 1).
    #[error("antichain is not maximal: {0}")]
    NotMaximal(String),
    /// A claimed partition fails disjointness or coverage.
    #[error("not a partition: {0}")]
    NotPartition(String),
    /// An explicit ideal presentation fails a closure law.
    #[error("not an ideal: {0}")]
    NotIdeal(String),
    /// The ideal admits 1, so the quotient would collapse.
    #[error("improper ideal: quotient is undefined")]
    ImproperIdeal,
    /// Explicit presentation without pairwise-join closure; quotients by it
    /// are undefined even though the family itself is representable.
    #[error("degenerate finite analogue: member family is not join-closed")]
    NotJoinClosed,
    /// An instance is too large for the exhaustive machinery behind it.
    #[error("instance too large: {0}")]
    TooLarge(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, KernelError>;
