//! Ultrafilters on finite Boolean algebras and the quotient structures they
//! induce: quotient models of a name pool with satisfaction transfer checked
//! in both the plain and ground-relativized forms, the spanning-function
//! presentation and its isomorphism with the name presentation, direct
//! limits over declared antichain families, extender-style representation
//! of limit elements, restriction to complete subalgebras, two-step
//! iteration and rectangular product filters, relative genericity, poset
//! filter diagnostics, and an ideal suite.
//!
//! Everything here is exhaustive at small scale: algebras are atomic, so
//! every claimed equivalence is swept over all instances rather than argued.
//! The one genuinely infinite citizen, a nonprincipal ultrafilter, enters
//! only through the symbolic handle backed by the `omega-symbolic` crate
//! and participates only through spanning-function arguments.

pub mod genericity;
pub mod ideal_suite;
pub mod input;
pub mod iterate;
pub mod limit;
pub mod los;
pub mod poset_diag;
pub mod presentations;
pub mod product_filter;
pub mod quotient;
pub mod restrict;
pub mod spanning;
pub mod ultrafilter;

pub use genericity::{
    classical_iff_check, descent_spectrum, generic_triviality_check, omega_descent_demo,
    relative_genericity, ClassicalIffReport, Descent, DescentReport, OmegaDescent,
    RelativeGenericityReport, SpectrumReport, TrivialityReport,
};
pub use ideal_suite::{disjointify, ideal_suite, induced_filter, tree_path, IdealSuiteReport};
pub use input::{scenario_from_json, Scenario, SCENARIO_SCHEMA};
pub use iterate::{
    iteration_decompose, iteration_project, iteration_round_trip, iteration_ultrafilter,
    IterationRoundTrip,
};
pub use limit::{
    extender_rep, factor_maps, induced_u_a, DirectLimitSystem, ExtenderRep, FactorMapsReport,
    FactorModel, PowersetUltrafilter,
};
pub use los::{los_check, los_instance, LosFailure, LosReport};
pub use poset_diag::{
    enumerate_maximal_antichains, enumerate_maximal_filters, is_condition_filter,
    poset_diagnostics, two_splits, weakly_decides, CountableShadow, PosetDiagnostics,
    SplitAntichain,
};
pub use presentations::{
    function_name, mixing_pool, presentations_iso, presentations_setup, PresentationIso,
};
pub use product_filter::{
    product_filter_membership, rectangle_filter, rectangle_product_report, RectangleProductReport,
};
pub use quotient::{quotient_model, FiberReport, QuotientModel};
pub use restrict::{restrict_to_subalgebra, SubalgebraRestriction};
pub use spanning::{ground_model, sf_equiv, sf_los, sf_reduce, SpanningFunction};
pub use ultrafilter::{enumerate_ultrafilters, Ultrafilter, UltrafilterLaws};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UltraError {
    /// Operands built over algebras of different sizes.
    #[error("operands over different algebras ({left} vs {right} atoms)")]
    MixedAlgebras { left: usize, right: usize },
    /// A set claimed to be an ultrafilter fails one of its laws.
    #[error("not an ultrafilter: {0}")]
    NotUltra(String),
    /// The operation needs a finite ultrafilter but got the symbolic one.
    #[error("symbolic ultrafilter: {0} needs a finite algebra")]
    SymbolicUnsupported(&'static str),
    /// A ground-universe set lies outside the pool's check fragment.
    #[error("value of rank {rank} is outside the declared fragment (cap {cap})")]
    OutsideFragment { rank: usize, cap: usize },
    /// A spanning function's claimed domain is not a maximal antichain.
    #[error("spanning domain invalid: {0}")]
    BadDomain(String),
    /// The declared antichain family misses a required refinement.
    #[error("antichain family: {0}")]
    BadFamily(String),
    /// A requested class index is out of range.
    #[error("class index {index} out of range ({classes} classes)")]
    ClassOutOfRange { index: usize, classes: usize },
    /// Malformed scenario input.
    #[error("bad input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Kernel(#[from] ba_kernel::KernelError),
    #[error(transparent)]
    Fol(#[from] fol::FolError),
    #[error(transparent)]
    Names(#[from] names::NamesError),
}

pub type Result<T> = std::result::Result<T, UltraError>;
