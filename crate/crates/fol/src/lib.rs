//! First-order syntax and Boolean-valued semantics over finite algebras.
//!
//! A [`BValuedStructure`] assigns an element of a finite Boolean algebra to
//! every atomic statement about a declared finite pool of names.  Composite
//! formulas are evaluated by the usual recursion: conjunction is meet,
//! negation is complement, and an existential is the join of its instances
//! over the declared pool.  Because every quantifier ranges over that finite
//! pool and nothing else, evaluation is total and exact; the tradeoff is that
//! a value is only meaningful relative to the pool it was computed against,
//! so [`eval::Evaluation`] carries the pool size alongside the element.
//!
//! Atomic tables are supplied by the caller and are not assumed to satisfy
//! the equality or function laws.  [`check_laws`] verifies them explicitly
//! and reports every violation with a witness tuple; evaluating a structure
//! that fails the gate is permitted but the results carry no guarantees.
//!
//! # Formula grammar
//!
//! Parsed by [`parse`], printed by [`Formula`]'s `Display`.  `exists` and
//! `forall` bind as far right as possible; `!` binds tightest among the
//! connectives, then `&`, then `|`, then `->` (right associative).
//!
//! ```text
//! formula    = implies ;
//! implies    = or , [ "->" , implies ] ;
//! or         = and , { "|" , and } ;
//! and        = unary , { "&" , unary } ;
//! unary      = "!" , unary | quantified | primary ;
//! quantified = ( "exists" | "forall" ) , ident , "." , formula ;
//! primary    = ( "(" , formula , ")" | atom ) , { "@Vcheck" } ;
//! atom       = ident , "(" , [ term , { "," , term } ] , ")"
//!            | term , "=" , ident , "(" , [ term , { "," , term } ] , ")"
//!            | term , "=" , term
//!            | term , "in" , term
//!            | ident ;
//! term       = ident ;
//! ident      = letter or "_" , { letter, digit, "_" or "'" } ;
//! ```
//!
//! `in` is surface syntax for a binary relation symbol named `in` which must
//! be declared like any other.  `f` in `y = f(s)` must be a declared function
//! symbol; function symbols are only legal on the right-hand side of `=`.  A
//! bare `ident` atom must be a declared nullary relation symbol.  `@Vcheck`
//! marks its operand for relativization: quantifiers underneath it range only
//! over the structure's designated sub-pool (see
//! [`BValuedStructure::set_relativized_pool`]).

pub mod classical;
pub mod eval;
pub mod formula;
pub mod generate;
pub mod input;
pub mod laws;
pub mod parse;
pub mod signature;
pub mod structure;

pub use classical::{ultraproduct_structure, ClassicalModel};
pub use eval::{boolean_value, fullness_witness, Evaluation, FullnessReport};
pub use formula::{Formula, Term};
pub use generate::FormulaGen;
pub use input::StructureInput;
pub use laws::{check_laws, Law, LawReport, LawViolation};
pub use parse::parse;
pub use signature::Signature;
pub use structure::{BValuedStructure, Table};

use thiserror::Error;

/// Errors from parsing, structure construction, and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolError {
    /// Malformed source text; `at` is a byte offset into the input.
    #[error("syntax error at byte {at}: {message}")]
    Syntax { at: usize, message: String },
    /// Identifier used as a relation or function without a declaration.
    #[error("unknown symbol `{name}` at byte {at}")]
    UnknownSymbol { name: String, at: usize },
    /// Declared symbol applied to the wrong number of arguments.
    #[error("`{name}` expects {expected} argument(s), got {got} (at byte {at})")]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
        at: usize,
    },
    /// Duplicate declaration in a signature.
    #[error("symbol `{0}` declared twice")]
    DuplicateSymbol(String),
    /// A free variable that the assignment does not cover and that is not a
    /// declared name of the structure.
    #[error("unassigned free variable `{0}`")]
    UnassignedVariable(String),
    /// Term index outside the structure's name pool.
    #[error("name index {index} out of range for pool of {pool}")]
    NameOutOfRange { index: usize, pool: usize },
    /// `@Vcheck` evaluated against a structure without a designated sub-pool.
    #[error("formula uses @Vcheck but the structure declares no relativized pool")]
    NoRelativizedPool,
    /// Structure refers to a symbol the signature does not declare, or a
    /// table has the wrong shape.
    #[error("malformed structure: {0}")]
    BadStructure(String),
    /// Underlying algebra error (mixed operands, out-of-range atoms).
    #[error(transparent)]
    Kernel(#[from] ba_kernel::KernelError),
}

pub type Result<T> = std::result::Result<T, FolError>;
