//! Closure and interior operations on finite-length modules over Artinian
//! local algebras, with exact arithmetic throughout.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`] and [`linalg`]: exact fields and canonical (RREF) subspaces.
//! * [`poly`] and [`algebra`]: polynomial input and local algebras
//!   `k[x_1..x_n]/I` with a monomial basis.
//! * [`module`]: finite-length modules as commuting action matrices, with
//!   quotients, colons, Hom, tensor and submodule enumeration.
//! * [`duality`]: Matlis duality over an Artinian ring (transposition) and
//!   the smile dual of a pair operation.
//! * [`pairops`]: pair operations, their builders and combinators, the
//!   exhaustive property checker and test ideals.
//! * [`corehull`]: reductions, cores, expansions and hulls.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod corehull;
pub mod duality;
pub mod field;
pub mod fixtures;
pub mod linalg;
pub mod module;
pub mod pairops;
pub mod poly;

use alloc::string::String;

pub use algebra::{build_local_algebra, LocalAlgebra, RingElement, ValidationReport};
pub use duality::{smile_dual, MatlisContext};
pub use field::{Field, PrimeField, Rationals};
pub use linalg::{Matrix, Subspace};
pub use module::{FLModule, ModuleMap, Submodule};
pub use pairops::{PairOperation, PropertyReport, SubmoduleSelector};
pub use poly::PolyExpr;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a supported field characteristic (need 0 or a prime below 2^31)")]
    InvalidField(u64),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix entry at ({row}, {col}) is not a reduced field element")]
    NonCanonicalEntry { row: usize, col: usize },
    #[error("subspace is not invariant under the module action")]
    NotASubmodule,
    #[error("{0}")]
    NotContained(String),
    #[error("ring mismatch: operands live over different algebras")]
    RingMismatch,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("relations generate the unit ideal (zero ring)")]
    ZeroRing,
    #[error("not local at the origin within nil bound {nil_bound}: {detail}; raise nil_bound")]
    NotLocal { nil_bound: u32, detail: String },
    #[error("truncated monomial space exceeds the budget of {0} monomials; lower nil_bound")]
    IterationBudget(usize),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("matrix does not intertwine the module actions")]
    NotAModuleMap,
    #[error("enumeration limit {limit} exceeded ({found} found so far)")]
    LimitExceeded { limit: usize, found: usize },
    #[error("exhaustive enumeration needs a finite field")]
    InfiniteField,
    #[error("pair outside the operation's domain: {0}")]
    OutsideDomain(String),
    #[error("combinator needs a nonempty operation list")]
    EmptyList,
    #[error("{0} needs positive characteristic")]
    CharacteristicZero(&'static str),
    #[error("smile dual routes disagree: formula gave {formula}, kernel view gave {kernel}")]
    DualityMismatch { formula: String, kernel: String },
    #[error("singular matrix")]
    Singular,
}
