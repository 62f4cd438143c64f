//! Exact structure-constant workbench for ternary algebras.
//!
//! Represents finite-dimensional 3-Lie, 3-pre-Lie and 3-L-dendriform algebras
//! as sparse structure-constant tensors over an exact scalar field, verifies
//! their defining identities on all basis tuples, runs the standard
//! constructions between them (O-operators, Rota-Baxter operators, symplectic
//! forms, commuting Rota-Baxter pairs, trace-induced brackets) and computes
//! derivation-type subspaces (derivations, quasi-/generalized derivations,
//! centroid, quasi-centroid) as exact nullspaces.
//!
//! All arithmetic is exact: the scalar trait requires `Eq`, which rules out
//! floating point by construction. The canonical instantiation is [`Rat`].

pub mod algebra;
pub mod der;
pub mod fixtures;
pub mod linalg;
pub mod oper;
pub mod rep;
pub mod tensor;

use std::fmt;

pub use algebra::{Kind, TernaryAlgebra, VerificationReport, Violation};
pub use der::{ClosureReport, EndoSubspace, Role};
pub use linalg::{Matrix, Subspace};
pub use oper::{BinaryLieAlgebra, SkewBilinearForm, TraceFunction};
pub use rep::{PairMap, PreLieRep};
pub use tensor::StructureTensor;

/// Exact scalar field. `Eq` (not just `PartialEq`) keeps floats out.
pub trait Scalar:
    num_traits::Num + num_traits::Signed + Clone + Eq + fmt::Debug + fmt::Display + 'static
{
}

impl<T> Scalar for T where
    T: num_traits::Num + num_traits::Signed + Clone + Eq + fmt::Debug + fmt::Display + 'static
{
}

/// Arbitrary-precision rational, the scalar used by every fixture and the CLI.
pub type Rat = num::BigRational;

/// Ternary algebra over [`Rat`].
pub type RatAlgebra = TernaryAlgebra<Rat>;
/// Matrix over [`Rat`].
pub type RatMatrix = Matrix<Rat>;
/// Subspace over [`Rat`].
pub type RatSubspace = Subspace<Rat>;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector or matrix has the wrong dimension.
    DimMismatch { expected: usize, got: usize },
    /// Two objects that must live over the same space do not.
    AmbientMismatch { left: usize, right: usize },
    /// An operation was applied to an algebra of the wrong kind.
    KindMismatch { expected: Kind, got: Kind },
    /// A basis index triple is out of range.
    IndexOutOfRange { index: [usize; 3], dim: usize },
    /// Stored coefficients contradict a required skew-symmetry.
    SkewInconsistent { at: [usize; 3] },
    /// A named construction precondition failed.
    Precondition { check: &'static str },
    /// An enumeration would exceed the configured budget.
    BudgetExceeded { candidates: u128, budget: u128 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            Error::KindMismatch { expected, got } => {
                write!(f, "kind mismatch: expected {expected}, got {got}")
            }
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "index {index:?} out of range for dimension {dim}")
            }
            Error::SkewInconsistent { at } => {
                write!(f, "stored coefficients at {at:?} contradict skew-symmetry")
            }
            Error::Precondition { check } => write!(f, "precondition failed: {check}"),
            Error::BudgetExceeded { candidates, budget } => {
                write!(f, "search space of {candidates} candidates exceeds budget {budget}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
