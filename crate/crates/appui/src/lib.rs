//! Exact arithmetic for standard subalgebras of simple Lie algebras and their
//! affine (loop-algebra) extensions.
//!
//! The crate builds finite root systems from Cartan data, equips them with a
//! Chevalley basis (integer structure constants, signs fixed by extraspecial
//! pairs), and then works with two families of objects:
//!
//! * **Standard subalgebras** `τ` of a simple algebra `g`, produced from an
//!   antichain of positive roots (nilpotent case) or an antichain together
//!   with a set `Ψ` of simple roots (general case), and their **appui
//!   subspaces** `V_τ = [τ, g]`.  The closed combinatorial formulas for `V_τ`
//!   and for the normalizer `ρ(τ)` live in [`standard`]; an independent
//!   brute-force computation of the same objects lives in [`oracle`].
//! * **Graded standard subalgebras** of the truncated affine algebra
//!   `g(A) = L(g) ⊕ ℂK ⊕ ℂd`, built and classified in [`affine`].
//!
//! All arithmetic is exact: coordinates are integers, Cartan-part data is kept
//! as reduced rationals in row-echelon form.  No floating point anywhere.

pub mod affine;
pub mod chevalley;
pub mod linalg;
pub mod oracle;
pub mod rootsys;
pub mod standard;
pub mod verify;

pub use affine::{AffineElement, AffineRoot, LoopSubspace};
pub use chevalley::{Algebra, BasisElement, HStableSubspace, LinComb};
pub use rootsys::{LieType, Root, RootSystem, Series};

/// Exact scalar type used throughout the crate.
pub type Rat = num_rational::Rational64;

/// Errors reported by constructors and verification entry points.
///
/// Validation failures (bad input data) and verification failures (a
/// hypothesis that a computation refuted) are kept distinct so that callers
/// can map them onto different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not valid for series {series}")]
    InvalidRank { series: Series, rank: usize },
    #[error("unknown Lie type `{0}`")]
    UnknownType(String),
    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i64>),
    #[error("the given roots are not pairwise incomparable (not an antichain)")]
    NotAntichain,
    #[error("psi must be a nonempty union of connected components of the complement of S2")]
    InvalidPsi,
    #[error("psi override requires a connected subsystem of the complement of S2")]
    InvalidPsiSubsystem,
    #[error("loop degree must be at least 1")]
    InvalidDegree,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no member of the parabolic family normalizes the subspace")]
    NoNormalizer,
    #[error("the normalizing parabolics have no unique maximal element")]
    NoUniqueMaximal,
}

pub type Result<T> = std::result::Result<T, Error>;
