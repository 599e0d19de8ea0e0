//! Exact computation of non-commutative higher Koszul brackets on graded
//! associative algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`numbers`]: exact rationals, Bernoulli and Stirling numbers, the gauge
//!   coefficients `K(n)`.
//! * [`algebra`]: free and polynomial graded algebras, Koszul signs and
//!   symbolic endomorphisms.
//! * [`operators`]: graded symmetric multilinear operators with the
//!   Nijenhuis-Richardson product and bracket, and the symmetrized products
//!   `mu(n)`.
//! * [`brackets`]: the Koszul brackets `Psi` and reduced brackets `Phi`,
//!   built recursively, by closed formulas (Bering, Bandiera, commutative)
//!   and by the exponential of an adjoint action.
//! * [`verify`]: randomized identity checks with exact comparison, and the
//!   suite runner behind the command line tool.
//!
//! With the default `parallel` feature, sample evaluation and suite runs
//! are spread over a rayon thread pool; without it everything runs on the
//! calling thread.

pub mod algebra;
pub mod brackets;
pub mod numbers;
pub mod operators;
pub mod par;
pub mod verify;

pub use algebra::{AlgebraKind, Element, Endomorphism, Generator, Signature, Word};
pub use brackets::{BracketFamily, BracketSource, Formula, GaugePreset, Koszul};
pub use numbers::Rational;
pub use operators::MultiOperator;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid algebra signature: {0}")]
    InvalidSignature(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid word {0}")]
    InvalidWord(String),
    #[error("the algebra has no unit")]
    NonUnital,
    #[error("operands live in different algebras")]
    SignatureMismatch,
    #[error("element {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("invalid endomorphism: {0}")]
    InvalidEndomorphism(String),
    #[error("word of length {length} is outside the table bound {bound}")]
    OutsideTable { length: usize, bound: usize },
    #[error("expected {expected} arguments, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
