//! Crate-wide error type.

use core::fmt;

/// Errors reported by graph construction, linear algebra and closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The chain family is undefined below one block (`n = 0`).
    EmptyChain,
    /// A deletion index lies outside `1..=n+1`.
    DeletionOutOfRange { index: usize, max: usize },
    /// The same vertical edge was listed twice in a deletion set.
    DuplicateDeletion { index: usize },
    /// A requested deletion count lies outside `0..=n+1`.
    DeletionCountOutOfRange { r: usize, max: usize },
    /// An operation requiring a square matrix was given a rectangular one.
    NonSquareMatrix { rows: usize, cols: usize },
    /// Mismatched dimensions between a matrix and a vector or second matrix.
    DimensionMismatch { expected: usize, found: usize },
    /// A linear solve or inversion hit a singular matrix.
    SingularMatrix,
    /// A characteristic-polynomial request exceeded the configured size cap.
    SizeCapExceeded { size: usize, cap: usize },
    /// A power product was asked for with a negative exponent.
    NegativeExponent { base: u64, exponent: i64 },
    /// A distance-based invariant was asked for on a disconnected graph.
    DisconnectedGraph,
    /// A vertex index lies outside the graph.
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    /// An internal-vertex row sum was requested for an index outside `2..=n`.
    InternalVertexOutOfRange { i: usize, n: usize },
    /// No deletion set of size `r` can realize end-degree sum `d` at this `n`.
    IncompatibleDeletionSummary { n: usize, r: usize, d: u8 },
    /// An identity that holds by construction failed; this indicates a bug,
    /// not bad input.
    IdentityViolation(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyChain => write!(f, "chain length n must be at least 1"),
            Error::DeletionOutOfRange { index, max } => {
                write!(f, "deletion index {index} out of range 1..={max}")
            }
            Error::DuplicateDeletion { index } => {
                write!(f, "deletion index {index} listed more than once")
            }
            Error::DeletionCountOutOfRange { r, max } => {
                write!(f, "deletion count {r} out of range 0..={max}")
            }
            Error::NonSquareMatrix { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::SizeCapExceeded { size, cap } => {
                write!(f, "matrix size {size} exceeds configured cap {cap}")
            }
            Error::NegativeExponent { base, exponent } => {
                write!(f, "negative exponent {exponent} for base {base}")
            }
            Error::DisconnectedGraph => write!(f, "graph is disconnected"),
            Error::VertexOutOfRange { vertex, num_vertices } => {
                write!(f, "vertex {vertex} out of range for {num_vertices} vertices")
            }
            Error::InternalVertexOutOfRange { i, n } => {
                write!(f, "internal vertex index {i} out of range 2..={n}")
            }
            Error::IncompatibleDeletionSummary { n, r, d } => {
                write!(f, "no deletion set with n={n}, r={r} has end-degree sum {d}")
            }
            Error::IdentityViolation(what) => {
                write!(f, "internal identity violated: {what}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
