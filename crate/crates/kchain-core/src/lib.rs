//! Exact-arithmetic invariants of linear crossed polyomino chains.
//!
//! A linear crossed polyomino chain `G_n` is built from `n` copies of `K_4`
//! glued along vertical edges: a top path, a bottom path, `n + 1` vertical
//! rungs, and both diagonals in every cell. Deleting `r` of the rungs yields
//! the subchain family `G^r_n`.
//!
//! This crate computes, entirely over arbitrary-precision rationals:
//!
//! * brute-force oracles for the Wiener, Gutman, Kirchhoff and
//!   multiplicative degree-Kirchhoff indices and the spanning-tree count
//!   ([`invariant_oracles`]);
//! * the closed forms those oracles are checked against, including the
//!   corrected variants of two published misprints ([`closed_forms`]);
//! * the spectral machinery behind the closed forms: the block split of the
//!   Laplacian under the top/bottom pairing, eigenvalue multisets of the
//!   difference block, and the coefficient identities of the normalized sum
//!   block ([`spectral`]).
//!
//! The kernel is a dense exact linear algebra module ([`exact_linalg`]) with
//! fraction-free determinants, rational solves, characteristic polynomials
//! and effective resistance.
//!
//! The crate is `no_std` (it requires `alloc`); all IO, serialization and the
//! command-line harness live in the companion `kchain-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chain_graphs;
pub mod closed_forms;
pub mod error;
pub mod exact_linalg;
pub mod invariant_oracles;
pub mod spectral;

pub use error::{Error, Result};
pub use exact_linalg::{BigInt, CharPoly, IntMatrix, Rational, RationalMatrix};
