//! Exact combinatorics of stack-sorting: descent tables of t-stack-sortable
//! permutations, their generating polynomials, and certified real-rootedness.
//!
//! Everything is computed in arbitrary-precision rational arithmetic. The crate
//! provides:
//!
//! - [`perm`]: words, permutations, the stack-sorting operator and exhaustive
//!   enumeration of the symmetric group;
//! - [`tables`]: descent-counted tables of t-stack-sortable permutations, by
//!   brute force and by closed forms for t = 1 (Narayana) and t = 2;
//! - [`poly`]: univariate polynomials over the rationals;
//! - [`roots`]: Sturm chains, real-root counting, root certificates, isolation
//!   and strict interlacing — all sign decisions are exact;
//! - [`transforms`]: coefficientwise multiplier sequences, the n-sequence
//!   decision procedure, stride extraction, and the staged certification that
//!   the t = 2 descent polynomials are real-rooted;
//! - [`special`]: terminating hypergeometric series and Jacobi polynomials
//!   with rational parameters, and the identities tying them to the Narayana
//!   polynomials;
//! - [`report`] and [`cli`]: machine-readable run reports and the command-line
//!   surface.

pub mod arith;
pub mod cli;
pub mod error;
pub mod perm;
pub mod poly;
pub mod report;
pub mod roots;
pub mod special;
pub mod tables;
pub mod transforms;

pub use arith::{binomial, binomial_int, factorial, pochhammer, Int, Rat};
pub use error::Error;
pub use perm::{Permutation, Word};
pub use poly::RationalPoly;
pub use roots::{Bound, RootCertificate, SturmChain};
pub use tables::{DescentTable, TableMethod};
pub use transforms::{MultiplierSequence, PipelineReport};
