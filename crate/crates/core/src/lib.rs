//! Exact Schubert calculus on the symmetric group.
//!
//! The crate computes Schubert polynomials (Billey–Jockusch–Stanley formula
//! plus an independent divided-difference route), dual Schubert polynomials
//! as weighted sums over Bruhat chains, Monk expansions with a constructive
//! weight-preserving bijection, Littlewood–Richardson coefficients through
//! the differential inner product, and an insertion map from bounded biwords
//! to (compatible sequence, labeled chain) pairs that realizes a Cauchy
//! identity. Everything is exact rational arithmetic; every identity the
//! library claims is checkable with the `verify_*` operations.

pub mod cauchy;
pub mod chains;
pub mod error;
pub mod permutation;
pub mod polynomial;
pub mod schubert;

pub use error::{Error, Result};
pub use permutation::{
    bruhat_covers, bruhat_leq, k_bruhat_covers, longest_element, permutations_of_length,
    symmetric_group, CoverEdge, Permutation, Transposition,
};
pub use polynomial::{factorial, x_difference, Alphabet, ExponentVector, Polynomial};
