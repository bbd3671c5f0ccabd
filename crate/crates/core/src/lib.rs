//! Exact computations in the Eulerian subalgebra of the symmetric group
//! algebra, and the "amazing matrix" they produce.
//!
//! The amazing matrix `P(b)` is the transition matrix of the number of
//! descents under repeated `b`-shuffles of a deck of `n` cards; it is also
//! the transition matrix of the carries when adding `n` random base-`b`
//! numbers. Its entries come from an alternating binomial sum, its right and
//! left eigenvectors are the columns of the Worpitzky matrix and the rows of
//! the Foulkes matrix, and `P(a) P(b) = P(ab)`.
//!
//! ```
//! use riffle_algebra::amazing::amazing_matrix;
//!
//! let p = amazing_matrix(3, 2).unwrap();
//! assert_eq!(p.normalizer().to_string(), "8");
//! assert_eq!(p.entry(2, 2).to_string(), "6");
//! ```
//!
//! Everything in [`combinatorics`], [`eulerian`] and [`amazing`] is exact
//! (big integers and rationals). The [`oracle`] module recomputes the same
//! objects by brute force over `S_n` and by seeded simulation.

pub mod amazing;
pub mod combinatorics;
mod error;
pub mod eulerian;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;

    #[doc = include_str!("../../../book/src/eulerian-algebra.md")]
    struct EulerianAlgebra;

    #[doc = include_str!("../../../book/src/amazing-matrix.md")]
    struct AmazingMatrix;

    #[doc = include_str!("../../../book/src/oracles.md")]
    struct Oracles;

    #[doc = include_str!("../../../book/src/combinatorics.md")]
    struct Combinatorics;
}
