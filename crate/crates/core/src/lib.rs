//! Exact change-of-basis matrices between polynomial bases.
//!
//! The crate builds `M_{ts}` for any two bases of the catalog
//! ([`basis::Family`]) in exact rational arithmetic. Matrices compose and
//! invert as elements of a groupoid. The [`coeff`] module evaluates
//! closed-form coefficient functions directly; [`compress`] stores a matrix
//! without the entries that parity or truncation make redundant.
//!
//! Matrices are oriented in ascending degree: entry `(i, j)` is the
//! coefficient of the range basis vector of index `i` in the domain basis
//! vector of index `j`. A coefficient function value `α(n, k)` therefore
//! sits at row `n - k`, column `n`.

pub mod basis;
pub mod coeff;
pub mod compress;
pub mod error;
pub mod groupoid;
pub mod interchange;
pub mod poly;
pub mod rational;
pub mod triangular;

pub use basis::{basis_polynomial, is_triangular_basis, BasisId, BasisSpec, Family, Subspace};
pub use coeff::{
    alpha3_dot, alpha3_dot_case3, alpha_laguerre_to_monomial, alpha_monomial_to_chebyshev,
    beta3_dot_case4, beta_hermite_to_chebyshev, beta_hermite_to_monomial,
    beta_legendre_to_chebyshev, expand, CoeffFn, CoeffKind,
};
pub use compress::{compress, included_count, CompressedMatrix, CompressionSpec};
pub use error::{Error, Result};
pub use groupoid::{apply, build_cob, compose, inverse, verify_groupoid, CobMatrix, CoordVec};
pub use poly::{Parity, Poly};
pub use rational::Rational;
pub use triangular::{tri_solve, UpperTriangular};
