//! Coefficient fields, monomials, sparse polynomials, vectors and matrices.

pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod scalar;
pub mod text;

pub use matrix::{subsets, RingMatrix, RingVector};
pub use monomial::{mono_cmp, Monomial, MonomialOrder, PositionStrategy};
pub use poly::{Polynomial, Ring};
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
