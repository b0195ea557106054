//! Exact construction and verification of a family of finite unitary and
//! quaternionic matrix groups: the quaternion group, the binary tetrahedral
//! group, the Hessian group and its triple cover of order 648, an extraspecial
//! group of order 128, and the combined quaternionic group of order 82944 —
//! together with their character tables, reflection geometry, the associated
//! finite unitary plane over F4, and the Clifford-algebra structure of the
//! quaternionic Dirac matrices.
//!
//! All arithmetic is exact. The linear algebra and group machinery are
//! generic over the scalar domain (see [`scalar::Scalar`]); the concrete
//! domains used by the catalog are re-exported here with matrix aliases.

pub mod error;
pub mod cache;
pub mod catalog;
pub mod chars;
pub mod claims;
pub mod clifford;
pub mod geometry;
pub mod group;
pub mod matrix;
pub mod reflection;
pub mod scalar;
pub mod store;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{CycNum, Domain, F4, F9, QuatNum, Rational};

/// 2, 3 and 4 dimensional complex matrices over Q(ζ₁₂).
pub type CycMatrix = Matrix<CycNum>;
/// 4×4 quaternionic matrices acting on row vectors from the right.
pub type QuatMatrix = Matrix<QuatNum>;
/// Rational matrices (the realified reflection representation).
pub type RatMatrix = Matrix<Rational>;
/// Matrices over the field of order 4.
pub type F4Matrix = Matrix<F4>;
/// Matrices over the field of order 9.
pub type F9Matrix = Matrix<F9>;
