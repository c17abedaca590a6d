//! Exact quaternion linear algebra.
//!
//! Quaternion matrices over arbitrary-precision rationals, the row/column
//! determinant calculus, determinantal representations of the Moore-Penrose,
//! Drazin and W-weighted Drazin inverses, and Cramer-rule solvers for the
//! restricted matrix equations WAWX = D, XWAW = D and W₁AW₁XW₂BW₂ = D.
//! All arithmetic is exact: residuals are either zero or they are not.

pub mod det;
pub mod error;
pub mod inverse;
pub mod matrix;
pub mod quaternion;
pub mod solve;
pub mod subsets;
pub mod verify;
pub mod wdrazin;

pub use error::{Error, Result};
pub use matrix::{qmat, QMatrix};
pub use quaternion::{Quaternion, Rational};
