//! Minimum-distance bounds for quasi-twisted codes.
//!
//! An ℓ-quasi-twisted code of index ℓ and co-index m over F_q is a submodule of
//! `(F_q[x]/<x^m - lambda>)^ℓ`. This crate computes its spectral bound (from
//! the eigenvalues of a polynomial generator matrix), the Jensen bound (from
//! the concatenated structure) and the Lally bound, and the exact minimum
//! distance they are compared against.

pub mod concat;
pub mod constabounds;
pub mod context;
pub mod error;
pub mod galois;
pub mod lally;
pub mod linalg;
pub mod par;
pub mod polyring;
pub mod qtcode;
pub mod spectral;

pub use error::{Error, Result};
