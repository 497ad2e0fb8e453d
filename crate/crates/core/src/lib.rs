//! Projective Reed-Muller codes over the projective plane: evaluation codes,
//! Euclidean and Hermitian hulls, and entanglement-assisted quantum code
//! parameters.

pub mod cli;
pub mod eaqecc;
pub mod error;
pub mod finite_field;
pub mod hull_euclid;
pub mod hull_herm;
pub mod linear_code;
pub mod prm_codes;
pub mod projective_space;
pub mod quotient_poly;

pub use error::{Error, Result};
