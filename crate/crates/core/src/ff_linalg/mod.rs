//! Exact arithmetic over F_p and F_{p^e}, dense matrices, and rank machinery
//! including generic rank of matrices with polynomial entries.

pub mod field;
pub mod generic_rank;
pub mod mat;
pub mod mpoly;

pub use field::{ExtField, Field, FieldError, PrimeField};
pub use generic_rank::{generic_rank, GenericRank, CERTIFY_DIM_CAP, DEFAULT_TRIALS};
pub use mat::{Mat, MatError};
pub use mpoly::{MatPoly, MultiPoly};
