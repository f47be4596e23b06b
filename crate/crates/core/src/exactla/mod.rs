//! Exact linear algebra over `Q` and `F_p`: dense matrices, rank, kernels,
//! incremental echelon spaces and chain complexes.

mod chain;
mod echelon;
mod matrix;

pub use chain::ChainComplex;
pub use echelon::EchelonSpace;
pub use matrix::{ExactMatrix, Rref};
