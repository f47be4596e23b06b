//! Exact computations with finite commutative monoids, semilattices,
//! distributive lattices and functors on small categories.

pub mod category;
pub mod corrcat;
pub mod error;
pub mod exactla;
pub mod field;
pub mod homalg;
pub mod lattice;
pub mod monoid;
pub mod simplicial;
pub mod suite;
pub mod tensormon;

pub use error::{Error, Result};
