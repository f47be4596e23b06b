use thiserror::Error;

/// Errors raised by the algebraic constructions.
///
/// Construction-time validation failures (a table that is not associative, a
/// relation that is not a partial order) are reported as `Invalid*` variants
/// carrying a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("operation requires a finite field")]
    NotFiniteField,
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("d∘d is nonzero at degree {0}")]
    DifferentialSquareNonzero(usize),
    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("monoid is not inverse")]
    NotInverseMonoid,
    #[error("input is not a semilattice")]
    NotSemilatticeInput,
    #[error("functor values are not semilattices")]
    NotSemilatticeValues,
    #[error("simplicial object is not commutative")]
    NotCommutative,
    #[error("enumeration cap exceeded: {needed} candidates > cap {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u128 },
    #[error("size cap exceeded: {needed} > cap {cap}")]
    SizeCapExceeded { needed: usize, cap: usize },
    #[error("bounded saturation did not stabilise within {0} elements")]
    Unbounded(usize),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("T-module axiom violated: {0}")]
    TModuleAxiomViolation(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("degree {degree} out of range (max {max})")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("object {0} outside window")]
    ObjectOutsideWindow(usize),
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("simplicial identity violated: {0}")]
    SimplicialIdentity(String),
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
