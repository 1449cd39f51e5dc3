use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested field modulus is composite, less than 2, or negative.
    #[error("{0} is not prime")]
    NotPrime(i64),
    /// Two operands belong to fields of different characteristic.
    #[error("field context mismatch: GF({left}) vs GF({right})")]
    CtxMismatch { left: u64, right: u64 },
    /// A monomial was requested with coefficient zero.
    #[error("monomial coefficient must be nonzero")]
    ZeroCoefficient,
    /// Exponent arithmetic left the range of `i64`.
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,
    /// A negative power was requested of a polynomial that is not a
    /// single-term unit.
    #[error("negative power of a polynomial that is not a monomial")]
    NotInvertible,
    /// A matrix does not lie in the image of the group ring embedding.
    #[error("matrix is not in the image of the group ring embedding")]
    NotInImage,
    /// An element's determinant is not a monomial, so it has no inverse.
    #[error("element is not a unit: its determinant is not a monomial")]
    NotAUnit,
    /// A specialization expected to produce a constant did not.
    #[error("specialized polynomial is not constant")]
    NonConstant,
}

pub type Result<T> = std::result::Result<T, Error>;
