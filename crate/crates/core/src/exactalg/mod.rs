//! Exact division rings: GF(p), GF(p^k), Q and the rational quaternions,
//! unified behind [`DivisionRing`] and [`RingElem`].

mod ext;
mod prime;
mod quaternion;
mod ring;

pub use ext::{ExtField, ExtFieldElem, MAX_EXTENSION_DEGREE};
pub use num_rational::BigRational;
pub use prime::{is_prime, PrimeFieldElem, PrimeModulus};
pub use quaternion::Quaternion;
pub use ring::{DivisionRing, RingElem, RingKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateLength { expected: usize, got: usize },
    #[error("unsupported on infinite ring {0}")]
    Unsupported(String),
}
