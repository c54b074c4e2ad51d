//! GF(2)[t] and its fraction field GF(2)(t).

mod poly;
mod rat;

pub use poly::Gf2Poly;
pub use rat::Gf2Rat;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
}
