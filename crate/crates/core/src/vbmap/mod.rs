//! The additive maps `f = f_{A,B}` on GF(2)(t) with `f(1) = A`, `f(t) = B`
//! and `x^-1 f(x) + f(x^-1) = 0` for every `x != 0`.
//!
//! Writing `x = (P(t^2) + Q(t^2) t) / (R(t^2) + S(t^2) t)`,
//!
//! ```text
//! f(x) = (P R + Q S t) / (R(t^2) + S(t^2) t) * A
//!      + (P S + Q R)   / (R(t^2) + S(t^2) t) * B
//! ```
//!
//! The companion map of the pair is `g = f`; it is not exposed separately.

mod oracle;
mod suite;

pub use oracle::{eval_f_oracle, monomial_value};
pub use suite::{
    run_suite, AdditiveMap, Counterexample, FaultyMap, Property, PropertyTally, SuiteConfig,
    SuiteReport,
};

use thiserror::Error;

use crate::gf2fun::{Gf2Poly, Gf2Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VbError {
    #[error("the identity residual is only defined for nonzero x")]
    ZeroArgument,
    #[error("denominator of a representation must be nonzero")]
    ZeroDenominator,
}

/// The pair `(A, B) = (f(1), f(t))`; any two elements of GF(2)(t).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VbParams {
    pub a: Gf2Rat,
    pub b: Gf2Rat,
}

impl VbParams {
    pub fn new(a: Gf2Rat, b: Gf2Rat) -> Self {
        Self { a, b }
    }

    pub fn eval(&self, x: &Gf2Rat) -> Gf2Rat {
        eval_f(self, x)
    }
}

/// Even/odd parts of a numerator and denominator:
/// `x = (P(t^2) + Q(t^2) t) / (R(t^2) + S(t^2) t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub p: Gf2Poly,
    pub q: Gf2Poly,
    pub r: Gf2Poly,
    pub s: Gf2Poly,
}

impl Decomposition {
    /// Splits an arbitrary (possibly unreduced) fraction.
    pub fn from_fraction(num: &Gf2Poly, den: &Gf2Poly) -> Result<Self, VbError> {
        if den.is_zero() {
            return Err(VbError::ZeroDenominator);
        }
        let (p, q) = num.even_odd_split();
        let (r, s) = den.even_odd_split();
        Ok(Self { p, q, r, s })
    }

    /// `R(t^2) + S(t^2) t`.
    pub fn denominator(&self) -> Gf2Poly {
        self.r.frobenius_sub().add(&self.s.frobenius_sub().shl(1))
    }

    pub fn numerator(&self) -> Gf2Poly {
        self.p.frobenius_sub().add(&self.q.frobenius_sub().shl(1))
    }

    pub fn reconstruct(&self) -> Gf2Rat {
        Gf2Rat::new(self.numerator(), self.denominator()).expect("R, S not both zero")
    }
}

/// Decomposes the reduced fraction of `x`; `0` gives `(0, 0, 1, 0)`.
pub fn decompose(x: &Gf2Rat) -> Decomposition {
    Decomposition::from_fraction(x.num(), x.den()).expect("reduced denominators are nonzero")
}

/// The two coefficient fractions `(PR + QSt)/E` and `(PS + QR)/E`, so that
/// `f(x) = c_a A + c_b B`.
pub(crate) fn coefficient_pair(d: &Decomposition) -> (Gf2Rat, Gf2Rat) {
    let e = d.denominator();
    let ca = d.p.mul(&d.r).add(&d.q.mul(&d.s).shl(1));
    let cb = d.p.mul(&d.s).add(&d.q.mul(&d.r));
    (
        Gf2Rat::new(ca, e.clone()).expect("nonzero"),
        Gf2Rat::new(cb, e).expect("nonzero"),
    )
}

/// Evaluates the closed form on any representation of an element.
pub fn eval_on_decomposition(params: &VbParams, d: &Decomposition) -> Gf2Rat {
    let (ca, cb) = coefficient_pair(d);
    ca.mul(&params.a).add(&cb.mul(&params.b))
}

pub fn eval_f(params: &VbParams, x: &Gf2Rat) -> Gf2Rat {
    eval_on_decomposition(params, &decompose(x))
}

/// `x^-1 f(x) + f(x^-1)`, which vanishes for every nonzero `x`.
pub fn identity_residual(params: &VbParams, x: &Gf2Rat) -> Result<Gf2Rat, VbError> {
    let inv = x.inv().map_err(|_| VbError::ZeroArgument)?;
    Ok(inv.mul(&eval_f(params, x)).add(&eval_f(params, &inv)))
}
