use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::AlgError;

/// A rational quaternion `a + b i + c j + d k` with `i^2 = j^2 = k^2 = ijk = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Quaternion {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(v.into());
        Self::new(r(a), r(b), r(c), r(d))
    }

    pub fn zero() -> Self {
        Self::from_integers(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_integers(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_integers(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// `a^2 + b^2 + c^2 + d^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    /// Hamilton product; not commutative.
    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Self::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    /// Conjugate over norm.
    pub fn inv(&self) -> Result<Self, AlgError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.conjugate().scale(&n.recip()))
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.a, self.b, self.c, self.d)
    }
}
