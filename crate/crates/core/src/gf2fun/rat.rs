use std::fmt;

use super::{Gf2Error, Gf2Poly};

/// An element of GF(2)(t), always stored reduced: `gcd(num, den) = 1`,
/// `den != 0`, zero is `0/1`. Equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Rat {
    num: Gf2Poly,
    den: Gf2Poly,
}

impl Gf2Rat {
    pub fn new(num: Gf2Poly, den: Gf2Poly) -> Result<Self, Gf2Error> {
        if den.is_zero() {
            return Err(Gf2Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        if g.is_one() {
            return Ok(Self { num, den });
        }
        let (num, _) = num.divmod(&g)?;
        let (den, _) = den.divmod(&g)?;
        Ok(Self { num, den })
    }

    pub fn from_poly(num: Gf2Poly) -> Self {
        Self { num, den: Gf2Poly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Gf2Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Gf2Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Gf2Poly::t())
    }

    /// `t^n` for any integer `n`.
    pub fn t_pow(n: i64) -> Self {
        let m = Gf2Poly::monomial(n.unsigned_abs() as usize);
        if n >= 0 {
            Self::from_poly(m)
        } else {
            Self { num: Gf2Poly::one(), den: m }
        }
    }

    pub fn num(&self) -> &Gf2Poly {
        &self.num
    }

    pub fn den(&self) -> &Gf2Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero den");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("nonzero den")
    }

    /// Same as [`Gf2Rat::add`] in characteristic 2.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero den")
    }

    pub fn inv(&self) -> Result<Self, Gf2Error> {
        if self.is_zero() {
            return Err(Gf2Error::DivisionByZero);
        }
        Ok(Self { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, other: &Self) -> Result<Self, Gf2Error> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self, Gf2Error> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let (mut acc, mut sq) = (Self::one(), base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Scales by the polynomial `t^k` for any integer `k`.
    pub fn mul_t_pow(&self, k: i64) -> Self {
        self.mul(&Self::t_pow(k))
    }
}

impl From<Gf2Poly> for Gf2Rat {
    fn from(p: Gf2Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for Gf2Rat {
    /// `t^2+1`, `1/t`, `(t^2+1)/t`, `(t^3+t+1)/(t^2+t)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Gf2Poly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for Gf2Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Rat({self})")
    }
}
