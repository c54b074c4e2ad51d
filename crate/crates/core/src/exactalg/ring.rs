use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ext::{ExtField, ExtFieldElem};
use super::prime::{PrimeFieldElem, PrimeModulus};
use super::quaternion::Quaternion;
use super::AlgError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    PrimeField,
    ExtField,
    Rational,
    Quaternion,
}

/// One of the exact division rings the crate computes over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DivisionRing {
    PrimeField(PrimeModulus),
    ExtField(Arc<ExtField>),
    Rational,
    Quaternion,
}

impl DivisionRing {
    pub fn prime_field(p: u64) -> Result<Self, AlgError> {
        Ok(Self::PrimeField(PrimeModulus::new(p)?))
    }

    /// GF(p^k) with the default modulus; `k = 1` yields the prime field itself.
    pub fn finite_field(p: u64, k: usize) -> Result<Self, AlgError> {
        if k == 1 {
            Self::prime_field(p)
        } else {
            Ok(Self::ExtField(ExtField::with_default_modulus(p, k)?))
        }
    }

    pub fn ext_field(field: Arc<ExtField>) -> Self {
        Self::ExtField(field)
    }

    pub fn kind(&self) -> RingKind {
        match self {
            Self::PrimeField(_) => RingKind::PrimeField,
            Self::ExtField(_) => RingKind::ExtField,
            Self::Rational => RingKind::Rational,
            Self::Quaternion => RingKind::Quaternion,
        }
    }

    /// 0 stands for infinite characteristic.
    pub fn characteristic(&self) -> u64 {
        match self {
            Self::PrimeField(m) => m.value(),
            Self::ExtField(f) => f.characteristic(),
            Self::Rational | Self::Quaternion => 0,
        }
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, Self::Quaternion)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::PrimeField(_) | Self::ExtField(_))
    }

    /// Dimension over the prime subfield, for finite rings.
    pub fn prime_degree(&self) -> Option<usize> {
        match self {
            Self::PrimeField(_) => Some(1),
            Self::ExtField(f) => Some(f.degree()),
            _ => None,
        }
    }

    pub fn prime_modulus(&self) -> Option<PrimeModulus> {
        match self {
            Self::PrimeField(m) => Some(*m),
            Self::ExtField(f) => Some(f.prime_modulus()),
            _ => None,
        }
    }

    /// Number of elements, for finite rings whose order fits in `u128`.
    pub fn order(&self) -> Option<u128> {
        match self {
            Self::PrimeField(m) => Some(m.value() as u128),
            Self::ExtField(f) => f.order(),
            _ => None,
        }
    }

    pub fn zero(&self) -> RingElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElem {
        self.from_i64(1)
    }

    /// Image of an integer under the unique ring map from Z.
    pub fn from_i64(&self, n: i64) -> RingElem {
        match self {
            Self::PrimeField(m) => {
                RingElem::Prime(PrimeFieldElem::from_modulus(m.reduce_i64(n), *m))
            }
            Self::ExtField(f) => {
                RingElem::Ext(ExtFieldElem::new(f, &[f.prime_modulus().reduce_i64(n)]))
            }
            Self::Rational => RingElem::Rational(BigRational::from_integer(BigInt::from(n))),
            Self::Quaternion => RingElem::Quaternion(Quaternion::from_integers(n, 0, 0, 0)),
        }
    }

    /// Builds an element from prime-subfield coordinates (finite rings only).
    pub fn from_coordinates(&self, coords: &[u64]) -> Result<RingElem, AlgError> {
        match self {
            Self::PrimeField(m) => {
                let &[v] = coords else {
                    return Err(AlgError::CoordinateLength { expected: 1, got: coords.len() });
                };
                Ok(RingElem::Prime(PrimeFieldElem::from_modulus(v, *m)))
            }
            Self::ExtField(f) => {
                if coords.len() != f.degree() {
                    return Err(AlgError::CoordinateLength {
                        expected: f.degree(),
                        got: coords.len(),
                    });
                }
                Ok(RingElem::Ext(ExtFieldElem::new(f, coords)))
            }
            _ => Err(AlgError::Unsupported(self.to_string())),
        }
    }

    /// All elements, each exactly once. Element number `i` has coordinate `j`
    /// equal to the `j`-th base-p digit of `i`.
    pub fn enumerate_elements(&self) -> Result<impl Iterator<Item = RingElem> + '_, AlgError> {
        let (p, k) = match (self.prime_modulus(), self.prime_degree()) {
            (Some(m), Some(k)) => (m.value(), k),
            _ => return Err(AlgError::Unsupported(self.to_string())),
        };
        let total = self.order().ok_or_else(|| AlgError::Unsupported(self.to_string()))?;
        Ok((0..total).map(move |idx| {
            let mut rest = idx;
            let coords: Vec<u64> = (0..k)
                .map(|_| {
                    let c = (rest % p as u128) as u64;
                    rest /= p as u128;
                    c
                })
                .collect();
            self.from_coordinates(&coords).expect("coordinate length matches degree")
        }))
    }
}

impl fmt::Display for DivisionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PrimeField(m) => write!(f, "GF({})", m.value()),
            Self::ExtField(e) => write!(f, "{e}"),
            Self::Rational => f.write_str("Q"),
            Self::Quaternion => f.write_str("H(Q)"),
        }
    }
}

/// An element of some [`DivisionRing`]. Values are immutable.
///
/// The operator impls panic on mixed rings; use the `try_*` methods when the
/// operands are not known to share a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElem {
    Prime(PrimeFieldElem),
    Ext(ExtFieldElem),
    Rational(BigRational),
    Quaternion(Quaternion),
}

impl RingElem {
    pub fn ring(&self) -> DivisionRing {
        match self {
            Self::Prime(x) => DivisionRing::PrimeField(x.prime_modulus()),
            Self::Ext(x) => DivisionRing::ExtField(Arc::clone(x.field())),
            Self::Rational(_) => DivisionRing::Rational,
            Self::Quaternion(_) => DivisionRing::Quaternion,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Prime(x) => x.value() == 0,
            Self::Ext(x) => x.is_zero(),
            Self::Rational(x) => x.is_zero(),
            Self::Quaternion(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Self::Prime(x) => x.value() == 1,
            Self::Ext(x) => x.coeffs()[0] == 1 && x.coeffs()[1..].iter().all(|&c| c == 0),
            Self::Rational(x) => x.is_one(),
            Self::Quaternion(x) => x.is_one(),
        }
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::Prime(a), Self::Prime(b)) => a.modulus() == b.modulus(),
            (Self::Ext(a), Self::Ext(b)) => a.same_field(b),
            (Self::Rational(_), Self::Rational(_)) => true,
            (Self::Quaternion(_), Self::Quaternion(_)) => true,
            _ => false,
        }
    }

    fn mismatch(&self, other: &Self) -> AlgError {
        AlgError::RingMismatch {
            left: self.ring().to_string(),
            right: other.ring().to_string(),
        }
    }

    /// Prime-subfield coordinates (finite rings only).
    pub fn coordinates(&self) -> Option<Vec<u64>> {
        match self {
            Self::Prime(x) => Some(vec![x.value()]),
            Self::Ext(x) => Some(x.coeffs().to_vec()),
            _ => None,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgError> {
        Ok(match (self, other) {
            (Self::Prime(a), Self::Prime(b)) if a.modulus() == b.modulus() => Self::Prime(a.add(b)),
            (Self::Ext(a), Self::Ext(b)) if a.same_field(b) => Self::Ext(a.add(b)),
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(a + b),
            (Self::Quaternion(a), Self::Quaternion(b)) => Self::Quaternion(a.add(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgError> {
        Ok(match (self, other) {
            (Self::Prime(a), Self::Prime(b)) if a.modulus() == b.modulus() => Self::Prime(a.sub(b)),
            (Self::Ext(a), Self::Ext(b)) if a.same_field(b) => Self::Ext(a.sub(b)),
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(a - b),
            (Self::Quaternion(a), Self::Quaternion(b)) => Self::Quaternion(a.sub(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    /// `self * other`, in that order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgError> {
        Ok(match (self, other) {
            (Self::Prime(a), Self::Prime(b)) if a.modulus() == b.modulus() => Self::Prime(a.mul(b)),
            (Self::Ext(a), Self::Ext(b)) if a.same_field(b) => Self::Ext(a.mul(b)),
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(a * b),
            (Self::Quaternion(a), Self::Quaternion(b)) => Self::Quaternion(a.mul(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn neg(&self) -> Self {
        match self {
            Self::Prime(a) => Self::Prime(a.neg()),
            Self::Ext(a) => Self::Ext(a.neg()),
            Self::Rational(a) => Self::Rational(-a),
            Self::Quaternion(a) => Self::Quaternion(a.neg()),
        }
    }

    /// Two-sided inverse.
    pub fn inv(&self) -> Result<Self, AlgError> {
        match self {
            Self::Prime(a) => a.inv().map(Self::Prime),
            Self::Ext(a) => a.inv().map(Self::Ext),
            Self::Rational(a) if a.is_zero() => Err(AlgError::DivisionByZero),
            Self::Rational(a) => Ok(Self::Rational(a.recip())),
            Self::Quaternion(a) => a.inv().map(Self::Quaternion),
        }
    }

    /// `self^n`; negative exponents go through [`RingElem::inv`].
    pub fn pow(&self, n: i64) -> Result<Self, AlgError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = self.ring().one();
        let mut sq = base;
        while exp > 0 {
            if exp.is_odd() {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Prime(x) => write!(f, "{}", x.value()),
            Self::Ext(x) => {
                let terms: Vec<String> = x
                    .coeffs()
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| match (i, c) {
                        (0, c) => c.to_string(),
                        (1, 1) => "s".to_string(),
                        (1, c) => format!("{c}s"),
                        (i, 1) => format!("s^{i}"),
                        (i, c) => format!("{c}s^{i}"),
                    })
                    .collect();
                if terms.is_empty() {
                    f.write_str("0")
                } else {
                    f.write_str(&terms.join("+"))
                }
            }
            Self::Rational(x) => write!(f, "{x}"),
            Self::Quaternion(x) => write!(f, "{x}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $trait<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$checked(&rhs).expect("ring mismatch")
            }
        }
        impl $trait<&RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                (&self).$checked(rhs).expect("ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::neg(self)
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_examples() {
        let gf7 = DivisionRing::prime_field(7).unwrap();
        for x in gf7.enumerate_elements().unwrap().skip(1) {
            assert!(x.pow(6).unwrap().is_one());
            assert_eq!(x.pow(-1).unwrap(), x.inv().unwrap());
        }
        let h = DivisionRing::Quaternion;
        let i = RingElem::Quaternion(Quaternion::i());
        assert_eq!(i.pow(2).unwrap(), h.from_i64(-1));
        assert!(h.from_i64(17).pow(0).unwrap().is_one());
        assert!(gf7.zero().pow(0).unwrap().is_one());
        assert_eq!(gf7.zero().pow(-2), Err(AlgError::DivisionByZero));
    }

    #[test]
    fn enumeration_counts_and_order() {
        let gf2 = DivisionRing::prime_field(2).unwrap();
        let v: Vec<String> = gf2.enumerate_elements().unwrap().map(|x| x.to_string()).collect();
        assert_eq!(v, ["0", "1"]);
        let gf3 = DivisionRing::prime_field(3).unwrap();
        let v: Vec<String> = gf3.enumerate_elements().unwrap().map(|x| x.to_string()).collect();
        assert_eq!(v, ["0", "1", "2"]);
        let gf4 = DivisionRing::finite_field(2, 2).unwrap();
        let all: Vec<RingElem> = gf4.enumerate_elements().unwrap().collect();
        assert_eq!(all.len(), 4);
        assert_eq!(all.iter().filter(|x| !x.is_zero()).count(), 3);
        let coords: Vec<Vec<u64>> = all.iter().map(|x| x.coordinates().unwrap()).collect();
        assert_eq!(coords, [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn infinite_rings_do_not_enumerate() {
        assert!(matches!(
            DivisionRing::Rational.enumerate_elements().map(|_| ()),
            Err(AlgError::Unsupported(_))
        ));
        assert!(DivisionRing::Quaternion.enumerate_elements().is_err());
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = DivisionRing::prime_field(3).unwrap().one();
        let b = DivisionRing::prime_field(5).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(AlgError::RingMismatch { .. })));
        assert!(matches!(a.try_mul(&DivisionRing::Rational.one()), Err(AlgError::RingMismatch { .. })));
    }

    #[test]
    fn descriptors() {
        assert_eq!(DivisionRing::Quaternion.characteristic(), 0);
        assert!(!DivisionRing::Quaternion.is_commutative());
        assert_eq!(DivisionRing::Rational.characteristic(), 0);
        let gf9 = DivisionRing::finite_field(3, 2).unwrap();
        assert_eq!(gf9.characteristic(), 3);
        assert_eq!(gf9.kind(), RingKind::ExtField);
        assert_eq!(gf9.order(), Some(9));
        assert_eq!(gf9.to_string(), "GF(3^2)");
    }

    #[test]
    fn integer_image_wraps() {
        let gf5 = DivisionRing::prime_field(5).unwrap();
        assert_eq!(gf5.from_i64(-1).to_string(), "4");
        assert!(gf5.from_i64(5).is_zero());
    }
}
