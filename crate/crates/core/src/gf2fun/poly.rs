use std::fmt;

use super::Gf2Error;

/// Carryless 64x64 -> 128 product, as (low, high).
#[inline]
fn clmul64(a: u64, b: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    let mut bits = a;
    while bits != 0 {
        let i = bits.trailing_zeros();
        lo ^= b << i;
        if i > 0 {
            hi ^= b >> (64 - i);
        }
        bits &= bits - 1;
    }
    (lo, hi)
}

/// Moves bit `i` of a 32-bit value to bit `2i`.
#[inline]
fn spread32(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

/// Collects the even-index bits of `x` into the low 32 bits.
#[inline]
fn compact_even(x: u64) -> u32 {
    let mut x = x & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    ((x | (x >> 16)) & 0xFFFF_FFFF) as u32
}

/// A polynomial over GF(2), bit-packed little-endian: bit `i` is the
/// coefficient of `t^i`. The top limb is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    limbs: Vec<u64>,
}

impl Gf2Poly {
    fn from_limbs(mut limbs: Vec<u64>) -> Self {
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        Self { limbs }
    }

    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self { limbs: vec![2] }
    }

    pub fn monomial(k: usize) -> Self {
        let mut limbs = vec![0; k / 64 + 1];
        limbs[k / 64] = 1 << (k % 64);
        Self { limbs }
    }

    /// Low-order word as coefficient bits, e.g. `0b1011` is `t^3+t+1`.
    pub fn from_u64(bits: u64) -> Self {
        Self::from_limbs(vec![bits])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        exps.into_iter().fold(Self::zero(), |acc, e| acc.add(&Self::monomial(e)))
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| wi * 64 + b)
        })
    }

    pub fn term_count(&self) -> usize {
        self.limbs.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (l, s) in limbs.iter_mut().zip(&short.limbs) {
            *l ^= s;
        }
        Self::from_limbs(limbs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u64; self.limbs.len() + other.limbs.len()];
        for (i, &a) in self.limbs.iter().enumerate() {
            for (j, &b) in other.limbs.iter().enumerate() {
                let (lo, hi) = clmul64(a, b);
                out[i + j] ^= lo;
                out[i + j + 1] ^= hi;
            }
        }
        Self::from_limbs(out)
    }

    /// Multiplication by `t^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (words, bits) = (k / 64, k % 64);
        let mut out = vec![0u64; self.limbs.len() + words + 1];
        for (i, &w) in self.limbs.iter().enumerate() {
            out[i + words] ^= w << bits;
            if bits > 0 {
                out[i + words + 1] ^= w >> (64 - bits);
            }
        }
        Self::from_limbs(out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), Gf2Error> {
        let db = divisor.degree().ok_or(Gf2Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let shift = dr - db;
            rem = rem.add(&divisor.shl(shift));
            quot = quot.add(&Self::monomial(shift));
        }
        Ok((quot, rem))
    }

    /// Euclidean gcd. Every nonzero polynomial over GF(2) is monic, so the
    /// result is canonical as is.
    pub fn gcd(&self, other: &Self) -> Result<Self, Gf2Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Gf2Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a)
    }

    /// `(P, Q)` with `self(t) = P(t^2) + Q(t^2) t`.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let n = self.limbs.len().div_ceil(2);
        let mut even = vec![0u64; n];
        let mut odd = vec![0u64; n];
        for (i, &w) in self.limbs.iter().enumerate() {
            let shift = 32 * (i % 2);
            even[i / 2] |= (compact_even(w) as u64) << shift;
            odd[i / 2] |= (compact_even(w >> 1) as u64) << shift;
        }
        (Self::from_limbs(even), Self::from_limbs(odd))
    }

    /// `self(t^2)`, which equals `self(t)^2` over GF(2).
    pub fn frobenius_sub(&self) -> Self {
        let mut out = Vec::with_capacity(2 * self.limbs.len());
        for &w in &self.limbs {
            out.push(spread32(w as u32));
            out.push(spread32((w >> 32) as u32));
        }
        Self::from_limbs(out)
    }
}

impl fmt::Display for Gf2Poly {
    /// Descending degree: `t^3+t+1`, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for e in self.exponents().rev() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> Gf2Poly {
        Gf2Poly::from_u64(bits)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(p(0b101).add(&p(0b110)), p(0b11));
        let a = p(0b1101_0011);
        assert!(a.add(&a).is_zero());
        assert_eq!(a.add(&Gf2Poly::zero()), a);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(p(0b11).mul(&p(0b11)), p(0b101));
        let a = p(0b1011_0110);
        assert_eq!(a.mul(&Gf2Poly::one()), a);
        assert_eq!(p(0b110).mul(&Gf2Poly::t()), p(0b1100));
    }

    #[test]
    fn multiplication_across_limbs() {
        let a = Gf2Poly::from_exponents([0, 63, 64, 100]);
        let b = Gf2Poly::from_exponents([1, 64]);
        let expected = Gf2Poly::from_exponents([1, 64, 65, 101, 64, 127, 128, 164]);
        assert_eq!(a.mul(&b), expected);
        assert_eq!(a.mul(&b).degree(), Some(164));
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(p(0b1010).divmod(&p(0b101)).unwrap(), (p(0b10), Gf2Poly::zero()));
        assert_eq!(p(0b111).divmod(&p(0b10)).unwrap(), (p(0b11), p(1)));
        let a = p(0b1_0110_1101);
        assert_eq!(a.divmod(&a).unwrap(), (Gf2Poly::one(), Gf2Poly::zero()));
        assert_eq!(a.divmod(&Gf2Poly::zero()), Err(Gf2Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(0b1010).gcd(&p(0b101)).unwrap(), p(0b101));
        let a = p(0b1_1001);
        assert_eq!(a.gcd(&Gf2Poly::zero()).unwrap(), a);
        assert_eq!(Gf2Poly::t().gcd(&p(0b11)).unwrap(), Gf2Poly::one());
        assert_eq!(Gf2Poly::zero().gcd(&Gf2Poly::zero()), Err(Gf2Error::GcdOfZeros));
    }

    #[test]
    fn split_examples() {
        assert_eq!(p(0b1111).even_odd_split(), (p(0b11), p(0b11)));
        assert_eq!(Gf2Poly::one().even_odd_split(), (Gf2Poly::one(), Gf2Poly::zero()));
        assert_eq!(Gf2Poly::t().even_odd_split(), (Gf2Poly::zero(), Gf2Poly::one()));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(p(0b11).frobenius_sub(), p(0b101));
        assert!(Gf2Poly::zero().frobenius_sub().is_zero());
        assert_eq!(p(0b100).frobenius_sub(), Gf2Poly::monomial(4));
        assert_eq!(
            Gf2Poly::from_exponents([40, 63, 64, 70]).frobenius_sub(),
            Gf2Poly::from_exponents([80, 126, 128, 140])
        );
    }

    #[test]
    fn degree_of_zero_is_sentinel() {
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(Gf2Poly::one().degree(), Some(0));
        assert_eq!(Gf2Poly::monomial(129).degree(), Some(129));
    }

    #[test]
    fn display() {
        assert_eq!(p(0b1011).to_string(), "t^3+t+1");
        assert_eq!(Gf2Poly::zero().to_string(), "0");
        assert_eq!(Gf2Poly::t().to_string(), "t");
    }
}
