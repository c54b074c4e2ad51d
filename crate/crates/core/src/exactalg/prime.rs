use serde::{Deserialize, Serialize};

use super::AlgError;

/// Deterministic Miller-Rabin; the base set covers every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n == b {
            return true;
        }
        if n.is_multiple_of(b) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let m = PrimeModulus(n);
    'witness: for &b in &BASES {
        let mut x = m.pow(b, d as u128);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = m.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Raw residue arithmetic modulo a word-sized prime.
///
/// Residues are plain `u64` values in `[0, p)`; nothing here re-checks that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, AlgError> {
        if is_prime(p) {
            Ok(Self(p))
        } else {
            Err(AlgError::NotPrime(p))
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce_i64(self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.0 as i128) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.0 as u128) as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u128) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Result<u64, AlgError> {
        if a.is_multiple_of(self.0) {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.pow(a, self.0 as u128 - 2))
    }
}

/// An element of the prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    value: u64,
    modulus: PrimeModulus,
}

impl PrimeFieldElem {
    /// Builds `value mod p`, rejecting composite `p`.
    pub fn new(value: u64, p: u64) -> Result<Self, AlgError> {
        let modulus = PrimeModulus::new(p)?;
        Ok(Self::from_modulus(value, modulus))
    }

    pub fn from_modulus(value: u64, modulus: PrimeModulus) -> Self {
        Self { value: value % modulus.value(), modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus.value()
    }

    pub(crate) fn prime_modulus(&self) -> PrimeModulus {
        self.modulus
    }

    fn with(&self, value: u64) -> Self {
        Self { value, modulus: self.modulus }
    }

    pub(crate) fn add(&self, o: &Self) -> Self {
        self.with(self.modulus.add(self.value, o.value))
    }

    pub(crate) fn sub(&self, o: &Self) -> Self {
        self.with(self.modulus.sub(self.value, o.value))
    }

    pub(crate) fn mul(&self, o: &Self) -> Self {
        self.with(self.modulus.mul(self.value, o.value))
    }

    pub(crate) fn neg(&self) -> Self {
        self.with(self.modulus.neg(self.value))
    }

    pub(crate) fn inv(&self) -> Result<Self, AlgError> {
        Ok(self.with(self.modulus.inv(self.value)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(18446744073709551557 - 2));
        // strong pseudoprime to bases 2..=23
        assert!(!is_prime(3825123056546413051));
    }

    #[test]
    fn inverse_of_two_mod_five() {
        let two = PrimeFieldElem::new(2, 5).unwrap();
        assert_eq!(two.inv().unwrap().value(), 3);
        assert_eq!(
            PrimeFieldElem::new(0, 5).unwrap().inv(),
            Err(AlgError::DivisionByZero)
        );
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(PrimeFieldElem::new(1, 9), Err(AlgError::NotPrime(9)));
    }

    #[test]
    fn large_modulus_arithmetic_does_not_overflow() {
        let p = 18446744073709551557;
        let m = PrimeModulus::new(p).unwrap();
        let a = p - 1;
        assert_eq!(m.mul(a, a), 1);
        assert_eq!(m.add(a, a), p - 2);
        assert_eq!(m.mul(m.inv(a).unwrap(), a), 1);
    }
}
