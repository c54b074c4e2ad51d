use std::fmt;
use std::sync::Arc;

use super::prime::PrimeModulus;
use super::AlgError;

/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: usize = 8;

/// Dense polynomials over GF(p), little-endian, no trailing zeros.
pub(crate) mod fp_poly {
    use super::PrimeModulus;

    pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn sub(m: PrimeModulus, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| m.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(out)
    }

    pub fn mul(m: PrimeModulus, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = m.add(out[i + j], m.mul(x, y));
            }
        }
        trim(out)
    }

    /// `(quotient, remainder)`; `b` must be nonzero.
    pub fn divrem(m: PrimeModulus, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let b = trim(b.to_vec());
        assert!(!b.is_empty(), "polynomial division by zero");
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = m.inv(*b.last().unwrap()).expect("nonzero leading coefficient");
        let mut q = vec![0; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = m.mul(*r.last().unwrap(), lead_inv);
            q[shift] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = m.sub(r[shift + j], m.mul(c, bj));
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn rem(m: PrimeModulus, a: &[u64], b: &[u64]) -> Vec<u64> {
        divrem(m, a, b).1
    }

    pub fn monic_gcd(m: PrimeModulus, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let r = rem(m, &x, &y);
            x = y;
            y = r;
        }
        if let Some(&lead) = x.last() {
            let li = m.inv(lead).expect("nonzero");
            x.iter_mut().for_each(|c| *c = m.mul(*c, li));
        }
        x
    }

    /// `base^exp mod modulus`.
    pub fn pow_mod(m: PrimeModulus, base: &[u64], mut exp: u64, modulus: &[u64]) -> Vec<u64> {
        let mut acc = vec![1];
        let mut b = rem(m, base, modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = rem(m, &mul(m, &acc, &b), modulus);
            }
            b = rem(m, &mul(m, &b, &b), modulus);
            exp >>= 1;
        }
        rem(m, &acc, modulus)
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic polynomial of degree >= 1.
pub(crate) fn is_irreducible(m: PrimeModulus, f: &[u64]) -> bool {
    let k = f.len() - 1;
    let p = m.value();
    let s = vec![0, 1];
    // frob[i] = s^(p^i) mod f
    let mut frob = vec![fp_poly::rem(m, &s, f)];
    for _ in 0..k {
        let next = fp_poly::pow_mod(m, frob.last().unwrap(), p, f);
        frob.push(next);
    }
    if fp_poly::sub(m, &frob[k], &fp_poly::rem(m, &s, f)) != Vec::<u64>::new() {
        return false;
    }
    prime_factors(k).into_iter().all(|q| {
        let diff = fp_poly::sub(m, &frob[k / q], &s);
        fp_poly::monic_gcd(m, &diff, f) == vec![1]
    })
}

/// The field GF(p^k) = GF(p)[s] / (modulus).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    prime: PrimeModulus,
    /// Monic, little-endian, length `degree + 1`.
    modulus: Vec<u64>,
}

impl ExtField {
    /// Builds the field from a monic irreducible `modulus` (little-endian, leading 1 included).
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Arc<Self>, AlgError> {
        let prime = PrimeModulus::new(p)?;
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        let modulus = fp_poly::trim(modulus);
        let degree = modulus.len().saturating_sub(1);
        if degree == 0 || degree > MAX_EXTENSION_DEGREE {
            return Err(AlgError::InvalidModulus(format!(
                "degree {degree} outside 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(AlgError::InvalidModulus("modulus must be monic".into()));
        }
        if !is_irreducible(prime, &modulus) {
            return Err(AlgError::ReducibleModulus);
        }
        Ok(Arc::new(Self { prime, modulus }))
    }

    /// The smallest monic irreducible of degree `k`, ordering candidates by
    /// `sum c_j p^j` over the non-leading coefficients.
    pub fn with_default_modulus(p: u64, k: usize) -> Result<Arc<Self>, AlgError> {
        let prime = PrimeModulus::new(p)?;
        if k == 0 || k > MAX_EXTENSION_DEGREE {
            return Err(AlgError::InvalidModulus(format!(
                "degree {k} outside 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        let mut digits = vec![0u64; k];
        loop {
            let mut candidate = digits.clone();
            candidate.push(1);
            if is_irreducible(prime, &candidate) {
                return Ok(Arc::new(Self { prime, modulus: candidate }));
            }
            // base-p increment, c_0 least significant
            let mut i = 0;
            loop {
                if i == k {
                    unreachable!("an irreducible of every degree exists");
                }
                digits[i] += 1;
                if digits[i] == p {
                    digits[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.prime.value()
    }

    pub fn prime_modulus(&self) -> PrimeModulus {
        self.prime
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// `p^k`, when it fits.
    pub fn order(&self) -> Option<u128> {
        (self.prime.value() as u128).checked_pow(self.degree() as u32)
    }
}

impl fmt::Display for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.characteristic(), self.degree())
    }
}

/// An element of GF(p^k) in the monomial basis `1, s, ..., s^(k-1)`.
#[derive(Clone, Debug)]
pub struct ExtFieldElem {
    coeffs: Vec<u64>,
    field: Arc<ExtField>,
}

impl PartialEq for ExtFieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for ExtFieldElem {}

impl std::hash::Hash for ExtFieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl ExtFieldElem {
    /// Reduces an arbitrary coefficient vector into the field.
    pub fn new(field: &Arc<ExtField>, coeffs: &[u64]) -> Self {
        let m = field.prime;
        let raw: Vec<u64> = coeffs.iter().map(|c| c % m.value()).collect();
        let reduced = fp_poly::rem(m, &raw, &field.modulus);
        Self::from_reduced(field, reduced)
    }

    fn from_reduced(field: &Arc<ExtField>, mut coeffs: Vec<u64>) -> Self {
        coeffs.resize(field.degree(), 0);
        Self { coeffs, field: Arc::clone(field) }
    }

    /// The generator `s` of the power basis (equals the constant when k = 1).
    pub fn generator(field: &Arc<ExtField>) -> Self {
        Self::new(field, &[0, 1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub(crate) fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Self { coeffs, field: Arc::clone(&self.field) }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let m = self.field.prime;
        self.zip(other, |a, b| m.add(a, b))
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let m = self.field.prime;
        self.zip(other, |a, b| m.sub(a, b))
    }

    pub(crate) fn neg(&self) -> Self {
        let m = self.field.prime;
        Self {
            coeffs: self.coeffs.iter().map(|&c| m.neg(c)).collect(),
            field: Arc::clone(&self.field),
        }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let m = self.field.prime;
        let prod = fp_poly::mul(m, &self.coeffs, &other.coeffs);
        Self::from_reduced(&self.field, fp_poly::rem(m, &prod, &self.field.modulus))
    }

    /// Extended Euclid against the modulus.
    pub(crate) fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let m = self.field.prime;
        let (mut r0, mut r1) = (self.field.modulus.clone(), fp_poly::trim(self.coeffs.clone()));
        let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = fp_poly::divrem(m, &r0, &r1);
            let t = fp_poly::sub(m, &t0, &fp_poly::mul(m, &q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        let c = m.inv(r0[0])?;
        let t: Vec<u64> = t0.iter().map(|&x| m.mul(x, c)).collect();
        Ok(Self::from_reduced(
            &self.field,
            fp_poly::rem(m, &t, &self.field.modulus),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Trial division over every monic polynomial of degree <= k/2.
    fn irreducible_by_trial_division(m: PrimeModulus, f: &[u64]) -> bool {
        let k = f.len() - 1;
        let p = m.value();
        for d in 1..=k / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut g: Vec<u64> = (0..d)
                    .map(|j| (idx / p.pow(j as u32)) % p)
                    .collect();
                g.push(1);
                if fp_poly::rem(m, f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for p in [2u64, 3, 5] {
            let m = PrimeModulus::new(p).unwrap();
            for k in 1..=4usize {
                let total = p.pow(k as u32);
                for idx in 0..total {
                    let mut f: Vec<u64> = (0..k).map(|j| (idx / p.pow(j as u32)) % p).collect();
                    f.push(1);
                    assert_eq!(
                        is_irreducible(m, &f),
                        irreducible_by_trial_division(m, &f),
                        "p={p} f={f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn default_moduli() {
        assert_eq!(ExtField::with_default_modulus(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(ExtField::with_default_modulus(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(ExtField::with_default_modulus(3, 2).unwrap().modulus(), &[1, 0, 1]);
        for p in [2, 3, 5, 7] {
            for k in 1..=4 {
                let f = ExtField::with_default_modulus(p, k).unwrap();
                assert_eq!(f.degree(), k);
                assert!(irreducible_by_trial_division(f.prime_modulus(), f.modulus()));
            }
        }
    }

    #[test]
    fn gf4_inverse_of_generator() {
        let f = ExtField::new(2, vec![1, 1, 1]).unwrap();
        let a = ExtFieldElem::generator(&f);
        let inv = a.inv().unwrap();
        assert_eq!(inv, a.add(&ExtFieldElem::new(&f, &[1])));
        assert_eq!(a.mul(&inv).coeffs(), &[1, 0]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(ExtField::new(2, vec![1, 0, 1]), Err(AlgError::ReducibleModulus));
        assert!(matches!(ExtField::new(5, vec![1, 1, 3]), Err(AlgError::InvalidModulus(_))));
        assert!(matches!(
            ExtField::new(2, vec![1; 11]),
            Err(AlgError::InvalidModulus(_))
        ));
    }

    #[test]
    fn every_nonzero_element_inverts() {
        let f = ExtField::with_default_modulus(3, 3).unwrap();
        for idx in 1..27u64 {
            let x = ExtFieldElem::new(&f, &[idx % 3, (idx / 3) % 3, idx / 9]);
            let one = ExtFieldElem::new(&f, &[1]);
            assert_eq!(x.mul(&x.inv().unwrap()), one);
        }
    }
}
