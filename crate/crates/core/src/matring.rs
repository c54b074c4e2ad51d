//! Square matrices `M_m(D)` over an exact division ring `D`.
//!
//! Products keep entry order (`sum_k a_ik b_kj`), and elimination only ever
//! multiplies rows on the left, so everything here is valid over the
//! quaternions as well as over fields. Indices are 0-based.

use std::fmt;

use thiserror::Error;

use crate::exactalg::{AlgError, DivisionRing, RingElem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("entry from {found} in a matrix over {ring}")]
    RingMismatch { ring: String, found: String },
    #[error("index ({i}, {j}) out of range for dimension {m}")]
    IndexOutOfRange { m: usize, i: usize, j: usize },
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Alg(#[from] AlgError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    m: usize,
    ring: DivisionRing,
    /// Row-major.
    entries: Vec<RingElem>,
}

impl SquareMatrix {
    pub fn new(m: usize, ring: DivisionRing, entries: Vec<RingElem>) -> Result<Self, MatError> {
        if m == 0 {
            return Err(MatError::EmptyMatrix);
        }
        if entries.len() != m * m {
            return Err(MatError::EntryCount { expected: m * m, got: entries.len() });
        }
        let probe = ring.zero();
        if let Some(bad) = entries.iter().find(|e| !e.same_ring(&probe)) {
            return Err(MatError::RingMismatch {
                ring: ring.to_string(),
                found: bad.ring().to_string(),
            });
        }
        Ok(Self { m, ring, entries })
    }

    pub fn from_fn(
        m: usize,
        ring: &DivisionRing,
        f: impl Fn(usize, usize) -> RingElem,
    ) -> Result<Self, MatError> {
        let entries = (0..m * m).map(|idx| f(idx / m, idx % m)).collect();
        Self::new(m, ring.clone(), entries)
    }

    pub fn zero(m: usize, ring: &DivisionRing) -> Result<Self, MatError> {
        let z = ring.zero();
        Self::from_fn(m, ring, |_, _| z.clone())
    }

    pub fn identity(m: usize, ring: &DivisionRing) -> Result<Self, MatError> {
        Self::scalar(m, &ring.one())
    }

    /// `a` times the identity.
    pub fn scalar(m: usize, a: &RingElem) -> Result<Self, MatError> {
        let ring = a.ring();
        let z = ring.zero();
        Self::from_fn(m, &ring, |i, j| if i == j { a.clone() } else { z.clone() })
    }

    pub fn diagonal(ring: &DivisionRing, diag: &[RingElem]) -> Result<Self, MatError> {
        let z = ring.zero();
        Self::from_fn(diag.len(), ring, |i, j| if i == j { diag[i].clone() } else { z.clone() })
    }

    /// The matrix unit `e_ij`.
    pub fn basis_unit(m: usize, i: usize, j: usize, ring: &DivisionRing) -> Result<Self, MatError> {
        if i >= m || j >= m {
            return Err(MatError::IndexOutOfRange { m, i, j });
        }
        let (z, one) = (ring.zero(), ring.one());
        Self::from_fn(m, ring, |r, c| if (r, c) == (i, j) { one.clone() } else { z.clone() })
    }

    /// Builds a matrix over a finite ring from row-major prime-subfield coordinates.
    pub fn from_coordinates(m: usize, ring: &DivisionRing, coords: &[u64]) -> Result<Self, MatError> {
        let k = ring
            .prime_degree()
            .ok_or_else(|| AlgError::Unsupported(ring.to_string()))?;
        if coords.len() != m * m * k {
            return Err(MatError::EntryCount { expected: m * m * k, got: coords.len() });
        }
        let entries = coords
            .chunks(k)
            .map(|c| ring.from_coordinates(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(m, ring.clone(), entries)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> &DivisionRing {
        &self.ring
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.m + j]
    }

    /// Row-major prime-subfield coordinates (finite rings only).
    pub fn coordinates(&self) -> Option<Vec<u64>> {
        let mut out = Vec::new();
        for e in &self.entries {
            out.extend(e.coordinates()?);
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.m).all(|i| {
            (0..self.m).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<(), MatError> {
        if self.m != other.m {
            return Err(MatError::DimensionMismatch(self.m, other.m));
        }
        if self.ring != other.ring {
            return Err(MatError::RingMismatch {
                ring: self.ring.to_string(),
                found: other.ring.to_string(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&RingElem, &RingElem) -> RingElem) -> Result<Self, MatError> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Self { m: self.m, ring: self.ring.clone(), entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Self {
            m: self.m,
            ring: self.ring.clone(),
            entries: self.entries.iter().map(RingElem::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatError> {
        self.check_compatible(other)?;
        let m = self.m;
        let zero = self.ring.zero();
        let entries = (0..m * m)
            .map(|idx| {
                let (i, j) = (idx / m, idx % m);
                (0..m).fold(zero.clone(), |acc, k| acc + &(self.get(i, k) * other.get(k, j)))
            })
            .collect();
        Ok(Self { m, ring: self.ring.clone(), entries })
    }

    /// `a * self`, with `a` multiplying every entry from the left.
    pub fn scale_left(&self, a: &RingElem) -> Result<Self, MatError> {
        let entries = self
            .entries
            .iter()
            .map(|e| a.try_mul(e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { m: self.m, ring: self.ring.clone(), entries })
    }

    /// Gauss-Jordan on `[self | I]`, pivoting on the first nonzero entry of
    /// each column. `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let m = self.m;
        let mut a: Vec<Vec<RingElem>> =
            (0..m).map(|i| self.entries[i * m..(i + 1) * m].to_vec()).collect();
        let one = self.ring.one();
        let zero = self.ring.zero();
        let mut inv: Vec<Vec<RingElem>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { one.clone() } else { zero.clone() }).collect())
            .collect();
        for col in 0..m {
            let pivot = (col..m).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p_inv = a[col][col].inv().expect("nonzero pivot");
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &p_inv * &*x;
            }
            for r in 0..m {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..m {
                    let da = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &di;
                }
            }
        }
        Some(Self { m, ring: self.ring.clone(), entries: inv.into_iter().flatten().collect() })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    /// `self^n`; negative `n` requires invertibility.
    pub fn pow(&self, n: i64) -> Result<Self, MatError> {
        let base = if n < 0 { self.inverse().ok_or(MatError::Singular)? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = Self::identity(self.m, &self.ring)?;
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).is_ok_and(|sq| sq == *self)
    }

    /// `1 - 2x` for an idempotent `x`; it squares to the identity.
    pub fn idempotent_reflection(&self) -> Result<Self, MatError> {
        if !self.is_idempotent() {
            return Err(MatError::NotIdempotent);
        }
        let two = self.ring.from_i64(2);
        Self::identity(self.m, &self.ring)?.sub(&self.scale_left(&two)?)
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquareMatrix[{}; {}](", self.m, self.ring)?;
        for i in 0..self.m {
            let row: Vec<String> = (0..self.m).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str(")")
    }
}

/// Which inverse in `a - (a^-1 + (b^-1 - a)^-1)^-1` failed to exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HuaInverse {
    A,
    B,
    BInvMinusA,
    InnerSum,
}

impl fmt::Display for HuaInverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A => "a^-1",
            Self::B => "b^-1",
            Self::BInvMinusA => "(b^-1 - a)^-1",
            Self::InnerSum => "(a^-1 + (b^-1 - a)^-1)^-1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HuaOutcome {
    /// `(a - (a^-1 + (b^-1 - a)^-1)^-1) - a b a`; zero whenever Hua's identity holds.
    Residual(SquareMatrix),
    PreconditionFailed(HuaInverse),
}

impl HuaOutcome {
    pub fn is_zero_residual(&self) -> bool {
        matches!(self, Self::Residual(r) if r.is_zero())
    }
}

/// Hua's identity `a - (a^-1 + (b^-1 - a)^-1)^-1 = a b a`, checked exactly.
pub fn hua_check(a: &SquareMatrix, b: &SquareMatrix) -> Result<HuaOutcome, MatError> {
    a.check_compatible(b)?;
    use HuaOutcome::PreconditionFailed as Fail;
    let Some(a_inv) = a.inverse() else { return Ok(Fail(HuaInverse::A)) };
    let Some(b_inv) = b.inverse() else { return Ok(Fail(HuaInverse::B)) };
    let Some(c_inv) = b_inv.sub(a)?.inverse() else { return Ok(Fail(HuaInverse::BInvMinusA)) };
    let Some(inner_inv) = a_inv.add(&c_inv)?.inverse() else {
        return Ok(Fail(HuaInverse::InnerSum));
    };
    let lhs = a.sub(&inner_inv)?;
    let aba = a.mul(b)?.mul(a)?;
    Ok(HuaOutcome::Residual(lhs.sub(&aba)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{BigRational, Quaternion};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> DivisionRing {
        DivisionRing::prime_field(p).unwrap()
    }

    fn unit(m: usize, i: usize, j: usize, ring: &DivisionRing) -> SquareMatrix {
        SquareMatrix::basis_unit(m, i, j, ring).unwrap()
    }

    fn quat(q: Quaternion) -> RingElem {
        RingElem::Quaternion(q)
    }

    fn random_matrix(rng: &mut ChaCha8Rng, m: usize, ring: &DivisionRing) -> SquareMatrix {
        let entries = (0..m * m).map(|_| sample::ring_elem(rng, ring)).collect();
        SquareMatrix::new(m, ring.clone(), entries).unwrap()
    }

    fn random_invertible(rng: &mut ChaCha8Rng, m: usize, ring: &DivisionRing) -> SquareMatrix {
        loop {
            let x = random_matrix(rng, m, ring);
            if x.is_invertible() {
                return x;
            }
        }
    }

    #[test]
    fn matrix_unit_products() {
        let r = gf(5);
        let e11 = unit(2, 0, 0, &r);
        let e12 = unit(2, 0, 1, &r);
        assert_eq!(e11.mul(&e12).unwrap(), e12);
        assert!(e12.mul(&e11).unwrap().is_zero());
        let x = random_matrix(&mut ChaCha8Rng::seed_from_u64(3), 2, &r);
        assert_eq!(SquareMatrix::identity(2, &r).unwrap().mul(&x).unwrap(), x);
        for (i, j, k, l) in index_quads(3) {
            let prod = unit(3, i, j, &r).mul(&unit(3, k, l, &r)).unwrap();
            if j == k {
                assert_eq!(prod, unit(3, i, l, &r));
            } else {
                assert!(prod.is_zero());
            }
        }
    }

    fn index_quads(m: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        out.push((i, j, k, l));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn basis_unit_examples() {
        let r = gf(3);
        let e11 = unit(2, 0, 0, &r);
        assert_eq!(e11.mul(&e11).unwrap(), e11);
        let sum = (0..3).fold(SquareMatrix::zero(3, &r).unwrap(), |acc, i| acc.add(&unit(3, i, i, &r)).unwrap());
        assert!(sum.is_identity());
        let e12 = unit(2, 0, 1, &gf(2));
        assert!(e12.add(&e12).unwrap().is_zero());
        assert_eq!(
            SquareMatrix::basis_unit(2, 2, 0, &r),
            Err(MatError::IndexOutOfRange { m: 2, i: 2, j: 0 })
        );
    }

    #[test]
    fn inverse_examples() {
        let h = DivisionRing::Quaternion;
        let d = SquareMatrix::diagonal(&h, &[quat(Quaternion::i()), quat(Quaternion::j())]).unwrap();
        let expected =
            SquareMatrix::diagonal(&h, &[quat(Quaternion::i().neg()), quat(Quaternion::j().neg())]).unwrap();
        assert_eq!(d.inverse().unwrap(), expected);

        let q = DivisionRing::Rational;
        let a = q.from_i64(7);
        let id = SquareMatrix::identity(2, &q).unwrap();
        let x = id.add(&unit(2, 0, 1, &q).scale_left(&a).unwrap()).unwrap();
        let y = id.sub(&unit(2, 0, 1, &q).scale_left(&a).unwrap()).unwrap();
        assert_eq!(x.inverse().unwrap(), y);

        // char 2: -a = a
        let f2 = gf(2);
        let x = SquareMatrix::identity(2, &f2).unwrap().add(&unit(2, 0, 1, &f2)).unwrap();
        assert_eq!(x.inverse().unwrap(), x);

        assert_eq!(unit(2, 0, 1, &q).inverse(), None);
    }

    #[test]
    fn random_inverses_are_two_sided() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let rings = [
            gf(2),
            gf(7),
            DivisionRing::finite_field(3, 2).unwrap(),
            DivisionRing::Rational,
            DivisionRing::Quaternion,
        ];
        for ring in &rings {
            for m in 1..=3 {
                for _ in 0..200 / 3 + 1 {
                    let x = random_invertible(&mut rng, m, ring);
                    let y = x.inverse().unwrap();
                    assert!(x.mul(&y).unwrap().is_identity(), "{x:?}");
                    assert!(y.mul(&x).unwrap().is_identity(), "{x:?}");
                }
            }
        }
    }

    #[test]
    fn noncommutative_pivot_needs_left_multiplication() {
        // a non-diagonal quaternion matrix whose elimination scales by non-central pivots
        let h = DivisionRing::Quaternion;
        let e = |a, b, c, d| quat(Quaternion::from_integers(a, b, c, d));
        let x = SquareMatrix::new(2, h, vec![e(0, 1, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1), e(1, 1, 0, 0)]).unwrap();
        let y = x.inverse().unwrap();
        assert!(x.mul(&y).unwrap().is_identity());
        assert!(y.mul(&x).unwrap().is_identity());
    }

    #[test]
    fn hua_examples() {
        let q = DivisionRing::Rational;
        let s = |n| SquareMatrix::scalar(1, &q.from_i64(n)).unwrap();
        assert!(hua_check(&s(2), &s(3)).unwrap().is_zero_residual());

        let h = DivisionRing::Quaternion;
        let a = SquareMatrix::scalar(1, &quat(Quaternion::i())).unwrap();
        let b = SquareMatrix::scalar(1, &quat(Quaternion::j())).unwrap();
        assert_eq!(a.mul(&b).unwrap().mul(&a).unwrap(), b);
        assert!(hua_check(&a, &b).unwrap().is_zero_residual());
        let _ = h;

        assert_eq!(hua_check(&s(0), &s(3)).unwrap(), HuaOutcome::PreconditionFailed(HuaInverse::A));
        assert_eq!(hua_check(&s(3), &s(0)).unwrap(), HuaOutcome::PreconditionFailed(HuaInverse::B));
        // ab = 1: b^-1 - a = 0
        let half = SquareMatrix::scalar(1, &RingElem::Rational(BigRational::new(1.into(), 2.into()))).unwrap();
        assert_eq!(
            hua_check(&s(2), &half).unwrap(),
            HuaOutcome::PreconditionFailed(HuaInverse::BInvMinusA)
        );
    }

    #[test]
    fn hua_over_gf5_matrices() {
        let r = gf(5);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        while checked < 100 {
            let a = random_matrix(&mut rng, 2, &r);
            let b = random_matrix(&mut rng, 2, &r);
            match hua_check(&a, &b).unwrap() {
                HuaOutcome::Residual(res) => {
                    assert!(res.is_zero());
                    checked += 1;
                }
                HuaOutcome::PreconditionFailed(_) => {}
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let r = gf(5);
        let e11 = unit(2, 0, 0, &r);
        let refl = e11.idempotent_reflection().unwrap();
        assert_eq!(refl, SquareMatrix::diagonal(&r, &[r.from_i64(-1), r.one()]).unwrap());
        assert!(refl.mul(&refl).unwrap().is_identity());
        assert!(SquareMatrix::zero(2, &r).unwrap().idempotent_reflection().unwrap().is_identity());
        let id = SquareMatrix::identity(3, &r).unwrap();
        let refl = id.idempotent_reflection().unwrap();
        assert_eq!(refl, id.neg());
        assert!(refl.mul(&refl).unwrap().is_identity());
        assert_eq!(unit(2, 0, 1, &r).idempotent_reflection(), Err(MatError::NotIdempotent));
    }

    #[test]
    fn every_matrix_is_a_combination_of_units() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for ring in [gf(7), DivisionRing::Quaternion] {
            let x = random_matrix(&mut rng, 3, &ring);
            let mut sum = SquareMatrix::zero(3, &ring).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    sum = sum.add(&unit(3, i, j, &ring).scale_left(x.get(i, j)).unwrap()).unwrap();
                }
            }
            assert_eq!(sum, x);
        }
    }

    #[test]
    fn construction_errors() {
        let r = gf(3);
        assert_eq!(SquareMatrix::zero(0, &r), Err(MatError::EmptyMatrix));
        assert_eq!(
            SquareMatrix::new(2, r.clone(), vec![r.one(); 3]),
            Err(MatError::EntryCount { expected: 4, got: 3 })
        );
        assert!(matches!(
            SquareMatrix::new(1, r.clone(), vec![gf(5).one()]),
            Err(MatError::RingMismatch { .. })
        ));
        let a = SquareMatrix::identity(2, &r).unwrap();
        let b = SquareMatrix::identity(3, &r).unwrap();
        assert_eq!(a.mul(&b), Err(MatError::DimensionMismatch(2, 3)));
        assert!(matches!(a.add(&SquareMatrix::identity(2, &gf(5)).unwrap()), Err(MatError::RingMismatch { .. })));
    }

    #[test]
    fn pow_and_coordinates() {
        let r = DivisionRing::finite_field(2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x = random_invertible(&mut rng, 2, &r);
        assert!(x.pow(3).unwrap().mul(&x.pow(-3).unwrap()).unwrap().is_identity());
        assert!(x.pow(0).unwrap().is_identity());
        let coords = x.coordinates().unwrap();
        assert_eq!(coords.len(), 8);
        assert_eq!(SquareMatrix::from_coordinates(2, &r, &coords).unwrap(), x);
        assert_eq!(unit(2, 0, 1, &r).pow(-1), Err(MatError::Singular));
    }
}
