//! Seeded random generators for the sampled property checks.
//!
//! Polynomials over GF(2) get uniform coefficient bits up to a degree bound.
//! Rationals are `num/den` with `num` uniform in `[-RATIONAL_BOX, RATIONAL_BOX]`
//! and `den` uniform in `[1, RATIONAL_BOX]`; quaternions use four such
//! coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::exactalg::{DivisionRing, Quaternion, RingElem};
use crate::gf2fun::{Gf2Poly, Gf2Rat};

pub const RATIONAL_BOX: i64 = 9;

/// Uniform over polynomials of degree <= `max_deg` (zero included).
pub fn poly<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Gf2Poly {
    Gf2Poly::from_exponents((0..=max_deg).filter(|_| rng.random::<bool>()))
}

pub fn nonzero_poly<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Gf2Poly {
    loop {
        let p = poly(rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Numerator and denominator of degree <= `max_deg`; the denominator is
/// resampled until nonzero.
pub fn rat<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Gf2Rat {
    let num = poly(rng, max_deg);
    let den = nonzero_poly(rng, max_deg);
    Gf2Rat::new(num, den).expect("nonzero denominator")
}

pub fn nonzero_rat<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Gf2Rat {
    let num = nonzero_poly(rng, max_deg);
    let den = nonzero_poly(rng, max_deg);
    Gf2Rat::new(num, den).expect("nonzero denominator")
}

pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let n = rng.random_range(-RATIONAL_BOX..=RATIONAL_BOX);
    let d = rng.random_range(1..=RATIONAL_BOX);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Uniform element of a finite ring; box-sampled element of Q or H(Q).
pub fn ring_elem<R: Rng + ?Sized>(rng: &mut R, ring: &DivisionRing) -> RingElem {
    match ring {
        DivisionRing::Rational => RingElem::Rational(rational(rng)),
        DivisionRing::Quaternion => RingElem::Quaternion(Quaternion::new(
            rational(rng),
            rational(rng),
            rational(rng),
            rational(rng),
        )),
        finite => {
            let p = finite.characteristic();
            let k = finite.prime_degree().expect("finite ring");
            let coords: Vec<u64> = (0..k).map(|_| rng.random_range(0..p)).collect();
            finite.from_coordinates(&coords).expect("coordinate length")
        }
    }
}

pub fn nonzero_ring_elem<R: Rng + ?Sized>(rng: &mut R, ring: &DivisionRing) -> RingElem {
    loop {
        let x = ring_elem(rng, ring);
        if !x.is_zero() {
            return x;
        }
    }
}
