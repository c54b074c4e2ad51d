//! The exact space of all additive pairs `(f, g)` on a finite algebra `A`
//! with `x^-n f(x) + g(x^-1) = 0` for every invertible `x`.
//!
//! Additive maps on `A` are exactly the GF(p)-linear ones, so `f` and `g`
//! are `d x d` matrices over GF(p) (`d = dim_GF(p) A`). Each unit `x`
//! contributes the `d` linear equations `f(x) + x^n g(x^-1) = 0` in their
//! entries, and the solution space is the nullspace of that system.

mod algebra;
mod linalg;
mod sweep;

pub use algebra::{Algebra, AlgebraElem, AlgebraSpec};
pub use linalg::{Echelon, Rref};
pub use sweep::{dimension_sweep, example_regime, SweepConfig, SweepRow};

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{AlgError, PrimeModulus};
use crate::exec::Execution;
use crate::matring::MatError;

pub const DEFAULT_UNIT_CAP: u128 = 100_000;

/// Units are turned into rows this many at a time.
const UNIT_CHUNK: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{units} invertible elements exceed the unit cap of {cap}")]
    UnitCapExceeded { units: u128, cap: u128 },
    #[error("unit count overflows")]
    TooLarge,
    #[error("exponent must be positive")]
    InvalidExponent,
    #[error("map has shape {got}x{got}, expected {expected}x{expected}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("basis pair {index} violates the identity at a unit")]
    VerificationFailed { index: usize },
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Mat(#[from] MatError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Independent `f` and `g`.
    Pair,
    /// `g = f`.
    Single,
}

#[derive(Clone, Debug)]
pub struct SolverInstance {
    pub algebra: Algebra,
    pub exponent: u32,
    pub family: Family,
    pub unit_cap: u128,
}

impl SolverInstance {
    pub fn new(algebra: Algebra, exponent: u32, family: Family) -> Result<Self, SolverError> {
        if exponent == 0 {
            return Err(SolverError::InvalidExponent);
        }
        Ok(Self { algebra, exponent, family, unit_cap: DEFAULT_UNIT_CAP })
    }

    pub fn with_unit_cap(mut self, cap: u128) -> Self {
        self.unit_cap = cap;
        self
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `2 d^2` for pairs, `d^2` when `g = f`.
    pub fn unknowns(&self) -> usize {
        let d2 = self.dim() * self.dim();
        match self.family {
            Family::Pair => 2 * d2,
            Family::Single => d2,
        }
    }

    fn check_cap(&self) -> Result<u128, SolverError> {
        let units = self.algebra.unit_count().ok_or(SolverError::TooLarge)?;
        if units > self.unit_cap {
            return Err(SolverError::UnitCapExceeded { units, cap: self.unit_cap });
        }
        Ok(units)
    }
}

/// A GF(p)-linear map `A -> A` as a row-major `d x d` matrix acting on
/// coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AdditiveMapRep {
    pub dim: usize,
    #[serde(skip)]
    pub modulus: PrimeModulus,
    pub entries: Vec<u64>,
}

impl AdditiveMapRep {
    pub fn new(modulus: PrimeModulus, dim: usize, entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        Self { dim, modulus, entries }
    }

    pub fn zero(modulus: PrimeModulus, dim: usize) -> Self {
        Self::new(modulus, dim, vec![0; dim * dim])
    }

    /// `x -> c x` for an integer `c`.
    pub fn scalar(modulus: PrimeModulus, dim: usize, c: i64) -> Self {
        let c = modulus.reduce_i64(c);
        let entries = (0..dim * dim).map(|i| if i / dim == i % dim { c } else { 0 }).collect();
        Self::new(modulus, dim, entries)
    }

    pub fn identity(modulus: PrimeModulus, dim: usize) -> Self {
        Self::scalar(modulus, dim, 1)
    }

    /// Represents the additive map `h`, given its values on the GF(p)-basis.
    pub fn from_fn(algebra: &Algebra, h: impl Fn(&AlgebraElem) -> AlgebraElem) -> Self {
        let d = algebra.dim();
        let columns: Vec<Vec<u64>> =
            (0..d).map(|l| h(&algebra.basis_element(l)).coordinates()).collect();
        let entries = (0..d * d).map(|idx| columns[idx % d][idx / d]).collect();
        Self::new(algebra.prime_modulus(), d, entries)
    }

    pub fn apply(&self, coords: &[u64]) -> Vec<u64> {
        let p = self.modulus;
        (0..self.dim)
            .map(|i| {
                let row = &self.entries[i * self.dim..(i + 1) * self.dim];
                row.iter().zip(coords).fold(0, |acc, (&a, &x)| p.add(acc, p.mul(a, x)))
            })
            .collect()
    }

    pub fn eval(&self, algebra: &Algebra, x: &AlgebraElem) -> AlgebraElem {
        algebra
            .from_coordinates(&self.apply(&x.coordinates()))
            .expect("dimension matches algebra")
    }

    pub fn neg(&self) -> Self {
        let p = self.modulus;
        Self::new(p, self.dim, self.entries.iter().map(|&x| p.neg(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionPair {
    pub f: AdditiveMapRep,
    pub g: AdditiveMapRep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionSpace {
    pub algebra: AlgebraSpec,
    pub exponent: u32,
    pub family: Family,
    /// Over GF(p).
    pub dimension: usize,
    pub basis: Vec<SolutionPair>,
    /// Number of units every basis pair was re-checked against.
    pub units_checked: usize,
}

/// The linear system over GF(p); unknown `i*d + j` is `f[i][j]`, unknown
/// `d^2 + i*d + j` is `g[i][j]` (absent for [`Family::Single`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub modulus: PrimeModulus,
    pub unknowns: usize,
    pub rows: Vec<Vec<u64>>,
}

/// A unit together with its inverse.
#[derive(Clone, Debug)]
pub struct Unit {
    pub elem: AlgebraElem,
    pub inverse: AlgebraElem,
}

/// Every invertible element exactly once, in enumeration order.
pub fn enumerate_units(instance: &SolverInstance, exec: Execution) -> Result<Vec<Unit>, SolverError> {
    instance.check_cap()?;
    let alg = &instance.algebra;
    let total = alg.element_count().ok_or(SolverError::TooLarge)?;
    let mut units = Vec::new();
    let mut start = 0u128;
    while start < total {
        let end = (start + 4 * UNIT_CHUNK as u128).min(total);
        let idx: Vec<u128> = (start..end).collect();
        let found = exec.map(&idx, |&i| {
            let elem = alg.element_at(i);
            elem.inverse().map(|inverse| Unit { elem, inverse })
        });
        units.extend(found.into_iter().flatten());
        start = end;
    }
    Ok(units)
}

/// Matrix over GF(p) of `y -> a y`.
fn left_mult_matrix(alg: &Algebra, a: &AlgebraElem) -> Vec<Vec<u64>> {
    let d = alg.dim();
    let cols: Vec<Vec<u64>> = (0..d).map(|l| a.mul(&alg.basis_element(l)).coordinates()).collect();
    (0..d).map(|i| (0..d).map(|l| cols[l][i]).collect()).collect()
}

/// The `d` rows contributed by one unit: coordinates of `f(x) + x^n g(x^-1)`.
fn unit_rows(instance: &SolverInstance, unit: &Unit) -> Vec<Vec<u64>> {
    let alg = &instance.algebra;
    let p = alg.prime_modulus();
    let d = alg.dim();
    let xv = unit.elem.coordinates();
    let yv = unit.inverse.coordinates();
    let xn = unit.elem.pow(instance.exponent as i64).expect("nonnegative power");
    let lmat = left_mult_matrix(alg, &xn);
    let g_offset = match instance.family {
        Family::Pair => d * d,
        Family::Single => 0,
    };
    (0..d)
        .map(|i| {
            let mut row = vec![0u64; instance.unknowns()];
            for j in 0..d {
                row[i * d + j] = p.add(row[i * d + j], xv[j]);
            }
            for (l, &c) in lmat[i].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, &y) in yv.iter().enumerate() {
                    let col = g_offset + l * d + j;
                    row[col] = p.add(row[col], p.mul(c, y));
                }
            }
            row
        })
        .collect()
}

/// Assembles every row; row block `u` belongs to unit `u` whatever the
/// execution strategy.
pub fn build_system(instance: &SolverInstance, exec: Execution) -> Result<LinearSystem, SolverError> {
    let units = enumerate_units(instance, exec)?;
    let rows = exec.map(&units, |u| unit_rows(instance, u)).into_iter().flatten().collect();
    Ok(LinearSystem {
        modulus: instance.algebra.prime_modulus(),
        unknowns: instance.unknowns(),
        rows,
    })
}

/// Reduced row-echelon form of the system; free columns span the nullspace.
pub fn nullspace(system: &LinearSystem) -> Vec<Vec<u64>> {
    let mut e = Echelon::new(system.modulus, system.unknowns);
    for row in &system.rows {
        if e.is_full_rank() {
            break;
        }
        e.insert(row.clone());
    }
    e.into_rref().nullspace_basis()
}

fn split_vector(instance: &SolverInstance, v: &[u64]) -> SolutionPair {
    let d = instance.dim();
    let p = instance.algebra.prime_modulus();
    let f = AdditiveMapRep::new(p, d, v[..d * d].to_vec());
    let g = match instance.family {
        Family::Pair => AdditiveMapRep::new(p, d, v[d * d..].to_vec()),
        Family::Single => f.clone(),
    };
    SolutionPair { f, g }
}

fn join_pair(instance: &SolverInstance, f: &AdditiveMapRep, g: &AdditiveMapRep) -> Vec<u64> {
    match instance.family {
        Family::Pair => f.entries.iter().chain(&g.entries).copied().collect(),
        Family::Single => f.entries.clone(),
    }
}

/// `x^-n f(x) + g(x^-1)`, computed directly in the algebra.
pub fn identity_residual(
    instance: &SolverInstance,
    f: &AdditiveMapRep,
    g: &AdditiveMapRep,
    unit: &Unit,
) -> AlgebraElem {
    let alg = &instance.algebra;
    let x_neg_n = unit.inverse.pow(instance.exponent as i64).expect("nonnegative power");
    x_neg_n.mul(&f.eval(alg, &unit.elem)).add(&g.eval(alg, &unit.inverse))
}

/// Builds, eliminates and re-verifies: every returned basis pair is checked
/// against every unit by direct evaluation of the identity.
pub fn solve(instance: &SolverInstance, exec: Execution) -> Result<SolutionSpace, SolverError> {
    let units = enumerate_units(instance, exec)?;
    let mut e = Echelon::new(instance.algebra.prime_modulus(), instance.unknowns());
    for chunk in units.chunks(UNIT_CHUNK) {
        if e.is_full_rank() {
            break;
        }
        for rows in exec.map(chunk, |u| unit_rows(instance, u)) {
            for row in rows {
                e.insert(row);
            }
        }
    }
    let basis: Vec<SolutionPair> = e
        .into_rref()
        .nullspace_basis()
        .iter()
        .map(|v| split_vector(instance, v))
        .collect();
    for (index, pair) in basis.iter().enumerate() {
        let ok = exec
            .map(&units, |u| identity_residual(instance, &pair.f, &pair.g, u).is_zero())
            .into_iter()
            .all(|b| b);
        if !ok {
            return Err(SolverError::VerificationFailed { index });
        }
    }
    Ok(SolutionSpace {
        algebra: instance.algebra.spec(),
        exponent: instance.exponent,
        family: instance.family,
        dimension: basis.len(),
        basis,
        units_checked: units.len(),
    })
}

/// Whether `(f, g)` lies in the GF(p)-span of the basis.
pub fn contains_pair(
    instance: &SolverInstance,
    space: &SolutionSpace,
    f: &AdditiveMapRep,
    g: &AdditiveMapRep,
) -> Result<bool, SolverError> {
    let d = instance.dim();
    for m in [f, g] {
        if m.dim != d {
            return Err(SolverError::ShapeMismatch { expected: d, got: m.dim });
        }
    }
    if instance.family == Family::Single && f != g {
        return Ok(false);
    }
    let mut e = Echelon::new(instance.algebra.prime_modulus(), instance.unknowns());
    for pair in &space.basis {
        e.insert(join_pair(instance, &pair.f, &pair.g));
    }
    Ok(e.contains(&join_pair(instance, f, g)))
}
