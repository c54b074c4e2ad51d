use std::ops::RangeInclusive;

use serde::Serialize;

use super::{contains_pair, solve, AdditiveMapRep, Algebra, Family, SolverError, SolverInstance};
use crate::exactalg::is_prime;
use crate::exec::Execution;

/// `(p - 1) | (n - 2)`: then `x^(n-2) = 1` on GF(p)*, so `(x, -x)` solves
/// the identity over GF(p).
pub fn example_regime(p: u64, n: u32) -> bool {
    (n as i64 - 2).rem_euclid(p as i64 - 1) == 0
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub primes: RangeInclusive<u64>,
    pub degrees: RangeInclusive<usize>,
    pub exponents: RangeInclusive<u32>,
    pub family: Family,
    pub unit_cap: u128,
    pub execution: Execution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub p: u64,
    pub k: usize,
    pub n: u32,
    pub dimension: Option<usize>,
    /// `(p - 1) | (n - 2)`.
    pub flagged_example_regime: bool,
    /// Whether `(x, -x)` is a solution; only computed when `k = 1`.
    pub contains_example_pair: Option<bool>,
    pub error: Option<String>,
}

fn sweep_cell(p: u64, k: usize, n: u32, config: &SweepConfig) -> Result<(usize, Option<bool>), SolverError> {
    let inst = SolverInstance::new(Algebra::field(p, k)?, n, config.family)?.with_unit_cap(config.unit_cap);
    let space = solve(&inst, config.execution)?;
    let example = if k == 1 {
        let modulus = inst.algebra.prime_modulus();
        let id = AdditiveMapRep::identity(modulus, 1);
        Some(contains_pair(&inst, &space, &id, &id.neg())?)
    } else {
        None
    };
    Ok((space.dimension, example))
}

/// Solves every field instance `GF(p^k)` with exponent `n` in the ranges.
/// A failing cell records its error and the sweep continues.
pub fn dimension_sweep(config: &SweepConfig) -> Vec<SweepRow> {
    let mut rows = Vec::new();
    for p in config.primes.clone().filter(|&p| is_prime(p)) {
        for k in config.degrees.clone() {
            for n in config.exponents.clone() {
                let flagged = example_regime(p, n);
                let row = match sweep_cell(p, k, n, config) {
                    Ok((dim, example)) => SweepRow {
                        p,
                        k,
                        n,
                        dimension: Some(dim),
                        flagged_example_regime: flagged,
                        contains_example_pair: example,
                        error: None,
                    },
                    Err(e) => SweepRow {
                        p,
                        k,
                        n,
                        dimension: None,
                        flagged_example_regime: flagged,
                        contains_example_pair: None,
                        error: Some(e.to_string()),
                    },
                };
                rows.push(row);
            }
        }
    }
    rows
}
