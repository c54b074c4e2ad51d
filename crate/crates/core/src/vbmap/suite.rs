use rand::Rng;
use serde::Serialize;

use super::{decompose, eval_f_oracle, eval_on_decomposition, Decomposition, VbParams};
use crate::exec::Execution;
use crate::gf2fun::{Gf2Poly, Gf2Rat};
use crate::sample;

/// Anything evaluable as an additive map on GF(2)(t) through a representation.
pub trait AdditiveMap: Sync {
    fn eval_decomposition(&self, d: &Decomposition) -> Gf2Rat;

    fn eval(&self, x: &Gf2Rat) -> Gf2Rat {
        self.eval_decomposition(&decompose(x))
    }
}

impl AdditiveMap for VbParams {
    fn eval_decomposition(&self, d: &Decomposition) -> Gf2Rat {
        eval_on_decomposition(self, d)
    }
}

/// Test hook: the closed form with `A` replaced by `A + 1` in the `P R` term.
#[doc(hidden)]
#[derive(Clone, Debug)]
pub struct FaultyMap(pub VbParams);

impl AdditiveMap for FaultyMap {
    fn eval_decomposition(&self, d: &Decomposition) -> Gf2Rat {
        let e = d.denominator();
        let a_bad = self.0.a.add(&Gf2Rat::one());
        let frac = |n: Gf2Poly| Gf2Rat::new(n, e.clone()).expect("nonzero");
        frac(d.p.mul(&d.r))
            .mul(&a_bad)
            .add(&frac(d.q.mul(&d.s).shl(1)).mul(&self.0.a))
            .add(&frac(d.p.mul(&d.s).add(&d.q.mul(&d.r))).mul(&self.0.b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Additivity,
    IdentityResidual,
    OracleEquivalence,
    WellDefinedness,
    SemiMultiplicativity,
    Anchors,
    Recursion,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub samples: usize,
    pub max_deg: usize,
    /// Degree bound of the common factor used for unreduced representations.
    pub factor_deg: usize,
    /// Anchors and recursion are checked for `n` in `-anchor_range..=anchor_range`.
    pub anchor_range: i64,
    pub execution: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { samples: 1000, max_deg: 8, factor_deg: 4, anchor_range: 8, execution: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub property: Property,
    /// Rendered inputs, in the order the property names them.
    pub inputs: Vec<String>,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub property: Property,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub tallies: Vec<PropertyTally>,
    /// First counterexample per failing property.
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|t| t.failed == 0)
    }

    pub fn total_checked(&self) -> usize {
        self.tallies.iter().map(|t| t.checked).sum()
    }

    pub fn total_failed(&self) -> usize {
        self.tallies.iter().map(|t| t.failed).sum()
    }

    fn record<I>(&mut self, property: Property, outcomes: I)
    where
        I: IntoIterator<Item = Option<(Vec<String>, String, String)>>,
    {
        let mut tally = PropertyTally { property, checked: 0, failed: 0 };
        let mut first = None;
        for outcome in outcomes {
            tally.checked += 1;
            if let Some((inputs, expected, got)) = outcome {
                tally.failed += 1;
                first.get_or_insert(Counterexample { property, inputs, expected, got });
            }
        }
        self.tallies.push(tally);
        self.counterexamples.extend(first);
    }
}

fn check(inputs: &[&Gf2Rat], expected: Gf2Rat, got: Gf2Rat) -> Option<(Vec<String>, String, String)> {
    (expected != got).then(|| {
        (inputs.iter().map(|x| x.to_string()).collect(), expected.to_string(), got.to_string())
    })
}

/// Runs the property suite against `map`, using `params` for the oracle and
/// the anchor values. Samples are drawn up front from `rng`, so the report
/// depends only on the seed, never on the execution strategy.
pub fn run_suite<M, R>(map: &M, params: &VbParams, config: &SuiteConfig, rng: &mut R) -> SuiteReport
where
    M: AdditiveMap,
    R: Rng + ?Sized,
{
    let n = config.samples;
    let deg = config.max_deg;
    let pairs: Vec<(Gf2Rat, Gf2Rat)> =
        (0..n).map(|_| (sample::rat(rng, deg), sample::rat(rng, deg))).collect();
    let nonzero: Vec<Gf2Rat> = (0..n).map(|_| sample::nonzero_rat(rng, deg)).collect();
    let plain: Vec<Gf2Rat> = (0..n).map(|_| sample::rat(rng, deg)).collect();
    let factored: Vec<(Gf2Rat, Gf2Poly)> = (0..n)
        .map(|_| (sample::rat(rng, deg), sample::nonzero_poly(rng, config.factor_deg)))
        .collect();
    let half = deg / 2;
    let conjugations: Vec<(Gf2Rat, Gf2Rat)> =
        (0..n).map(|_| (sample::rat(rng, half), sample::rat(rng, half))).collect();

    let exec = config.execution;
    let mut report = SuiteReport::default();

    report.record(
        Property::Additivity,
        exec.map(&pairs, |(x, y)| {
            check(&[x, y], map.eval(x).add(&map.eval(y)), map.eval(&x.add(y)))
        }),
    );
    report.record(
        Property::IdentityResidual,
        exec.map(&nonzero, |x| {
            let inv = x.inv().expect("nonzero sample");
            check(&[x], Gf2Rat::zero(), inv.mul(&map.eval(x)).add(&map.eval(&inv)))
        }),
    );
    report.record(
        Property::OracleEquivalence,
        exec.map(&plain, |x| check(&[x], eval_f_oracle(params, x), map.eval(x))),
    );
    report.record(
        Property::WellDefinedness,
        exec.map(&factored, |(x, c)| {
            let d = Decomposition::from_fraction(&x.num().mul(c), &x.den().mul(c))
                .expect("nonzero denominator");
            let c_rat = Gf2Rat::from_poly(c.clone());
            check(&[x, &c_rat], map.eval(x), map.eval_decomposition(&d))
        }),
    );
    report.record(
        Property::SemiMultiplicativity,
        exec.map(&conjugations, |(a, b)| {
            check(&[a, b], a.mul(&map.eval(b)), map.eval(&a.mul(b).mul(a)))
        }),
    );

    let range: Vec<i64> = (-config.anchor_range..=config.anchor_range).collect();
    report.record(
        Property::Anchors,
        range.iter().flat_map(|&k| {
            let even = Gf2Rat::t_pow(2 * k);
            let odd = Gf2Rat::t_pow(2 * k + 1);
            [
                check(&[&even], params.a.mul_t_pow(k), map.eval(&even)),
                check(&[&odd], params.b.mul_t_pow(k), map.eval(&odd)),
            ]
        }),
    );
    report.record(
        Property::Recursion,
        range.iter().map(|&k| {
            let x = Gf2Rat::t_pow(k);
            check(&[&x], map.eval(&x).mul_t_pow(1), map.eval(&Gf2Rat::t_pow(k + 2)))
        }),
    );
    report
}
