//! A second route to `f(x)` that never touches the closed form: only
//! additivity, the identity `f(y) = y f(1/y)` and the step relation
//! `f(t^(n+2)) = t f(t^n)`.

use super::VbParams;
use crate::gf2fun::Gf2Rat;

/// `f(t^e)`, reached by stepping the relation `f(t^(n+2)) = t f(t^n)` out of
/// `f(1) = A` and `f(t) = B` (downwards for negative `e`).
pub fn monomial_value(params: &VbParams, e: i64) -> Gf2Rat {
    let mut exp = e.rem_euclid(2);
    let mut value = if exp == 0 { params.a.clone() } else { params.b.clone() };
    let t = Gf2Rat::t();
    let t_inv = Gf2Rat::t_pow(-1);
    while exp < e {
        value = t.mul(&value);
        exp += 2;
    }
    while exp > e {
        value = t_inv.mul(&value);
        exp -= 2;
    }
    value
}

/// Numerator-major expansion over the reduced fraction `x = N / D`:
///
/// ```text
/// f(N/D) = sum_{m in N} f(t^m / D)
///        = sum_{m in N} (t^m / D) f(D t^-m)
///        = sum_{m in N} (t^m / D) sum_{j in D} f(t^(j-m))
/// ```
pub fn eval_f_oracle(params: &VbParams, x: &Gf2Rat) -> Gf2Rat {
    let den = Gf2Rat::from_poly(x.den().clone());
    let den_exps: Vec<i64> = x.den().exponents().map(|j| j as i64).collect();
    let mut total = Gf2Rat::zero();
    for m in x.num().exponents() {
        let m = m as i64;
        let y = Gf2Rat::t_pow(m).div(&den).expect("nonzero denominator");
        let f_inv_y = den_exps
            .iter()
            .fold(Gf2Rat::zero(), |acc, &j| acc.add(&monomial_value(params, j - m)));
        total = total.add(&y.mul(&f_inv_y));
    }
    total
}
