//! Exact computer algebra for the functional identity
//! `x^-n f(x) + g(x^-1) = 0` with additive `f`, `g`.
//!
//! * [`exactalg`]: the division rings GF(p), GF(p^k), Q and rational quaternions.
//! * [`gf2fun`]: GF(2)[t] and GF(2)(t).
//! * [`vbmap`]: the explicit two-parameter family of additive solutions on GF(2)(t).
//! * [`matring`]: square matrices over a division ring, Hua's identity, idempotents.
//! * [`identsolver`]: the exact space of all additive solution pairs over a finite algebra.

pub mod exactalg;
pub mod exec;
pub mod gf2fun;
pub mod identsolver;
pub mod matring;
pub mod sample;
pub mod vbmap;

pub use exec::Execution;
