//! Exact arithmetic: rationals, the parameter ring `Q[k0, k1]` and
//! Pochhammer symbols.

mod param_poly;
mod rational;

pub use param_poly::{poch, poly_eval, Exp, ParamPoly};
pub use rational::{factorial, int, parse_rational, poch_q, rat, to_f64, Rational};
