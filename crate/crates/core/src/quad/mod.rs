//! Quadrature with algebraic endpoint singularities, and the sector
//! integrals that produce the inner products.
//!
//! Two engines are provided. Gauss-Jacobi handles `v^a (1-v)^b` times a
//! smooth function. The sector integrands are not smooth after the weight
//! is removed: near `v = 1` each `h` function carries a `(1-v)^(1 +- 2k0)`
//! component. For those the tanh-sinh rule is used, which is insensitive
//! to such endpoint behaviour.

mod jacobi;
mod sector;
mod tanh_sinh;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::gamma;

pub use jacobi::{gauss_jacobi, singular_integral, MAX_JACOBI_NODES};
pub use sector::{sector_inner_numeric, sector_inner_numeric_with, Route};
pub use tanh_sinh::{tanh_sinh, DeOptions, MAX_LEVEL};

/// An integral with the difference between its last two refinements.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub nodes: usize,
}

/// Compares
///
/// ```text
/// int_0^1 t^alpha (1-t)^(n+gamma) (1+t)^(beta-n) g(t) dt
/// ```
///
/// with its leading asymptote `(2n)^(-alpha-1) Gamma(alpha+1) g(0)`.
/// Returns `(integral, asymptote)`; `g` defaults to 1.
///
/// The substitution `t = v / (2 - v)` turns the integrand into
/// `2^(-alpha-1) v^alpha (1-v)^(n+gamma) (1 - v/2)^(-alpha-beta-gamma-2)
/// g(t)`, a Jacobi weight times a smooth factor.
pub fn asym_integral_check(
    alpha: f64,
    beta: f64,
    gamma_exp: f64,
    n: usize,
    smooth: Option<&dyn Fn(f64) -> f64>,
) -> Result<(f64, f64)> {
    if !(alpha > -1.0 && gamma_exp > -1.0) {
        return Err(Error::Domain(format!(
            "need alpha > -1 and gamma > -1, got alpha={alpha} gamma={gamma_exp}"
        )));
    }
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2, got {n}")));
    }
    let one = |_: f64| 1.0;
    let g: &dyn Fn(f64) -> f64 = smooth.unwrap_or(&one);
    let nf = n as f64;
    let asym = (2.0 * nf).powf(-alpha - 1.0) * gamma(alpha + 1.0)? * g(0.0);
    let expo = -alpha - beta - gamma_exp - 2.0;
    let scale = 2f64.powf(-alpha - 1.0);
    let r = singular_integral(
        alpha,
        nf + gamma_exp,
        |v| scale * (1.0 - v / 2.0).powf(expo) * g(v / (2.0 - v)),
        1e-12 * asym.abs(),
    )?;
    Ok((r.value, asym))
}
