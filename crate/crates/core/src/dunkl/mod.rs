//! Vector-valued polynomials on R^2, the W(B2) action, Dunkl operators and
//! the Dunkl Laplacian.
//!
//! Polynomials carry coefficients in `Q[k0, k1]`, so every identity checked
//! here holds for all parameter values at once.

mod group;
mod operators;
mod vpoly;
mod xpoly;

pub use group::GroupElement;
pub use operators::{
    alpha_beta_via_laplacian, alpha_scale, beta_scale, delph_n2_residual, delphi_residual,
    deltxsq_residual, dunkl_d, inner_product_s_exact,
    is_invariant, laplacian, laplacian_power, phi_p12, phi_p14, product_rule_residual, Backend,
    xsq_rule_residual, MAX_OPERATOR_N,
};
pub use vpoly::VPoly;
pub use xpoly::{LinearForm, XPoly};
