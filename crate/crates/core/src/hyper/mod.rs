//! Special functions: gamma, the Gauss function `2F1` with certified tails,
//! exact terminating sums and their asymptotics.

mod asym;
mod gamma;
mod gauss;
mod sums;

pub use asym::{asym_f_check, f_values_f64, stirling_asymptote, stirling_ratio};
pub use gamma::{beta_fn, cos_pi, gamma, ln_gamma, rgamma, sin_pi};
pub use gauss::{
    contiguous_check, euler_transform, gauss_2f1, gauss_2f1_relaxed, gauss_2f1_split, gauss_sum, h_func,
    h_func_relaxed, h_func_split, h_params,
    ContiguousCheck, HypResult, MAX_TERMS,
};
pub use sums::{
    alpha_beta_prime_recurrence, alpha_beta_recurrence, alpha_closed, beta_closed,
    chu_vandermonde, chu_vandermonde_k1, f_prefactors, f_values, s_inner_closed, squeeze_check, terminating_3f2,
    AlphaBetaSeq, SqueezeReport,
};
