//! The matrix weight `K(x)` of the W(B2) rational Cherednik algebra on the
//! two-dimensional reflection representation, and tools to check its
//! normalization constant `c(k0, k1) = cos(pi k0) cos(pi k1) / (2 pi)`.
//!
//! * [`ring`]: exact arithmetic in `Q[k0, k1]`.
//! * [`dunkl`]: vector-valued polynomials and Dunkl operators.
//! * [`hyper`]: gamma, `2F1`, and the exact sequences `alpha_n`, `beta_n`.
//! * [`weight`]: numerical evaluation of `L`, `K` and the constants.
//! * [`quad`]: quadrature for the sector integrals.
//! * [`cli`]: the verification driver behind the `b2weight` binary.

pub mod cli;
pub mod dunkl;
pub mod error;
pub mod hyper;
pub mod quad;
pub mod ring;
pub mod weight;

pub use error::{Error, Result};

/// The two test polynomials in the sector inner products: `phi^(2n) p12`
/// and `phi^(2n+1) p14`, both paired against `p12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    P12,
    P14,
}

impl Kind {
    pub const ALL: [Kind; 2] = [Kind::P12, Kind::P14];

    pub fn name(self) -> &'static str {
        match self {
            Kind::P12 => "p12",
            Kind::P14 => "p14",
        }
    }
}
