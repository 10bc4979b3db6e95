//! The matrix weight `K(x) = L(u)^T diag(d1, d2) L(u)` on the sector
//! `0 < x2 < x1`, with `u = x2 / x1`.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::{cos_pi, gamma, gauss_2f1_relaxed, h_func_relaxed};

/// Truncation tolerance for the `2F1` values inside `L`. Near `u = 1` the
/// connection formula is accepted even if its rounding bound is larger.
pub const ENTRY_TOL: f64 = 1e-15;

/// A parameter pair with its region flags.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ParamPoint {
    pub k0: f64,
    pub k1: f64,
    /// `|k0| < 1/2` and `|k1| < 1/2`.
    pub integrable: bool,
    /// `-1/2 < k0 +- k1 < 1/2`.
    pub positive_definite: bool,
}

impl ParamPoint {
    pub fn new(k0: f64, k1: f64) -> Self {
        Self {
            k0,
            k1,
            integrable: k0.abs() < 0.5 && k1.abs() < 0.5,
            positive_definite: (k0 + k1).abs() < 0.5 && (k0 - k1).abs() < 0.5,
        }
    }

    /// Distance to the boundary of the positive-definite region, in the
    /// `max(|k0 + k1|, |k0 - k1|)` sense.
    pub fn pd_margin(&self) -> f64 {
        0.5 - (self.k0 + self.k1).abs().max((self.k0 - self.k1).abs())
    }

    pub fn require_pd(&self) -> Result<()> {
        if self.positive_definite {
            Ok(())
        } else {
            Err(Error::Region(format!(
                "(k0, k1) = ({}, {}) is outside -1/2 < k0 +- k1 < 1/2",
                self.k0, self.k1
            )))
        }
    }

    fn require_integrable(&self) -> Result<()> {
        if self.integrable {
            Ok(())
        } else {
            Err(Error::Region(format!(
                "(k0, k1) = ({}, {}) needs |k0| < 1/2 and |k1| < 1/2",
                self.k0, self.k1
            )))
        }
    }
}

/// `c(k0, k1) = cos(pi k0) cos(pi k1) / (2 pi)`.
pub fn c_norm(p: &ParamPoint) -> Result<f64> {
    p.require_integrable()?;
    Ok(cos_pi(p.k0) * cos_pi(p.k1) / (2.0 * PI))
}

/// `(d1, d2)`.
pub fn d_consts(p: &ParamPoint) -> Result<(f64, f64)> {
    p.require_pd()?;
    let (k0, k1) = (p.k0, p.k1);
    let c = c_norm(p)? / cos_pi(k0);
    let g = gamma(0.5 - k1)?;
    let d1 = c * g * g / (gamma(0.5 + k0 - k1)? * gamma(0.5 - k0 - k1)?);
    let g = gamma(0.5 + k1)?;
    let d2 = c * g * g / (gamma(0.5 + k0 + k1)? * gamma(0.5 - k0 + k1)?);
    Ok((d1, d2))
}

/// The constant value of `det K = cos pi(k0+k1) cos pi(k0-k1) / (4 pi^2)`.
pub fn det_k_closed(p: &ParamPoint) -> f64 {
    cos_pi(p.k0 + p.k1) * cos_pi(p.k0 - p.k1) / (4.0 * PI * PI)
}

fn check_u(u: f64) -> Result<()> {
    if u > 0.0 && u < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("u must lie in (0, 1), got {u}")))
    }
}

/// `L(u)` for `0 < u < 1`.
pub fn eval_l(u: f64, p: &ParamPoint) -> Result<[[f64; 2]; 2]> {
    check_u(u)?;
    eval_l_split(u, (1.0 - u) * (1.0 + u), p)
}

/// `L(u)` given `u` and `1 - u^2` separately.
pub fn eval_l_split(u: f64, omz: f64, p: &ParamPoint) -> Result<[[f64; 2]; 2]> {
    let (k0, k1) = (p.k0, p.k1);
    let z = u * u;
    let f = |a, b, c| gauss_2f1_relaxed(a, b, c, z, omz, ENTRY_TOL).map(|r| r.value);
    let pre = omz.powf(-k0);
    let up = u.powf(k1) * pre;
    let um = u.powf(-k1) * pre;
    // Off-diagonal entries carry a factor k0; skip their series when it vanishes.
    let (l12, l21) = if k0 == 0.0 {
        (0.0, 0.0)
    } else {
        (
            -k0 / (k1 + 0.5) * up * u * f(1.0 - k0, 0.5 - k0 + k1, k1 + 1.5)?,
            -k0 / (0.5 - k1) * um * u * f(1.0 - k0, 0.5 - k0 - k1, 1.5 - k1)?,
        )
    };
    Ok([
        [up * f(-k0, 0.5 - k0 + k1, k1 + 0.5)?, l12],
        [l21, um * f(-k0, 0.5 - k0 - k1, 0.5 - k1)?],
    ])
}

/// `K(x_theta)` with everything used to build it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightEval {
    pub theta: f64,
    pub u: f64,
    pub l: [[f64; 2]; 2],
    pub k: [[f64; 2]; 2],
    pub d1: f64,
    pub d2: f64,
}

impl WeightEval {
    pub fn det_k(&self) -> f64 {
        self.k[0][0] * self.k[1][1] - self.k[0][1] * self.k[1][0]
    }

    /// Eigenvalues of the symmetric `K`, ascending.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let (a, b, d) = (self.k[0][0], self.k[0][1], self.k[1][1]);
        let mean = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        let hi = mean + rad;
        // Product form keeps the small eigenvalue accurate.
        let lo = if hi != 0.0 { self.det_k() / hi } else { mean - rad };
        [lo, hi]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// `v K w^T` for row vectors `v`, `w`.
    pub fn quad_form(&self, v: [f64; 2], w: [f64; 2]) -> f64 {
        let kw = [
            self.k[0][0] * w[0] + self.k[0][1] * w[1],
            self.k[1][0] * w[0] + self.k[1][1] * w[1],
        ];
        v[0] * kw[0] + v[1] * kw[1]
    }
}

fn assemble(l: [[f64; 2]; 2], d1: f64, d2: f64) -> [[f64; 2]; 2] {
    let mut k = [[0.0; 2]; 2];
    for (i, row) in k.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = d1 * l[0][i] * l[0][j] + d2 * l[1][i] * l[1][j];
        }
    }
    k
}

/// `K(x_theta)` for `0 < theta < pi/4`.
pub fn eval_k(theta: f64, p: &ParamPoint) -> Result<WeightEval> {
    if !(theta > 0.0 && theta < FRAC_PI_4) {
        return Err(Error::Domain(format!("theta must lie in (0, pi/4), got {theta}")));
    }
    eval_k_split(theta, FRAC_PI_4 - theta, p)
}

/// `K(x_theta)` with `pi/4 - theta` supplied separately so that points next
/// to the diagonal keep full relative accuracy in `1 - u^2`.
pub fn eval_k_split(theta: f64, theta_c: f64, p: &ParamPoint) -> Result<WeightEval> {
    let (u, omz) = if theta <= theta_c {
        let u = theta.tan();
        (u, (1.0 - u) * (1.0 + u))
    } else {
        let t = theta_c.tan();
        let u = (1.0 - t) / (1.0 + t);
        (u, 4.0 * t / ((1.0 + t) * (1.0 + t)))
    };
    if !(u > 0.0 && omz > 0.0) {
        return Err(Error::Domain(format!("theta = {theta} is on the sector boundary")));
    }
    let (d1, d2) = d_consts(p)?;
    let l = eval_l_split(u, omz, p)?;
    Ok(WeightEval { theta, u, l, k: assemble(l, d1, d2), d1, d2 })
}

/// The four combinations of `L` entries with `x_theta`, computed from the
/// entries (`direct`) and from the `h` factorization (`factored`):
///
/// ```text
///  x2 L11 - x1 L12,  x1 L22 - x2 L21,  -x2 L11 - x1 L12,  -x2 L21 - x1 L22
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComboForms {
    pub direct: [f64; 4],
    pub factored: [f64; 4],
}

impl ComboForms {
    pub fn max_abs_diff(&self) -> f64 {
        (0..4).map(|i| (self.direct[i] - self.factored[i]).abs()).fold(0.0, f64::max)
    }
}

pub fn combo_forms(u: f64, p: &ParamPoint) -> Result<ComboForms> {
    check_u(u)?;
    let omz = (1.0 - u) * (1.0 + u);
    let l = eval_l_split(u, omz, p)?;
    Ok(ComboForms {
        direct: combos_direct(u, &l),
        factored: combos_factored(u, omz, p)?,
    })
}

pub(crate) fn combos_direct(u: f64, l: &[[f64; 2]; 2]) -> [f64; 4] {
    let r = (1.0 + u * u).sqrt();
    let (x1, x2) = (1.0 / r, u / r);
    [
        x2 * l[0][0] - x1 * l[0][1],
        x1 * l[1][1] - x2 * l[1][0],
        -x2 * l[0][0] - x1 * l[0][1],
        -x2 * l[1][0] - x1 * l[1][1],
    ]
}

pub(crate) fn combos_factored(u: f64, omz: f64, p: &ParamPoint) -> Result<[f64; 4]> {
    let (k0, k1) = (p.k0, p.k1);
    let z = u * u;
    let h = |i| h_func_relaxed(i, z, omz, k0, k1, ENTRY_TOL).map(|r| r.value);
    let r = (1.0 + z).sqrt();
    let up = u.powf(k1 + 1.0) / r;
    let um = u.powf(-k1) / r;
    let (wm, wp) = (omz.powf(-k0), omz.powf(k0));
    let q = 1.0 + 2.0 * k1;
    Ok([
        up * wm * (1.0 + 2.0 * k0 + 2.0 * k1) / q * h(1)?,
        um * wm * h(2)?,
        -up * wp * (1.0 - 2.0 * k0 + 2.0 * k1) / q * h(3)?,
        -um * wp * h(4)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn regions() {
        let p = ParamPoint::new(0.3, 0.1);
        assert!(p.integrable && p.positive_definite);
        let q = ParamPoint::new(0.3, 0.3);
        assert!(q.integrable && !q.positive_definite);
        assert!(!ParamPoint::new(0.6, 0.0).integrable);
    }

    #[test]
    fn c_norm_values() {
        assert!(close(c_norm(&ParamPoint::new(0.0, 0.0)).unwrap(), 1.0 / (2.0 * PI), 1e-16));
        assert!(close(c_norm(&ParamPoint::new(0.25, 0.25)).unwrap(), 1.0 / (4.0 * PI), 1e-16));
        assert!(matches!(c_norm(&ParamPoint::new(0.5, 0.0)), Err(Error::Region(_))));
    }

    #[test]
    fn d_consts_values() {
        let p = ParamPoint::new(0.0, 0.2);
        let c = c_norm(&p).unwrap();
        let (d1, d2) = d_consts(&p).unwrap();
        assert!(close(d1, c, 1e-15) && close(d2, c, 1e-15));
        let p = ParamPoint::new(0.3, 0.1);
        let (d1, d2) = d_consts(&p).unwrap();
        assert!(close(d1 * d2, det_k_closed(&p), 1e-15));
        assert!(matches!(d_consts(&ParamPoint::new(0.3, 0.3)), Err(Error::Region(_))));
    }

    #[test]
    fn l_trivial_cases() {
        let l = eval_l(0.4, &ParamPoint::new(0.0, 0.0)).unwrap();
        assert_eq!(l, [[1.0, 0.0], [0.0, 1.0]]);
        let l = eval_l(0.4, &ParamPoint::new(0.0, 0.3)).unwrap();
        assert!(close(l[0][0], 0.4f64.powf(0.3), 1e-15));
        assert!(close(l[1][1], 0.4f64.powf(-0.3), 1e-15));
        assert_eq!(l[0][1], 0.0);
        assert!(matches!(eval_l(1.0, &ParamPoint::new(0.1, 0.1)), Err(Error::Domain(_))));
        assert!(matches!(eval_l(0.0, &ParamPoint::new(0.1, 0.1)), Err(Error::Domain(_))));
    }

    #[test]
    fn det_l_is_one() {
        let l = eval_l(0.5, &ParamPoint::new(0.3, 0.1)).unwrap();
        let det = l[0][0] * l[1][1] - l[0][1] * l[1][0];
        assert!(close(det.abs(), 1.0, 1e-10), "{det}");
    }

    #[test]
    fn k_at_zero_parameters() {
        let w = eval_k(0.5, &ParamPoint::new(0.0, 0.0)).unwrap();
        let c = 1.0 / (2.0 * PI);
        assert!(close(w.k[0][0], c, 1e-16) && close(w.k[1][1], c, 1e-16));
        assert_eq!(w.k[0][1], 0.0);
        assert!(matches!(eval_k(0.8, &ParamPoint::new(0.0, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn det_k_constant_in_theta() {
        let p = ParamPoint::new(0.2, -0.15);
        // Entries grow like (1 - u^2)^(-k0) at the diagonal, and det L = 1
        // is then a difference of large products; stay a little away.
        for th in [0.01, 0.3, 0.7, FRAC_PI_4 - 1e-4] {
            let w = eval_k(th, &p).unwrap();
            assert!(close(w.det_k(), det_k_closed(&p), 1e-12), "theta {th}");
        }
    }

    #[test]
    fn positive_definite_inside() {
        let w = eval_k(0.3, &ParamPoint::new(0.2, 0.25)).unwrap();
        assert!(w.min_eigenvalue() > 0.0);
        assert!(close(w.k[0][1], w.k[1][0], 1e-14));
    }

    #[test]
    fn combos_agree() {
        for (k0, k1) in [(0.3, 0.1), (-0.2, 0.25), (0.1, -0.3), (0.0, 0.2)] {
            let p = ParamPoint::new(k0, k1);
            for u in [1e-6, 0.05, 0.6, 0.95, 0.999] {
                let c = combo_forms(u, &p).unwrap();
                let scale = c.direct.iter().fold(1.0f64, |m, v| m.max(v.abs()));
                assert!(c.max_abs_diff() < 1e-10 * scale, "{k0} {k1} u={u}: {c:?}");
            }
        }
    }

    #[test]
    fn combo_two_scales_like_u_to_minus_k1() {
        let p = ParamPoint::new(0.3, 0.1);
        let a = combo_forms(1e-4, &p).unwrap().factored[1];
        let b = combo_forms(1e-6, &p).unwrap().factored[1];
        assert!(close(b / a, 100f64.powf(0.1), 1e-6));
    }
}
