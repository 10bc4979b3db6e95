use std::f64::consts::FRAC_PI_4;

use super::tanh_sinh::{tanh_sinh, DeOptions};
use super::QuadResult;
use crate::error::{Error, Result};
use crate::hyper::h_func_relaxed;
use crate::weight::{d_consts, eval_k_split, ParamPoint, ENTRY_TOL};
use crate::Kind;

/// How the sector integral is formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// The `d1` and `d2` parts as integrals in `v = u^2` over products of
    /// `h` functions.
    Factored,
    /// `8 int_0^{pi/4} f(x) K(x) p12(x)^T dtheta` with `K` from the `L`
    /// entries.
    Direct,
}

/// `<phi^(2n) p12, p12>_S` (kind `P12`) or `<phi^(2n+1) p14, p12>_S` (kind
/// `P14`) by quadrature, using the factored integrand.
pub fn sector_inner_numeric(n: usize, kind: Kind, p: &ParamPoint, tol: f64) -> Result<QuadResult> {
    sector_inner_numeric_with(n, kind, p, tol, Route::Factored)
}

pub fn sector_inner_numeric_with(
    n: usize,
    kind: Kind,
    p: &ParamPoint,
    tol: f64,
    route: Route,
) -> Result<QuadResult> {
    p.require_pd()?;
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    match route {
        Route::Factored => factored(n, kind, p, tol),
        Route::Direct => direct(n, kind, p, tol),
    }
}

fn h(i: usize, v: f64, w: f64, p: &ParamPoint) -> Result<f64> {
    h_func_relaxed(i, v, w, p.k0, p.k1, ENTRY_TOL).map(|r| r.value)
}

fn factored(n: usize, kind: Kind, p: &ParamPoint, tol: f64) -> Result<QuadResult> {
    let (k0, k1) = (p.k0, p.k1);
    let (d1, d2) = d_consts(p)?;
    let nf = n as f64;
    let q = 1.0 + 2.0 * k1;
    let kp = 1.0 + 2.0 * k0 + 2.0 * k1;
    // Each part is 8 d coef int v^a (1-v)^b (1+v)^m g(v) / 2 dv.
    let (c1, c2, beta, m, hi, hj) = match kind {
        Kind::P12 => (
            8.0 * d1 * (kp / q) * (kp / q),
            8.0 * d2,
            2.0 * nf - 2.0 * k0,
            -2.0 * nf - 2.0,
            [1, 1],
            [2, 2],
        ),
        Kind::P14 => (
            8.0 * d1 * (1.0 - 2.0 * k0 + 2.0 * k1) * kp / (q * q),
            -8.0 * d2,
            2.0 * nf + 1.0,
            -2.0 * nf - 3.0,
            [1, 3],
            [2, 4],
        ),
    };
    let opts = |c: f64| DeOptions::new(tol / (2.0 * c.abs().max(1e-300)));
    let part = |alpha: f64, idx: [usize; 2], c: f64| -> Result<QuadResult> {
        let g = |v: f64, w: f64| -> Result<f64> {
            Ok((1.0 + v).powf(m) * h(idx[0], v, w, p)? * h(idx[1], v, w, p)? / 2.0)
        };
        let r = tanh_sinh(alpha, beta, g, opts(c))?;
        Ok(QuadResult { value: c * r.value, error_estimate: c.abs() * r.error_estimate, nodes: r.nodes })
    };
    let a = part(k1 + 0.5, hi, c1)?;
    let b = part(-k1 - 0.5, hj, c2)?;
    Ok(QuadResult {
        value: a.value + b.value,
        error_estimate: a.error_estimate + b.error_estimate,
        nodes: a.nodes + b.nodes,
    })
}

fn direct(n: usize, kind: Kind, p: &ParamPoint, tol: f64) -> Result<QuadResult> {
    let m = match kind {
        Kind::P12 => 2 * n,
        Kind::P14 => 2 * n + 1,
    } as i32;
    let g = |v: f64, w: f64| -> Result<f64> {
        let theta = FRAC_PI_4 * v;
        let theta_c = FRAC_PI_4 * w;
        let ev = eval_k_split(theta, theta_c, p)?;
        let (x1, x2) = (theta.cos(), theta.sin());
        // phi = x1^2 - x2^2 = cos 2 theta = sin 2 theta_c.
        let phi = (2.0 * theta_c).sin();
        let f = match kind {
            Kind::P12 => [-x2, x1],
            Kind::P14 => [-x2, -x1],
        };
        Ok(8.0 * FRAC_PI_4 * phi.powi(m) * ev.quad_form(f, [-x2, x1]))
    };
    let mut opts = DeOptions::new(tol);
    // Mass beyond 1e-200 of either end is far below any tolerance in use.
    opts.cutoff = 1e-200;
    tanh_sinh(0.0, 0.0, g, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::s_inner_closed;
    use crate::ring::{parse_rational, to_f64};

    fn exact(n: usize, kind: Kind, k0: &str, k1: &str) -> f64 {
        let (k0, k1) = (parse_rational(k0).unwrap(), parse_rational(k1).unwrap());
        to_f64(&s_inner_closed(n, kind).eval(&k0, &k1))
    }

    #[test]
    fn zero_parameters_wallis() {
        let p = ParamPoint::new(0.0, 0.0);
        let r = sector_inner_numeric(0, Kind::P12, &p, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11, "{r:?}");
        let r = sector_inner_numeric(1, Kind::P12, &p, 1e-12).unwrap();
        assert!((r.value - 0.5).abs() < 1e-11, "{r:?}");
    }

    #[test]
    fn first_values_at_reference_point() {
        let p = ParamPoint::new(0.3, 0.1);
        for (n, kind) in [(0, Kind::P12), (0, Kind::P14), (1, Kind::P12), (1, Kind::P14)] {
            let r = sector_inner_numeric(n, kind, &p, 1e-11).unwrap();
            let e = exact(n, kind, "0.3", "0.1");
            assert!((r.value - e).abs() < 1e-9 * e.abs(), "n={n} {kind:?}: {} vs {e}", r.value);
        }
    }

    #[test]
    fn routes_agree() {
        let p = ParamPoint::new(-0.2, 0.25);
        for kind in Kind::ALL {
            let a = sector_inner_numeric_with(1, kind, &p, 1e-10, Route::Factored).unwrap();
            let b = sector_inner_numeric_with(1, kind, &p, 1e-10, Route::Direct).unwrap();
            assert!((a.value - b.value).abs() < 1e-8, "{kind:?}: {a:?} {b:?}");
        }
    }

    #[test]
    fn region_checked() {
        let p = ParamPoint::new(0.3, 0.3);
        assert!(matches!(sector_inner_numeric(0, Kind::P12, &p, 1e-9), Err(Error::Region(_))));
    }
}
