use std::f64::consts::FRAC_PI_4;

use serde_json::Value;

use super::report::{num, Check};
use crate::dunkl::{
    alpha_beta_via_laplacian, alpha_scale, beta_scale, delph_n2_residual, delphi_residual,
    deltxsq_residual, phi_p12, phi_p14, product_rule_residual, xsq_rule_residual, VPoly, XPoly,
};
use crate::hyper::{
    alpha_beta_prime_recurrence, alpha_beta_recurrence, alpha_closed, asym_f_check, beta_closed,
    beta_fn, f_prefactors, f_values, s_inner_closed,
};
use crate::quad::{asym_integral_check, sector_inner_numeric_with, singular_integral, tanh_sinh, DeOptions, Route};
use crate::ring::{int, ParamPoly, Rational};
use crate::weight::{det_k_closed, eval_k, ParamPoint};
use crate::{Kind, Result};

/// Largest `n` sent to the operator backend from the CLI.
pub const OPERATOR_N_CAP: usize = 3;

fn zero_poly(name: String, r: Result<ParamPoly>) -> Check {
    match r {
        Ok(p) => Check::exact(name, "0".into(), p.to_string()),
        Err(e) => Check::error(name, Value::String("0".into()), e),
    }
}

fn zero_vpoly(name: String, r: Result<VPoly>) -> Check {
    match r {
        Ok(p) => Check::exact(name, "0".into(), if p.is_zero() { "0".into() } else { p.to_string() }),
        Err(e) => Check::error(name, Value::String("0".into()), e),
    }
}

/// Recurrence, closed forms, operator calculus, and the `3F2` forms at the
/// given rational point (the latter only inside the positive-definite region).
pub fn exact_suite(n_max: usize, k0: &Rational, k1: &Rational, pd: bool) -> Vec<Check> {
    let mut out = Vec::new();
    let seq = alpha_beta_recurrence(n_max);
    let prime = alpha_beta_prime_recurrence(n_max);
    let anchor = ParamPoly::linear(int(1), int(2), int(2));
    for n in 0..=n_max {
        out.push(zero_poly(format!("exact.closed_form.alpha.n{n:02}"), Ok(&seq.alpha[n] - &alpha_closed(n))));
        out.push(zero_poly(format!("exact.closed_form.beta.n{n:02}"), Ok(&seq.beta[n] - &beta_closed(n))));
        out.push(zero_poly(
            format!("exact.s_inner.p12.n{n:02}"),
            Ok(&s_inner_closed(n, Kind::P12) - &(&anchor * &seq.alpha[n])),
        ));
        out.push(zero_poly(
            format!("exact.s_inner.p14.n{n:02}"),
            Ok(&s_inner_closed(n, Kind::P14) - &(&anchor * &seq.beta[n])),
        ));
        out.push(zero_poly(
            format!("exact.scaled.alpha.n{n:02}"),
            Ok(&prime.alpha[n] - &seq.alpha[n].scale(&alpha_scale(n))),
        ));
        out.push(zero_poly(
            format!("exact.scaled.beta.n{n:02}"),
            Ok(&prime.beta[n] - &seq.beta[n].scale(&beta_scale(n))),
        ));
        if pd {
            out.push(f_sum_check(n, k0, k1));
        }
    }
    for n in 0..=n_max.min(OPERATOR_N_CAP) {
        match alpha_beta_via_laplacian(n) {
            Ok((a, b)) => {
                out.push(zero_poly(
                    format!("exact.operator.alpha.n{n:02}"),
                    Ok(&a - &seq.alpha[n].scale(&alpha_scale(n))),
                ));
                out.push(zero_poly(
                    format!("exact.operator.beta.n{n:02}"),
                    Ok(&b - &seq.beta[n].scale(&beta_scale(n))),
                ));
            }
            Err(e) => out.push(Check::error(format!("exact.operator.n{n:02}"), Value::String("0".into()), e)),
        }
        out.push(zero_vpoly(format!("exact.laplacian_phi_p12.n{n:02}"), delphi_residual(n)));
        out.push(zero_vpoly(format!("exact.laplacian_phi_p14.n{n:02}"), delph_n2_residual(n)));
        out.push(zero_vpoly(format!("exact.laplacian_xsq_power.n{n:02}"), deltxsq_residual(&phi_p12(n))));
        out.push(zero_vpoly(format!("exact.xsq_rule.n{n:02}"), xsq_rule_residual(&phi_p14(n))));
    }
    for (i, (f, g)) in product_rule_pairs().iter().enumerate() {
        out.push(zero_vpoly(format!("exact.product_rule.pair{i}"), product_rule_residual(f, g)));
    }
    out
}

/// Each of `|x|^2, phi^2, phi^4, |x|^4` against `p12`, `phi p14` and a
/// fixed mixed polynomial of degree at most 3.
pub fn product_rule_pairs() -> Vec<(XPoly, VPoly)> {
    let r2 = XPoly::norm_sq();
    let phi2 = XPoly::phi().pow(2);
    let (x1, x2) = (XPoly::x1(), XPoly::x2());
    let mixed = VPoly::new(
        &(&x1 * &x2.pow(2)) + &XPoly::constant(ParamPoly::k0()),
        &(&x1.pow(3).scale_q(&crate::ring::rat(3, 7)) - &x2) + &XPoly::one(),
    );
    let fs = [r2.clone(), phi2.clone(), phi2.pow(2), r2.pow(2)];
    let gs = [VPoly::p12(), phi_p14(0), mixed];
    fs.iter().flat_map(|f| gs.iter().map(move |g| (f.clone(), g.clone()))).collect()
}

fn f_sum_check(n: usize, k0: &Rational, k1: &Rational) -> Check {
    let name = format!("exact.hypergeometric_form.n{n:02}");
    let expect = |kind| s_inner_closed(n, kind).eval(k0, k1);
    let want = format!("{}; {}", expect(Kind::P12), expect(Kind::P14));
    match f_values(n, k0, k1) {
        Ok((f1, f2)) => {
            let (p1, p2) = f_prefactors(n, k0, k1);
            Check::exact(name, want, format!("{}; {}", p1 * f1, p2 * f2))
        }
        Err(e) => Check::error(name, Value::String(want), e),
    }
}

/// Sector inner products by quadrature against the closed form, `det K`
/// against its constant, and the quadrature self-test.
pub fn quad_suite(n_max: usize, p: &ParamPoint, kq: Option<(&Rational, &Rational)>, tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for kind in Kind::ALL {
            let exact = match kq {
                Some((a, b)) => crate::ring::to_f64(&s_inner_closed(n, kind).eval(a, b)),
                None => s_inner_closed(n, kind).eval_f64(p.k0, p.k1),
            };
            for (route, tag) in [(Route::Factored, "factored"), (Route::Direct, "direct")] {
                let name = format!("quad.{tag}.{}.n{n:02}", kind.name());
                // Ask the integrator for a margin below the reported tolerance.
                let r = sector_inner_numeric_with(n, kind, p, 0.1 * tol * exact.abs().max(1e-300), route);
                out.push(match r {
                    Ok(r) => Check::close(name, exact, r.value, tol, 0.0),
                    Err(e) => Check::error(name, num(exact), e),
                });
            }
        }
    }
    let det = det_k_closed(p);
    for i in 1..=7 {
        let theta = FRAC_PI_4 * i as f64 / 8.0;
        let name = format!("quad.det_k.theta{i}of8");
        out.push(match eval_k(theta, p) {
            Ok(ev) => Check::close(name, det, ev.det_k(), 1e-10, 1.0),
            Err(e) => Check::error(name, num(det), e),
        });
    }
    out.extend(quadrature_self_test());
    out
}

/// Beta integrals with both engines.
pub fn quadrature_self_test() -> Vec<Check> {
    let cases = [(0.0, 0.0), (-0.5, -0.5), (-0.9, 0.3), (0.7, -0.75), (3.5, 12.0)];
    let mut out = Vec::new();
    for (i, (a, b)) in cases.into_iter().enumerate() {
        let exact = beta_fn(a + 1.0, b + 1.0).unwrap_or(f64::NAN);
        let r = tanh_sinh(a, b, |_, _| Ok(1.0), DeOptions::new(1e-14));
        let name = format!("quad.self_test.tanh_sinh.case{i}");
        out.push(match r {
            Ok(r) => Check::close(name, exact, r.value, 1e-12, 1.0),
            Err(e) => Check::error(name, num(exact), e),
        });
        let name = format!("quad.self_test.gauss_jacobi.case{i}");
        out.push(match singular_integral(a, b, |_| 1.0, 1e-14) {
            Ok(r) => Check::close(name, exact, r.value, 1e-12, 1.0),
            Err(e) => Check::error(name, num(exact), e),
        });
    }
    out
}

/// Normalized `f_i(n)` at `n_max / 10` and `n_max`, and the model integrals
/// at `n_max / 10` and `4 n_max / 10`.
pub fn asym_suite(n_max: usize, p: &ParamPoint) -> Vec<Check> {
    let mut out = Vec::new();
    let (n_lo, n_hi) = (n_max / 10, n_max);
    let lo = asym_f_check(n_lo, p.k0, p.k1);
    let hi = asym_f_check(n_hi, p.k0, p.k1);
    match (lo, hi) {
        (Ok(lo), Ok(hi)) => {
            for (i, (a, b)) in [(lo.0, hi.0), (lo.1, hi.1)].into_iter().enumerate() {
                let f = i + 1;
                out.push(Check::close(format!("asym.f{f}.n{n_lo}"), 1.0, a, 0.1, 1.0));
                out.push(Check::close(format!("asym.f{f}.n{n_hi}"), 1.0, b, 0.1, 1.0));
                out.push(Check::flag(format!("asym.f{f}.improves"), (b - 1.0).abs() < (a - 1.0).abs()));
            }
        }
        (Err(e), _) | (_, Err(e)) => out.push(Check::error("asym.f", num(1.0), e)),
    }
    // The p12 integrand in v = u^2 has this shape with 2n in place of n.
    let m_lo = n_lo.max(2);
    let m_hi = (4 * n_lo).max(8);
    for (tag, alpha) in [("d1", p.k1 + 0.5), ("d2", -p.k1 - 0.5)] {
        let ratio = |m| asym_integral_check(alpha, -2.0, -2.0 * p.k0, m, None).map(|(v, a)| v / a);
        match (ratio(m_lo), ratio(m_hi)) {
            (Ok(a), Ok(b)) => {
                out.push(Check::close(format!("asym.integral.{tag}.n{m_lo}"), 1.0, a, 0.1, 1.0));
                out.push(Check::flag(format!("asym.integral.{tag}.improves"), (b - 1.0).abs() < (a - 1.0).abs()));
            }
            (Err(e), _) | (_, Err(e)) => out.push(Check::error(format!("asym.integral.{tag}"), num(1.0), e)),
        }
    }
    out
}
