//! Dunkl operators on the standard module and the exact computation of
//! `alpha'_n`, `beta'_n` from powers of the Dunkl Laplacian.

use num_traits::One;

use super::group::GroupElement;
use super::vpoly::VPoly;
use super::xpoly::{LinearForm, XPoly};
use crate::error::{Error, Result};
use crate::hyper::alpha_beta_recurrence;
use crate::ring::{factorial, int, ParamPoly, Rational};
use crate::Kind;

/// Largest `n` accepted by the operator backend.
pub const MAX_OPERATOR_N: usize = 4;

struct Root {
    form: LinearForm,
    reflection: GroupElement,
    /// Components `(v1, v2)` of the unnormalized root.
    v: [i64; 2],
    /// True for the diagonal roots, weighted by `k0`.
    diagonal: bool,
}

fn positive_roots() -> [Root; 4] {
    [
        Root {
            form: LinearForm::X1,
            reflection: GroupElement::sigma1(),
            v: [1, 0],
            diagonal: false,
        },
        Root {
            form: LinearForm::X2,
            reflection: GroupElement::sigma2(),
            v: [0, 1],
            diagonal: false,
        },
        Root {
            form: LinearForm::X1MinusX2,
            reflection: GroupElement::sigma12_plus(),
            v: [1, -1],
            diagonal: true,
        },
        Root {
            form: LinearForm::X1PlusX2,
            reflection: GroupElement::sigma12_minus(),
            v: [1, 1],
            diagonal: true,
        },
    ]
}

/// Dunkl operator `D_i`, `i` in `{1, 2}`:
///
/// `D_i f = d_i f + sum_v k_v v_i ((f(x) - f(x s_v)) / <x, v>) s_v`,
///
/// where `s_v` acts on the value part after the divided difference.
pub fn dunkl_d(i: usize, f: &VPoly) -> Result<VPoly> {
    assert!(i == 1 || i == 2, "coordinate index must be 1 or 2, got {i}");
    let mut out = f.map(|c| c.partial(i));
    let k0 = ParamPoly::k0();
    let k1 = ParamPoly::k1();
    for root in positive_roots() {
        let vi = root.v[i - 1];
        if vi == 0 {
            continue;
        }
        let diff = f - &f.substitute_x(&root.reflection);
        if diff.is_zero() {
            continue;
        }
        let q = VPoly::new(
            diff.comp(0).div_linear(root.form)?,
            diff.comp(1).div_linear(root.form)?,
        );
        let weight = if root.diagonal { &k0 } else { &k1 };
        let term = q.act_t(&root.reflection).scale(&weight.scale(&int(vi)));
        out = &out + &term;
    }
    Ok(out)
}

/// Dunkl Laplacian `D_1^2 + D_2^2`.
pub fn laplacian(f: &VPoly) -> Result<VPoly> {
    let a = dunkl_d(1, &dunkl_d(1, f)?)?;
    let b = dunkl_d(2, &dunkl_d(2, f)?)?;
    Ok(&a + &b)
}

pub fn laplacian_power(f: &VPoly, m: usize) -> Result<VPoly> {
    let mut g = f.clone();
    for _ in 0..m {
        if g.is_zero() {
            break;
        }
        g = laplacian(&g)?;
    }
    Ok(g)
}

/// True when the scalar polynomial is fixed by all of W(B2).
pub fn is_invariant(f: &XPoly) -> bool {
    GroupElement::all().iter().all(|w| &f.substitute(w) == f)
}

/// `Delta_k(f g) - f Delta_k(g)` minus the explicit product-rule expansion
/// for a W-invariant scalar `f`. The identity holds iff this is zero.
pub fn product_rule_residual(f: &XPoly, g: &VPoly) -> Result<VPoly> {
    if !is_invariant(f) {
        return Err(Error::NotInvariant);
    }
    let lhs = &laplacian(&g.mul_scalar(f))? - &laplacian(g)?.mul_scalar(f);

    let two = int(2);
    let (f1, f2) = (f.d_dx1(), f.d_dx2());
    let grad_pair = &g.map(|c| c.d_dx1()).mul_scalar(&f1) + &g.map(|c| c.d_dx2()).mul_scalar(&f2);
    let mut rhs = &g.mul_scalar(&f.laplacian()) + &grad_pair.scale_q(&two);

    let k1_part = &g
        .act_t(&GroupElement::sigma1())
        .mul_scalar(&f1.div_linear(LinearForm::X1)?)
        + &g.act_t(&GroupElement::sigma2())
            .mul_scalar(&f2.div_linear(LinearForm::X2)?);
    let k0_part = &g
        .act_t(&GroupElement::sigma12_plus())
        .mul_scalar(&(&f1 - &f2).div_linear(LinearForm::X1MinusX2)?)
        + &g.act_t(&GroupElement::sigma12_minus())
            .mul_scalar(&(&f1 + &f2).div_linear(LinearForm::X1PlusX2)?);
    rhs = &rhs + &k1_part.scale(&ParamPoly::k1().scale(&two));
    rhs = &rhs + &k0_part.scale(&ParamPoly::k0().scale(&two));

    Ok(&lhs - &rhs)
}

fn homogeneous(g: &VPoly) -> Result<Option<u32>> {
    g.homogeneous_degree()
        .map_err(|_| Error::Domain("polynomial is not homogeneous".into()))
}

/// `Delta_k(|x|^2 g) - 4(m+1) g - |x|^2 Delta_k g` for `g` homogeneous of
/// degree `m`; zero when the `|x|^2` rule holds.
pub fn xsq_rule_residual(g: &VPoly) -> Result<VPoly> {
    let Some(m) = homogeneous(g)? else {
        return Ok(VPoly::zero());
    };
    let r2 = XPoly::norm_sq();
    let lhs = laplacian(&g.mul_scalar(&r2))?;
    let rhs = &g.scale_q(&int(4 * (m as i64 + 1))) + &laplacian(g)?.mul_scalar(&r2);
    Ok(&lhs - &rhs)
}

/// `Delta_k^(n+1)(|x|^2 f) - 4(n+1)(n+2) Delta_k^n f` for `f` homogeneous of
/// odd degree `2n+1`.
pub fn deltxsq_residual(f: &VPoly) -> Result<VPoly> {
    let Some(d) = homogeneous(f)? else {
        return Ok(VPoly::zero());
    };
    if d % 2 == 0 {
        return Err(Error::Domain(format!("degree {d} is not odd")));
    }
    let n = (d as usize - 1) / 2;
    let lhs = laplacian_power(&f.mul_scalar(&XPoly::norm_sq()), n + 1)?;
    let c = int(4 * (n as i64 + 1) * (n as i64 + 2));
    Ok(&lhs - &laplacian_power(f, n)?.scale_q(&c))
}

/// Residual of
/// `Delta_k phi^(2n) p12 = -8n(1+2k1+2k0) phi^(2n-1) p14 + 8n(2n-1-2k0) |x|^2 phi^(2n-2) p12`.
pub fn delphi_residual(n: usize) -> Result<VPoly> {
    let lhs = laplacian(&phi_p12(n))?;
    if n == 0 {
        return Ok(lhs);
    }
    let ni = n as i64;
    let phi = XPoly::phi();
    let a = ParamPoly::linear(int(1), int(2), int(2)).scale(&int(-8 * ni));
    let b = ParamPoly::linear(int(2 * ni - 1), int(-2), int(0)).scale(&int(8 * ni));
    let t1 = VPoly::p14().mul_scalar(&phi.pow(2 * n as u32 - 1)).scale(&a);
    let t2 = VPoly::p12()
        .mul_scalar(&(&XPoly::norm_sq() * &phi.pow(2 * n as u32 - 2)))
        .scale(&b);
    Ok(&lhs - &(&t1 + &t2))
}

/// Residual of
/// `Delta_k phi^(2n+1) p14 = -4(2n+1)(1+2k1-2k0) phi^(2n) p12 + 8n(2n+1+2k0) |x|^2 phi^(2n-1) p14`.
pub fn delph_n2_residual(n: usize) -> Result<VPoly> {
    let lhs = laplacian(&phi_p14(n))?;
    let ni = n as i64;
    let a = ParamPoly::linear(int(1), int(-2), int(2)).scale(&int(-4 * (2 * ni + 1)));
    let mut rhs = phi_p12(n).scale(&a);
    if n > 0 {
        let b = ParamPoly::linear(int(2 * ni + 1), int(2), int(0)).scale(&int(8 * ni));
        let t2 = VPoly::p14()
            .mul_scalar(&(&XPoly::norm_sq() * &XPoly::phi().pow(2 * n as u32 - 1)))
            .scale(&b);
        rhs = &rhs + &t2;
    }
    Ok(&lhs - &rhs)
}

/// `phi^(2n) p12`.
pub fn phi_p12(n: usize) -> VPoly {
    VPoly::p12().mul_scalar(&XPoly::phi().pow(2 * n as u32))
}

/// `phi^(2n+1) p14`.
pub fn phi_p14(n: usize) -> VPoly {
    VPoly::p14().mul_scalar(&XPoly::phi().pow(2 * n as u32 + 1))
}

/// `(alpha'_n, beta'_n)` from `Delta^(2n)(phi^(2n) p12) = alpha'_n p12` and
/// `Delta^(2n+1)(phi^(2n+1) p14) = beta'_n p12`.
pub fn alpha_beta_via_laplacian(n: usize) -> Result<(ParamPoly, ParamPoly)> {
    if n > MAX_OPERATOR_N {
        return Err(Error::UnsupportedN {
            n,
            max: MAX_OPERATOR_N,
        });
    }
    let a = laplacian_power(&phi_p12(n), 2 * n)?
        .as_multiple_of(&VPoly::p12())
        .ok_or(Error::NotMultipleOfP12)?;
    let b = laplacian_power(&phi_p14(n), 2 * n + 1)?
        .as_multiple_of(&VPoly::p12())
        .ok_or(Error::NotMultipleOfP12)?;
    Ok((a, b))
}

/// `2^(4n) (2n)! (2n+1)!`, the factor with `alpha'_n = scale * alpha_n`.
pub fn alpha_scale(n: usize) -> Rational {
    let p = num_bigint::BigInt::one() << (4 * n);
    Rational::from_integer(p * factorial(2 * n) * factorial(2 * n + 1))
}

/// `2^(4n+2) (2n+1)! (2n+2)!`, the factor with `beta'_n = scale * beta_n`.
pub fn beta_scale(n: usize) -> Rational {
    let p = num_bigint::BigInt::one() << (4 * n + 2);
    Rational::from_integer(p * factorial(2 * n + 1) * factorial(2 * n + 2))
}

/// Where the exact values of `alpha_n`, `beta_n` come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// Powers of the Dunkl Laplacian, `n <= MAX_OPERATOR_N`.
    Operator,
    /// The three-term recurrence, any `n`.
    Recurrence,
}

/// `<phi^(2n) p12, p12>_S` or `<phi^(2n+1) p14, p12>_S` as an element of `Q[k0, k1]`.
pub fn inner_product_s_exact(n: usize, kind: Kind, backend: Backend) -> Result<ParamPoly> {
    let anchor = ParamPoly::linear(int(1), int(2), int(2));
    let coeff = match backend {
        Backend::Operator => {
            let (a, b) = alpha_beta_via_laplacian(n)?;
            match kind {
                Kind::P12 => a.scale(&num_traits::Inv::inv(alpha_scale(n))),
                Kind::P14 => b.scale(&num_traits::Inv::inv(beta_scale(n))),
            }
        }
        Backend::Recurrence => {
            let seq = alpha_beta_recurrence(n);
            match kind {
                Kind::P12 => seq.alpha[n].clone(),
                Kind::P14 => seq.beta[n].clone(),
            }
        }
    };
    Ok(&coeff * &anchor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn laplacian_of_phi_powers() {
        for n in 0..=2 {
            assert!(delphi_residual(n).unwrap().is_zero(), "delphi n={n}");
            assert!(delph_n2_residual(n).unwrap().is_zero(), "delph n={n}");
        }
    }

    #[test]
    fn norm_square_rules() {
        let g = VPoly::new(&XPoly::x1().pow(2) * &XPoly::x2(), XPoly::x2().pow(3));
        assert!(xsq_rule_residual(&g).unwrap().is_zero());
        assert!(deltxsq_residual(&g).unwrap().is_zero());
        assert!(deltxsq_residual(&phi_p14(0)).unwrap().is_zero());
        assert!(deltxsq_residual(&VPoly::t1().mul_scalar(&XPoly::x1().pow(2))).is_err());
    }

    fn k0() -> ParamPoly {
        ParamPoly::k0()
    }

    #[test]
    fn d1_of_x1_t1_is_t1_at_zero_parameters() {
        let f = VPoly::t1().mul_scalar(&XPoly::x1());
        let d = dunkl_d(1, &f).unwrap();
        assert_eq!(d.eval_params(&int(0), &int(0)), VPoly::t1());
    }

    #[test]
    fn d1_of_x1_squared_t1() {
        let f = VPoly::t1().mul_scalar(&XPoly::x1().pow(2));
        let expected = &VPoly::t1().mul_scalar(&XPoly::x1().scale_q(&int(2)))
            + &VPoly::t2().mul_scalar(&XPoly::x2().scale(&k0().scale(&int(2))));
        assert_eq!(dunkl_d(1, &f).unwrap(), expected);
    }

    #[test]
    fn d2_of_constant_vanishes() {
        assert!(dunkl_d(2, &VPoly::t1()).unwrap().is_zero());
        assert!(dunkl_d(1, &VPoly::t2()).unwrap().is_zero());
    }

    #[test]
    fn dunkl_operators_commute() {
        let f = VPoly::new(
            &XPoly::x1().pow(3) - &(&XPoly::x1() * &XPoly::x2().pow(2)),
            &XPoly::x2().pow(3) + &XPoly::x1().pow(2).scale(&k0()),
        );
        let a = dunkl_d(1, &dunkl_d(2, &f).unwrap()).unwrap();
        let b = dunkl_d(2, &dunkl_d(1, &f).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn laplacian_of_p12_is_zero() {
        assert!(laplacian(&VPoly::p12()).unwrap().is_zero());
    }

    #[test]
    fn laplacian_of_phi_p14() {
        let c = ParamPoly::linear(int(1), int(-2), int(2)).scale(&int(-4));
        assert_eq!(laplacian(&phi_p14(0)).unwrap(), VPoly::p12().scale(&c));
    }

    #[test]
    fn laplacian_of_phi_squared_p12() {
        // -8(1 + 2k1 + 2k0) phi p14 + 8(1 - 2k0) |x|^2 p12
        let a = ParamPoly::linear(int(1), int(2), int(2)).scale(&int(-8));
        let b = ParamPoly::linear(int(1), int(-2), int(0)).scale(&int(8));
        let expected = &phi_p14(0).scale(&a) + &VPoly::p12().mul_scalar(&XPoly::norm_sq()).scale(&b);
        assert_eq!(laplacian(&phi_p12(1)).unwrap(), expected);
    }

    #[test]
    fn non_invariant_scalar_rejected() {
        assert_eq!(
            product_rule_residual(&XPoly::phi(), &VPoly::p12()),
            Err(Error::NotInvariant)
        );
    }

    #[test]
    fn operator_backend_limits_n() {
        assert!(matches!(
            alpha_beta_via_laplacian(MAX_OPERATOR_N + 1),
            Err(Error::UnsupportedN { .. })
        ));
    }

    #[test]
    fn base_values() {
        let (a0, b0) = alpha_beta_via_laplacian(0).unwrap();
        assert_eq!(a0, ParamPoly::one());
        assert_eq!(b0, ParamPoly::linear(int(1), int(-2), int(2)).scale(&int(-4)));
        assert_eq!(alpha_scale(1), int(192));
        assert_eq!(beta_scale(0), int(8));
    }

    #[test]
    fn inner_product_at_n0() {
        let s = inner_product_s_exact(0, Kind::P12, Backend::Operator).unwrap();
        assert_eq!(s, ParamPoly::linear(int(1), int(2), int(2)));
        let t = inner_product_s_exact(0, Kind::P14, Backend::Operator).unwrap();
        let expected = (&ParamPoly::linear(int(1), int(-2), int(2))
            * &ParamPoly::linear(int(1), int(2), int(2)))
            .scale(&rat(-1, 2));
        assert_eq!(t, expected);
    }
}
