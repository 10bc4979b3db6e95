use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::group::GroupElement;
use super::xpoly::XPoly;
use crate::ring::{ParamPoly, Rational};

/// Vector-valued polynomial `f1(x) t1 + f2(x) t2`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VPoly {
    comps: [XPoly; 2],
}

impl VPoly {
    pub fn new(f1: XPoly, f2: XPoly) -> Self {
        Self { comps: [f1, f2] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn t1() -> Self {
        Self::new(XPoly::one(), XPoly::zero())
    }

    pub fn t2() -> Self {
        Self::new(XPoly::zero(), XPoly::one())
    }

    /// `p12 = -x2 t1 + x1 t2`.
    pub fn p12() -> Self {
        Self::new(-&XPoly::x2(), XPoly::x1())
    }

    /// `p14 = -x2 t1 - x1 t2`.
    pub fn p14() -> Self {
        Self::new(-&XPoly::x2(), -&XPoly::x1())
    }

    pub fn comp(&self, i: usize) -> &XPoly {
        &self.comps[i]
    }

    pub fn components(&self) -> &[XPoly; 2] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(XPoly::is_zero)
    }

    /// Common degree of every term, `Ok(None)` for zero, `Err(())` when mixed.
    pub fn homogeneous_degree(&self) -> std::result::Result<Option<u32>, ()> {
        let d0 = self.comps[0].homogeneous_degree()?;
        let d1 = self.comps[1].homogeneous_degree()?;
        match (d0, d1) {
            (Some(a), Some(b)) if a != b => Err(()),
            (Some(a), _) | (None, Some(a)) => Ok(Some(a)),
            (None, None) => Ok(None),
        }
    }

    /// Multiplication by a scalar polynomial.
    pub fn mul_scalar(&self, f: &XPoly) -> Self {
        Self::new(f * &self.comps[0], f * &self.comps[1])
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Self::new(self.comps[0].scale(c), self.comps[1].scale(c))
    }

    pub fn scale_q(&self, c: &Rational) -> Self {
        Self::new(self.comps[0].scale_q(c), self.comps[1].scale_q(c))
    }

    pub fn map(&self, f: impl Fn(&XPoly) -> XPoly) -> Self {
        Self::new(f(&self.comps[0]), f(&self.comps[1]))
    }

    /// `f(x w)` with the value part untouched.
    pub fn substitute_x(&self, w: &GroupElement) -> Self {
        self.map(|c| c.substitute(w))
    }

    /// `f(x, t w)` with the x part untouched.
    pub fn act_t(&self, w: &GroupElement) -> Self {
        let m = w.t_coefficients();
        let lin = |i: usize| {
            let mut out = XPoly::zero();
            for j in 0..2 {
                match m[i][j] {
                    0 => {}
                    1 => out += &self.comps[j],
                    -1 => out -= &self.comps[j],
                    _ => unreachable!("signed permutation entries are 0 or +-1"),
                }
            }
            out
        };
        Self::new(lin(0), lin(1))
    }

    /// The W(B2) action `(w f)(x) = f(x w) w^{-1}`.
    pub fn group_act(&self, w: &GroupElement) -> Self {
        self.substitute_x(w).act_t(w)
    }

    /// If `self = c * base` for some `c` in `Q[k0, k1]`, returns `c`.
    pub fn as_multiple_of(&self, base: &VPoly) -> Option<ParamPoly> {
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        let (idx, e, b) = base
            .comps
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.terms().next().map(|(e, v)| (i, *e, v.clone())))?;
        let s = self.comps[idx].coeff(e.0, e.1);
        // Coefficients of base are rational in every use here.
        if !b.is_constant() {
            return None;
        }
        let inv = num_traits::Inv::inv(b.constant_term());
        let c = s.scale(&inv);
        if &base.scale(&c) == self {
            Some(c)
        } else {
            None
        }
    }

    pub fn eval_params(&self, k0: &Rational, k1: &Rational) -> Self {
        self.map(|c| c.eval_params(k0, k1))
    }

    /// Value at `(x1, x2)` for numeric parameters, as the row vector `(f1, f2)`.
    pub fn eval_f64(&self, k0: f64, k1: f64, x1: f64, x2: f64) -> [f64; 2] {
        [
            self.comps[0].eval_f64(k0, k1, x1, x2),
            self.comps[1].eval_f64(k0, k1, x1, x2),
        ]
    }
}

impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] t1 + [{}] t2", self.comps[0], self.comps[1])
    }
}

impl fmt::Debug for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VPoly({self})")
    }
}

impl Add for &VPoly {
    type Output = VPoly;
    fn add(self, rhs: &VPoly) -> VPoly {
        VPoly::new(&self.comps[0] + &rhs.comps[0], &self.comps[1] + &rhs.comps[1])
    }
}

impl Sub for &VPoly {
    type Output = VPoly;
    fn sub(self, rhs: &VPoly) -> VPoly {
        VPoly::new(&self.comps[0] - &rhs.comps[0], &self.comps[1] - &rhs.comps[1])
    }
}

impl Neg for &VPoly {
    type Output = VPoly;
    fn neg(self) -> VPoly {
        self.map(|c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn identity_action_is_trivial() {
        let f = VPoly::new(XPoly::phi(), XPoly::x1());
        assert_eq!(f.group_act(&GroupElement::identity()), f);
    }

    #[test]
    fn p12_and_p14_are_relative_invariants() {
        for g in [GroupElement::sigma1(), GroupElement::sigma12_plus()] {
            assert_eq!(VPoly::p12().group_act(&g), -&VPoly::p12());
            let phi_p14 = VPoly::p14().mul_scalar(&XPoly::phi());
            assert_eq!(phi_p14.group_act(&g), -&phi_p14);
        }
    }

    #[test]
    fn swap_moves_phi_t1_to_minus_phi_t2() {
        let f = VPoly::t1().mul_scalar(&XPoly::phi());
        let expected = -&VPoly::t2().mul_scalar(&XPoly::phi());
        assert_eq!(f.group_act(&GroupElement::sigma12_plus()), expected);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let f = VPoly::new(
            &XPoly::x1().pow(3) + &XPoly::x2(),
            &XPoly::x1() * &XPoly::x2().pow(2),
        );
        let g = GroupElement::all();
        for a in &g {
            for b in &g {
                // acting by a then b equals acting by the product b a on the right
                let lhs = f.group_act(a).group_act(b);
                let rhs = f.group_act(&b.compose(a));
                assert_eq!(lhs, rhs, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn multiple_detection() {
        let c = ParamPoly::linear(int(1), int(2), int(-2));
        let v = VPoly::p12().scale(&c);
        assert_eq!(v.as_multiple_of(&VPoly::p12()), Some(c));
        assert_eq!(VPoly::p14().as_multiple_of(&VPoly::p12()), None);
        assert_eq!(VPoly::zero().as_multiple_of(&VPoly::p12()), Some(ParamPoly::zero()));
    }
}
