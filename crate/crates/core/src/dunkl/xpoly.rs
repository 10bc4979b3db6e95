use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use super::group::GroupElement;
use crate::error::{Error, Result};
use crate::ring::{int, ParamPoly, Rational};

/// Scalar polynomial in `x1, x2` with coefficients in `Q[k0, k1]`.
///
/// Keys are `(a, b)` for `x1^a x2^b`; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    terms: BTreeMap<(u32, u32), ParamPoly>,
}

/// The four positive-root linear forms `<v, x>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearForm {
    X1,
    X2,
    X1MinusX2,
    X1PlusX2,
}

impl LinearForm {
    fn name(self) -> &'static str {
        match self {
            LinearForm::X1 => "x1",
            LinearForm::X2 => "x2",
            LinearForm::X1MinusX2 => "x1 - x2",
            LinearForm::X1PlusX2 => "x1 + x2",
        }
    }
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ParamPoly::one(), 0, 0)
    }

    pub fn constant(c: ParamPoly) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: ParamPoly, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((a, b), c);
        p
    }

    pub fn x1() -> Self {
        Self::monomial(ParamPoly::one(), 1, 0)
    }

    pub fn x2() -> Self {
        Self::monomial(ParamPoly::one(), 0, 1)
    }

    /// `|x|^2 = x1^2 + x2^2`.
    pub fn norm_sq() -> Self {
        &Self::monomial(ParamPoly::one(), 2, 0) + &Self::monomial(ParamPoly::one(), 0, 2)
    }

    /// `phi = x1^2 - x2^2`.
    pub fn phi() -> Self {
        &Self::monomial(ParamPoly::one(), 2, 0) - &Self::monomial(ParamPoly::one(), 0, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> ParamPoly {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: (u32, u32), c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Common degree of all monomials. `Ok(None)` for zero, `Err(())` if the
    /// polynomial mixes degrees.
    pub fn homogeneous_degree(&self) -> std::result::Result<Option<u32>, ()> {
        let mut degs = self.terms.keys().map(|(a, b)| a + b);
        match degs.next() {
            None => Ok(None),
            Some(d) => {
                if degs.all(|e| e == d) {
                    Ok(Some(d))
                } else {
                    Err(())
                }
            }
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn scale_q(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v.scale(c))).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn d_dx1(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if a > 0 {
                out.add_term((a - 1, b), c.scale(&int(a as i64)));
            }
        }
        out
    }

    pub fn d_dx2(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if b > 0 {
                out.add_term((a, b - 1), c.scale(&int(b as i64)));
            }
        }
        out
    }

    pub fn partial(&self, i: usize) -> Self {
        match i {
            1 => self.d_dx1(),
            2 => self.d_dx2(),
            _ => panic!("coordinate index must be 1 or 2, got {i}"),
        }
    }

    /// Classical Laplacian.
    pub fn laplacian(&self) -> Self {
        &self.d_dx1().d_dx1() + &self.d_dx2().d_dx2()
    }

    /// `p(x w)` for the signed permutation `w`.
    pub fn substitute(&self, w: &GroupElement) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let (e, sign) = w.map_monomial(a, b);
            let c = if sign < 0 { -c } else { c.clone() };
            out.add_term(e, c);
        }
        out
    }

    /// Exact quotient by a positive-root linear form. A nonzero remainder is
    /// reported as [`Error::InexactDivision`].
    pub fn div_linear(&self, form: LinearForm) -> Result<Self> {
        let inexact = || Error::InexactDivision {
            divisor: form.name(),
        };
        match form {
            LinearForm::X1 | LinearForm::X2 => {
                let mut out = Self::zero();
                for (&(a, b), c) in &self.terms {
                    let e = match form {
                        LinearForm::X1 if a > 0 => (a - 1, b),
                        LinearForm::X2 if b > 0 => (a, b - 1),
                        _ => return Err(inexact()),
                    };
                    out.add_term(e, c.clone());
                }
                Ok(out)
            }
            LinearForm::X1MinusX2 | LinearForm::X1PlusX2 => {
                // Divide by x1 + s*x2, eliminating the highest power of x1 first.
                let s: i64 = if form == LinearForm::X1PlusX2 { 1 } else { -1 };
                let mut rem = self.terms.clone();
                let mut quot = Self::zero();
                while let Some((&(a, b), _)) = rem.iter().next_back() {
                    if a == 0 {
                        return Err(inexact());
                    }
                    let c = rem.remove(&(a, b)).expect("key present");
                    // c x1^a x2^b = c x1^(a-1) x2^b (x1 + s x2) - s c x1^(a-1) x2^(b+1)
                    let carry = c.scale(&int(-s));
                    let key = (a - 1, b + 1);
                    let merged = match rem.remove(&key) {
                        Some(v) => &v + &carry,
                        None => carry,
                    };
                    if !merged.is_zero() {
                        rem.insert(key, merged);
                    }
                    quot.add_term((a - 1, b), c);
                }
                Ok(quot)
            }
        }
    }

    pub fn eval_f64(&self, k0: f64, k1: f64, x1: f64, x2: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c.eval_f64(k0, k1) * x1.powi(a as i32) * x2.powi(b as i32))
            .sum()
    }

    pub fn eval_params(&self, k0: &Rational, k1: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, ParamPoly::constant(c.eval(k0, k1)));
        }
        out
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), c)| {
                let mut mono = String::new();
                for (name, e) in [("x1", a), ("x2", b)] {
                    match e {
                        0 => {}
                        1 => mono.push_str(&format!("*{name}")),
                        _ => mono.push_str(&format!("*{name}^{e}")),
                    }
                }
                format!("({c}){mono}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl AddAssign<&XPoly> for XPoly {
    fn add_assign(&mut self, rhs: &XPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&XPoly> for XPoly {
    fn sub_assign(&mut self, rhs: &XPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1() -> XPoly {
        XPoly::x1()
    }
    fn x2() -> XPoly {
        XPoly::x2()
    }

    #[test]
    fn divides_by_every_root_form() {
        let p = XPoly::phi(); // (x1 - x2)(x1 + x2)
        assert_eq!(p.div_linear(LinearForm::X1MinusX2).unwrap(), &x1() + &x2());
        assert_eq!(p.div_linear(LinearForm::X1PlusX2).unwrap(), &x1() - &x2());
        let q = &x1() * &x2();
        assert_eq!(q.div_linear(LinearForm::X1).unwrap(), x2());
        assert_eq!(q.div_linear(LinearForm::X2).unwrap(), x1());
    }

    #[test]
    fn inexact_division_is_loud() {
        let p = XPoly::norm_sq();
        assert!(matches!(
            p.div_linear(LinearForm::X1MinusX2),
            Err(Error::InexactDivision { .. })
        ));
        assert!(x2().div_linear(LinearForm::X1).is_err());
        assert!(XPoly::one().div_linear(LinearForm::X1PlusX2).is_err());
    }

    #[test]
    fn divide_then_multiply_roundtrip() {
        // (x1 + x2)^3 (x1 - 2 x2) / (x1 + x2) = (x1 + x2)^2 (x1 - 2 x2)
        let s = &x1() + &x2();
        let t = &x1() - &x2().scale_q(&int(2));
        let p = &s.pow(3) * &t;
        assert_eq!(p.div_linear(LinearForm::X1PlusX2).unwrap(), &s.pow(2) * &t);
    }

    #[test]
    fn classical_laplacian_of_phi_powers() {
        // Laplacian(phi^2) = 8 |x|^2, the n = 1 case of 8n(2n-1)|x|^2 phi^(2n-2)
        let p = XPoly::phi().pow(2);
        assert_eq!(p.laplacian(), XPoly::norm_sq().scale_q(&int(8)));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(XPoly::zero().homogeneous_degree(), Ok(None));
        assert_eq!(XPoly::phi().homogeneous_degree(), Ok(Some(2)));
        assert!((&XPoly::phi() + &x1()).homogeneous_degree().is_err());
    }
}
