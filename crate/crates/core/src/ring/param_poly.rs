use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};

/// Exponent pair `(e0, e1)` of the monomial `k0^e0 k1^e1`.
pub type Exp = (u32, u32);

/// Element of `Q[k0, k1]`, stored sparsely. Zero coefficients are never kept,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Exp, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn monomial(c: Rational, e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn k0() -> Self {
        Self::monomial(Rational::one(), (1, 0))
    }

    pub fn k1() -> Self {
        Self::monomial(Rational::one(), (0, 1))
    }

    /// Builds `c + a*k0 + b*k1`, the shape of nearly every linear parameter
    /// expression that shows up.
    pub fn linear(c: Rational, a: Rational, b: Rational) -> Self {
        let mut p = Self::constant(c);
        p.add_term((1, 0), a);
        p.add_term((0, 1), b);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff((0, 0))
    }

    pub fn coeff(&self, e: Exp) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn add_term(&mut self, e: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution `k0 -> k0v`, `k1 -> k1v`.
    pub fn eval(&self, k0v: &Rational, k1v: &Rational) -> Rational {
        let max0 = self.terms.keys().map(|e| e.0).max().unwrap_or(0) as usize;
        let max1 = self.terms.keys().map(|e| e.1).max().unwrap_or(0) as usize;
        let pows = |x: &Rational, m: usize| {
            let mut v = Vec::with_capacity(m + 1);
            v.push(Rational::one());
            for i in 0..m {
                let next = &v[i] * x;
                v.push(next);
            }
            v
        };
        let p0 = pows(k0v, max0);
        let p1 = pows(k1v, max1);
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * &p0[a as usize] * &p1[b as usize])
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn eval_f64(&self, k0v: f64, k1v: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                super::rational::to_f64(c) * k0v.powi(a as i32) * k1v.powi(b as i32)
            })
            .sum()
    }

    /// Terms in graded order: ascending total degree, then descending power of `k0`.
    pub fn graded_terms(&self) -> Vec<(Exp, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|(x, _), (y, _)| (x.0 + x.1).cmp(&(y.0 + y.1)).then(y.0.cmp(&x.0)));
        v
    }
}

/// `(a)_n = a (a+1) ... (a+n-1)` in `Q[k0, k1]`; `(a)_0 = 1`.
pub fn poch(a: &ParamPoly, n: usize) -> ParamPoly {
    let mut acc = ParamPoly::one();
    let mut x = a.clone();
    for _ in 0..n {
        acc = &acc * &x;
        x += ParamPoly::one();
    }
    acc
}

pub fn poly_eval(p: &ParamPoly, k0v: &Rational, k1v: &Rational) -> Rational {
    p.eval(k0v, k1v)
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.graded_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("k0", a), ("k1", b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for ParamPoly {
    fn add_assign(&mut self, rhs: ParamPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl SubAssign for ParamPoly {
    fn sub_assign(&mut self, rhs: ParamPoly) {
        *self -= &rhs;
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        self += &rhs;
        self
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: ParamPoly) -> ParamPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl MulAssign<&ParamPoly> for ParamPoly {
    fn mul_assign(&mut self, rhs: &ParamPoly) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn k0() -> ParamPoly {
        ParamPoly::k0()
    }
    fn k1() -> ParamPoly {
        ParamPoly::k1()
    }

    #[test]
    fn poch_examples() {
        assert_eq!(poch(&ParamPoly::from_int(3), 2), ParamPoly::from_int(12));
        assert_eq!(poch(&(k0() * k1()), 0), ParamPoly::one());
        // (-k1)(1 - k1) = k1^2 - k1
        let expected = &k1().pow(2) - &k1();
        assert_eq!(poch(&-k1(), 2), expected);
    }

    #[test]
    fn eval_examples() {
        let p = ParamPoly::linear(int(1), int(2), int(2));
        assert_eq!(p.eval(&rat(1, 4), &rat(1, 4)), int(2));
        let q = &(&k0().pow(3) * &k1()) + &ParamPoly::constant(rat(-7, 3));
        assert_eq!(q.eval(&int(0), &int(0)), rat(-7, 3));
        let r = &k1().pow(2) - &k1();
        assert_eq!(r.eval(&int(5), &rat(1, 2)), rat(-1, 4));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &k0() - &k0();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
        assert_eq!(p, ParamPoly::zero());
    }

    #[test]
    fn display_is_graded() {
        let p = ParamPoly::linear(int(1), int(2), int(2));
        assert_eq!(p.to_string(), "1 + 2*k0 + 2*k1");
        let q = &(&k1().pow(2) - &k1()) + &k0().scale(&rat(-1, 2));
        assert_eq!(q.to_string(), "-1/2*k0 - k1 + k1^2");
        assert_eq!(ParamPoly::zero().to_string(), "0");
    }

    #[test]
    fn degree_and_constant() {
        assert_eq!(ParamPoly::zero().degree(), None);
        assert_eq!((k0() * k1().pow(3)).degree(), Some(4));
        assert!(ParamPoly::from_int(4).is_constant());
        assert!(!k0().is_constant());
    }
}
