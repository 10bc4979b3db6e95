//! Exact sequences in `Q[k0, k1]`: the coefficients `alpha_n, beta_n`, their
//! closed forms, the sector inner products and the terminating `3F2` sums
//! behind them.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{factorial, int, poch, poch_q, rat, ParamPoly, Rational};
use crate::Kind;

/// `alpha_0 ..= alpha_n` and `beta_0 ..= beta_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaBetaSeq {
    pub n_max: usize,
    pub alpha: Vec<ParamPoly>,
    pub beta: Vec<ParamPoly>,
}

fn lin(c: Rational, a: i64, b: i64) -> ParamPoly {
    ParamPoly::linear(c, int(a), int(b))
}

fn fact_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `alpha_n`, `beta_n` from the two-term recurrence with `alpha_0 = 1`:
///
/// ```text
/// alpha_n = -(1+2k1+2k0)/(2n+1) beta_{n-1} + (2n-1-2k0)/(2n+1) alpha_{n-1}
/// beta_n  = -(1+2k1-2k0)/(2(n+1)) alpha_n + n(2n+1+2k0)/((n+1)(2n+1)) beta_{n-1}
/// ```
pub fn alpha_beta_recurrence(n_max: usize) -> AlphaBetaSeq {
    let mut alpha = Vec::with_capacity(n_max + 1);
    let mut beta: Vec<ParamPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let ni = n as i64;
        let a = if n == 0 {
            ParamPoly::one()
        } else {
            let t1 = lin(int(1), 2, 2).scale(&rat(-1, 2 * ni + 1));
            let t2 = lin(int(2 * ni - 1), -2, 0).scale(&rat(1, 2 * ni + 1));
            &(&t1 * &beta[n - 1]) + &(&t2 * &alpha[n - 1])
        };
        let mut b = &lin(int(1), -2, 2).scale(&rat(-1, 2 * (ni + 1))) * &a;
        if n > 0 {
            let c = lin(int(2 * ni + 1), 2, 0).scale(&rat(ni, (ni + 1) * (2 * ni + 1)));
            b = &b + &(&c * &beta[n - 1]);
        }
        alpha.push(a);
        beta.push(b);
    }
    AlphaBetaSeq { n_max, alpha, beta }
}

/// The rescaled sequences `alpha'_n, beta'_n` from their own recurrence
/// (`alpha'_0 = 1`), used to cross-check the scale factors.
pub fn alpha_beta_prime_recurrence(n_max: usize) -> AlphaBetaSeq {
    let mut alpha = Vec::with_capacity(n_max + 1);
    let mut beta: Vec<ParamPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let ni = n as i64;
        let a = if n == 0 {
            ParamPoly::one()
        } else {
            let t1 = lin(int(1), 2, 2).scale(&int(-8 * ni));
            let t2 = lin(int(2 * ni - 1), -2, 0).scale(&int(64 * ni * ni * (2 * ni - 1)));
            &(&t1 * &beta[n - 1]) + &(&t2 * &alpha[n - 1])
        };
        let mut b = &lin(int(1), -2, 2).scale(&int(-4 * (2 * ni + 1))) * &a;
        if n > 0 {
            let c = lin(int(2 * ni + 1), 2, 0).scale(&int(64 * ni * ni * (2 * ni + 1)));
            b = &b + &(&c * &beta[n - 1]);
        }
        alpha.push(a);
        beta.push(b);
    }
    AlphaBetaSeq { n_max, alpha, beta }
}

/// `(-n)_j` and friends: rising factorial of an integer.
fn poch_int(a: i64, j: usize) -> Rational {
    poch_q(&int(a), j)
}

fn k_plus(c: Rational) -> ParamPoly {
    ParamPoly::linear(c, int(1), int(1))
}

fn k_minus(c: Rational) -> ParamPoly {
    ParamPoly::linear(c, int(-1), int(1))
}

/// Closed form of `alpha_n` as a finite sum over `j`.
pub fn alpha_closed(n: usize) -> ParamPoly {
    let ni = n as i64;
    let pre = (fact_q(n) * poch_q(&rat(3, 2), n)).recip();
    let mk1 = -ParamPoly::k1();
    let mut acc = ParamPoly::zero();
    for j in 0..=n {
        let c = poch_int(-ni, j) * poch_int(-ni, j) / fact_q(j);
        let t = &(&poch(&mk1, j) * &poch(&k_plus(rat(3, 2)), n - j))
            * &poch(&k_minus(rat(1, 2)), n - j);
        acc += t.scale(&c);
    }
    acc.scale(&pre)
}

/// Closed form of `beta_n` as a finite sum over `j`.
pub fn beta_closed(n: usize) -> ParamPoly {
    let ni = n as i64;
    let pre = -(fact_q(n + 1) * poch_q(&rat(3, 2), n)).recip();
    let mk1 = -ParamPoly::k1();
    let mut acc = ParamPoly::zero();
    for j in 0..=n {
        let c = poch_int(-ni, j) * poch_int(-ni - 1, j) / fact_q(j);
        let t = &(&poch(&mk1, j) * &poch(&k_plus(rat(3, 2)), n - j))
            * &poch(&k_minus(rat(1, 2)), n + 1 - j);
        acc += t.scale(&c);
    }
    acc.scale(&pre)
}

/// The normalized sector inner product `<phi^m p, p12>_S` as a polynomial in
/// the parameters, with `m = 2n` for `p12` and `m = 2n+1` for `p14`.
pub fn s_inner_closed(n: usize, kind: Kind) -> ParamPoly {
    let ni = n as i64;
    let mk1 = -ParamPoly::k1();
    let half = rat(1, 2);
    let mut acc = ParamPoly::zero();
    let pre = match kind {
        Kind::P12 => (fact_q(n) * poch_q(&half, n + 1)).recip(),
        Kind::P14 => -(fact_q(n + 1) * poch_q(&half, n + 1)).recip(),
    };
    for j in 0..=n {
        let (c, m_minus) = match kind {
            Kind::P12 => (poch_int(-ni, j) * poch_int(-ni, j), n - j),
            Kind::P14 => (poch_int(-ni, j) * poch_int(-ni - 1, j), n + 1 - j),
        };
        let t = &(&poch(&mk1, j) * &poch(&k_plus(half.clone()), n + 1 - j))
            * &poch(&k_minus(half.clone()), m_minus);
        acc += t.scale(&(c / fact_q(j)));
    }
    acc.scale(&pre)
}

/// Terminating `3F2(u1, u2, u3; l1, l2; 1)` over the rationals. One of the
/// upper parameters must be a non-positive integer.
pub fn terminating_3f2(upper: [&Rational; 3], lower: [&Rational; 2]) -> Result<Rational> {
    let len = upper
        .iter()
        .filter(|u| u.is_integer() && !u.is_positive())
        .map(|u| (-u.to_integer()).try_into().unwrap_or(usize::MAX))
        .min()
        .ok_or_else(|| Error::Domain("3F2 sum does not terminate".into()))?;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for j in 0..len {
        let jq = int(j as i64);
        let mut den = jq.clone() + Rational::one();
        for l in lower {
            let lj = l + &jq;
            if lj.is_zero() {
                return Err(Error::Degenerate(format!(
                    "lower parameter {l} reaches zero at step {j}"
                )));
            }
            den *= lj;
        }
        let num = upper.iter().fold(Rational::one(), |acc, u| acc * (*u + &jq));
        term = term * num / den;
        sum += &term;
    }
    Ok(sum)
}

/// The two terminating sums `(f1, f2)` whose multiples are the sector inner
/// products of `p12` and `p14`, at rational parameters.
pub fn f_values(n: usize, k0: &Rational, k1: &Rational) -> Result<(Rational, Rational)> {
    let ni = int(n as i64);
    let half = rat(1, 2);
    let mn = -ni.clone();
    let mn1 = -ni.clone() - Rational::one();
    let mk1 = -k1.clone();
    let l_plus = &mn - &half - k1 - k0;
    let l_minus = &mn + &half - k1 + k0;
    let l_minus2 = &mn - &half - k1 + k0;
    let f1 = terminating_3f2([&mn, &mn, &mk1], [&l_plus, &l_minus])?;
    let f2 = terminating_3f2([&mn, &mn1, &mk1], [&l_plus, &l_minus2])?;
    Ok((f1, f2))
}

/// Factors `(P1, P2)` with `s_p12 = P1 f1` and `s_p14 = P2 f2`.
pub fn f_prefactors(n: usize, k0: &Rational, k1: &Rational) -> (Rational, Rational) {
    let half = rat(1, 2);
    let kp = &half + k1 + k0;
    let km = &half + k1 - k0;
    let h = poch_q(&half, n + 1);
    let p1 = poch_q(&kp, n + 1) * poch_q(&km, n) / (h.clone() * fact_q(n));
    let p2 = -poch_q(&kp, n + 1) * poch_q(&km, n + 1) / (h * fact_q(n + 1));
    (p1, p2)
}

/// Chu-Vandermonde: returns `(2F1(-n, b; c; 1), (c-b)_n / (c)_n)`, the
/// summed series and the closed form.
pub fn chu_vandermonde(n: usize, b: &Rational, c: &Rational) -> Result<(Rational, Rational)> {
    let mn = int(-(n as i64));
    let one = Rational::one();
    // 3F2 with a cancelling pair reduces to 2F1.
    let sum = terminating_3f2([&mn, b, &one], [c, &one])?;
    let cn = poch_q(c, n);
    if cn.is_zero() {
        return Err(Error::Degenerate(format!("(c)_n vanishes for c = {c}")));
    }
    Ok((sum, poch_q(&(c - b), n) / cn))
}

/// The case used for the asymptotics: `2F1(-n, -k1; -n-2k1; 1)` against
/// `(1+k1)_n / (1+2k1)_n`.
pub fn chu_vandermonde_k1(n: usize, k1: &Rational) -> Result<(Rational, Rational)> {
    let c = -int(n as i64) - k1 * int(2);
    let (sum, _) = chu_vandermonde(n, &-k1.clone(), &c)?;
    let one = Rational::one();
    let den = poch_q(&(&one + k1 * int(2)), n);
    if den.is_zero() {
        return Err(Error::Degenerate(format!("(1+2k1)_n vanishes for k1 = {k1}")));
    }
    Ok((sum, poch_q(&(&one + k1), n) / den))
}

/// Outcome of the squeeze comparison between two terminating sums.
#[derive(Clone, Debug, PartialEq)]
pub struct SqueezeReport {
    pub n: usize,
    /// `3F2(-n, -n, c; -n-a, -n-b; 1)`.
    pub upper_sum: Rational,
    /// `(1+a+b+c)_n / (1+a+b)_n`.
    pub middle: Rational,
    /// `3F2(-n, -n-1, c; -n-a, -n-b-1; 1)`.
    pub lower_sum: Rational,
    /// The middle term agreed with its `2F1` sum.
    pub middle_matches_sum: bool,
    /// The ordering predicted for the sign of `c` holds.
    pub holds: bool,
}

/// Checks that `(1+a+b+c)_n/(1+a+b)_n` lies between the two sums, with the
/// order set by the sign of `c`. Needs `0 < a < 1`, `-1 < b < 0`, `c > -1`.
pub fn squeeze_check(n: usize, a: &Rational, b: &Rational, c: &Rational) -> Result<SqueezeReport> {
    let zero = Rational::zero();
    let one = Rational::one();
    if !(a > &zero && a < &one && b > &-one.clone() && b < &zero && c > &-one.clone()) {
        return Err(Error::Region(format!(
            "squeeze needs 0<a<1, -1<b<0, c>-1; got a={a} b={b} c={c}"
        )));
    }
    let ni = int(n as i64);
    let mn = -ni.clone();
    let mn1 = &mn - &one;
    let la = &mn - a;
    let lb = &mn - b;
    let lb1 = &lb - &one;
    let s = terminating_3f2([&mn, &mn, c], [&la, &lb])?;
    let u = terminating_3f2([&mn, &mn1, c], [&la, &lb1])?;
    let ab = a + b;
    let (sum, closed) = chu_vandermonde(n, c, &(-&ni - &ab))?;
    let middle = poch_q(&(&one + &ab + c), n) / poch_q(&(&one + &ab), n);
    let holds = if c.is_positive() {
        u <= middle && middle <= s
    } else if c.is_negative() {
        s <= middle && middle <= u
    } else {
        s == middle && middle == u
    };
    Ok(SqueezeReport {
        n,
        middle_matches_sum: sum == closed && closed == middle,
        upper_sum: s,
        middle,
        lower_sum: u,
        holds,
    })
}
