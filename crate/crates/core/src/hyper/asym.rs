//! Large-`n` behaviour of the terminating sums.

use crate::error::{Error, Result};

use super::gamma::{gamma, ln_gamma, rgamma};

/// `(a)_n / (b)_n` as a running product.
pub fn stirling_ratio(a: f64, b: f64, n: usize) -> Result<f64> {
    let mut r = 1.0;
    for i in 0..n {
        let d = b + i as f64;
        if d == 0.0 {
            return Err(Error::Pole(b));
        }
        r *= (a + i as f64) / d;
    }
    Ok(r)
}

/// The leading asymptote `Gamma(b)/Gamma(a) n^(a-b)` of [`stirling_ratio`].
pub fn stirling_asymptote(a: f64, b: f64, n: usize) -> Result<f64> {
    Ok(gamma(b)? * rgamma(a) * (n as f64).powf(a - b))
}

/// `3F2(-n, u2, -k1; l1, l2; 1)` in floating point. Terms are summed as
/// ratios so that no factorial is ever formed.
fn f_sum_f64(n: usize, u2: f64, k1: f64, l1: f64, l2: f64) -> Result<f64> {
    let nf = n as f64;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..n {
        let jf = j as f64;
        let den = (jf + 1.0) * (l1 + jf) * (l2 + jf);
        if den == 0.0 {
            return Err(Error::Degenerate(format!("lower parameter hits zero at step {j}")));
        }
        term *= (-nf + jf) * (u2 + jf) * (-k1 + jf) / den;
        sum += term;
    }
    Ok(sum)
}

/// `(f1(n), f2(n))` in floating point, for `|k0 +- k1| < 1/2`.
pub fn f_values_f64(n: usize, k0: f64, k1: f64) -> Result<(f64, f64)> {
    check_pd(k0, k1)?;
    let nf = n as f64;
    let l_plus = -nf - 0.5 - k1 - k0;
    let f1 = f_sum_f64(n, -nf, k1, l_plus, -nf + 0.5 - k1 + k0)?;
    let f2 = f_sum_f64(n, -nf - 1.0, k1, l_plus, -nf - 0.5 - k1 + k0)?;
    Ok((f1, f2))
}

fn check_pd(k0: f64, k1: f64) -> Result<()> {
    if (k0 + k1).abs() < 0.5 && (k0 - k1).abs() < 0.5 {
        Ok(())
    } else {
        Err(Error::Region(format!(
            "need |k0 + k1| < 1/2 and |k0 - k1| < 1/2, got k0={k0} k1={k1}"
        )))
    }
}

/// `f_i(n) n^k1 Gamma(1+k1) / Gamma(1+2k1)` for both sums; each tends to 1.
pub fn asym_f_check(n: usize, k0: f64, k1: f64) -> Result<(f64, f64)> {
    let (f1, f2) = f_values_f64(n, k0, k1)?;
    let norm = ((n as f64).ln() * k1 + ln_gamma(1.0 + k1)? - ln_gamma(1.0 + 2.0 * k1)?).exp();
    Ok((f1 * norm, f2 * norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::sums::f_values;
    use crate::ring::{rat, to_f64};

    #[test]
    fn ratio_approaches_asymptote() {
        let (a, b) = (1.1, 1.2);
        let mut prev = f64::INFINITY;
        for n in [10, 100, 1000, 10000] {
            let err = (stirling_ratio(a, b, n).unwrap() / stirling_asymptote(a, b, n).unwrap()
                - 1.0)
                .abs();
            assert!(err < prev);
            prev = err;
        }
        assert!(prev < 1e-5);
    }

    #[test]
    fn ratio_pole() {
        assert_eq!(stirling_ratio(0.5, -2.0, 5), Err(Error::Pole(-2.0)));
    }

    #[test]
    fn float_sums_match_exact() {
        let (k0, k1) = (rat(3, 10), rat(1, 10));
        for n in [0, 1, 5, 12] {
            let (e1, e2) = f_values(n, &k0, &k1).unwrap();
            let (g1, g2) = f_values_f64(n, 0.3, 0.1).unwrap();
            assert!((g1 - to_f64(&e1)).abs() < 1e-13 * to_f64(&e1).abs());
            assert!((g2 - to_f64(&e2)).abs() < 1e-13 * to_f64(&e2).abs());
        }
    }

    #[test]
    fn normalized_sums_tend_to_one() {
        for (k0, k1) in [(0.3, 0.1), (-0.2, 0.25), (0.2, -0.1)] {
            let (a, b) = asym_f_check(2000, k0, k1).unwrap();
            assert!((a - 1.0).abs() < 0.01 && (b - 1.0).abs() < 0.01, "{k0} {k1}: {a} {b}");
        }
    }

    #[test]
    fn slow_but_monotone_for_negative_k1() {
        // The correction decays slowly as k1 approaches -1/2.
        let mut prev = (f64::INFINITY, f64::INFINITY);
        for n in [200, 800, 3200] {
            let (a, b) = asym_f_check(n, 0.1, -0.3).unwrap();
            let err = ((a - 1.0).abs(), (b - 1.0).abs());
            assert!(err.0 < prev.0 && err.1 < prev.1);
            prev = err;
        }
    }

    #[test]
    fn region_enforced() {
        assert!(matches!(asym_f_check(10, 0.4, 0.2), Err(Error::Region(_))));
    }
}
