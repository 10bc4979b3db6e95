use nalgebra::{DMatrix, SymmetricEigen};

use super::QuadResult;
use crate::error::{Error, Result};
use crate::hyper::beta_fn;

/// Largest rule tried by [`singular_integral`].
pub const MAX_JACOBI_NODES: usize = 512;

/// Nodes and weights of the `n`-point Gauss rule on `[0, 1]` for the
/// weight `v^alpha (1 - v)^beta` (Golub-Welsch).
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_exponents(alpha, beta)?;
    if n == 0 {
        return Err(Error::Domain("a quadrature rule needs at least one node".into()));
    }
    // Jacobi polynomials on [-1, 1] for (1 - x)^a (1 + x)^b, with x = 2v - 1.
    let (a, b) = (beta, alpha);
    let ab = a + b;
    let mut j = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        j[(k, k)] = if k == 0 {
            (b - a) / (ab + 2.0)
        } else {
            (b * b - a * a) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
        if k + 1 < n {
            let m = kf + 1.0;
            let s = 2.0 * m + ab;
            let off2 = if k == 0 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
            } else {
                4.0 * m * (m + a) * (m + b) * (m + ab) / (s * s * (s + 1.0) * (s - 1.0))
            };
            let off = off2.sqrt();
            j[(k, k + 1)] = off;
            j[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::new(j);
    let mu0 = beta_fn(alpha + 1.0, beta + 1.0)?;
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            ((eig.eigenvalues[i] + 1.0) / 2.0, mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(pairs.into_iter().unzip())
}

fn check_exponents(alpha: f64, beta: f64) -> Result<()> {
    if alpha > -1.0 && beta > -1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "endpoint exponents must exceed -1, got alpha={alpha} beta={beta}"
        )))
    }
}

/// `int_0^1 v^alpha (1-v)^beta smooth(v) dv` by Gauss-Jacobi rules of
/// doubling size, stopping when two consecutive rules agree within `tol`.
pub fn singular_integral(
    alpha: f64,
    beta: f64,
    smooth: impl Fn(f64) -> f64,
    tol: f64,
) -> Result<QuadResult> {
    check_exponents(alpha, beta)?;
    let apply = |n: usize| -> Result<f64> {
        let (x, w) = gauss_jacobi(n, alpha, beta)?;
        Ok(x.iter().zip(&w).map(|(xi, wi)| wi * smooth(*xi)).sum())
    };
    let mut n = 8;
    let mut prev = apply(n)?;
    while n < MAX_JACOBI_NODES {
        n *= 2;
        let cur = apply(n)?;
        let err = (cur - prev).abs();
        if err <= tol {
            return Ok(QuadResult { value: cur, error_estimate: err, nodes: n });
        }
        prev = cur;
    }
    Err(Error::TolUnreachable {
        tol,
        reason: format!("Gauss-Jacobi did not settle within {MAX_JACOBI_NODES} nodes"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::gamma;

    #[test]
    fn weights_sum_to_beta_function() {
        for (a, b) in [(0.0, 0.0), (-0.5, -0.5), (0.3, -0.4), (2.5, 40.0)] {
            let (_, w) = gauss_jacobi(12, a, b).unwrap();
            let mass = gamma(a + 1.0).unwrap() * gamma(b + 1.0).unwrap() / gamma(a + b + 2.0).unwrap();
            assert!((w.iter().sum::<f64>() - mass).abs() < 1e-14 * mass.max(1.0));
        }
    }

    #[test]
    fn legendre_two_point() {
        let (x, w) = gauss_jacobi(2, 0.0, 0.0).unwrap();
        let d = 0.5 / 3f64.sqrt();
        assert!((x[0] - (0.5 - d)).abs() < 1e-15 && (x[1] - (0.5 + d)).abs() < 1e-15);
        assert!((w[0] - 0.5).abs() < 1e-15 && (w[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn exact_for_polynomials() {
        // int v^a (1-v)^b v^3 dv = B(a+4, b+1)
        let (a, b) = (-0.7, 0.25);
        let r = singular_integral(a, b, |v| v * v * v, 1e-14).unwrap();
        let exact = gamma(a + 4.0).unwrap() * gamma(b + 1.0).unwrap() / gamma(a + b + 5.0).unwrap();
        assert!((r.value - exact).abs() < 1e-14);
    }

    #[test]
    fn bad_exponent() {
        assert!(matches!(singular_integral(-1.0, 0.0, |_| 1.0, 1e-10), Err(Error::Domain(_))));
    }
}
