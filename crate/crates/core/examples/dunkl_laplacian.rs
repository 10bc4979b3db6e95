//! The Dunkl Laplacian on vector-valued polynomials.
//!
//! Applies it to `phi^2 p12` and shows the result is a combination of
//! `phi p14` and `|x|^2 p12`.

use b2weight::dunkl::{delphi_residual, laplacian, phi_p12, VPoly, XPoly};

fn main() -> b2weight::Result<()> {
    let f = phi_p12(1);
    println!("f        = {f}");
    let lf = laplacian(&f)?;
    println!("Delta f  = {lf}");

    let r2_p12 = VPoly::p12().mul_scalar(&XPoly::norm_sq());
    println!("|x|^2 p12 = {r2_p12}");
    for n in 0..=3 {
        println!("n = {n}: residual of the phi^(2n) p12 identity is {}", delphi_residual(n)?);
    }
    Ok(())
}
