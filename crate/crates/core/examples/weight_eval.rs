//! K(x) along the sector, its eigenvalues, and the constant determinant.

use std::f64::consts::FRAC_PI_4;

use b2weight::weight::{c_norm, det_k_closed, eval_k, ParamPoint};

fn main() -> b2weight::Result<()> {
    let p = ParamPoint::new(0.3, 0.1);
    println!("c(k0, k1) = {:.16}", c_norm(&p)?);
    println!("det K should be {:.16}", det_k_closed(&p));
    for i in 1..8 {
        let theta = FRAC_PI_4 * i as f64 / 8.0;
        let ev = eval_k(theta, &p)?;
        let [lo, hi] = ev.eigenvalues();
        println!(
            "theta = {theta:.4}  K = [{:.6} {:.6}; {:.6}]  eig = ({lo:.3e}, {hi:.3e})  det = {:.16}",
            ev.k[0][0],
            ev.k[0][1],
            ev.k[1][1],
            ev.det_k()
        );
    }
    Ok(())
}
