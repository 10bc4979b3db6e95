//! The sequences alpha_n, beta_n three ways: recurrence, closed form and
//! powers of the Dunkl Laplacian (small n only).

use b2weight::dunkl::{alpha_beta_via_laplacian, alpha_scale};
use b2weight::hyper::{alpha_beta_recurrence, alpha_closed};

fn main() -> b2weight::Result<()> {
    let seq = alpha_beta_recurrence(3);
    for n in 0..=3 {
        let (a_op, _) = alpha_beta_via_laplacian(n)?;
        let same = a_op == seq.alpha[n].scale(&alpha_scale(n)) && seq.alpha[n] == alpha_closed(n);
        println!("alpha_{n} = {}", seq.alpha[n]);
        println!("  three routes agree: {same}");
    }
    Ok(())
}
