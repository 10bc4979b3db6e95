//! Gauss 2F1 with certified truncation bounds, near and far from z = 1,
//! and the h functions that appear in the sector integrands.

use b2weight::hyper::{gauss_2f1, gauss_sum, h_func};

fn main() -> b2weight::Result<()> {
    let (a, b, c) = (0.3, -0.45, 1.2);
    for z in [0.1, 0.5, 0.9, 0.999] {
        let r = gauss_2f1(a, b, c, z, 1e-14)?;
        println!("2F1({a}, {b}; {c}; {z}) = {:.16} (bound {:.1e}, {} terms)", r.value, r.tail_bound, r.terms_used);
    }
    println!("value at z = 1 by Gauss: {:.16}", gauss_sum(a, b, c)?);

    for i in 1..=4 {
        let h = h_func(i, 0.5, 0.3, 0.1, 1e-15)?;
        println!("h{i}(0.5) at (0.3, 0.1) = {:.16}", h.value);
    }
    Ok(())
}
