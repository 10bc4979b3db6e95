//! Exact arithmetic in Q[k0, k1]: building, multiplying and evaluating.
//!
//! ```bash
//! cargo run --example param_ring
//! ```

use b2weight::ring::{parse_rational, poch, rat, ParamPoly};

fn main() -> b2weight::Result<()> {
    let k0 = ParamPoly::k0();
    let k1 = ParamPoly::k1();
    let p = &(&k0 + &k1) * &(&k0 - &k1);
    println!("(k0 + k1)(k0 - k1) = {p}");

    // (1/2 + k1)_3 as a polynomial.
    let a = &ParamPoly::constant(rat(1, 2)) + &k1;
    let q = poch(&a, 3);
    println!("(1/2 + k1)_3 = {q}");

    let x = parse_rational("0.3")?;
    let y = parse_rational("1/10")?;
    println!("at (k0, k1) = ({x}, {y}): {} and {}", p.eval(&x, &y), q.eval(&x, &y));
    Ok(())
}
