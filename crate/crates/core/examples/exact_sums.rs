//! Terminating sums in exact arithmetic: the 3F2 forms of the inner
//! products, the squeeze between them and Chu-Vandermonde.

use b2weight::hyper::{chu_vandermonde_k1, f_prefactors, f_values, s_inner_closed, squeeze_check};
use b2weight::ring::rat;
use b2weight::Kind;

fn main() -> b2weight::Result<()> {
    let (k0, k1) = (rat(3, 10), rat(1, 10));
    for n in 0..=4 {
        let (f1, f2) = f_values(n, &k0, &k1)?;
        let (p1, p2) = f_prefactors(n, &k0, &k1);
        let ok = p1 * &f1 == s_inner_closed(n, Kind::P12).eval(&k0, &k1)
            && p2 * &f2 == s_inner_closed(n, Kind::P14).eval(&k0, &k1);
        println!("n = {n}: f1 = {f1}, f2 = {f2}, match closed forms: {ok}");
    }

    // a = 1/2 + k1 + k0, b = -1/2 + k1 - k0, c = -k1.
    let (a, b, c) = (rat(9, 10), rat(-7, 10), rat(-1, 10));
    let r = squeeze_check(10, &a, &b, &c)?;
    println!("squeeze at n = 10: {} <= {} <= {}  holds: {}", r.lower_sum, r.middle, r.upper_sum, r.holds);

    let (s, closed) = chu_vandermonde_k1(12, &k1)?;
    println!("Chu-Vandermonde n = 12: {s} = {closed}");
    Ok(())
}
