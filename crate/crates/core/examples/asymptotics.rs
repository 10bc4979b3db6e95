//! Large-n behaviour: the normalized 3F2 sums tend to 1, slowly when k1 is
//! close to -1/2.

use b2weight::hyper::asym_f_check;
use b2weight::quad::asym_integral_check;

fn main() -> b2weight::Result<()> {
    for (k0, k1) in [(0.3, 0.1), (0.0, 0.2), (0.1, -0.3)] {
        for n in [20, 200, 2000] {
            let (a, b) = asym_f_check(n, k0, k1)?;
            println!("({k0}, {k1}) n = {n:>4}: {a:.6} {b:.6}");
        }
    }
    for n in [50, 200, 800] {
        let (v, a) = asym_integral_check(0.6, -2.0, -0.6, n, None)?;
        println!("model integral n = {n}: ratio to asymptote {:.6}", v / a);
    }
    Ok(())
}
