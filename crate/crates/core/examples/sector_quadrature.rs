//! Sector inner products by quadrature against their closed forms, which
//! checks the normalization constant numerically.

use b2weight::hyper::s_inner_closed;
use b2weight::quad::{sector_inner_numeric_with, Route};
use b2weight::weight::ParamPoint;
use b2weight::Kind;

fn main() -> b2weight::Result<()> {
    let (k0, k1) = (-0.2, 0.25);
    let p = ParamPoint::new(k0, k1);
    for n in 0..=4 {
        for kind in Kind::ALL {
            let exact = s_inner_closed(n, kind).eval_f64(k0, k1);
            let f = sector_inner_numeric_with(n, kind, &p, 1e-12, Route::Factored)?;
            let d = sector_inner_numeric_with(n, kind, &p, 1e-12, Route::Direct)?;
            println!(
                "n={n} {}: exact {exact:+.15}  factored {:+.1e}  direct {:+.1e}  ({} / {} nodes)",
                kind.name(),
                f.value / exact - 1.0,
                d.value / exact - 1.0,
                f.nodes,
                d.nodes
            );
        }
    }
    Ok(())
}
