use proptest::prelude::*;

use b2weight::dunkl::{laplacian, product_rule_residual, xsq_rule_residual, GroupElement, VPoly, XPoly};
use b2weight::ring::{int, poch, rat, ParamPoly, Rational};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((small_rat(), 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
        let mut p = ParamPoly::zero();
        for (c, a, b) in terms {
            p.add_term((a, b), c);
        }
        p
    })
}

fn homogeneous_xpoly(degree: u32) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(param_poly(), (degree + 1) as usize).prop_map(move |cs| {
        let mut p = XPoly::zero();
        for (a, c) in cs.into_iter().enumerate() {
            p.add_term((a as u32, degree - a as u32), c);
        }
        p
    })
}

fn vpoly() -> impl Strategy<Value = VPoly> {
    (0u32..4).prop_flat_map(|d| (homogeneous_xpoly(d), homogeneous_xpoly(d)).prop_map(|(a, b)| VPoly::new(a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(a in param_poly(), b in param_poly(), c in param_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn pochhammer_splits(a in param_poly(), m in 0usize..4, n in 0usize..4) {
        let shifted = &a + &ParamPoly::constant(int(m as i64));
        prop_assert_eq!(poch(&a, m + n), &poch(&a, m) * &poch(&shifted, n));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in param_poly(), b in param_poly(), x in small_rat(), y in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
        prop_assert_eq!((&a + &b).eval(&x, &y), a.eval(&x, &y) + b.eval(&x, &y));
    }

    #[test]
    fn laplacian_commutes_with_the_group(f in vpoly(), w in 0usize..8) {
        let w: GroupElement = GroupElement::all()[w];
        prop_assert_eq!(laplacian(&f.group_act(&w)).unwrap(), laplacian(&f).unwrap().group_act(&w));
    }

    #[test]
    fn xsq_rule(g in vpoly()) {
        prop_assert!(xsq_rule_residual(&g).unwrap().is_zero());
    }

    #[test]
    fn product_rule_on_random_g(g in vpoly(), which in 0usize..3) {
        let f = match which {
            0 => XPoly::norm_sq(),
            1 => XPoly::phi().pow(2),
            _ => (&XPoly::x1() * &XPoly::x2()).pow(2),
        };
        prop_assert!(product_rule_residual(&f, &g).unwrap().is_zero());
    }
}
