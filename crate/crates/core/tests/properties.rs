use dicritique::algebra::{gcd_poly, parse_poly, resultant, Field, MultiPoly};
use dicritique::pencil::{analyze, make_pencil};
use proptest::prelude::*;

/// Terms `(i, j, c)` with `i + j <= deg`, coefficients in `-5..=5`.
fn terms(deg: u32) -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    prop::collection::vec((0..=deg, 0..=deg, -5i64..=5), 1..7)
        .prop_map(move |ts| ts.into_iter().filter(|(i, j, _)| i + j <= deg).collect())
}

fn build(k: &Field, ts: &[(u32, u32, i64)]) -> MultiPoly {
    MultiPoly::from_terms(k, &["x", "y"], ts.iter().map(|&(i, j, c)| (vec![i, j], k.from_i64(c))).collect())
}

fn nonzero(deg: u32) -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    terms(deg).prop_filter("nonzero", |ts| !build(&Field::rationals(), ts).is_zero())
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::rationals()), Just(Field::prime(7).unwrap()), Just(Field::finite(3, 2).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_then_parsing_is_identity(k in field_strategy(), ts in terms(5)) {
        let p = build(&k, &ts);
        let back = parse_poly(&p.to_string(), &k, &["x", "y"]).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn order_is_additive(k in field_strategy(), a in nonzero(4), b in nonzero(4)) {
        let (f, g) = (build(&k, &a), build(&k, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = f.mul(&g);
        prop_assert_eq!(fg.order_at_origin().unwrap(), f.order_at_origin().unwrap() + g.order_at_origin().unwrap());
    }

    #[test]
    fn initial_form_is_multiplicative(k in field_strategy(), a in nonzero(4), b in nonzero(4)) {
        let (f, g) = (build(&k, &a), build(&k, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (m, n) = (f.order_at_origin().unwrap(), g.order_at_origin().unwrap());
        let lhs = f.mul(&g).initial_form(m + n).unwrap();
        prop_assert_eq!(lhs, f.initial_form(m).unwrap().mul(&g.initial_form(n).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Half the pairs share a planted factor `h` of positive degree in `y`.
    #[test]
    fn resultant_vanishes_iff_common_factor_in_y(
        a in nonzero(2),
        b in nonzero(2),
        h in nonzero(2),
        plant in any::<bool>(),
    ) {
        let q = Field::rationals();
        let y = MultiPoly::var(&q, &["x", "y"], 1);
        let (mut f, mut g) = (build(&q, &a).add(&y), build(&q, &b).add(&y.pow(2)));
        let h = build(&q, &h).add(&y);
        if plant {
            f = f.mul(&h);
            g = g.mul(&h);
        }
        prop_assume!(!f.is_zero() && f.degree_in(1) >= 1 && g.degree_in(1) >= 1);
        prop_assume!(f.total_degree() <= 4 && g.total_degree() <= 4);
        let r = resultant(&f, &g, 1).unwrap();
        let shared_in_y = gcd_poly(&f, &g).unwrap().degree_in(1) > 0;
        prop_assert_eq!(r.is_zero(), shared_in_y);
        if plant {
            prop_assert!(r.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Over a finite field the local intersection numbers at all base points
    /// add up to the product of the degrees of the homogenized generators.
    #[test]
    fn base_point_intersections_add_up_to_bezout(a in nonzero(3), b in nonzero(3), p in prop::sample::select(vec![5u64, 7])) {
        let k = Field::prime(p).unwrap();
        let (f, g) = (build(&k, &a), build(&k, &b));
        prop_assume!(!f.is_zero() && !g.is_zero() && !(f.is_constant() && g.is_constant()));
        let Ok(pencil) = make_pencil(&f, &g) else { return Ok(()) };
        let r = analyze(&pencil, 64).unwrap();
        let total: u32 = r.trees.iter().flat_map(|t| t.nodes.iter().filter(|n| !n.forced).map(|n| n.s_f * n.s_g)).sum();
        prop_assert_eq!(total, pencil.degree * pencil.degree);
        for d in &r.dicriticals {
            prop_assert_eq!(d.v_f, d.v_g);
        }
        for i in 0..r.base_points.len() {
            prop_assert!(r.dicriticals_at(i).count() >= 1);
        }
    }
}
