use gvdkit_core::gvd::{family_fiber, family_ideal, initial_y_ideal};
use gvdkit_core::polyalg::{parse_ideal, rational, Grading, Ideal, Poly, Ring, TermOrder};
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::parse("x,y,z").unwrap()
}

/// Polynomials in three variables of degree ≤ 2 with small coefficients.
fn arb_poly() -> impl Strategy<Value = Poly> {
    let monos: Vec<Vec<u32>> = (0..3u32)
        .flat_map(|a| (0..3u32).flat_map(move |b| (0..3u32).map(move |c| vec![a, b, c])))
        .filter(|e| e.iter().sum::<u32>() <= 2)
        .collect();
    proptest::collection::vec((proptest::sample::select(monos), -2i64..=2), 1..=3)
        .prop_map(|terms| Poly::from_terms(3, terms.into_iter().map(|(e, c)| (e, rational(c)))))
}

fn arb_ideal() -> impl Strategy<Value = Ideal> {
    proptest::collection::vec(arb_poly(), 1..=2).prop_map(|gens| Ideal::new(ring(), gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn groebner_bases_generate_the_same_ideal(i in arb_ideal()) {
        let lex = Ideal::new(ring(), i.groebner(&TermOrder::Lex).unwrap()).unwrap();
        let grevlex = Ideal::new(ring(), i.groebner(&TermOrder::GrevLex).unwrap()).unwrap();
        prop_assert!(lex.equals(&grevlex).unwrap());
        for g in i.gens() {
            prop_assert!(lex.contains(g).unwrap());
        }
    }

    #[test]
    fn intersection_sits_between_product_and_factors(i in arb_ideal(), j in arb_ideal()) {
        let cap = i.intersection(&j).unwrap();
        prop_assert!(i.contains_ideal(&cap).unwrap());
        prop_assert!(j.contains_ideal(&cap).unwrap());
        prop_assert!(cap.contains_ideal(&i.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn colon_and_saturation(i in arb_ideal(), f in arb_poly()) {
        let col = i.colon(&f).unwrap();
        prop_assert!(col.contains_ideal(&i).unwrap());
        for g in col.gens() {
            prop_assert!(i.contains(&(g * &f)).unwrap());
        }
        let sat = i.saturation(&f).unwrap();
        prop_assert!(sat.contains_ideal(&col).unwrap());
        prop_assert!(sat.colon(&f).unwrap().equals(&sat).unwrap());
    }

    #[test]
    fn kpoly_does_not_depend_on_the_order(i in arb_ideal()) {
        let grading = Grading::natural(&i).unwrap();
        let a = i.kpoly(&TermOrder::GrevLex, &grading).unwrap();
        let b = i.kpoly(&TermOrder::Lex, &grading).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn family_fibers(i in arb_ideal(), y in 0usize..3) {
        let fam = family_ideal(&i, y, "t").unwrap();
        prop_assert!(family_fiber(&fam, 1).unwrap().equals(&i).unwrap());
        prop_assert!(family_fiber(&fam, 0).unwrap().equals(&initial_y_ideal(&i, y).unwrap()).unwrap());
    }
}

#[test]
fn dimension_of_a_twisted_cubic() {
    let r = Ring::parse("a,b,c,d").unwrap();
    let i = parse_ideal("a*c - b^2; b*d - c^2; a*d - b*c", &r).unwrap();
    assert_eq!(i.dimension().unwrap(), Some(2));
    let grading = Grading::new(vec![vec![1]; 4]).unwrap();
    let k = i.kpoly(&TermOrder::GrevLex, &grading).unwrap();
    assert_eq!(k.to_string_with(&["t".to_string()]), "1 - 3*t^2 + 2*t^3");
    let md = gvdkit_core::polyalg::multidegree(&i, &TermOrder::GrevLex, &vec![vec![1]; 4]).unwrap();
    assert_eq!(md.to_string_with(&["t".to_string()]), "3*t^2");
}
