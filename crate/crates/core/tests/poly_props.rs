use std::collections::HashMap;

use grassk::poly::{
    count_tableaux, elementary_symmetric, newton_convert, schur_polynomial, Monomial,
    NewtonDirection, Partition, Polynomial, Var, ZPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn zp(s: &str) -> ZPoly {
    s.parse().unwrap()
}

fn poly_strategy() -> impl Strategy<Value = ZPoly> {
    proptest::collection::vec((-9i64..=9, 0i32..3, 0i32..3, -2i32..3), 0..6).prop_map(|ts| {
        Polynomial::from_terms(ts.into_iter().map(|(c, a, b, d)| {
            let m = Monomial::from_pairs([
                (Var::new("pa"), a),
                (Var::new("pb"), b),
                (Var::new("pc"), d),
            ]);
            (m, BigInt::from(c))
        }))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_round_trip(a in poly_strategy()) {
        let back: ZPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn newton_round_trip(v in proptest::collection::vec((-50i64..=50, 1i64..=9), 1..8)) {
        let input: Vec<BigRational> = v.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
        let one = BigRational::one();
        let p = newton_convert(NewtonDirection::ElementaryToPower, &input, &one);
        let e = newton_convert(NewtonDirection::PowerToElementary, &p, &one);
        prop_assert_eq!(&e, &input);
        let e2 = newton_convert(NewtonDirection::PowerToElementary, &input, &one);
        prop_assert_eq!(newton_convert(NewtonDirection::ElementaryToPower, &e2, &one), input);
    }
}

#[test]
fn apply_hom_examples() {
    let (x, y, a) = (Var::new("hx"), Var::new("hy"), Var::new("ha"));
    let mut img = HashMap::new();
    img.insert(x, zp("ha^2"));
    img.insert(y, zp("-ha^2"));
    assert!(zp("hx + hy").apply_hom(&img).unwrap().is_zero());
    let mut img = HashMap::new();
    img.insert(x, zp("hx + 1"));
    assert_eq!(zp("hx^2").apply_hom(&img).unwrap(), zp("hx^2 + 2*hx + 1"));
    let (b, c) = (Var::new("hb"), Var::new("hc"));
    let xs: Vec<ZPoly> = [a, b, c].iter().map(|&v| ZPoly::var(v)).collect();
    let e2 = elementary_symmetric(&xs, 2).unwrap();
    let img: HashMap<Var, ZPoly> = [(a, zp("hb")), (b, zp("hb")), (c, zp("hc"))]
        .into_iter()
        .collect();
    assert_eq!(e2.apply_hom(&img).unwrap(), zp("hb^2 + 2*hb*hc"));
    assert!(zp("hx*hz").apply_hom(&img).is_err());
}

#[test]
fn laurent_substitution_needs_units() {
    let u = Var::new("lu");
    let mut img = HashMap::new();
    img.insert(u, zp("-lw^2"));
    assert_eq!(zp("lu^-1").apply_hom(&img).unwrap(), zp("-lw^-2"));
    img.insert(u, zp("lw + 1"));
    assert!(zp("lu^-1").apply_hom(&img).is_err());
}

#[test]
fn generating_function_of_elementary() {
    let t = ZPoly::named("gt");
    for n in 0..=5 {
        let xs: Vec<ZPoly> = (1..=n).map(|i| ZPoly::var(Var::indexed("gx", i))).collect();
        let lhs: ZPoly = (0..=n)
            .map(|j| elementary_symmetric(&xs, j).unwrap() * t.pow(j as u32))
            .sum();
        let rhs: ZPoly = xs.iter().map(|x| ZPoly::one() + &t * x).product();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn schur_at_ones_counts_tableaux() {
    for nv in 1..=4 {
        let vars: Vec<Var> = (1..=nv).map(|i| Var::indexed("cx", i)).collect();
        let ones: HashMap<Var, BigInt> = vars.iter().map(|&v| (v, BigInt::one())).collect();
        for size in 0..=6 {
            for lam in Partition::of(size) {
                let s = schur_polynomial(&lam, &vars);
                assert!(s.terms().all(|(_, c)| c.is_positive()));
                assert_eq!(
                    s.evaluate(&ones).unwrap(),
                    count_tableaux(&lam, nv),
                    "{lam}"
                );
            }
        }
    }
    // hook-content formula spot check: s_(2,1) in 3 variables has 8 tableaux
    assert_eq!(
        count_tableaux(&Partition::new(vec![2, 1]), 3),
        BigInt::from(8)
    );
    assert!(count_tableaux(&Partition::new(vec![1, 1, 1]), 2).is_zero());
}
