use grassk::poly::{Monomial, Polynomial, Var, ZPoly};
use grassk::zgb::{
    quotient_group_structure, strong_groebner, Budget, IdealPresentation, MonomialOrder, ZgbError,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zp(s: &str) -> ZPoly {
    s.parse().unwrap()
}

fn curated() -> Vec<Vec<ZPoly>> {
    [
        vec!["t^2 - 1", "8*t - 8"],
        vec!["2*gx", "3*gx"],
        vec!["gx^2", "gx*gy", "gy^2", "2*gx"],
        vec!["gx^2 - 3*gy", "gy^2 - 2*gx", "6*gx*gy"],
        vec!["4*gx^2 + 2*gy", "6*gy^2 - 3", "gx^3 - gx", "gy^3"],
        vec![
            "t^2 - 1",
            "l1 + m1 - 8*t",
            "l1*m1 + m2 + m1 - 28",
            "l1*m2 + m2 + l1*m1 - 56*t",
            "4*t - 4",
        ],
    ]
    .iter()
    .map(|g| g.iter().map(|s| zp(s)).collect())
    .collect()
}

fn random_element(gens: &[ZPoly], vars: &[Var], rng: &mut ChaCha8Rng) -> ZPoly {
    let mut f = ZPoly::zero();
    for g in gens {
        let mut mult = ZPoly::zero();
        for _ in 0..3 {
            let m = Monomial::from_pairs(vars.iter().map(|&v| (v, rng.gen_range(0..3))));
            mult.add_term(m, &BigInt::from(rng.gen_range(-7..=7)));
        }
        f = f + &mult * g;
    }
    f
}

#[test]
fn soundness_on_curated_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for gens in curated() {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let ideal = IdealPresentation::from_generators(gens.clone()).with_order(order);
            let gb = strong_groebner(&ideal, Budget::unlimited()).unwrap();
            for g in &gens {
                assert!(gb.normal_form(g).unwrap().is_zero(), "{g} in {gens:?}");
            }
            for _ in 0..25 {
                let f = random_element(&gens, &ideal.variables, &mut rng);
                assert!(gb.normal_form(&f).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn confluence_under_shuffled_reduction_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for gens in curated() {
        let ideal = IdealPresentation::from_generators(gens.clone());
        let gb = strong_groebner(&ideal, Budget::unlimited()).unwrap();
        for _ in 0..20 {
            let mut f = ZPoly::zero();
            for _ in 0..5 {
                let m =
                    Monomial::from_pairs(ideal.variables.iter().map(|&v| (v, rng.gen_range(0..4))));
                f.add_term(m, &BigInt::from(rng.gen_range(-30..=30)));
            }
            let nf = gb.normal_form(&f).unwrap();
            let shifted = &f + &random_element(&gens, &ideal.variables, &mut rng);
            let mut perm: Vec<usize> = (0..gb.len()).collect();
            for _ in 0..5 {
                perm.shuffle(&mut rng);
                let a = gb.normal_form_permuted(&f, &perm).unwrap();
                let b = gb.normal_form_permuted(&shifted, &perm).unwrap();
                assert_eq!(a.to_string(), nf.to_string());
                assert_eq!(b.to_string(), nf.to_string());
            }
            assert_eq!(gb.normal_form(&nf).unwrap(), nf);
        }
    }
}

#[test]
fn quotient_group_is_order_and_permutation_invariant() {
    for gens in curated() {
        let base = IdealPresentation::from_generators(gens.clone());
        let reference = match strong_groebner(&base, Budget::unlimited())
            .map(|g| quotient_group_structure(&g))
        {
            Ok(Ok(q)) => q.group,
            _ => continue,
        };
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let mut rev = gens.clone();
            rev.reverse();
            let mut vars = base.variables.clone();
            vars.reverse();
            for (g, v) in [(gens.clone(), base.variables.clone()), (rev, vars)] {
                let ideal = IdealPresentation::new(v, g).with_order(order);
                let gb = strong_groebner(&ideal, Budget::unlimited()).unwrap();
                assert_eq!(quotient_group_structure(&gb).unwrap().group, reference);
            }
        }
    }
}

fn small_poly() -> impl Strategy<Value = ZPoly> {
    proptest::collection::vec((-6i64..=6, 0i32..3, 0i32..3), 1..4).prop_map(|ts| {
        Polynomial::from_terms(ts.into_iter().map(|(c, a, b)| {
            (
                Monomial::from_pairs([(Var::new("rx"), a), (Var::new("ry"), b)]),
                BigInt::from(c),
            )
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn random_ideals_sound_and_confluent(a in small_poly(), b in small_poly(), seed in 0u64..1000) {
        // pure powers keep the quotient finite
        let gens = vec![a, b, zp("rx^3 - 2"), zp("ry^3 + rx")];
        let ideal = IdealPresentation::new(vec![Var::new("rx"), Var::new("ry")], gens.clone());
        let gb = match strong_groebner(&ideal, Budget { max_steps: Some(200_000), time_limit: None }) {
            Ok(gb) => gb,
            Err(ZgbError::BudgetExceeded { .. }) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..5 {
            let f = random_element(&gens, &ideal.variables, &mut rng);
            prop_assert!(gb.normal_form(&f).unwrap().is_zero());
        }
        let mut perm: Vec<usize> = (0..gb.len()).collect();
        perm.shuffle(&mut rng);
        let f = zp("rx^2*ry^2 + 5*rx*ry - 3");
        prop_assert_eq!(gb.normal_form_permuted(&f, &perm).unwrap(), gb.normal_form(&f).unwrap());
        let q = quotient_group_structure(&gb).unwrap();
        prop_assert!(q.generator_count() <= 9);
    }
}
