use grassk::charring::{
    all_symbols, character_of, coordinate_blocks, formal_dimension, is_weyl_invariant, mu_star,
    reduce_theta, u, GroupTag, Symbol, WeylType,
};
use grassk::poly::{Monomial, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn spin_torus_monomial(m: usize) -> impl Strategy<Value = ZPoly> {
    (
        any::<bool>(),
        prop::collection::vec(-3i32..=3, m),
        -4i64..=4,
    )
        .prop_map(move |(odd, halves, c)| {
            let shift = i32::from(odd);
            let mono = Monomial::from_pairs((1..=m).map(|j| (u(j), 2 * halves[j - 1] + shift)));
            ZPoly::term(mono, BigInt::from(if c == 0 { 1 } else { c }))
        })
}

fn exact_case() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![
        (8usize, 3usize),
        (12, 3),
        (12, 5),
        (16, 3),
        (16, 5),
        (16, 7),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn mu_star_is_multiplicative(
        ((n, k), x, y) in exact_case().prop_flat_map(|(n, k)| (Just((n, k)), spin_torus_monomial(n / 2), spin_torus_monomial(n / 2)))
    ) {
        let lhs = reduce_theta(&mu_star(&(&x * &y), n, k).unwrap());
        let rhs = reduce_theta(&(mu_star(&x, n, k).unwrap() * mu_star(&y, n, k).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mu_star_is_additive(
        ((n, k), x, y) in exact_case().prop_flat_map(|(n, k)| (Just((n, k)), spin_torus_monomial(n / 2), spin_torus_monomial(n / 2)))
    ) {
        let lhs = mu_star(&(&x + &y), n, k).unwrap();
        let rhs = mu_star(&x, n, k).unwrap() + mu_star(&y, n, k).unwrap();
        prop_assert_eq!(reduce_theta(&lhs), reduce_theta(&rhs));
    }
}

fn groups_up_to(max_m: usize) -> Vec<GroupTag> {
    let mut out = Vec::new();
    for n in 2..=2 * max_m {
        out.push(GroupTag::Spin(n));
        out.push(GroupTag::SO(n));
        for k in (1..n).step_by(2) {
            if (n - k) % 2 == 1 && 2 * k <= n {
                out.push(GroupTag::H0 { n, k });
                if n % 4 == 0 {
                    out.push(GroupTag::H { n, k });
                }
            }
        }
    }
    out
}

#[test]
fn dimensions_match_for_all_m_up_to_6() {
    for g in groups_up_to(6) {
        for sym in all_symbols(g) {
            let r = character_of(sym, g).unwrap();
            if let Some(d) = formal_dimension(sym, g) {
                assert_eq!(r.dimension(), d, "{sym:?} of {g}");
            }
        }
    }
}

#[test]
fn characters_are_weyl_invariant() {
    for g in groups_up_to(5) {
        for sym in all_symbols(g) {
            let r = character_of(sym, g).unwrap();
            let only_even = matches!(
                sym,
                Symbol::HalfSpinPlus
                    | Symbol::HalfSpinMinus
                    | Symbol::HodgePlus
                    | Symbol::HodgeMinus
            );
            for (coords, kind) in coordinate_blocks(g) {
                let kind = if only_even { WeylType::D } else { kind };
                assert!(
                    is_weyl_invariant(&r.character, &coords, kind),
                    "{sym:?} of {g}"
                );
            }
        }
    }
}

#[test]
fn half_spins_break_the_full_weyl_group() {
    for m in 2..=5 {
        let g = GroupTag::Spin(2 * m);
        let d = character_of(Symbol::HalfSpinPlus, g).unwrap();
        let (coords, _) = coordinate_blocks(g).remove(0);
        assert!(!is_weyl_invariant(&d.character, &coords, WeylType::B));
    }
}

#[test]
fn hodge_halves_are_integral_and_sum_to_lambda_s() {
    for s in 1..=6 {
        let g = GroupTag::SO(2 * s);
        let plus = character_of(Symbol::HodgePlus, g).unwrap().character;
        let minus = character_of(Symbol::HodgeMinus, g).unwrap().character;
        let ls = character_of(Symbol::Ext(s), g).unwrap().character;
        assert_eq!(plus + minus, ls);
    }
}
