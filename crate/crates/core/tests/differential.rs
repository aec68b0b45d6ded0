mod common;

use common::{diff_word, sym};
use operated_groups::differential::{
    d, eval_diff, inverse_power_formula, product, product_formula, shift_endo, DiffTarget, FreeDifferential,
};
use operated_groups::finite::{catalog, enumerate_operators, FiniteOperatedGroup, IdentityKind, DEFAULT_BUDGET};
use operated_groups::{parse_diff_word, Assignment, DiffWord, Group};
use proptest::collection::vec;
use proptest::prelude::*;

fn targets() -> Vec<DiffTarget<FiniteOperatedGroup>> {
    catalog::fixtures()
        .into_iter()
        .flat_map(|g| {
            enumerate_operators(&g, &IdentityKind::DiffPlus1, DEFAULT_BUDGET)
                .unwrap()
                .into_iter()
                .map(move |p| DiffTarget::validate(FiniteOperatedGroup::new(g.clone(), p)).unwrap())
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn weight_one_law(g in diff_word(3, 6), h in diff_word(3, 6)) {
        prop_assert_eq!(d(&g.mul(&h)), d(&g).mul(&g).mul(&d(&h)).mul(&g.inv()));
    }

    #[test]
    fn product_lemma(gs in vec(diff_word(2, 4), 2..=5)) {
        prop_assert_eq!(d(&product(&gs)), product_formula(&gs).unwrap());
    }

    #[test]
    fn inverse_power_lemma(g in diff_word(2, 4), n in 1u32..=4) {
        prop_assert_eq!(d(&g.inv().pow(n)), inverse_power_formula(&g, n).unwrap());
    }

    #[test]
    fn shift_is_an_endomorphism(g in diff_word(3, 6), h in diff_word(3, 6)) {
        prop_assert_eq!(shift_endo(&g.mul(&h)), shift_endo(&g).mul(&shift_endo(&h)));
        prop_assert_eq!(shift_endo(&g.inv()), shift_endo(&g).inv());
    }

    #[test]
    fn free_object_law(g in diff_word(2, 5), h in diff_word(2, 5)) {
        let t = DiffTarget::attested(FreeDifferential);
        let f: Assignment<DiffWord> = ["x", "y", "z"].iter().map(|s| (sym(s), DiffWord::gen(sym(s)))).collect();
        prop_assert_eq!(eval_diff(&g, &f, &t).unwrap(), g.clone());
        prop_assert_eq!(FreeDifferential.mul(&g, &h), g.mul(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn evaluator_is_a_differential_homomorphism(g in diff_word(3, 5), h in diff_word(3, 5), a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        for t in targets() {
            let grp = t.inner();
            let n = grp.group().order();
            let f: Assignment<usize> = [(sym("x"), a % n), (sym("y"), b % n), (sym("z"), c % n)].into_iter().collect();
            let ev = |w: &DiffWord| eval_diff(w, &f, &t).unwrap();
            prop_assert_eq!(ev(&g.mul(&h)), grp.mul(&ev(&g), &ev(&h)));
            prop_assert_eq!(ev(&d(&g)), operated_groups::Operated::op(grp, &ev(&g)));
        }
    }
}

#[test]
fn identity_is_fixed() {
    assert!(d(&DiffWord::identity()).is_identity());
}

#[test]
fn shift_breaks_the_law() {
    let (g, h) = (parse_diff_word("x").unwrap(), parse_diff_word("y").unwrap());
    let lhs = shift_endo(&g.mul(&h));
    let rhs = shift_endo(&g).mul(&g).mul(&shift_endo(&h)).mul(&g.inv());
    assert_ne!(lhs, rhs);
}
