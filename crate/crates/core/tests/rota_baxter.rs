mod common;

use common::{rb_targets, rb_word, sym};
use operated_groups::finite::FiniteOperatedGroup;
use operated_groups::rota_baxter::{
    ad_diamond, diamond, diamond_rewrite, eval_rb, is_rb_word, rb_inv, rb_op, RbTarget, RbWord,
};
use operated_groups::{parse_word, Assignment, Group, Operated};
use proptest::prelude::*;
use std::sync::OnceLock;

fn targets() -> &'static [RbTarget<FiniteOperatedGroup>] {
    static T: OnceLock<Vec<RbTarget<FiniteOperatedGroup>>> = OnceLock::new();
    T.get_or_init(rb_targets)
}

fn dia(u: &RbWord, v: &RbWord) -> RbWord {
    diamond(u, v).unwrap()
}

fn rb(s: &str) -> RbWord {
    RbWord::new(parse_word(s).unwrap()).unwrap()
}

fn assignment(n: usize, seed: usize) -> Assignment<usize> {
    [(sym("x"), seed % n), (sym("y"), (seed / 3 + 1) % n), (sym("z"), (seed / 7 + 2) % n)].into_iter().collect()
}

/// Equal images under every fixture target and a spread of assignments.
fn same_element(l: &RbWord, r: &RbWord) -> bool {
    targets().iter().all(|t| {
        let n = t.inner().group().order();
        (0..12).all(|s| {
            let f = assignment(n, s * 5 + 1);
            eval_rb(l, &f, t).unwrap() == eval_rb(r, &f, t).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure(u in rb_word(3, 4), v in rb_word(3, 4)) {
        prop_assert!(is_rb_word(dia(&u, &v).as_word()));
        prop_assert!(is_rb_word(rb_op(&u).as_word()));
        prop_assert!(is_rb_word(rb_inv(&u).as_word()));
    }

    #[test]
    fn identity_and_inverse(w in rb_word(3, 4)) {
        let one = RbWord::identity();
        prop_assert_eq!(dia(&w, &one), w.clone());
        prop_assert_eq!(dia(&one, &w), w.clone());
        prop_assert!(dia(&w, &rb_inv(&w)).is_identity());
        prop_assert!(dia(&rb_inv(&w), &w).is_identity());
    }

    #[test]
    fn rewriting_oracle_agrees(u in rb_word(3, 4), v in rb_word(3, 4)) {
        prop_assert_eq!(diamond_rewrite(&u, &v), dia(&u, &v));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluator_is_a_rota_baxter_homomorphism(u in rb_word(3, 4), v in rb_word(3, 4), seed in 0usize..1000) {
        let p = dia(&u, &v);
        for t in targets() {
            let g = t.inner();
            let f = assignment(g.group().order(), seed);
            let ev = |w: &RbWord| eval_rb(w, &f, t).unwrap();
            prop_assert_eq!(ev(&p), g.mul(&ev(&u), &ev(&v)));
            prop_assert_eq!(ev(&rb_op(&u)), g.op(&ev(&u)));
            prop_assert_eq!(ev(&rb_inv(&u)), g.inv(&ev(&u)));
        }
    }

    // The next three laws are checked on group elements: both sides are
    // compared through every fixture evaluation. Exact word equality is the
    // job of the acceptance suite.

    #[test]
    fn associative_up_to_evaluation(u in rb_word(3, 4), v in rb_word(3, 4), w in rb_word(3, 4)) {
        prop_assert!(same_element(&dia(&dia(&u, &v), &w), &dia(&u, &dia(&v, &w))));
    }

    #[test]
    fn rota_baxter_relation_up_to_evaluation(u in rb_word(3, 4), v in rb_word(3, 4)) {
        let bu = rb_op(&u);
        let lhs = dia(&bu, &rb_op(&v));
        let rhs = rb_op(&dia(&u, &dia(&bu, &dia(&v, &rb_inv(&bu)))));
        prop_assert!(same_element(&lhs, &rhs));
    }

    #[test]
    fn twist_is_conjugation_up_to_evaluation(u in rb_word(2, 4), v in rb_word(3, 4)) {
        let bu = rb_op(&u);
        let ad = ad_diamond(&bu.atoms()[0], &v).unwrap();
        prop_assert!(same_element(&ad, &dia(&dia(&bu, &v), &rb_inv(&bu))));
    }

    #[test]
    fn weight_minus_one_conversion(u in rb_word(2, 3), v in rb_word(2, 3)) {
        let c = |w: &RbWord| rb_op(&rb_inv(w));
        let cu = c(&u);
        let ad = dia(&dia(&cu, &v), &rb_inv(&cu));
        prop_assert!(same_element(&dia(&cu, &c(&v)), &c(&dia(&ad, &u))));
    }
}

#[test]
fn three_brackets_associate_only_up_to_evaluation() {
    let (u, v, w) = (rb("<x>"), rb("<y>"), rb("<z>"));
    let left = dia(&dia(&u, &v), &w);
    let right = dia(&u, &dia(&v, &w));
    let c = "<x <x> y <x>^-1>";
    assert_eq!(left.to_string(), format!("<x <x> y <x>^-1 {c} z {c}^-1>"));
    assert_eq!(right.to_string(), format!("<x <x> y <y> z {c}^-1>"));
    // <x>^-1 c and <y> are distinct words for the same element
    assert!(same_element(&left, &right));
}

#[test]
fn empty_bracket_is_idempotent() {
    let one = rb("<1>");
    assert_eq!(dia(&one, &one), one);
    assert!(same_element(&one, &RbWord::identity()));
}
