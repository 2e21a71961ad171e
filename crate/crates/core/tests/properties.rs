use std::sync::Arc;

use loday_core::anticyclic::{
    ac_bracket, ac_bracket_transposed, ac_project, dual_commutator, dual_commutator_closed_form, lie_word,
    rotation_identity_check, universal_pairing, MultilinearForm, SignPolicy,
};
use loday_core::cochains::{
    apply_to_lie_word, cochain_commutator, coderivation_defect, extend_coderivation_element, extend_coderivation_part,
    in_lie_span, BarCochain,
};
use loday_core::graded::{koszul_sign, transpose, Element, GradedBasis, Parity, Word};
use loday_core::scalar::{int, Scalar};
use loday_core::world::{poisson, LodayFunction, SymplecticPlane};
use loday_core::zinbiel::{shuffle, universal_lift, zinbiel_product, LinearMap, ZinbielTarget};
use proptest::prelude::*;

fn basis(dim: usize, odd: bool) -> Arc<GradedBasis> {
    GradedBasis::numbered("x", dim, if odd { Parity::Odd } else { Parity::Even })
}

fn word(max_len: usize, dim: u16) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0..dim, 1..=max_len)
}

fn el(b: &Arc<GradedBasis>, w: &[u16]) -> Element {
    Element::word(b, Word::from_letters(w))
}

fn sign_of(b: &Arc<GradedBasis>, x: &[u16], y: &[u16]) -> Scalar {
    let odd = b.word_parity(x).is_odd() && b.word_parity(y).is_odd();
    int(if odd { -1 } else { 1 })
}

fn cochain(b: &Arc<GradedBasis>, arity: usize, coefs: &[i64]) -> BarCochain {
    let dim = b.dim();
    let entries = b.words(arity).enumerate().map(|(idx, w)| {
        let mut v = Element::zero(b);
        for k in 0..dim {
            v.add_term(Word::letter(k as u16), &int(coefs[(idx * dim + k) % coefs.len()]));
        }
        (w, v)
    });
    BarCochain::new(b, arity, entries).unwrap()
}

fn form(b: &Arc<GradedBasis>, degree: usize, coefs: &[i64]) -> MultilinearForm {
    let entries = b.words(degree).enumerate().map(|(i, w)| (w, int(coefs[i % coefs.len()])));
    MultilinearForm::new(b, degree, entries).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn normalization_is_order_independent(terms in prop::collection::vec((word(3, 2), -3i64..=3), 0..8)) {
        let b = basis(2, false);
        let mut fwd = Element::zero(&b);
        for (w, c) in &terms {
            fwd.add_term(Word::from_letters(w), &int(*c));
        }
        let mut rev = Element::zero(&b);
        for (w, c) in terms.iter().rev() {
            rev.add_term(Word::from_letters(w), &int(*c));
        }
        prop_assert_eq!(&fwd, &rev);
        prop_assert!(fwd.terms().all(|(_, c)| *c != int(0)));
        let again = Element::from_terms(&b, fwd.terms().map(|(w, c)| (w.clone(), c.clone())));
        prop_assert_eq!(again, fwd);
    }

    #[test]
    fn koszul_is_multiplicative(
        parities in prop::collection::vec(any::<bool>(), 1..7),
        seed_p in any::<u64>(),
        seed_q in any::<u64>(),
    ) {
        let n = parities.len();
        let perm = |mut s: u64| {
            let mut p: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = (s % (i as u64 + 1)) as usize;
                s /= i as u64 + 1;
                p.swap(i, j);
            }
            p
        };
        let (p, q) = (perm(seed_p), perm(seed_q));
        let par: Vec<Parity> = parities.iter().map(|&o| Parity::from_bit(o)).collect();
        let after_p: Vec<Parity> = p.iter().map(|&i| par[i]).collect();
        let composite: Vec<usize> = q.iter().map(|&k| p[k]).collect();
        prop_assert_eq!(
            koszul_sign(&composite, &par).unwrap(),
            koszul_sign(&p, &par).unwrap() * koszul_sign(&q, &after_p).unwrap()
        );
    }

    #[test]
    fn transpose_is_an_involution(w in word(5, 3), odd in any::<bool>()) {
        let b = basis(3, odd);
        let x = el(&b, &w);
        prop_assert_eq!(transpose(&transpose(&x)), x.clone());
        if !odd {
            prop_assert_eq!(transpose(&x), el(&b, &w.iter().rev().copied().collect::<Vec<_>>()));
        }
    }

    #[test]
    fn zinbiel_axiom_and_shuffle_lemma(x in word(3, 3), y in word(3, 3), z in word(3, 3), odd in any::<bool>()) {
        let b = basis(3, odd);
        let (ex, ey, ez) = (el(&b, &x), el(&b, &y), el(&b, &z));
        let p = |u: &Element, v: &Element| zinbiel_product(u, v).unwrap();
        let s = sign_of(&b, &x, &y);
        let lhs = p(&ex, &p(&ey, &ez));
        let mut rhs = p(&p(&ex, &ey), &ez);
        rhs.add_scaled(&p(&p(&ey, &ex), &ez), &s);
        prop_assert_eq!(lhs, rhs);
        let mut sym = p(&ex, &ey);
        sym.add_scaled(&p(&ey, &ex), &s);
        prop_assert_eq!(shuffle(&ex, &ey), sym);
    }

    #[test]
    fn shuffle_splits_on_first_letters(x in word(3, 2), y in word(3, 2), odd in any::<bool>()) {
        let b = basis(2, odd);
        let head = |w: &[u16]| el(&b, &w[..1]);
        let tail = |w: &[u16]| el(&b, &w[1..]);
        let mut expected = head(&x).concat(&shuffle(&tail(&x), &el(&b, &y)));
        expected.add_scaled(&head(&y).concat(&shuffle(&el(&b, &x), &tail(&y))), &sign_of(&b, &x, &y[..1]));
        prop_assert_eq!(shuffle(&el(&b, &x), &el(&b, &y)), expected);
    }

    #[test]
    fn lift_is_a_morphism(
        images in prop::collection::vec(prop::collection::vec((word(2, 2), -2i64..=2), 1..3), 2),
        x in word(3, 2),
        y in word(3, 2),
    ) {
        let v = basis(2, false);
        let w = GradedBasis::numbered("y", 2, Parity::Even);
        let imgs: Vec<Element> = images
            .iter()
            .map(|terms| {
                let mut e = Element::from_terms(&w, terms.iter().map(|(l, c)| (Word::from_letters(l), int(*c))));
                if e.is_zero() {
                    e = Element::letter(&w, 0);
                }
                e
            })
            .collect();
        let f = LinearMap::new(&v, ZinbielTarget::Free(w.clone()), imgs).unwrap();
        let lift = universal_lift(&f).unwrap();
        let xy = zinbiel_product(&el(&v, &x), &el(&v, &y)).unwrap();
        let lhs = lift.eval(&xy).unwrap();
        let rhs = zinbiel_product(&lift.eval(&el(&v, &x)).unwrap(), &lift.eval(&el(&v, &y)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn extension_is_a_coderivation(arity in 1usize..=3, coefs in prop::collection::vec(-2i64..=2, 1..12), w in word(4, 2)) {
        let b = basis(2, true);
        let c = cochain(&b, arity, &coefs);
        prop_assert!(coderivation_defect(&c, &Word::from_letters(&w)).is_zero());
    }

    #[test]
    fn commutator_is_graded_antisymmetric_and_jacobi(
        arities in prop::collection::vec(1usize..=2, 3),
        coefs in prop::collection::vec(-2i64..=2, 3..12),
    ) {
        let b = basis(2, true);
        let cs: Vec<BarCochain> = arities
            .iter()
            .enumerate()
            .map(|(i, &a)| cochain(&b, a, &coefs[i..]))
            .collect();
        let br = |x: &BarCochain, y: &BarCochain| cochain_commutator(x, y).unwrap();
        let sgn = |x: &BarCochain, y: &BarCochain| int(if x.is_odd() && y.is_odd() { -1 } else { 1 });
        let (x, y, z) = (&cs[0], &cs[1], &cs[2]);
        prop_assert_eq!(br(x, y), br(y, x).scaled(&-sgn(x, y)));
        let lhs = br(x, &br(y, z));
        let rhs = br(&br(x, y), z).plus_scaled(&br(y, &br(x, z)), &sgn(x, y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_words_are_stable(arity in 1usize..=3, coefs in prop::collection::vec(-2i64..=2, 1..12), extra in 0usize..=2, seed in any::<u32>(), odd in any::<bool>()) {
        let b = basis(2, odd);
        let c = cochain(&b, arity, &coefs);
        let n = arity + extra;
        let w: Vec<u16> = (0..n).map(|i| ((seed >> i) & 1) as u16).collect();
        let direct = extend_coderivation_element(&c, &lie_word(&b, &w));
        prop_assert_eq!(apply_to_lie_word(&c, &w).unwrap(), direct.clone());
        prop_assert!(in_lie_span(&direct));
    }

    #[test]
    fn last_letter_never_enters_b(arity in 2usize..=3, coefs in prop::collection::vec(-2i64..=2, 1..12), extra in 1usize..=2, seed in any::<u32>()) {
        let b = basis(2, true);
        let c = cochain(&b, arity, &coefs);
        let n = arity + extra;
        let w: Vec<u16> = (0..n).map(|i| ((seed >> i) & 1) as u16).collect();
        // terms of B̂([x_2..x_n] ⊗ x_1) in which x_1 is an input of B
        let inner = lie_word(&b, &w[1..]).concat(&el(&b, &w[..1]));
        let mut x = Element::zero(&b);
        for (v, k) in inner.terms() {
            x.add_scaled(&extend_coderivation_part(&c, v, n - arity), k);
        }
        prop_assert!(x.is_zero());
    }

    #[test]
    fn projection_is_idempotent_with_rotations(degree in 2usize..=4, coefs in prop::collection::vec(-3i64..=3, 1..9)) {
        let b = basis(2, true);
        let p = ac_project(&form(&b, degree, &coefs));
        prop_assert_eq!(ac_project(p.form()), p.clone());
        for k in 2..=degree {
            prop_assert_eq!(rotation_identity_check(&p, k), None);
        }
    }

    #[test]
    fn dual_commutator_identities(w in word(5, 2)) {
        let b = basis(2, false);
        let d = dual_commutator(&b, &w, SignPolicy::SHIPPED);
        prop_assert_eq!(&d, &dual_commutator_closed_form(&b, &w));
        let rev: Vec<u16> = w.iter().rev().copied().collect();
        let sign = int(if w.len() % 2 == 1 { 1 } else { -1 });
        prop_assert_eq!(d, dual_commutator(&b, &rev, SignPolicy::SHIPPED).scaled(&sign));
    }

    #[test]
    fn pairing_identities(x in word(2, 2), y in word(2, 2), z in word(2, 2)) {
        let b = basis(2, false);
        let (ex, ey, ez) = (el(&b, &x), el(&b, &y), el(&b, &z));
        let pair = |u: &Element, v: &Element| universal_pairing(u, v).unwrap();
        let p = |u: &Element, v: &Element| zinbiel_product(u, v).unwrap();
        prop_assert_eq!(pair(&ex, &ey), pair(&ey, &ex).neg());
        prop_assert_eq!(pair(&p(&ex, &ey), &ez), pair(&p(&ez, &ey), &ex));
        let cyc = pair(&p(&ex, &ey), &ez).plus(&pair(&p(&ey, &ez), &ex)).plus(&pair(&p(&ez, &ex), &ey));
        prop_assert!(cyc.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn bracket_routes_agree(d1 in 2usize..=3, d2 in 2usize..=3, c1 in prop::collection::vec(-3i64..=3, 1..7), c2 in prop::collection::vec(-3i64..=3, 1..7)) {
        let plane = SymplecticPlane::new(2).unwrap();
        let a1 = ac_project(&form(plane.basis(), d1, &c1));
        let a2 = ac_project(&form(plane.basis(), d2, &c2));
        let r1 = ac_bracket(&plane, &a1, &a2).unwrap();
        prop_assert_eq!(&r1, &ac_bracket_transposed(&plane, &a1, &a2).unwrap());
        prop_assert_eq!(ac_project(r1.form()), r1);
    }

    #[test]
    fn poisson_is_a_graded_lie_bracket(
        degrees in prop::collection::vec(2usize..=3, 3),
        coefs in prop::collection::vec(prop::collection::vec(-2i64..=2, 1..5), 3),
    ) {
        let plane = SymplecticPlane::new(1).unwrap();
        let fs: Vec<LodayFunction> = degrees
            .iter()
            .zip(&coefs)
            .map(|(&d, c)| LodayFunction::from_cochain(&plane, ac_project(&form(plane.basis(), d, c))).unwrap())
            .collect();
        let br = |a: &LodayFunction, b: &LodayFunction| poisson(a, b).unwrap();
        // |A| = degree mod 2
        let sgn = |x: usize, y: usize| int(if x % 2 == 1 && y % 2 == 1 { -1 } else { 1 });
        let (a, b, c) = (&fs[0], &fs[1], &fs[2]);
        let (da, db) = (degrees[0], degrees[1]);
        prop_assert_eq!(br(a, b), br(b, a).scaled(&-sgn(da, db)));
        let lhs = br(a, &br(b, c));
        let rhs = br(&br(a, b), c).plus_scaled(&br(b, &br(a, c)), &sgn(da, db)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
