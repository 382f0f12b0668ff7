mod common;

use common::{endo, word};
use magnus_core::fox::{fox_derivative, gradient, in_second_derived, is_magnus_trivial, magnus_matrix};
use magnus_core::groupring::{abelianize, GroupRingElement, Monomial};
use magnus_core::parse::{parse_endo, parse_word};
use magnus_core::{Endomorphism, FreeWord};
use proptest::prelude::*;

fn phi(w: &FreeWord, n: u32) -> GroupRingElement {
    GroupRingElement::monomial(abelianize(w, n).unwrap(), 1)
}

/// Naive derivative straight from the definition, one prefix at a time.
fn fox_oracle(w: &FreeWord, j: u32, n: u32) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let letters = w.letters();
    for (p, l) in letters.iter().enumerate() {
        if l.index() != j {
            continue;
        }
        let prefix = FreeWord::reduce(letters[..p].iter().copied());
        if l.is_inverse() {
            out = &out - &phi(&(&prefix * &FreeWord::reduce([*l])), n);
        } else {
            out = &out + &phi(&prefix, n);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fundamental_identity(n in 1u32..=6, w in word(6, 60)) {
        let w = w.kill(&((n + 1)..=6).collect::<Vec<_>>());
        let one = GroupRingElement::one();
        let mut rhs = GroupRingElement::zero();
        for (j, d) in gradient(&w, n).unwrap().iter().enumerate() {
            rhs = &rhs + &(d * &(&GroupRingElement::var(j as u32 + 1) - &one));
        }
        prop_assert_eq!(&phi(&w, n) - &one, rhs);
    }

    #[test]
    fn matches_definition(w in word(3, 30), j in 1u32..=3) {
        prop_assert_eq!(fox_derivative(&w, j, 3).unwrap(), fox_oracle(&w, j, 3));
    }

    #[test]
    fn derivation_rule(u in word(3, 20), v in word(3, 20), j in 1u32..=3) {
        let lhs = fox_derivative(&(&u * &v), j, 3).unwrap();
        let rhs = &fox_derivative(&u, j, 3).unwrap() + &(&phi(&u, 3) * &fox_derivative(&v, j, 3).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chain_rule(f in endo(3, 4), g in endo(3, 4)) {
        let fg = magnus_matrix(&f.compose(&g).unwrap());
        let fmap = |m: &Monomial| {
            m.pairs().iter().fold(Monomial::one(), |acc, &(i, e)| {
                acc.mul(&abelianize(&f.image(i).pow(e), 3).unwrap())
            })
        };
        let expected = magnus_matrix(&g).map_entries(fmap).mul(&magnus_matrix(&f)).unwrap();
        prop_assert_eq!(fg, expected);
    }

    #[test]
    fn torelli_chain_rule(a in word(3, 6), b in word(3, 6), g in endo(3, 4)) {
        // x1 -> x1 [a,b] acts trivially on homology
        let mut f = Endomorphism::identity(3);
        f.set_image(1, &FreeWord::generator(1) * &FreeWord::commutator(&a, &b)).unwrap();
        let lhs = magnus_matrix(&f.compose(&g).unwrap());
        prop_assert_eq!(lhs, magnus_matrix(&g).mul(&magnus_matrix(&f)).unwrap());
    }

    #[test]
    fn second_derived_words(a in word(3, 8), b in word(3, 8), c in word(3, 8), d in word(3, 8)) {
        let w = FreeWord::commutator(&FreeWord::commutator(&a, &b), &FreeWord::commutator(&c, &d));
        prop_assert!(in_second_derived(&w, 3).unwrap());
        let mut f = Endomorphism::identity(3);
        f.set_image(2, &FreeWord::generator(2) * &w).unwrap();
        prop_assert!(is_magnus_trivial(&f));
    }
}

#[test]
fn magnus_matrix_of_transvection() {
    let f = parse_endo("x1 -> x1 x2", Some(2)).unwrap();
    let m = magnus_matrix(&f);
    assert!(m.entry(1, 1).is_one());
    assert_eq!(*m.entry(1, 2), GroupRingElement::var(1));
    assert!(m.entry(2, 1).is_zero());
    assert!(!is_magnus_trivial(&f));
    assert!(!in_second_derived(&parse_word("[x1,x2]").unwrap(), 2).unwrap());
}
