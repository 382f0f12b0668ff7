#![allow(dead_code)]

use magnus_core::groupring::{GroupRingElement, Monomial};
use magnus_core::{Endomorphism, FreeWord};
use proptest::prelude::*;

pub fn signed_letter(n: u32) -> impl Strategy<Value = i32> {
    (1..=n as i32, any::<bool>()).prop_map(|(i, inv)| if inv { -i } else { i })
}

pub fn word(n: u32, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(signed_letter(n), 0..=max_len).prop_map(|v| FreeWord::from_signed(&v))
}

pub fn endo(n: u32, max_len: usize) -> impl Strategy<Value = Endomorphism> {
    prop::collection::vec(word(n, max_len), n as usize)
        .prop_map(|images| Endomorphism::new(images).unwrap())
}

pub fn ring_element(n: u32) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n as usize), -5i64..=5), 0..5).prop_map(
        |terms| {
            GroupRingElement::from_terms(
                terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)),
            )
        },
    )
}

/// `[a_1, ..., a_k]`, left-normed.
pub fn left_normed(entries: &[FreeWord]) -> FreeWord {
    entries[1..]
        .iter()
        .fold(entries[0].clone(), |acc, e| FreeWord::commutator(&acc, e))
}
