//! Proptest strategies shared by the unit tests of several modules.

use proptest::prelude::*;

use crate::freewords::{FreeWord, Letter};
use crate::klein::{KleinPureBraid, ZxZ};
use crate::torus::TorusPureBraid;

pub(crate) fn arb_letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(Letter::ALL.to_vec())
}

pub(crate) fn arb_word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(arb_letter(), 0..=max_len).prop_map(FreeWord::reduce)
}

pub(crate) fn arb_torus_pure(max_len: usize, coord: i64) -> impl Strategy<Value = TorusPureBraid> {
    (arb_word(max_len), -coord..=coord, -coord..=coord)
        .prop_map(|(word, m, n)| TorusPureBraid::new(word, m, n))
}

pub(crate) fn arb_zxz(bound: i64) -> impl Strategy<Value = ZxZ> {
    (-bound..=bound, -bound..=bound).prop_map(|(r, s)| ZxZ::new(r, s))
}

pub(crate) fn arb_klein_pure(max_len: usize, coord: i64) -> impl Strategy<Value = KleinPureBraid> {
    (arb_word(max_len), arb_zxz(coord)).prop_map(|(word, g)| KleinPureBraid::new(word, g))
}
