//! Independent brute-force checks: palindrome lemmas, bounded witness
//! search, and cross-validation of the decision procedures.
//!
//! Nothing in this module knows how witnesses are constructed. The searches
//! enumerate braid pairs directly from the definitions and keep only those
//! passing the exact verifiers, so agreement with the deciders is evidence
//! that both sides are right.

use rayon::prelude::*;

use crate::bu::{
    self, decide_klein, decide_torus, InvolutionId, KleinWitness, TorusWitness, Witness,
};
use crate::freewords::{FreeWord, Gen};
use crate::group::GroupElement;
use crate::homclass::{KleinHom, NormalShape, TorusClass};
use crate::klein::{self, KleinPureBraid, ZxZ};
use crate::report::{all_hold, CheckStatus};
use crate::torus::TorusPureBraid;

/// Limits for exhaustive witness search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_word_length: usize,
    pub max_abs_coordinate: i64,
}

impl SearchBounds {
    pub fn new(max_word_length: usize, max_abs_coordinate: i64) -> SearchBounds {
        SearchBounds { max_word_length, max_abs_coordinate }
    }
}

/// Checks that every reduced palindrome up to the given length has an even
/// exponent sum in at least one generator. Returns the counterexamples
/// (expected: none).
pub fn check_palindrome_lemma(max_length: usize) -> Vec<FreeWord> {
    FreeWord::enumerate_reduced(max_length)
        .filter(|word| {
            word.is_palindrome()
                && word.exponent_sum(Gen::G1).rem_euclid(2) == 1
                && word.exponent_sum(Gen::G2).rem_euclid(2) == 1
        })
        .collect()
}

/// Checks the twisted-palindrome statement on all pairs within the length
/// bound: whenever `w` is nontrivial with both exponent sums even and
/// `z·w·z^-1` equals the inverse of the letter-flipped `w`, then `z` has an
/// even exponent sum in some generator. Returns the violating pairs
/// (expected: none).
pub fn check_palin2_small(bounds: SearchBounds) -> Vec<(FreeWord, FreeWord)> {
    let words: Vec<FreeWord> = FreeWord::enumerate_reduced(bounds.max_word_length).collect();
    words
        .par_iter()
        .filter(|w| {
            !w.is_identity()
                && w.exponent_sum(Gen::G1).rem_euclid(2) == 0
                && w.exponent_sum(Gen::G2).rem_euclid(2) == 0
        })
        .flat_map_iter(|w| {
            let target = w.invert_letters().invert();
            words
                .iter()
                .filter(move |z| {
                    z.multiply(w).multiply(&z.invert()) == target
                        && z.exponent_sum(Gen::G1).rem_euclid(2) == 1
                        && z.exponent_sum(Gen::G2).rem_euclid(2) == 1
                })
                .map(move |z| (z.clone(), w.clone()))
        })
        .collect()
}

/// Searches for the first braid pair solving the reduction conditions for a
/// torus class, enumerating words in the order of
/// [`FreeWord::enumerate_reduced`]. Coordinates pinned by the projection
/// conditions are derived rather than scanned, which prunes the space
/// without changing which pair is found first.
///
/// # Panics
///
/// Panics when called with `tau3`, which acts on the Klein bottle.
pub fn search_torus_witness(
    class: TorusClass,
    involution: InvolutionId,
    bounds: SearchBounds,
) -> Option<TorusWitness> {
    assert!(involution.acts_on_torus(), "tau3 pairs with the Klein bottle, not the torus");
    let words: Vec<FreeWord> = FreeWord::enumerate_reduced(bounds.max_word_length).collect();
    let within = |value: i64| value.abs() <= bounds.max_abs_coordinate;
    let found = match involution {
        InvolutionId::Tau1 => {
            if !within(class.b12) || !within(class.b22) {
                return None;
            }
            let mut found = None;
            'outer: for w_a in &words {
                let two_m = class.b11 - w_a.exponent_sum(Gen::G1);
                let two_n = class.b21 - w_a.exponent_sum(Gen::G2);
                if two_m.rem_euclid(2) != 0 || two_n.rem_euclid(2) != 0 {
                    continue;
                }
                let (m, n) = (two_m / 2, two_n / 2);
                if !within(m) || !within(n) {
                    continue;
                }
                let a = TorusPureBraid::new(w_a.clone(), m, n);
                for w_b in &words {
                    let b = TorusPureBraid::new(w_b.clone(), class.b12, class.b22);
                    if a.mul(&b.lsigma()) == b.mul(&a) {
                        found = Some((a, b));
                        break 'outer;
                    }
                }
            }
            found
        }
        InvolutionId::Tau2 => {
            if !within(class.b11) || !within(class.b21) {
                return None;
            }
            let mut found = None;
            'outer: for w_a in &words {
                if w_a.exponent_sum(Gen::G1) != -2 * class.b11
                    || w_a.exponent_sum(Gen::G2) != -2 * class.b21
                {
                    continue;
                }
                let a = TorusPureBraid::new(w_a.clone(), class.b11, class.b21);
                let shifted = a.lsigma();
                for w_b in &words {
                    let two_m = class.b12 - w_b.exponent_sum(Gen::G1);
                    let two_n = class.b22 - w_b.exponent_sum(Gen::G2);
                    if two_m.rem_euclid(2) != 0 || two_n.rem_euclid(2) != 0 {
                        continue;
                    }
                    let (m, n) = (two_m / 2, two_n / 2);
                    if !within(m) || !within(n) {
                        continue;
                    }
                    let b = TorusPureBraid::new(w_b.clone(), m, n);
                    if a.mul(&b).mul(&shifted) == b {
                        found = Some((a, b));
                        break 'outer;
                    }
                }
            }
            found
        }
        InvolutionId::Tau3 => unreachable!(),
    };
    found.map(|(a, b)| {
        let witness = TorusWitness { a, b, involution };
        assert!(
            all_hold(&bu::verify_torus_witness(class, &witness)),
            "search produced a pair failing verification"
        );
        witness
    })
}

/// The coordinate contribution of a word: the image of each letter under
/// the projection to `Z⋊Z`, multiplied in word order.
fn letter_shift(word: &FreeWord) -> ZxZ {
    word.letters().iter().fold(ZxZ::identity(), |acc, letter| {
        let step = match letter.gen {
            Gen::G1 => ZxZ::new(letter.sign.value(), 0),
            Gen::G2 => ZxZ::new(0, letter.sign.value()),
        };
        acc.mul(&step)
    })
}

/// Searches for the first braid pair solving the reduction conditions for a
/// Klein bottle homomorphism, in the same enumeration order as the torus
/// search. Condition (iii) pins the coordinates of `b`; condition (ii)
/// restricts the coordinates of `a` per word.
pub fn search_klein_witness(h: &KleinHom, bounds: SearchBounds) -> Option<KleinWitness> {
    let words: Vec<FreeWord> = FreeWord::enumerate_reduced(bounds.max_word_length).collect();
    let coordinate = bounds.max_abs_coordinate;
    let within = |g: ZxZ| g.r.abs() <= coordinate && g.s.abs() <= coordinate;
    if !within(h.img01()) {
        return None;
    }
    let twist = KleinPureBraid::from_word(klein::full_twist());
    for w_a in &words {
        // Condition (ii) reads shift(w_a)·g² = h(1,0) with g the coordinate
        // part of a; solve for g instead of scanning.
        let needed = letter_shift(w_a).inverse().mul(&h.img10());
        if needed.s.rem_euclid(2) != 0 {
            continue;
        }
        let s = needed.s / 2;
        if s.abs() > coordinate {
            continue;
        }
        let candidates: Vec<i64> = if s.rem_euclid(2) == 1 {
            if needed.r != 0 {
                continue;
            }
            (-coordinate..=coordinate).collect()
        } else {
            if needed.r.rem_euclid(2) != 0 {
                continue;
            }
            let r = needed.r / 2;
            if r.abs() > coordinate {
                continue;
            }
            vec![r]
        };
        for r in candidates {
            let a = KleinPureBraid::new(w_a.clone(), ZxZ::new(r, s));
            let shifted = a.lsigma();
            for w_b in &words {
                let b = KleinPureBraid::new(w_b.clone(), h.img01());
                if shifted.mul(&b.lsigma()).mul(&twist).mul(&a) == b {
                    let witness = KleinWitness { a, b };
                    assert!(
                        all_hold(&bu::verify_klein_witness(h, &witness)),
                        "search produced a pair failing verification"
                    );
                    return Some(witness);
                }
            }
        }
    }
    None
}

/// One audited class or homomorphism in a [`CrosscheckReport`].
#[derive(Clone, Debug)]
pub struct CrosscheckItem {
    pub label: String,
    pub bu: bool,
    pub status: CheckStatus,
    pub detail: String,
}

/// Outcome of [`crosscheck_decisions`].
#[derive(Clone, Debug, Default)]
pub struct CrosscheckReport {
    pub items: Vec<CrosscheckItem>,
}

impl CrosscheckReport {
    pub fn counterexamples(&self) -> usize {
        self.items
            .iter()
            .filter(|item| item.status == CheckStatus::Counterexample)
            .count()
    }

    pub fn is_consistent(&self) -> bool {
        self.counterexamples() == 0
    }
}

fn torus_magnitude(class: TorusClass) -> i64 {
    class
        .b11
        .abs()
        .max(class.b12.abs())
        .max(class.b21.abs())
        .max(class.b22.abs())
}

fn hom_magnitude(h: &KleinHom) -> i64 {
    h.img10()
        .r
        .abs()
        .max(h.img10().s.abs())
        .max(h.img01().r.abs())
        .max(h.img01().s.abs())
}

fn audit_torus_class(
    class: TorusClass,
    involution: InvolutionId,
    bounds: SearchBounds,
) -> CrosscheckItem {
    let label = format!("torus {involution} {class}");
    let decision = decide_torus(class, involution);
    if decision.bu {
        let effective = SearchBounds::new(
            bounds.max_word_length,
            torus_magnitude(class) + bounds.max_abs_coordinate,
        );
        match search_torus_witness(class, involution, effective) {
            None => CrosscheckItem {
                label,
                bu: true,
                status: CheckStatus::Consistent,
                detail: format!(
                    "no witness with words up to length {} and coordinates within {}",
                    effective.max_word_length, effective.max_abs_coordinate
                ),
            },
            Some(witness) => CrosscheckItem {
                label,
                bu: true,
                status: CheckStatus::Counterexample,
                detail: format!("search found a = {}, b = {}", witness.a, witness.b),
            },
        }
    } else {
        let Some(Witness::Torus(witness)) = decision.witness else {
            return CrosscheckItem {
                label,
                bu: false,
                status: CheckStatus::Counterexample,
                detail: "negative decision without a witness".to_string(),
            };
        };
        let checks = bu::verify_torus_witness(class, &witness);
        if all_hold(&checks) {
            CrosscheckItem {
                label,
                bu: false,
                status: CheckStatus::Verified,
                detail: format!("witness a = {}, b = {} passes all conditions", witness.a, witness.b),
            }
        } else {
            CrosscheckItem {
                label,
                bu: false,
                status: CheckStatus::Counterexample,
                detail: format!("constructed witness fails: {checks:?}"),
            }
        }
    }
}

fn audit_klein_hom(h: &KleinHom, bounds: SearchBounds) -> CrosscheckItem {
    let label = format!("klein tau3 {h}");
    let decision = decide_klein(h);
    if decision.bu {
        let effective =
            SearchBounds::new(bounds.max_word_length, hom_magnitude(h) + bounds.max_abs_coordinate);
        match search_klein_witness(h, effective) {
            None => CrosscheckItem {
                label,
                bu: true,
                status: CheckStatus::Consistent,
                detail: format!(
                    "no witness with words up to length {} and coordinates within {}",
                    effective.max_word_length, effective.max_abs_coordinate
                ),
            },
            Some(witness) => CrosscheckItem {
                label,
                bu: true,
                status: CheckStatus::Counterexample,
                detail: format!("search found a = {}, b = {}", witness.a, witness.b),
            },
        }
    } else {
        let normal_form = decision.normal_form.expect("klein decisions record the normal form");
        let Some(Witness::Klein(witness)) = decision.witness else {
            return CrosscheckItem {
                label,
                bu: false,
                status: CheckStatus::Counterexample,
                detail: "negative decision without a witness".to_string(),
            };
        };
        let checks = bu::verify_klein_witness(&normal_form.shape.hom(), &witness);
        if all_hold(&checks) {
            CrosscheckItem {
                label,
                bu: false,
                status: CheckStatus::Verified,
                detail: format!(
                    "witness a = {}, b = {} passes all conditions on {}",
                    witness.a, witness.b, normal_form.shape
                ),
            }
        } else {
            CrosscheckItem {
                label,
                bu: false,
                status: CheckStatus::Counterexample,
                detail: format!("constructed witness fails: {checks:?}"),
            }
        }
    }
}

/// Audits every decision in range. Negative decisions have their witness
/// verified (`VERIFIED`); positive decisions are searched for witnesses
/// within per-item bounds, where the coordinate bound is the item magnitude
/// plus the configured slack (`CONSISTENT` when nothing is found). Any
/// failed verification or successful search is a `COUNTEREXAMPLE`.
///
/// Torus classes run over all matrices with entries in
/// `[-class_range, class_range]` under both `tau1` and `tau2`; Klein bottle
/// homomorphisms run over all normal forms with parameters in the same
/// range.
pub fn crosscheck_decisions(bounds: SearchBounds, class_range: i64) -> CrosscheckReport {
    let mut matrices = Vec::new();
    for b11 in -class_range..=class_range {
        for b12 in -class_range..=class_range {
            for b21 in -class_range..=class_range {
                for b22 in -class_range..=class_range {
                    matrices.push(TorusClass::new(b11, b12, b21, b22));
                }
            }
        }
    }
    let mut items = Vec::new();
    for involution in [InvolutionId::Tau1, InvolutionId::Tau2] {
        items.par_extend(
            matrices.par_iter().map(|class| audit_torus_class(*class, involution, bounds)),
        );
    }

    let mut shapes = Vec::new();
    for r in 0..=class_range {
        for s in -class_range..=class_range {
            for i in 0..=1 {
                shapes.push(NormalShape::A { r, i, s });
            }
            shapes.push(NormalShape::B { r, s });
        }
    }
    items.par_extend(shapes.par_iter().map(|shape| audit_klein_hom(&shape.hom(), bounds)));

    CrosscheckReport { items }
}
