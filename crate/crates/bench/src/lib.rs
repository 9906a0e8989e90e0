//! Deterministic input builders shared by the benchmarks.

use borsuk_core::freewords::{FreeWord, Gen};
use borsuk_core::homclass::{KleinHom, TorusClass};
use borsuk_core::klein::{KleinPureBraid, ZxZ};
use borsuk_core::torus::TorusPureBraid;

/// A reduced word of roughly the requested length, alternating generator
/// blocks with drifting exponents.
pub fn sample_word(length: usize) -> FreeWord {
    let mut blocks = Vec::new();
    let mut remaining = length as i64;
    let mut exponent = 1i64;
    let mut gen = Gen::G1;
    while remaining > 0 {
        let take = exponent.abs().min(remaining);
        blocks.push((gen, exponent.signum() * take));
        remaining -= take;
        gen = match gen {
            Gen::G1 => Gen::G2,
            Gen::G2 => Gen::G1,
        };
        exponent = if exponent >= 0 { -(exponent + 1) } else { -exponent + 1 };
    }
    FreeWord::from_blocks(&blocks)
}

/// A torus pure braid with the given word length and fixed coordinates.
pub fn sample_torus_braid(length: usize) -> TorusPureBraid {
    TorusPureBraid::new(sample_word(length), 2, -3)
}

/// A Klein bottle pure braid with the given word length and fixed coordinates.
pub fn sample_klein_braid(length: usize) -> KleinPureBraid {
    KleinPureBraid::new(sample_word(length), ZxZ::new(2, -3))
}

/// Every torus class with entries in `[-range, range]`.
pub fn torus_classes(range: i64) -> Vec<TorusClass> {
    let mut classes = Vec::new();
    for b11 in -range..=range {
        for b12 in -range..=range {
            for b21 in -range..=range {
                for b22 in -range..=range {
                    classes.push(TorusClass::new(b11, b12, b21, b22));
                }
            }
        }
    }
    classes
}

/// Every valid Klein bottle homomorphism with entries in `[-range, range]`.
pub fn klein_homs(range: i64) -> Vec<KleinHom> {
    let mut homs = Vec::new();
    for r1 in -range..=range {
        for s1 in -range..=range {
            for r2 in -range..=range {
                for s2 in -range..=range {
                    if let Ok(hom) = KleinHom::validate(ZxZ::new(r1, s1), ZxZ::new(r2, s2)) {
                        homs.push(hom);
                    }
                }
            }
        }
    }
    homs
}
