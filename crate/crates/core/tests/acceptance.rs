//! Acceptance suite: each test covers one criterion and prints a single
//! PASS/FAIL line (visible with `--nocapture`). Criteria with a runtime
//! budget fail when they exceed it.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use borsuk_core::bu::{
    construct_klein_witness, decide_klein, decide_torus, verify_klein_witness,
    verify_torus_witness, InvolutionId, Witness,
};
use borsuk_core::freewords::{FreeWord, Letter};
use borsuk_core::group::GroupElement;
use borsuk_core::homclass::{klein_normal_form, lifts_to_torus, KleinHom, NormalShape};
use borsuk_core::klein::{self, KleinPureBraid, ZxZ};
use borsuk_core::oracle::{
    check_palin2_small, check_palindrome_lemma, search_torus_witness, SearchBounds,
};
use borsuk_core::report::all_hold;
use borsuk_core::torus::{self, TorusPureBraid};
use borsuk_core::TorusClass;

fn finish(
    number: u32,
    name: &str,
    started: Instant,
    budget: Option<Duration>,
    ok: bool,
    detail: &str,
) {
    let elapsed = started.elapsed();
    let within = budget.map_or(true, |b| elapsed <= b);
    let verdict = if ok && within { "PASS" } else { "FAIL" };
    println!("criterion {number:>2} {verdict} ({elapsed:.2?}): {name}: {detail}");
    assert!(ok, "criterion {number} failed: {detail}");
    if let Some(b) = budget {
        assert!(within, "criterion {number} exceeded its {b:?} budget: took {elapsed:.2?}");
    }
}

fn sample_word(rng: &mut ChaCha8Rng, max_length: usize) -> FreeWord {
    let length = rng.gen_range(0..=max_length);
    FreeWord::reduce((0..length).map(|_| Letter::ALL[rng.gen_range(0..4)]))
}

fn sample_torus(rng: &mut ChaCha8Rng) -> TorusPureBraid {
    TorusPureBraid::new(sample_word(rng, 6), rng.gen_range(-3..=3), rng.gen_range(-3..=3))
}

fn sample_klein(rng: &mut ChaCha8Rng) -> KleinPureBraid {
    KleinPureBraid::new(
        sample_word(rng, 6),
        ZxZ::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3)),
    )
}

fn all_matrices(range: i64) -> Vec<TorusClass> {
    let mut out = Vec::new();
    for b11 in -range..=range {
        for b12 in -range..=range {
            for b21 in -range..=range {
                for b22 in -range..=range {
                    out.push(TorusClass::new(b11, b12, b21, b22));
                }
            }
        }
    }
    out
}

fn valid_homs(range: i64) -> Vec<KleinHom> {
    let mut out = Vec::new();
    for r1 in -range..=range {
        for s1 in -range..=range {
            for r2 in -range..=range {
                for s2 in -range..=range {
                    if let Ok(h) = KleinHom::validate(ZxZ::new(r1, s1), ZxZ::new(r2, s2)) {
                        out.push(h);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_01_torus_presentation() {
    let started = Instant::now();
    let checks = torus::verify_presentation();
    let ok = checks.len() == 20 && all_hold(&checks);
    finish(
        1,
        "torus presentation relations hold in the model",
        started,
        Some(Duration::from_secs(1)),
        ok,
        &format!("{}/{} relation instances hold", checks.iter().filter(|c| c.holds).count(), checks.len()),
    );
}

#[test]
fn criterion_02_klein_presentations() {
    let started = Instant::now();
    let checks = klein::verify_presentations();
    let ok = checks.len() == 18 && all_hold(&checks);
    finish(
        2,
        "Klein bottle braid and pure presentations hold in the model",
        started,
        Some(Duration::from_secs(1)),
        ok,
        &format!("{}/{} relations hold", checks.iter().filter(|c| c.holds).count(), checks.len()),
    );
}

#[test]
fn criterion_03_theta_closed_forms() {
    let started = Instant::now();
    let checks = klein::theta_closed_form_audit(8, 6);
    let ok = checks.len() == 3 && all_hold(&checks);
    finish(
        3,
        "theta closed forms match iterated composition",
        started,
        Some(Duration::from_secs(5)),
        ok,
        &format!("{checks:?}"),
    );
}

#[test]
fn criterion_04_lambda_gamma_inverse() {
    let started = Instant::now();
    let checks = klein::lambda_gamma_audit();
    let mut ok = all_hold(&checks);
    let mut detail = format!("{} generator checks hold", checks.len());

    let table = klein::generator_table();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut previous: Option<KleinPureBraid> = None;
    for index in 0..200 {
        let p = sample_klein(&mut rng);
        if table.evaluate(&klein::lambda_word(&p)) != p {
            ok = false;
            detail = format!("round trip failed on sample {index}: {p}");
            break;
        }
        if p.project_p1() != p.g {
            ok = false;
            detail = format!("projection is not the coordinate pair on sample {index}: {p}");
            break;
        }
        if let Some(q) = previous {
            if p.mul(&q).project_p1() != p.project_p1().mul(&q.project_p1()) {
                ok = false;
                detail = format!("projection is not a homomorphism on sample {index}");
                break;
            }
        }
        previous = Some(p);
    }
    if ok {
        detail.push_str("; 200 sampled elements round trip and project correctly");
    }
    finish(4, "lambda and gamma are mutually inverse", started, None, ok, &detail);
}

#[test]
fn criterion_05_lsigma_audits() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let torus_twist = TorusPureBraid::from_word(torus::full_twist());
    for index in 0..500 {
        let a = sample_torus(&mut rng);
        let b = sample_torus(&mut rng);
        if a.mul(&b).lsigma() != a.lsigma().mul(&b.lsigma()) {
            ok = false;
            detail = format!("torus automorphism law failed on pair {index}");
            break;
        }
        if a.lsigma().lsigma() != torus_twist.mul(&a).mul(&torus_twist.inverse()) {
            ok = false;
            detail = format!("torus l_sigma^2 mismatch on pair {index}");
            break;
        }
    }

    let klein_twist = KleinPureBraid::from_word(klein::full_twist());
    if ok {
        for index in 0..500 {
            let a = sample_klein(&mut rng);
            let b = sample_klein(&mut rng);
            if a.mul(&b).lsigma() != a.lsigma().mul(&b.lsigma()) {
                ok = false;
                detail = format!("Klein automorphism law failed on pair {index}");
                break;
            }
            if a.lsigma().lsigma() != klein_twist.mul(&a).mul(&klein_twist.inverse()) {
                ok = false;
                detail = format!("Klein l_sigma^2 mismatch on pair {index}");
                break;
            }
        }
    }

    let closed = klein::lsigma_closed_form_audit(6);
    if ok {
        ok = all_hold(&closed);
        let resolved = closed
            .iter()
            .find(|check| check.name.contains("exponent resolved to +r"))
            .map(|check| check.name.clone());
        detail = match resolved {
            Some(name) if ok => {
                format!("500 sampled pairs per model pass; closed forms hold; report names `{name}`")
            }
            Some(_) => format!("closed-form audit failed: {closed:?}"),
            None => {
                ok = false;
                "closed-form report does not name the resolved exponent".to_string()
            }
        };
    }
    finish(5, "l_sigma is an automorphism with exact closed forms", started, None, ok, &detail);
}

#[test]
fn criterion_06_tau2_audit() {
    let started = Instant::now();
    let matrices = all_matrices(3);
    let failures: Vec<String> = matrices
        .par_iter()
        .filter_map(|&class| {
            let expected = class.image10() != (0, 0)
                && class.b12.rem_euclid(2) == 0
                && class.b22.rem_euclid(2) == 0;
            let decision = decide_torus(class, InvolutionId::Tau2);
            if decision.bu != expected {
                return Some(format!("{class}: decision {} != predicate {expected}", decision.bu));
            }
            if decision.bu {
                let magnitude = class
                    .b11
                    .abs()
                    .max(class.b12.abs())
                    .max(class.b21.abs())
                    .max(class.b22.abs());
                let bounds = SearchBounds::new(3, magnitude + 1);
                if let Some(w) = search_torus_witness(class, InvolutionId::Tau2, bounds) {
                    return Some(format!("{class}: bounded search found a = {}, b = {}", w.a, w.b));
                }
            } else {
                let Some(Witness::Torus(witness)) = decision.witness else {
                    return Some(format!("{class}: negative decision without witness"));
                };
                let checks = verify_torus_witness(class, &witness);
                if !all_hold(&checks) {
                    return Some(format!("{class}: witness failed {checks:?}"));
                }
            }
            None
        })
        .collect();
    let ok = failures.is_empty();
    finish(
        6,
        "tau2 decisions match the parity predicate with witnesses and clean searches",
        started,
        Some(Duration::from_secs(60)),
        ok,
        &if ok {
            format!("{} matrices audited", matrices.len())
        } else {
            format!("{} failures, first: {}", failures.len(), failures[0])
        },
    );
}

#[test]
fn criterion_07_tau1_audit() {
    let started = Instant::now();
    let matrices = all_matrices(3);
    let failures: Vec<String> = matrices
        .par_iter()
        .filter_map(|&class| {
            let decision = decide_torus(class, InvolutionId::Tau1);
            if decision.bu {
                return Some(format!("{class}: unexpected positive decision"));
            }
            let Some(Witness::Torus(witness)) = decision.witness else {
                return Some(format!("{class}: negative decision without witness"));
            };
            let checks = verify_torus_witness(class, &witness);
            if !all_hold(&checks) {
                return Some(format!("{class}: witness failed {checks:?}"));
            }
            None
        })
        .collect();
    let ok = failures.is_empty();
    finish(
        7,
        "tau1 classes never have the property and all witnesses verify",
        started,
        Some(Duration::from_secs(10)),
        ok,
        &if ok {
            format!("{} matrices audited", matrices.len())
        } else {
            format!("{} failures, first: {}", failures.len(), failures[0])
        },
    );
}

#[test]
fn criterion_08_tau3_audit() {
    let started = Instant::now();
    let homs = valid_homs(4);
    let mut ok = true;
    let mut detail = format!("{} valid homs audited", homs.len());

    for h in &homs {
        let decision = decide_klein(h);
        let type_b = !klein_normal_form(h).shape.is_a();
        if decision.bu != type_b || decision.bu != lifts_to_torus(h) {
            ok = false;
            detail = format!("{h}: verdict {} disagrees with type/lifting", decision.bu);
            break;
        }
        'conjugators: for a in -3i64..=3 {
            for b in -3i64..=3 {
                if decide_klein(&h.conjugate(ZxZ::new(a, b))).bu != decision.bu {
                    ok = false;
                    detail = format!("{h}: verdict changes under conjugation by ({a},{b})");
                    break 'conjugators;
                }
            }
        }
        if !ok {
            break;
        }
    }

    if ok {
        let mut witnesses = 0;
        'family: for r in 0i64..=6 {
            for i in 0i64..=1 {
                for s in -3i64..=3 {
                    let shape = NormalShape::A { r, i, s };
                    let witness = construct_klein_witness(shape).expect("type A");
                    let checks = verify_klein_witness(&shape.hom(), &witness);
                    if !all_hold(&checks) {
                        ok = false;
                        detail = format!("{shape}: witness failed {checks:?}");
                        break 'family;
                    }
                    witnesses += 1;
                }
            }
        }
        if ok {
            detail.push_str(&format!(
                "; verdict conjugation-invariant; {witnesses} normal-form witnesses verify (odd r included)"
            ));
        }
    }
    finish(
        8,
        "tau3 verdict equals the lifting test and type-A witnesses verify",
        started,
        Some(Duration::from_secs(30)),
        ok,
        &detail,
    );
}

#[test]
fn criterion_09_palindrome_lemmas() {
    let started = Instant::now();
    let palindromes = check_palindrome_lemma(12);
    let twisted = check_palin2_small(SearchBounds::new(6, 0));
    let ok = palindromes.is_empty() && twisted.is_empty();
    finish(
        9,
        "palindrome lemmas have no counterexamples",
        started,
        Some(Duration::from_secs(30)),
        ok,
        &format!(
            "{} palindrome and {} twisted-pair counterexamples up to lengths 12 and 6",
            palindromes.len(),
            twisted.len()
        ),
    );
}

#[test]
fn criterion_10_reidemeister_schreier() {
    let started = Instant::now();
    let checks = klein::verify_pure_rewrite();
    let ok = all_hold(&checks);
    finish(
        10,
        "index-2 rewriting reproduces the pure presentation",
        started,
        Some(Duration::from_secs(1)),
        ok,
        &format!("{}/{} rewrite checks hold", checks.iter().filter(|c| c.holds).count(), checks.len()),
    );
}

#[test]
fn criterion_11_normal_forms() {
    let started = Instant::now();
    let homs = valid_homs(4);
    let mut ok = true;
    let mut detail = String::new();

    for h in &homs {
        let nf = klein_normal_form(h);
        let shaped = match nf.shape {
            NormalShape::A { r, i, .. } => r >= 0 && (i == 0 || i == 1),
            NormalShape::B { r, .. } => r >= 0,
        };
        if !shaped || h.conjugate(nf.conjugator) != nf.shape.hom() {
            ok = false;
            detail = format!("{h}: normal form or conjugator is wrong");
            break;
        }
    }

    if ok {
        let mut shapes: Vec<NormalShape> =
            homs.iter().map(|h| klein_normal_form(h).shape).collect();
        shapes.sort_by_key(|shape| format!("{shape}"));
        shapes.dedup();
        let count = shapes.len();
        'pairs: for (index, first) in shapes.iter().enumerate() {
            for second in &shapes[index + 1..] {
                for a in -8i64..=8 {
                    for b in -8i64..=8 {
                        if first.hom().conjugate(ZxZ::new(a, b)) == second.hom() {
                            ok = false;
                            detail = format!("{first} and {second} are conjugate by ({a},{b})");
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if ok {
            detail = format!(
                "{} homs reduce to {count} distinct normal forms; no cross conjugators",
                homs.len()
            );
        }
    }
    finish(
        11,
        "normal forms are canonical and pairwise non-conjugate",
        started,
        Some(Duration::from_secs(10)),
        ok,
        &detail,
    );
}
