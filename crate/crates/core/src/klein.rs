//! The 2-string braid group of the Klein bottle.
//!
//! The pure braid group is modelled as the semidirect product
//! `F(u,v) ⋊_θ (Z⋊Z)`: a free word together with an element of the
//! fundamental group of the Klein bottle, acting on the free part through
//! the automorphisms `θ(m,n)`. The full braid group is the index-2 extension
//! by the strand swap `σ`, with `σ² = (B; 0, 0)` for the full twist
//! `B = u v u v^-1`; conjugation by `σ` acts through [`KleinBraid::lsigma`].
//!
//! The module also houses the pair of isomorphisms `λ`/`γ` between the model
//! and the five-generator presentation of the pure braid group, relation
//! verifiers for both presentations, closed-form audits for `θ` and `l_σ`,
//! and the index-2 Reidemeister-Schreier rewriting that derives the pure
//! presentation from the full one.

use std::fmt;
use std::str::FromStr;

use crate::freewords::{parse_braid_text, Alphabet, BraidParseError, FreeWord, Gen, Sign};
use crate::group::{commutator, GroupElement};
use crate::presentation::{rs_rewrite_index2, Coset, GenWord, Presentation, RewriteOutput};
use crate::report::RelationCheck;

/// An element `(r, s)` of `Z⋊Z`, the fundamental group of the Klein bottle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZxZ {
    pub r: i64,
    pub s: i64,
}

impl ZxZ {
    pub fn new(r: i64, s: i64) -> ZxZ {
        ZxZ { r, s }
    }
}

impl GroupElement for ZxZ {
    fn identity() -> ZxZ {
        ZxZ::new(0, 0)
    }

    /// `(r₁, s₁)(r₂, s₂) = (r₁ + (−1)^{s₁} r₂, s₁ + s₂)`.
    fn mul(&self, other: &ZxZ) -> ZxZ {
        ZxZ::new(self.r + neg_one_pow(self.s) * other.r, self.s + other.s)
    }

    /// `(r, s)^-1 = ((−1)^{s+1} r, −s)`.
    fn inverse(&self) -> ZxZ {
        ZxZ::new(neg_one_pow(self.s + 1) * self.r, -self.s)
    }
}

impl fmt::Display for ZxZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// The parity indicator `δ_n`: 0 for even `n`, 1 for odd `n`.
pub fn delta(n: i64) -> i64 {
    n.rem_euclid(2)
}

fn neg_one_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The full twist `B = u v u v^-1` as a free word.
pub fn full_twist() -> FreeWord {
    FreeWord::from_blocks(&[(Gen::G1, 1), (Gen::G2, 1), (Gen::G1, 1), (Gen::G2, -1)])
}

/// Applies the automorphism `θ(m, n)` of `F(u, v)` letter-wise through its
/// closed forms `u ↦ B^{m−δ_n} u^{(−1)^n} B^{−m+δ_n}` and
/// `v ↦ B^m v u^{−2m} B^{−m+δ_n}`, reducing the result. Satisfies
/// `θ(g₁·g₂) = θ(g₁) ∘ θ(g₂)` and `θ(0,0) = identity`.
pub fn theta_apply(g: ZxZ, w: &FreeWord) -> FreeWord {
    let (m, n) = (g.r, g.s);
    let d = delta(n);
    let b = full_twist();
    let u_image = b
        .pow(m - d)
        .multiply(&FreeWord::gen_pow(Gen::G1, neg_one_pow(n)))
        .multiply(&b.pow(d - m));
    let v_image = b
        .pow(m)
        .multiply(&FreeWord::generator(Gen::G2))
        .multiply(&FreeWord::gen_pow(Gen::G1, -2 * m))
        .multiply(&b.pow(d - m));
    let images = [u_image.clone(), u_image.invert(), v_image.clone(), v_image.invert()];
    let mut out = FreeWord::identity();
    for letter in w.letters() {
        let image = match (letter.gen, letter.sign) {
            (Gen::G1, Sign::Plus) => &images[0],
            (Gen::G1, Sign::Minus) => &images[1],
            (Gen::G2, Sign::Plus) => &images[2],
            (Gen::G2, Sign::Minus) => &images[3],
        };
        out = out.multiply(image);
    }
    out
}

/// An element `(w; m, n)` of `F(u,v) ⋊_θ (Z⋊Z)`, with `(m, n)` stored as the
/// `Z⋊Z` component `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KleinPureBraid {
    pub word: FreeWord,
    pub g: ZxZ,
}

impl KleinPureBraid {
    pub fn new(word: FreeWord, g: ZxZ) -> KleinPureBraid {
        KleinPureBraid { word, g }
    }

    pub fn from_word(word: FreeWord) -> KleinPureBraid {
        KleinPureBraid::new(word, ZxZ::identity())
    }

    /// The purely positional element `(𝟙; m, n)`.
    pub fn from_zxz(g: ZxZ) -> KleinPureBraid {
        KleinPureBraid::new(FreeWord::identity(), g)
    }

    /// The projection `(p₁)#` onto the `Z⋊Z` component.
    pub fn project_p1(&self) -> ZxZ {
        self.g
    }

    /// Conjugation by `σ` restricted to the pure subgroup, computed
    /// generator-wise from the base images `l_σ(u; 0,0) = (B u^-1 B^-1; 1,0)`,
    /// `l_σ(v; 0,0) = (v^-1 B; 0,1)`, `l_σ(𝟙; m,0) = (𝟙; m,0)`, and
    /// `l_σ(𝟙; 0,n) = (B^{δ_n}; 0,n)`; an automorphism whose square is
    /// conjugation by `(B; 0,0)`.
    pub fn lsigma(&self) -> KleinPureBraid {
        let b = full_twist();
        let u_image = KleinPureBraid::new(
            b.multiply(&FreeWord::gen_pow(Gen::G1, -1)).multiply(&b.invert()),
            ZxZ::new(1, 0),
        );
        let v_image =
            KleinPureBraid::new(FreeWord::gen_pow(Gen::G2, -1).multiply(&b), ZxZ::new(0, 1));
        let images = [u_image.clone(), u_image.inverse(), v_image.clone(), v_image.inverse()];
        let mut out = KleinPureBraid::identity();
        for letter in self.word.letters() {
            let image = match (letter.gen, letter.sign) {
                (Gen::G1, Sign::Plus) => &images[0],
                (Gen::G1, Sign::Minus) => &images[1],
                (Gen::G2, Sign::Plus) => &images[2],
                (Gen::G2, Sign::Minus) => &images[3],
            };
            out = out.mul(image);
        }
        out = out.mul(&KleinPureBraid::from_zxz(ZxZ::new(self.g.r, 0)));
        out.mul(&KleinPureBraid::new(b.pow(delta(self.g.s)), ZxZ::new(0, self.g.s)))
    }
}

impl GroupElement for KleinPureBraid {
    fn identity() -> KleinPureBraid {
        KleinPureBraid::from_zxz(ZxZ::identity())
    }

    /// The semidirect rule `(w₁; g₁)(w₂; g₂) = (w₁ · θ(g₁)(w₂); g₁g₂)`.
    fn mul(&self, other: &KleinPureBraid) -> KleinPureBraid {
        KleinPureBraid::new(
            self.word.multiply(&theta_apply(self.g, &other.word)),
            self.g.mul(&other.g),
        )
    }

    /// `(w; g)^-1 = (θ(g^-1)(w^-1); g^-1)`.
    fn inverse(&self) -> KleinPureBraid {
        let g_inv = self.g.inverse();
        KleinPureBraid::new(theta_apply(g_inv, &self.word.invert()), g_inv)
    }
}

/// An element of the full braid group: `pure · σ^sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KleinBraid {
    pub pure: KleinPureBraid,
    pub sigma: bool,
}

impl KleinBraid {
    pub fn pure(pure: KleinPureBraid) -> KleinBraid {
        KleinBraid { pure, sigma: false }
    }

    /// The strand swap `σ` itself.
    pub fn swap() -> KleinBraid {
        KleinBraid { pure: KleinPureBraid::identity(), sigma: true }
    }

    /// Conjugation by `σ`, extended to the whole group by
    /// `l_σ(p·σ) = l_σ(p)·σ`.
    pub fn lsigma(&self) -> KleinBraid {
        KleinBraid { pure: self.pure.lsigma(), sigma: self.sigma }
    }
}

impl GroupElement for KleinBraid {
    fn identity() -> KleinBraid {
        KleinBraid::pure(KleinPureBraid::identity())
    }

    /// The coset rule `(p σ^ε)(q σ^δ) = p · l_σ^ε(q) · (B;0,0)^⌊(ε+δ)/2⌋ · σ^((ε+δ) mod 2)`.
    fn mul(&self, other: &KleinBraid) -> KleinBraid {
        let q = if self.sigma { other.pure.lsigma() } else { other.pure.clone() };
        let mut pure = self.pure.mul(&q);
        if self.sigma && other.sigma {
            pure = pure.mul(&KleinPureBraid::from_word(full_twist()));
        }
        KleinBraid { pure, sigma: self.sigma != other.sigma }
    }

    fn inverse(&self) -> KleinBraid {
        if self.sigma {
            let twist = KleinPureBraid::from_word(full_twist());
            let pure = twist.inverse().mul(&self.pure.lsigma().inverse());
            KleinBraid { pure, sigma: true }
        } else {
            KleinBraid::pure(self.pure.inverse())
        }
    }
}

/// Names of the pure presentation generators in the order used throughout
/// this module: `a1, a2, b1, b2, B`.
pub const PURE_GENERATOR_NAMES: [&str; 5] = ["a1", "a2", "b1", "b2", "B"];

const A1: usize = 0;
const A2: usize = 1;
const B1: usize = 2;
const B2: usize = 3;
const TW: usize = 4;

/// The `γ` images of the five pure presentation generators in the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleinGeneratorTable {
    pub a1: KleinPureBraid,
    pub a2: KleinPureBraid,
    pub b1: KleinPureBraid,
    pub b2: KleinPureBraid,
    pub full_twist: KleinPureBraid,
}

impl KleinGeneratorTable {
    /// Entries in the order `a1, a2, b1, b2, B`.
    pub fn pure_entries(&self) -> [(&'static str, &KleinPureBraid); 5] {
        [
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("b1", &self.b1),
            ("b2", &self.b2),
            ("B", &self.full_twist),
        ]
    }

    /// The same entries embedded in the full group, with `σ` appended.
    pub fn braid_entries(&self) -> [(&'static str, KleinBraid); 6] {
        [
            ("a1", KleinBraid::pure(self.a1.clone())),
            ("a2", KleinBraid::pure(self.a2.clone())),
            ("b1", KleinBraid::pure(self.b1.clone())),
            ("b2", KleinBraid::pure(self.b2.clone())),
            ("B", KleinBraid::pure(self.full_twist.clone())),
            ("sigma", KleinBraid::swap()),
        ]
    }

    /// Evaluates a word over `a1, a2, b1, b2, B` to its model value; this is
    /// `γ` extended to arbitrary words.
    pub fn evaluate(&self, word: &GenWord) -> KleinPureBraid {
        let table: Vec<KleinPureBraid> =
            self.pure_entries().iter().map(|(_, value)| (*value).clone()).collect();
        word.evaluate(&table)
    }
}

/// Builds the `γ` images: `a₁ ↦ (v⁻¹u⁻¹; 1,1)`, `a₂ ↦ (v; 0,−1)`,
/// `b₁ ↦ (uv; 0,0)`, `b₂ ↦ (v⁻¹; 0,0)`, `B ↦ (B; 0,0)`.
pub fn generator_table() -> KleinGeneratorTable {
    KleinGeneratorTable {
        a1: KleinPureBraid::new(
            FreeWord::from_blocks(&[(Gen::G2, -1), (Gen::G1, -1)]),
            ZxZ::new(1, 1),
        ),
        a2: KleinPureBraid::new(FreeWord::generator(Gen::G2), ZxZ::new(0, -1)),
        b1: KleinPureBraid::from_word(FreeWord::from_blocks(&[(Gen::G1, 1), (Gen::G2, 1)])),
        b2: KleinPureBraid::from_word(FreeWord::gen_pow(Gen::G2, -1)),
        full_twist: KleinPureBraid::from_word(full_twist()),
    }
}

/// The isomorphism `λ` from the model to formal words over the pure
/// presentation generators: letters map through `u ↦ b1 b2`, `v ↦ b2^-1`,
/// and the `Z⋊Z` component contributes `(b1 a1 b2 a2)^m (a2^-1 b2^-1)^n`.
pub fn lambda_word(p: &KleinPureBraid) -> GenWord {
    let mut out = GenWord::identity();
    for letter in p.word.letters() {
        let image = match (letter.gen, letter.sign) {
            (Gen::G1, Sign::Plus) => GenWord::from_blocks([(B1, 1), (B2, 1)]),
            (Gen::G1, Sign::Minus) => GenWord::from_blocks([(B2, -1), (B1, -1)]),
            (Gen::G2, Sign::Plus) => GenWord::single(B2, -1),
            (Gen::G2, Sign::Minus) => GenWord::single(B2, 1),
        };
        out = out.multiply(&image);
    }
    let phi10 = GenWord::from_blocks([(B1, 1), (A1, 1), (B2, 1), (A2, 1)]);
    let phi01 = GenWord::from_blocks([(A2, -1), (B2, -1)]);
    out.multiply(&phi10.pow(p.g.r)).multiply(&phi01.pow(p.g.s))
}

/// `λ` on the five model generators, as labelled formal words:
/// `(u;0,0) ↦ b1 b2`, `(v;0,0) ↦ b2^-1`, `(B;0,0) ↦ B`,
/// `(𝟙;1,0) ↦ b1 a1 b2 a2`, `(𝟙;0,1) ↦ a2^-1 b2^-1`.
pub fn lambda_generator_images() -> [(&'static str, GenWord); 5] {
    [
        ("(u; 0, 0)", GenWord::from_blocks([(B1, 1), (B2, 1)])),
        ("(v; 0, 0)", GenWord::single(B2, -1)),
        ("(B; 0, 0)", GenWord::single(TW, 1)),
        ("(1; 1, 0)", GenWord::from_blocks([(B1, 1), (A1, 1), (B2, 1), (A2, 1)])),
        ("(1; 0, 1)", GenWord::from_blocks([(A2, -1), (B2, -1)])),
    ]
}

/// The five model generators matching [`lambda_generator_images`], in order.
fn model_generators() -> [(&'static str, KleinPureBraid); 5] {
    [
        ("(u; 0, 0)", KleinPureBraid::from_word(FreeWord::generator(Gen::G1))),
        ("(v; 0, 0)", KleinPureBraid::from_word(FreeWord::generator(Gen::G2))),
        ("(B; 0, 0)", KleinPureBraid::from_word(full_twist())),
        ("(1; 1, 0)", KleinPureBraid::from_zxz(ZxZ::new(1, 0))),
        ("(1; 0, 1)", KleinPureBraid::from_zxz(ZxZ::new(0, 1))),
    ]
}

/// The section `φ` of `(p₁)#`, computed as `φ(1,0)^m · φ(0,1)^n` from the
/// `γ` images of `φ(1,0) = b1 a1 b2 a2` and `φ(0,1) = a2^-1 b2^-1`.
pub fn section_phi(g: ZxZ) -> KleinPureBraid {
    let t = generator_table();
    let phi10 = t.b1.mul(&t.a1).mul(&t.b2).mul(&t.a2);
    let phi01 = t.a2.inverse().mul(&t.b2.inverse());
    phi10.pow(g.r).mul(&phi01.pow(g.s))
}

/// Evaluates every defining relation of the full braid group (R2, R3, TR),
/// of the pure braid group ((i) through (v)), and the six conjugation
/// formulas for `a_r` acting on `b_k` and `B`, in the model. One report line
/// per relation instance, 18 in total.
pub fn verify_presentations() -> Vec<RelationCheck> {
    let t = generator_table();
    let sigma = KleinBraid::swap();
    let a = [KleinBraid::pure(t.a1.clone()), KleinBraid::pure(t.a2.clone())];
    let b = [KleinBraid::pure(t.b1.clone()), KleinBraid::pure(t.b2.clone())];
    let tw = KleinBraid::pure(t.full_twist.clone());

    let mut checks = Vec::new();
    let mut push = |name: String, lhs: KleinBraid, rhs: KleinBraid| {
        checks.push(RelationCheck::new(name, lhs == rhs));
    };

    for r in [1usize, 2] {
        let ar = &a[r - 1];
        push(
            format!("(R2) r={r}: s^-1 a_r s^-1 a_r = a_r s^-1 a_r s"),
            sigma.inverse().mul(ar).mul(&sigma.inverse()).mul(ar),
            ar.mul(&sigma.inverse()).mul(ar).mul(&sigma),
        );
    }
    push(
        "(R3) s^-1 a1 s a2 = a2 s^-1 a1 s".into(),
        sigma.inverse().mul(&a[0]).mul(&sigma).mul(&a[1]),
        a[1].mul(&sigma.inverse()).mul(&a[0]).mul(&sigma),
    );
    push("(TR) a1^2 a2^2 = s^2".into(), a[0].pow(2).mul(&a[1].pow(2)), sigma.pow(2));

    for r in [1usize, 2] {
        let (ar, br) = (&a[r - 1], &b[r - 1]);
        push(
            format!("(i) r={r}: b_r a_r = B a_r B^-1 b_r B"),
            br.mul(ar),
            tw.mul(ar).mul(&tw.inverse()).mul(br).mul(&tw),
        );
        push(
            format!("(ii) r={r}: [a_r, b_r] = a_r B a_r^-1"),
            commutator(ar, br),
            ar.mul(&tw).mul(&ar.inverse()),
        );
    }
    push(
        "(iii) b1 B a2 B^-1 = B a2 B^-1 b1".into(),
        b[0].mul(&tw).mul(&a[1]).mul(&tw.inverse()),
        tw.mul(&a[1]).mul(&tw.inverse()).mul(&b[0]),
    );
    push("(iv) [a1, b2] = 1".into(), commutator(&a[0], &b[1]), KleinBraid::identity());
    push("(v) a1^2 a2^2 = B".into(), a[0].pow(2).mul(&a[1].pow(2)), tw.clone());
    push("(v) b1^2 b2^2 = B".into(), b[0].pow(2).mul(&b[1].pow(2)), tw.clone());

    push(
        "(1) a1 b1 a1^-1 = b1^-1 b2^-2".into(),
        b[0].conjugated_by(&a[0]),
        b[0].inverse().mul(&b[1].pow(-2)),
    );
    push("(2) a1 b2 a1^-1 = b2".into(), b[1].conjugated_by(&a[0]), b[1].clone());
    push(
        "(3) a1 B a1^-1 = b1^-1 B^-1 b1".into(),
        tw.conjugated_by(&a[0]),
        b[0].inverse().mul(&tw.inverse()).mul(&b[0]),
    );
    push(
        "(4) a2 b1 a2^-1 = b2^-1 B^-1 b2^-1 b1 b2 B b2".into(),
        b[0].conjugated_by(&a[1]),
        b[1].inverse()
            .mul(&tw.inverse())
            .mul(&b[1].inverse())
            .mul(&b[0])
            .mul(&b[1])
            .mul(&tw)
            .mul(&b[1]),
    );
    push(
        "(5) a2 b2 a2^-1 = b2^-1 B^-1 b2^2".into(),
        b[1].conjugated_by(&a[1]),
        b[1].inverse().mul(&tw.inverse()).mul(&b[1].pow(2)),
    );
    push(
        "(6) a2 B a2^-1 = b2^-1 B^-1 b2".into(),
        tw.conjugated_by(&a[1]),
        b[1].inverse().mul(&tw.inverse()).mul(&b[1]),
    );

    checks
}

/// The three-generator presentation of the full braid group, with relators
/// R2 (twice), R3, and TR written as left-hand side times inverted
/// right-hand side.
pub fn braid_presentation() -> Presentation {
    Presentation::parse(
        "a1 a2 sigma\n\
         sigma^-1 a1 sigma^-1 a1 sigma^-1 a1^-1 sigma a1^-1\n\
         sigma^-1 a2 sigma^-1 a2 sigma^-1 a2^-1 sigma a2^-1\n\
         sigma^-1 a1 sigma a2 sigma^-1 a1^-1 sigma a2^-1\n\
         a1^2 a2^2 sigma^-2",
    )
    .expect("the braid presentation text is well-formed")
}

/// Applies the index-2 rewriting to [`braid_presentation`] with `σ` as the
/// odd generator and names the surviving subgroup generators `a1, a2` (even
/// coset) and `b1, b2, B` (odd coset).
pub fn derive_pure_presentation() -> (RewriteOutput, Presentation) {
    let full = braid_presentation();
    let parity = [false, false, true];
    let output =
        rs_rewrite_index2(&full, &parity, 2).expect("the swap parity splits the presentation");
    let names = output
        .generators
        .iter()
        .map(|gen| {
            let name = match (gen.coset, gen.base) {
                (Coset::Even, 0) => "a1",
                (Coset::Even, 1) => "a2",
                (Coset::Odd, 0) => "b1",
                (Coset::Odd, 1) => "b2",
                (Coset::Odd, 2) => "B",
                _ => unreachable!("only the trivial generator is discarded"),
            };
            name.to_string()
        })
        .collect();
    let pres = output.to_presentation(names).expect("one name per surviving generator");
    (output, pres)
}

/// Cross-checks the derived pure presentation against the model: the
/// surviving generator names, the discarded trivial generator, each defining
/// word against the corresponding `γ` image, and every rewritten relator
/// against the identity.
pub fn verify_pure_rewrite() -> Vec<RelationCheck> {
    let (output, pres) = derive_pure_presentation();
    let t = generator_table();
    let mut checks = Vec::new();

    let names: Vec<&str> = pres.generators().iter().map(String::as_str).collect();
    checks.push(RelationCheck::new(
        "rewriting yields exactly the generators a1, a2, b1, b2, B",
        names == PURE_GENERATOR_NAMES,
    ));
    checks.push(RelationCheck::new(
        "the trivial generator rho(1, sigma) is discarded",
        output.generator_index(Coset::Even, 2).is_none(),
    ));

    let braid_table =
        vec![KleinBraid::pure(t.a1.clone()), KleinBraid::pure(t.a2.clone()), KleinBraid::swap()];
    let gamma_of = |name: &str| -> &KleinPureBraid {
        match name {
            "a1" => &t.a1,
            "a2" => &t.a2,
            "b1" => &t.b1,
            "b2" => &t.b2,
            "B" => &t.full_twist,
            _ => unreachable!("checked against the expected name list"),
        }
    };
    for (gen, name) in output.generators.iter().zip(pres.generators()) {
        let value = gen.defining_word.evaluate(&braid_table);
        checks.push(RelationCheck::new(
            format!(
                "defining word {} of {name} evaluates to its gamma image",
                gen.defining_word.display(braid_presentation().generators()),
            ),
            value == KleinBraid::pure(gamma_of(name).clone()),
        ));
    }

    checks.push(RelationCheck::new(
        "two rewritten relators per input relator",
        pres.relators().len() == 2 * braid_presentation().relators().len(),
    ));
    for rel in pres.relators() {
        checks.push(RelationCheck::new(
            format!(
                "rewritten relator {} evaluates to the identity",
                rel.display(pres.generators())
            ),
            t.evaluate(rel) == KleinPureBraid::identity(),
        ));
    }

    checks
}

/// Checks the closed forms of `θ(m,0)` and `θ(0,n)` against iterated
/// composition of `θ(±1,0)` and `θ(0,±1)` on `u`, `v`, and `B` for
/// magnitudes up to `iterate_bound`, and the rule `θ(m,n)(B) = B^{(−1)^n}`
/// for magnitudes up to `twist_bound`.
pub fn theta_closed_form_audit(iterate_bound: i64, twist_bound: i64) -> Vec<RelationCheck> {
    let targets = [FreeWord::generator(Gen::G1), FreeWord::generator(Gen::G2), full_twist()];
    let mut along_m = true;
    let mut along_n = true;
    for k in -iterate_bound..=iterate_bound {
        let unit = if k >= 0 { 1 } else { -1 };
        for w in &targets {
            let mut iterated_m = w.clone();
            let mut iterated_n = w.clone();
            for _ in 0..k.unsigned_abs() {
                iterated_m = theta_apply(ZxZ::new(unit, 0), &iterated_m);
                iterated_n = theta_apply(ZxZ::new(0, unit), &iterated_n);
            }
            along_m &= theta_apply(ZxZ::new(k, 0), w) == iterated_m;
            along_n &= theta_apply(ZxZ::new(0, k), w) == iterated_n;
        }
    }
    let mut twist_rule = true;
    for m in -twist_bound..=twist_bound {
        for n in -twist_bound..=twist_bound {
            twist_rule &=
                theta_apply(ZxZ::new(m, n), &full_twist()) == full_twist().pow(neg_one_pow(n));
        }
    }
    vec![
        RelationCheck::new(
            format!(
                "theta(m,0) matches iterated theta(+-1,0) on u, v, B for |m| <= {iterate_bound}"
            ),
            along_m,
        ),
        RelationCheck::new(
            format!(
                "theta(0,n) matches iterated theta(0,+-1) on u, v, B for |n| <= {iterate_bound}"
            ),
            along_n,
        ),
        RelationCheck::new(
            format!("theta(m,n)(B) = B^((-1)^n) for |m|,|n| <= {twist_bound}"),
            twist_rule,
        ),
    ]
}

/// Checks the closed forms of `l_σ` on generator powers and positional
/// elements against the generator-wise computation for magnitudes up to
/// `bound`. The `u^r` formula circulates with two different exponents, so
/// both are tested: `+r` must match everywhere and `-r` must fail somewhere.
pub fn lsigma_closed_form_audit(bound: i64) -> Vec<RelationCheck> {
    let b = full_twist();
    let bu_inv = b.multiply(&FreeWord::gen_pow(Gen::G1, -1));
    let mut plus_exponent = true;
    let mut minus_exponent = true;
    for r in -bound..=bound {
        let actual = KleinPureBraid::from_word(FreeWord::gen_pow(Gen::G1, r)).lsigma();
        let plus = KleinPureBraid::new(bu_inv.pow(r).multiply(&b.pow(-r)), ZxZ::new(r, 0));
        let minus = KleinPureBraid::new(bu_inv.pow(-r).multiply(&b.pow(-r)), ZxZ::new(r, 0));
        plus_exponent &= actual == plus;
        minus_exponent &= actual == minus;
    }
    let uv = FreeWord::from_blocks(&[(Gen::G1, 1), (Gen::G2, 1)]);
    let ub = FreeWord::generator(Gen::G1).multiply(&b);
    let mut v_powers = true;
    for s in -bound..=bound {
        let actual = KleinPureBraid::from_word(FreeWord::gen_pow(Gen::G2, s)).lsigma();
        let expected =
            KleinPureBraid::new(uv.pow(-s).multiply(&ub.pow(delta(s))), ZxZ::new(0, s));
        v_powers &= actual == expected;
    }
    let twist = KleinPureBraid::from_word(full_twist());
    let twist_fixed = twist.lsigma() == twist;
    let mut m_fixed = true;
    let mut n_rule = true;
    for k in -bound..=bound {
        m_fixed &= KleinPureBraid::from_zxz(ZxZ::new(k, 0)).lsigma()
            == KleinPureBraid::from_zxz(ZxZ::new(k, 0));
        n_rule &= KleinPureBraid::from_zxz(ZxZ::new(0, k)).lsigma()
            == KleinPureBraid::new(b.pow(delta(k)), ZxZ::new(0, k));
    }
    vec![
        RelationCheck::new(
            format!(
                "(1) l_sigma(u^r; 0,0) = ((B u^-1)^r B^-r; r, 0) for |r| <= {bound}, \
                 exponent resolved to +r"
            ),
            plus_exponent,
        ),
        RelationCheck::new(
            "(1) alternative exponent -r rejected: matches only at r = 0",
            !minus_exponent,
        ),
        RelationCheck::new(
            format!("(2) l_sigma(v^s; 0,0) = ((u v)^-s (u B)^delta_s; 0, s) for |s| <= {bound}"),
            v_powers,
        ),
        RelationCheck::new("(3) l_sigma(B; 0,0) = (B; 0,0)", twist_fixed),
        RelationCheck::new(
            format!("(4) l_sigma(1; m, 0) = (1; m, 0) for |m| <= {bound}"),
            m_fixed,
        ),
        RelationCheck::new(
            format!("(5) l_sigma(1; 0, n) = (B^delta_n; 0, n) for |n| <= {bound}"),
            n_rule,
        ),
    ]
}

/// Checks that `γ` and `λ` are mutually inverse on the five model generators
/// and the five presentation generators. `λ∘γ` returns `a1, a2, b1, b2`
/// freely; `γ(B)` comes back as `b1^2 b2^2`, which equals `B` by the
/// relation `b1^2 b2^2 = B` and is therefore compared through `γ`.
pub fn lambda_gamma_audit() -> Vec<RelationCheck> {
    let t = generator_table();
    let mut checks = Vec::new();
    for (label, p) in &model_generators() {
        checks.push(RelationCheck::new(
            format!("gamma(lambda({label})) = {label}"),
            t.evaluate(&lambda_word(p)) == *p,
        ));
    }
    for (index, (name, value)) in t.pure_entries().iter().enumerate() {
        let round = lambda_word(value);
        let (label, ok) = if index == TW {
            (
                format!("lambda(gamma({name})) = b1^2 b2^2 = {name} by relation (v)"),
                round == GenWord::from_blocks([(B1, 2), (B2, 2)])
                    && t.evaluate(&round) == **value,
            )
        } else {
            (
                format!("lambda(gamma({name})) = {name}"),
                round == GenWord::single(index, 1),
            )
        };
        checks.push(RelationCheck::new(label, ok));
    }
    checks
}

impl fmt::Display for KleinBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}, {})",
            self.pure.word.display(Alphabet::UV),
            self.pure.g.r,
            self.pure.g.s
        )?;
        if self.sigma {
            write!(f, "·s")?;
        }
        Ok(())
    }
}

impl FromStr for KleinBraid {
    type Err = BraidParseError;

    fn from_str(s: &str) -> Result<KleinBraid, BraidParseError> {
        let (word, m, n, sigma) = parse_braid_text(s, Alphabet::UV)?;
        Ok(KleinBraid { pure: KleinPureBraid::new(word, ZxZ::new(m, n)), sigma })
    }
}

impl fmt::Display for KleinPureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.word.display(Alphabet::UV), self.g.r, self.g.s)
    }
}
