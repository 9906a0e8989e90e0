//! The 2-string braid group of the torus.
//!
//! The pure braid group is modelled as the direct sum `F(x,y) ⊕ Z ⊕ Z`: a
//! free word together with two central integer coordinates. The full braid
//! group is the disjoint union of the pure part and its coset by the strand
//! swap `σ`, with `σ² = (B, 0, 0)` for the full twist `B = [x, y^-1]`.
//! Conjugation by `σ` acts through the automorphism [`TorusBraid::lsigma`].

use std::fmt;
use std::str::FromStr;

use crate::freewords::{parse_braid_text, Alphabet, BraidParseError, FreeWord, Gen};
use crate::group::{commutator, GroupElement};
use crate::report::RelationCheck;

/// An element `(w; m, n)` of `F(x,y) ⊕ Z ⊕ Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPureBraid {
    pub word: FreeWord,
    pub m: i64,
    pub n: i64,
}

impl TorusPureBraid {
    pub fn new(word: FreeWord, m: i64, n: i64) -> TorusPureBraid {
        TorusPureBraid { word, m, n }
    }

    pub fn from_word(word: FreeWord) -> TorusPureBraid {
        TorusPureBraid::new(word, 0, 0)
    }

    /// Central element `(𝟙; m, n)`.
    pub fn central(m: i64, n: i64) -> TorusPureBraid {
        TorusPureBraid::new(FreeWord::identity(), m, n)
    }

    /// The projection `(p₁)#` onto the central coordinates.
    pub fn project_p1(&self) -> (i64, i64) {
        (self.m, self.n)
    }

    /// Conjugation by `σ` restricted to the pure subgroup:
    /// `(w; m, n) ↦ (x y^-1 · w(x^-1, y^-1) · y x^-1; |w|_x + m, |w|_y + n)`.
    pub fn lsigma(&self) -> TorusPureBraid {
        let xy = FreeWord::from_blocks(&[(Gen::G1, 1), (Gen::G2, -1)]);
        let word = xy.multiply(&self.word.invert_letters()).multiply(&xy.invert());
        TorusPureBraid::new(
            word,
            self.word.exponent_sum(Gen::G1) + self.m,
            self.word.exponent_sum(Gen::G2) + self.n,
        )
    }
}

impl GroupElement for TorusPureBraid {
    fn identity() -> TorusPureBraid {
        TorusPureBraid::central(0, 0)
    }

    fn mul(&self, other: &TorusPureBraid) -> TorusPureBraid {
        TorusPureBraid::new(self.word.multiply(&other.word), self.m + other.m, self.n + other.n)
    }

    fn inverse(&self) -> TorusPureBraid {
        TorusPureBraid::new(self.word.invert(), -self.m, -self.n)
    }
}

/// An element of the full braid group: `pure · σ^sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusBraid {
    pub pure: TorusPureBraid,
    pub sigma: bool,
}

impl TorusBraid {
    pub fn pure(pure: TorusPureBraid) -> TorusBraid {
        TorusBraid { pure, sigma: false }
    }

    /// The strand swap `σ` itself.
    pub fn swap() -> TorusBraid {
        TorusBraid { pure: TorusPureBraid::identity(), sigma: true }
    }

    /// Conjugation by `σ`, extended to the whole group by
    /// `l_σ(p·σ) = l_σ(p)·σ`.
    pub fn lsigma(&self) -> TorusBraid {
        TorusBraid { pure: self.pure.lsigma(), sigma: self.sigma }
    }
}

impl GroupElement for TorusBraid {
    fn identity() -> TorusBraid {
        TorusBraid::pure(TorusPureBraid::identity())
    }

    /// The coset rule `(p σ^ε)(q σ^δ) = p · l_σ^ε(q) · (B,0,0)^⌊(ε+δ)/2⌋ · σ^((ε+δ) mod 2)`.
    fn mul(&self, other: &TorusBraid) -> TorusBraid {
        let q = if self.sigma { other.pure.lsigma() } else { other.pure.clone() };
        let mut pure = self.pure.mul(&q);
        if self.sigma && other.sigma {
            pure = pure.mul(&TorusPureBraid::from_word(full_twist()));
        }
        TorusBraid { pure, sigma: self.sigma != other.sigma }
    }

    fn inverse(&self) -> TorusBraid {
        if self.sigma {
            let twist = TorusPureBraid::from_word(full_twist());
            let pure = twist.inverse().mul(&self.pure.lsigma().inverse());
            TorusBraid { pure, sigma: true }
        } else {
            TorusBraid::pure(self.pure.inverse())
        }
    }
}

/// The full twist `B = [x, y^-1] = x y^-1 x^-1 y` as a free word.
pub fn full_twist() -> FreeWord {
    FreeWord::from_blocks(&[(Gen::G1, 1), (Gen::G2, -1), (Gen::G1, -1), (Gen::G2, 1)])
}

/// Model values of the five presentation generators.
///
/// `rho21` and `rho22` are the free generators `x` and `y`; the `rho1k`
/// entries are forced by requiring `rho1k · B^-1 · rho2k` to be the k-th
/// central generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusGeneratorTable {
    pub rho11: TorusPureBraid,
    pub rho12: TorusPureBraid,
    pub rho21: TorusPureBraid,
    pub rho22: TorusPureBraid,
    pub full_twist: TorusPureBraid,
}

impl TorusGeneratorTable {
    pub fn entries(&self) -> [(&'static str, &TorusPureBraid); 5] {
        [
            ("rho11", &self.rho11),
            ("rho12", &self.rho12),
            ("rho21", &self.rho21),
            ("rho22", &self.rho22),
            ("B", &self.full_twist),
        ]
    }
}

/// Builds the generator table by solving the central-element constraints
/// `(𝟙; e_k) = rho1k · B^-1 · rho2k`, i.e. `rho1k = (𝟙; e_k) · rho2k^-1 · B`.
pub fn generator_table() -> TorusGeneratorTable {
    let b = TorusPureBraid::from_word(full_twist());
    let rho21 = TorusPureBraid::from_word(FreeWord::generator(Gen::G1));
    let rho22 = TorusPureBraid::from_word(FreeWord::generator(Gen::G2));
    let rho11 = TorusPureBraid::central(1, 0).mul(&rho21.inverse()).mul(&b);
    let rho12 = TorusPureBraid::central(0, 1).mul(&rho22.inverse()).mul(&b);
    TorusGeneratorTable { rho11, rho12, rho21, rho22, full_twist: b }
}

/// Evaluates every instance of the defining relations of the pure braid
/// group in the model, one report line per instance.
pub fn verify_presentation() -> Vec<RelationCheck> {
    let t = generator_table();
    let b = &t.full_twist;
    let rho = |i: usize, k: usize| match (i, k) {
        (1, 1) => t.rho11.clone(),
        (1, 2) => t.rho12.clone(),
        (2, 1) => t.rho21.clone(),
        (2, 2) => t.rho22.clone(),
        _ => unreachable!(),
    };
    let mut checks = Vec::new();
    let mut push = |name: String, lhs: TorusPureBraid, rhs: TorusPureBraid| {
        checks.push(RelationCheck::new(name, lhs == rhs));
    };

    push(
        "(i) [rho11, rho12^-1] = B".into(),
        commutator(&t.rho11, &t.rho12.inverse()),
        b.clone(),
    );
    push(
        "(i) [rho21, rho22^-1] = B".into(),
        commutator(&t.rho21, &t.rho22.inverse()),
        b.clone(),
    );

    for k in [1, 2] {
        let r1k = rho(1, k);
        let r2k = rho(2, k);
        push(
            format!("(ii) k={k}: rho2k rho1k rho2k^-1 = B rho1k B^-1"),
            r2k.mul(&r1k).mul(&r2k.inverse()),
            b.mul(&r1k).mul(&b.inverse()),
        );
        push(
            format!("(ii) k={k}: rho2k^-1 rho1k rho2k = rho1k [B^-1, rho1k]"),
            r2k.inverse().mul(&r1k).mul(&r2k),
            r1k.mul(&commutator(&b.inverse(), &r1k)),
        );
    }

    push(
        "(iii) rho21 rho12 rho21^-1 = B rho12 [rho11^-1, B]".into(),
        t.rho21.mul(&t.rho12).mul(&t.rho21.inverse()),
        b.mul(&t.rho12).mul(&commutator(&t.rho11.inverse(), b)),
    );
    push(
        "(iii) rho21^-1 rho12 rho21 = B^-1 [B, rho11] rho12 [B^-1, rho11]".into(),
        t.rho21.inverse().mul(&t.rho12).mul(&t.rho21),
        b.inverse()
            .mul(&commutator(b, &t.rho11))
            .mul(&t.rho12)
            .mul(&commutator(&b.inverse(), &t.rho11)),
    );

    push(
        "(iv) rho22 rho11 rho22^-1 = rho11 B^-1".into(),
        t.rho22.mul(&t.rho11).mul(&t.rho22.inverse()),
        t.rho11.mul(&b.inverse()),
    );
    push(
        "(iv) rho22^-1 rho11 rho22 = rho11 B [B^-1, rho12]".into(),
        t.rho22.inverse().mul(&t.rho11).mul(&t.rho22),
        t.rho11.mul(b).mul(&commutator(&b.inverse(), &t.rho12)),
    );

    for k in [1, 2] {
        let r1k = rho(1, k);
        let r2k = rho(2, k);
        push(
            format!("(v) k={k}: rho2k B rho2k^-1 = B rho1k^-1 B rho1k B^-1"),
            r2k.mul(b).mul(&r2k.inverse()),
            b.mul(&r1k.inverse()).mul(b).mul(&r1k).mul(&b.inverse()),
        );
    }

    for k in [1, 2] {
        let center = rho(1, k).mul(&b.inverse()).mul(&rho(2, k));
        for i in [1, 2] {
            for j in [1, 2] {
                let rij = rho(i, j);
                push(
                    format!("(vi) k={k}: rho1k B^-1 rho2k centralizes rho{i}{j}"),
                    rij.conjugated_by(&center),
                    rij.clone(),
                );
            }
        }
    }

    checks
}

impl fmt::Display for TorusBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}, {})",
            self.pure.word.display(Alphabet::XY),
            self.pure.m,
            self.pure.n
        )?;
        if self.sigma {
            write!(f, "·s")?;
        }
        Ok(())
    }
}

impl FromStr for TorusBraid {
    type Err = BraidParseError;

    fn from_str(s: &str) -> Result<TorusBraid, BraidParseError> {
        let (word, m, n, sigma) = parse_braid_text(s, Alphabet::XY)?;
        Ok(TorusBraid { pure: TorusPureBraid::new(word, m, n), sigma })
    }
}

impl fmt::Display for TorusPureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.word.display(Alphabet::XY), self.m, self.n)
    }
}
