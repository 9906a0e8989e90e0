//! Finite presentations over named generators, formal-word evaluation, and
//! index-2 Reidemeister-Schreier rewriting.
//!
//! A [`GenWord`] is a formal word in the generators of a presentation,
//! stored as exponent blocks and kept freely reduced at block level. Words
//! evaluate in any concrete group through a table assigning each generator
//! a [`GroupElement`] value; the presentation verifiers and the rewriting
//! audit both go through that evaluation.

use std::fmt;

use thiserror::Error;

use crate::group::GroupElement;

/// Freely reduced formal word over generator indices: `(index, exponent)`
/// blocks with nonzero exponents and no adjacent equal indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GenWord {
    blocks: Vec<(usize, i64)>,
}

impl GenWord {
    pub fn identity() -> GenWord {
        GenWord { blocks: Vec::new() }
    }

    /// Builds a reduced word from arbitrary blocks, merging and cancelling.
    pub fn from_blocks(blocks: impl IntoIterator<Item = (usize, i64)>) -> GenWord {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (gen, exp) in blocks {
            if exp == 0 {
                continue;
            }
            match out.last_mut() {
                Some((last_gen, last_exp)) if *last_gen == gen => {
                    *last_exp += exp;
                    if *last_exp == 0 {
                        out.pop();
                    }
                }
                _ => out.push((gen, exp)),
            }
        }
        GenWord { blocks: out }
    }

    pub fn single(gen: usize, exp: i64) -> GenWord {
        GenWord::from_blocks([(gen, exp)])
    }

    pub fn blocks(&self) -> &[(usize, i64)] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn multiply(&self, other: &GenWord) -> GenWord {
        GenWord::from_blocks(self.blocks.iter().chain(other.blocks.iter()).copied())
    }

    pub fn invert(&self) -> GenWord {
        GenWord { blocks: self.blocks.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, exp: i64) -> GenWord {
        let base = if exp >= 0 { self.clone() } else { self.invert() };
        let mut out = GenWord::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// The word as a sequence of `(generator, ±1)` letters.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.blocks.iter().flat_map(|&(g, e)| {
            let sign = if e >= 0 { 1 } else { -1 };
            std::iter::repeat((g, sign)).take(e.unsigned_abs() as usize)
        })
    }

    /// Evaluates the word in a concrete group via a generator-value table.
    pub fn evaluate<G: GroupElement>(&self, table: &[G]) -> G {
        self.blocks
            .iter()
            .fold(G::identity(), |acc, &(g, e)| acc.mul(&table[g].pow(e)))
    }

    /// Renders the word with the given generator names, `1` if empty.
    pub fn display(&self, names: &[String]) -> String {
        if self.blocks.is_empty() {
            return "1".to_string();
        }
        self.blocks
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses whitespace-separated atoms `name`, `name^k`, or `1` against a
    /// generator list.
    pub fn parse(input: &str, names: &[String]) -> Result<GenWord, PresentationError> {
        let mut blocks = Vec::new();
        for atom in input.split_whitespace() {
            if atom == "1" {
                continue;
            }
            let (name, exp) = match atom.split_once('^') {
                None => (atom, 1i64),
                Some((name, exp_str)) => {
                    let exp = exp_str.parse::<i64>().map_err(|_| {
                        PresentationError::MalformedAtom { atom: atom.to_string() }
                    })?;
                    (name, exp)
                }
            };
            let gen = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| PresentationError::UnknownGenerator { name: name.to_string() })?;
            blocks.push((gen, exp));
        }
        Ok(GenWord::from_blocks(blocks))
    }
}

/// A finite presentation: named generators and relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<GenWord>,
}

impl Presentation {
    pub fn new(
        generators: Vec<String>,
        relators: Vec<GenWord>,
    ) -> Result<Presentation, PresentationError> {
        for (i, name) in generators.iter().enumerate() {
            if generators[..i].contains(name) {
                return Err(PresentationError::DuplicateGenerator { name: name.clone() });
            }
        }
        for rel in &relators {
            for &(g, _) in rel.blocks() {
                if g >= generators.len() {
                    return Err(PresentationError::GeneratorIndexOutOfRange { index: g });
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Parses the presentation file format: the first non-empty line lists
    /// the generator names, each further non-empty line is one relator.
    pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or(PresentationError::Empty)?;
        let generators: Vec<String> = header.split_whitespace().map(str::to_string).collect();
        let relators = lines
            .map(|line| GenWord::parse(line, &generators))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(generators, relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GenWord] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|n| n == name)
    }

    pub fn render(&self) -> String {
        let mut out = self.generators.join(" ");
        for rel in &self.relators {
            out.push('\n');
            out.push_str(&rel.display(&self.generators));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("empty presentation text")]
    Empty,
    #[error("duplicate generator `{name}`")]
    DuplicateGenerator { name: String },
    #[error("unknown generator `{name}`")]
    UnknownGenerator { name: String },
    #[error("malformed atom `{atom}`")]
    MalformedAtom { atom: String },
    #[error("generator index {index} out of range")]
    GeneratorIndexOutOfRange { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("generator index {index} out of range")]
    GeneratorOutOfRange { index: usize },
    #[error("designated odd generator has even parity")]
    OddGeneratorIsEven,
    #[error("relator `{relator}` has odd parity, so the kernel does not have index 2")]
    RelatorParityOdd { relator: String },
    #[error("expected {expected} generator names, got {got}")]
    NameCountMismatch { expected: usize, got: usize },
}

/// Which of the two cosets of the index-2 subgroup a Schreier representative
/// lives in: the subgroup itself (`Even`, representative `𝟙`) or its
/// complement (`Odd`, representative the designated odd generator).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coset {
    Even,
    Odd,
}

/// One subgroup generator `ρ(c, g) = c · g · rep(c·g)^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewrittenGenerator {
    pub coset: Coset,
    /// Index of `g` in the input presentation.
    pub base: usize,
    /// Defining word in the input generators.
    pub defining_word: GenWord,
}

/// Output of the index-2 rewriting: the surviving `ρ` generators and the
/// relators `τ(c·r·c^-1)` expressed over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteOutput {
    pub generators: Vec<RewrittenGenerator>,
    pub relators: Vec<GenWord>,
}

impl RewriteOutput {
    /// Index of `ρ(coset, base)` in the derived generator list, if it
    /// survived (the one trivial `ρ` is discarded).
    pub fn generator_index(&self, coset: Coset, base: usize) -> Option<usize> {
        self.generators.iter().position(|g| g.coset == coset && g.base == base)
    }

    /// Packages the output as a presentation under caller-chosen names.
    pub fn to_presentation(&self, names: Vec<String>) -> Result<Presentation, RewriteError> {
        if names.len() != self.generators.len() {
            return Err(RewriteError::NameCountMismatch {
                expected: self.generators.len(),
                got: names.len(),
            });
        }
        Presentation::new(names, self.relators.clone())
            .map_err(|_| RewriteError::NameCountMismatch {
                expected: self.generators.len(),
                got: self.generators.len(),
            })
    }

    /// Systematic display names `rho(1,g)` / `rho(t,g)`.
    pub fn systematic_names(&self, input: &Presentation, odd_generator: usize) -> Vec<String> {
        let t = &input.generators()[odd_generator];
        self.generators
            .iter()
            .map(|g| {
                let base = &input.generators()[g.base];
                match g.coset {
                    Coset::Even => format!("rho(1,{base})"),
                    Coset::Odd => format!("rho({t},{base})"),
                }
            })
            .collect()
    }
}

/// Rewrites a presentation to a presentation of the index-2 kernel of the
/// parity map, using the Schreier transversal `{𝟙, t}` with `t` the
/// designated odd generator.
///
/// The subgroup generators are `ρ(c, g) = c·g·rep(c·g)^-1` over both cosets
/// `c`; exactly `ρ(𝟙, t) = t·t^-1` is trivial and is discarded. Every input
/// relator `r` yields two rewritten relators `τ(𝟙·r·𝟙^-1)` and `τ(t·r·t^-1)`.
pub fn rs_rewrite_index2(
    pres: &Presentation,
    parity: &[bool],
    odd_generator: usize,
) -> Result<RewriteOutput, RewriteError> {
    let gen_count = pres.generators().len();
    if parity.len() != gen_count || odd_generator >= gen_count {
        return Err(RewriteError::GeneratorOutOfRange {
            index: odd_generator.max(parity.len()),
        });
    }
    if !parity[odd_generator] {
        return Err(RewriteError::OddGeneratorIsEven);
    }
    for rel in pres.relators() {
        let odd = rel
            .blocks()
            .iter()
            .filter(|&&(g, e)| parity[g] && e.rem_euclid(2) == 1)
            .count();
        if odd % 2 == 1 {
            return Err(RewriteError::RelatorParityOdd {
                relator: rel.display(pres.generators()),
            });
        }
    }

    let t = odd_generator;
    let mut generators = Vec::new();
    for coset in [Coset::Even, Coset::Odd] {
        for base in 0..gen_count {
            if coset == Coset::Even && base == t {
                continue;
            }
            let mut word = GenWord::identity();
            if coset == Coset::Odd {
                word = word.multiply(&GenWord::single(t, 1));
            }
            word = word.multiply(&GenWord::single(base, 1));
            let result_odd = (coset == Coset::Odd) != parity[base];
            if result_odd {
                word = word.multiply(&GenWord::single(t, -1));
            }
            generators.push(RewrittenGenerator { coset, base, defining_word: word });
        }
    }

    let output = RewriteOutput { generators, relators: Vec::new() };
    let rho_index = |coset: Coset, base: usize| -> Option<usize> {
        if coset == Coset::Even && base == t {
            None
        } else {
            output.generator_index(coset, base)
        }
    };

    let mut relators = Vec::new();
    for coset in [Coset::Even, Coset::Odd] {
        for rel in pres.relators() {
            let conjugated: Vec<(usize, i64)> = match coset {
                Coset::Even => rel.letters().collect(),
                Coset::Odd => std::iter::once((t, 1))
                    .chain(rel.letters())
                    .chain(std::iter::once((t, -1)))
                    .collect(),
            };
            let mut rewritten = Vec::new();
            let mut state_odd = false;
            for (g, e) in conjugated {
                if e == 1 {
                    let c = if state_odd { Coset::Odd } else { Coset::Even };
                    if let Some(idx) = rho_index(c, g) {
                        rewritten.push((idx, 1));
                    }
                    state_odd ^= parity[g];
                } else {
                    state_odd ^= parity[g];
                    let c = if state_odd { Coset::Odd } else { Coset::Even };
                    if let Some(idx) = rho_index(c, g) {
                        rewritten.push((idx, -1));
                    }
                }
            }
            relators.push(GenWord::from_blocks(rewritten));
        }
    }

    Ok(RewriteOutput { relators, ..output })
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coset::Even => write!(f, "1"),
            Coset::Odd => write!(f, "t"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::FreeWord;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn genword_reduction_merges_and_cancels() {
        let w = GenWord::from_blocks([(0, 2), (0, -2), (1, 1), (1, 1), (0, 0)]);
        assert_eq!(w, GenWord::single(1, 2));
        let cascade = GenWord::from_blocks([(0, 1), (1, 1), (1, -1), (0, -1)]);
        assert!(cascade.is_identity());
    }

    #[test]
    fn genword_inverse_and_product() {
        let w = GenWord::from_blocks([(0, 2), (1, -1)]);
        assert!(w.multiply(&w.invert()).is_identity());
        assert_eq!(w.invert(), GenWord::from_blocks([(1, 1), (0, -2)]));
    }

    #[test]
    fn genword_evaluates_in_free_group() {
        use crate::freewords::{Alphabet, Gen};
        let table = [FreeWord::generator(Gen::G1), FreeWord::generator(Gen::G2)];
        let w = GenWord::from_blocks([(0, 1), (1, -2)]);
        assert_eq!(w.evaluate(&table), FreeWord::parse("x y^-2", Alphabet::XY).unwrap());
    }

    #[test]
    fn presentation_parse_and_render_round_trip() {
        let text = "a1 a2 sigma\nsigma^-1 a1 sigma^-1 a1 a1^-1 sigma a1^-1 sigma\na1^2 a2^2 sigma^-2";
        let pres = Presentation::parse(text).unwrap();
        assert_eq!(pres.generators(), &names(&["a1", "a2", "sigma"])[..]);
        assert_eq!(pres.relators().len(), 2);
        let round = Presentation::parse(&pres.render()).unwrap();
        assert_eq!(round, pres);
    }

    #[test]
    fn presentation_rejects_unknown_generator() {
        assert!(matches!(
            Presentation::parse("a\nb^2"),
            Err(PresentationError::UnknownGenerator { .. })
        ));
    }

    #[test]
    fn rewrite_of_free_group_on_one_generator() {
        let pres = Presentation::parse("a").unwrap();
        let out = rs_rewrite_index2(&pres, &[true], 0).unwrap();
        assert_eq!(out.generators.len(), 1);
        assert_eq!(out.generators[0].coset, Coset::Odd);
        assert_eq!(out.generators[0].defining_word, GenWord::single(0, 2));
        assert!(out.relators.is_empty());
    }

    #[test]
    fn rewrite_rejects_odd_parity_relator() {
        let pres = Presentation::parse("a b\na^2 b").unwrap();
        let err = rs_rewrite_index2(&pres, &[false, true], 1).unwrap_err();
        assert!(matches!(err, RewriteError::RelatorParityOdd { .. }));
    }

    #[test]
    fn rewrite_rejects_even_odd_generator() {
        let pres = Presentation::parse("a b").unwrap();
        let err = rs_rewrite_index2(&pres, &[false, true], 0).unwrap_err();
        assert_eq!(err, RewriteError::OddGeneratorIsEven);
    }

    #[test]
    fn rewrite_of_free_abelian_pair() {
        let pres = Presentation::parse("a t\na t a^-1 t^-1").unwrap();
        let out = rs_rewrite_index2(&pres, &[false, true], 1).unwrap();
        let got: Vec<(Coset, usize)> = out.generators.iter().map(|g| (g.coset, g.base)).collect();
        assert_eq!(
            got,
            vec![(Coset::Even, 0), (Coset::Odd, 0), (Coset::Odd, 1)]
        );
        assert_eq!(out.generators[1].defining_word.display(pres.generators()), "t a t^-1");
        assert_eq!(out.generators[2].defining_word.display(pres.generators()), "t^2");
        let sys = out.systematic_names(&pres, 1);
        assert_eq!(sys, vec!["rho(1,a)", "rho(t,a)", "rho(t,t)"]);
    }
}
