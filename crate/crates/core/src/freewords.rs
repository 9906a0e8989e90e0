//! Reduced words in the free group of rank two.
//!
//! Every other module computes with elements of `F(g1, g2)` in one guise or
//! another: the torus model names the generators `x, y`, the Klein bottle
//! model names them `u, v`. The carrier is the same: a freely reduced
//! sequence of signed letters. Structural equality of [`FreeWord`] values is
//! equality in the free group.

use std::fmt;

use thiserror::Error;

/// One of the two free-group generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    G1,
    G2,
}

/// Sign of a single letter, `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A single signed letter, `g` or `g^-1`.
///
/// The derived ordering is `g1 < g1^-1 < g2 < g2^-1`, the order used by
/// [`FreeWord::enumerate_reduced`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: Gen, sign: Sign) -> Letter {
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: self.sign.flip() }
    }

    /// The four letters in enumeration order.
    pub const ALL: [Letter; 4] = [
        Letter { gen: Gen::G1, sign: Sign::Plus },
        Letter { gen: Gen::G1, sign: Sign::Minus },
        Letter { gen: Gen::G2, sign: Sign::Plus },
        Letter { gen: Gen::G2, sign: Sign::Minus },
    ];
}

/// A freely reduced word over `{g1, g2}`; the empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    /// The empty word `1`.
    pub fn identity() -> FreeWord {
        FreeWord { letters: Vec::new() }
    }

    /// Freely reduces an arbitrary letter sequence. Idempotent.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> FreeWord {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    /// The one-letter word `g`.
    pub fn generator(gen: Gen) -> FreeWord {
        FreeWord { letters: vec![Letter::new(gen, Sign::Plus)] }
    }

    /// The word `g^k` (the identity for `k = 0`).
    pub fn gen_pow(gen: Gen, k: i64) -> FreeWord {
        let sign = if k >= 0 { Sign::Plus } else { Sign::Minus };
        FreeWord { letters: vec![Letter::new(gen, sign); k.unsigned_abs() as usize] }
    }

    /// Builds `g1^k1 · g2^k2 · ...` from exponent blocks.
    pub fn from_blocks(blocks: &[(Gen, i64)]) -> FreeWord {
        let mut w = FreeWord::identity();
        for &(g, k) in blocks {
            w = w.multiply(&FreeWord::gen_pow(g, k));
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced product `self · other`. Cancellation can only happen at the
    /// seam, so the inputs are scanned once.
    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.letters.clone();
        let mut rest = other.letters.iter();
        for &l in rest.by_ref() {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
                break;
            }
        }
        out.extend(rest.copied());
        FreeWord { letters: out }
    }

    /// Group inverse: reversed order, flipped signs.
    pub fn invert(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// The substitution `w(g1^-1, g2^-1)`: every sign flipped in place.
    ///
    /// Flipping all signs preserves free reducedness, and the map is an
    /// involution and a group automorphism.
    pub fn invert_letters(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().map(|l| l.inverse()).collect() }
    }

    /// The exponent sum `|w|_g`.
    pub fn exponent_sum(&self, gen: Gen) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.sign.value()).sum()
    }

    /// Number of letters of the reduced word.
    pub fn word_length(&self) -> usize {
        self.letters.len()
    }

    /// Whether `w = invert(invert_letters(w))`, i.e. the letter sequence
    /// reads the same forwards and backwards.
    pub fn is_palindrome(&self) -> bool {
        let n = self.letters.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    /// Raises the word to an integer power.
    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k >= 0 { self.clone() } else { self.invert() };
        let mut out = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// All reduced words of length at most `max_length`, each exactly once,
    /// in length-then-lexicographic order with `g1 < g1^-1 < g2 < g2^-1`.
    ///
    /// There are `4·3^(L-1)` words of each exact length `L ≥ 1`, so the
    /// stream has `1 + 2·(3^max_length - 1)` entries in total.
    pub fn enumerate_reduced(max_length: usize) -> ReducedWords {
        ReducedWords { next_len: 0, max_length, word: Vec::new(), started: false }
    }

    /// Renders the word in the text format: run-length-collapsed atoms such
    /// as `x^3 y^-2 x`, or `1` for the identity.
    pub fn display(&self, alphabet: Alphabet) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut atoms: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 0usize;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let name = alphabet.name(l.gen);
            let exp = l.sign.value() * run as i64;
            if exp == 1 {
                atoms.push(name.to_string());
            } else {
                atoms.push(format!("{name}^{exp}"));
            }
            i += run;
        }
        atoms.join(" ")
    }

    /// Parses the text format. Unreduced input is accepted and reduced.
    pub fn parse(input: &str, alphabet: Alphabet) -> Result<FreeWord, WordParseError> {
        let mut letters: Vec<Letter> = Vec::new();
        for atom in input.split_whitespace() {
            if atom == "1" {
                continue;
            }
            let (name, exp) = match atom.split_once('^') {
                None => (atom, 1i64),
                Some((name, exp_str)) => {
                    let exp = exp_str
                        .parse::<i64>()
                        .map_err(|_| WordParseError::MalformedExponent { atom: atom.to_string() })?;
                    (name, exp)
                }
            };
            let gen = alphabet
                .gen_for(name)
                .ok_or_else(|| WordParseError::UnknownGenerator { atom: atom.to_string() })?;
            let sign = if exp >= 0 { Sign::Plus } else { Sign::Minus };
            letters.extend(std::iter::repeat(Letter::new(gen, sign)).take(exp.unsigned_abs() as usize));
        }
        Ok(FreeWord::reduce(letters))
    }
}

/// Names for the two generators when printing and parsing words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub g1: &'static str,
    pub g2: &'static str,
}

impl Alphabet {
    /// The torus names `x, y`.
    pub const XY: Alphabet = Alphabet { g1: "x", g2: "y" };
    /// The Klein bottle names `u, v`.
    pub const UV: Alphabet = Alphabet { g1: "u", g2: "v" };

    pub fn name(&self, gen: Gen) -> &'static str {
        match gen {
            Gen::G1 => self.g1,
            Gen::G2 => self.g2,
        }
    }

    pub fn gen_for(&self, name: &str) -> Option<Gen> {
        if name == self.g1 {
            Some(Gen::G1)
        } else if name == self.g2 {
            Some(Gen::G2)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("unknown generator in atom `{atom}`")]
    UnknownGenerator { atom: String },
    #[error("malformed exponent in atom `{atom}`")]
    MalformedExponent { atom: String },
}

/// Iterator over reduced words in length-then-lexicographic order.
pub struct ReducedWords {
    next_len: usize,
    max_length: usize,
    word: Vec<Letter>,
    started: bool,
}

impl ReducedWords {
    /// Smallest reduced word of exactly `len` letters: `g1^len`.
    fn first_of_length(&mut self, len: usize) {
        self.word.clear();
        self.word.resize(len, Letter::new(Gen::G1, Sign::Plus));
    }

    /// Advances to the lexicographic successor of the same length, keeping
    /// the no-cancellation constraint. Returns false when exhausted.
    fn advance_same_length(&mut self) -> bool {
        let mut pos = self.word.len();
        'carry: while pos > 0 {
            pos -= 1;
            let current = self.word[pos];
            let after = Letter::ALL.iter().copied().skip_while(|&l| l != current).skip(1);
            for cand in after {
                if pos == 0 || cand != self.word[pos - 1].inverse() {
                    self.word[pos] = cand;
                    for i in pos + 1..self.word.len() {
                        let prev = self.word[i - 1];
                        let smallest = Letter::ALL
                            .iter()
                            .copied()
                            .find(|&l| l != prev.inverse())
                            .expect("three of four letters always remain");
                        self.word[i] = smallest;
                    }
                    return true;
                }
            }
            continue 'carry;
        }
        false
    }
}

impl Iterator for ReducedWords {
    type Item = FreeWord;

    fn next(&mut self) -> Option<FreeWord> {
        if self.next_len > self.max_length {
            return None;
        }
        if !self.started {
            self.started = true;
            self.first_of_length(self.next_len);
        } else if !self.advance_same_length() {
            self.next_len += 1;
            if self.next_len > self.max_length {
                return None;
            }
            self.first_of_length(self.next_len);
        }
        Some(FreeWord { letters: self.word.clone() })
    }
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word.display(self.alphabet))
    }
}

/// Borrowed display adapter tying a word to an alphabet.
pub struct WordDisplay<'a> {
    pub word: &'a FreeWord,
    pub alphabet: Alphabet,
}

/// Parse/format errors for the `(w; m, n)` braid text form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidParseError {
    #[error("expected a braid of the form `(w; m, n)` or `(w; m, n)·s`, got `{input}`")]
    Shape { input: String },
    #[error("bad word: {0}")]
    Word(#[from] WordParseError),
    #[error("bad integer coordinate `{field}`")]
    Coordinate { field: String },
}

/// Parses the shared braid text form `(w; m, n)` with an optional `·s` (or
/// `*s`) swap marker, returning the word, both coordinates, and the marker.
pub(crate) fn parse_braid_text(
    input: &str,
    alphabet: Alphabet,
) -> Result<(FreeWord, i64, i64, bool), BraidParseError> {
    let shape = || BraidParseError::Shape { input: input.to_string() };
    let trimmed = input.trim();
    let (body, sigma) = match trimmed.strip_suffix("·s").or_else(|| trimmed.strip_suffix("*s")) {
        Some(body) => (body.trim_end(), true),
        None => (trimmed, false),
    };
    let body = body.strip_prefix('(').ok_or_else(shape)?.strip_suffix(')').ok_or_else(shape)?;
    let (word_part, coords) = body.split_once(';').ok_or_else(shape)?;
    let (m_part, n_part) = coords.split_once(',').ok_or_else(shape)?;
    let word = FreeWord::parse(word_part, alphabet)?;
    let m = m_part
        .trim()
        .parse::<i64>()
        .map_err(|_| BraidParseError::Coordinate { field: m_part.trim().to_string() })?;
    let n = n_part
        .trim()
        .parse::<i64>()
        .map_err(|_| BraidParseError::Coordinate { field: n_part.trim().to_string() })?;
    Ok((word, m, n, sigma))
}
