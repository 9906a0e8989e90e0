//! Homotopy classes of self-maps as integer data.
//!
//! A self-map of the torus is classified by the 2×2 integer matrix of the
//! induced map on the fundamental group; every matrix occurs. A self-map of
//! the Klein bottle is classified (up to the conjugacy built into free
//! homotopy) by the pair of images of (1,0) and (0,1) in `Z⋊Z`, constrained
//! by the defining relation of the group. Valid pairs split into two shapes,
//! type A and type B, and each conjugacy class contains a unique normal
//! form, computed here together with an explicit conjugator.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::group::GroupElement;
use crate::klein::ZxZ;

/// A self-map homotopy class of the torus: the integer matrix of the induced
/// map on `Z²`. The columns are the images of the basis,
/// `(1,0) ↦ (b11, b21)` and `(0,1) ↦ (b12, b22)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusClass {
    pub b11: i64,
    pub b12: i64,
    pub b21: i64,
    pub b22: i64,
}

impl TorusClass {
    pub fn new(b11: i64, b12: i64, b21: i64, b22: i64) -> TorusClass {
        TorusClass { b11, b12, b21, b22 }
    }

    /// The image of `(1, 0)`.
    pub fn image10(&self) -> (i64, i64) {
        (self.b11, self.b21)
    }

    /// The image of `(0, 1)`.
    pub fn image01(&self) -> (i64, i64) {
        (self.b12, self.b22)
    }
}

impl fmt::Display for TorusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.b11, self.b12, self.b21, self.b22)
    }
}

/// A homomorphism `Z⋊Z → Z⋊Z`, stored as the images of (1,0) and (0,1).
/// Only pairs satisfying the defining relation are constructible, so every
/// value of this type is a genuine homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KleinHom {
    img10: ZxZ,
    img01: ZxZ,
}

/// Rejection of an image pair that does not define a homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error(
    "the images h(1,0) = {img10}, h(0,1) = {img01} do not define a homomorphism: \
     the defining relation maps to {anti_commutator} instead of (0, 0)"
)]
pub struct InvalidHom {
    pub img10: ZxZ,
    pub img01: ZxZ,
    pub anti_commutator: ZxZ,
}

impl KleinHom {
    /// Accepts the pair iff the image of the defining relation,
    /// `h(1,0)·h(0,1)·h(1,0)·h(0,1)^-1`, is trivial.
    pub fn validate(img10: ZxZ, img01: ZxZ) -> Result<KleinHom, InvalidHom> {
        let anti_commutator = img10.mul(&img01).mul(&img10).mul(&img01.inverse());
        if anti_commutator == ZxZ::identity() {
            Ok(KleinHom { img10, img01 })
        } else {
            Err(InvalidHom { img10, img01, anti_commutator })
        }
    }

    pub fn img10(&self) -> ZxZ {
        self.img10
    }

    pub fn img01(&self) -> ZxZ {
        self.img01
    }

    /// Applies the homomorphism to an arbitrary element, using the normal
    /// form `(r, s) = (1,0)^r (0,1)^s`.
    pub fn apply(&self, g: ZxZ) -> ZxZ {
        self.img10.pow(g.r).mul(&self.img01.pow(g.s))
    }

    /// The conjugated homomorphism `g ↦ c·h(g)·c^-1`; conjugation preserves
    /// validity.
    pub fn conjugate(&self, c: ZxZ) -> KleinHom {
        KleinHom {
            img10: self.img10.conjugated_by(&c),
            img01: self.img01.conjugated_by(&c),
        }
    }
}

impl fmt::Display for KleinHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}),({},{})",
            self.img10.r, self.img10.s, self.img01.r, self.img01.s
        )
    }
}

/// The two shapes of valid homomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KleinHomType {
    /// `h(1,0) = (r1, 0)` and `h(0,1) = (r2, 2s+1)`.
    A { r1: i64, r2: i64, s: i64 },
    /// `h(1,0) = (0, 0)` and `h(0,1) = (r, 2s)`.
    B { r: i64, s: i64 },
}

impl KleinHomType {
    pub fn is_a(&self) -> bool {
        matches!(self, KleinHomType::A { .. })
    }
}

/// Classifies a valid homomorphism: type A iff the second coordinate of
/// `h(0,1)` is odd, type B otherwise (validity then forces `h(1,0) = (0,0)`).
pub fn klein_hom_type(h: &KleinHom) -> KleinHomType {
    let (img10, img01) = (h.img10(), h.img01());
    if img01.s.rem_euclid(2) == 1 {
        debug_assert_eq!(img10.s, 0);
        KleinHomType::A { r1: img10.r, r2: img01.r, s: img01.s.div_euclid(2) }
    } else {
        debug_assert_eq!(img10, ZxZ::identity());
        KleinHomType::B { r: img01.r, s: img01.s.div_euclid(2) }
    }
}

/// Canonical conjugacy representatives: type A has images `(r, 0)` and
/// `(i, 2s+1)` with `r ≥ 0` and `i ∈ {0, 1}`; type B has images `(0, 0)`
/// and `(r, 2s)` with `r ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalShape {
    A { r: i64, i: i64, s: i64 },
    B { r: i64, s: i64 },
}

impl NormalShape {
    /// The homomorphism with exactly the normal-form images.
    pub fn hom(&self) -> KleinHom {
        match *self {
            NormalShape::A { r, i, s } => {
                KleinHom { img10: ZxZ::new(r, 0), img01: ZxZ::new(i, 2 * s + 1) }
            }
            NormalShape::B { r, s } => {
                KleinHom { img10: ZxZ::identity(), img01: ZxZ::new(r, 2 * s) }
            }
        }
    }

    pub fn is_a(&self) -> bool {
        matches!(self, NormalShape::A { .. })
    }
}

impl fmt::Display for NormalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NormalShape::A { r, i, s } => write!(f, "type A (r={r}, i={i}, s={s})"),
            NormalShape::B { r, s } => write!(f, "type B (r={r}, s={s})"),
        }
    }
}

/// The normal form of a homomorphism together with the conjugator carrying
/// the original onto it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KleinNormalForm {
    pub shape: NormalShape,
    pub conjugator: ZxZ,
}

/// Computes the conjugacy normal form. Conjugation by `(a, b)` sends type-A
/// images `(r1, 0), (r2, 2s+1)` to `((−1)^b r1, 0), (2a + (−1)^b r2, 2s+1)`
/// and type-B images to `(0,0), ((−1)^b r, 2s)`, so a single conjugator
/// fixes the sign of the first parameter and reduces the second
/// modulo 2 (type A) or to its absolute value (type B).
pub fn klein_normal_form(h: &KleinHom) -> KleinNormalForm {
    let conjugator = match klein_hom_type(h) {
        KleinHomType::A { r1, r2, .. } => match (r1 >= 0, r2.rem_euclid(2) == 0) {
            (true, true) => ZxZ::new(-r2 / 2, 0),
            (false, true) => ZxZ::new(r2 / 2, 1),
            (true, false) => ZxZ::new((-r2 + 1) / 2, 0),
            (false, false) => ZxZ::new((r2 + 1) / 2, 1),
        },
        KleinHomType::B { r, .. } => {
            if r >= 0 {
                ZxZ::identity()
            } else {
                ZxZ::new(0, 1)
            }
        }
    };
    let conjugated = h.conjugate(conjugator);
    let shape = match klein_hom_type(&conjugated) {
        KleinHomType::A { r1, r2, s } => {
            debug_assert!(r1 >= 0 && (r2 == 0 || r2 == 1));
            NormalShape::A { r: r1, i: r2, s }
        }
        KleinHomType::B { r, s } => {
            debug_assert!(r >= 0);
            NormalShape::B { r, s }
        }
    };
    KleinNormalForm { shape, conjugator }
}

/// True iff both images lie in `{(r, s) : s even}`, the image of the
/// inclusion induced by the torus double cover; equivalently, iff the
/// homomorphism is type B.
pub fn lifts_to_torus(h: &KleinHom) -> bool {
    h.img10().s.rem_euclid(2) == 0 && h.img01().s.rem_euclid(2) == 0
}

/// Parse errors for the class/hom text forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassParseError {
    #[error("expected a matrix of the form `b11,b12;b21,b22`, got `{input}`")]
    TorusShape { input: String },
    #[error("expected an image pair of the form `(r1,s1),(r2,s2)`, got `{input}`")]
    KleinShape { input: String },
    #[error("bad integer `{field}`")]
    Integer { field: String },
    #[error(transparent)]
    Invalid(#[from] InvalidHom),
}

fn parse_int(text: &str) -> Result<i64, ClassParseError> {
    let trimmed = text.trim();
    trimmed.parse().map_err(|_| ClassParseError::Integer { field: trimmed.to_string() })
}

impl FromStr for TorusClass {
    type Err = ClassParseError;

    fn from_str(s: &str) -> Result<TorusClass, ClassParseError> {
        let shape = || ClassParseError::TorusShape { input: s.to_string() };
        let (row1, row2) = s.split_once(';').ok_or_else(shape)?;
        let (b11, b12) = row1.split_once(',').ok_or_else(shape)?;
        let (b21, b22) = row2.split_once(',').ok_or_else(shape)?;
        Ok(TorusClass::new(
            parse_int(b11)?,
            parse_int(b12)?,
            parse_int(b21)?,
            parse_int(b22)?,
        ))
    }
}

impl FromStr for KleinHom {
    type Err = ClassParseError;

    fn from_str(s: &str) -> Result<KleinHom, ClassParseError> {
        let shape = || ClassParseError::KleinShape { input: s.to_string() };
        let rest = s.trim().strip_prefix('(').ok_or_else(shape)?;
        let (first, rest) = rest.split_once(')').ok_or_else(shape)?;
        let rest = rest.trim_start().strip_prefix(',').ok_or_else(shape)?;
        let second = rest
            .trim_start()
            .strip_prefix('(')
            .and_then(|r| r.trim_end().strip_suffix(')'))
            .ok_or_else(shape)?;
        let parse_zxz = |group: &str| -> Result<ZxZ, ClassParseError> {
            let (r, s) = group.split_once(',').ok_or_else(shape)?;
            Ok(ZxZ::new(parse_int(r)?, parse_int(s)?))
        };
        Ok(KleinHom::validate(parse_zxz(first)?, parse_zxz(second)?)?)
    }
}
