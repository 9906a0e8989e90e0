//! Exact algebraic models of the 2-string braid groups of the torus and the
//! Klein bottle, together with a decision procedure for the Borsuk-Ulam
//! property of homotopy classes of self-maps of those surfaces.
//!
//! The pure braid group of the torus is modelled as `F(x,y) ⊕ Z ⊕ Z` and the
//! pure braid group of the Klein bottle as `F(u,v) ⋊ (Z⋊Z)`; the full braid
//! groups are index-2 extensions of these by the generator swap `σ`. On top
//! of the models sit:
//!
//! * classification of homotopy classes (integer matrices for the torus,
//!   pairs of `Z⋊Z` elements for the Klein bottle) and their normal forms,
//! * the decision procedure itself, which either certifies the Borsuk-Ulam
//!   property or constructs an explicit pair of braids witnessing its
//!   failure,
//! * an oracle layer that re-verifies the decisions by bounded exhaustive
//!   search and re-checks every presentation relation and action formula
//!   against the models.

pub mod bu;
pub mod freewords;
pub mod group;
pub mod homclass;
pub mod klein;
pub mod oracle;
pub mod presentation;
pub mod report;
pub mod torus;

#[cfg(test)]
pub(crate) mod testutil;

pub use bu::{Decision, InvolutionId, KleinWitness, TorusWitness, Witness};
pub use freewords::{Alphabet, BraidParseError, FreeWord, Gen, Letter, Sign};
pub use group::GroupElement;
pub use homclass::{KleinHom, KleinHomType, KleinNormalForm, NormalShape, TorusClass};
pub use klein::{KleinBraid, KleinPureBraid, ZxZ};
pub use oracle::SearchBounds;
pub use presentation::Presentation;
pub use report::{CheckStatus, RelationCheck};
pub use torus::{TorusBraid, TorusPureBraid};
