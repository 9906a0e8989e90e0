//! A minimal group-element interface shared by all the models.
//!
//! Presentation relators and generator tables are checked by evaluating
//! formal words over named generators in whichever concrete group is under
//! test; this trait is the evaluation target.

/// An element of a group with decidable equality.
pub trait GroupElement: Clone + PartialEq {
    fn identity() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;

    /// Integer power by repeated multiplication.
    fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `by · self · by^-1`.
    fn conjugated_by(&self, by: &Self) -> Self {
        by.mul(self).mul(&by.inverse())
    }
}

/// The commutator `[a, b] = a·b·a^-1·b^-1`.
pub fn commutator<G: GroupElement>(a: &G, b: &G) -> G {
    a.mul(b).mul(&a.inverse()).mul(&b.inverse())
}

/// Product of a slice of elements, left to right.
pub fn product<G: GroupElement>(factors: &[G]) -> G {
    factors.iter().fold(G::identity(), |acc, f| acc.mul(f))
}

impl GroupElement for crate::freewords::FreeWord {
    fn identity() -> Self {
        crate::freewords::FreeWord::identity()
    }

    fn mul(&self, other: &Self) -> Self {
        self.multiply(other)
    }

    fn inverse(&self) -> Self {
        self.invert()
    }
}
