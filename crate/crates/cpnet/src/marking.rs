//! Markings: one multiset of tokens per place.
//!
//! The per-place vector is parallel to the net's place declaration order and
//! each multiset is dense over its color set's value order, so the stored
//! form is already canonical: two markings are equal iff their
//! representations are identical, and hashing needs no extra pass.

use crate::multiset::Multiset;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking {
    per_place: Vec<Multiset>,
}

impl Marking {
    pub fn new(per_place: Vec<Multiset>) -> Self {
        Marking { per_place }
    }

    pub fn place(&self, index: usize) -> &Multiset {
        &self.per_place[index]
    }

    pub fn place_mut(&mut self, index: usize) -> &mut Multiset {
        &mut self.per_place[index]
    }

    pub fn places(&self) -> &[Multiset] {
        &self.per_place
    }

    /// Total tokens across all places.
    pub fn size(&self) -> u64 {
        self.per_place.iter().map(Multiset::size).sum()
    }

    /// Canonicalization is the identity on this representation; kept as an
    /// explicit operation so callers can state intent.
    pub fn canonical(&self) -> Marking {
        self.clone()
    }
}
