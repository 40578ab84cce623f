//! Multisets of colored tokens over a finite color set.
//!
//! A [`Multiset`] stores one count per value of the color set it is typed by,
//! indexed by the value's declaration position. The dense layout keeps the
//! canonical order (declaration order) by construction, so equality and
//! hashing need no normalization pass.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultisetError {
    /// Subtraction would drive a value's count below zero.
    #[error("insufficient tokens: value #{value} has {have}, need {need}")]
    Insufficient { value: usize, have: u64, need: u64 },
}

/// Multiset of color values, one count slot per value of the color set.
///
/// Both operands of every binary operation must be typed by the same color
/// set; the slot vectors then have equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multiset {
    counts: Vec<u64>,
}

impl Multiset {
    /// Empty multiset over a color set with `width` values.
    pub fn empty(width: usize) -> Self {
        Multiset {
            counts: vec![0; width],
        }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        Multiset { counts }
    }

    /// Number of value slots (the color set's cardinality).
    pub fn width(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, value: usize) -> u64 {
        self.counts[value]
    }

    pub fn set_count(&mut self, value: usize, count: u64) {
        self.counts[value] = count;
    }

    /// Total number of tokens.
    pub fn size(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Nonzero entries as `(value index, count)`, in value declaration order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Pointwise sum. Counts are bounded 64-bit integers; overflow is a hard
    /// error.
    pub fn add(&self, other: &Multiset) -> Multiset {
        debug_assert_eq!(self.width(), other.width());
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_add(b).expect("token count overflow"))
            .collect();
        Multiset { counts }
    }

    /// Pointwise difference; fails if any count would underflow.
    pub fn subtract(&self, other: &Multiset) -> Result<Multiset, MultisetError> {
        debug_assert_eq!(self.width(), other.width());
        let mut counts = Vec::with_capacity(self.counts.len());
        for (value, (&a, &b)) in self.counts.iter().zip(&other.counts).enumerate() {
            match a.checked_sub(b) {
                Some(c) => counts.push(c),
                None => {
                    return Err(MultisetError::Insufficient {
                        value,
                        have: a,
                        need: b,
                    })
                }
            }
        }
        Ok(Multiset { counts })
    }

    /// True iff `other` is pointwise ≤ `self`.
    pub fn contains(&self, other: &Multiset) -> bool {
        debug_assert_eq!(self.width(), other.width());
        self.counts.iter().zip(&other.counts).all(|(&a, &b)| b <= a)
    }
}
