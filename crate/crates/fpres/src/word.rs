//! Free-group words over signed generator letters.
//!
//! A letter is a nonzero `i32`: `k` stands for the `k`-th generator and `-k`
//! for its inverse (generators are numbered from 1). Words compose
//! left-to-right, so `[1, 2]` reads "generator 1, then generator 2". A word
//! is *reduced* when it contains no adjacent pair `g, -g`; the empty word is
//! the identity. Words are immutable values: every operation returns a fresh
//! word and never mutates its input.

use std::fmt;
use thiserror::Error;

/// A signed generator letter. Positive = generator, negative = inverse.
pub type Letter = i32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("letter 0 is not a valid generator reference")]
    ZeroLetter,
    #[error("substitution replacement contains the substituted generator {0}")]
    ReplacementContainsTarget(usize),
}

/// A word in a free group, stored as its letter sequence.
///
/// Construction does not reduce; call [`Word::reduced`] for the normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word (group identity).
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Builds a word from raw letters, rejecting the invalid letter 0.
    pub fn from_letters(letters: impl Into<Vec<Letter>>) -> Result<Self, WordError> {
        let letters = letters.into();
        if letters.iter().any(|&l| l == 0) {
            return Err(WordError::ZeroLetter);
        }
        Ok(Word { letters })
    }

    /// Single-letter word for generator `index` (1-based).
    pub fn generator(index: usize) -> Self {
        Word { letters: vec![index as Letter] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index referenced by the word (0 for the empty word).
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    /// Free reduction: cancels adjacent `g, -g` pairs until none remain.
    ///
    /// The result is the unique reduced form; reduction is idempotent and
    /// never increases length.
    pub fn reduced(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    /// Group inverse: letterwise negation in reverse order, then reduced.
    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&l| -l).collect() }.reduced()
    }

    /// Product of two words, freely reduced.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }.reduced()
    }

    /// `k`-th power of the word (freely reduced).
    pub fn repeat(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }.reduced()
    }

    /// Cyclic reduction. Returns `(core, conjugator)` with
    /// `self = conjugator * core * conjugator^-1` in the free group and
    /// `core` cyclically reduced.
    pub fn cyclically_reduced(&self) -> (Word, Word) {
        let mut core = self.reduced().letters;
        let mut conjugator = Vec::new();
        while core.len() >= 2 && core[0] == -core[core.len() - 1] {
            conjugator.push(core[0]);
            core.pop();
            core.remove(0);
        }
        (Word { letters: core }, Word { letters: conjugator })
    }

    /// Replaces every occurrence of generator `index` by `replacement`
    /// (inverse occurrences by the inverse replacement) and reduces.
    ///
    /// Rejects a replacement that itself mentions `index`: the substitution
    /// must be acyclic.
    pub fn substitute(&self, index: usize, replacement: &Word) -> Result<Word, WordError> {
        if replacement.letters.iter().any(|l| l.unsigned_abs() as usize == index) {
            return Err(WordError::ReplacementContainsTarget(index));
        }
        let inv = replacement.inverse();
        let mut letters = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if l.unsigned_abs() as usize == index {
                let w = if l > 0 { replacement } else { &inv };
                letters.extend_from_slice(&w.letters);
            } else {
                letters.push(l);
            }
        }
        Ok(Word { letters }.reduced())
    }

    /// Signed count of occurrences of generator `index`.
    pub fn exponent_sum(&self, index: usize) -> i64 {
        self.letters
            .iter()
            .map(|&l| {
                if l.unsigned_abs() as usize == index {
                    l.signum() as i64
                } else {
                    0
                }
            })
            .sum()
    }

    /// Left rotation by `k` letters: `w[k..] ++ w[..k]`. Not reduced.
    pub fn rotated(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// True when the reduced word is a pure power `g^k` of a single
    /// generator; returns `(index, k)` with `k` signed.
    pub fn as_pure_power(&self) -> Option<(usize, i64)> {
        let r = self.reduced();
        let first = *r.letters.first()?;
        if r.letters.iter().any(|&l| l != first) {
            return None;
        }
        Some((first.unsigned_abs() as usize, first.signum() as i64 * r.letters.len() as i64))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[Letter]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn reduce_cancels_adjacent_inverse_pair() {
        assert_eq!(w(&[1, -1]).reduced(), Word::empty());
    }

    #[test]
    fn reduce_keeps_already_reduced_word() {
        assert_eq!(w(&[-1, 2, -3]).reduced(), w(&[-1, 2, -3]));
    }

    #[test]
    fn reduce_cancels_interior_pair() {
        assert_eq!(w(&[1, 2, -2, 1]).reduced(), w(&[1, 1]));
    }

    #[test]
    fn inverse_reverses_and_negates() {
        assert_eq!(w(&[1, 2]).inverse(), w(&[-2, -1]));
        assert_eq!(Word::empty().inverse(), Word::empty());
        assert_eq!(w(&[-1, 2, -3]).inverse(), w(&[3, -2, 1]));
    }

    #[test]
    fn cyclic_reduction_peels_conjugator() {
        assert_eq!(w(&[1, 2, -1]).cyclically_reduced(), (w(&[2]), w(&[1])));
        let comm = w(&[2, 1, -2, -1]);
        assert_eq!(comm.cyclically_reduced(), (comm.clone(), Word::empty()));
        assert_eq!(w(&[-2, 1, 2]).cyclically_reduced(), (w(&[1]), w(&[-2])));
    }

    #[test]
    fn substitute_rewrites_inverses_too() {
        // x2^-1 x3^-1 x2^-1 x3 x2 x3 with x3 -> x1^-1 x2
        let r2 = w(&[-2, -3, -2, 3, 2, 3]);
        let got = r2.substitute(3, &w(&[-1, 2])).unwrap();
        assert_eq!(got, w(&[-2, -2, 1, -2, -1, 2, 2, -1, 2]));
    }

    #[test]
    fn substitute_direct_and_absent() {
        assert_eq!(w(&[3]).substitute(3, &w(&[-1, 2])).unwrap(), w(&[-1, 2]));
        assert_eq!(w(&[1, 2]).substitute(3, &w(&[1])).unwrap(), w(&[1, 2]));
    }

    #[test]
    fn substitute_rejects_cyclic_replacement() {
        assert_eq!(
            w(&[1]).substitute(1, &w(&[2, 1])),
            Err(WordError::ReplacementContainsTarget(1))
        );
    }

    #[test]
    fn exponent_sums_of_commutator_style_relator() {
        let r1 = w(&[1, 2, 1, -2, -1, -2]);
        assert_eq!(r1.exponent_sum(1), 1);
        assert_eq!(r1.exponent_sum(2), -1);
        assert_eq!(Word::empty().exponent_sum(1), 0);
    }

    #[test]
    fn zero_letter_is_rejected() {
        assert_eq!(Word::from_letters(vec![1, 0]), Err(WordError::ZeroLetter));
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(w(&[1, 1]).as_pure_power(), Some((1, 2)));
        assert_eq!(w(&[-2, -2, -2]).as_pure_power(), Some((2, -3)));
        assert_eq!(w(&[1, 2]).as_pure_power(), None);
        assert_eq!(Word::empty().as_pure_power(), None);
    }
}
