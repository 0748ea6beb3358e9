//! Group presentations: named generators plus relator words.
//!
//! A relator `r` means `r = 1`; an equation `L = R` is stored as the single
//! reduced word `L * R^-1`. Relators are kept in freely reduced form;
//! generator indices are consecutive from 1 and symbols are unique.

use crate::word::Word;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("generator symbol must be nonempty and printable")]
    BadSymbol,
    #[error("duplicate generator symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("relator {relator} references generator {index} but only {count} are declared")]
    LetterOutOfRange { relator: usize, index: usize, count: usize },
}

/// A named generator. `index` is its 1-based position in the presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    index: usize,
    symbol: String,
}

impl Generator {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }
}

/// A finite presentation `< generators | relators >`.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
    provenance: Option<String>,
}

impl Presentation {
    /// Builds a presentation, reducing every relator on the way in.
    pub fn new<S: Into<String>>(
        symbols: impl IntoIterator<Item = S>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        let mut generators = Vec::new();
        for (i, s) in symbols.into_iter().enumerate() {
            let symbol: String = s.into();
            if symbol.is_empty() || symbol.chars().any(|c| c.is_whitespace() || c.is_control()) {
                return Err(PresentationError::BadSymbol);
            }
            if generators.iter().any(|g: &Generator| g.symbol == symbol) {
                return Err(PresentationError::DuplicateSymbol(symbol));
            }
            generators.push(Generator { index: i + 1, symbol });
        }
        let relators: Vec<Word> = relators.iter().map(Word::reduced).collect();
        for (i, r) in relators.iter().enumerate() {
            let m = r.max_generator();
            if m > generators.len() {
                return Err(PresentationError::LetterOutOfRange {
                    relator: i + 1,
                    index: m,
                    count: generators.len(),
                });
            }
        }
        Ok(Presentation { generators, relators, provenance: None })
    }

    /// Reads a presentation off handle data: one generator per 1-handle
    /// (carved sphere) and one relator per 2-handle attaching word. The
    /// attaching words must be supplied explicitly as words in the
    /// 1-handle generators.
    pub fn from_attaching_words<S: Into<String>>(
        one_handle_symbols: impl IntoIterator<Item = S>,
        attaching_words: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        Self::new(one_handle_symbols, attaching_words)
    }

    pub fn with_provenance(mut self, note: impl Into<String>) -> Self {
        self.provenance = Some(note.into());
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// 1-based index of the generator with the given symbol.
    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.generators.iter().find(|g| g.symbol == symbol).map(|g| g.index)
    }

    /// Symbol of the generator with 1-based index `index`.
    pub fn symbol(&self, index: usize) -> Option<&str> {
        self.generators.get(index - 1).map(|g| g.symbol.as_str())
    }

    pub fn symbols(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.symbol.as_str()).collect()
    }

    /// Renders a word using this presentation's symbols, collapsing letter
    /// runs to powers (`a a a` prints as `a^3`) and a whole-word repetition
    /// to a parenthesized power (`a b a b` prints as `(a b)^2`). The empty
    /// word prints as `1`.
    pub fn format_word(&self, word: &Word) -> String {
        let letters = word.letters();
        if letters.is_empty() {
            return "1".to_string();
        }
        // Smallest period that tiles the whole word, if it repeats at least twice.
        let n = letters.len();
        for p in 1..n {
            if n % p == 0 && n / p >= 2 && (p..n).all(|i| letters[i] == letters[i - p]) {
                let inner = Word::from_letters(letters[..p].to_vec()).expect("valid letters");
                let inner_str = self.format_runs(inner.letters());
                return format!("({})^{}", inner_str, n / p);
            }
        }
        self.format_runs(letters)
    }

    fn format_runs(&self, letters: &[i32]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i + 1;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let count = (j - i) as i64 * l.signum() as i64;
            let sym = self
                .symbol(l.unsigned_abs() as usize)
                .map(str::to_owned)
                .unwrap_or_else(|| format!("g{}", l.unsigned_abs()));
            if count == 1 {
                parts.push(sym);
            } else {
                parts.push(format!("{}^{}", sym, count));
            }
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.symbols().join(", ");
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", gens, rels.join(", "))
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn relators_are_stored_reduced() {
        let p = Presentation::new(["a", "b"], vec![w(&[1, 2, -2, 1])]).unwrap();
        assert_eq!(p.relators()[0], w(&[1, 1]));
    }

    #[test]
    fn out_of_range_letter_is_rejected() {
        let err = Presentation::new(["a"], vec![w(&[2])]).unwrap_err();
        assert_eq!(err, PresentationError::LetterOutOfRange { relator: 1, index: 2, count: 1 });
    }

    #[test]
    fn duplicate_symbols_are_rejected() {
        assert_eq!(
            Presentation::new(["a", "a"], vec![]).unwrap_err(),
            PresentationError::DuplicateSymbol("a".into())
        );
    }

    #[test]
    fn display_compresses_runs_and_powers() {
        let p = Presentation::new(
            ["a", "b"],
            vec![w(&[1, 1]), w(&[2, 2, 2]), w(&[1, 2, 1, 2, 1, 2, 1, 2, 1, 2])],
        )
        .unwrap();
        assert_eq!(p.to_string(), "< a, b | a^2, b^3, (a b)^5 >");
    }

    #[test]
    fn empty_relator_prints_as_one() {
        let p = Presentation::new(["a"], vec![Word::empty()]).unwrap();
        assert_eq!(p.format_word(&p.relators()[0]), "1");
    }

    #[test]
    fn generator_indices_are_consecutive() {
        let p = Presentation::new(["x1", "x2", "x3"], vec![]).unwrap();
        let idx: Vec<usize> = p.generators().iter().map(Generator::index).collect();
        assert_eq!(idx, vec![1, 2, 3]);
        assert_eq!(p.index_of("x3"), Some(3));
    }
}
