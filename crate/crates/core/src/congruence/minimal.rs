//! Exhaustive shortlex search for minimal representatives.
//!
//! These are oracles: they scan every word up to the input length and are
//! only usable on small instances.

use super::profile::{ProfileLayout, DEFAULT_PROFILE_BIT_BUDGET};
use crate::error::CongruenceError;
use crate::word::{count_words_up_to, Alphabet, ShortlexWords, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Maximum number of words a single search may scan.
    pub max_words: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_words: 1 << 22 }
    }
}

impl OracleBudget {
    fn check(&self, alphabet: Alphabet, len: usize) -> Result<(), CongruenceError> {
        match count_words_up_to(alphabet.size(), len) {
            Some(c) if c <= self.max_words => Ok(()),
            required => Err(CongruenceError::Resource {
                resource: "oracle words",
                required,
                budget: self.max_words,
            }),
        }
    }
}

/// True iff no `y ~n x` is shortlex-smaller than `x`.
pub fn is_minimal(x: &Word, n: usize, alphabet: Alphabet, budget: OracleBudget) -> Result<bool, CongruenceError> {
    Ok(&minimal_representative(x, n, alphabet, budget)? == x)
}

/// Shortlex-least word equivalent to `x` under `~n`.
pub fn minimal_representative(
    x: &Word,
    n: usize,
    alphabet: Alphabet,
    budget: OracleBudget,
) -> Result<Word, CongruenceError> {
    budget.check(alphabet, x.len())?;
    let layout = ProfileLayout::new(alphabet, n, DEFAULT_PROFILE_BIT_BUDGET)?;
    let target = layout.profile_of(x.letters());
    // x itself is reached at the latest
    Ok(ShortlexWords::new(alphabet, x.len())
        .find(|y| layout.profile_of(y.letters()) == target)
        .unwrap_or_else(|| x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str, k: usize) -> Word {
        parse_word(s, Alphabet::new(k).unwrap()).unwrap()
    }

    #[test]
    fn minimality_examples() {
        let k2 = Alphabet::new(2).unwrap();
        let b = OracleBudget::default();
        assert!(is_minimal(&w("ab", 2), 1, k2, b).unwrap());
        assert!(!is_minimal(&w("ba", 2), 1, k2, b).unwrap());
        for n in 0..4 {
            assert!(is_minimal(&Word::empty(), n, k2, b).unwrap());
        }
        assert_eq!(minimal_representative(&w("ba", 2), 1, k2, b).unwrap(), w("ab", 2));
        assert_eq!(
            minimal_representative(&w("aaa", 1), 2, Alphabet::new(1).unwrap(), b).unwrap(),
            w("aa", 1)
        );
        assert_eq!(minimal_representative(&w("ab", 2), 1, k2, b).unwrap(), w("ab", 2));
    }

    #[test]
    fn representative_is_idempotent() {
        let k2 = Alphabet::new(2).unwrap();
        let b = OracleBudget::default();
        for x in ShortlexWords::new(k2, 7) {
            let r = minimal_representative(&x, 2, k2, b).unwrap();
            assert!(r <= x);
            assert_eq!(minimal_representative(&r, 2, k2, b).unwrap(), r);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let k3 = Alphabet::new(3).unwrap();
        let long = Word::from_letters(alloc::vec![2; 30]);
        let err = is_minimal(&long, 2, k3, OracleBudget::default()).unwrap_err();
        assert!(matches!(err, CongruenceError::Resource { .. }));
    }
}
