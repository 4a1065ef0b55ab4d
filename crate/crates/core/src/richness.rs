//! Rich and poor words and the rich factorization.
//!
//! A word is *rich* when every letter of the alphabet occurs in it, *poor*
//! otherwise. It is `ℓ`-rich when it splits into `ℓ` consecutive rich
//! factors, with the convention that "0-rich" means poor. The richness of a
//! word is the largest such `ℓ`, and equals the number of factors peeled off
//! by repeatedly cutting the shortest rich prefix.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::word::{Alphabet, Letter, Word};

/// `x = x_1 a_1 ... x_m a_m y`, where each `x_i a_i` is the shortest rich
/// prefix of what remains and `x_1, ..., x_m, y` are poor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichFactorization {
    pub pairs: Vec<(Word, Letter)>,
    pub tail: Word,
}

impl RichFactorization {
    /// The richness `m`.
    pub fn richness(&self) -> usize {
        self.pairs.len()
    }

    pub fn recompose(&self) -> Word {
        let mut out = Vec::new();
        for (segment, a) in &self.pairs {
            out.extend_from_slice(segment.letters());
            out.push(*a);
        }
        out.extend_from_slice(self.tail.letters());
        Word::from_letters(out)
    }

    /// `x1·a1|x2·a2|…|y`; ε renders as the empty string.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (segment, a) in &self.pairs {
            let _ = write!(s, "{segment}·{}|", Word::from_letters(alloc::vec![*a]));
        }
        let _ = write!(s, "{}", self.tail);
        s
    }
}

pub fn is_rich(x: &[Letter], alphabet: Alphabet) -> bool {
    shortest_rich_prefix(x, alphabet).is_some()
}

/// Length of the shortest rich prefix of `x`, if `x` is rich.
fn shortest_rich_prefix(x: &[Letter], alphabet: Alphabet) -> Option<usize> {
    let k = alphabet.size();
    let mut seen = alloc::vec![false; k];
    let mut missing = k;
    for (i, &a) in x.iter().enumerate() {
        if let Some(s) = seen.get_mut(a as usize) {
            if !*s {
                *s = true;
                missing -= 1;
                if missing == 0 {
                    return Some(i + 1);
                }
            }
        }
    }
    None
}

pub fn rich_factorization(x: &[Letter], alphabet: Alphabet) -> RichFactorization {
    let mut pairs = Vec::new();
    let mut rest = x;
    while let Some(len) = shortest_rich_prefix(rest, alphabet) {
        pairs.push((Word::from(&rest[..len - 1]), rest[len - 1]));
        rest = &rest[len..];
    }
    RichFactorization {
        pairs,
        tail: Word::from(rest),
    }
}

pub fn richness(x: &[Letter], alphabet: Alphabet) -> usize {
    let mut m = 0;
    let mut rest = x;
    while let Some(len) = shortest_rich_prefix(rest, alphabet) {
        m += 1;
        rest = &rest[len..];
    }
    m
}

/// Whether `x` is `ℓ`-rich. `ℓ = 0` holds exactly for poor words.
///
/// For `ℓ ≥ 1` this is `richness(x) ≥ ℓ`: cut `ℓ − 1` shortest rich prefixes
/// and the remainder is still rich.
pub fn is_l_rich(x: &[Letter], l: usize, alphabet: Alphabet) -> bool {
    let r = richness(x, alphabet);
    if l == 0 {
        r == 0
    } else {
        r >= l
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, ShortlexWords};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn w(s: &str, k: usize) -> Word {
        parse_word(s, Alphabet::new(k).unwrap()).unwrap()
    }

    fn ab(k: usize) -> Alphabet {
        Alphabet::new(k).unwrap()
    }

    /// Exhaustive: can `x` be cut into exactly `l` rich factors?
    fn splits_into_rich(x: &[Letter], l: usize, alphabet: Alphabet) -> bool {
        if l == 0 {
            return x.is_empty();
        }
        (1..=x.len()).any(|cut| is_rich(&x[..cut], alphabet) && splits_into_rich(&x[cut..], l - 1, alphabet))
    }

    #[test]
    fn rich_and_poor() {
        assert!(is_rich(w("abc", 3).letters(), ab(3)));
        assert!(!is_rich(w("abab", 3).letters(), ab(3)));
        assert!(!is_rich(&[], ab(1)));
    }

    #[test]
    fn l_richness() {
        assert!(is_l_rich(w("abba", 2).letters(), 2, ab(2)));
        assert!(!is_l_rich(w("aab", 2).letters(), 2, ab(2)));
        assert!(is_l_rich(w("aaa", 2).letters(), 0, ab(2)));
        assert!(!is_l_rich(w("ab", 2).letters(), 0, ab(2)));
    }

    #[test]
    fn worked_factorization() {
        let x = w("bbaaabbccccaabbbaa", 3);
        let f = rich_factorization(x.letters(), ab(3));
        assert_eq!(f.richness(), 2);
        assert_eq!(richness(x.letters(), ab(3)), 2);
        assert_eq!(f.pairs, [(w("bbaaabb", 3), 2), (w("cccaa", 3), 1)]);
        assert_eq!(f.tail, w("bbaa", 3));
        assert_eq!(f.render(), "bbaaabb·c|cccaa·b|bbaa");
        assert_eq!(f.recompose(), x);
    }

    #[test]
    fn small_factorizations() {
        let f = rich_factorization(w("aaa", 2).letters(), ab(2));
        assert_eq!((f.richness(), f.tail.to_string()), (0, "aaa".into()));
        let f = rich_factorization(w("abba", 2).letters(), ab(2));
        assert_eq!(f.pairs, [(w("a", 2), 1), (w("b", 2), 0)]);
        assert!(f.tail.is_empty());
        assert_eq!(f.render(), "a·b|b·a|");
        assert_eq!(richness(&[], ab(4)), 0);
        assert_eq!(richness(w("abba", 2).letters(), ab(2)), 2);
    }

    #[test]
    fn counts_do_not_imply_richness() {
        // every letter occurs twice, yet the word is only 1-rich
        let x = w("aabb", 2);
        assert!(x.letters().iter().filter(|&&a| a == 0).count() >= 2);
        assert!(x.letters().iter().filter(|&&a| a == 1).count() >= 2);
        assert_eq!(richness(x.letters(), ab(2)), 1);
        assert!(!is_l_rich(x.letters(), 2, ab(2)));
    }

    #[test]
    fn greedy_matches_exhaustive_splitting() {
        for k in 1..=3 {
            for x in ShortlexWords::new(ab(k), 7) {
                for l in 1..=4 {
                    assert_eq!(
                        is_l_rich(x.letters(), l, ab(k)),
                        splits_into_rich(x.letters(), l, ab(k)),
                        "x = {x}, l = {l}"
                    );
                }
                let best = (0..=x.len())
                    .rev()
                    .find(|&l| splits_into_rich(x.letters(), l, ab(k)) && l > 0);
                assert_eq!(richness(x.letters(), ab(k)), best.unwrap_or(0));
            }
        }
    }

    proptest! {
        #[test]
        fn factorization_invariants(x in proptest::collection::vec(0u16..3, 0..30)) {
            let a3 = ab(3);
            let f = rich_factorization(&x, a3);
            prop_assert_eq!(f.recompose().into_letters(), x.clone());
            prop_assert!(!is_rich(f.tail.letters(), a3));
            for (seg, a) in &f.pairs {
                prop_assert!(!is_rich(seg.letters(), a3));
                let mut block = seg.clone();
                block.push(*a);
                prop_assert!(is_rich(block.letters(), a3));
                prop_assert!(!seg.letters().contains(a));
            }
        }

        #[test]
        fn superadditive(x in proptest::collection::vec(0u16..3, 0..20), y in proptest::collection::vec(0u16..3, 0..20)) {
            let a3 = ab(3);
            let xy = [x.as_slice(), y.as_slice()].concat();
            prop_assert!(richness(&xy, a3) >= richness(&x, a3) + richness(&y, a3));
        }
    }
}
