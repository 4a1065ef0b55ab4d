//! Alphabets, words and the scattered-subword order.
//!
//! Letters are stored as zero-based indices (`0` is `a`, `1` is `b`, ...).
//! The letter order `a < b < ...` is the index order and is fixed.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::WordError;

/// A letter, as a zero-based index into the alphabet.
pub type Letter = u16;

/// Largest alphabet the text format can express (`a`..`z`).
pub const MAX_TEXT_ALPHABET: usize = 26;

/// A finite alphabet `{a_1 < a_2 < ... < a_k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    k: usize,
}

impl Alphabet {
    pub const fn new(k: usize) -> Result<Self, WordError> {
        if k == 0 || k > Letter::MAX as usize + 1 {
            return Err(WordError::InvalidAlphabet { k });
        }
        Ok(Alphabet { k })
    }

    #[inline]
    pub const fn size(self) -> usize {
        self.k
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.k).map(|a| a as Letter)
    }

    #[inline]
    pub fn contains(self, a: Letter) -> bool {
        (a as usize) < self.k
    }

    /// Smallest alphabet containing every letter of `words` (at least one letter).
    pub fn covering<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let k = words
            .into_iter()
            .flat_map(|w| w.letters().iter().copied())
            .max()
            .map_or(1, |a| a as usize + 1);
        Alphabet { k }
    }
}

/// A finite word. `Ord` is the shortlex order: shorter words first, equal
/// lengths compared lexicographically by letter index.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, checking every letter against `alphabet`.
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Self, WordError> {
        if let Some(pos) = letters.iter().position(|&a| !alphabet.contains(a)) {
            return Err(WordError::LetterOutOfRange {
                position: pos + 1,
                letter: letters[pos],
                k: alphabet.size(),
            });
        }
        Ok(Word(letters))
    }

    /// Builds a word without alphabet validation.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One-based letter indices, `a` = 1.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&a| a as usize + 1).collect()
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        shortlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_cmp(&self.0, &other.0)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

/// Letters `< 26` print as `a`..`z`; larger indices print as `<i>` (one-based).
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.0 {
            write_letter(f, a)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

pub(crate) fn write_letter(f: &mut impl fmt::Write, a: Letter) -> fmt::Result {
    if (a as usize) < MAX_TEXT_ALPHABET {
        f.write_char((b'a' + a as u8) as char)
    } else {
        write!(f, "<{}>", a as usize + 1)
    }
}

pub fn shortlex_cmp(x: &[Letter], y: &[Letter]) -> Ordering {
    x.len().cmp(&y.len()).then_with(|| x.cmp(y))
}

/// Parses a word written with the first `k` lowercase Latin letters.
pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word, WordError> {
    let k = alphabet.size();
    if k > MAX_TEXT_ALPHABET {
        return Err(WordError::UnsupportedAlphabet { k });
    }
    let mut letters = Vec::with_capacity(text.len());
    for (i, ch) in text.chars().enumerate() {
        let idx = match ch {
            'a'..='z' => ch as usize - 'a' as usize,
            _ => usize::MAX,
        };
        if idx >= k {
            return Err(WordError::InvalidCharacter { position: i + 1, ch, k });
        }
        letters.push(idx as Letter);
    }
    Ok(Word(letters))
}

/// `u ≼ x`: `u` embeds into `x` as a scattered subsequence (greedy earliest match).
pub fn is_subword(u: &[Letter], x: &[Letter]) -> bool {
    let mut it = x.iter();
    u.iter().all(|a| it.any(|b| b == a))
}

/// `|x|_a`.
pub fn letter_count(x: &[Letter], a: Letter) -> usize {
    x.iter().filter(|&&b| b == a).count()
}

/// Component `a` holds `min(|x|_a, n)`.
pub fn capped_letter_counts(x: &[Letter], n: usize, alphabet: Alphabet) -> Vec<usize> {
    let mut counts = alloc::vec![0usize; alphabet.size()];
    for &a in x {
        if let Some(c) = counts.get_mut(a as usize) {
            *c += 1;
        }
    }
    for c in &mut counts {
        *c = (*c).min(n);
    }
    counts
}

/// Splits `x` at every occurrence of `a`: `x = x_0 a x_1 a ... a x_p` with `p = |x|_a`.
pub fn decompose_by_letter(x: &[Letter], a: Letter) -> (usize, Vec<Word>) {
    let segments: Vec<Word> = x.split(|&b| b == a).map(Word::from).collect();
    (segments.len() - 1, segments)
}

/// Inverse of [`decompose_by_letter`].
pub fn join_with_letter(segments: &[Word], a: Letter) -> Word {
    let mut out = Vec::new();
    for (i, s) in segments.iter().enumerate() {
        if i > 0 {
            out.push(a);
        }
        out.extend_from_slice(s.letters());
    }
    Word(out)
}

/// All words of length `0..=max_len` over `alphabet`, in shortlex order.
#[derive(Debug, Clone)]
pub struct ShortlexWords {
    k: usize,
    max_len: usize,
    current: Option<Vec<Letter>>,
}

impl ShortlexWords {
    pub fn new(alphabet: Alphabet, max_len: usize) -> Self {
        ShortlexWords {
            k: alphabet.size(),
            max_len,
            current: Some(Vec::new()),
        }
    }
}

impl Iterator for ShortlexWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word(cur.clone());
        // odometer increment; on overflow move to the next length
        let mut i = cur.len();
        loop {
            if i == 0 {
                let len = cur.len() + 1;
                if len > self.max_len {
                    self.current = None;
                } else {
                    cur.clear();
                    cur.resize(len, 0);
                }
                break;
            }
            i -= 1;
            if (cur[i] as usize) + 1 < self.k {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// `Σ_{j=0}^{max_len} k^j`, or `None` on overflow.
pub fn count_words_up_to(k: usize, max_len: usize) -> Option<u64> {
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for j in 0..=max_len {
        total = total.checked_add(layer)?;
        if j < max_len {
            layer = layer.checked_mul(k as u64)?;
        }
    }
    Some(total)
}
