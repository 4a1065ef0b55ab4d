use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use super::profile::{layer_members, set_bits, ProfileLayout, DEFAULT_PROFILE_BIT_BUDGET};
use crate::error::CongruenceError;
use crate::word::{write_letter, Alphabet, Letter, Word, MAX_TEXT_ALPHABET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum KeyMode {
    #[default]
    Exact,
    Fingerprint,
}

/// Canonical identifier of a `~n` class.
///
/// For `|x| ≥ n` only the subwords of length exactly `n` are kept: every
/// shorter subword of `x` extends to a length-`n` subword of `x`, so these
/// sets determine the full sets. Words shorter than `n` are alone in their
/// class and keyed by themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CongruenceKey {
    ShortWord {
        cap: usize,
        word: Word,
    },
    /// Bitset over the `k^cap` words of length `cap` in lexicographic order;
    /// equal bitsets are exactly equal shortlex-sorted member lists.
    ExactSet {
        cap: usize,
        k: usize,
        layer: Box<[u64]>,
    },
    /// XXH3-128 (seed 0) of the canonical serialization of the exact set.
    Fingerprint {
        cap: usize,
        digest: u128,
    },
}

impl CongruenceKey {
    pub fn cap(&self) -> usize {
        match self {
            CongruenceKey::ShortWord { cap, .. }
            | CongruenceKey::ExactSet { cap, .. }
            | CongruenceKey::Fingerprint { cap, .. } => *cap,
        }
    }

    /// Payload words: the short word itself, or the length-`cap` subwords in
    /// shortlex order. Empty for fingerprints.
    pub fn members(&self) -> Vec<Word> {
        match self {
            CongruenceKey::ShortWord { word, .. } => alloc::vec![word.clone()],
            CongruenceKey::ExactSet { cap, k, layer } => layer_members(layer, *k, *cap).collect(),
            CongruenceKey::Fingerprint { .. } => Vec::new(),
        }
    }
}

/// Appends the canonical serialization of a length-`len` layer: members in
/// lexicographic order, comma separated, letters as in the word text format.
pub fn write_canonical(layer: &[u64], k: usize, len: usize, buf: &mut Vec<u8>) {
    if k > MAX_TEXT_ALPHABET {
        return write_canonical_wide(layer, k, len, buf);
    }
    // members arrive in increasing rank, so each one is reached from the
    // previous by a base-k addition that rarely carries far
    let mut digits = alloc::vec![0usize; len];
    let mut text = alloc::vec![b'a'; len];
    let mut rank = 0;
    for (i, v) in set_bits(layer).enumerate() {
        let mut carry = v - rank;
        rank = v;
        let mut j = len;
        while carry > 0 {
            j -= 1;
            let d = digits[j] + carry;
            digits[j] = d % k;
            text[j] = b'a' + digits[j] as u8;
            carry = d / k;
        }
        if i > 0 {
            buf.push(b',');
        }
        buf.extend_from_slice(&text);
    }
}

fn write_canonical_wide(layer: &[u64], k: usize, len: usize, buf: &mut Vec<u8>) {
    let mut letters = alloc::vec![0 as Letter; len];
    let mut s = String::new();
    for (i, mut v) in set_bits(layer).enumerate() {
        if i > 0 {
            buf.push(b',');
        }
        for slot in letters.iter_mut().rev() {
            *slot = (v % k) as Letter;
            v /= k;
        }
        s.clear();
        for &a in &letters {
            let _ = write_letter(&mut s, a);
        }
        buf.extend_from_slice(s.as_bytes());
    }
}

pub fn canonical_serialization(layer: &[u64], k: usize, len: usize) -> String {
    let mut buf = Vec::new();
    write_canonical(layer, k, len, &mut buf);
    // only ASCII is ever written
    String::from_utf8(buf).expect("ascii serialization")
}

pub fn fingerprint_bytes(serialized: &[u8]) -> u128 {
    xxhash_rust::xxh3::xxh3_128(serialized)
}

pub fn fingerprint_layer(layer: &[u64], k: usize, len: usize, scratch: &mut Vec<u8>) -> u128 {
    scratch.clear();
    write_canonical(layer, k, len, scratch);
    fingerprint_bytes(scratch)
}

pub fn congruence_key(
    x: &[Letter],
    n: usize,
    alphabet: Alphabet,
    mode: KeyMode,
) -> Result<CongruenceKey, CongruenceError> {
    if x.len() < n {
        return Ok(CongruenceKey::ShortWord {
            cap: n,
            word: Word::from(x),
        });
    }
    let layout = ProfileLayout::new(alphabet, n, DEFAULT_PROFILE_BIT_BUDGET)?;
    let profile = layout.profile_of(x);
    Ok(key_from_profile(&layout, &profile, mode))
}

/// Key of a word with `|x| ≥ n`, given its profile.
pub fn key_from_profile(layout: &ProfileLayout, profile: &[u64], mode: KeyMode) -> CongruenceKey {
    let n = layout.cap();
    let layer = layout.layer(profile, n);
    match mode {
        KeyMode::Exact => CongruenceKey::ExactSet {
            cap: n,
            k: layout.k(),
            layer: layer.into(),
        },
        KeyMode::Fingerprint => CongruenceKey::Fingerprint {
            cap: n,
            digest: fingerprint_layer(layer, layout.k(), n, &mut Vec::new()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        parse_word(s, Alphabet::new(3).unwrap()).unwrap()
    }

    const K3: Alphabet = match Alphabet::new(3) {
        Ok(a) => a,
        Err(_) => panic!(),
    };

    #[test]
    fn short_word_key() {
        let key = congruence_key(w("ab").letters(), 3, K3, KeyMode::Exact).unwrap();
        assert_eq!(key, CongruenceKey::ShortWord { cap: 3, word: w("ab") });
    }

    #[test]
    fn exact_set_key() {
        let key = congruence_key(w("abacb").letters(), 2, K3, KeyMode::Exact).unwrap();
        let members: Vec<_> = key.members().iter().map(|u| u.to_string()).collect();
        assert_eq!(members, ["aa", "ab", "ac", "ba", "bb", "bc", "cb"]);
        let other = congruence_key(w("baaacbb").letters(), 2, K3, KeyMode::Exact).unwrap();
        assert_eq!(key, other);
        let x3 = congruence_key(w("abacb").letters(), 3, K3, KeyMode::Exact).unwrap();
        let y3 = congruence_key(w("baaacbb").letters(), 3, K3, KeyMode::Exact).unwrap();
        assert_ne!(x3, y3);
    }

    #[test]
    fn canonical_form_and_fingerprint() {
        let layout = ProfileLayout::new(K3, 2, DEFAULT_PROFILE_BIT_BUDGET).unwrap();
        let p = layout.profile_of(w("abacb").letters());
        let s = canonical_serialization(layout.layer(&p, 2), 3, 2);
        assert_eq!(s, "aa,ab,ac,ba,bb,bc,cb");
        let fx = congruence_key(w("abacb").letters(), 2, K3, KeyMode::Fingerprint).unwrap();
        let fy = congruence_key(w("baaacbb").letters(), 2, K3, KeyMode::Fingerprint).unwrap();
        assert_eq!(fx, fy);
        assert_eq!(
            fx,
            CongruenceKey::Fingerprint {
                cap: 2,
                digest: xxhash_rust::xxh3::xxh3_128(b"aa,ab,ac,ba,bb,bc,cb")
            }
        );
    }

    #[test]
    fn cap_zero_keys_collapse() {
        let a = congruence_key(&[], 0, K3, KeyMode::Exact).unwrap();
        let b = congruence_key(w("abc").letters(), 0, K3, KeyMode::Exact).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.members(), [Word::empty()]);
    }

    proptest::proptest! {
        #[test]
        fn serialization_matches_member_list(
            k in 1usize..5,
            len in 0usize..5,
            seed in proptest::collection::vec(proptest::num::u64::ANY, 1..12),
        ) {
            let words = k.pow(len as u32);
            let mut layer: Vec<u64> = seed.iter().cycle().take(words.div_ceil(64)).copied().collect();
            if words % 64 != 0 {
                *layer.last_mut().unwrap() &= (1u64 << (words % 64)) - 1;
            }
            let expected: Vec<_> = layer_members(&layer, k, len).map(|u| u.to_string()).collect();
            proptest::prop_assert_eq!(canonical_serialization(&layer, k, len), expected.join(","));
        }
    }

    #[test]
    fn wide_alphabet_serialization() {
        // letters past z are written as <i>
        let k = 30;
        let mut layer = alloc::vec![0u64; 1];
        layer[0] = (1 << 1) | (1 << 27);
        assert_eq!(canonical_serialization(&layer, k, 1), "b,<28>");
    }
}
