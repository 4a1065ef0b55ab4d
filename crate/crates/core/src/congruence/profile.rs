//! Dense bitset representation of `{u : u ≼ x, |u| ≤ n}`.
//!
//! Layer `j` is a bitset over the `k^j` words of length `j`, indexed by their
//! base-`k` value (first letter most significant), so bit order inside a
//! layer is lexicographic and layer-major order is shortlex. Every layer is
//! padded to whole `u64` words.

use alloc::vec::Vec;

use crate::error::CongruenceError;
use crate::word::{Alphabet, Letter, Word};

/// Default cap on the number of bits in a profile.
pub const DEFAULT_PROFILE_BIT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileLayout {
    k: usize,
    n: usize,
    /// `layer_start[j]` is the first `u64` of layer `j`; `layer_start[n + 1]` is the total.
    layer_start: Vec<usize>,
}

impl ProfileLayout {
    pub fn new(alphabet: Alphabet, n: usize, bit_budget: u64) -> Result<Self, CongruenceError> {
        let k = alphabet.size() as u64;
        let over = |required| CongruenceError::Resource {
            resource: "profile bits",
            required,
            budget: bit_budget,
        };
        let mut layer_start = Vec::with_capacity(n + 2);
        let mut bits_total: u64 = 0;
        let mut words_total: usize = 0;
        let mut layer_bits: u64 = 1;
        for j in 0..=n {
            if j > 0 {
                layer_bits = layer_bits.checked_mul(k).ok_or_else(|| over(None))?;
            }
            bits_total = bits_total.checked_add(layer_bits).ok_or_else(|| over(None))?;
            if bits_total > bit_budget {
                return Err(over(None));
            }
            layer_start.push(words_total);
            words_total += layer_bits.div_ceil(64) as usize;
        }
        layer_start.push(words_total);
        Ok(ProfileLayout {
            k: alphabet.size(),
            n,
            layer_start,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> usize {
        self.n
    }

    /// Length of a profile in `u64` words.
    pub fn words(&self) -> usize {
        self.layer_start[self.n + 1]
    }

    pub fn layer_words(&self, j: usize) -> usize {
        self.layer_start[j + 1] - self.layer_start[j]
    }

    pub fn layer<'a>(&self, profile: &'a [u64], j: usize) -> &'a [u64] {
        &profile[self.layer_start[j]..self.layer_start[j + 1]]
    }

    /// Profile of ε.
    pub fn empty(&self) -> Vec<u64> {
        let mut p = alloc::vec![0u64; self.words()];
        p[0] = 1;
        p
    }

    /// `dst := src ∪ {u·a : u ∈ src, |u| < n}`, the profile of `x·a` given that of `x`.
    pub fn extend_into(&self, src: &[u64], a: Letter, dst: &mut [u64]) {
        dst.copy_from_slice(src);
        let a = a as usize;
        for j in 0..self.n {
            let from = self.layer_start[j];
            let to = self.layer_start[j + 1];
            for (wi, &bits) in src[from..self.layer_start[j + 1]].iter().enumerate() {
                let mut bits = bits;
                while bits != 0 {
                    let v = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let t = v * self.k + a;
                    dst[to + t / 64] |= 1u64 << (t % 64);
                }
            }
        }
    }

    pub fn profile_of(&self, x: &[Letter]) -> Vec<u64> {
        let mut cur = self.empty();
        let mut next = alloc::vec![0u64; self.words()];
        for &a in x {
            self.extend_into(&cur, a, &mut next);
            core::mem::swap(&mut cur, &mut next);
        }
        cur
    }

    pub fn rank(&self, u: &[Letter]) -> Option<(usize, usize)> {
        if u.len() > self.n {
            return None;
        }
        let v = u.iter().fold(0usize, |acc, &a| acc * self.k + a as usize);
        Some((u.len(), v))
    }

    pub fn unrank(&self, len: usize, mut v: usize) -> Word {
        let mut letters = alloc::vec![0 as Letter; len];
        for slot in letters.iter_mut().rev() {
            *slot = (v % self.k) as Letter;
            v /= self.k;
        }
        Word::from_letters(letters)
    }

    pub fn contains(&self, profile: &[u64], u: &[Letter]) -> bool {
        match self.rank(u) {
            Some((j, v)) => self.layer(profile, j)[v / 64] >> (v % 64) & 1 == 1,
            None => false,
        }
    }

    /// A shortest word present in exactly one of the two profiles: the
    /// shortlex-least one only in `p` if there is one at that length, else
    /// the least one only in `q`.
    pub fn first_difference(&self, p: &[u64], q: &[u64]) -> Option<Word> {
        for j in 0..=self.n {
            let lp = self.layer(p, j);
            let lq = self.layer(q, j);
            for (from, other) in [(lp, lq), (lq, lp)] {
                for (wi, (a, b)) in from.iter().zip(other).enumerate() {
                    let diff = a & !b;
                    if diff != 0 {
                        return Some(self.unrank(j, wi * 64 + diff.trailing_zeros() as usize));
                    }
                }
            }
        }
        None
    }

    /// Members in shortlex order.
    pub fn members(&self, profile: &[u64]) -> Vec<Word> {
        let mut out = Vec::new();
        for j in 0..=self.n {
            out.extend(layer_members(self.layer(profile, j), self.k, j));
        }
        out
    }
}

/// Words encoded by a single layer bitset, in lexicographic order.
pub fn layer_members(layer: &[u64], k: usize, len: usize) -> impl Iterator<Item = Word> + '_ {
    set_bits(layer).map(move |mut v| {
        let mut letters = alloc::vec![0 as Letter; len];
        for slot in letters.iter_mut().rev() {
            *slot = (v % k) as Letter;
            v /= k;
        }
        Word::from_letters(letters)
    })
}

pub(crate) fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &bits)| {
        let mut bits = bits;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let t = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(wi * 64 + t)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::subwords::{subwords_up_to, DEFAULT_MEMBER_BUDGET};
    use crate::word::ShortlexWords;

    #[test]
    fn layout_sizes() {
        let l = ProfileLayout::new(Alphabet::new(2).unwrap(), 8, DEFAULT_PROFILE_BIT_BUDGET).unwrap();
        // layers of 1, 2, 4, ..., 256 bits
        assert_eq!(l.words(), 1 + 1 + 1 + 1 + 1 + 1 + 1 + 2 + 4);
        assert!(ProfileLayout::new(Alphabet::new(26).unwrap(), 10, DEFAULT_PROFILE_BIT_BUDGET).is_err());
        assert!(ProfileLayout::new(Alphabet::new(3).unwrap(), 2, 12).is_err());
        assert!(ProfileLayout::new(Alphabet::new(3).unwrap(), 2, 13).is_ok());
    }

    #[test]
    fn rank_round_trip() {
        let l = ProfileLayout::new(Alphabet::new(3).unwrap(), 4, DEFAULT_PROFILE_BIT_BUDGET).unwrap();
        for u in ShortlexWords::new(Alphabet::new(3).unwrap(), 4) {
            let (j, v) = l.rank(u.letters()).unwrap();
            assert_eq!(l.unrank(j, v), u);
        }
    }

    #[test]
    fn agrees_with_sparse_listing() {
        let k3 = Alphabet::new(3).unwrap();
        for n in 0..=4 {
            let l = ProfileLayout::new(k3, n, DEFAULT_PROFILE_BIT_BUDGET).unwrap();
            for x in ShortlexWords::new(k3, 6) {
                let dense = l.members(&l.profile_of(x.letters()));
                let sparse = subwords_up_to(x.letters(), n, DEFAULT_MEMBER_BUDGET).unwrap();
                assert_eq!(dense.as_slice(), sparse.members(), "x = {x}, n = {n}");
            }
        }
    }
}
