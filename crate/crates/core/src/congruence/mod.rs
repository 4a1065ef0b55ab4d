//! Simon's congruence: `x ~n y` iff `x` and `y` have the same subwords of
//! length at most `n`.
//!
//! Two independent routes are provided. [`subwords_up_to`] lists subword
//! sets explicitly and is the reference semantics; [`ProfileLayout`] keeps
//! them as dense bitsets and backs [`congruence_key`], which the enumeration
//! engine relies on.

mod key;
mod minimal;
mod profile;
mod subwords;

pub use key::{
    canonical_serialization, congruence_key, fingerprint_bytes, fingerprint_layer, key_from_profile, write_canonical,
    CongruenceKey, KeyMode,
};
pub use minimal::{is_minimal, minimal_representative, OracleBudget};
pub use profile::{layer_members, ProfileLayout, DEFAULT_PROFILE_BIT_BUDGET};
pub use subwords::{subwords_up_to, SubwordSet, DEFAULT_MEMBER_BUDGET};

use crate::error::CongruenceError;
use crate::word::{is_subword, Alphabet, Letter, Word};

/// `x ~n y`. Uses exact congruence keys, and falls back to explicit subword
/// sets when the dense layout for `(k, n)` exceeds its budget.
pub fn equivalent(x: &[Letter], y: &[Letter], n: usize, alphabet: Alphabet) -> Result<bool, CongruenceError> {
    match (
        congruence_key(x, n, alphabet, KeyMode::Exact),
        congruence_key(y, n, alphabet, KeyMode::Exact),
    ) {
        (Ok(kx), Ok(ky)) => Ok(kx == ky),
        _ => Ok(subwords_up_to(x, n, DEFAULT_MEMBER_BUDGET)? == subwords_up_to(y, n, DEFAULT_MEMBER_BUDGET)?),
    }
}

/// A shortest subword of length `≤ n` that occurs in exactly one of `x`, `y`
/// together with the word it occurs in. Among the shortest, subwords of `x`
/// are preferred, then shortlex order decides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub subword: Word,
    pub in_first: bool,
}

pub fn distinguishing_subword(
    x: &[Letter],
    y: &[Letter],
    n: usize,
    alphabet: Alphabet,
) -> Result<Option<Witness>, CongruenceError> {
    let diff = match ProfileLayout::new(alphabet, n, DEFAULT_PROFILE_BIT_BUDGET) {
        Ok(layout) => layout.first_difference(&layout.profile_of(x), &layout.profile_of(y)),
        Err(_) => {
            let sx = subwords_up_to(x, n, DEFAULT_MEMBER_BUDGET)?;
            let sy = subwords_up_to(y, n, DEFAULT_MEMBER_BUDGET)?;
            first_sorted_difference(sx.members(), sy.members())
        }
    };
    Ok(diff.map(|subword| Witness {
        in_first: is_subword(subword.letters(), x),
        subword,
    }))
}

fn first_sorted_difference(a: &[Word], b: &[Word]) -> Option<Word> {
    let only_in = |from: &[Word], other: &[Word]| -> Option<Word> {
        from.iter().find(|u| other.binary_search(u).is_err()).cloned()
    };
    match (only_in(a, b), only_in(b, a)) {
        (Some(u), Some(v)) if v.len() < u.len() => Some(v),
        (Some(u), _) => Some(u),
        (None, v) => v,
    }
}
