use alloc::vec::Vec;
use core::fmt;

use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    InvalidAlphabet {
        k: usize,
    },
    /// The text format only covers `a`..`z`.
    UnsupportedAlphabet {
        k: usize,
    },
    /// `position` is one-based.
    InvalidCharacter {
        position: usize,
        ch: char,
        k: usize,
    },
    LetterOutOfRange {
        position: usize,
        letter: Letter,
        k: usize,
    },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::InvalidAlphabet { k } => write!(f, "invalid alphabet size {k}"),
            WordError::UnsupportedAlphabet { k } => {
                write!(f, "alphabet size {k} is not expressible in the text format (max 26)")
            }
            WordError::InvalidCharacter { position, ch, k } => write!(
                f,
                "character {ch:?} at position {position} is not one of the first {k} letters"
            ),
            WordError::LetterOutOfRange { position, letter, k } => write!(
                f,
                "letter index {letter} at position {position} is outside an alphabet of size {k}"
            ),
        }
    }
}

impl core::error::Error for WordError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    /// A computation would need more than `budget` units of `resource`.
    Resource {
        resource: &'static str,
        required: Option<u64>,
        budget: u64,
    },
}

impl fmt::Display for CongruenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceError::Resource {
                resource,
                required: Some(r),
                budget,
            } => {
                write!(f, "needs {r} {resource}, budget is {budget}")
            }
            CongruenceError::Resource {
                resource,
                required: None,
                budget,
            } => {
                write!(f, "needs more than {budget} {resource}")
            }
        }
    }
}

impl core::error::Error for CongruenceError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    InvalidConfig(&'static str),
    Congruence(CongruenceError),
    /// Two inequivalent words produced the same 128-bit fingerprint.
    FingerprintCollision {
        word: Word,
        digest: u128,
    },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            EnumerationError::Congruence(e) => e.fmt(f),
            EnumerationError::FingerprintCollision { word, digest } => {
                write!(f, "fingerprint collision on {digest:032x} (candidate {word:?})")
            }
        }
    }
}

impl core::error::Error for EnumerationError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            EnumerationError::Congruence(e) => Some(e),
            _ => None,
        }
    }
}

impl From<CongruenceError> for EnumerationError {
    fn from(e: CongruenceError) -> Self {
        EnumerationError::Congruence(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    /// Exact `C_k(n)` values needed but absent, as `(k, n)` pairs.
    MissingEntries(Vec<(usize, usize)>),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::MissingEntries(missing) => {
                f.write_str("missing exact counts for")?;
                for (k, n) in missing {
                    write!(f, " C_{k}({n})")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for BoundsError {}
