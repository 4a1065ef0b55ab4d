//! Simon's congruence on finite words.
//!
//! Two words are `~n`-equivalent when they have the same scattered subwords
//! of length at most `n`. This crate provides the word primitives, the
//! congruence itself, rich factorizations, an exact enumerator for the index
//! `C_k(n)` (the number of `~n` classes over `k` letters), and evaluators for
//! the known bounds on that index.
//!
//! The crate is `no_std` and only needs `alloc`. Parallel execution, time
//! budgets and file formats live in the `simcon` companion crate.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod congruence;
pub mod enumeration;
pub mod error;
pub mod richness;
pub mod word;

pub use congruence::{congruence_key, equivalent, CongruenceKey, KeyMode, SubwordSet};
pub use enumeration::{count_classes, enumerate_minimal, EnumerationConfig, EnumerationReport, Termination};
pub use error::{BoundsError, CongruenceError, EnumerationError, WordError};
pub use richness::{rich_factorization, richness, RichFactorization};
pub use word::{parse_word, Alphabet, Letter, Word};
