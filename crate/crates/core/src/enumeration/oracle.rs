//! Brute-force cross-check of the enumeration engine.
//!
//! Every word up to a search length is grouped by its explicit subword set
//! (no keys, no pruning). The engine passes when each group's shortlex-least
//! word is exactly one emitted representative and nothing else was emitted.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{enumerate_minimal, EnumerationConfig, Termination};
use crate::congruence::{subwords_up_to, DEFAULT_MEMBER_BUDGET};
use crate::error::{CongruenceError, EnumerationError};
use crate::word::{count_words_up_to, Alphabet, ShortlexWords, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Maximum number of words the brute force may scan.
    pub max_words: u64,
    /// How far past the engine's longest representative to search.
    pub extra_length: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_words: 1 << 20,
            extra_length: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub k: usize,
    pub n: usize,
    pub engine_count: u64,
    pub oracle_count: u64,
    /// All words up to this length were partitioned.
    pub searched_length: usize,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_against_oracle(k: usize, n: usize, limits: OracleLimits) -> Result<OracleReport, EnumerationError> {
    let alphabet = Alphabet::new(k).map_err(|_| EnumerationError::InvalidConfig("alphabet size must be at least 1"))?;
    let mut stream = enumerate_minimal(EnumerationConfig::new(k, n))?;
    let reps: Vec<Word> = stream.by_ref().collect::<Result<_, _>>()?;
    let mut failures = Vec::new();
    if stream.termination() != Some(Termination::Exhausted) {
        failures.push(format!("engine stopped with {:?}", stream.termination()));
    }
    let max_rep = reps.iter().map(Word::len).max().unwrap_or(0);
    let searched_length = max_rep + limits.extra_length;
    match count_words_up_to(k, searched_length) {
        Some(c) if c <= limits.max_words => {}
        required => {
            return Err(CongruenceError::Resource {
                resource: "oracle words",
                required,
                budget: limits.max_words,
            }
            .into())
        }
    }

    // subword set -> shortlex-least word having it
    let mut classes: BTreeMap<Vec<Word>, Word> = BTreeMap::new();
    for x in ShortlexWords::new(alphabet, searched_length) {
        let set = subwords_up_to(x.letters(), n, DEFAULT_MEMBER_BUDGET)?.into_members();
        classes.entry(set).or_insert(x);
    }

    let mut emitted: BTreeMap<Vec<Word>, Word> = BTreeMap::new();
    for r in &reps {
        let set = subwords_up_to(r.letters(), n, DEFAULT_MEMBER_BUDGET)?.into_members();
        match classes.get(&set) {
            Some(least) if least == r => {}
            Some(least) => failures.push(format!("{r:?} emitted but {least:?} is smaller in its class")),
            None => failures.push(format!("{r:?} emitted but its class was not found")),
        }
        if let Some(prev) = emitted.insert(set, r.clone()) {
            failures.push(format!("{prev:?} and {r:?} emitted for the same class"));
        }
    }
    for (set, least) in &classes {
        if !emitted.contains_key(set) {
            failures.push(format!("class of {least:?} has no emitted representative"));
        }
    }
    if reps.len() != classes.len() {
        failures.push(format!(
            "engine found {} classes, brute force {}",
            reps.len(),
            classes.len()
        ));
    }

    Ok(OracleReport {
        k,
        n,
        engine_count: reps.len() as u64,
        oracle_count: classes.len() as u64,
        searched_length,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_pass() {
        for (k, n, expected) in [(2, 2, 16), (1, 3, 4), (2, 1, 4), (3, 1, 8), (2, 0, 1)] {
            let r = verify_against_oracle(k, n, OracleLimits::default()).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert_eq!(r.oracle_count, expected);
        }
    }

    #[test]
    fn respects_word_budget() {
        let limits = OracleLimits {
            max_words: 10,
            extra_length: 2,
        };
        assert!(verify_against_oracle(2, 2, limits).is_err());
    }
}
