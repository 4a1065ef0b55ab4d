//! Exact computation of `C_k(n)` by listing minimal representatives.
//!
//! A word is minimal when it is the shortlex-least member of its `~n` class.
//! Prefixes and suffixes of minimal words are minimal, so generation `ℓ + 1`
//! is found among the one-letter extensions `u·a` of generation `ℓ` whose
//! length-`ℓ` suffix is also in generation `ℓ`. Candidates are visited in
//! lexicographic order and kept iff their congruence key has not been seen
//! at any earlier length or earlier in the same generation. The first empty
//! generation ends the search.
//!
//! Each generation is cut into chunks of parents. Chunks are expanded
//! independently against the read-only key store of earlier generations and
//! deduplicated locally; the per-chunk survivors are then merged in chunk
//! order, so the lexicographically smallest candidate wins every key and the
//! outcome does not depend on how chunks were scheduled.

mod oracle;

pub use oracle::{verify_against_oracle, OracleLimits, OracleReport};

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::hash::BuildHasher;
use core::time::Duration;

use hashbrown::{DefaultHashBuilder, HashMap, HashSet, HashTable};
use num_bigint::BigUint;

use crate::congruence::{fingerprint_layer, KeyMode, ProfileLayout};
use crate::error::EnumerationError;
use crate::word::{Alphabet, Letter, Word};

/// Parents per chunk.
const CHUNK_PARENTS: usize = 512;
/// Chunks handed to the executor between budget checks.
const CHUNKS_PER_BATCH: usize = 64;
/// Bookkeeping bytes charged per stored key on top of its payload.
const KEY_OVERHEAD_BYTES: u64 = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationConfig {
    pub k: usize,
    pub n: usize,
    pub mode: KeyMode,
    /// Longest representative length accepted; defaults to `4·n·k`.
    pub max_length: Option<usize>,
    pub worker_count: usize,
    /// Bytes; `None` is unlimited.
    pub memory_budget: Option<u64>,
    /// Enforced by the caller's interrupt hook; carried here for reporting.
    pub time_budget: Option<Duration>,
    /// In fingerprint mode, also keep exact sets to detect digest collisions.
    pub verify_fingerprints: bool,
    /// Bit budget for the dense subword profiles.
    pub profile_bit_budget: u64,
}

impl EnumerationConfig {
    pub fn new(k: usize, n: usize) -> Self {
        EnumerationConfig {
            k,
            n,
            mode: KeyMode::Exact,
            max_length: None,
            worker_count: 1,
            memory_budget: None,
            time_budget: None,
            verify_fingerprints: false,
            profile_bit_budget: crate::congruence::DEFAULT_PROFILE_BIT_BUDGET,
        }
    }

    pub fn with_mode(mut self, mode: KeyMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn effective_max_length(&self) -> usize {
        self.max_length.unwrap_or(4 * self.n * self.k)
    }

    pub fn validate(&self) -> Result<Alphabet, EnumerationError> {
        if self.worker_count == 0 {
            return Err(EnumerationError::InvalidConfig("worker_count must be at least 1"));
        }
        Alphabet::new(self.k).map_err(|_| EnumerationError::InvalidConfig("alphabet size must be at least 1"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    /// The stop rule fired: the count is exact.
    Exhausted,
    BudgetExceeded,
    LengthCapHit,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::Exhausted => "exhausted",
            Termination::BudgetExceeded => "budget_exceeded",
            Termination::LengthCapHit => "length_cap_hit",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KeyStoreStats {
    pub keys: u64,
    pub bytes: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationReport {
    pub k: usize,
    pub n: usize,
    /// `C_k(n)` when exhausted, otherwise a lower bound.
    pub total_classes: BigUint,
    pub per_length: Vec<u64>,
    pub max_rep_length: usize,
    pub termination: Termination,
    pub mode: KeyMode,
    pub duration: Option<Duration>,
    pub peak_key_store: KeyStoreStats,
    /// Birthday bound on a fingerprint collision among the stored keys.
    pub collision_probability_bound: Option<f64>,
}

impl EnumerationReport {
    pub fn is_exact(&self) -> bool {
        self.termination == Termination::Exhausted
    }
}

/// Runs independent chunk jobs. Results must come back in index order.
pub trait ChunkExecutor {
    fn map_indexed<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl ChunkExecutor for Sequential {
    fn map_indexed<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        (0..count).map(f).collect()
    }
}

/// Snapshot handed to the interrupt hook between batches.
#[derive(Debug, Clone, Copy)]
pub struct Progress {
    pub length: usize,
    pub found_in_generation: usize,
    pub key_store: KeyStoreStats,
}

/// Minimal representatives of one length, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Generation {
    word_len: usize,
    count: usize,
    words: Vec<Letter>,
    profiles: Vec<u64>,
}

impl Generation {
    pub fn word_length(&self) -> usize {
        self.word_len
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn word(&self, i: usize) -> &[Letter] {
        &self.words[i * self.word_len..(i + 1) * self.word_len]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        (0..self.count).map(move |i| self.word(i))
    }

    fn contains(&self, w: &[Letter]) -> bool {
        let (mut lo, mut hi) = (0, self.count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word(mid).cmp(w) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    fn bytes(&self) -> u64 {
        (self.words.len() * core::mem::size_of::<Letter>() + self.profiles.len() * 8) as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum CandidateKey {
    /// Word shorter than `n`: alone in its class.
    Short,
    Exact(Box<[u64]>),
    Fingerprint {
        digest: u128,
        layer: Option<Box<[u64]>>,
    },
}

#[derive(Debug)]
enum SeenStore {
    Exact(HashSet<Box<[u64]>>),
    Fingerprint {
        digests: HashSet<u128>,
        witnesses: Option<HashMap<u128, Box<[u64]>>>,
    },
}

impl SeenStore {
    fn len(&self) -> usize {
        match self {
            SeenStore::Exact(s) => s.len(),
            SeenStore::Fingerprint { digests, .. } => digests.len(),
        }
    }

    /// `Ok(true)` when the key is already stored.
    fn lookup(&self, key: &CandidateKey, word: &[Letter]) -> Result<bool, EnumerationError> {
        match (self, key) {
            (_, CandidateKey::Short) => Ok(false),
            (SeenStore::Exact(s), CandidateKey::Exact(layer)) => Ok(s.contains(layer)),
            (SeenStore::Fingerprint { digests, witnesses }, CandidateKey::Fingerprint { digest, layer }) => {
                if !digests.contains(digest) {
                    return Ok(false);
                }
                if let (Some(w), Some(layer)) = (witnesses, layer) {
                    if w.get(digest) != Some(layer) {
                        return Err(EnumerationError::FingerprintCollision {
                            word: Word::from(word),
                            digest: *digest,
                        });
                    }
                }
                Ok(true)
            }
            _ => unreachable!("key kind matches store kind"),
        }
    }

    /// Inserts; returns false if already present.
    fn insert(&mut self, key: CandidateKey, word: &[Letter]) -> Result<bool, EnumerationError> {
        if self.lookup(&key, word)? {
            return Ok(false);
        }
        match (self, key) {
            (_, CandidateKey::Short) => {}
            (SeenStore::Exact(s), CandidateKey::Exact(layer)) => {
                s.insert(layer);
            }
            (SeenStore::Fingerprint { digests, witnesses }, CandidateKey::Fingerprint { digest, layer }) => {
                digests.insert(digest);
                if let (Some(w), Some(layer)) = (witnesses, layer) {
                    w.insert(digest, layer);
                }
            }
            _ => unreachable!("key kind matches store kind"),
        }
        Ok(true)
    }
}

struct ChunkOutput {
    words: Vec<Letter>,
    profiles: Vec<u64>,
    keys: Vec<CandidateKey>,
}

/// Step-by-step enumeration state. Generation 0 is `{ε}`.
pub struct Enumerator {
    config: EnumerationConfig,
    layout: ProfileLayout,
    key_bytes: u64,
    seen: SeenStore,
    current: Generation,
    per_length: Vec<u64>,
    peak: KeyStoreStats,
    finished: Option<Termination>,
}

impl Enumerator {
    pub fn new(config: EnumerationConfig) -> Result<Self, EnumerationError> {
        let alphabet = config.validate()?;
        let layout = ProfileLayout::new(alphabet, config.n, config.profile_bit_budget)?;
        let key_bytes = match config.mode {
            KeyMode::Exact => layout.layer_words(config.n) as u64 * 8,
            KeyMode::Fingerprint if config.verify_fingerprints => 16 + layout.layer_words(config.n) as u64 * 8,
            KeyMode::Fingerprint => 16,
        };
        let seen = match config.mode {
            KeyMode::Exact => SeenStore::Exact(HashSet::new()),
            KeyMode::Fingerprint => SeenStore::Fingerprint {
                digests: HashSet::new(),
                witnesses: config.verify_fingerprints.then(HashMap::new),
            },
        };
        let current = Generation {
            word_len: 0,
            count: 1,
            words: Vec::new(),
            profiles: layout.empty(),
        };
        let mut e = Enumerator {
            config,
            layout,
            key_bytes,
            seen,
            current,
            per_length: alloc::vec![1],
            peak: KeyStoreStats::default(),
            finished: None,
        };
        if e.config.n == 0 {
            let key = e.key_for(&e.current.profiles.clone(), 0, &mut Vec::new());
            e.seen.insert(key, &[])?;
        }
        e.update_peak();
        Ok(e)
    }

    pub fn config(&self) -> &EnumerationConfig {
        &self.config
    }

    /// The most recently completed generation.
    pub fn current(&self) -> &Generation {
        &self.current
    }

    pub fn per_length(&self) -> &[u64] {
        &self.per_length
    }

    pub fn termination(&self) -> Option<Termination> {
        self.finished
    }

    pub fn key_store(&self) -> KeyStoreStats {
        let keys = self.seen.len() as u64;
        KeyStoreStats {
            keys,
            bytes: keys * (self.key_bytes + KEY_OVERHEAD_BYTES),
        }
    }

    fn update_peak(&mut self) {
        let now = self.key_store();
        self.peak.keys = self.peak.keys.max(now.keys);
        self.peak.bytes = self.peak.bytes.max(now.bytes);
    }

    fn key_for(&self, profile: &[u64], len: usize, scratch: &mut Vec<u8>) -> CandidateKey {
        let n = self.config.n;
        if len < n {
            return CandidateKey::Short;
        }
        let layer = self.layout.layer(profile, n);
        match self.config.mode {
            KeyMode::Exact => CandidateKey::Exact(layer.into()),
            KeyMode::Fingerprint => CandidateKey::Fingerprint {
                digest: fingerprint_layer(layer, self.config.k, n, scratch),
                layer: self.config.verify_fingerprints.then(|| layer.into()),
            },
        }
    }

    fn expand_chunk(&self, lo: usize, hi: usize) -> Result<ChunkOutput, EnumerationError> {
        let gen = &self.current;
        let len = gen.word_len + 1;
        let pw = self.layout.words();
        let hasher = DefaultHashBuilder::default();
        let mut out = ChunkOutput {
            words: Vec::new(),
            profiles: Vec::new(),
            keys: Vec::new(),
        };
        let mut local: HashTable<usize> = HashTable::new();
        let mut cand = alloc::vec![0 as Letter; len];
        let mut profile = alloc::vec![0u64; pw];
        let mut scratch = Vec::new();
        for parent in lo..hi {
            let u = gen.word(parent);
            cand[..len - 1].copy_from_slice(u);
            for a in 0..self.config.k as Letter {
                cand[len - 1] = a;
                if !gen.contains(&cand[1..]) {
                    continue;
                }
                self.layout
                    .extend_into(&gen.profiles[parent * pw..(parent + 1) * pw], a, &mut profile);
                let key = self.key_for(&profile, len, &mut scratch);
                if key != CandidateKey::Short {
                    if self.seen.lookup(&key, &cand)? {
                        continue;
                    }
                    let h = class_hash(&hasher, &key);
                    let keys = &out.keys;
                    if let Some(&j) = local.find(h, |&j| same_class(&keys[j], &key)) {
                        check_collision(&keys[j], &key, &cand)?;
                        continue;
                    }
                    local.insert_unique(h, out.keys.len(), |&j| class_hash(&hasher, &out.keys[j]));
                }
                out.words.extend_from_slice(&cand);
                out.profiles.extend_from_slice(&profile);
                out.keys.push(key);
            }
        }
        Ok(out)
    }

    fn memory_in_use(&self, next: &Generation) -> u64 {
        self.key_store().bytes + self.current.bytes() + next.bytes()
    }

    /// Computes the next generation.
    ///
    /// `interrupt` is polled between batches; returning `true` stops the run
    /// with [`Termination::BudgetExceeded`].
    pub fn advance<E, I>(&mut self, exec: &E, interrupt: &mut I) -> Result<Option<Termination>, EnumerationError>
    where
        E: ChunkExecutor,
        I: FnMut(&Progress) -> bool,
    {
        if self.finished.is_some() {
            return Ok(self.finished);
        }
        let len = self.current.word_len + 1;
        let pw = self.layout.words();
        let mut next = Generation {
            word_len: len,
            count: 0,
            words: Vec::new(),
            profiles: Vec::new(),
        };
        let parents = self.current.count;
        let chunks = parents.div_ceil(CHUNK_PARENTS);
        let mut done = 0;
        while done < chunks {
            let batch = (chunks - done).min(CHUNKS_PER_BATCH);
            let this = &*self;
            let outputs = exec.map_indexed(batch, |i| {
                let lo = (done + i) * CHUNK_PARENTS;
                this.expand_chunk(lo, (lo + CHUNK_PARENTS).min(parents))
            });
            for out in outputs {
                let out = out?;
                for (i, key) in out.keys.into_iter().enumerate() {
                    let word = &out.words[i * len..(i + 1) * len];
                    if self.seen.insert(key, word)? {
                        next.words.extend_from_slice(word);
                        next.profiles.extend_from_slice(&out.profiles[i * pw..(i + 1) * pw]);
                        next.count += 1;
                    }
                }
            }
            done += batch;
            self.update_peak();
            let progress = Progress {
                length: len,
                found_in_generation: next.count,
                key_store: self.key_store(),
            };
            let over_memory = self.config.memory_budget.is_some_and(|b| self.memory_in_use(&next) > b);
            if over_memory || interrupt(&progress) {
                self.finished = Some(Termination::BudgetExceeded);
                return Ok(self.finished);
            }
        }
        if next.count == 0 {
            self.finished = Some(Termination::Exhausted);
        } else if len > self.config.effective_max_length() {
            self.finished = Some(Termination::LengthCapHit);
        } else {
            self.per_length.push(next.count as u64);
            self.current = next;
        }
        Ok(self.finished)
    }

    pub fn report(&self, duration: Option<Duration>) -> EnumerationReport {
        let total = self
            .per_length
            .iter()
            .fold(BigUint::from(0u32), |acc, &c| acc + BigUint::from(c));
        let collision_probability_bound = (self.config.mode == KeyMode::Fingerprint).then(|| {
            let keys = self.peak.keys as f64;
            // N(N-1)/2 pairs, each colliding with probability 2^-128
            keys * (keys - 1.0) / 2.0 * libm::exp2(-128.0)
        });
        EnumerationReport {
            k: self.config.k,
            n: self.config.n,
            total_classes: total,
            per_length: self.per_length.clone(),
            max_rep_length: self.per_length.len() - 1,
            termination: self.finished.unwrap_or(Termination::BudgetExceeded),
            mode: self.config.mode,
            duration,
            peak_key_store: self.peak,
            collision_probability_bound,
        }
    }
}

fn same_class(a: &CandidateKey, b: &CandidateKey) -> bool {
    match (a, b) {
        (CandidateKey::Fingerprint { digest: x, .. }, CandidateKey::Fingerprint { digest: y, .. }) => x == y,
        _ => a == b,
    }
}

fn check_collision(stored: &CandidateKey, key: &CandidateKey, word: &[Letter]) -> Result<(), EnumerationError> {
    if let (CandidateKey::Fingerprint { layer: Some(a), .. }, CandidateKey::Fingerprint { digest, layer: Some(b) }) =
        (stored, key)
    {
        if a != b {
            return Err(EnumerationError::FingerprintCollision {
                word: Word::from(word),
                digest: *digest,
            });
        }
    }
    Ok(())
}

fn class_hash(hasher: &DefaultHashBuilder, key: &CandidateKey) -> u64 {
    match key {
        CandidateKey::Fingerprint { digest, .. } => hasher.hash_one(digest),
        other => hasher.hash_one(other),
    }
}

/// Runs the enumeration to completion (or budget exhaustion).
pub fn count_classes_with<E, I>(
    config: EnumerationConfig,
    exec: &E,
    mut interrupt: I,
) -> Result<EnumerationReport, EnumerationError>
where
    E: ChunkExecutor,
    I: FnMut(&Progress) -> bool,
{
    let mut e = Enumerator::new(config)?;
    while e.advance(exec, &mut interrupt)?.is_none() {}
    Ok(e.report(None))
}

/// Single-threaded [`count_classes_with`] without interruption.
pub fn count_classes(config: EnumerationConfig) -> Result<EnumerationReport, EnumerationError> {
    count_classes_with(config, &Sequential, |_| false)
}

/// Streams minimal representatives by increasing length, lexicographically
/// within a length. After the stream ends, [`MinimalRepresentatives::termination`]
/// tells whether it was complete.
pub struct MinimalRepresentatives {
    engine: Enumerator,
    next_index: usize,
    error: bool,
}

impl MinimalRepresentatives {
    pub fn termination(&self) -> Option<Termination> {
        self.engine.termination()
    }

    pub fn engine(&self) -> &Enumerator {
        &self.engine
    }
}

impl Iterator for MinimalRepresentatives {
    type Item = Result<Word, EnumerationError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.error {
            return None;
        }
        loop {
            let gen = self.engine.current();
            if self.next_index < gen.len() {
                let w = Word::from(gen.word(self.next_index));
                self.next_index += 1;
                return Some(Ok(w));
            }
            if self.engine.termination().is_some() {
                return None;
            }
            match self.engine.advance(&Sequential, &mut |_| false) {
                Ok(Some(_)) => return None,
                Ok(None) => self.next_index = 0,
                Err(e) => {
                    self.error = true;
                    return Some(Err(e));
                }
            }
        }
    }
}

pub fn enumerate_minimal(config: EnumerationConfig) -> Result<MinimalRepresentatives, EnumerationError> {
    Ok(MinimalRepresentatives {
        engine: Enumerator::new(config)?,
        next_index: 0,
        error: false,
    })
}
