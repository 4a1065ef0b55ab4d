use alloc::collections::BTreeMap;
use num_bigint::BigUint;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Produced by the enumeration engine in this process.
    Computed,
    /// Published value.
    Paper,
    /// `C_1(n) = n + 1`, `C_k(0) = 1`, `C_k(1) = 2^k`.
    ClosedForm,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::Paper => "paper",
            Provenance::ClosedForm => "closed-form",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exactness {
    Exact,
    /// Only `C_k(n) ≥ value` is known.
    LowerBound,
}

impl Exactness {
    pub fn as_str(self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::LowerBound => "lower-bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountEntry {
    pub value: BigUint,
    pub provenance: Provenance,
    pub exactness: Exactness,
}

/// Known values of `C_k(n)`, keyed by `(k, n)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountTable {
    entries: BTreeMap<(usize, usize), CountEntry>,
}

/// Published exact values: `(k, n, C_k(n))`.
const PUBLISHED_EXACT: &[(usize, usize, u64)] = &[
    (2, 2, 16),
    (2, 3, 68),
    (2, 4, 312),
    (2, 5, 1_560),
    (2, 6, 8_528),
    (2, 7, 50_864),
    (2, 8, 329_248),
    (2, 9, 2_298_592),
    (2, 10, 17_203_264),
    (2, 11, 137_289_920),
    (3, 2, 152),
    (3, 3, 5_312),
    (3, 4, 334_202),
    (3, 5, 38_450_477),
    (4, 2, 2_326),
    (4, 3, 1_395_588),
    (5, 2, 52_132),
    (5, 3, 1_031_153_002),
    (6, 2, 1_602_420),
    (7, 2, 64_529_264),
];

/// Published lower bounds (`C_k(n) ≥ value`).
const PUBLISHED_LOWER: &[(usize, usize, u64)] = &[
    (3, 6, 390_000_000),
    (4, 4, 730_000_000),
    (6, 3, 230_000_000),
    (8, 2, 1_730_000_000),
];

/// `C_1(n) = n + 1`, `C_k(0) = 1`, `C_k(1) = 2^k`.
pub fn closed_form(k: usize, n: usize) -> Option<BigUint> {
    match (k, n) {
        (0, _) => None,
        (1, n) => Some(BigUint::from(n as u64 + 1)),
        (_, 0) => Some(BigUint::one()),
        (k, 1) => Some(BigUint::one() << k),
        _ => None,
    }
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The published table: column `k = 1` for `n ≤ 11`, rows `n = 0, 1` for
    /// `k ≤ 8`, and the remaining computed and lower-bound cells.
    pub fn paper() -> Self {
        let mut t = CountTable::new();
        let mut put = |k, n, value: BigUint, exactness| {
            t.entries.insert(
                (k, n),
                CountEntry {
                    value,
                    provenance: Provenance::Paper,
                    exactness,
                },
            );
        };
        for n in 0..=11 {
            put(1, n, BigUint::from(n as u64 + 1), Exactness::Exact);
        }
        for k in 2..=8 {
            put(k, 0, BigUint::one(), Exactness::Exact);
            put(k, 1, BigUint::one() << k, Exactness::Exact);
        }
        for &(k, n, v) in PUBLISHED_EXACT {
            put(k, n, BigUint::from(v), Exactness::Exact);
        }
        for &(k, n, v) in PUBLISHED_LOWER {
            put(k, n, BigUint::from(v), Exactness::LowerBound);
        }
        t
    }

    pub fn insert(&mut self, k: usize, n: usize, entry: CountEntry) -> Option<CountEntry> {
        self.entries.insert((k, n), entry)
    }

    pub fn insert_computed(&mut self, k: usize, n: usize, value: BigUint) -> Option<CountEntry> {
        self.insert(
            k,
            n,
            CountEntry {
                value,
                provenance: Provenance::Computed,
                exactness: Exactness::Exact,
            },
        )
    }

    pub fn get(&self, k: usize, n: usize) -> Option<&CountEntry> {
        self.entries.get(&(k, n))
    }

    /// An exact `C_k(n)` from the table, else from the closed forms.
    pub fn exact(&self, k: usize, n: usize) -> Option<BigUint> {
        match self.get(k, n) {
            Some(e) if e.exactness == Exactness::Exact => Some(e.value.clone()),
            _ => closed_form(k, n),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &CountEntry)> + '_ {
        self.entries.iter().map(|(&kn, e)| (kn, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_values() {
        let t = CountTable::paper();
        assert_eq!(t.exact(2, 11), Some(BigUint::from(137_289_920u64)));
        assert_eq!(t.exact(5, 3), Some(BigUint::from(1_031_153_002u64)));
        assert_eq!(t.exact(1, 7), Some(BigUint::from(8u32)));
        assert_eq!(t.exact(8, 1), Some(BigUint::from(256u32)));
        assert_eq!(t.exact(8, 2), None);
        assert_eq!(t.get(8, 2).unwrap().exactness, Exactness::LowerBound);
        assert_eq!(t.exact(3, 7), None);
        // 12 + 7 * 2 + exact cells + lower-bound cells
        assert_eq!(t.len(), 12 + 14 + PUBLISHED_EXACT.len() + PUBLISHED_LOWER.len());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(1, 50), Some(BigUint::from(51u32)));
        assert_eq!(closed_form(9, 0), Some(BigUint::one()));
        assert_eq!(closed_form(10, 1), Some(BigUint::from(1024u32)));
        assert_eq!(closed_form(2, 2), None);
        for k in 1..=8 {
            let t = CountTable::paper();
            for n in 0..=1 {
                assert_eq!(t.get(k, n).map(|e| e.value.clone()), closed_form(k, n));
            }
        }
    }
}
