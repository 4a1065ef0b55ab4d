//! Closed-form bounds, combinatorial recurrences and inequalities on
//! `C_k(n)`, evaluated and checked against exact counts.
//!
//! Integer-valued bounds are arbitrary precision. Real-valued bounds are
//! `f64`, logarithms are base 2, and strict inequalities are checked
//! literally; `margin` shows how close each check came.

mod analytic;
mod table;

pub use analytic::{
    appendix_inequality_check, f_k, g_kx, g_unimodal_on_samples, identity_residual, upper_proof_side_inequality, y_max,
    InequalityCheck, InequalityTerm,
};
pub use table::{closed_form, CountEntry, CountTable, Exactness, Provenance};

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::BoundsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    NaiveEq1,
    NaiveEq2,
    KpppsEven,
    KpppsOdd,
    MainLower,
    MainUpper,
    Prop3,
    Prop6,
    Eq5C2,
    KpppsRecLower,
    KpppsRecUpper,
}

impl BoundId {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::NaiveEq1 => "naive-eq1",
            BoundId::NaiveEq2 => "naive-eq2",
            BoundId::KpppsEven => "kppps-even",
            BoundId::KpppsOdd => "kppps-odd",
            BoundId::MainLower => "main-lower",
            BoundId::MainUpper => "main-upper",
            BoundId::Prop3 => "prop3",
            BoundId::Prop6 => "prop6",
            BoundId::Eq5C2 => "eq5-c2",
            BoundId::KpppsRecLower => "kppps-rec-lower",
            BoundId::KpppsRecUpper => "kppps-rec-upper",
        }
    }
}

/// What the bound values are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scale {
    /// `C_k(n)` itself.
    Count,
    /// `log2 C_k(n)`.
    Log2,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Int(BigUint),
    Real(f64),
}

impl BoundValue {
    fn to_f64(&self) -> f64 {
        match self {
            BoundValue::Int(v) => v.to_f64().unwrap_or(f64::INFINITY),
            BoundValue::Real(v) => *v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Violated,
    /// `(k, n)` lies outside the bound's validity domain.
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub k: usize,
    pub n: usize,
    pub bound_id: BoundId,
    pub scale: Scale,
    pub lower: Option<BoundValue>,
    pub lower_strict: bool,
    pub upper: Option<BoundValue>,
    pub upper_strict: bool,
    /// The count the bound was checked against (for recurrences, the left-hand side).
    pub exact_value: Option<BigUint>,
    /// `None` when no exact value was available to check against.
    pub satisfied: Option<Verdict>,
    /// Signed distance to the nearest bound on `scale`; negative when violated.
    pub margin: Option<f64>,
    pub note: Option<String>,
}

impl BoundsReport {
    fn new(k: usize, n: usize, bound_id: BoundId, scale: Scale) -> Self {
        BoundsReport {
            k,
            n,
            bound_id,
            scale,
            lower: None,
            lower_strict: false,
            upper: None,
            upper_strict: false,
            exact_value: None,
            satisfied: None,
            margin: None,
            note: None,
        }
    }

    fn not_applicable(k: usize, n: usize, bound_id: BoundId, scale: Scale) -> Self {
        BoundsReport {
            satisfied: Some(Verdict::NotApplicable),
            ..Self::new(k, n, bound_id, scale)
        }
    }

    fn lower(mut self, v: BoundValue, strict: bool) -> Self {
        self.lower = Some(v);
        self.lower_strict = strict;
        self
    }

    fn upper(mut self, v: BoundValue, strict: bool) -> Self {
        self.upper = Some(v);
        self.upper_strict = strict;
        self
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }

    /// Records `exact` and checks it against both sides.
    fn check(mut self, exact: Option<&BigUint>) -> Self {
        let Some(c) = exact else {
            return self;
        };
        let mut holds = true;
        let mut margin = f64::INFINITY;
        if let Some(lo) = &self.lower {
            let ord = compare(self.scale, c, lo);
            holds &= ord == Ordering::Greater || (!self.lower_strict && ord == Ordering::Equal);
            margin = margin.min(difference(self.scale, c, lo));
        }
        if let Some(hi) = &self.upper {
            let ord = compare(self.scale, c, hi);
            holds &= ord == Ordering::Less || (!self.upper_strict && ord == Ordering::Equal);
            margin = margin.min(-difference(self.scale, c, hi));
        }
        self.exact_value = Some(c.clone());
        self.satisfied = Some(if holds { Verdict::Holds } else { Verdict::Violated });
        self.margin = Some(margin);
        self
    }
}

/// `log2 x` for arbitrarily large `x` (`-inf` for zero).
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return libm::log2(x.to_u64().unwrap_or(0) as f64);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap_or(u64::MAX);
    libm::log2(top as f64) + shift as f64
}

/// Orders the observed quantity (`c` or `log2 c`) against a bound value.
fn compare(scale: Scale, c: &BigUint, bound: &BoundValue) -> Ordering {
    match (scale, bound) {
        (Scale::Count, BoundValue::Int(b)) => c.cmp(b),
        (Scale::Count, BoundValue::Real(b)) => c.to_f64().unwrap_or(f64::INFINITY).total_cmp(b),
        (Scale::Log2, BoundValue::Real(b)) => log2_big(c).total_cmp(b),
        // c against 2^e without materializing 2^e
        (Scale::Log2, BoundValue::Int(e)) => match e.to_u64() {
            None => Ordering::Less,
            Some(e) => {
                let bits = c.bits();
                match bits.cmp(&(e + 1)) {
                    Ordering::Less => Ordering::Less,
                    Ordering::Greater => Ordering::Greater,
                    Ordering::Equal if c.trailing_zeros() == Some(e) => Ordering::Equal,
                    Ordering::Equal => Ordering::Greater,
                }
            }
        },
    }
}

/// Observed minus bound, on the bound's scale.
fn difference(scale: Scale, c: &BigUint, bound: &BoundValue) -> f64 {
    match (scale, bound) {
        (Scale::Count, BoundValue::Int(b)) => (BigInt::from(c.clone()) - BigInt::from(b.clone()))
            .to_f64()
            .unwrap_or(f64::NAN),
        (Scale::Count, b) => c.to_f64().unwrap_or(f64::INFINITY) - b.to_f64(),
        (Scale::Log2, b) => log2_big(c) - b.to_f64(),
    }
}

fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// `(k^{n+1} − 1)/(k − 1) = 1 + k + ... + k^n`.
pub fn geometric_sum(k: usize, n: usize) -> BigUint {
    (0..=n).fold(BigUint::zero(), |acc, j| acc + pow(k, j))
}

/// Counting short words (lower, on `C`) and subsets of them (upper, as an
/// exponent on `log2 C`). Both need `k ≥ 2`.
pub fn naive_bounds(k: usize, n: usize, exact: Option<&BigUint>) -> Vec<BoundsReport> {
    if k < 2 {
        return alloc::vec![
            BoundsReport::not_applicable(k, n, BoundId::NaiveEq1, Scale::Count),
            BoundsReport::not_applicable(k, n, BoundId::NaiveEq2, Scale::Log2),
        ];
    }
    let s = geometric_sum(k, n);
    alloc::vec![
        BoundsReport::new(k, n, BoundId::NaiveEq1, Scale::Count)
            .lower(BoundValue::Int(s.clone()), false)
            .check(exact),
        BoundsReport::new(k, n, BoundId::NaiveEq2, Scale::Log2)
            .upper(BoundValue::Int(s), false)
            .check(exact),
    ]
}

/// The earlier `k`-growth bounds on `log2 C_k(n)`, which switch form with
/// the parity of `n`. Defined for `k ≥ 2` and `n ≥ 1`.
pub fn kppps_bounds(k: usize, n: usize, exact: Option<&BigUint>) -> BoundsReport {
    let id = if n.is_multiple_of(2) {
        BoundId::KpppsEven
    } else {
        BoundId::KpppsOdd
    };
    // at n = 0 the even-case interval is empty
    if k < 2 || n == 0 {
        return BoundsReport::not_applicable(k, n, id, Scale::Log2);
    }
    let (kf, nf) = (k as f64, n as f64);
    let log2k = libm::log2(kf);
    // k^n / 3^(n^2), in log space to keep it finite
    let ratio = libm::exp2(nf * log2k - nf * nf * libm::log2(3.0));
    let big = libm::pow(3.0, nf) * libm::pow(kf, nf);
    let r = BoundsReport::new(k, n, id, Scale::Log2);
    let r = if n.is_multiple_of(2) {
        r.lower(BoundValue::Real(ratio * log2k), false)
            .upper(BoundValue::Real(big * log2k), true)
    } else {
        r.lower(BoundValue::Real(ratio), true)
            .upper(BoundValue::Real(big), true)
    };
    r.check(exact)
}

pub fn main_lower_value(k: usize, n: usize) -> f64 {
    let q = n as f64 / k as f64;
    libm::pow(q, (k - 1) as f64) * libm::log2(q)
}

pub fn main_upper_value(k: usize, n: usize) -> f64 {
    let (kf, nf) = (k as f64, n as f64);
    kf * libm::pow((nf + 2.0 * kf - 3.0) / (kf - 1.0), kf - 1.0) * libm::log2(nf) * libm::log2(kf)
}

/// The two-sided `Θ(n^{k−1} log n)` sandwich of `log2 C_k(n)`, for `k, n > 1`.
pub fn main_bounds(k: usize, n: usize, exact: Option<&BigUint>) -> Vec<BoundsReport> {
    if k < 2 || n < 2 {
        return alloc::vec![
            BoundsReport::not_applicable(k, n, BoundId::MainLower, Scale::Log2),
            BoundsReport::not_applicable(k, n, BoundId::MainUpper, Scale::Log2),
        ];
    }
    alloc::vec![
        BoundsReport::new(k, n, BoundId::MainLower, Scale::Log2)
            .lower(BoundValue::Real(main_lower_value(k, n)), true)
            .check(exact),
        BoundsReport::new(k, n, BoundId::MainUpper, Scale::Log2)
            .upper(BoundValue::Real(main_upper_value(k, n)), true)
            .check(exact),
    ]
}

fn lookup(table: &CountTable, k: usize, n: usize, missing: &mut Vec<(usize, usize)>) -> BigUint {
    table.exact(k, n).unwrap_or_else(|| {
        missing.push((k, n));
        BigUint::zero()
    })
}

/// `Σ_{p=0}^{n} C_{k−1}(n−p)^{p+1}`: classes split by how often the last
/// letter occurs.
pub fn prop3_lower(k: usize, n: usize, table: &CountTable) -> Result<BigUint, BoundsError> {
    if k < 2 {
        return Err(BoundsError::MissingEntries(alloc::vec![(0, n)]));
    }
    let mut missing = Vec::new();
    let mut sum = BigUint::zero();
    for p in 0..=n {
        let c = lookup(table, k - 1, n - p, &mut missing);
        sum += num_traits::pow(c, p + 1);
    }
    if missing.is_empty() {
        Ok(sum)
    } else {
        Err(BoundsError::MissingEntries(missing))
    }
}

/// `1 + Σ_{m=0}^{n−1} k^{m+1} · C_{k−1}(n−m+1)^m · C_{k−1}(n−m)`: classes
/// split by richness `m`. Entries raised to the power 0 are not required.
pub fn prop6_upper(k: usize, n: usize, table: &CountTable) -> Result<BigUint, BoundsError> {
    if k < 2 {
        return Err(BoundsError::MissingEntries(alloc::vec![(0, n)]));
    }
    let mut missing = Vec::new();
    let mut sum = BigUint::one();
    for m in 0..n {
        let segments = if m == 0 {
            BigUint::one()
        } else {
            num_traits::pow(lookup(table, k - 1, n - m + 1, &mut missing), m)
        };
        let tail = lookup(table, k - 1, n - m, &mut missing);
        sum += pow(k, m + 1) * segments * tail;
    }
    if missing.is_empty() {
        Ok(sum)
    } else {
        Err(BoundsError::MissingEntries(missing))
    }
}

/// `2 Σ_{m=0}^{2n−1} n^m = 2(n^{2n} − 1)/(n − 1)`, for `n ≥ 2`.
pub fn c2_upper(n: usize) -> Option<BigUint> {
    (n >= 2).then(|| (0..2 * n).fold(BigUint::zero(), |acc, m| acc + pow(n, m)) * 2u32)
}

pub fn prop3_report(k: usize, n: usize, table: &CountTable) -> Result<BoundsReport, BoundsError> {
    if k < 2 {
        return Ok(BoundsReport::not_applicable(k, n, BoundId::Prop3, Scale::Count));
    }
    Ok(BoundsReport::new(k, n, BoundId::Prop3, Scale::Count)
        .lower(BoundValue::Int(prop3_lower(k, n, table)?), false)
        .check(table.exact(k, n).as_ref()))
}

pub fn prop6_report(k: usize, n: usize, table: &CountTable) -> Result<BoundsReport, BoundsError> {
    if k < 2 {
        return Ok(BoundsReport::not_applicable(k, n, BoundId::Prop6, Scale::Count));
    }
    Ok(BoundsReport::new(k, n, BoundId::Prop6, Scale::Count)
        .upper(BoundValue::Int(prop6_upper(k, n, table)?), false)
        .check(table.exact(k, n).as_ref()))
}

/// Only meaningful for `k = 2`.
pub fn c2_report(n: usize, exact: Option<&BigUint>) -> BoundsReport {
    match c2_upper(n) {
        None => BoundsReport::not_applicable(2, n, BoundId::Eq5C2, Scale::Count),
        Some(u) => BoundsReport::new(2, n, BoundId::Eq5C2, Scale::Count)
            .upper(BoundValue::Int(u), false)
            .check(exact),
    }
}

/// Checks `C_{k+ℓ}(n+2) ≥ C_k(n)^{ℓ+2}` (for `ℓ ≥ 1`) and
/// `C_k(n+2) ≤ (k+1)^{2k} C_k(n)^{2k−1}` wherever the table has both sides.
///
/// Reports carry the left-hand `(k+ℓ, n+2)` or `(k, n+2)` as their `(k, n)`.
pub fn kppps_recurrence_check(table: &CountTable) -> Vec<BoundsReport> {
    let mut out = Vec::new();
    let lhs_cells: Vec<(usize, usize)> = table
        .entries()
        .filter(|(_, e)| e.exactness == Exactness::Exact)
        .map(|(kn, _)| kn)
        .filter(|&(_, n)| n >= 2)
        .collect();
    for &(kk, nn) in &lhs_cells {
        let lhs = table.exact(kk, nn);
        let n = nn - 2;
        for k in 1..kk {
            let l = kk - k;
            if let Some(base) = table.exact(k, n) {
                out.push(
                    BoundsReport::new(kk, nn, BoundId::KpppsRecLower, Scale::Count)
                        .lower(BoundValue::Int(num_traits::pow(base, l + 2)), false)
                        .with_note(alloc::format!("k={k} l={l} n={n}"))
                        .check(lhs.as_ref()),
                );
            }
        }
        if let Some(base) = table.exact(kk, n) {
            let bound = pow(kk + 1, 2 * kk) * num_traits::pow(base, 2 * kk - 1);
            out.push(
                BoundsReport::new(kk, nn, BoundId::KpppsRecUpper, Scale::Count)
                    .upper(BoundValue::Int(bound), false)
                    .with_note(alloc::format!("k={kk} n={n}"))
                    .check(lhs.as_ref()),
            );
        }
    }
    out
}

/// Which families [`all_bounds`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundFamily {
    All,
    Naive,
    Kppps,
    Main,
    Prop3,
    Prop6,
    Eq5,
}

/// Every bound family on a single `(k, n)`, using `table` for exact values.
/// Families whose table dependencies are missing are skipped.
pub fn all_bounds(k: usize, n: usize, table: &CountTable, which: BoundFamily) -> Vec<BoundsReport> {
    let exact = table.exact(k, n);
    let exact = exact.as_ref();
    let wants = |f| which == BoundFamily::All || which == f;
    let mut out = Vec::new();
    if wants(BoundFamily::Naive) {
        out.extend(naive_bounds(k, n, exact));
    }
    if wants(BoundFamily::Kppps) {
        out.push(kppps_bounds(k, n, exact));
    }
    if wants(BoundFamily::Main) {
        out.extend(main_bounds(k, n, exact));
    }
    if wants(BoundFamily::Prop3) {
        out.extend(prop3_report(k, n, table).ok());
    }
    if wants(BoundFamily::Prop6) {
        out.extend(prop6_report(k, n, table).ok());
    }
    if wants(BoundFamily::Eq5) && k == 2 {
        out.push(c2_report(n, exact));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn real(v: &Option<BoundValue>) -> f64 {
        v.as_ref().unwrap().to_f64()
    }

    #[test]
    fn naive_examples() {
        let r = naive_bounds(2, 3, Some(&big(68)));
        assert_eq!(r[0].lower, Some(BoundValue::Int(big(15))));
        assert_eq!(r[1].upper, Some(BoundValue::Int(big(15))));
        assert!(r.iter().all(|r| r.satisfied == Some(Verdict::Holds)));
        let r = naive_bounds(2, 1, Some(&big(4)));
        assert_eq!(r[0].lower, Some(BoundValue::Int(big(3))));
        assert_eq!(r[1].upper, Some(BoundValue::Int(big(3))));
        assert!(r.iter().all(|r| r.satisfied == Some(Verdict::Holds)));
        // equality is allowed on both sides
        assert_eq!(r[0].margin, Some(1.0));
        for n in 0..5 {
            assert!(naive_bounds(1, n, None)
                .iter()
                .all(|r| r.satisfied == Some(Verdict::NotApplicable)));
        }
    }

    #[test]
    fn naive_upper_is_compared_exactly() {
        let r = naive_bounds(2, 1, Some(&big(8)));
        assert_eq!(r[1].satisfied, Some(Verdict::Holds));
        let r = naive_bounds(2, 1, Some(&big(9)));
        assert_eq!(r[1].satisfied, Some(Verdict::Violated));
        assert!(r[1].margin.unwrap() < 0.0);
        let r = naive_bounds(2, 1, Some(&big(2)));
        assert_eq!(r[0].satisfied, Some(Verdict::Violated));
    }

    #[test]
    fn kppps_examples() {
        let r = kppps_bounds(2, 2, Some(&big(16)));
        assert_eq!(r.bound_id, BoundId::KpppsEven);
        assert!((real(&r.lower) - 4.0 / 81.0).abs() < 1e-12);
        assert!((real(&r.upper) - 36.0).abs() < 1e-12);
        assert_eq!(r.satisfied, Some(Verdict::Holds));
        let r = kppps_bounds(2, 3, Some(&big(68)));
        assert_eq!(r.bound_id, BoundId::KpppsOdd);
        assert!((real(&r.lower) - 8.0 / 19683.0).abs() < 1e-15);
        assert!((real(&r.upper) - 216.0).abs() < 1e-9);
        assert_eq!(r.satisfied, Some(Verdict::Holds));
        let r = kppps_bounds(3, 1, Some(&big(8)));
        assert!((real(&r.lower) - 1.0).abs() < 1e-12);
        assert!((real(&r.upper) - 9.0).abs() < 1e-9);
        assert_eq!(r.satisfied, Some(Verdict::Holds));
        assert_eq!(kppps_bounds(1, 3, None).satisfied, Some(Verdict::NotApplicable));
        assert_eq!(kppps_bounds(4, 0, None).satisfied, Some(Verdict::NotApplicable));
        assert_eq!(kppps_bounds(2, 3, None).satisfied, None);
    }

    #[test]
    fn main_examples() {
        let r = main_bounds(2, 4, Some(&big(312)));
        assert!((real(&r[0].lower) - 2.0).abs() < 1e-12);
        assert!((real(&r[1].upper) - 20.0).abs() < 1e-12);
        assert!(r.iter().all(|r| r.satisfied == Some(Verdict::Holds)));
        for k in 2..6 {
            assert_eq!(main_lower_value(k, k), 0.0);
        }
        assert!((main_lower_value(3, 6) - 4.0).abs() < 1e-12);
        let expected = 3.0 * 20.25 * libm::log2(6.0) * libm::log2(3.0);
        assert!((main_upper_value(3, 6) - expected).abs() < 1e-9);
        assert!((main_upper_value(3, 6) - 248.9).abs() < 0.05);
        assert!(main_bounds(1, 5, None)
            .iter()
            .all(|r| r.satisfied == Some(Verdict::NotApplicable)));
        assert!(main_bounds(4, 1, None)
            .iter()
            .all(|r| r.satisfied == Some(Verdict::NotApplicable)));
    }

    #[test]
    fn combinatorial_examples() {
        let t = CountTable::paper();
        assert_eq!(prop3_lower(2, 2, &t).unwrap(), big(8));
        assert_eq!(prop3_lower(3, 2, &t).unwrap(), big(33));
        assert_eq!(prop3_lower(2, 0, &t).unwrap(), big(1));
        assert_eq!(prop6_upper(2, 2, &t).unwrap(), big(31));
        assert_eq!(prop6_upper(3, 2, &t).unwrap(), big(625));
        for k in 2..6 {
            assert_eq!(prop6_upper(k, 0, &t).unwrap(), big(1));
        }
        assert_eq!(c2_upper(2), Some(big(30)));
        assert_eq!(c2_upper(3), Some(big(728)));
        assert_eq!(c2_upper(5), Some(big(4_882_812)));
        assert_eq!(c2_upper(1), None);
        assert_eq!(c2_report(1, None).satisfied, Some(Verdict::NotApplicable));
        assert_eq!(c2_report(5, Some(&big(1560))).satisfied, Some(Verdict::Holds));
    }

    #[test]
    fn missing_dependencies_are_listed() {
        let t = CountTable::paper();
        // C_3(6) is only known as a lower bound
        let err = prop3_lower(4, 6, &t).unwrap_err();
        assert!(matches!(err, BoundsError::MissingEntries(ref m) if m.contains(&(3, 6))));
        assert!(prop6_upper(3, 12, &t).is_err());
    }

    #[test]
    fn recurrence_examples() {
        let t = CountTable::paper();
        let reps = kppps_recurrence_check(&t);
        let find = |id, k, n, note: &str| {
            reps.iter()
                .find(|r| r.bound_id == id && r.k == k && r.n == n && r.note.as_deref() == Some(note))
                .unwrap()
        };
        let r = find(BoundId::KpppsRecLower, 2, 3, "k=1 l=1 n=1");
        assert_eq!(r.lower, Some(BoundValue::Int(big(8))));
        let r = find(BoundId::KpppsRecUpper, 2, 3, "k=2 n=1");
        assert_eq!(r.upper, Some(BoundValue::Int(big(5184))));
        let r = find(BoundId::KpppsRecLower, 3, 2, "k=2 l=1 n=0");
        assert_eq!(r.lower, Some(BoundValue::Int(big(1))));
        assert!(reps.iter().all(|r| r.satisfied == Some(Verdict::Holds)), "{reps:?}");
    }

    #[test]
    fn log2_of_large_values() {
        let x = BigUint::one() << 300u32;
        assert_eq!(log2_big(&x), 300.0);
        assert!((log2_big(&big(68)) - libm::log2(68.0)).abs() < 1e-12);
    }

    #[test]
    fn every_published_exact_value_is_bracketed() {
        let t = CountTable::paper();
        for ((k, n), e) in t.entries() {
            if e.exactness != Exactness::Exact {
                continue;
            }
            for r in all_bounds(k, n, &t, BoundFamily::All) {
                assert_ne!(r.satisfied, Some(Verdict::Violated), "{r:?}");
            }
        }
    }
}
