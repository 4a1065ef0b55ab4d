//! The real-variable inequality behind the inductive upper bound.
//!
//! `F_k(x) = ((x + 2k − 1)/k)^k` and `G_{k,x}(y) = (y + 1) F_k(x − y + 1)`.
//! `G_{k,x}` rises on `[0, y_max)` and falls after, with
//! `y_max = (k + x)/(k + 1)` and `G_{k,x}(y_max) = F_{k+1}(x)`.

use alloc::vec::Vec;

use num_bigint::BigUint;

pub fn f_k(k: u32, x: f64) -> f64 {
    let kf = k as f64;
    libm::pow((x + 2.0 * kf - 1.0) / kf, kf)
}

pub fn g_kx(k: u32, x: f64, y: f64) -> f64 {
    (y + 1.0) * f_k(k, x - y + 1.0)
}

pub fn y_max(k: u32, x: f64) -> f64 {
    (k as f64 + x) / (k as f64 + 1.0)
}

/// `|G_{k,x}(y_max) − F_{k+1}(x)| / |F_{k+1}(x)|`.
pub fn identity_residual(k: u32, x: f64) -> f64 {
    let lhs = g_kx(k, x, y_max(k, x));
    let rhs = f_k(k + 1, x);
    ((lhs - rhs) / rhs).abs()
}

/// Checks strict increase before `y_max` and strict decrease after it on
/// `samples + 1` evenly spaced points of `[0, x]`.
pub fn g_unimodal_on_samples(k: u32, x: f64, samples: usize) -> bool {
    let peak = y_max(k, x);
    let ys: Vec<f64> = (0..=samples).map(|i| x * i as f64 / samples as f64).collect();
    ys.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        let (ga, gb) = (g_kx(k, x, a), g_kx(k, x, b));
        if b <= peak {
            gb > ga
        } else if a >= peak {
            gb < ga
        } else {
            true
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityTerm {
    pub m: usize,
    pub lhs: f64,
    pub rhs: f64,
    /// Decided in exact integer arithmetic.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityCheck {
    pub k: usize,
    pub n: usize,
    pub holds: bool,
    pub terms: Vec<InequalityTerm>,
    /// Real maximizer of `m ↦ (m+1)((n−m+2k−2)/(k−1))^{k−1}`.
    pub y_max: f64,
}

/// `(m+1)((n−m+2k−2)/(k−1))^{k−1} ≤ ((n+2k−1)/k)^k` for `m = 0..n−1`, with
/// `k, n ≥ 2`.
///
/// Compared exactly as
/// `(m+1)(n−m+2k−2)^{k−1} k^k ≤ (n+2k−1)^k (k−1)^{k−1}`.
pub fn appendix_inequality_check(k: usize, n: usize) -> InequalityCheck {
    assert!(k >= 2 && n >= 2, "defined for k, n >= 2");
    let big = |v: usize| BigUint::from(v);
    let rhs_exact = num_traits::pow(big(n + 2 * k - 1), k) * num_traits::pow(big(k - 1), k - 1);
    let kk = num_traits::pow(big(k), k);
    let rhs = f_k(k as u32, n as f64);
    let terms: Vec<InequalityTerm> = (0..n)
        .map(|m| {
            let lhs_exact = big(m + 1) * num_traits::pow(big(n - m + 2 * k - 2), k - 1) * &kk;
            InequalityTerm {
                m,
                lhs: g_kx(k as u32 - 1, n as f64, m as f64),
                rhs,
                holds: lhs_exact <= rhs_exact,
            }
        })
        .collect();
    InequalityCheck {
        k,
        n,
        holds: terms.iter().all(|t| t.holds),
        terms,
        y_max: y_max(k as u32 - 1, n as f64),
    }
}

/// `log2 n + n < F_k(n) log2 n`, used to close the induction (`n, k ≥ 2`).
pub fn upper_proof_side_inequality(k: usize, n: usize) -> bool {
    let l = libm::log2(n as f64);
    l + (n as f64) < f_k(k as u32, n as f64) * l
}
