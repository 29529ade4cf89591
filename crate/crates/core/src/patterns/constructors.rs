//! Explicit periodic colorings for the closed-form families. Each case is
//! written as a product of repeated blocks so it can be read off against the
//! usual `(123)^k(456)^k` notation.

use super::word::{run, PatternError, PatternWord};
use crate::distance::DistanceSet;
use crate::families::{classify, detect, ChiValue, Family};
use crate::square::SquareSet;

/// `1 2 ... p`: the coloring `x ↦ 1 + (x mod p)`. Proper for `G(S)` iff no
/// element of `S` is a multiple of `p`.
pub fn mod_p_pattern(p: u32) -> PatternWord {
    assert!(p >= 1);
    PatternWord::new(run(1, p)).expect("p >= 1")
}

const A: &[u32] = &[1, 2, 3];
const B: &[u32] = &[4, 5, 6];
const C: &[u32] = &[7, 8, 9];

/// Six-color pattern for `D = {1, a}`, `a ≥ 3`, split on `a mod 3`.
///
/// | a      | word                       | period   |
/// |--------|----------------------------|----------|
/// | 3k     | (123)^k (456)^(k-1) 45     | 2a - 1   |
/// | 3k + 1 | (123)^k (456)^k            | 2a - 2   |
/// | 3k + 2 | (123)^(k+1) (456)^k 45     | 2a + 1   |
pub fn pattern_1a(a: u64) -> Result<PatternWord, PatternError> {
    if a < 3 {
        return Err(PatternError::ParameterTooSmall(a));
    }
    let k = (a / 3) as usize;
    match a % 3 {
        0 => PatternWord::compose(&[(A, k), (B, k - 1), (&[4, 5], 1)]),
        1 => PatternWord::compose(&[(A, k), (B, k)]),
        _ => PatternWord::compose(&[(A, k + 1), (B, k), (&[4, 5], 1)]),
    }
}

/// Nine-color pattern for `D = {1, a, a+1}`, `a ≥ 3`.
///
/// | a      | word                                   | period  |
/// |--------|----------------------------------------|---------|
/// | 3k     | (123)^k (456)^k (789)^k                | 3a      |
/// | 3k + 1 | (123)^k (456)^k 7123 (789)^(k-1) 4568  | 3a + 2  |
/// | 3k + 2 | (123)^(k+1) (456)^(k+1) (789)^k 7      | 3a + 1  |
pub fn pattern_1aa1(a: u64) -> Result<PatternWord, PatternError> {
    if a < 3 {
        return Err(PatternError::ParameterTooSmall(a));
    }
    let k = (a / 3) as usize;
    match a % 3 {
        0 => PatternWord::compose(&[(A, k), (B, k), (C, k)]),
        1 => PatternWord::compose(&[
            (A, k),
            (B, k),
            (&[7, 1, 2, 3], 1),
            (C, k - 1),
            (&[4, 5, 6, 8], 1),
        ]),
        _ => PatternWord::compose(&[(A, k + 1), (B, k + 1), (C, k), (&[7], 1)]),
    }
}

/// `(4m+2)`-color pattern for `D = {1, ..., m, a}`, `2 ≤ m`, `a ≥ m + 2`.
///
/// With `q = 2m+1`, `a = kq + r`, `L = [1..q]` and `H = [q+1..2q]`:
///
/// | r          | word                             | period        |
/// |------------|----------------------------------|---------------|
/// | r < m      | L^k H^(k-1) [q+1 .. 3m+r+2]      | 2a - r - m    |
/// | r = m      | L^k H^k                          | 2a - 2m       |
/// | r = m + 1  | L^(k+1) H^k (q+1)(q+2)           | 2a + 1        |
/// | r ≥ m + 2  | L^(k+1) H^k [q+1 .. m+r+1]       | 2a - r + m + 1|
///
/// `H` is the ascending run of the upper colors.
pub fn pattern_1ma(m: u64, a: u64) -> Result<PatternWord, PatternError> {
    if m < 2 || a <= m {
        return Err(PatternError::OutOfRange { m, a });
    }
    if a == m + 1 {
        return Err(PatternError::PathPowerCase { m, a });
    }
    let q = 2 * m + 1;
    let (k, r) = ((a / q) as usize, a % q);
    let q32 = q as u32;
    let (m32, r32) = (m as u32, r as u32);
    let low = run(1, q32);
    let high = run(q32 + 1, 2 * q32);
    if r < m {
        // a > m > r forces k >= 1
        let tail = run(q32 + 1, 3 * m32 + r32 + 2);
        PatternWord::compose(&[(&low, k), (&high, k - 1), (&tail, 1)])
    } else if r == m {
        PatternWord::compose(&[(&low, k), (&high, k)])
    } else if r == m + 1 {
        PatternWord::compose(&[(&low, k + 1), (&high, k), (&[q32 + 1, q32 + 2], 1)])
    } else {
        let tail = run(q32 + 1, m32 + r32 + 1);
        PatternWord::compose(&[(&low, k + 1), (&high, k), (&tail, 1)])
    }
}

/// Period each constructor is expected to produce.
pub fn expected_period_1a(a: u64) -> u64 {
    match a % 3 {
        0 => 2 * a - 1,
        1 => 2 * a - 2,
        _ => 2 * a + 1,
    }
}

pub fn expected_period_1aa1(a: u64) -> u64 {
    match a % 3 {
        0 => 3 * a,
        1 => 3 * a + 2,
        _ => 3 * a + 1,
    }
}

pub fn expected_period_1ma(m: u64, a: u64) -> u64 {
    let r = a % (2 * m + 1);
    if r < m {
        2 * a - r - m
    } else if r == m {
        2 * a - 2 * m
    } else if r == m + 1 {
        2 * a + 1
    } else {
        2 * a - r + m + 1
    }
}

/// Greedy left-to-right coloring needs at most `|S| + 1` colors, since each
/// vertex sees `|S|` earlier neighbours.
pub fn first_fit_bound(s: &SquareSet) -> u64 {
    s.len() as u64 + 1
}

/// The best closed-form pattern for a normalized `D`: the mod-`χ₂` word when
/// the family value is attained by it, the family's general construction
/// otherwise. Callers are expected to verify the result.
pub fn family_pattern(d: &DistanceSet) -> Result<PatternWord, PatternError> {
    // the mod word only works when the value is the clique bound Δ + 1
    let exact = match classify(d).result {
        ChiValue::Exact(v) if v == d.max_degree() + 1 => Some(v as u32),
        _ => None,
    };
    match (detect(d), exact) {
        (Family::General, _) => Err(PatternError::Unsupported(d.to_string())),
        (_, Some(v)) => Ok(mod_p_pattern(v)),
        (Family::OneA { a }, None) => pattern_1a(a),
        (Family::OneAA1 { a }, None) => pattern_1aa1(a),
        (Family::OneToMA { m, a }, None) => pattern_1ma(m, a),
        (Family::PathPower { .. }, None) => unreachable!("path powers attain Δ + 1"),
    }
}
