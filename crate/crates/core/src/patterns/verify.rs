use serde::{Deserialize, Serialize};

use super::word::PatternWord;
use crate::square::SquareSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub distance: u64,
    pub other: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    /// Pairs `(i, (i + d) mod p)` that share a color, for `d` not divisible by `p`.
    pub violations: Vec<Violation>,
    /// Elements of `S` that are multiples of the period. Each one alone makes
    /// any p-periodic coloring improper.
    pub divisible: Vec<u64>,
    pub period: usize,
    pub color_count: usize,
}

/// Checks that the periodic extension of `w` properly colors `G(S)`.
///
/// Runs in `O(p · |S|)`; only residues are inspected.
pub fn verify(w: &PatternWord, s: &SquareSet) -> VerificationReport {
    let colors = w.colors();
    let p = colors.len();
    let mut violations = Vec::new();
    let mut divisible = Vec::new();
    for &d in s.elems() {
        let shift = (d % p as u64) as usize;
        if shift == 0 {
            divisible.push(d);
            continue;
        }
        for (i, &c) in colors.iter().enumerate() {
            let j = (i + shift) % p;
            if c == colors[j] {
                violations.push(Violation {
                    index: i,
                    distance: d,
                    other: j,
                });
            }
        }
    }
    violations.sort_by_key(|v| (v.index, v.distance));
    VerificationReport {
        valid: violations.is_empty() && divisible.is_empty(),
        violations,
        divisible,
        period: p,
        color_count: w.color_count(),
    }
}
