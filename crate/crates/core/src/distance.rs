//! Distance sets: the generators `D` of integer distance graphs `G(D)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible distance. Keeps `2 * max(D)` and period products well
/// inside `u64`/`i64`.
pub const MAX_DISTANCE: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("distance set is empty")]
    Empty,
    #[error("distances must be positive, got {0}")]
    NonPositive(i64),
    #[error("distance {0} exceeds the cap of {MAX_DISTANCE}")]
    TooLarge(u64),
    #[error("duplicate distance {0}")]
    Duplicate(u64),
    #[error("cannot parse {0:?} as a distance")]
    Parse(String),
}

/// A finite, nonempty set of positive integers, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DistanceSet {
    elems: Vec<u64>,
}

impl DistanceSet {
    /// Builds a set from arbitrary positive values; order and repeats are
    /// irrelevant.
    pub fn new<I: IntoIterator<Item = u64>>(values: I) -> Result<Self, DistanceError> {
        let mut elems: Vec<u64> = values.into_iter().collect();
        if elems.is_empty() {
            return Err(DistanceError::Empty);
        }
        for &d in &elems {
            if d == 0 {
                return Err(DistanceError::NonPositive(0));
            }
            if d > MAX_DISTANCE {
                return Err(DistanceError::TooLarge(d));
            }
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(DistanceSet { elems })
    }

    /// `{1, 2, ..., k}`.
    pub fn path_power(k: u64) -> Result<Self, DistanceError> {
        Self::new(1..=k)
    }

    /// `{1, ..., m, a}`.
    pub fn one_to_m_a(m: u64, a: u64) -> Result<Self, DistanceError> {
        Self::new((1..=m).chain(std::iter::once(a)))
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> u64 {
        *self.elems.last().expect("distance sets are nonempty")
    }

    pub fn contains(&self, d: u64) -> bool {
        self.elems.binary_search(&d).is_ok()
    }

    pub fn gcd(&self) -> u64 {
        self.elems.iter().fold(0, |g, &d| gcd(g, d))
    }

    pub fn is_normalized(&self) -> bool {
        self.gcd() == 1
    }

    /// Divides out `gcd(D)`. `G(D)` is a disjoint union of `g` copies of
    /// `G(D / g)`, so the 2-distance chromatic number is unchanged.
    pub fn normalize(&self) -> (DistanceSet, u64) {
        let g = self.gcd();
        let elems = self.elems.iter().map(|d| d / g).collect();
        (DistanceSet { elems }, g)
    }

    /// Maximum degree of `G(D)`: every vertex has `|D|` neighbours on each side.
    pub fn max_degree(&self) -> u64 {
        2 * self.elems.len() as u64
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Comma-separated decimal text, e.g. `1,5,6`.
pub fn format_list(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.elems))
    }
}

/// Strict parser for the CLI text form: rejects zero, negatives, junk and
/// repeated values instead of silently fixing them.
impl FromStr for DistanceSet {
    type Err = DistanceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut seen = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let v: i64 = tok
                .parse()
                .map_err(|_| DistanceError::Parse(tok.to_string()))?;
            if v <= 0 {
                return Err(DistanceError::NonPositive(v));
            }
            let v = v as u64;
            if seen.contains(&v) {
                return Err(DistanceError::Duplicate(v));
            }
            seen.push(v);
        }
        DistanceSet::new(seen)
    }
}

impl TryFrom<Vec<u64>> for DistanceSet {
    type Error = DistanceError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        DistanceSet::new(v)
    }
}

impl From<DistanceSet> for Vec<u64> {
    fn from(d: DistanceSet) -> Self {
        d.elems
    }
}
