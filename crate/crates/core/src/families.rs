//! Closed-form values of `χ₂(G(D))` for the families where they are known.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distance::{DistanceError, DistanceSet};
use crate::patterns::first_fit_bound;
use crate::square::square_set;

/// Structural family of a (normalized) distance set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `{1, ..., k}`, `k ≥ 2`.
    PathPower {
        k: u64,
    },
    /// `{1, a}`, `a ≥ 3`.
    OneA {
        a: u64,
    },
    /// `{1, a, a+1}`, `a ≥ 3`.
    OneAA1 {
        a: u64,
    },
    /// `{1, ..., m, a}`, `m ≥ 2`, `a ≥ m + 2`.
    OneToMA {
        m: u64,
        a: u64,
    },
    General,
}

impl Family {
    pub fn tag(&self) -> FamilyTag {
        match self {
            Family::PathPower { .. } => FamilyTag::PathPower,
            Family::OneA { .. } => FamilyTag::OneA,
            Family::OneAA1 { .. } => FamilyTag::OneAA1,
            Family::OneToMA { .. } => FamilyTag::OneToMA,
            Family::General => FamilyTag::General,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    PathPower,
    OneA,
    OneAA1,
    OneToMA,
    General,
}

impl FamilyTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyTag::PathPower => "path_power",
            FamilyTag::OneA => "one_a",
            FamilyTag::OneAA1 => "one_a_a1",
            FamilyTag::OneToMA => "one_to_m_a",
            FamilyTag::General => "general",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "path_power" => FamilyTag::PathPower,
            "one_a" => FamilyTag::OneA,
            "one_a_a1" => FamilyTag::OneAA1,
            "one_to_m_a" => FamilyTag::OneToMA,
            "general" => FamilyTag::General,
            _ => return Err(SweepError::UnknownFamily(s.to_string())),
        })
    }
}

/// Which closed-form result a classification rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// `χ₂({1..k}) = 2k + 1`.
    PathPowerValue,
    /// `χ₂({1,a})` is 5 iff `a ≡ 2, 3 (mod 5)`, else 6.
    OneADichotomy,
    /// `χ₂({1,a,a+1}) = 7` iff `a ≡ 2, 4 (mod 7)`.
    OneAA1Optimal,
    /// `8 ≤ χ₂({1,a,a+1}) ≤ 9` otherwise.
    OneAA1Corridor,
    /// `χ₂({1..m,a}) = 2m + 3` iff `a ≡ m+1, m+2 (mod 2m+3)`.
    OneToMAOptimal,
    /// `2m + 4 ≤ χ₂({1..m,a}) ≤ 4m + 2` otherwise.
    OneToMACorridor,
    /// `Δ + 1 ≤ χ₂ ≤ |D²| + 1`.
    TrivialBounds,
}

impl Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            Source::PathPowerValue => "path-power-value",
            Source::OneADichotomy => "one-a-dichotomy",
            Source::OneAA1Optimal => "one-a-a1-optimal",
            Source::OneAA1Corridor => "one-a-a1-corridor",
            Source::OneToMAOptimal => "one-to-m-a-optimal",
            Source::OneToMACorridor => "one-to-m-a-corridor",
            Source::TrivialBounds => "trivial-bounds",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChiValue {
    Exact(u64),
    Interval { lo: u64, hi: u64 },
}

impl ChiValue {
    pub fn lo(&self) -> u64 {
        match *self {
            ChiValue::Exact(v) => v,
            ChiValue::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> u64 {
        match *self {
            ChiValue::Exact(v) => v,
            ChiValue::Interval { hi, .. } => hi,
        }
    }

    pub fn contains_interval(&self, lo: u64, hi: u64) -> bool {
        self.lo() <= lo && hi <= self.hi()
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiValue::Exact(v) => write!(f, "{v}"),
            ChiValue::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyClassification {
    pub set: DistanceSet,
    pub family: Family,
    pub result: ChiValue,
    pub source: Source,
}

/// Matches `d` against the families in dispatch order: path power first (so
/// `{1,2}` and `{1,2,3}` land there), then `{1..m,a}` with `m ≥ 2`, then
/// `{1,a,a+1}`, then `{1,a}`.
pub fn detect(d: &DistanceSet) -> Family {
    let e = d.elems();
    let n = e.len() as u64;
    if n >= 2 && e.iter().zip(1..).all(|(&x, i)| x == i) {
        return Family::PathPower { k: n };
    }
    if n >= 3 {
        let m = n - 1;
        let a = d.max();
        if e[..e.len() - 1].iter().zip(1..).all(|(&x, i)| x == i) && a >= m + 2 {
            return Family::OneToMA { m, a };
        }
    }
    match *e {
        [1, a, b] if a >= 3 && b == a + 1 => Family::OneAA1 { a },
        [1, a] if a >= 3 => Family::OneA { a },
        _ => Family::General,
    }
}

/// Closed-form value or interval for `χ₂(G(d))`. Expects a normalized set;
/// non-normalized input lands in `General`.
pub fn classify(d: &DistanceSet) -> FamilyClassification {
    let family = detect(d);
    let (result, source) = match family {
        Family::PathPower { k } => (ChiValue::Exact(2 * k + 1), Source::PathPowerValue),
        Family::OneA { a } => {
            let v = if matches!(a % 5, 2 | 3) { 5 } else { 6 };
            (ChiValue::Exact(v), Source::OneADichotomy)
        }
        Family::OneAA1 { a } => {
            if matches!(a % 7, 2 | 4) {
                (ChiValue::Exact(7), Source::OneAA1Optimal)
            } else {
                (ChiValue::Interval { lo: 8, hi: 9 }, Source::OneAA1Corridor)
            }
        }
        Family::OneToMA { m, a } => {
            let r = a % (2 * m + 3);
            if r == m + 1 || r == m + 2 {
                (ChiValue::Exact(2 * m + 3), Source::OneToMAOptimal)
            } else {
                (
                    ChiValue::Interval {
                        lo: 2 * m + 4,
                        hi: 4 * m + 2,
                    },
                    Source::OneToMACorridor,
                )
            }
        }
        Family::General => (
            ChiValue::Interval {
                lo: d.max_degree() + 1,
                hi: first_fit_bound(&square_set(d)),
            },
            Source::TrivialBounds,
        ),
    };
    FamilyClassification {
        set: d.clone(),
        family,
        result,
        source,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} needs parameter {name}")]
    MissingParameter { family: FamilyTag, name: char },
    #[error("family {0} cannot be swept")]
    NotSweepable(FamilyTag),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// Parameter ranges for a sweep; only the ones the family uses are read.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepRanges {
    pub k: Option<RangeInclusive<u64>>,
    pub m: Option<RangeInclusive<u64>>,
    pub a: Option<RangeInclusive<u64>>,
}

/// Distance sets of the family over the parameter grid, row-major (`m`
/// outer, `a` inner). Grid points outside the family's parameter domain are
/// skipped.
pub fn sweep_sets(family: FamilyTag, ranges: &SweepRanges) -> Result<Vec<DistanceSet>, SweepError> {
    let need = |r: &Option<RangeInclusive<u64>>, name| {
        r.clone()
            .ok_or(SweepError::MissingParameter { family, name })
    };
    let sets: Vec<DistanceSet> = match family {
        FamilyTag::PathPower => need(&ranges.k, 'k')?
            .filter(|&k| k >= 2)
            .map(DistanceSet::path_power)
            .collect::<Result<_, _>>(),
        FamilyTag::OneA => need(&ranges.a, 'a')?
            .filter(|&a| a >= 3)
            .map(|a| DistanceSet::new([1, a]))
            .collect(),
        FamilyTag::OneAA1 => need(&ranges.a, 'a')?
            .filter(|&a| a >= 3)
            .map(|a| DistanceSet::new([1, a, a + 1]))
            .collect(),
        FamilyTag::OneToMA => {
            let ms = need(&ranges.m, 'm')?;
            let a_range = need(&ranges.a, 'a')?;
            ms.filter(|&m| m >= 2)
                .flat_map(|m| {
                    a_range
                        .clone()
                        .filter(move |&a| a >= m + 2)
                        .map(move |a| DistanceSet::one_to_m_a(m, a))
                })
                .collect()
        }
        FamilyTag::General => return Err(SweepError::NotSweepable(family)),
    }?;
    Ok(sets)
}

pub fn sweep(
    family: FamilyTag,
    ranges: &SweepRanges,
) -> Result<Vec<FamilyClassification>, SweepError> {
    Ok(sweep_sets(family, ranges)?.iter().map(classify).collect())
}
