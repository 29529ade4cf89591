use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern is empty")]
    Empty,
    #[error("colors are 1-based, got 0 at position {0}")]
    ZeroColor(usize),
    #[error("cannot parse pattern text {0:?}")]
    Parse(String),
    #[error("a must be at least 3, got {0}")]
    ParameterTooSmall(u64),
    #[error("m must be at least 2 and a > m, got m={m}, a={a}")]
    OutOfRange { m: u64, a: u64 },
    #[error("a = m + 1 gives D = {{1,...,{a}}}, which is colored by the mod-(2a+1) pattern")]
    PathPowerCase { m: u64, a: u64 },
    #[error("no closed-form pattern for D = {{{0}}}")]
    Unsupported(String),
}

/// A finite color word; its periodic extension colors the integer line,
/// `x ↦ word[x mod p]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PatternWord {
    colors: Vec<u32>,
}

impl PatternWord {
    pub fn new(colors: Vec<u32>) -> Result<Self, PatternError> {
        if colors.is_empty() {
            return Err(PatternError::Empty);
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(PatternError::ZeroColor(i));
        }
        Ok(PatternWord { colors })
    }

    /// Concatenates `block^reps` for each pair, mirroring the usual
    /// combinatorics-on-words notation: `(12)^3 345` is
    /// `compose(&[(&[1, 2], 3), (&[3, 4, 5], 1)])`. Zero repetitions give an
    /// empty factor.
    pub fn compose(parts: &[(&[u32], usize)]) -> Result<Self, PatternError> {
        let colors = parts
            .iter()
            .flat_map(|&(block, reps)| block.iter().copied().cycle().take(block.len() * reps))
            .collect();
        PatternWord::new(colors)
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn period(&self) -> usize {
        self.colors.len()
    }

    /// Color of integer `x` under the periodic extension.
    pub fn color_at(&self, x: i64) -> u32 {
        self.colors[x.rem_euclid(self.colors.len() as i64) as usize]
    }

    pub fn max_color(&self) -> u32 {
        *self.colors.iter().max().expect("nonempty")
    }

    /// Number of distinct colors.
    pub fn color_count(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Cyclic rotation by `shift` positions to the left.
    pub fn rotated(&self, shift: usize) -> PatternWord {
        let mut colors = self.colors.clone();
        let n = colors.len();
        colors.rotate_left(shift % n);
        PatternWord { colors }
    }

    /// Applies a color permutation given as `perm[c - 1]` = new color of `c`.
    pub fn relabeled(&self, perm: &[u32]) -> PatternWord {
        PatternWord {
            colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect(),
        }
    }

    /// Each letter repeated `g` times. Lifts a pattern for `G(D)` to one for
    /// `G(g·D)`: `x` gets the color of `⌊x / g⌋`.
    pub fn stretched(&self, g: usize) -> PatternWord {
        assert!(g >= 1);
        PatternWord {
            colors: self
                .colors
                .iter()
                .flat_map(|&c| std::iter::repeat_n(c, g))
                .collect(),
        }
    }
}

/// `lo, lo+1, ..., hi` (empty when `hi < lo`).
pub(crate) fn run(lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi).collect()
}

/// Plain digits when every color is below 10, dot-separated otherwise.
impl fmt::Display for PatternWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.max_color() >= 10 { "." } else { "" };
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for PatternWord {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PatternError::Empty);
        }
        let bad = || PatternError::Parse(s.to_string());
        let colors: Vec<u32> = if s.contains('.') {
            s.split('.')
                .map(|t| {
                    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad());
                    }
                    t.parse().map_err(|_| bad())
                })
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|ch| ch.to_digit(10).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        PatternWord::new(colors)
    }
}

impl TryFrom<String> for PatternWord {
    type Error = PatternError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<PatternWord> for String {
    fn from(w: PatternWord) -> Self {
        w.to_string()
    }
}
