use serde::{Deserialize, Serialize};

use super::{
    lower_search, upper_bound_search, upper_search, LowerOutcome, SearchConfig, UpperOutcome,
    WindowProof,
};
use crate::clique::{clique_certificate, CliqueCertificate};
use crate::distance::DistanceSet;
use crate::families::{classify, Source};
use crate::patterns::{family_pattern, first_fit_bound, verify, PatternWord};
use crate::square::square_set;

/// A closed-form bound, reported but never counted as a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "formula", content = "source", rename_all = "snake_case")]
pub enum FormulaRef {
    FirstFit,
    Family(Source),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerEvidence {
    Clique(CliqueCertificate),
    Window(WindowProof),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum UpperEvidence {
    Pattern(PatternWord),
    Formula(FormulaRef),
}

/// A search step that ended without a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "side", rename_all = "snake_case")]
pub enum Inconclusive {
    /// No pattern up to the period limit; `exhausted` means every period was
    /// refuted rather than cut off by the node budget.
    Upper { colors: u32, exhausted: bool },
    /// The window search hit the node budget.
    LowerBudget { colors: u32, length: usize },
    /// The window was colorable, so it proves nothing at this color count.
    LowerColorable { colors: u32, length: usize },
}

/// Certified interval `lo ≤ χ₂(G(D)) ≤ hi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chi2Bounds {
    pub set: DistanceSet,
    pub lo: u64,
    pub hi: u64,
    pub lo_evidence: LowerEvidence,
    pub hi_evidence: UpperEvidence,
    pub inconclusive: Vec<Inconclusive>,
}

impl Chi2Bounds {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The exact value when the interval has collapsed and the upper side
    /// rests on an explicit coloring.
    pub fn certified_value(&self) -> Option<u64> {
        (self.is_exact() && matches!(self.hi_evidence, UpperEvidence::Pattern(_)))
            .then_some(self.lo)
    }

    /// Re-checks the evidence from scratch: the clique against `D²`, the
    /// pattern with [`verify`], and the consistency of a window proof with
    /// `lo`. Window proofs themselves are replayed by the test oracle, not
    /// here.
    pub fn check(&self) -> bool {
        let s = square_set(&self.set);
        let lo_ok = match &self.lo_evidence {
            LowerEvidence::Clique(c) => c.check(&s) && c.size() as u64 == self.lo,
            LowerEvidence::Window(w) => w.exhausted && w.colors as u64 + 1 == self.lo,
        };
        let hi_ok = match &self.hi_evidence {
            UpperEvidence::Pattern(p) => {
                let r = verify(p, &s);
                r.valid && p.max_color() as u64 <= self.hi
            }
            UpperEvidence::Formula(_) => true,
        };
        lo_ok && hi_ok && self.lo <= self.hi
    }
}

/// Two-sided search. Starts from [`initial_bounds`] and then, for
/// `k = lo, lo + 1, ...`, tries to refute `k` colors on a window or find a
/// k-colored periodic pattern. It stops when the interval closes or both
/// searches are inconclusive.
///
/// A bound that still rests on a formula at the end is retried with a
/// periodic search at `hi` colors so that it gets an explicit pattern.
pub fn chi2_bounds(d: &DistanceSet, cfg: &SearchConfig) -> Chi2Bounds {
    let mut bounds = starting_bounds(d, cfg);
    while bounds.lo < bounds.hi {
        let Ok(k) = u32::try_from(bounds.lo) else {
            break;
        };
        match settle(d, k, cfg) {
            Settled::NeedsMore(proof) => {
                bounds.lo = k as u64 + 1;
                bounds.lo_evidence = LowerEvidence::Window(proof);
            }
            Settled::Enough(pattern) => {
                bounds.hi = k as u64;
                bounds.hi_evidence = UpperEvidence::Pattern(pattern);
            }
            Settled::Unknown(notes) => {
                bounds.inconclusive.extend(notes);
                break;
            }
        }
    }
    back_formula(d, cfg, &mut bounds);
    bounds
}

/// Bounds without the search over `k`: the clique bound `Δ + 1` below and,
/// above, the smallest of the first-fit bound `|D²| + 1`, the family formula
/// and the verified family pattern.
pub fn initial_bounds(d: &DistanceSet, cfg: &SearchConfig) -> Chi2Bounds {
    let mut bounds = starting_bounds(d, cfg);
    back_formula(d, cfg, &mut bounds);
    bounds
}

fn starting_bounds(d: &DistanceSet, cfg: &SearchConfig) -> Chi2Bounds {
    let s = square_set(d);
    let clique = clique_certificate(d, 0);
    debug_assert!(clique.check(&s));
    let mut bounds = Chi2Bounds {
        set: d.clone(),
        lo: clique.size() as u64,
        hi: first_fit_bound(&s),
        lo_evidence: LowerEvidence::Clique(clique),
        hi_evidence: UpperEvidence::Formula(FormulaRef::FirstFit),
        inconclusive: Vec::new(),
    };

    let (base, g) = d.normalize();
    let family = classify(&base);
    if !matches!(family.source, Source::TrivialBounds) && family.result.hi() < bounds.hi {
        bounds.hi = family.result.hi();
        bounds.hi_evidence = UpperEvidence::Formula(FormulaRef::Family(family.source));
    }
    if cfg.family_patterns {
        if let Ok(w) = family_pattern(&base) {
            let w = w.stretched(g as usize);
            let report = verify(&w, &s);
            let colors = w.max_color() as u64;
            if report.valid && colors <= bounds.hi {
                bounds.hi = colors;
                bounds.hi_evidence = UpperEvidence::Pattern(w);
            }
        }
    }

    bounds
}

/// Replaces a formula upper bound by a periodic pattern with `hi` colors.
fn back_formula(d: &DistanceSet, cfg: &SearchConfig, bounds: &mut Chi2Bounds) {
    if let UpperEvidence::Formula(_) = bounds.hi_evidence {
        if let Ok(k) = u32::try_from(bounds.hi) {
            match upper_bound_search(d, k, cfg) {
                UpperOutcome::Found { pattern, .. } => {
                    bounds.hi_evidence = UpperEvidence::Pattern(pattern);
                }
                UpperOutcome::NotFoundWithinLimits { exhausted, .. } => {
                    bounds.inconclusive.push(Inconclusive::Upper {
                        colors: k,
                        exhausted,
                    });
                }
            }
        }
    }
}

enum Settled {
    /// A window admits no k-coloring.
    NeedsMore(WindowProof),
    /// A k-colored periodic pattern.
    Enough(PatternWord),
    Unknown(Vec<Inconclusive>),
}

/// First node budget of the schedule in [`settle`].
const START_BUDGET: u64 = 10_000;

/// Decides whether `k` colors suffice. The window refutation and the
/// periodic search cannot both succeed, and each is usually fast on its own
/// side of the answer and slow on the other, so they are run alternately
/// with a node budget that grows eightfold per round up to
/// `cfg.node_budget`. A side that has ended without a verdict (colorable
/// window, every period refuted) is not rerun.
fn settle(d: &DistanceSet, k: u32, cfg: &SearchConfig) -> Settled {
    let mut budget = START_BUDGET.min(cfg.node_budget);
    let mut lower_open = true;
    let mut upper_open = true;
    let mut notes = Vec::new();
    loop {
        let last = budget >= cfg.node_budget;
        if lower_open {
            match lower_search(d, k, cfg, budget) {
                LowerOutcome::Proof(p) => return Settled::NeedsMore(p),
                LowerOutcome::Colorable(_) => {
                    lower_open = false;
                    notes.push(Inconclusive::LowerColorable {
                        colors: k,
                        length: cfg.max_window,
                    });
                }
                LowerOutcome::BudgetExceeded { length, .. } if last => {
                    notes.push(Inconclusive::LowerBudget { colors: k, length })
                }
                LowerOutcome::BudgetExceeded { .. } => {}
            }
        }
        if upper_open {
            match upper_search(d, k, cfg, budget) {
                UpperOutcome::Found { pattern, .. } => return Settled::Enough(pattern),
                UpperOutcome::NotFoundWithinLimits { exhausted, .. } if exhausted || last => {
                    upper_open = false;
                    notes.push(Inconclusive::Upper {
                        colors: k,
                        exhausted,
                    });
                }
                UpperOutcome::NotFoundWithinLimits { .. } => {}
            }
        }
        if last || !(lower_open || upper_open) {
            return Settled::Unknown(notes);
        }
        budget = budget.saturating_mul(8).min(cfg.node_budget);
    }
}
