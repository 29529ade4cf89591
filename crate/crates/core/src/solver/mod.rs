//! Exact two-sided bounds on `χ₂(G(D))`.
//!
//! Upper bounds come from p-periodic colorings: a p-periodic coloring of
//! `G(S)` is the same thing as a coloring of the circulant graph on `Z_p`
//! with connection set `S mod p`, and if `G(S)` is k-colorable at all then
//! some period works. The period search is therefore complete in the limit
//! but only a semi-decision procedure for any fixed `max_period`.
//!
//! Lower bounds come from finite windows: if `{0, ..., N-1}` cannot be
//! k-colored, neither can the whole line. No general bound on the required
//! `N` is known, so window lengths are configuration.

mod bounds;
mod engine;

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circulant::{reduce_to_circulant, CirculantInstance};
use crate::distance::DistanceSet;
use crate::patterns::{verify, PatternWord};
use crate::square::{square_set, SquareSet};
use crate::window::{window_instance, WindowInstance};

pub use bounds::{
    chi2_bounds, initial_bounds, Chi2Bounds, FormulaRef, Inconclusive, LowerEvidence, UpperEvidence,
};
pub use engine::MAX_SEARCH_COLORS;
use engine::{color_graph, first_fit, Graph, Order, Outcome, StopFlag};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_period: u64,
    pub max_window: usize,
    /// Node cap for each individual backtracking run.
    pub node_budget: u64,
    /// Explicit periods to try instead of `1..=max_period`.
    pub periods: Option<Vec<u64>>,
    /// Seed the upper bound with the closed-form family pattern (verified
    /// before use) when one exists.
    pub family_patterns: bool,
}

impl SearchConfig {
    /// `max_period = 4·max(D²) + 4`, `max_window = 6·max(D²)`,
    /// `node_budget = 10⁸`.
    pub fn for_set(d: &DistanceSet) -> SearchConfig {
        let top = square_set(d).max();
        SearchConfig {
            max_period: 4 * top + 4,
            max_window: (6 * top) as usize,
            node_budget: 100_000_000,
            periods: None,
            family_patterns: true,
        }
    }

    fn period_list(&self) -> Vec<u64> {
        match &self.periods {
            Some(ps) => {
                let mut ps = ps.clone();
                ps.retain(|&p| p >= 1);
                ps.sort_unstable();
                ps.dedup();
                ps
            }
            None => (1..=self.max_period).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CirculantOutcome {
    Colored(PatternWord),
    Unsat,
    BudgetExceeded,
}

/// Canonical search for a coloring of the circulant instance: vertices in
/// index order, colors ascending, `w[0] = 1`, and each color first used only
/// after all smaller ones. The returned word is the lexicographically least
/// such coloring.
pub fn color_circulant(inst: &CirculantInstance, budget: u64) -> (CirculantOutcome, u64) {
    let (out, nodes) = circulant_search(inst, budget, None);
    (
        out.expect("searches without a stop flag are never cancelled"),
        nodes,
    )
}

/// `None` when the stop flag fired.
fn circulant_search(
    inst: &CirculantInstance,
    budget: u64,
    stop: Option<StopFlag<'_>>,
) -> (Option<CirculantOutcome>, u64) {
    let k = inst.colors().min(MAX_SEARCH_COLORS);
    let p = inst.period() as usize;
    let graph = Graph::from_fn(p, |i| inst.neighbors(i as u64).map(|j| j as usize));
    if inst.colors() > MAX_SEARCH_COLORS && inst.colors() as usize > inst.connection().len() {
        // the first branch of the canonical search is first fit, and it
        // cannot fail with more colors than the degree
        return (Some(CirculantOutcome::Colored(word(first_fit(&graph)))), 0);
    }
    let (out, nodes) = color_graph(&graph, k, Order::Natural, None, budget, stop);
    let out = match out {
        Outcome::Colored(c) => Some(CirculantOutcome::Colored(word(c))),
        // the search was capped at MAX_SEARCH_COLORS, so this refutes nothing
        Outcome::Unsat if inst.colors() > MAX_SEARCH_COLORS => {
            Some(CirculantOutcome::BudgetExceeded)
        }
        Outcome::Unsat => Some(CirculantOutcome::Unsat),
        Outcome::BudgetExceeded => Some(CirculantOutcome::BudgetExceeded),
        Outcome::Cancelled => None,
    };
    (out, nodes)
}

fn word(colors: Vec<u32>) -> PatternWord {
    PatternWord::new(colors).expect("search colorings are nonempty and 1-based")
}

/// How a single period fared in an upper-bound search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodStatus {
    /// Some element of `D²` is a multiple of the period.
    Infeasible,
    Unsat,
    BudgetExceeded,
    Found,
    /// Abandoned because a smaller period already succeeded.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpperOutcome {
    Found {
        pattern: PatternWord,
        nodes: u64,
    },
    /// Inconclusive: `χ₂` may still be at most `k` with a longer period.
    /// `exhausted` is true when every tried period was refuted outright.
    NotFoundWithinLimits {
        exhausted: bool,
        nodes: u64,
    },
}

/// Tries periods in ascending order and returns the first pattern found.
/// Periods are searched in parallel; the smallest successful period wins.
/// Every returned pattern has passed [`verify`].
pub fn upper_bound_search(d: &DistanceSet, k: u32, cfg: &SearchConfig) -> UpperOutcome {
    upper_search(d, k, cfg, cfg.node_budget)
}

/// Upper search with a per-period node budget other than the configured one.
pub(crate) fn upper_search(
    d: &DistanceSet,
    k: u32,
    cfg: &SearchConfig,
    budget: u64,
) -> UpperOutcome {
    assert!(k >= 1);
    let s = square_set(d);
    let periods = cfg.period_list();
    let best = AtomicU64::new(u64::MAX);
    let results: Vec<(PeriodStatus, Option<PatternWord>, u64)> = periods
        .par_iter()
        .map(|&p| {
            let beaten = || best.load(Ordering::Relaxed) < p;
            if beaten() {
                return (PeriodStatus::Skipped, None, 0);
            }
            let r = probe_period(&s, p, k, budget, Some(&beaten));
            if r.0 == PeriodStatus::Found {
                best.fetch_min(p, Ordering::Relaxed);
            }
            r
        })
        .collect();
    let nodes = results.iter().map(|r| r.2).sum();
    for (status, pattern, _) in &results {
        if *status == PeriodStatus::Found {
            let pattern = pattern.clone().expect("found carries a pattern");
            return UpperOutcome::Found { pattern, nodes };
        }
    }
    let exhausted = results
        .iter()
        .all(|r| matches!(r.0, PeriodStatus::Infeasible | PeriodStatus::Unsat));
    UpperOutcome::NotFoundWithinLimits { exhausted, nodes }
}

fn probe_period(
    s: &SquareSet,
    p: u64,
    k: u32,
    budget: u64,
    stop: Option<StopFlag<'_>>,
) -> (PeriodStatus, Option<PatternWord>, u64) {
    let inst = match reduce_to_circulant(s, p, k) {
        Ok(inst) => inst,
        Err(_) => return (PeriodStatus::Infeasible, None, 0),
    };
    match circulant_search(&inst, budget, stop) {
        (None, nodes) => (PeriodStatus::Skipped, None, nodes),
        (Some(CirculantOutcome::Colored(w)), nodes) => {
            let report = verify(&w, s);
            assert!(
                report.valid && report.color_count <= k as usize,
                "circulant search produced an improper pattern {w} for period {p}"
            );
            (PeriodStatus::Found, Some(w), nodes)
        }
        (Some(CirculantOutcome::Unsat), nodes) => (PeriodStatus::Unsat, None, nodes),
        (Some(CirculantOutcome::BudgetExceeded), nodes) => {
            (PeriodStatus::BudgetExceeded, None, nodes)
        }
    }
}

/// Exhaustive evidence that a window admits no k-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowProof {
    pub colors: u32,
    pub length: usize,
    pub nodes_explored: u64,
    pub exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerOutcome {
    Proof(WindowProof),
    /// A coloring of the window; says nothing about the infinite graph.
    Colorable(Vec<u32>),
    BudgetExceeded {
        length: usize,
        nodes: u64,
    },
}

/// Tries to refute k colors on windows of `G(D²)` of growing length, up to
/// `cfg.max_window`. A refuted shorter window is returned as the proof;
/// `Colorable` always refers to the full window.
pub fn lower_bound_search(d: &DistanceSet, k: u32, cfg: &SearchConfig) -> LowerOutcome {
    lower_search(d, k, cfg, cfg.node_budget)
}

pub(crate) fn lower_search(
    d: &DistanceSet,
    k: u32,
    cfg: &SearchConfig,
    budget: u64,
) -> LowerOutcome {
    let s = square_set(d);
    let mut last = None;
    for n in window_lengths(s.max() as usize, cfg.max_window.max(1)) {
        match color_window(&window_instance(&s, n, k), budget) {
            proof @ LowerOutcome::Proof(_) => return proof,
            other => last = Some(other),
        }
    }
    last.expect("at least one window length")
}

/// `2m + 1, 4m + 2, ...` below `full`, then `full` itself.
fn window_lengths(m: usize, full: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = 2 * m + 1;
    while n < full {
        out.push(n);
        n *= 2;
    }
    out.push(full);
    out
}

/// Exhaustive coloring search on a window. Vertices are chosen by smallest
/// remaining domain, ties going to the vertex nearest the middle, where the
/// graph has full degree.
pub fn color_window(w: &WindowInstance, budget: u64) -> LowerOutcome {
    let n = w.length();
    let k = w.colors();
    let graph = Graph::from_fn(n, |i| w.neighbors(i));
    // first fit needs at most one color more than the number of differences
    if k as usize > w.differences().len() || k > MAX_SEARCH_COLORS {
        let colors = first_fit(&graph);
        if colors.iter().all(|&c| c <= k) {
            return LowerOutcome::Colorable(colors);
        }
        return LowerOutcome::BudgetExceeded {
            length: n,
            nodes: 0,
        };
    }
    let mid = n / 2;
    let rank = (0..n).map(|i| i.abs_diff(mid) as u32).collect();
    match color_graph(&graph, k, Order::Saturation, Some(rank), budget, None) {
        (Outcome::Colored(c), _) => LowerOutcome::Colorable(c),
        (Outcome::Unsat, nodes) => LowerOutcome::Proof(WindowProof {
            colors: k,
            length: n,
            nodes_explored: nodes,
            exhausted: true,
        }),
        (Outcome::BudgetExceeded | Outcome::Cancelled, nodes) => {
            LowerOutcome::BudgetExceeded { length: n, nodes }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::first_fit_bound;

    fn ds(s: &str) -> DistanceSet {
        s.parse().unwrap()
    }

    #[test]
    fn circulant_examples() {
        let s = square_set(&ds("1,3"));
        let inst = reduce_to_circulant(&s, 5, 5).unwrap();
        assert_eq!(
            color_circulant(&inst, 1000).0,
            CirculantOutcome::Colored("12345".parse().unwrap())
        );
        let inst = reduce_to_circulant(&s, 5, 4).unwrap();
        assert_eq!(color_circulant(&inst, 1000).0, CirculantOutcome::Unsat);

        let s = square_set(&ds("1,4"));
        let inst = reduce_to_circulant(&s, 6, 6).unwrap();
        assert_eq!(inst.connection(), &[1, 2, 3, 4, 5]);
        assert_eq!(
            color_circulant(&inst, 1000).0,
            CirculantOutcome::Colored("123456".parse().unwrap())
        );
    }

    #[test]
    fn upper_examples() {
        let cfg = SearchConfig::for_set(&ds("1,3"));
        match upper_bound_search(&ds("1,3"), 5, &cfg) {
            UpperOutcome::Found { pattern, .. } => assert_eq!(pattern.period(), 5),
            other => panic!("{other:?}"),
        }
        let cfg = SearchConfig {
            max_period: 30,
            ..SearchConfig::for_set(&ds("1,5"))
        };
        assert!(matches!(
            upper_bound_search(&ds("1,5"), 5, &cfg),
            UpperOutcome::NotFoundWithinLimits {
                exhausted: true,
                ..
            }
        ));
        let cfg = SearchConfig::for_set(&ds("1,2"));
        match upper_bound_search(&ds("1,2"), 5, &cfg) {
            UpperOutcome::Found { pattern, .. } => assert_eq!(pattern.to_string(), "12345"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn explicit_period_list() {
        let cfg = SearchConfig {
            periods: Some(vec![11, 0, 7, 5, 7]),
            ..SearchConfig::for_set(&ds("1,3"))
        };
        assert_eq!(cfg.period_list(), vec![5, 7, 11]);
        match upper_bound_search(&ds("1,3"), 5, &cfg) {
            UpperOutcome::Found { pattern, .. } => assert_eq!(pattern.period(), 5),
            other => panic!("{other:?}"),
        }
        // D² = {1,2,3,4,6} covers every nonzero residue mod 7 and mod 11
        let cfg = SearchConfig {
            periods: Some(vec![7, 11]),
            ..SearchConfig::for_set(&ds("1,3"))
        };
        assert!(matches!(
            upper_bound_search(&ds("1,3"), 5, &cfg),
            UpperOutcome::NotFoundWithinLimits {
                exhausted: true,
                ..
            }
        ));
    }

    #[test]
    fn lower_examples() {
        let cfg = SearchConfig {
            max_window: 10,
            ..SearchConfig::for_set(&ds("1,3"))
        };
        assert!(matches!(
            lower_bound_search(&ds("1,3"), 4, &cfg),
            LowerOutcome::Proof(WindowProof {
                colors: 4,
                length: 10,
                exhausted: true,
                ..
            })
        ));
        // at the first-fit bound the window is always colorable
        for d in ["1,3", "1,5", "2,7,9"] {
            let d = ds(d);
            let k = first_fit_bound(&square_set(&d)) as u32;
            for n in [1, 7, 40] {
                let cfg = SearchConfig {
                    max_window: n,
                    ..SearchConfig::for_set(&d)
                };
                assert!(matches!(
                    lower_bound_search(&d, k, &cfg),
                    LowerOutcome::Colorable(_)
                ));
            }
        }
    }

    #[test]
    fn window_colorings_are_proper() {
        let d = ds("1,4");
        let s = square_set(&d);
        let w = window_instance(&s, 30, 6);
        match color_window(&w, 1_000_000) {
            LowerOutcome::Colorable(c) => {
                for (i, j) in w.edges() {
                    assert_ne!(c[i], c[j]);
                }
                assert!(c.iter().all(|&x| (1..=6).contains(&x)));
            }
            other => panic!("{other:?}"),
        }
    }
}
