//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use distchrom::families::{classify, ChiValue};
use distchrom::patterns::{
    expected_period_1a, expected_period_1aa1, expected_period_1ma, pattern_1a, pattern_1aa1,
    pattern_1ma, verify, PatternWord,
};
use distchrom::solver::{chi2_bounds, color_window, LowerEvidence, LowerOutcome, UpperEvidence};
use distchrom::{square_set, window_instance, Chi2Bounds, DistanceSet, SearchConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Every solver result produced by the criteria, for the final checks.
#[derive(Default)]
struct Runs {
    bounds: Vec<Chi2Bounds>,
    patterns: Vec<(PatternWord, DistanceSet)>,
}

fn set(v: impl IntoIterator<Item = u64>) -> DistanceSet {
    DistanceSet::new(v).expect("valid distance set")
}

fn no_hints(d: &DistanceSet) -> SearchConfig {
    SearchConfig {
        family_patterns: false,
        ..SearchConfig::for_set(d)
    }
}

/// Runs the solver with default settings and with the family patterns
/// switched off, and checks that both return exactly `want`.
fn exact_both_ways(runs: &mut Runs, d: &DistanceSet, want: u64) -> Result<(), String> {
    for cfg in [SearchConfig::for_set(d), no_hints(d)] {
        let b = chi2_bounds(d, &cfg);
        let got = (b.lo, b.hi, b.certified_value());
        runs.bounds.push(b);
        if got != (want, want, Some(want)) {
            return Err(format!(
                "{{{d}}}: got [{}, {}] (family patterns {}), want {want}",
                got.0, got.1, cfg.family_patterns
            ));
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let s = square_set(&set([1, 2, 5]));
    if s.elems() == [1, 2, 3, 4, 5, 6, 7, 10] {
        Ok(format!("square of {{1,2,5}} = {{{s}}}"))
    } else {
        Err(format!("square of {{1,2,5}} = {{{s}}}"))
    }
}

fn criterion_2(runs: &mut Runs) -> Outcome {
    for a in 3..=30 {
        let d = set([1, a]);
        let want = if matches!(a % 5, 2 | 3) { 5 } else { 6 };
        if classify(&d).result != ChiValue::Exact(want) {
            return Err(format!("classify {{{d}}} = {}", classify(&d).result));
        }
        exact_both_ways(runs, &d, want)?;
    }
    Ok("{1,a}, a in [3,30]: 28 exact values match classify".into())
}

fn criterion_3(runs: &mut Runs) -> Outcome {
    for k in 2..=8 {
        exact_both_ways(runs, &DistanceSet::path_power(k).unwrap(), 2 * k + 1)?;
    }
    Ok("{1..k}, k in [2,8]: value 2k+1".into())
}

fn criterion_4(runs: &mut Runs) -> Outcome {
    for a in [4, 9, 11, 16, 18] {
        exact_both_ways(runs, &set([1, a, a + 1]), 7)?;
    }
    Ok("{1,a,a+1}, a in {4,9,11,16,18}: value 7".into())
}

/// Exact values in the corridor, computed once by this solver (window
/// proof below, periodic pattern above) and frozen here.
const CORRIDOR: [(u64, u64); 6] = [(3, 9), (5, 8), (6, 8), (7, 8), (8, 8), (10, 8)];

fn criterion_5(runs: &mut Runs) -> Outcome {
    let mut resolved = Vec::new();
    for (a, frozen) in CORRIDOR {
        let d = set([1, a, a + 1]);
        let s = square_set(&d);
        let w = pattern_1aa1(a).map_err(|e| e.to_string())?;
        if !verify(&w, &s).valid || w.max_color() > 9 {
            return Err(format!("{{{d}}}: nine-color pattern {w} rejected"));
        }
        for cfg in [SearchConfig::for_set(&d), no_hints(&d)] {
            let b = chi2_bounds(&d, &cfg);
            let proof = match &b.lo_evidence {
                LowerEvidence::Window(p) if p.exhausted && p.colors >= 7 => *p,
                other => return Err(format!("{{{d}}}: lower bound rests on {other:?}")),
            };
            if b.lo < 8 || b.hi > 9 {
                return Err(format!("{{{d}}}: interval [{}, {}]", b.lo, b.hi));
            }
            if b.is_exact() && b.lo != frozen {
                return Err(format!(
                    "{{{d}}}: value {} differs from recorded {frozen}",
                    b.lo
                ));
            }
            if cfg.family_patterns {
                resolved.push(format!(
                    "{a}:{}",
                    if b.is_exact() {
                        b.lo.to_string()
                    } else {
                        "?".into()
                    }
                ));
            }
            // a proof is only kept if an unrelated searcher agrees
            match common::replay_refutes(
                proof.length,
                window_instance(&s, proof.length, proof.colors).differences(),
                proof.colors,
                50_000_000,
            ) {
                Some(true) => {}
                other => return Err(format!("{{{d}}}: window proof not replayed ({other:?})")),
            }
            runs.bounds.push(b);
        }
    }
    Ok(format!(
        "{{1,a,a+1}} corridor within [8,9], window proofs replayed; values {}",
        resolved.join(" ")
    ))
}

fn criterion_6(runs: &mut Runs) -> Outcome {
    let mut count = 0;
    let mut check = |w: PatternWord, d: DistanceSet, max_colors: u64, period: u64| {
        let r = verify(&w, &square_set(&d));
        if !r.valid || w.max_color() as u64 > max_colors || w.period() as u64 != period {
            return Err(format!(
                "{{{d}}}: valid={} colors={} period={} (want {period})",
                r.valid,
                w.max_color(),
                w.period()
            ));
        }
        count += 1;
        runs.patterns.push((w, d));
        Ok(())
    };
    for a in 3..=200 {
        check(
            pattern_1a(a).unwrap(),
            set([1, a]),
            6,
            expected_period_1a(a),
        )?;
        check(
            pattern_1aa1(a).unwrap(),
            set([1, a, a + 1]),
            9,
            expected_period_1aa1(a),
        )?;
    }
    for m in 2..=8 {
        for a in m + 2..=300 {
            let d = DistanceSet::one_to_m_a(m, a).unwrap();
            check(
                pattern_1ma(m, a).unwrap(),
                d,
                4 * m + 2,
                expected_period_1ma(m, a),
            )?;
        }
    }
    Ok(format!(
        "{count} constructed patterns verified with stated periods"
    ))
}

fn criterion_7(runs: &mut Runs) -> Outcome {
    let mut n = 0;
    for m in [2u64, 3] {
        for a in m + 2..=30 {
            let r = a % (2 * m + 3);
            if r == m + 1 || r == m + 2 {
                exact_both_ways(runs, &DistanceSet::one_to_m_a(m, a).unwrap(), 2 * m + 3)?;
                n += 1;
            }
        }
    }
    Ok(format!("{{1..m,a}}, m in {{2,3}}: {n} sets at value 2m+3"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2d15);
    let mut summary = [0usize; 2];
    for _ in 0..25 {
        let len = rng.gen_range(1..=3);
        let mut elems: Vec<u64> = Vec::new();
        while elems.len() < len {
            let x = rng.gen_range(1..=8);
            if !elems.contains(&x) {
                elems.push(x);
            }
        }
        let d = set(elems);
        let n = rng.gen_range(1..=14);
        let k = rng.gen_range(2..=d.max_degree() as u32 + 3);
        let w = window_instance(&square_set(&d), n, k);
        let naive = common::naive_colorable(n, w.differences(), k);
        let fast = match color_window(&w, u64::MAX) {
            LowerOutcome::Colorable(c) => {
                if !common::is_proper(n, w.differences(), &c, k) {
                    return Err(format!("{{{d}}} N={n} k={k}: improper coloring"));
                }
                true
            }
            LowerOutcome::Proof(_) => false,
            LowerOutcome::BudgetExceeded { .. } => {
                return Err(format!("{{{d}}} N={n} k={k}: budget hit"))
            }
        };
        if naive != fast {
            return Err(format!("{{{d}}} N={n} k={k}: naive {naive}, solver {fast}"));
        }
        summary[naive as usize] += 1;
    }
    Ok(format!(
        "25 seeded windows agree ({} colorable, {} not)",
        summary[1], summary[0]
    ))
}

fn criterion_9(runs: &Runs) -> Outcome {
    // lo <= hi, evidence re-checks, containment in the closed form
    let mut replays = 0;
    for b in &runs.bounds {
        let c = classify(&b.set.normalize().0);
        if !b.check() || !c.result.contains_interval(b.lo, b.hi) {
            return Err(format!(
                "{{{}}}: [{}, {}] vs {}",
                b.set, b.lo, b.hi, c.result
            ));
        }
        if let UpperEvidence::Pattern(p) = &b.hi_evidence {
            if !verify(p, &square_set(&b.set)).valid {
                return Err(format!("{{{}}}: pattern {p} rejected", b.set));
            }
        }
        if let LowerEvidence::Window(p) = &b.lo_evidence {
            let w = window_instance(&square_set(&b.set), p.length, p.colors);
            let replayed = common::replay_refutes(p.length, w.differences(), p.colors, 50_000_000);
            let naive_ok =
                p.length > 14 || !common::naive_colorable(p.length, w.differences(), p.colors);
            if replayed != Some(true) || !naive_ok {
                return Err(format!("{{{}}}: window proof {p:?} not replayed", b.set));
            }
            replays += 1;
        }
    }
    // gcd invariance on every set the solver saw
    let mut scaled = 0;
    for b in runs.bounds.iter().step_by(2) {
        for g in [2, 3] {
            let d = set(b.set.elems().iter().map(|&x| x * g));
            let gb = chi2_bounds(&d, &SearchConfig::for_set(&d));
            if (gb.lo, gb.hi) != (b.lo, b.hi) || !gb.check() {
                return Err(format!(
                    "{{{d}}}: [{}, {}] vs [{}, {}]",
                    gb.lo, gb.hi, b.lo, b.hi
                ));
            }
            scaled += 1;
        }
    }
    // verify is blind to rotation and relabeling
    for (w, d) in &runs.patterns {
        let s = square_set(d);
        let colors = w.max_color();
        let perm: Vec<u32> = (1..=colors).rev().collect();
        let shift = w.period() / 3 + 1;
        if !verify(&w.rotated(shift), &s).valid || !verify(&w.relabeled(&perm), &s).valid {
            return Err(format!(
                "{{{d}}}: {w} changes verdict under rotation or relabeling"
            ));
        }
    }
    Ok(format!(
        "{} solver results re-checked ({replays} window proofs replayed), {scaled} scaled copies agree, {} patterns rotated and relabeled",
        runs.bounds.len(),
        runs.patterns.len()
    ))
}

fn run(n: usize, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let (ok, msg) = match outcome {
        Ok(msg) if took <= limit => (true, msg),
        Ok(msg) => (false, format!("{msg}; over the time limit")),
        Err(msg) => (false, msg),
    };
    println!(
        "criterion {n}: {} ({took:.2?}, limit {limit:?}) {msg}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn main() {
    let mut runs = Runs::default();
    let secs = Duration::from_secs;
    let results = [
        run(1, Duration::from_millis(1), criterion_1),
        run(2, secs(60), || criterion_2(&mut runs)),
        run(3, secs(60), || criterion_3(&mut runs)),
        run(4, secs(300), || criterion_4(&mut runs)),
        run(5, secs(600), || criterion_5(&mut runs)),
        run(6, secs(30), || criterion_6(&mut runs)),
        run(7, secs(600), || criterion_7(&mut runs)),
        run(8, secs(600), criterion_8),
        run(9, secs(600), || criterion_9(&runs)),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!(
        "acceptance: {} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
