//! `--range` parsing: `name=lo..hi` items separated by commas, bounds
//! inclusive, a single value allowed (`a=5`).

use std::ops::RangeInclusive;

use distchrom::families::SweepRanges;

pub fn parse_ranges(text: &str) -> Result<SweepRanges, String> {
    let mut ranges = SweepRanges::default();
    for item in text.split(',').map(str::trim) {
        let (name, span) = item
            .split_once('=')
            .ok_or_else(|| format!("expected name=lo..hi, got {item:?}"))?;
        let span = parse_span(span.trim()).map_err(|e| format!("{}: {e}", name.trim()))?;
        let slot = match name.trim() {
            "k" => &mut ranges.k,
            "m" => &mut ranges.m,
            "a" => &mut ranges.a,
            other => return Err(format!("unknown parameter {other:?} (expected k, m or a)")),
        };
        if slot.replace(span).is_some() {
            return Err(format!("parameter {} given twice", name.trim()));
        }
    }
    Ok(ranges)
}

fn parse_span(span: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("not a non-negative integer: {s:?}"))
    };
    let (lo, hi) = match span.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(span)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}
