//! The square set `D²`: `G(D)² = G(D²)`, so 2-distance colorings of `G(D)`
//! are exactly proper colorings of `G(D²)`.

use std::fmt;

use crate::distance::{format_list, DistanceSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareSet {
    elems: Vec<u64>,
    source: DistanceSet,
}

/// `D ∪ {d + d'} ∪ {d - d' : d > d'}`, sorted and deduplicated.
pub fn square_set(d: &DistanceSet) -> SquareSet {
    let ds = d.elems();
    let mut elems = Vec::with_capacity(ds.len() * (ds.len() + 1));
    elems.extend_from_slice(ds);
    for (i, &x) in ds.iter().enumerate() {
        for &y in &ds[..=i] {
            elems.push(x + y);
            if x > y {
                elems.push(x - y);
            }
        }
    }
    elems.sort_unstable();
    elems.dedup();
    SquareSet {
        elems,
        source: d.clone(),
    }
}

impl SquareSet {
    /// A bare difference set not derived from any `D`. The source is set to
    /// the elements themselves, which is only meaningful for adjacency.
    pub fn from_differences(diffs: &DistanceSet) -> SquareSet {
        SquareSet {
            elems: diffs.elems().to_vec(),
            source: diffs.clone(),
        }
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn source(&self) -> &DistanceSet {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max(&self) -> u64 {
        *self.elems.last().expect("square sets are nonempty")
    }

    pub fn contains(&self, d: u64) -> bool {
        self.elems.binary_search(&d).is_ok()
    }

    /// True iff `|u - v|` is a distance of the square graph.
    pub fn adjacent(&self, u: i64, v: i64) -> bool {
        self.contains(u.abs_diff(v))
    }
}

impl fmt::Display for SquareSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.elems))
    }
}
