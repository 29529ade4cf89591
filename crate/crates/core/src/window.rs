//! Finite windows `{0, ..., N-1}` of `G(S)`. A window that cannot be
//! k-colored proves the infinite graph cannot be either.

use crate::square::SquareSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowInstance {
    length: usize,
    /// Differences of `S` that fit inside the window.
    diffs: Vec<u64>,
    colors: u32,
}

pub fn window_instance(s: &SquareSet, length: usize, colors: u32) -> WindowInstance {
    assert!(length >= 1 && colors >= 1);
    let diffs = s
        .elems()
        .iter()
        .copied()
        .take_while(|&d| d < length as u64)
        .collect();
    WindowInstance {
        length,
        diffs,
        colors,
    }
}

impl WindowInstance {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn differences(&self) -> &[u64] {
        &self.diffs
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let below = self
            .diffs
            .iter()
            .filter_map(move |&d| i.checked_sub(d as usize));
        let above = self
            .diffs
            .iter()
            .map(move |&d| i + d as usize)
            .filter(move |&j| j < self.length);
        below.chain(above)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.diffs.binary_search(&(i.abs_diff(j) as u64)).is_ok()
    }

    /// Edge-list view `(i, j)`, `i < j`, ordered by `i` then `j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.length {
            for &d in &self.diffs {
                let j = i + d as usize;
                if j < self.length {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}
