//! Reduction of p-periodic colorings of `G(S)` to colorings of a circulant
//! graph on `Z_p`.

use thiserror::Error;

use crate::square::SquareSet;

/// No p-periodic proper coloring of `G(S)` exists, whatever the number of
/// colors: `witness ∈ S` is a multiple of the period, so `x` and
/// `x + witness` would always share a color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("period {period} divides {witness}, an element of the square set")]
pub struct InfeasiblePeriod {
    pub period: u64,
    pub witness: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantInstance {
    period: u64,
    /// Nonzero residues, sorted, closed under negation mod `period`.
    connection: Vec<u64>,
    colors: u32,
}

pub fn reduce_to_circulant(
    s: &SquareSet,
    period: u64,
    colors: u32,
) -> Result<CirculantInstance, InfeasiblePeriod> {
    assert!(period >= 1 && colors >= 1);
    if let Some(&witness) = s.elems().iter().find(|&&d| d % period == 0) {
        return Err(InfeasiblePeriod { period, witness });
    }
    let mut connection: Vec<u64> = s
        .elems()
        .iter()
        .flat_map(|&d| {
            let r = d % period;
            [r, period - r]
        })
        .collect();
    connection.sort_unstable();
    connection.dedup();
    Ok(CirculantInstance {
        period,
        connection,
        colors,
    })
}

impl CirculantInstance {
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn connection(&self) -> &[u64] {
        &self.connection
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    /// Distinct neighbours of vertex `i` in `Z_p`.
    pub fn neighbors(&self, i: u64) -> impl Iterator<Item = u64> + '_ {
        self.connection.iter().map(move |&r| (i + r) % self.period)
    }

    /// Edge-list view, each undirected edge once as `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let mut edges = Vec::new();
        for i in 0..self.period {
            for j in self.neighbors(i) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}
