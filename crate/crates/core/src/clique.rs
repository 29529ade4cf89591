//! Clique certificates in `G(D²)`: explicit vertex sets that force
//! `χ₂(G(D)) ≥ |C|`.

use serde::{Deserialize, Serialize};

use crate::distance::DistanceSet;
use crate::families::{detect, Family};
use crate::square::SquareSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCertificate {
    /// Sorted, distinct.
    pub vertices: Vec<i64>,
    pub base: i64,
}

impl CliqueCertificate {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Checks every pair against `S`.
    pub fn check(&self, s: &SquareSet) -> bool {
        is_clique(&self.vertices, s)
    }
}

pub fn is_clique(vertices: &[i64], s: &SquareSet) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        vertices[i + 1..]
            .iter()
            .all(|&v| u != v && s.adjacent(u, v))
    })
}

/// The clique centred on `x` used to show `χ₂ ≥ Δ + 1`.
///
/// For `{1,a}` it is `{x-a, x-1, x, x+1, x+a}`, for `{1,a,a+1}` it is
/// `{x-a-1, x-a, x-1, x, x+1, x+a, x+a+1}` and for `{1,...,m,a}` the run
/// `x-m..=x+m` plus `x-a` and `x+a` (both adjacent to the whole run in the
/// square graph). Any other set gets the closed neighbourhood of `x`, which
/// is always a clique in `G(D²)`.
pub fn clique_certificate(d: &DistanceSet, x: i64) -> CliqueCertificate {
    let mut vertices: Vec<i64> = match detect(d) {
        Family::OneA { a } => {
            let a = a as i64;
            vec![x - a, x - 1, x, x + 1, x + a]
        }
        Family::OneAA1 { a } => {
            let a = a as i64;
            vec![x - a - 1, x - a, x - 1, x, x + 1, x + a, x + a + 1]
        }
        Family::OneToMA { m, a } => {
            let (m, a) = (m as i64, a as i64);
            std::iter::once(x - a)
                .chain(x - m..=x + m)
                .chain(std::iter::once(x + a))
                .collect()
        }
        Family::PathPower { .. } | Family::General => closed_neighborhood(d, x),
    };
    vertices.sort_unstable();
    vertices.dedup();
    CliqueCertificate { vertices, base: x }
}

fn closed_neighborhood(d: &DistanceSet, x: i64) -> Vec<i64> {
    let mut v = vec![x];
    for &e in d.elems() {
        v.push(x - e as i64);
        v.push(x + e as i64);
    }
    v
}
