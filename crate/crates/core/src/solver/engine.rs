//! Backtracking k-coloring with forward checking and canonical color
//! symmetry breaking. Shared by the circulant and window searches.

/// Largest color budget the bitset domains can hold.
pub const MAX_SEARCH_COLORS: u32 = 64;

/// Compressed adjacency lists.
#[derive(Debug, Clone)]
pub(crate) struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    pub fn from_fn<I, F>(n: usize, mut neighbors: F) -> Graph
    where
        F: FnMut(usize) -> I,
        I: IntoIterator<Item = usize>,
    {
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for v in 0..n {
            let start = targets.len();
            targets.extend(neighbors(v).into_iter().map(|u| u as u32));
            targets[start..].sort_unstable();
            let mut w = start;
            for r in start..targets.len() {
                if r == start || targets[r] != targets[w - 1] {
                    targets[w] = targets[r];
                    w += 1;
                }
            }
            targets.truncate(w);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Vertices `0, 1, 2, ...`; with ascending colors the first solution is
    /// the lexicographically least canonical coloring.
    Natural,
    /// Smallest remaining domain first, ties broken by the given rank.
    Saturation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Colors are 1-based.
    Colored(Vec<u32>),
    Unsat,
    BudgetExceeded,
    Cancelled,
}

enum Abort {
    Budget,
    Cancelled,
}

/// Polled every few thousand nodes; returning true abandons the search.
pub(crate) type StopFlag<'a> = &'a (dyn Fn() -> bool + Sync);

struct Search<'g> {
    graph: &'g Graph,
    k: u32,
    order: Order,
    rank: Vec<u32>,
    color: Vec<u32>,
    domain: Vec<u64>,
    trail: Vec<(u32, u64)>,
    nodes: u64,
    budget: u64,
    stop: Option<StopFlag<'g>>,
}

fn low_bits(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Runs an exhaustive search for a proper coloring with at most `k` colors.
/// `rank` orders ties for [`Order::Saturation`] (lower first); it is ignored
/// for [`Order::Natural`]. Returns the outcome and the number of nodes
/// (color assignments tried).
pub(crate) fn color_graph(
    graph: &Graph,
    k: u32,
    order: Order,
    rank: Option<Vec<u32>>,
    budget: u64,
    stop: Option<StopFlag<'_>>,
) -> (Outcome, u64) {
    assert!((1..=MAX_SEARCH_COLORS).contains(&k));
    let n = graph.len();
    let mut search = Search {
        graph,
        k,
        order,
        rank: rank.unwrap_or_else(|| (0..n as u32).collect()),
        color: vec![0; n],
        domain: vec![low_bits(k); n],
        trail: Vec::new(),
        nodes: 0,
        budget,
        stop,
    };
    let outcome = match search.descend(0, 0) {
        Ok(true) => Outcome::Colored(search.color),
        Ok(false) => Outcome::Unsat,
        Err(Abort::Budget) => Outcome::BudgetExceeded,
        Err(Abort::Cancelled) => Outcome::Cancelled,
    };
    (outcome, search.nodes)
}

impl Search<'_> {
    fn pick(&self, depth: usize, max_used: u32) -> usize {
        match self.order {
            Order::Natural => depth,
            Order::Saturation => {
                let allowed = low_bits((max_used + 1).min(self.k));
                let mut best = usize::MAX;
                let mut best_key = (u32::MAX, u32::MAX);
                for v in 0..self.color.len() {
                    if self.color[v] != 0 {
                        continue;
                    }
                    let key = ((self.domain[v] & allowed).count_ones(), self.rank[v]);
                    if key < best_key {
                        best_key = key;
                        best = v;
                        if key.0 <= 1 {
                            break;
                        }
                    }
                }
                best
            }
        }
    }

    fn descend(&mut self, depth: usize, max_used: u32) -> Result<bool, Abort> {
        if depth == self.color.len() {
            return Ok(true);
        }
        let v = self.pick(depth, max_used);
        // a new color is only allowed once all smaller ones are in use
        let mut choices = self.domain[v] & low_bits((max_used + 1).min(self.k));
        while choices != 0 {
            let bit = choices & choices.wrapping_neg();
            choices ^= bit;
            let c = bit.trailing_zeros() + 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Abort::Budget);
            }
            if self.nodes.is_multiple_of(4096) && self.stop.is_some_and(|stop| stop()) {
                return Err(Abort::Cancelled);
            }
            let mark = self.trail.len();
            self.color[v] = c;
            if self.forward_check(v, bit) && self.descend(depth + 1, max_used.max(c))? {
                return Ok(true);
            }
            self.undo(mark);
            self.color[v] = 0;
        }
        Ok(false)
    }

    fn forward_check(&mut self, v: usize, bit: u64) -> bool {
        for &u in self.graph.neighbors(v) {
            let u = u as usize;
            if self.color[u] == 0 && self.domain[u] & bit != 0 {
                self.trail.push((u as u32, self.domain[u]));
                self.domain[u] &= !bit;
                if self.domain[u] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (u, d) = self.trail.pop().expect("trail above mark");
            self.domain[u as usize] = d;
        }
    }
}

/// Left-to-right first-fit coloring; uses at most `max degree + 1` colors.
pub(crate) fn first_fit(graph: &Graph) -> Vec<u32> {
    let mut color = vec![0u32; graph.len()];
    for v in 0..graph.len() {
        let mut used: Vec<u32> = graph
            .neighbors(v)
            .iter()
            .map(|&u| color[u as usize])
            .filter(|&c| c != 0)
            .collect();
        used.sort_unstable();
        used.dedup();
        color[v] = used
            .iter()
            .zip(1..)
            .find(|&(&c, want)| c != want)
            .map(|(_, want)| want)
            .unwrap_or(used.len() as u32 + 1);
    }
    color
}

#[cfg(test)]
pub(crate) fn is_proper(graph: &Graph, color: &[u32]) -> bool {
    (0..graph.len()).all(|v| {
        graph
            .neighbors(v)
            .iter()
            .all(|&u| color[u as usize] != color[v])
    })
}
