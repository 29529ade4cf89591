//! Reference searches for the integration tests. They share no code with the
//! library's engine.

#![allow(dead_code)]

/// Adjacency on `{0..n-1}` for the differences `diffs`.
fn adjacency(n: usize, diffs: &[u64]) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && diffs.contains(&(i.abs_diff(j) as u64)))
                .collect()
        })
        .collect()
}

/// Plain chronological backtracking over vertices `0, 1, ...` and colors
/// `1..=k`, checking each assignment against the earlier vertices only.
/// No propagation, no ordering heuristics, no symmetry breaking.
pub fn naive_colorable(n: usize, diffs: &[u64], k: u32) -> bool {
    fn go(v: usize, adj: &[Vec<usize>], k: u32, color: &mut Vec<u32>) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 1..=k {
            if adj[v].iter().all(|&u| u > v || color[u] != c) {
                color[v] = c;
                if go(v + 1, adj, k, color) {
                    return true;
                }
            }
        }
        color[v] = 0;
        false
    }
    let adj = adjacency(n, diffs);
    go(0, &adj, k, &mut vec![0; n])
}

pub fn is_proper(n: usize, diffs: &[u64], colors: &[u32], k: u32) -> bool {
    colors.len() == n
        && colors.iter().all(|&c| (1..=k).contains(&c))
        && (0..n).all(|i| {
            diffs
                .iter()
                .filter_map(|&d| i.checked_add(d as usize).filter(|&j| j < n))
                .all(|j| colors[i] != colors[j])
        })
}

/// Replays a window refutation with a different search: colors as boolean
/// tables, the vertex with fewest remaining colors first (ties by index),
/// and a new color allowed only right after the largest one in use.
/// `Some(true)` means no k-coloring exists, `None` means the step limit was
/// hit.
pub fn replay_refutes(n: usize, diffs: &[u64], k: u32, max_steps: u64) -> Option<bool> {
    struct St {
        adj: Vec<Vec<usize>>,
        k: usize,
        color: Vec<usize>,
        // ban[v][c] counts colored neighbours of v with color c
        ban: Vec<Vec<u32>>,
        steps: u64,
        max_steps: u64,
    }

    impl St {
        fn free(&self, v: usize, limit: usize) -> usize {
            (0..limit).filter(|&c| self.ban[v][c] == 0).count()
        }

        fn set(&mut self, v: usize, c: usize, delta: i32) {
            for i in 0..self.adj[v].len() {
                let u = self.adj[v][i];
                self.ban[u][c] = (self.ban[u][c] as i32 + delta) as u32;
            }
        }

        fn go(&mut self, left: usize, used: usize) -> Option<bool> {
            if left == 0 {
                return Some(true);
            }
            let limit = (used + 1).min(self.k);
            let v = (0..self.color.len())
                .filter(|&v| self.color[v] == usize::MAX)
                .min_by_key(|&v| (self.free(v, limit), v))
                .expect("an uncolored vertex");
            for c in 0..limit {
                if self.ban[v][c] != 0 {
                    continue;
                }
                self.steps += 1;
                if self.steps > self.max_steps {
                    return None;
                }
                self.color[v] = c;
                self.set(v, c, 1);
                let found = self.go(left - 1, used.max(c + 1))?;
                self.set(v, c, -1);
                self.color[v] = usize::MAX;
                if found {
                    return Some(true);
                }
            }
            Some(false)
        }
    }

    let adj = adjacency(n, diffs);
    let mut st = St {
        adj,
        k: k as usize,
        color: vec![usize::MAX; n],
        ban: vec![vec![0; k as usize]; n],
        steps: 0,
        max_steps,
    };
    st.go(n, 0).map(|colorable| !colorable)
}
