//! Exhaustive generation of `d`-regular graphs, one per isomorphism class.
//!
//! Edges are added for the lowest vertex that still lacks degree, with
//! partners in increasing order, so every labeled graph reached is produced
//! once. Vertices are touched in index order (only the smallest untouched
//! vertex is ever a candidate partner), which makes untouched vertices
//! interchangeable and the touched prefix connected. Completed graphs are
//! deduplicated by canonical form.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use super::GenError;
use crate::graphs::{canonical_form, parse_graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub connected: bool,
    /// Shortest allowed cycle length; values below 3 impose nothing.
    pub min_girth: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { connected: true, min_girth: 3 }
    }
}

fn max_order(d: usize) -> usize {
    match d {
        0..=3 => 14,
        4 => 12,
        _ => 10,
    }
}

struct State {
    n: usize,
    d: usize,
    opts: EnumerateOptions,
    adj: Vec<Vec<usize>>,
    touched: usize,
    out: Vec<Graph>,
}

impl State {
    /// BFS distance from `a` to `b`, giving up beyond `limit`.
    fn within(&self, a: usize, b: usize, limit: usize) -> bool {
        let mut dist = vec![usize::MAX; self.n];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= limit {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    if w == b {
                        return true;
                    }
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn extend(&mut self) {
        let Some(v) = (0..self.n).find(|&v| self.adj[v].len() < self.d) else {
            let edges = (0..self.n).flat_map(|u| self.adj[u].iter().filter(move |&&w| w > u).map(move |&w| (u, w)));
            self.out.push(Graph::from_edges_unchecked(self.n, edges.collect::<Vec<_>>()));
            return;
        };
        if v >= self.touched {
            if self.opts.connected && v > 0 {
                return;
            }
            self.touched = v + 1;
            self.extend();
            self.touched = v;
            return;
        }
        let need = self.d - self.adj[v].len();
        let start = self.adj[v].iter().max().map_or(v + 1, |&m| m.max(v) + 1);
        let last = self.touched.min(self.n - 1);
        // Not enough remaining candidates to complete v.
        if self.n - start < need {
            return;
        }
        for w in start..=last {
            if self.adj[w].len() >= self.d {
                continue;
            }
            if self.opts.min_girth > 3 && self.within(v, w, self.opts.min_girth - 2) {
                continue;
            }
            let grew = w == self.touched;
            if grew {
                self.touched += 1;
            }
            self.adj[v].push(w);
            self.adj[w].push(v);
            self.extend();
            self.adj[v].pop();
            self.adj[w].pop();
            if grew {
                self.touched -= 1;
            }
        }
    }
}

/// All `d`-regular graphs on `n` vertices up to isomorphism, each in its
/// canonical labeling, sorted by canonical form.
pub fn enumerate_regular(n: usize, d: usize, opts: EnumerateOptions) -> Result<Vec<Graph>, GenError> {
    if n == 0 || d >= n || (n * d) % 2 == 1 {
        return Err(GenError::InfeasibleDegree { n, d });
    }
    if n > max_order(d) {
        return Err(GenError::TooLarge { n, d });
    }
    let mut state = State { n, d, opts, adj: vec![Vec::new(); n], touched: 0, out: Vec::new() };
    state.extend();
    let forms: Vec<Vec<u8>> =
        state.out.par_iter().map(|g| canonical_form(g).expect("n is within the canonical-form cap")).collect();
    let classes: BTreeMap<Vec<u8>, ()> = forms.into_iter().map(|f| (f, ())).collect();
    Ok(classes.into_keys().map(|f| parse_graph6(&f).expect("canonical forms are valid graph6")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graphs::is_isomorphic;

    #[test]
    fn cubic_six() {
        let gs = enumerate_regular(6, 3, EnumerateOptions::default()).unwrap();
        assert_eq!(gs.len(), 2);
        let k33 = generators::complete_bipartite(3, 3).unwrap();
        let prism = generators::prism(3).unwrap();
        assert!(gs.iter().any(|g| is_isomorphic(g, &k33).unwrap()));
        assert!(gs.iter().any(|g| is_isomorphic(g, &prism).unwrap()));
    }

    #[test]
    fn small_counts() {
        let count =
            |n, d, connected| enumerate_regular(n, d, EnumerateOptions { connected, min_girth: 3 }).unwrap().len();
        assert_eq!(count(4, 3, true), 1);
        assert_eq!(count(8, 3, true), 5);
        assert_eq!(count(10, 3, true), 19);
        // 2-regular graphs are unions of cycles: partitions of 9 into parts >= 3.
        assert_eq!(count(9, 2, false), 4);
        assert_eq!(count(9, 2, true), 1);
        // Disconnected cubic on 8: 2K4 joins the 5 connected ones.
        assert_eq!(count(8, 3, false), 6);
        // Connected quartic graphs: 1, 1, 2, 6, 16 for n = 5..9.
        assert_eq!(count(9, 4, true), 16);
    }

    #[test]
    fn girth_filter() {
        let gs = enumerate_regular(10, 3, EnumerateOptions { connected: true, min_girth: 5 }).unwrap();
        assert_eq!(gs.len(), 1);
        assert!(is_isomorphic(&gs[0], &generators::petersen()).unwrap());
        let gs = enumerate_regular(14, 3, EnumerateOptions { connected: true, min_girth: 6 }).unwrap();
        assert_eq!(gs.len(), 1);
        assert!(is_isomorphic(&gs[0], &generators::heawood()).unwrap());
    }

    #[test]
    fn caps_and_infeasible() {
        assert_eq!(enumerate_regular(16, 3, EnumerateOptions::default()), Err(GenError::TooLarge { n: 16, d: 3 }));
        assert_eq!(
            enumerate_regular(7, 3, EnumerateOptions::default()),
            Err(GenError::InfeasibleDegree { n: 7, d: 3 })
        );
    }

    #[test]
    fn deterministic() {
        let a = enumerate_regular(10, 3, EnumerateOptions::default()).unwrap();
        let b = enumerate_regular(10, 3, EnumerateOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
