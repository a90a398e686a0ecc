//! Simple undirected graphs and the structural predicates the gap theorems
//! quantify over.

mod canon;
mod io;

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, graph_id, is_isomorphic, MAX_CANON_ORDER};
pub use io::{parse_edgelist, parse_graph6, parse_graph6_lines, write_edgelist, write_graph6, GraphFormat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },
    #[error("u and v must be distinct (both {0})")]
    SameVertex(usize),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("trailing or missing bits: {0}")]
    TrailingBits(String),
    #[error("graph on {0} vertices exceeds the canonical-form cap")]
    TooLarge(usize),
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted; duplicate edges passed to constructors are
/// merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRangeVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph { adj: sets.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    /// Builds a graph from edges known to be valid. Panics otherwise; meant
    /// for the hardcoded catalog and internal constructions.
    pub(crate) fn from_edges_unchecked(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_edges(n, edges).expect("internal edge list is valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree();
        (d == self.max_degree()).then_some(d)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRangeVertex { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(())
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_pair(u, v)?;
        Ok(self.common_count_iter(u, v).collect())
    }

    pub fn symmetric_difference_nbhd(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_pair(u, v)?;
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let mut out: Vec<usize> = a
            .iter()
            .filter(|w| b.binary_search(w).is_err())
            .chain(b.iter().filter(|w| a.binary_search(w).is_err()))
            .copied()
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    fn common_count_iter(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        let b = &self.adj[v];
        self.adj[u].iter().copied().filter(move |w| b.binary_search(w).is_ok())
    }

    /// `|N(u) ∩ N(v)|`, allowing `u == v` (which yields `deg u`).
    pub fn common_count(&self, u: usize, v: usize) -> usize {
        self.common_count_iter(u, v).count()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Component label per vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    /// A proper 2-coloring (side 0 or 1 per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True iff some pair of distinct vertices has two or more common neighbors.
    pub fn has_four_cycle(&self) -> bool {
        let n = self.order();
        let mut seen = vec![usize::MAX; n];
        // Walk all 2-paths u-w-x; a repeated endpoint x from the same u closes a 4-cycle.
        for u in 0..n {
            for &w in &self.adj[u] {
                for &x in &self.adj[w] {
                    if x == u {
                        continue;
                    }
                    if seen[x] == u {
                        return true;
                    }
                    seen[x] = u;
                }
            }
        }
        false
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break 'bfs;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Vertices `(v, 0)` map to `v`, `(v, 1)` to `n + v`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.order();
        let edges = self.edges().flat_map(|(u, v)| [(u, n + v), (v, n + u)]);
        Graph::from_edges_unchecked(2 * n, edges)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v]));
        Graph::from_edges_unchecked(self.order(), edges)
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + n, v + n)));
        Graph::from_edges_unchecked(n + other.order(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(0, []), Err(GraphError::Empty));
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edges(2, [(0, 2)]), Err(GraphError::OutOfRangeVertex { vertex: 2, n: 2 }));
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn degree_examples() {
        assert!(generators::heawood().degrees().iter().all(|&d| d == 3));
        let f = generators::friendship(4).unwrap();
        assert_eq!(f.degree(0), 8);
        assert!((1..9).all(|v| f.degree(v) == 2));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degrees(), vec![1, 2, 1]);
        assert_eq!((p3.min_degree(), p3.max_degree()), (1, 2));
        assert_eq!(p3.regular_degree(), None);
    }

    #[test]
    fn common_neighbor_examples() {
        let c6 = generators::cycle(6).unwrap();
        assert_eq!(c6.common_neighbors(0, 2).unwrap(), vec![1]);
        assert_eq!(c6.symmetric_difference_nbhd(0, 2).unwrap(), vec![3, 5]);
        let k4 = generators::complete(4).unwrap();
        assert_eq!(k4.common_neighbors(1, 3).unwrap().len(), 2);
        // Two points of the Fano side of the incidence graph share one line.
        let h = crate::designs::incidence_graph(&crate::designs::projective_plane(2).unwrap());
        assert_eq!(h.common_neighbors(0, 5).unwrap().len(), 1);
        assert_eq!(c6.common_neighbors(2, 2), Err(GraphError::SameVertex(2)));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(generators::heawood().girth(), Some(6));
        assert_eq!(generators::cycle(3).unwrap().girth(), Some(3));
        assert_eq!(generators::mcgee().girth(), Some(7));
        assert_eq!(generators::tutte_coxeter().girth(), Some(8));
        assert_eq!(generators::complete(5).unwrap().girth(), Some(3));
        assert_eq!(generators::hypercube(4).unwrap().girth(), Some(4));
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
    }

    #[test]
    fn bipartite_connected_four_cycle() {
        let h = generators::heawood();
        assert!(h.is_bipartite() && h.is_connected() && !h.has_four_cycle());
        let k23 = generators::complete_bipartite(2, 3).unwrap();
        assert!(k23.is_bipartite() && k23.has_four_cycle());
        let f2 = generators::friendship(2).unwrap();
        assert!(!f2.is_bipartite() && f2.is_connected() && !f2.has_four_cycle());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.component_count(), 2);
    }

    #[test]
    fn double_cover_examples() {
        let tri = generators::cycle(3).unwrap();
        let c6 = generators::cycle(6).unwrap();
        assert!(is_isomorphic(&tri.bipartite_double_cover(), &c6).unwrap());
        let two_c6 = c6.disjoint_union(&c6);
        assert!(is_isomorphic(&c6.bipartite_double_cover(), &two_c6).unwrap());
        let f1 = generators::friendship(1).unwrap();
        assert!(is_isomorphic(&f1.bipartite_double_cover(), &c6).unwrap());
    }
}
