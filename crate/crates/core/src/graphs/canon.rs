//! Canonical labeling by individualization and refinement.
//!
//! Color refinement splits the vertex partition until it is equitable; the
//! search then individualizes each vertex of the first smallest non-singleton
//! cell in turn. Children whose refinement trace is not maximal are dropped,
//! and automorphisms found at leaves prune both siblings (orbit test) and
//! whole subtrees (jump back to the divergence level). The certificate is the
//! permuted adjacency matrix, one `u64` row per vertex, so `n <= 64`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::{write_graph6, Graph, GraphError};

pub const MAX_CANON_ORDER: usize = 64;

const MAX_STORED_AUTOMORPHISMS: usize = 256;

type Colors = Vec<u32>;

fn compress<K: Ord + Clone>(keys: &[K]) -> (Colors, Vec<K>) {
    let mut distinct = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    let colors = keys.iter().map(|k| distinct.binary_search(k).unwrap() as u32).collect();
    (colors, distinct)
}

/// Refines `colors` to the coarsest equitable partition below it, feeding
/// the per-round signature tables to `trace`.
fn refine(g: &Graph, colors: &mut Colors, trace: &mut DefaultHasher) {
    let n = g.order();
    let mut cells = colors.iter().max().map_or(0, |&m| m as usize + 1);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let (next, distinct) = compress(&sigs);
        distinct.hash(trace);
        *colors = next;
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

fn individualize(colors: &Colors, v: usize) -> Colors {
    let keys: Vec<u32> = colors.iter().enumerate().map(|(u, &c)| 2 * c + (u != v) as u32).collect();
    compress(&keys).0
}

fn target_cell(colors: &Colors) -> Option<u32> {
    let mut sizes = vec![0usize; colors.len()];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes.iter().enumerate().filter(|(_, &s)| s > 1).min_by_key(|(c, &s)| (s, *c)).map(|(c, _)| c as u32)
}

struct Leaf {
    path: Vec<usize>,
    /// vertex -> position
    perm: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl<'a> Search<'a> {
    fn certificate(&self, perm: &[usize]) -> Vec<u64> {
        let mut rows = vec![0u64; self.g.order()];
        for (u, v) in self.g.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        rows
    }

    fn orbit_roots(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn record_automorphism(&mut self, leaf_perm: &[usize], other_perm: &[usize]) {
        if self.automorphisms.len() >= MAX_STORED_AUTOMORPHISMS {
            return;
        }
        let mut at_position = vec![0; leaf_perm.len()];
        for (v, &p) in other_perm.iter().enumerate() {
            at_position[p] = v;
        }
        let gamma = leaf_perm.iter().map(|&p| at_position[p]).collect();
        self.automorphisms.push(gamma);
    }

    fn divergence(a: &[usize], b: &[usize]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    /// Returns the depth to unwind to when an automorphism makes the rest of
    /// the current subtree redundant.
    fn leaf(&mut self, colors: Colors, path: &[usize]) -> Option<usize> {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let cert = self.certificate(&perm);
        let Some(first) = &self.first else {
            let leaf = Leaf { path: path.to_vec(), perm, cert };
            self.best = Some(Leaf { path: leaf.path.clone(), perm: leaf.perm.clone(), cert: leaf.cert.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let (fperm, level) = (first.perm.clone(), Self::divergence(path, &first.path));
            self.record_automorphism(&perm, &fperm);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let (bperm, level) = (best.perm.clone(), Self::divergence(path, &best.path));
                self.record_automorphism(&perm, &bperm);
                Some(level)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { path: path.to_vec(), perm, cert });
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn search(&mut self, colors: Colors, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(cell) = target_cell(&colors) else {
            return self.leaf(colors, path);
        };
        let mut children: Vec<(u64, Colors, usize)> = colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == cell)
            .map(|(v, _)| {
                let mut trace = DefaultHasher::new();
                let mut next = individualize(&colors, v);
                refine(self.g, &mut next, &mut trace);
                (trace.finish(), next, v)
            })
            .collect();
        let top = children.iter().map(|c| c.0).max().unwrap();
        children.retain(|c| c.0 == top);
        let mut explored: Vec<usize> = Vec::new();
        for (_, next, v) in children {
            if !explored.is_empty() {
                let roots = self.orbit_roots(path);
                if explored.iter().any(|&w| roots[w] == roots[v]) {
                    continue;
                }
            }
            explored.push(v);
            path.push(v);
            let jump = self.search(next, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let mut colors = vec![0; n];
    refine(g, &mut colors, &mut DefaultHasher::new());
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    search.search(colors, &mut Vec::new());
    Ok(search.best.unwrap().perm)
}

/// graph6 bytes of the canonically relabeled graph; equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let perm = canonical_labeling(g)?;
    Ok(write_graph6(&g.relabel(&perm)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Stable identifier for reports: the canonical graph6 string when the graph
/// is small enough, otherwise `raw:` plus graph6 of the given labeling.
pub fn graph_id(g: &Graph) -> String {
    match canonical_form(g) {
        Ok(bytes) => String::from_utf8(bytes).expect("graph6 is ASCII"),
        Err(_) => format!("raw:{}", String::from_utf8(write_graph6(g)).expect("graph6 is ASCII")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        g.relabel(&perm)
    }

    #[test]
    fn relabelings_share_a_form() {
        let graphs = [
            generators::cycle(6).unwrap(),
            generators::heawood(),
            generators::mcgee(),
            generators::tutte_coxeter(),
            generators::complete(12).unwrap(),
            generators::complete_bipartite(5, 7).unwrap(),
            generators::hypercube(6).unwrap(),
            generators::friendship(5).unwrap(),
            Graph::from_edges(9, []).unwrap(),
        ];
        for g in &graphs {
            let form = canonical_form(g).unwrap();
            for seed in 0..4 {
                assert_eq!(canonical_form(&shuffled(g, seed)).unwrap(), form);
            }
        }
    }

    #[test]
    fn labeling_is_a_permutation() {
        let g = generators::petersen();
        let mut perm = canonical_labeling(&g).unwrap();
        perm.sort_unstable();
        assert_eq!(perm, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn k33_and_prism_differ() {
        let k33 = generators::complete_bipartite(3, 3).unwrap();
        let prism = generators::prism(3).unwrap();
        assert!(!is_isomorphic(&k33, &prism).unwrap());
        assert!(is_isomorphic(&prism, &shuffled(&prism, 9)).unwrap());
    }

    #[test]
    fn heawood_matches_fano_incidence() {
        let fano = crate::designs::incidence_graph(&crate::designs::projective_plane(2).unwrap());
        assert!(is_isomorphic(&generators::heawood(), &fano).unwrap());
    }

    #[test]
    fn too_large() {
        let g = generators::cycle(65).unwrap();
        assert_eq!(canonical_form(&g), Err(GraphError::TooLarge(65)));
        assert!(graph_id(&g).starts_with("raw:"));
    }

    #[test]
    fn cospectral_non_isomorphic_pair() {
        // K_{1,4} and C4 + K1 share the adjacency spectrum {±2, 0, 0, 0}.
        let star = generators::complete_bipartite(1, 4).unwrap();
        let c4k1 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_ne!(canonical_form(&star).unwrap(), canonical_form(&c4k1).unwrap());
    }
}
