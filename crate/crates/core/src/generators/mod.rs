//! Named graph families, random regular graphs and isomorph-free enumeration
//! of regular graphs.

mod catalog;
mod enumerate;

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::designs::DesignError;
use crate::graphs::{Graph, GraphError};

pub use catalog::{Family, FamilyArgs, FamilyRegistry, ParamValue};
pub use enumerate::{enumerate_regular, EnumerateOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("{family} needs {param} >= {min}, got {got}")]
    TooSmall { family: &'static str, param: &'static str, min: usize, got: usize },
    #[error("no {d}-regular graph on {n} vertices (n*d must be even and d < n)")]
    InfeasibleDegree { n: usize, d: usize },
    #[error("pairing model gave up after {0} restarts")]
    RetriesExhausted(usize),
    #[error("enumeration of {d}-regular graphs on {n} vertices exceeds the runtime cap")]
    TooLarge { n: usize, d: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn at_least(family: &'static str, param: &'static str, min: usize, got: usize) -> Result<(), GenError> {
    if got < min {
        return Err(GenError::TooSmall { family, param, min, got });
    }
    Ok(())
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    at_least("cycle", "n", 3, n)?;
    Ok(Graph::from_edges_unchecked(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    at_least("path", "n", 1, n)?;
    Ok(Graph::from_edges_unchecked(n, (1..n).map(|i| (i - 1, i))))
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    at_least("complete", "n", 1, n)?;
    Ok(Graph::from_edges_unchecked(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenError> {
    at_least("complete_bipartite", "a", 1, a)?;
    at_least("complete_bipartite", "b", 1, b)?;
    Ok(Graph::from_edges_unchecked(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))))
}

pub fn hypercube(k: usize) -> Result<Graph, GenError> {
    at_least("hypercube", "k", 1, k)?;
    let n = 1usize << k;
    let edges = (0..n).flat_map(|v| (0..k).map(move |bit| (v, v ^ (1 << bit)))).filter(|(u, v)| u < v);
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// `k` triangles sharing vertex 0.
pub fn friendship(k: usize) -> Result<Graph, GenError> {
    at_least("friendship", "k", 1, k)?;
    let edges = (0..k).flat_map(|i| {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        [(0, a), (0, b), (a, b)]
    });
    Ok(Graph::from_edges_unchecked(2 * k + 1, edges))
}

/// `k` internally disjoint paths of length 3 between the non-adjacent poles
/// 0 and 1; `book(2)` is the hexagon.
pub fn book(k: usize) -> Result<Graph, GenError> {
    at_least("book", "k", 1, k)?;
    let edges = (0..k).flat_map(|i| {
        let (a, b) = (2 * i + 2, 2 * i + 3);
        [(0, a), (a, b), (b, 1)]
    });
    Ok(Graph::from_edges_unchecked(2 * k + 2, edges))
}

/// `d` copies of `K_d` sharing vertex 0.
pub fn windmill(d: usize) -> Result<Graph, GenError> {
    at_least("windmill", "d", 2, d)?;
    let mut edges = Vec::new();
    for copy in 0..d {
        let members: Vec<usize> = std::iter::once(0).chain((1..d).map(|j| 1 + copy * (d - 1) + (j - 1))).collect();
        for (i, &a) in members.iter().enumerate() {
            edges.extend(members[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    Ok(Graph::from_edges_unchecked(d * (d - 1) + 1, edges))
}

/// Circular ladder `C_n x K_2`; `prism(3)` is the triangular prism.
pub fn prism(n: usize) -> Result<Graph, GenError> {
    at_least("prism", "n", 3, n)?;
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)]);
    Ok(Graph::from_edges_unchecked(2 * n, edges))
}

/// Hamiltonian cycle `0..n` plus chords `i -- i + shifts[i mod len]`.
fn lcf(n: usize, shifts: &[isize]) -> Graph {
    let ring = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (0..n).map(|i| {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        (i, j)
    });
    Graph::from_edges_unchecked(n, ring.chain(chords).collect::<Vec<_>>())
}

fn validated(g: Graph, name: &str, order: usize, degree: usize, girth: usize) -> Graph {
    assert_eq!(g.order(), order, "{name}: order");
    assert_eq!(g.regular_degree(), Some(degree), "{name}: degree");
    assert_eq!(g.girth(), Some(girth), "{name}: girth");
    g
}

/// The (3,6)-cage, drawn as a 14-cycle with chords `[5,-5]^7`.
pub fn heawood() -> Graph {
    validated(lcf(14, &[5, -5]), "heawood", 14, 3, 6)
}

/// The (3,7)-cage, LCF `[12,7,-7]^8`.
pub fn mcgee() -> Graph {
    validated(lcf(24, &[12, 7, -7]), "mcgee", 24, 3, 7)
}

/// The (3,8)-cage, LCF `[-13,-9,7,-7,9,13]^5`.
pub fn tutte_coxeter() -> Graph {
    validated(lcf(30, &[-13, -9, 7, -7, 9, 13]), "tutte_coxeter", 30, 3, 8)
}

/// The (3,5)-cage.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    validated(
        Graph::from_edges_unchecked(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>()),
        "petersen",
        10,
        3,
        5,
    )
}

pub const MAX_PAIRING_RESTARTS: usize = 10_000;

/// A random simple `d`-regular graph from the pairing model.
///
/// Points are matched one random pair at a time, only ever joining distinct,
/// non-adjacent vertices; when no admissible pair is left the attempt restarts.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 || d >= n || (n * d) % 2 == 1 {
        return Err(GenError::InfeasibleDegree { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_PAIRING_RESTARTS {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        points.shuffle(&mut rng);
        let mut edges: HashSet<(usize, usize)> = HashSet::with_capacity(n * d / 2);
        while !points.is_empty() {
            let admissible =
                |a: usize, b: usize, edges: &HashSet<(usize, usize)>| a != b && !edges.contains(&(a.min(b), a.max(b)));
            let len = points.len();
            let mut picked = None;
            for _ in 0..4 * len {
                let (i, j) = (rng.gen_range(0..len), rng.gen_range(0..len));
                if i != j && admissible(points[i], points[j], &edges) {
                    picked = Some((i, j));
                    break;
                }
            }
            if picked.is_none() {
                picked = (0..len)
                    .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                    .find(|&(i, j)| admissible(points[i], points[j], &edges));
            }
            let Some((i, j)) = picked else {
                continue 'attempt;
            };
            let (a, b) = (points[i], points[j]);
            edges.insert((a.min(b), a.max(b)));
            points.swap_remove(i.max(j));
            points.swap_remove(i.min(j));
        }
        let mut edges: Vec<_> = edges.into_iter().collect();
        edges.sort_unstable();
        return Ok(Graph::from_edges_unchecked(n, edges));
    }
    Err(GenError::RetriesExhausted(MAX_PAIRING_RESTARTS))
}

/// A random connected graph with minimum degree at least `min_degree`:
/// a connected random regular graph plus `extra` random edges.
pub fn random_connected_min_degree(n: usize, min_degree: usize, extra: usize, seed: u64) -> Result<Graph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_PAIRING_RESTARTS {
        let base = random_regular(n, min_degree, rng.gen())?;
        if !base.is_connected() {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = base.edges().collect();
        let mut added = 0;
        let mut tries = 0;
        while added < extra && tries < 100 * (extra + 1) {
            tries += 1;
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !base.has_edge(u, v) && !edges.contains(&(u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v)));
                added += 1;
            }
        }
        return Ok(Graph::from_edges_unchecked(n, edges));
    }
    Err(GenError::RetriesExhausted(MAX_PAIRING_RESTARTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs;
    use crate::graphs::is_isomorphic;

    #[test]
    fn small_families() {
        let tri = cycle(3).unwrap();
        assert_eq!((tri.order(), tri.size()), (3, 3));
        assert_eq!(cycle(6).unwrap().regular_degree(), Some(2));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.order(), q3.regular_degree()), (8, Some(3)));
        assert!(matches!(cycle(2), Err(GenError::TooSmall { .. })));
        assert!(matches!(friendship(0), Err(GenError::TooSmall { .. })));
        assert!(matches!(windmill(1), Err(GenError::TooSmall { .. })));
    }

    #[test]
    fn friendship_and_book() {
        assert_eq!(friendship(1).unwrap(), cycle(3).unwrap());
        let f3 = friendship(3).unwrap();
        assert_eq!((f3.order(), f3.degree(0)), (7, 6));
        assert!(is_isomorphic(&book(2).unwrap(), &cycle(6).unwrap()).unwrap());
        assert!(is_isomorphic(&book(1).unwrap(), &path(4).unwrap()).unwrap());
        let b5 = book(5).unwrap();
        assert_eq!((b5.order(), b5.degree(0), b5.degree(1)), (12, 5, 5));
        assert!(!b5.has_edge(0, 1));
        assert!((2..12).all(|v| b5.degree(v) == 2));
    }

    #[test]
    fn windmills() {
        assert!(is_isomorphic(&windmill(2).unwrap(), &path(3).unwrap()).unwrap());
        assert!(is_isomorphic(&windmill(3).unwrap(), &friendship(3).unwrap()).unwrap());
        let w4 = windmill(4).unwrap();
        assert_eq!((w4.order(), w4.degree(0)), (13, 12));
    }

    #[test]
    fn cages() {
        let h = heawood();
        let fano = designs::incidence_graph(&designs::projective_plane(2).unwrap());
        assert!(is_isomorphic(&h, &fano).unwrap());
        assert_eq!(mcgee().size(), 36);
        assert_eq!(tutte_coxeter().size(), 45);
        assert!(tutte_coxeter().is_bipartite());
    }

    #[test]
    fn random_regular_examples() {
        let g = random_regular(6, 2, 3).unwrap();
        assert_eq!(g.regular_degree(), Some(2));
        let g = random_regular(14, 3, 7).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(random_regular(5, 3, 0), Err(GenError::InfeasibleDegree { n: 5, d: 3 }));
        assert_eq!(random_regular(4, 4, 0), Err(GenError::InfeasibleDegree { n: 4, d: 4 }));
        assert_eq!(random_regular(30, 6, 42).unwrap(), random_regular(30, 6, 42).unwrap());
        for seed in 0..20 {
            assert_eq!(random_regular(40, 7, seed).unwrap().regular_degree(), Some(7));
        }
    }

    #[test]
    fn random_min_degree() {
        for seed in 0..10 {
            let g = random_connected_min_degree(20, 3, 6, seed).unwrap();
            assert!(g.is_connected() && g.min_degree() >= 3);
        }
    }
}
