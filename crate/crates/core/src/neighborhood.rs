//! The neighborhood graph `φ(G)` and the order-`l` neighborhood Laplacian.
//!
//! `L^[l] = I - (I - L)^l` is never materialized as a weighted graph; its
//! spectrum is the transform `λ ↦ 1 - (1 - λ)^l` of `σ(L)`.

use serde::Serialize;
use thiserror::Error;

use crate::graphs::Graph;
use crate::spectra::{self, DenseSymmetricMatrix, SpectraError, Spectrum, GAP_TOL};
use crate::verify::{Status, VerificationRecord, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NeighborhoodError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("minimum degree {0} is below 3")]
    MinDegreeTooSmall(usize),
    #[error("power must be positive")]
    ZeroPower,
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Same vertex set; `u ~ v` iff `u != v` share a neighbor in `g`.
pub fn phi(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::new();
    let mut seen = vec![usize::MAX; n];
    for u in 0..n {
        for &w in g.neighbors(u) {
            for &v in g.neighbors(w) {
                if v > u && seen[v] != u {
                    seen[v] = u;
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, edges).expect("vertex set is unchanged")
}

/// Whether `φ(G)` is `(d^2 - d)`-regular for a `d`-regular, 4-cycle-free `G`.
pub fn phi_degree_check(g: &Graph) -> Result<bool, NeighborhoodError> {
    let d = g.regular_degree().ok_or_else(|| NeighborhoodError::PreconditionViolated("graph is not regular".into()))?;
    if g.has_four_cycle() {
        return Err(NeighborhoodError::PreconditionViolated("graph has a 4-cycle".into()));
    }
    Ok(phi(g).regular_degree() == Some(d * d - d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PhiConnectivity {
    pub bipartite: bool,
    pub phi_components: usize,
}

pub fn phi_connectivity_vs_bipartiteness(g: &Graph) -> Result<PhiConnectivity, NeighborhoodError> {
    if !g.is_connected() {
        return Err(NeighborhoodError::Disconnected);
    }
    Ok(PhiConnectivity { bipartite: g.is_bipartite(), phi_components: phi(g).component_count() })
}

/// `{1 - (1 - λ)^l : λ ∈ σ(L)}`, ascending.
pub fn neighborhood_spectrum(nlap: &Spectrum, l: u32) -> Spectrum {
    nlap.map(|x| 1.0 - (1.0 - x).powi(l as i32))
}

/// The symmetric conjugate of `L^[l]`, i.e. `I - (D^{-1/2} A D^{-1/2})^l`,
/// together with its spectrum obtained by transforming `σ(L)`.
pub fn neighborhood_laplacian(g: &Graph, l: u32) -> Result<(DenseSymmetricMatrix, Spectrum), NeighborhoodError> {
    if l == 0 {
        return Err(NeighborhoodError::ZeroPower);
    }
    if !g.is_connected() {
        return Err(NeighborhoodError::Disconnected);
    }
    let nrm = spectra::normalized_adjacency(g)?;
    let mut power = nrm.clone();
    for _ in 1..l {
        power = power.product_symmetric(&nrm);
    }
    let matrix = DenseSymmetricMatrix::identity(g.order()).scaled_add(1.0, &power, -1.0);
    let spectrum = neighborhood_spectrum(&spectra::nlap_spectrum(g)?, l);
    Ok((matrix, spectrum))
}

/// Checks the order-`l` gap bound with `d` the minimum degree, plus the
/// lower bound on the top eigenvalue for even `l`.
pub fn check_theonei1(g: &Graph, l: u32) -> Result<VerificationRecord, NeighborhoodError> {
    let d = g.min_degree();
    if d < 3 {
        return Err(NeighborhoodError::MinDegreeTooSmall(d));
    }
    let (_, spectrum) = neighborhood_laplacian(g, l)?;
    let mut witness = Witness::new();
    let status = if theonei1_on_spectrum(&spectrum, d, l, &mut witness, "") { Status::Pass } else { Status::Fail };
    Ok(VerificationRecord::new(g, "theonei1", status, witness))
}

/// Evaluates the order-`l` claims on a precomputed spectrum, recording
/// witnesses under `prefix`.
pub(crate) fn theonei1_on_spectrum(spectrum: &Spectrum, d: usize, l: u32, w: &mut Witness, prefix: &str) -> bool {
    let df = d as f64;
    let gap = spectrum.eigenvalues.iter().map(|x| (1.0 - x).abs()).fold(f64::INFINITY, f64::min);
    let bound = ((df - 1.0).sqrt() / df).powi(l as i32);
    w.num(&format!("{prefix}gap"), gap);
    w.num(&format!("{prefix}bound"), bound);
    let mut ok = gap <= bound + GAP_TOL;
    if l % 2 == 0 {
        let k = (l / 2) as i32;
        let top = spectrum.max();
        let lower = 1.0 - (df - 1.0).powi(k) / df.powi(2 * k);
        w.num(&format!("{prefix}largest"), top);
        w.num(&format!("{prefix}largest_lower_bound"), lower);
        ok &= top >= lower - GAP_TOL && top <= 1.0 + GAP_TOL;
    }
    w.int(&format!("{prefix}d"), d);
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{incidence_graph, projective_plane};
    use crate::generators;
    use crate::graphs::is_isomorphic;

    #[test]
    fn phi_examples() {
        let c6 = phi(&generators::cycle(6).unwrap());
        let two_triangles = generators::cycle(3).unwrap().disjoint_union(&generators::cycle(3).unwrap());
        assert!(is_isomorphic(&c6, &two_triangles).unwrap());
        let k7 = generators::complete(7).unwrap();
        assert!(is_isomorphic(&phi(&generators::heawood()), &k7.disjoint_union(&k7)).unwrap());
        assert_eq!(phi(&generators::cycle(3).unwrap()), generators::cycle(3).unwrap());
    }

    #[test]
    fn phi_matches_common_neighbor_oracle() {
        let g = generators::random_connected_min_degree(25, 2, 10, 4).unwrap();
        let p = phi(&g);
        for u in 0..25 {
            for v in 0..25 {
                let oracle = u != v && g.neighbors(u).iter().any(|w| g.neighbors(v).contains(w));
                assert_eq!(p.has_edge(u, v), oracle);
            }
        }
    }

    #[test]
    fn phi_degree_examples() {
        assert_eq!(phi_degree_check(&generators::heawood()), Ok(true));
        assert_eq!(phi_degree_check(&generators::mcgee()), Ok(true));
        assert_eq!(phi_degree_check(&incidence_graph(&projective_plane(3).unwrap())), Ok(true));
        assert!(phi_degree_check(&generators::friendship(2).unwrap()).is_err());
        assert!(phi_degree_check(&generators::complete_bipartite(3, 3).unwrap()).is_err());
    }

    #[test]
    fn phi_connectivity_examples() {
        let h = phi_connectivity_vs_bipartiteness(&generators::heawood()).unwrap();
        assert_eq!(h, PhiConnectivity { bipartite: true, phi_components: 2 });
        let f = phi_connectivity_vs_bipartiteness(&generators::friendship(2).unwrap()).unwrap();
        assert_eq!(f, PhiConnectivity { bipartite: false, phi_components: 1 });
        let c5 = phi_connectivity_vs_bipartiteness(&generators::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.phi_components, 1);
        let two = generators::cycle(5).unwrap().disjoint_union(&generators::cycle(5).unwrap());
        assert_eq!(phi_connectivity_vs_bipartiteness(&two), Err(NeighborhoodError::Disconnected));
    }

    #[test]
    fn transform_matches_matrix_power() {
        let g = generators::random_connected_min_degree(18, 3, 6, 9).unwrap();
        for l in 1..=4 {
            let (m, s) = neighborhood_laplacian(&g, l).unwrap();
            let direct = spectra::eig_symmetric(&m).unwrap();
            for (a, b) in direct.eigenvalues.iter().zip(&s.eigenvalues) {
                assert!((a - b).abs() < 1e-10);
            }
        }
        let l1 = neighborhood_laplacian(&g, 1).unwrap().1;
        for (a, b) in l1.eigenvalues.iter().zip(&spectra::nlap_spectrum(&g).unwrap().eigenvalues) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn small_spectra() {
        let (_, tri) = neighborhood_laplacian(&generators::cycle(3).unwrap(), 2).unwrap();
        for (a, b) in tri.eigenvalues.iter().zip([0.0, 0.75, 0.75]) {
            assert!((a - b).abs() < 1e-12);
        }
        let (_, hw) = neighborhood_laplacian(&generators::heawood(), 2).unwrap();
        assert!((hw.max() - 7.0 / 9.0).abs() < 1e-10);
        assert_eq!(neighborhood_laplacian(&generators::cycle(3).unwrap(), 0), Err(NeighborhoodError::ZeroPower));
    }

    #[test]
    fn theonei1_examples() {
        for l in 1..=4 {
            assert_eq!(check_theonei1(&generators::heawood(), l).unwrap().status, Status::Pass);
            assert_eq!(check_theonei1(&generators::complete(4).unwrap(), l).unwrap().status, Status::Pass);
        }
        let r = generators::random_regular(20, 3, 1).unwrap();
        assert_eq!(check_theonei1(&r, 3).unwrap().status, Status::Pass);
        assert_eq!(check_theonei1(&generators::cycle(5).unwrap(), 2), Err(NeighborhoodError::MinDegreeTooSmall(2)));
    }
}
