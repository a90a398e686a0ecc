//! Adjacency, normalized-Laplacian and M-matrix spectra, the two spectral
//! gaps, Rayleigh quotients and the test vectors used to bound them.
//!
//! The normalized Laplacian `L = I - D^{-1}A` is never handed to the solver
//! directly; its symmetric conjugate `I - D^{-1/2} A D^{-1/2}` has the same
//! spectrum.

mod eigen;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::Graph;

pub use eigen::{decompose, EigenDecomposition};

/// Absolute tolerance for comparing gaps with closed-form thresholds.
pub const GAP_TOL: f64 = 1e-9;

/// Eigenvalues closer than this to the minimum distance count as ties.
const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("eigensolver did not converge")]
    ConvergenceFailure,
    #[error("matrix has order 0")]
    EmptyMatrix,
    #[error("test vector is identically zero")]
    ZeroVector,
    #[error("vector has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("u and v must be distinct (both {0})")]
    SameVertex(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("girth {girth} is below the required {required}")]
    GirthTooSmall { girth: usize, required: usize },
    #[error("degree {0} is below 3")]
    DegreeTooSmall(usize),
}

/// Real symmetric matrix stored as its packed lower triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    n: usize,
    lower: Vec<f64>,
}

impl DenseSymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseSymmetricMatrix { n, lower: vec![0.0; n * (n + 1) / 2] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// Builds from `entry(i, j)` evaluated for `j <= i`.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Self {
        let mut lower = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..=i {
                lower.push(entry(i, j));
            }
        }
        DenseSymmetricMatrix { n, lower }
    }

    fn index(i: usize, j: usize) -> usize {
        let (i, j) = if i >= j { (i, j) } else { (j, i) };
        i * (i + 1) / 2 + j
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.lower[Self::index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.lower[Self::index(i, j)] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.lower.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `self * other`, for commuting factors whose product is symmetric
    /// (powers of one matrix, in particular). Only the lower triangle is
    /// computed.
    pub fn product_symmetric(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| (0..self.n).map(|k| self.get(i, k) * other.get(k, j)).sum())
    }

    pub fn scaled_add(&self, alpha: f64, other: &Self, beta: f64) -> Self {
        Self::from_fn(self.n, |i, j| alpha * self.get(i, j) + beta * other.get(i, j))
    }

    pub fn quadratic_form(&self, f: &[f64]) -> f64 {
        let mut total = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                total += f[i] * self.get(i, j) * f[j];
            }
        }
        total
    }

    pub fn mul_vec(&self, f: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * f[j]).sum()).collect()
    }
}

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub solver_tolerance: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// Number of eigenvalues within `tol` of `value`.
    pub fn multiplicity(&self, value: f64, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|x| (*x - value).abs() <= tol).count()
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Spectrum {
        let mut eigenvalues: Vec<f64> = self.eigenvalues.iter().map(|&x| f(x)).collect();
        eigenvalues.sort_by(f64::total_cmp);
        Spectrum { eigenvalues, solver_tolerance: self.solver_tolerance }
    }
}

pub fn eig_symmetric(m: &DenseSymmetricMatrix) -> Result<Spectrum, SpectraError> {
    let decomposition = decompose(m)?;
    Ok(Spectrum {
        eigenvalues: decomposition.values,
        solver_tolerance: 1e-10 * (m.max_abs() * m.order() as f64).max(1.0),
    })
}

pub fn adjacency_matrix(g: &Graph) -> DenseSymmetricMatrix {
    DenseSymmetricMatrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

fn require_no_isolated(g: &Graph) -> Result<(), SpectraError> {
    match (0..g.order()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(SpectraError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

fn require_connected(g: &Graph) -> Result<(), SpectraError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(SpectraError::Disconnected)
    }
}

/// `D^{-1/2} A D^{-1/2}`.
pub fn normalized_adjacency(g: &Graph) -> Result<DenseSymmetricMatrix, SpectraError> {
    require_no_isolated(g)?;
    let inv_sqrt: Vec<f64> = g.degrees().iter().map(|&d| 1.0 / (d as f64).sqrt()).collect();
    Ok(DenseSymmetricMatrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { inv_sqrt[i] * inv_sqrt[j] } else { 0.0 }))
}

/// `I - D^{-1/2} A D^{-1/2}`, similar to the random-walk Laplacian.
pub fn nlap_matrix(g: &Graph) -> Result<DenseSymmetricMatrix, SpectraError> {
    let n = normalized_adjacency(g)?;
    Ok(DenseSymmetricMatrix::identity(g.order()).scaled_add(1.0, &n, -1.0))
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum, SpectraError> {
    eig_symmetric(&adjacency_matrix(g))
}

pub fn nlap_spectrum(g: &Graph) -> Result<Spectrum, SpectraError> {
    eig_symmetric(&nlap_matrix(g)?)
}

/// `M_uv = sum over w in N(u) ∩ N(v) of 1 / (deg w * sqrt(deg u deg v))`.
pub fn m_matrix(g: &Graph) -> Result<DenseSymmetricMatrix, SpectraError> {
    require_no_isolated(g)?;
    let deg: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    let mut m = DenseSymmetricMatrix::zeros(g.order());
    for w in 0..g.order() {
        let nb = g.neighbors(w);
        for (a, &u) in nb.iter().enumerate() {
            for &v in &nb[..=a] {
                let add = 1.0 / (deg[w] * (deg[u] * deg[v]).sqrt());
                m.set(u, v, m.get(u, v) + add);
            }
        }
    }
    Ok(m)
}

/// The same matrix as [`m_matrix`], computed as `(D^{-1/2} A D^{-1/2})^2`.
pub fn m_matrix_squared(g: &Graph) -> Result<DenseSymmetricMatrix, SpectraError> {
    let n = normalized_adjacency(g)?;
    Ok(n.product_symmetric(&n))
}

pub fn m_spectrum(g: &Graph) -> Result<Spectrum, SpectraError> {
    eig_symmetric(&m_matrix(g)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GapKind {
    #[serde(rename = "adjacency_from_0")]
    AdjacencyFromZero,
    #[serde(rename = "laplacian_from_1")]
    LaplacianFromOne,
}

impl GapKind {
    pub fn center(self) -> f64 {
        match self {
            GapKind::AdjacencyFromZero => 0.0,
            GapKind::LaplacianFromOne => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapResult {
    pub value: f64,
    pub attaining_eigenvalue: f64,
    pub kind: GapKind,
}

impl GapResult {
    /// Distance from the spectrum to the kind's center. Among eigenvalues
    /// tied for the minimum distance the smallest is reported.
    pub fn from_spectrum(spectrum: &Spectrum, kind: GapKind) -> GapResult {
        let center = kind.center();
        let best = spectrum.eigenvalues.iter().map(|x| (x - center).abs()).fold(f64::INFINITY, f64::min);
        let attaining = *spectrum
            .eigenvalues
            .iter()
            .find(|x| (*x - center).abs() <= best + TIE_TOL)
            .expect("spectrum is non-empty");
        GapResult { value: (attaining - center).abs(), attaining_eigenvalue: attaining, kind }
    }
}

/// `min |λ|` over the adjacency spectrum.
pub fn gap_from_zero(g: &Graph) -> Result<GapResult, SpectraError> {
    require_connected(g)?;
    Ok(GapResult::from_spectrum(&adjacency_spectrum(g)?, GapKind::AdjacencyFromZero))
}

/// `min |λ - 1|` over the normalized Laplacian spectrum.
pub fn gap_from_one(g: &Graph) -> Result<GapResult, SpectraError> {
    require_connected(g)?;
    Ok(GapResult::from_spectrum(&nlap_spectrum(g)?, GapKind::LaplacianFromOne))
}

fn check_vector(g: &Graph, f: &[f64]) -> Result<f64, SpectraError> {
    if f.len() != g.order() {
        return Err(SpectraError::LengthMismatch { expected: g.order(), got: f.len() });
    }
    let norm: f64 = f.iter().map(|x| x * x).sum();
    if norm == 0.0 {
        return Err(SpectraError::ZeroVector);
    }
    Ok(norm)
}

/// `sum_{u,v} |N(u) ∩ N(v)| f(u) f(v) / sum_w f(w)^2`.
pub fn rayleigh_a2(g: &Graph, f: &[f64]) -> Result<f64, SpectraError> {
    let norm = check_vector(g, f)?;
    let n = g.order();
    let support: Vec<usize> = (0..n).filter(|&v| f[v] != 0.0).collect();
    let mut total = 0.0;
    for &u in &support {
        for &v in &support {
            total += g.common_count(u, v) as f64 * f[u] * f[v];
        }
    }
    Ok(total / norm)
}

/// `f^T M f / f^T f` with `M` from [`m_matrix`].
pub fn rayleigh_m(g: &Graph, f: &[f64]) -> Result<f64, SpectraError> {
    let norm = check_vector(g, f)?;
    Ok(m_matrix(g)?.quadratic_form(f) / norm)
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), SpectraError> {
    if v >= g.order() {
        return Err(SpectraError::OutOfRange(v));
    }
    Ok(())
}

/// `sqrt(deg u)` at `u`, `-sqrt(deg v)` at `v`, zero elsewhere.
pub fn pair_test_vector(g: &Graph, u: usize, v: usize) -> Result<Vec<f64>, SpectraError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(SpectraError::SameVertex(u));
    }
    let mut f = vec![0.0; g.order()];
    f[u] = (g.degree(u) as f64).sqrt();
    f[v] = -(g.degree(v) as f64).sqrt();
    Ok(f)
}

/// Positive root of `t^2 + (d-2) t - d(d-1) = 0`.
pub fn c_d(d: usize) -> Result<f64, SpectraError> {
    if d < 3 {
        return Err(SpectraError::DegreeTooSmall(d));
    }
    let d = d as f64;
    Ok(((d * d + 4.0 * (d - 1.0) * (d - 1.0)).sqrt() - (d - 2.0)) / 2.0)
}

/// Test vector on the windmill of `φ(G)` around `u` in a `d`-regular graph
/// of girth at least 7: `(d - 2 + sqrt(d^2 + 4(d-1)^2)) / 2` at `u`, `-1` on
/// the `d(d-1)` vertices at distance two, zero elsewhere.
pub fn windmill_test_vector(g: &Graph, u: usize) -> Result<Vec<f64>, SpectraError> {
    check_vertex(g, u)?;
    let d = g.regular_degree().ok_or(SpectraError::NotRegular)?;
    if let Some(girth) = g.girth() {
        if girth < 7 {
            return Err(SpectraError::GirthTooSmall { girth, required: 7 });
        }
    }
    let df = d as f64;
    let center = (df - 2.0 + (df * df + 4.0 * (df - 1.0) * (df - 1.0)).sqrt()) / 2.0;
    Ok(g.distances_from(u)
        .iter()
        .map(|dist| match dist {
            Some(0) => center,
            Some(2) => -1.0,
            _ => 0.0,
        })
        .collect())
}
