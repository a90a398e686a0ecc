//! Incidence structures: Desarguesian projective planes, cyclic difference-set
//! designs, the small biplanes, and their incidence graphs.

use serde::Serialize;
use thiserror::Error;

use crate::fields::{FieldError, FiniteField};
use crate::graphs::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("difference set base is empty")]
    EmptyBaseSet,
    #[error("modulus must be positive")]
    ZeroModulus,
}

/// Points `0..num_points` and blocks given as sorted point lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    num_points: usize,
    blocks: Vec<Vec<usize>>,
    label: String,
}

impl IncidenceStructure {
    /// Normalizes each block (sorted, deduplicated points) and drops
    /// repeated blocks, keeping first occurrences in order.
    pub fn new(num_points: usize, blocks: Vec<Vec<usize>>, label: impl Into<String>) -> Self {
        assert!(num_points > 0, "an incidence structure needs at least one point");
        let mut kept: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            b.sort_unstable();
            b.dedup();
            assert!(b.iter().all(|&p| p < num_points), "block point out of range");
            if !kept.contains(&b) {
                kept.push(b);
            }
        }
        IncidenceStructure { num_points, blocks: kept, label: label.into() }
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    fn contains(&self, block: usize, point: usize) -> bool {
        self.blocks[block].binary_search(&point).is_ok()
    }

    fn blocks_through(&self, points: &[usize]) -> usize {
        (0..self.blocks.len()).filter(|&b| points.iter().all(|&p| self.contains(b, p))).count()
    }

    /// The structure whose blocks are the complements of these blocks.
    pub fn complement(&self) -> IncidenceStructure {
        let blocks = self
            .blocks
            .iter()
            .map(|b| (0..self.num_points).filter(|p| b.binary_search(p).is_err()).collect())
            .collect();
        IncidenceStructure::new(self.num_points, blocks, format!("complement of {}", self.label))
    }
}

/// PG(2, q): points and lines are the 1- and 2-dimensional subspaces of
/// GF(q)^3, both indexed by normalized homogeneous coordinates (leftmost
/// nonzero coordinate 1) in lexicographic order.
pub fn projective_plane(q: u32) -> Result<IncidenceStructure, DesignError> {
    let field = FiniteField::new(q)?;
    let mut coords: Vec<[u32; 3]> = Vec::new();
    for x in field.elements() {
        for y in field.elements() {
            for z in field.elements() {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    coords.push(v);
                }
            }
        }
    }
    coords.sort();
    let dot = |a: &[u32; 3], b: &[u32; 3]| (0..3).fold(0, |acc, i| field.add(acc, field.mul(a[i], b[i])));
    let mut blocks: Vec<Vec<usize>> = coords
        .iter()
        .map(|normal| coords.iter().enumerate().filter(|(_, p)| dot(normal, p) == 0).map(|(i, _)| i).collect())
        .collect();
    blocks.sort();
    Ok(IncidenceStructure::new(coords.len(), blocks, format!("PG(2,{q})")))
}

/// Blocks `D + t (mod m)` for `t = 0..m`, in order of `t`.
pub fn difference_set_design(modulus: usize, base: &[usize]) -> Result<IncidenceStructure, DesignError> {
    if modulus == 0 {
        return Err(DesignError::ZeroModulus);
    }
    if base.is_empty() {
        return Err(DesignError::EmptyBaseSet);
    }
    let blocks = (0..modulus).map(|t| base.iter().map(|&d| (d + t) % modulus).collect()).collect();
    Ok(IncidenceStructure::new(modulus, blocks, format!("Z_{modulus} difference set {base:?}")))
}

/// The (4,3,2) biplane: all 3-subsets of a 4-set.
pub fn biplane_4_3_2() -> IncidenceStructure {
    difference_set_design(4, &[0, 1, 2]).expect("valid base set")
}

/// The (7,4,2) biplane as the complement of the Fano plane.
pub fn biplane_7_4_2() -> IncidenceStructure {
    projective_plane(2).expect("GF(2) exists").complement()
}

/// The (11,5,2) biplane from the quadratic residues mod 11.
pub fn biplane_11_5_2() -> IncidenceStructure {
    difference_set_design(11, &[1, 3, 4, 5, 9]).expect("valid base set")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// Every two points lie on exactly one common block.
    pub p1: bool,
    /// Every two blocks meet in exactly one point.
    pub p2: bool,
    /// Some four points have no three on a common block.
    pub p3: bool,
    pub order: Option<usize>,
}

impl AxiomReport {
    pub fn is_plane(&self) -> bool {
        self.p1 && self.p2 && self.p3
    }
}

fn has_quadrangle(s: &IncidenceStructure) -> bool {
    fn extend(s: &IncidenceStructure, chosen: &mut Vec<usize>, start: usize) -> bool {
        if chosen.len() == 4 {
            return true;
        }
        for p in start..s.num_points {
            let collinear = chosen
                .iter()
                .enumerate()
                .any(|(i, &a)| chosen[i + 1..].iter().any(|&b| s.blocks_through(&[a, b, p]) > 0));
            if collinear {
                continue;
            }
            chosen.push(p);
            if extend(s, chosen, p + 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    extend(s, &mut Vec::new(), 0)
}

pub fn check_projective_axioms(s: &IncidenceStructure) -> AxiomReport {
    let v = s.num_points;
    let b = s.blocks.len();
    let p1 = (0..v).all(|x| (x + 1..v).all(|y| s.blocks_through(&[x, y]) == 1));
    let p2 = (0..b)
        .all(|i| (i + 1..b).all(|j| s.blocks[i].iter().filter(|p| s.blocks[j].binary_search(p).is_ok()).count() == 1));
    let p3 = has_quadrangle(s);
    let order =
        (p1 && p2 && p3).then(|| s.blocks.iter().map(Vec::len).max()).flatten().filter(|&k| k >= 3).map(|k| k - 1);
    AxiomReport { p1, p2, p3, order }
}

/// True iff all blocks have size `k` and each point pair lies on exactly
/// `lambda` blocks.
pub fn check_design(s: &IncidenceStructure, k: usize, lambda: usize) -> bool {
    let v = s.num_points;
    s.blocks.iter().all(|b| b.len() == k) && (0..v).all(|x| (x + 1..v).all(|y| s.blocks_through(&[x, y]) == lambda))
}

/// Points are vertices `0..v`, block `j` is vertex `v + j`.
pub fn incidence_graph(s: &IncidenceStructure) -> Graph {
    let v = s.num_points;
    let edges = s.blocks.iter().enumerate().flat_map(|(j, b)| b.iter().map(move |&p| (p, v + j)));
    Graph::from_edges_unchecked(v + s.blocks.len(), edges)
}
