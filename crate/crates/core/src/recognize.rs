//! Exact combinatorial recognizers for the extremal families. Nothing here
//! looks at a spectrum: recognition must stay independent of the gaps it is
//! used to certify.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::generators;
use crate::graphs::{canonical_form, Graph};

/// Splits a connected bipartite graph into its two parts.
fn parts(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if !g.is_connected() {
        return None;
    }
    let side = g.bipartition()?;
    let (a, b): (Vec<usize>, Vec<usize>) = (0..g.order()).partition(|&v| side[v] == 0);
    Some((a, b))
}

fn constant_common_count(g: &Graph, part: &[usize], lambda: usize) -> bool {
    part.iter().enumerate().all(|(i, &u)| part[i + 1..].iter().all(|&v| g.common_count(u, v) == lambda))
}

/// Connected, bipartite, `k`-regular with equal parts, and every two
/// vertices on the same side share exactly `lambda` neighbors.
pub fn is_design_incidence(g: &Graph, k: usize, lambda: usize) -> bool {
    let Some((a, b)) = parts(g) else { return false };
    a.len() == b.len()
        && g.regular_degree() == Some(k)
        && constant_common_count(g, &a, lambda)
        && constant_common_count(g, &b, lambda)
}

/// The order `n >= 2` if `g` is the incidence graph of a projective plane:
/// parts of size `n^2 + n + 1`, `(n+1)`-regular, and any two points (lines)
/// meet in exactly one line (point).
pub fn is_projective_incidence(g: &Graph) -> Option<usize> {
    let k = g.regular_degree()?;
    if k < 3 {
        return None;
    }
    let n = k - 1;
    if g.order() != 2 * (n * n + n + 1) {
        return None;
    }
    is_design_incidence(g, k, 1).then_some(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "k", rename_all = "snake_case")]
pub enum D2Class {
    Triangle,
    Hexagon,
    Friendship(usize),
    Book(usize),
    None,
}

fn same_shape(g: &Graph, candidate: Result<Graph, generators::GenError>) -> bool {
    let Ok(h) = candidate else { return false };
    h.order() == g.order()
        && h.size() == g.size()
        && h.degrees().iter().max() == g.degrees().iter().max()
        && matches!((canonical_form(&h), canonical_form(g)), (Ok(a), Ok(b)) if a == b)
}

/// Matches `g` against the triangle, the hexagon, and the friendship and
/// book graphs of the matching order, in that order of preference.
pub fn classify_d2_extremal(g: &Graph) -> D2Class {
    let n = g.order();
    if same_shape(g, generators::cycle(3)) {
        return D2Class::Triangle;
    }
    if same_shape(g, generators::cycle(6)) {
        return D2Class::Hexagon;
    }
    if n >= 3 && n % 2 == 1 && same_shape(g, generators::friendship((n - 1) / 2)) {
        return D2Class::Friendship((n - 1) / 2);
    }
    if n >= 4 && (n - 2) % 2 == 0 && same_shape(g, generators::book((n - 2) / 2)) {
        return D2Class::Book((n - 2) / 2);
    }
    D2Class::None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub family: String,
    pub parameters: BTreeMap<String, usize>,
}

impl Recognition {
    fn new(family: &str, parameters: &[(&str, usize)]) -> Self {
        Recognition {
            family: family.to_string(),
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Best-effort identification: projective plane, then the degree-2
/// extremal families, then any symmetric design.
pub fn recognize(g: &Graph) -> Recognition {
    if let Some(n) = is_projective_incidence(g) {
        return Recognition::new("projective-plane", &[("order", n)]);
    }
    match classify_d2_extremal(g) {
        D2Class::Triangle => return Recognition::new("triangle", &[]),
        D2Class::Hexagon => return Recognition::new("hexagon", &[]),
        D2Class::Friendship(k) => return Recognition::new("friendship", &[("k", k)]),
        D2Class::Book(k) => return Recognition::new("book", &[("k", k)]),
        D2Class::None => {}
    }
    if let (Some(k), Some((a, _))) = (g.regular_degree(), parts(g)) {
        if a.len() >= 2 {
            let lambda = g.common_count(a[0], a[1]);
            if lambda > 0 && is_design_incidence(g, k, lambda) {
                return Recognition::new("symmetric-design", &[("v", a.len()), ("k", k), ("lambda", lambda)]);
            }
        }
    }
    Recognition::new("none", &[])
}
