//! The orderly enumerator against a naive one that tries every vertex pair
//! in lexicographic order, deduplicated by canonical form.

use std::collections::BTreeSet;

use specgap_core::generators::{self, enumerate_regular, EnumerateOptions};
use specgap_core::graphs::{canonical_form, is_isomorphic, Graph};

fn naive(n: usize, d: usize, connected: bool) -> BTreeSet<Vec<u8>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut forms = BTreeSet::new();
    let mut chosen = Vec::new();
    let mut deg = vec![0; n];
    fn go(
        i: usize,
        pairs: &[(usize, usize)],
        n: usize,
        d: usize,
        deg: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if deg.iter().all(|&x| x == d) {
            out.push(Graph::from_edges(n, chosen.iter().copied()).unwrap());
            return;
        }
        if i == pairs.len() {
            return;
        }
        let (u, v) = pairs[i];
        // Once every pair touching u has been considered u must be full.
        let last_for_u = pairs[i + 1..].iter().all(|&(a, _)| a != u);
        if deg[u] < d && deg[v] < d {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            go(i + 1, pairs, n, d, deg, chosen, out);
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !(last_for_u && deg[u] < d) {
            go(i + 1, pairs, n, d, deg, chosen, out);
        }
    }
    let mut graphs = Vec::new();
    go(0, &pairs, n, d, &mut deg, &mut chosen, &mut graphs);
    for g in graphs {
        if !connected || g.is_connected() {
            forms.insert(canonical_form(&g).unwrap());
        }
    }
    forms
}

fn orderly(n: usize, d: usize, connected: bool) -> BTreeSet<Vec<u8>> {
    let gs = enumerate_regular(n, d, EnumerateOptions { connected, min_girth: 3 }).unwrap();
    let forms: BTreeSet<Vec<u8>> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(forms.len(), gs.len(), "duplicate classes");
    forms
}

#[test]
fn agrees_with_naive_enumeration() {
    for (n, d) in [(4, 3), (6, 3), (8, 3), (5, 2), (6, 2), (7, 2), (8, 2), (6, 4), (7, 4), (8, 4), (8, 5)] {
        for connected in [true, false] {
            assert_eq!(orderly(n, d, connected), naive(n, d, connected), "n={n} d={d} connected={connected}");
        }
    }
}

#[test]
fn girth_six_cubic_on_fourteen_is_heawood() {
    let gs = enumerate_regular(14, 3, EnumerateOptions { connected: true, min_girth: 6 }).unwrap();
    assert!(gs.iter().any(|g| is_isomorphic(g, &generators::heawood()).unwrap()));
    assert!(gs.iter().all(|g| g.girth() >= Some(6)));
}

#[test]
fn caps_and_infeasible_parameters() {
    assert!(enumerate_regular(16, 3, EnumerateOptions::default()).is_err());
    assert!(enumerate_regular(14, 4, EnumerateOptions::default()).is_err());
    assert!(enumerate_regular(7, 3, EnumerateOptions::default()).is_err());
}
