//! Named families checked against the recognizers and closed-form spectra.

use specgap_core::designs::{check_design, incidence_graph, projective_plane};
use specgap_core::generators::{FamilyArgs, FamilyRegistry};
use specgap_core::graphs::is_isomorphic;
use specgap_core::recognize::{is_design_incidence, is_projective_incidence, recognize};
use specgap_core::spectra;

#[test]
fn recognized_planes_have_the_plane_spectrum() {
    let registry = FamilyRegistry::with_defaults();
    let planes = registry.build("pg", &FamilyArgs::parse("q=2..9").unwrap()).unwrap();
    assert_eq!(planes.len(), 7);
    for g in &planes {
        let n = is_projective_incidence(g).unwrap();
        let nf = n as f64;
        let s = spectra::adjacency_spectrum(g).unwrap();
        assert_eq!(s.multiplicity(nf + 1.0, 1e-8), 1);
        assert_eq!(s.multiplicity(-(nf + 1.0), 1e-8), 1);
        assert_eq!(s.multiplicity(nf.sqrt(), 1e-8), n * n + n);
        assert_eq!(s.multiplicity(-nf.sqrt(), 1e-8), n * n + n);
        assert!((spectra::gap_from_zero(g).unwrap().value - nf.sqrt()).abs() < 1e-9);
        assert!((spectra::gap_from_one(g).unwrap().value - nf.sqrt() / (nf + 1.0)).abs() < 1e-9);
    }
}

#[test]
fn pg2_is_heawood() {
    let g = incidence_graph(&projective_plane(2).unwrap());
    assert!(is_isomorphic(&g, &specgap_core::generators::heawood()).unwrap());
}

#[test]
fn biplane_family_matches_design_checker() {
    let registry = FamilyRegistry::with_defaults();
    for (k, v) in [(3, 4), (4, 7), (5, 11)] {
        let gs = registry.build("biplane", &FamilyArgs::parse(&format!("k={k}")).unwrap()).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].order(), 2 * v);
        assert!(is_design_incidence(&gs[0], k, 2));
        let r = recognize(&gs[0]);
        assert_eq!(r.parameters["lambda"], 2);
    }
}

#[test]
fn difference_set_family_builds_fano() {
    let registry = FamilyRegistry::with_defaults();
    // {1, 2, 4} mod 7 as a bitmask: 0b10110.
    let gs = registry.build("difference-set", &FamilyArgs::parse("m=7,base=22").unwrap()).unwrap();
    assert_eq!(is_projective_incidence(&gs[0]), Some(2));
    let s = specgap_core::designs::difference_set_design(7, &[1, 2, 4]).unwrap();
    assert!(check_design(&s, 3, 1));
}

#[test]
fn every_registered_family_builds_with_small_parameters() {
    let registry = FamilyRegistry::with_defaults();
    let small = |name: &str| match name {
        "cycle" | "path" | "complete" | "prism" => "n=5",
        "hypercube" => "k=3",
        "friendship" | "book" => "k=3",
        "windmill" => "d=3",
        "complete-bipartite" => "a=2,b=3",
        "pg" => "q=3",
        "biplane" => "k=4",
        "difference-set" => "m=7,base=22",
        "random-regular" => "n=10,d=3,seed=1,count=2",
        "regular" => "n=8,d=3",
        _ => "",
    };
    for name in registry.names() {
        let gs = registry.build(name, &FamilyArgs::parse(small(name)).unwrap()).unwrap();
        assert!(!gs.is_empty(), "{name}");
    }
}
