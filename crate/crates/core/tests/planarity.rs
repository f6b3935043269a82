mod common;

use std::collections::BTreeMap;

use common::{kuratowski_oracle, random_graph, rng, small_multigraphs};
use ik_sieve::families::Catalog;
use ik_sieve::planarity::{is_planar, prop21_classify, NonplanarCatalog, Prop21Verdict};
use ik_sieve::{canonical_code, Graph};

fn all_simple_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut classes = BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let g = Graph::new(n, &edges).unwrap();
        classes.entry(canonical_code(&g)).or_insert(g);
    }
    classes.into_values().collect()
}

#[test]
fn catalog_planarity() {
    assert!(!is_planar(&Catalog::K5.graph()));
    assert!(!is_planar(&Catalog::K33.graph()));
    assert!(!is_planar(&Catalog::K7.graph()));
    assert!(!is_planar(&Catalog::Heawood.graph()));
    assert!(is_planar(&complete(4)));
    assert!(is_planar(&Graph::empty()));
}

fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &e).unwrap()
}

#[test]
fn exact_test_matches_kuratowski_oracle_up_to_six_vertices() {
    let mut nonplanar = 0;
    for n in 1..=6 {
        for g in all_simple_graphs(n) {
            let oracle = !kuratowski_oracle(&g);
            assert_eq!(is_planar(&g), oracle, "{:?}", g.edges());
            nonplanar += usize::from(!oracle);
        }
    }
    // 1 at five vertices (K5), 7 at six
    assert!(nonplanar > 1);
}

#[test]
fn exact_test_matches_kuratowski_oracle_on_random_seven_vertex_graphs() {
    let mut r = rng(21);
    for _ in 0..400 {
        let g = random_graph(&mut r, 7, 0.55);
        assert_eq!(is_planar(&g), !kuratowski_oracle(&g), "{:?}", g.edges());
    }
}

#[test]
fn multigraph_planarity_follows_simple_underlying() {
    let mut doubled = Catalog::K5.graph().edges();
    doubled.push((0, 1));
    let g = Graph::new(5, &doubled).unwrap();
    assert!(!is_planar(&g));
    assert_eq!(prop21_classify(&NonplanarCatalog::k33_e1()).unwrap(), Prop21Verdict::K33E1);
    assert_eq!(prop21_classify(&NonplanarCatalog::k33_e2()).unwrap(), Prop21Verdict::K33E2);
}

#[test]
fn small_reduced_multigraphs_nonplanar_set_is_the_catalog() {
    let graphs = small_multigraphs(10, 3);
    assert!(!graphs.is_empty());
    let mut nonplanar = Vec::new();
    for g in &graphs {
        let v = prop21_classify(g).unwrap();
        assert_eq!(v.is_planar(), is_planar(g), "{:?}", g.edges());
        if !v.is_planar() {
            nonplanar.push(canonical_code(g));
        }
    }
    nonplanar.sort();
    let mut expected: Vec<_> = NonplanarCatalog::all().iter().map(|(_, g)| canonical_code(g)).collect();
    expected.sort();
    assert_eq!(nonplanar, expected);
}

#[test]
fn classification_rejects_low_degree_input() {
    assert!(prop21_classify(&Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()).is_err());
}

#[test]
fn large_graphs_use_the_exact_test() {
    assert_eq!(prop21_classify(&Catalog::Heawood.graph()).unwrap(), Prop21Verdict::GeneralNonplanar);
    let prism_stack = {
        // planar cubic graph on 12 vertices: hexagonal prism
        let mut e = Vec::new();
        for i in 0..6 {
            e.extend([(i, (i + 1) % 6), (6 + i, 6 + (i + 1) % 6), (i, 6 + i)]);
        }
        Graph::new(12, &e).unwrap()
    };
    assert_eq!(prop21_classify(&prism_stack).unwrap(), Prop21Verdict::Planar);
}
