mod common;

use common::{all_minors, g6, kuratowski_oracle, random_graph, rng, COUSIN_PARENTED, HEAWOOD_PARENTED};
use ik_sieve::families::Catalog;
use ik_sieve::minors::{
    has_minor, has_minor_named, has_topological_minor, heawood_by_edge_deletion, ik_by_catalog, MinorOp,
};
use ik_sieve::planarity::is_planar;
use ik_sieve::{are_isomorphic, canonical_code, Graph};
use rand::Rng;

fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &e).unwrap()
}

fn small_targets() -> Vec<Graph> {
    vec![
        complete(3),
        complete(4),
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap(),
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
    ]
}

#[test]
fn search_agrees_with_exhaustive_minor_closure() {
    let mut r = rng(31);
    let targets = small_targets();
    for _ in 0..150 {
        let g = random_graph(&mut r, 6, 0.55);
        let minors = all_minors(&g);
        for t in &targets {
            let found = has_minor(&g, t);
            assert_eq!(found.is_some(), minors.contains(&canonical_code(t)), "{:?} target {:?}", g.edges(), t.edges());
            if let Some(w) = found {
                assert!(w.validates(&g, t));
            }
        }
    }
}

#[test]
fn graph_is_a_minor_of_itself() {
    let h = Catalog::Heawood.graph();
    let w = has_minor(&h, &h).unwrap();
    assert!(w.operation_script.is_empty());
}

#[test]
fn wagner_characterization_on_random_graphs() {
    let mut r = rng(41);
    let (k5, k33) = (Catalog::K5.graph(), Catalog::K33.graph());
    for _ in 0..300 {
        let p = r.gen_range(0.25..0.7);
        let g = random_graph(&mut r, 9, p);
        let obstructed = has_minor(&g, &k5).is_some() || has_minor(&g, &k33).is_some();
        assert_eq!(obstructed, !is_planar(&g), "{:?}", g.edges());
    }
}

#[test]
fn minors_are_monotone_under_edge_addition() {
    let mut r = rng(43);
    let k4 = complete(4);
    let k33 = Catalog::K33.graph();
    for _ in 0..200 {
        let g = random_graph(&mut r, 8, 0.4);
        let n = g.vertex_count();
        if n < 2 {
            continue;
        }
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        if u == v || g.adjacent(u, v) {
            continue;
        }
        let bigger = g.with_edge(u, v).unwrap();
        for t in [&k4, &k33] {
            if has_minor(&g, t).is_some() {
                assert!(has_minor(&bigger, t).is_some());
            }
        }
    }
}

#[test]
fn topological_and_ordinary_minors_agree_for_cubic_targets() {
    let mut r = rng(47);
    let k33 = Catalog::K33.graph();
    let k4 = complete(4);
    for _ in 0..200 {
        let g = random_graph(&mut r, 8, 0.5);
        for t in [&k33, &k4] {
            assert_eq!(has_topological_minor(&g, t), has_minor(&g, t).is_some(), "{:?}", g.edges());
        }
        let k5_sub = has_topological_minor(&g, &Catalog::K5.graph());
        let k33_sub = has_topological_minor(&g, &k33);
        assert_eq!(k5_sub || k33_sub, kuratowski_oracle(&g), "{:?}", g.edges());
    }
}

#[test]
fn k5_is_a_minor_but_not_a_subdivision_of_the_petersen_graph() {
    let mut e = Vec::new();
    for i in 0..5 {
        e.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    }
    let petersen = Graph::new(10, &e).unwrap();
    let k5 = Catalog::K5.graph();
    assert!(has_minor(&petersen, &k5).is_some());
    assert!(!has_topological_minor(&petersen, &k5));
}

#[test]
fn heawood_parented_graphs() {
    let heawood = Catalog::Heawood.graph();
    for text in HEAWOOD_PARENTED {
        let g = g6(text);
        let fast = heawood_by_edge_deletion(&g).unwrap();
        assert!(fast.validates(&g, &heawood));
        assert!(fast.is_edge_deletion_only());
        assert_eq!(fast.edge_deletions(), 2);
        let general = has_minor(&g, &heawood).unwrap();
        assert!(general.validates(&g, &heawood));
    }
}

#[test]
fn heawood_tests_agree_on_near_misses() {
    let heawood = Catalog::Heawood.graph();
    let mut r = rng(53);
    for _ in 0..40 {
        // swap one Heawood edge for a non-edge: same size, usually not Heawood
        let edges = heawood.edges();
        let drop = edges[r.gen_range(0..edges.len())];
        let g = heawood.without_edge(drop.0, drop.1).unwrap();
        let (u, v) = (r.gen_range(0..14), r.gen_range(0..14));
        if u == v || g.adjacent(u, v) {
            continue;
        }
        let g = g.with_edge(u, v).unwrap();
        let fast = heawood_by_edge_deletion(&g).is_some();
        assert_eq!(fast, has_minor(&g, &heawood).is_some());
        assert_eq!(fast, are_isomorphic(&g, &heawood));
    }
}

#[test]
fn cousin_plus_edge_witnesses() {
    let cousin = Catalog::Cousin110.graph();
    for text in COUSIN_PARENTED {
        let g = g6(text);
        let (cat, w) = ik_by_catalog(&g).unwrap();
        assert_eq!(cat, Catalog::Cousin110);
        assert!(w.validates(&g, &cousin));
        assert!(w.is_edge_deletion_only());
        assert_eq!(w.edge_deletions(), 1);
    }
}

#[test]
fn witness_rendering() {
    let g = g6(COUSIN_PARENTED[0]);
    let w = has_minor_named(&g, &Catalog::Cousin110.graph(), "COUSIN110").unwrap();
    let text = w.to_string();
    assert!(text.starts_with("COUSIN110; DELETE_EDGE "), "{text}");
    assert_eq!(MinorOp::DeleteVertex(3).to_string(), "DELETE_VERTEX 3");
    assert_eq!(MinorOp::ContractEdge(1, 2).to_string(), "CONTRACT_EDGE 1 2");
}

#[test]
fn ops_reject_missing_edges() {
    let k33 = Catalog::K33.graph();
    assert!(MinorOp::DeleteEdge(0, 1).apply(&k33).is_none());
    assert!(MinorOp::ContractEdge(0, 1).apply(&k33).is_none());
    assert!(MinorOp::DeleteVertex(6).apply(&k33).is_none());
    let c = MinorOp::ContractEdge(0, 3).apply(&k33).unwrap();
    assert_eq!((c.vertex_count(), c.edge_count()), (5, 8));
}

#[test]
fn planar_graphs_have_no_catalog_witness() {
    let mut r = rng(59);
    let mut tested = 0;
    while tested < 60 {
        let g = random_graph(&mut r, 9, 0.4);
        if !is_planar(&g) {
            continue;
        }
        tested += 1;
        assert!(has_minor(&g, &Catalog::K5.graph()).is_none());
        assert!(has_minor(&g, &Catalog::K33.graph()).is_none());
    }
    tested = 0;
    while tested < 30 {
        let g = random_graph(&mut r, 16, 0.2);
        if g.vertex_count() < 14 || !is_planar(&g) {
            continue;
        }
        tested += 1;
        assert!(ik_by_catalog(&g).is_none());
    }
}
