use bistellar_core::exchange::exchange_matrix;
use bistellar_core::fixtures;
use bistellar_core::graph::{enumerate_class, pair_set, to_dot, DEFAULT_NODE_CAP};
use bistellar_core::bistellar::apply_move;

#[test]
fn five_vertex_sphere_orbit() {
    let g = enumerate_class(&fixtures::bipyramid_s2(), DEFAULT_NODE_CAP).unwrap();
    assert_eq!(g.node_count(), 10);
    assert_eq!(g.edge_count(), 15);
    assert_eq!(pair_set(&g).len(), 30);
    assert!(g.is_connected());
    assert!((0..10).all(|i| g.degree(i) == 3));
    for e in &g.edges {
        let l = apply_move(&g.nodes[e.source], &e.pair).unwrap();
        assert_eq!(l.key(), g.nodes[e.target].key());
    }
    let dot = to_dot(&g);
    assert_eq!(dot.matches(" -- ").count(), 15);
}

#[test]
fn simplex5_boundary_orbit_is_a_point() {
    let g = enumerate_class(&fixtures::simplex5_boundary(), DEFAULT_NODE_CAP).unwrap();
    assert_eq!((g.node_count(), g.edge_count()), (1, 0));
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_class(&fixtures::octahedron(), DEFAULT_NODE_CAP).unwrap();
    let b = enumerate_class(&fixtures::octahedron(), DEFAULT_NODE_CAP).unwrap();
    assert_eq!(a, b);
    assert!(a.is_connected());
    for n in &a.nodes {
        assert!(exchange_matrix(n).is_skew_symmetric());
    }
}
