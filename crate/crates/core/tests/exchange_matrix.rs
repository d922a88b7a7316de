use bistellar_core::bistellar::{apply_move, find_bistellar_pairs, middle_move_data, BistellarPair};
use bistellar_core::exchange::{exchange_matrix, exchange_matrix_of, mutate};
use bistellar_core::fixtures;
use bistellar_core::simplex::{simplex, Simplex};

fn faces(labels: &[&[u32]]) -> Vec<Simplex> {
    labels.iter().map(|v| simplex(v)).collect()
}

#[test]
fn four_simplex_boundary_matrix() {
    let b = exchange_matrix(&fixtures::simplex4_boundary());
    let expected = vec![
        vec![0, -1, 1, 1, -1, 0, -1, 1, 0, 0],
        vec![1, 0, -1, -1, 0, 1, 1, 0, -1, 0],
        vec![-1, 1, 0, 0, 1, -1, 0, -1, 1, 0],
        vec![-1, 1, 0, 0, 1, -1, -1, 0, 0, 1],
        vec![1, 0, -1, -1, 0, 1, 0, 1, 0, -1],
        vec![0, -1, 1, 1, -1, 0, 0, 0, -1, 1],
        vec![1, -1, 0, 1, 0, 0, 0, -1, 1, -1],
        vec![-1, 0, 1, 0, -1, 0, 1, 0, -1, 1],
        vec![0, 1, -1, 0, 0, 1, -1, 1, 0, -1],
        vec![0, 0, 0, -1, 1, -1, 1, -1, 1, 0],
    ];
    assert_eq!(b.rows(), expected);
    let signs: Vec<i32> = fixtures::simplex4_boundary().oriented().signs().values().copied().collect();
    assert_eq!(signs, [1, -1, 1, -1, 1]);
}

#[test]
fn local_h1_matrices() {
    let ba = exchange_matrix_of(&fixtures::local_h1_alpha());
    assert_eq!(
        ba.rows(),
        vec![
            vec![0, 1, -1, -1, 1],
            vec![-1, 0, 0, 1, 0],
            vec![1, 0, 0, 0, -1],
            vec![1, -1, 0, 0, 0],
            vec![-1, 0, 1, 0, 0],
        ]
    );
    let bb = exchange_matrix_of(&fixtures::local_h1_beta());
    let order = faces(&[&[3, 4], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
    assert_eq!(
        bb.reindexed(&order),
        vec![
            vec![0, -1, 1, 1, -1],
            vec![1, 0, -1, 0, 0],
            vec![-1, 1, 0, 0, 0],
            vec![-1, 0, 0, 0, 1],
            vec![1, 0, 0, -1, 0],
        ]
    );
}

#[test]
fn orbit_edges_satisfy_mutation_rule() {
    let k = fixtures::bipyramid_s2();
    for p in find_bistellar_pairs(&k, 1) {
        let (frame, sets) = middle_move_data(&k, &p).unwrap();
        let l = apply_move(&k, &p).unwrap();
        assert_eq!(mutate(&exchange_matrix(&k), &frame, &sets).unwrap(), exchange_matrix(&l), "{p}");
    }
    let k = fixtures::sphere4_join();
    let p = BistellarPair::new(simplex(&[1, 2, 3]), simplex(&[4, 5, 6]));
    let (frame, sets) = middle_move_data(&k, &p).unwrap();
    let l = apply_move(&k, &p).unwrap();
    assert_eq!(mutate(&exchange_matrix(&k), &frame, &sets).unwrap(), exchange_matrix(&l));
}

const H2_ALPHA: [[i32; 12]; 12] = [
    [0, -1, 1, 1, -1, 0, -1, 1, 0, 1, -1, 0],
    [1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1],
    [-1, 1, 0, 0, 1, -1, 0, -1, 1, 0, 1, -1],
    [-1, 1, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 1, 0, 0, -1, 0],
    [0, -1, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1],
    [1, -1, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0],
    [-1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, -1, 0, 0, 1, 0, 0, 0, 0, 0, -1],
    [-1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 1, 0, 0, -1, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
];

const H2_BETA: [[i32; 12]; 12] = [
    [0, -1, 1, 1, -1, 1, -1, 1, -1, 0, 0, 0],
    [1, 0, -1, -1, 1, -1, 0, 0, 0, 1, -1, 1],
    [-1, 1, 0, 0, 0, 0, 1, -1, 1, -1, 1, -1],
    [-1, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0],
    [1, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 1, -1, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 1],
    [0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 0, -1],
    [0, -1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0],
];

const H2_SHARED: [&[u32]; 9] = [
    &[1, 2, 4, 5],
    &[1, 2, 4, 6],
    &[1, 2, 5, 6],
    &[1, 3, 4, 5],
    &[1, 3, 4, 6],
    &[1, 3, 5, 6],
    &[2, 3, 4, 5],
    &[2, 3, 4, 6],
    &[2, 3, 5, 6],
];

#[test]
fn local_h2_matrices() {
    let ba = exchange_matrix_of(&fixtures::local_h2_alpha());
    let mut order_a = faces(&[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 3, 6]]);
    order_a.extend(faces(&H2_SHARED));
    assert_eq!(ba.index(), &order_a[..]);
    assert_eq!(ba.rows(), H2_ALPHA.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let bb = exchange_matrix_of(&fixtures::local_h2_beta());
    let mut order_b = faces(&[&[1, 4, 5, 6], &[2, 4, 5, 6], &[3, 4, 5, 6]]);
    order_b.extend(faces(&H2_SHARED));
    assert_eq!(bb.reindexed(&order_b), H2_BETA.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let sigma = |f: &Simplex| f.map_vertices(|v| 7 - v);
    for f in &order_a {
        for g in &order_a {
            assert_eq!(bb.get(&sigma(f), &sigma(g)), -ba.get(f, g), "{f} {g}");
        }
    }
}

#[test]
fn h1_sigma_table() {
    let k = fixtures::octahedron();
    let p = BistellarPair::new(simplex(&[1, 2]), simplex(&[3, 4]));
    let (frame, sets) = middle_move_data(&k, &p).unwrap();
    assert_eq!(frame.ordering, vec![1, 2, 3, 4]);
    let table: Vec<(Simplex, Simplex)> = sets.lambda_alpha_faces.iter().map(|f| (f.clone(), frame.sigma_face(f))).collect();
    let expected: Vec<(Simplex, Simplex)> = [
        ([1, 2], [3, 4]),
        ([1, 3], [2, 4]),
        ([1, 4], [1, 4]),
        ([2, 3], [2, 3]),
        ([2, 4], [1, 3]),
    ]
    .iter()
    .map(|(f, g)| (simplex(f), simplex(g)))
    .collect();
    assert_eq!(table, expected);
    assert_eq!(sets.d_alpha, [simplex(&[1, 2])].into());
    assert_eq!(sets.d_beta, [simplex(&[3, 4])].into());
    let images: std::collections::BTreeSet<Simplex> = table.iter().map(|(_, g)| g.clone()).collect();
    assert_eq!(images, sets.lambda_beta_faces);
}
