//! Built-in reference values and the checks behind `verify-paper`.

use std::fmt;

use crate::bistellar::{find_bistellar_pairs, middle_move_data, BistellarPair};
use crate::cluster::{grouped_relation_check, presentation, relation_classes};
use crate::error::Result;
use crate::exchange::{exchange_matrix, exchange_matrix_of};
use crate::fixtures;
use crate::graph::{enumerate_class, pair_set, DEFAULT_NODE_CAP};
use crate::pl::build_chain_2d;
use crate::semifield::{PositiveRational, Trivial};
use crate::simplex::{simplex, OrientedSimplex, Simplex};

pub const SIMPLEX4_MATRIX: [[i32; 10]; 10] = [
    [0, -1, 1, 1, -1, 0, -1, 1, 0, 0],
    [1, 0, -1, -1, 0, 1, 1, 0, -1, 0],
    [-1, 1, 0, 0, 1, -1, 0, -1, 1, 0],
    [-1, 1, 0, 0, 1, -1, -1, 0, 0, 1],
    [1, 0, -1, -1, 0, 1, 0, 1, 0, -1],
    [0, -1, 1, 1, -1, 0, 0, 0, -1, 1],
    [1, -1, 0, 1, 0, 0, 0, -1, 1, -1],
    [-1, 0, 1, 0, -1, 0, 1, 0, -1, 1],
    [0, 1, -1, 0, 0, 1, -1, 1, 0, -1],
    [0, 0, 0, -1, 1, -1, 1, -1, 1, 0],
];

/// Rows and columns `(1,2) (1,3) (1,4) (2,3) (2,4)`.
pub const H1_ALPHA_MATRIX: [[i32; 5]; 5] =
    [[0, 1, -1, -1, 1], [-1, 0, 0, 1, 0], [1, 0, 0, 0, -1], [1, -1, 0, 0, 0], [-1, 0, 1, 0, 0]];

/// Rows and columns `(3,4) (1,3) (1,4) (2,3) (2,4)`.
pub const H1_BETA_MATRIX: [[i32; 5]; 5] =
    [[0, -1, 1, 1, -1], [1, 0, -1, 0, 0], [-1, 1, 0, 0, 0], [-1, 0, 0, 0, 1], [1, 0, 0, -1, 0]];

/// Rows and columns `(1,2,3,4) (1,2,3,5) (1,2,3,6)` followed by the shared
/// faces.
pub const H2_ALPHA_MATRIX: [[i32; 12]; 12] = [
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

/// Rows and columns `(1,4,5,6) (2,4,5,6) (3,4,5,6)` followed by the shared
/// faces.
pub const H2_BETA_MATRIX: [[i32; 12]; 12] = [
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

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for ReferenceCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

fn faces(labels: &[&[u32]]) -> Vec<Simplex> {
    labels.iter().map(|v| simplex(v)).collect()
}

fn rows<const N: usize>(m: &[[i32; N]; N]) -> Vec<Vec<i32>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn matrix_detail(got: &[Vec<i32>], want: &[Vec<i32>]) -> String {
    let wrong = got.iter().flatten().zip(want.iter().flatten()).filter(|(a, b)| a != b).count();
    if got.len() != want.len() {
        format!("size {} instead of {}", got.len(), want.len())
    } else if wrong > 0 {
        format!("{wrong} entries differ")
    } else {
        String::new()
    }
}

fn simplex4() -> Result<String> {
    let b = exchange_matrix(&fixtures::simplex4_boundary());
    Ok(matrix_detail(&b.rows(), &rows(&SIMPLEX4_MATRIX)))
}

fn local_h1() -> Result<String> {
    let a = exchange_matrix_of(&fixtures::local_h1_alpha())
        .reindexed(&faces(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
    let b = exchange_matrix_of(&fixtures::local_h1_beta())
        .reindexed(&faces(&[&[3, 4], &[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
    Ok(matrix_detail(&a, &rows(&H1_ALPHA_MATRIX)) + &matrix_detail(&b, &rows(&H1_BETA_MATRIX)))
}

fn local_h2() -> Result<String> {
    let mut order_a = faces(&[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 3, 6]]);
    order_a.extend(faces(&H2_SHARED));
    let mut order_b = faces(&[&[1, 4, 5, 6], &[2, 4, 5, 6], &[3, 4, 5, 6]]);
    order_b.extend(faces(&H2_SHARED));
    let a = exchange_matrix_of(&fixtures::local_h2_alpha()).reindexed(&order_a);
    let b = exchange_matrix_of(&fixtures::local_h2_beta()).reindexed(&order_b);
    Ok(matrix_detail(&a, &rows(&H2_ALPHA_MATRIX)) + &matrix_detail(&b, &rows(&H2_BETA_MATRIX)))
}

fn sigma_table() -> Result<String> {
    let k = fixtures::octahedron();
    let (frame, sets) = middle_move_data(&k, &BistellarPair::new(simplex(&[1, 2]), simplex(&[3, 4])))?;
    let want = [([1, 2], [3, 4]), ([1, 3], [2, 4]), ([1, 4], [1, 4]), ([2, 3], [2, 3]), ([2, 4], [1, 3])];
    let ok = sets.lambda_alpha_faces.len() == want.len()
        && want.iter().all(|(f, g)| sets.lambda_alpha_faces.contains(&simplex(f)) && frame.sigma_face(&simplex(f)) == simplex(g))
        && sets.d_alpha == [simplex(&[1, 2])].into()
        && sets.d_beta == [simplex(&[3, 4])].into();
    Ok(if ok { String::new() } else { "σ table differs".into() })
}

fn h2_frame() -> Result<String> {
    let k = fixtures::sphere4_join();
    let (frame, sets) = middle_move_data(&k, &BistellarPair::new(simplex(&[1, 2, 3]), simplex(&[4, 5, 6])))?;
    let signed = |v: &[u32], s: i32| OrientedSimplex::new(simplex(v), s);
    let old = vec![signed(&[1, 2, 3, 4, 5], 1), signed(&[1, 2, 3, 4, 6], -1), signed(&[1, 2, 3, 5, 6], 1)];
    let new = vec![signed(&[2, 3, 4, 5, 6], 1), signed(&[1, 3, 4, 5, 6], -1), signed(&[1, 2, 4, 5, 6], 1)];
    let d = faces(&[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 3, 6]]);
    let ok = frame.old_facets == old
        && frame.new_facets == new
        && sets.d_alpha.iter().eq(d.iter())
        && sets.common().len() == 9;
    Ok(if ok { String::new() } else { format!("frame {:?}", frame.ordering) })
}

fn sphere_pairs() -> Result<String> {
    let got: Vec<BistellarPair> = find_bistellar_pairs(&fixtures::bipyramid_s2(), 1);
    let want: Vec<BistellarPair> = [[1, 2], [1, 3], [2, 3]]
        .iter()
        .map(|a| BistellarPair::new(simplex(a), simplex(&[4, 5])))
        .collect();
    let none = find_bistellar_pairs(&fixtures::simplex4_boundary(), 1).is_empty();
    Ok(if got == want && none { String::new() } else { format!("{} pairs", got.len()) })
}

fn sphere_orbit() -> Result<String> {
    let g = enumerate_class(&fixtures::bipyramid_s2(), DEFAULT_NODE_CAP)?;
    let point = enumerate_class(&fixtures::simplex5_boundary(), DEFAULT_NODE_CAP)?;
    let counts = (g.node_count(), g.edge_count(), pair_set(&g).len());
    let ok = counts == (10, 15, 30)
        && g.is_connected()
        && (0..10).all(|i| g.degree(i) == 3)
        && point.node_count() == 1;
    Ok(if ok { String::new() } else { format!("{counts:?}") })
}

fn sphere_relations() -> Result<String> {
    let g = enumerate_class(&fixtures::bipyramid_s2(), DEFAULT_NODE_CAP)?;
    let p = presentation(&g, &Trivial)?;
    let first = "x(1,2)*x(4,5) = x(1,4)*x(2,5) + x(1,5)*x(2,4)";
    let ok = p.generators.len() == 10
        && p.relations.len() == 15
        && p.relations.iter().any(|r| r.to_string() == first)
        && p.relations.iter().all(|r| r.plus.gcd(&r.minus).is_one());
    Ok(if ok { String::new() } else { format!("{} relations", p.relations.len()) })
}

fn grouped() -> Result<String> {
    let g = enumerate_class(&fixtures::bipyramid_s2(), DEFAULT_NODE_CAP)?;
    let p = presentation(&g, &PositiveRational)?;
    let classes = relation_classes(&p.relations);
    let mut bad = 0;
    for c in &classes {
        let check = grouped_relation_check(c)?;
        if !(check.holds && check.consistent && check.factors[0].to_string() == "u + v + 1") {
            bad += 1;
        }
    }
    Ok(if classes.len() == 5 && bad == 0 { String::new() } else { format!("{} classes, {bad} failing", classes.len()) })
}

fn chain() -> Result<String> {
    let c = build_chain_2d(&fixtures::tetrahedron_boundary(), 6, DEFAULT_NODE_CAP)?;
    let counts: Vec<usize> = c.nodes.iter().map(|n| n.algebra.generators.len()).collect();
    Ok(if counts == [6, 10, 15] { String::new() } else { format!("{counts:?}") })
}

/// Runs every built-in reference check.
pub fn run_reference_checks() -> Vec<ReferenceCheck> {
    let checks: [(&'static str, fn() -> Result<String>); 10] = [
        ("B of the 4-simplex boundary", simplex4),
        ("local matrices for h=1", local_h1),
        ("local matrices for h=2", local_h2),
        ("σ table for h=1", sigma_table),
        ("signed frame facets for h=2", h2_frame),
        ("type-1 pairs of the 5-vertex sphere", sphere_pairs),
        ("orbit of the 5-vertex sphere", sphere_orbit),
        ("relations of the 5-vertex sphere", sphere_relations),
        ("grouped relations", grouped),
        ("generator counts of the sphere chain", chain),
    ];
    checks
        .iter()
        .map(|(name, f)| match f() {
            Ok(detail) => ReferenceCheck { name, passed: detail.is_empty(), detail },
            Err(e) => ReferenceCheck { name, passed: false, detail: e.to_string() },
        })
        .collect()
}
