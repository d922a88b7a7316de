#![allow(dead_code)]

pub mod props;

use bistellar_core::bistellar::{apply_move, find_bistellar_pairs, BistellarPair};
use bistellar_core::complex::TriangulatedManifold;
use bistellar_core::fixtures;
use bistellar_core::simplex::Simplex;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random 2-sphere with at most `max_vertices` vertices, grown from the
/// tetrahedron boundary by subdivisions and flips.
pub fn random_sphere(seed: u64, max_vertices: usize) -> TriangulatedManifold {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut k = fixtures::tetrahedron_boundary();
    let steps = rng.gen_range(2..16);
    for _ in 0..steps {
        let grow = k.vertices().len() < max_vertices && rng.gen_bool(0.5);
        let p = if grow {
            let facets: Vec<&Simplex> = k.facets().collect();
            let f = (*facets.choose(&mut rng).expect("nonempty")).clone();
            BistellarPair::new(f, Simplex::new([k.vertex_universe() + 1]).expect("vertex"))
        } else {
            match find_bistellar_pairs(&k, 1).choose(&mut rng) {
                Some(p) => p.clone(),
                None => continue,
            }
        };
        k = apply_move(&k, &p).expect("valid move");
    }
    k
}

/// At least 50 distinct random spheres on at most 8 vertices.
pub fn sphere_corpus() -> Vec<TriangulatedManifold> {
    let mut out: Vec<TriangulatedManifold> = Vec::new();
    let mut seed = 0;
    while out.len() < 50 {
        let k = random_sphere(seed, 8);
        if !out.iter().any(|o| o.key() == k.key()) {
            out.push(k);
        }
        seed += 1;
    }
    out
}
