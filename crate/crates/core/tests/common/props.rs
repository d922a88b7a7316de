//! Property bodies shared by the proptest suite and the acceptance run.

use std::collections::BTreeSet;

use bistellar_core::bistellar::{apply_move, find_bistellar_pairs, middle_move_data};
use bistellar_core::complex::{complexes_equal, TriangulatedManifold};
use bistellar_core::exchange::exchange_matrix;
use bistellar_core::io::{emit_facets, emit_oriented, parse_manifold};
use bistellar_core::simplex::Simplex;
use proptest::prelude::*;
use proptest::sample::Index;

use super::random_sphere;

pub fn orientation_determinism(seed: u64, shuffle: u64) -> Result<(), TestCaseError> {
    let k = random_sphere(seed, 8);
    let mut lists: Vec<Vec<u32>> = k.facets().map(|f| f.vertices().to_vec()).collect();
    let r = (shuffle as usize) % lists.len();
    lists.rotate_left(r);
    for l in &mut lists {
        l.reverse();
    }
    let a = TriangulatedManifold::from_vertex_lists(&lists, 2).unwrap();
    let b = TriangulatedManifold::from_vertex_lists(&lists, 2).unwrap();
    prop_assert_eq!(a.oriented(), b.oriented());
    prop_assert!(a.oriented() == k.oriented() || a.oriented() == k.negated().oriented());
    Ok(())
}

pub fn skew_symmetry(seed: u64) -> Result<(), TestCaseError> {
    let k = random_sphere(seed, 8);
    let b = exchange_matrix(&k);
    prop_assert!(b.is_skew_symmetric());
    prop_assert!(b.entries_in_unit_range());
    prop_assert_eq!(b.size(), k.codim1_faces().len());
    Ok(())
}

pub fn sign_flip_negates(seed: u64) -> Result<(), TestCaseError> {
    let k = random_sphere(seed, 8);
    prop_assert_eq!(exchange_matrix(&k.negated()), exchange_matrix(&k).negated());
    Ok(())
}

pub fn sigma_involution(seed: u64, pick: Index) -> Result<(), TestCaseError> {
    let k = random_sphere(seed, 8);
    let pairs = find_bistellar_pairs(&k, 1);
    prop_assume!(!pairs.is_empty());
    let p = pick.get(&pairs);
    let (frame, sets) = middle_move_data(&k, p).unwrap();
    for v in &frame.ordering {
        prop_assert_eq!(frame.sigma_vertex(frame.sigma_vertex(*v)), *v);
    }
    prop_assert_eq!(frame.sigma_face(&p.alpha), p.beta.clone());
    let images: BTreeSet<Simplex> = sets.lambda_alpha_faces.iter().map(|f| frame.sigma_face(f)).collect();
    prop_assert_eq!(&images, &sets.lambda_beta_faces);
    Ok(())
}

pub fn d_sets_disjoint(seed: u64, pick: Index) -> Result<(), TestCaseError> {
    let k = random_sphere(seed, 8);
    let pairs = find_bistellar_pairs(&k, 1);
    prop_assume!(!pairs.is_empty());
    let (_, sets) = middle_move_data(&k, pick.get(&pairs)).unwrap();
    prop_assert!(sets.d_alpha.is_disjoint(&sets.lambda_beta_faces));
    prop_assert!(sets.d_beta.is_disjoint(&sets.lambda_alpha_faces));
    prop_assert!(sets.d_alpha.iter().all(|f| k.contains_face(f)));
    prop_assert!(sets.d_beta.iter().all(|f| !k.contains_face(f)));
    let common_b: BTreeSet<Simplex> = sets.lambda_beta_faces.difference(&sets.d_beta).cloned().collect();
    prop_assert_eq!(sets.common(), common_b);
    Ok(())
}

pub fn facet_round_trip(seed: u64) -> Result<(), TestCaseError> {
    let k = random_sphere(seed, 8);
    let back = parse_manifold(&emit_facets(&k)).unwrap();
    prop_assert!(complexes_equal(&back, &k));
    prop_assert!(back.oriented() == k.oriented() || back.oriented() == k.negated().oriented());
    let signed = parse_manifold(&emit_oriented(k.oriented())).unwrap();
    prop_assert_eq!(signed.oriented(), k.oriented());
    Ok(())
}

pub fn moves_invert(seed: u64, pick: Index) -> Result<(), TestCaseError> {
    let k = random_sphere(seed, 8);
    let pairs = find_bistellar_pairs(&k, 1);
    prop_assume!(!pairs.is_empty());
    let p = pick.get(&pairs);
    let l = apply_move(&k, p).unwrap();
    let back = apply_move(&l, &p.inverse()).unwrap();
    prop_assert_eq!(back.oriented(), k.oriented());
    Ok(())
}
