mod common;

use bistellar_core::bistellar::{apply_move, find_bistellar_pairs, local_face_sets, local_frame, middle_move_data};
use bistellar_core::cluster::{initial_seed, mutate_seed, symmetry_check};
use bistellar_core::exchange::{exchange_matrix, mutate};
use bistellar_core::semifield::Tropical;
use proptest::prelude::*;

use common::{props, sphere_corpus};

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn orientation_is_independent_of_facet_order(seed in any::<u64>(), shuffle in any::<u64>()) {
        props::orientation_determinism(seed, shuffle)?;
    }

    #[test]
    fn matrices_are_skew_with_unit_entries(seed in any::<u64>()) {
        props::skew_symmetry(seed)?;
    }

    #[test]
    fn global_sign_flip_negates_matrix(seed in any::<u64>()) {
        props::sign_flip_negates(seed)?;
    }

    #[test]
    fn sigma_is_an_involution(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        props::sigma_involution(seed, pick)?;
    }

    #[test]
    fn d_sets_are_disjoint(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        props::d_sets_disjoint(seed, pick)?;
    }

    #[test]
    fn facet_text_round_trips(seed in any::<u64>()) {
        props::facet_round_trip(seed)?;
    }

    #[test]
    fn moves_invert(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        props::moves_invert(seed, pick)?;
    }
}

#[test]
fn mutation_rule_on_random_spheres() {
    let corpus = sphere_corpus();
    assert!(corpus.len() >= 50);
    let mut checked = 0;
    for k in &corpus {
        assert!(k.vertices().len() <= 8);
        let b = exchange_matrix(k);
        for p in find_bistellar_pairs(k, 1) {
            let (frame, sets) = middle_move_data(k, &p).unwrap();
            let l = apply_move(k, &p).unwrap();
            assert_eq!(mutate(&b, &frame, &sets).unwrap(), exchange_matrix(&l), "{} {p}", k.key());
            checked += 1;
        }
    }
    assert!(checked > 200);
}

#[test]
fn seeds_round_trip_on_random_spheres() {
    let s = Tropical;
    for k in sphere_corpus().iter().take(20) {
        let seed = initial_seed(k, &s).unwrap();
        for p in find_bistellar_pairs(k, 1) {
            let (frame, sets) = middle_move_data(k, &p).unwrap();
            assert!(symmetry_check(&seed, &s, &frame, &sets).unwrap());
            let next = mutate_seed(&seed, &s, &frame, &sets).unwrap();
            let back_frame = local_frame(&next.host, &p.inverse()).unwrap();
            let back_sets = local_face_sets(&back_frame).unwrap();
            let back = mutate_seed(&next, &s, &back_frame, &back_sets).unwrap();
            assert!(back.same_as(&seed, &s), "{} {p}", k.key());
        }
    }
}
