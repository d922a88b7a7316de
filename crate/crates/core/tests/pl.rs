use std::collections::BTreeSet;

use bistellar_core::bistellar::{apply_move, find_bistellar_pairs, BistellarPair};
use bistellar_core::complex::TriangulatedManifold;
use bistellar_core::fixtures;
use bistellar_core::graph::DEFAULT_NODE_CAP;
use bistellar_core::pl::{build_chain_2d, embedding_4d, find_witness, sequences_commute, verify_preceq, PrecedesWitness};
use bistellar_core::simplex::{simplex, Simplex};

/// Counts sets of triangles on `1..=m` forming a triangulated 2-sphere that
/// uses every vertex: each edge lies in 0 or 2 triangles, each vertex link
/// is one cycle, the complex is connected and `V - E + F = 2`.
fn labeled_spheres(m: u32) -> usize {
    let triangles: Vec<[u32; 3]> = (1..=m)
        .flat_map(|a| (a + 1..=m).flat_map(move |b| (b + 1..=m).map(move |c| [a, b, c])))
        .collect();
    let f = 2 * m as usize - 4;
    let mut count = 0;
    let mut chosen = Vec::new();
    fn rec(ts: &[[u32; 3]], start: usize, f: usize, m: u32, chosen: &mut Vec<[u32; 3]>, count: &mut usize) {
        if chosen.len() == f {
            if is_sphere(chosen, m) {
                *count += 1;
            }
            return;
        }
        for i in start..ts.len() {
            if ts.len() - i < f - chosen.len() {
                break;
            }
            chosen.push(ts[i]);
            rec(ts, i + 1, f, m, chosen, count);
            chosen.pop();
        }
    }
    rec(&triangles, 0, f, m, &mut chosen, &mut count);
    count
}

fn is_sphere(ts: &[[u32; 3]], m: u32) -> bool {
    let mut edges = std::collections::BTreeMap::<(u32, u32), usize>::new();
    for t in ts {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *edges.entry((a, b)).or_insert(0) += 1;
        }
    }
    if edges.values().any(|&c| c != 2) {
        return false;
    }
    for v in 1..=m {
        let link: Vec<(u32, u32)> = ts
            .iter()
            .filter(|t| t.contains(&v))
            .map(|t| {
                let o: Vec<u32> = t.iter().copied().filter(|&w| w != v).collect();
                (o[0], o[1])
            })
            .collect();
        if link.len() < 3 {
            return false;
        }
        let mut seen = BTreeSet::from([link[0].0]);
        let (mut prev, mut cur) = (link[0].0, link[0].1);
        while cur != link[0].0 {
            seen.insert(cur);
            let next = link
                .iter()
                .find_map(|&(a, b)| if a == cur && b != prev { Some(b) } else if b == cur && a != prev { Some(a) } else { None });
            match next {
                Some(n) => (prev, cur) = (cur, n),
                None => return false,
            }
        }
        if seen.len() != link.len() {
            return false;
        }
    }
    let mut comp = BTreeSet::from([1u32]);
    let mut grew = true;
    while grew {
        grew = false;
        for &(a, b) in edges.keys() {
            if comp.contains(&a) != comp.contains(&b) {
                comp.insert(a);
                comp.insert(b);
                grew = true;
            }
        }
    }
    comp.len() == m as usize && m as i64 - edges.len() as i64 + ts.len() as i64 == 2
}

#[test]
fn brute_force_sphere_counts() {
    assert_eq!(labeled_spheres(4), 1);
    assert_eq!(labeled_spheres(5), 10);
}

#[test]
fn sphere_chain_matches_labeled_triangulations() {
    let chain = build_chain_2d(&fixtures::tetrahedron_boundary(), 6, DEFAULT_NODE_CAP).unwrap();
    let counts: Vec<(usize, usize, usize, usize)> = chain
        .nodes
        .iter()
        .map(|n| (n.vertex_count, n.graph.node_count(), n.algebra.generators.len(), n.algebra.relations.len()))
        .collect();
    assert_eq!(counts, vec![(4, 1, 6, 0), (5, 10, 10, 15), (6, 195, 15, 45)]);
    for n in &chain.nodes {
        let m = n.vertex_count as u32;
        assert_eq!(n.graph.node_count(), labeled_spheres(m));
        let all_edges: BTreeSet<Simplex> =
            (1..=m).flat_map(|a| (a + 1..=m).map(move |b| simplex(&[a, b]))).collect();
        assert_eq!(n.algebra.generators, all_edges);
        assert!(n.graph.is_connected());
    }
    let direct = chain.composite(0, 2).unwrap();
    let stepwise = chain.embeddings[0].then(&chain.embeddings[1]).unwrap();
    assert_eq!(direct, stepwise);
    assert!(direct.is_injective());
    assert!(direct.preserves(&chain.nodes[0].algebra, &chain.nodes[2].algebra));
    let keys: BTreeSet<_> = chain.nodes[2].algebra.relations.iter().map(|r| r.key()).collect();
    for r in &chain.nodes[1].algebra.relations {
        assert!(keys.contains(&chain.embeddings[1].map_relation(r).unwrap()), "{r}");
    }
}

#[test]
fn witness_from_tetrahedron_to_bipyramid() {
    let source = fixtures::tetrahedron_boundary();
    let target = fixtures::bipyramid_s2();
    let w = find_witness(&source, &target, 1, 3).expect("reachable");
    assert!(w.moves.len() <= 3);
    assert!(verify_preceq(&w, 1));
    assert!(find_witness(&source, &target, 3, 3).is_none());
    let mut broken = w.clone();
    broken.moves.reverse();
    broken.moves.push(BistellarPair::new(simplex(&[1, 2]), simplex(&[3, 4])));
    assert!(!verify_preceq(&broken, 1));
    let wrong_target = PrecedesWitness { target: fixtures::octahedron(), ..w };
    assert!(!verify_preceq(&wrong_target, 1));
}

#[test]
fn disjoint_moves_commute() {
    let k = fixtures::octahedron();
    let flip = BistellarPair::new(simplex(&[1, 2]), simplex(&[3, 4]));
    let sub = BistellarPair::new(simplex(&[4, 5, 6]), simplex(&[7]));
    assert!(sequences_commute(&k, &[flip.clone(), sub.clone()], &[sub, flip.clone()]).unwrap());
    assert!(sequences_commute(&k, &[flip.clone(), flip.inverse()], &[]).unwrap());
    assert!(!sequences_commute(&k, &[flip], &[]).unwrap());
    let bad = BistellarPair::new(simplex(&[1, 6]), simplex(&[2, 5]));
    assert!(sequences_commute(&k, &[bad], &[]).is_err());
}

fn embedding_host() -> TriangulatedManifold {
    let vs = [1, 2, 3, 4, 5, 7];
    let facets: Vec<Vec<u32>> =
        (0..6).map(|i| vs.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| *v).collect()).collect();
    let k = TriangulatedManifold::from_vertex_lists(&facets, 4).unwrap();
    apply_move(&k, &BistellarPair::new(simplex(&[1, 2, 3, 4, 7]), simplex(&[6]))).unwrap()
}

#[test]
fn four_dimensional_embedding() {
    let l = embedding_host();
    assert!(find_bistellar_pairs(&l, 2).is_empty());
    let p = BistellarPair::new(simplex(&[1, 2, 3, 4]), simplex(&[5, 6]));
    let (e, source, target) = embedding_4d(&l, &p, DEFAULT_NODE_CAP).unwrap();
    assert_eq!((source.generators.len(), source.relations.len()), (25, 0));
    assert_eq!((target.generators.len(), target.relations.len()), (35, 210));
    let moved: Vec<_> = e.generator_map.iter().filter(|(a, b)| a != b).collect();
    assert_eq!(moved, vec![(&simplex(&[1, 2, 3, 4]), &simplex(&[1, 2, 5, 6]))]);
    assert!(e.is_injective());
    assert!(e.preserves(&source, &target));

    let sub = BistellarPair::new(simplex(&[1, 2, 3, 4, 5]), simplex(&[8]));
    let (e0, s0, t0) = embedding_4d(&l, &sub, DEFAULT_NODE_CAP).unwrap();
    assert!(e0.generator_map.iter().all(|(a, b)| a == b));
    assert!(e0.preserves(&s0, &t0));

    let low = BistellarPair::new(simplex(&[1, 2, 3]), simplex(&[5, 6, 7]));
    assert!(embedding_4d(&l, &low, DEFAULT_NODE_CAP).is_err());
    assert!(embedding_4d(&fixtures::octahedron(), &p, DEFAULT_NODE_CAP).is_err());
}
