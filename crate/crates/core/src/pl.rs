//! Vertex-count chains of class algebras and the maps between them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::bistellar::{apply_move, apply_sequence, find_bistellar_pairs, find_bistellar_pairs_with_fresh, BistellarPair};
use crate::cluster::{presentation, Presentation, RelationKey, RelationRecord};
use crate::complex::{complexes_equal, TriangulatedManifold};
use crate::error::{Error, Result};
use crate::graph::{enumerate_class, ExchangeGraph};
use crate::poly::{Mono, Var};
use crate::semifield::Trivial;
use crate::simplex::{Simplex, Vertex};

/// A move sequence claimed to lead from `source` to `target`.
#[derive(Clone, Debug)]
pub struct PrecedesWitness {
    pub source: TriangulatedManifold,
    pub target: TriangulatedManifold,
    pub moves: Vec<BistellarPair>,
}

/// Every move has `dim α ≥ h`, each is valid when reached, and the result
/// has the facets of `target`.
pub fn verify_preceq(w: &PrecedesWitness, h: usize) -> bool {
    if w.moves.iter().any(|p| p.alpha.len() < h + 1) {
        return false;
    }
    match apply_sequence(&w.source, &w.moves) {
        Ok(trace) => complexes_equal(trace.result(), &w.target),
        Err(_) => false,
    }
}

/// Shortest witness of at most `max_steps` moves with `dim α ≥ h`, found
/// by breadth-first search. Fresh vertices for stellar subdivisions are
/// drawn from the vertices of `target` missing in the current state.
pub fn find_witness(
    source: &TriangulatedManifold,
    target: &TriangulatedManifold,
    h: usize,
    max_steps: usize,
) -> Option<PrecedesWitness> {
    let goal: Vec<Simplex> = target.facets().cloned().collect();
    let key = |k: &TriangulatedManifold| k.facets().cloned().collect::<Vec<_>>();
    let mut seen = BTreeSet::from([key(source)]);
    let mut queue = VecDeque::from([(source.clone(), Vec::<BistellarPair>::new())]);
    while let Some((k, moves)) = queue.pop_front() {
        if key(&k) == goal {
            return Some(PrecedesWitness { source: source.clone(), target: target.clone(), moves });
        }
        if moves.len() == max_steps {
            continue;
        }
        let n = k.dim();
        let present = k.vertices();
        let fresh: Vec<Vertex> = target.vertices().difference(&present).copied().collect();
        let mut pairs = Vec::new();
        for t in 0..=n.saturating_sub(h) {
            if t == 0 {
                for &v in &fresh {
                    pairs.extend(find_bistellar_pairs_with_fresh(&k, 0, v));
                }
            } else {
                pairs.extend(find_bistellar_pairs(&k, t));
            }
        }
        for p in pairs.into_iter().filter(|p| p.alpha.len() > h) {
            if let Ok(l) = apply_move(&k, &p) {
                if seen.insert(key(&l)) {
                    let mut next = moves.clone();
                    next.push(p);
                    queue.push_back((l, next));
                }
            }
        }
    }
    None
}

/// Applies both sequences to `l` and compares the resulting facet sets.
pub fn sequences_commute(l: &TriangulatedManifold, s1: &[BistellarPair], s2: &[BistellarPair]) -> Result<bool> {
    let a = apply_sequence(l, s1)?;
    let b = apply_sequence(l, s2)?;
    Ok(complexes_equal(a.result(), b.result()))
}

/// Generator map between two class algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    pub generator_map: BTreeMap<Simplex, Simplex>,
}

impl EmbeddingMap {
    pub fn identity<'a>(generators: impl IntoIterator<Item = &'a Simplex>) -> Self {
        EmbeddingMap { generator_map: generators.into_iter().map(|g| (g.clone(), g.clone())).collect() }
    }

    pub fn is_injective(&self) -> bool {
        let images: BTreeSet<&Simplex> = self.generator_map.values().collect();
        images.len() == self.generator_map.len()
    }

    /// `self` followed by `next`; `None` if some image has no image under
    /// `next`.
    pub fn then(&self, next: &EmbeddingMap) -> Option<EmbeddingMap> {
        let generator_map = self
            .generator_map
            .iter()
            .map(|(g, h)| next.generator_map.get(h).map(|i| (g.clone(), i.clone())))
            .collect::<Option<_>>()?;
        Some(EmbeddingMap { generator_map })
    }

    fn map_mono(&self, m: &Mono) -> Option<Mono> {
        let mut out = Mono::one();
        for (v, e) in m.powers() {
            match v {
                Var::Cluster(f) => out.mul_var(Var::Cluster(self.generator_map.get(f)?.clone()), *e),
                other => out.mul_var(other.clone(), *e),
            }
        }
        Some(out)
    }

    /// Image of a relation's key, if every variable is mapped.
    pub fn map_relation(&self, r: &RelationRecord) -> Option<RelationKey> {
        let left = self.map_mono(&r.left())?;
        let right = BTreeSet::from([self.map_mono(&r.plus)?, self.map_mono(&r.minus)?]);
        Some((left, right))
    }

    /// Every generator of `source` is mapped into `target`'s generators and
    /// every relation of `source` lands on a relation of `target`.
    pub fn preserves(&self, source: &Presentation, target: &Presentation) -> bool {
        if !source.generators.iter().all(|g| self.generator_map.get(g).is_some_and(|i| target.generators.contains(i))) {
            return false;
        }
        let keys: BTreeSet<RelationKey> = target.relations.iter().map(|r| r.key()).collect();
        source.relations.iter().all(|r| self.map_relation(r).is_some_and(|k| keys.contains(&k)))
    }
}

/// One level of the vertex-count chain.
#[derive(Clone, Debug)]
pub struct ClassChainNode {
    pub representative: TriangulatedManifold,
    pub vertex_count: usize,
    pub graph: ExchangeGraph,
    pub algebra: Presentation,
}

#[derive(Clone, Debug)]
pub struct ClassChain {
    pub nodes: Vec<ClassChainNode>,
    /// `embeddings[i]` maps level `i` into level `i + 1`.
    pub embeddings: Vec<EmbeddingMap>,
}

impl ClassChain {
    /// Composite map from level `i` to level `j ≥ i`.
    pub fn composite(&self, i: usize, j: usize) -> Option<EmbeddingMap> {
        let mut out = EmbeddingMap::identity(&self.nodes[i].algebra.generators);
        for e in &self.embeddings[i..j] {
            out = out.then(e)?;
        }
        Some(out)
    }
}

fn chain_node(k: TriangulatedManifold, cap: usize) -> Result<ClassChainNode> {
    let graph = enumerate_class(&k, cap)?;
    let algebra = presentation(&graph, &Trivial)?;
    Ok(ClassChainNode { vertex_count: k.vertices().len(), representative: k, graph, algebra })
}

/// Levels `m₀ ..= m_max` of a surface, each obtained from the previous one
/// by subdividing its first facet with the next vertex.
pub fn build_chain_2d(k: &TriangulatedManifold, m_max: usize, cap: usize) -> Result<ClassChain> {
    if k.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, found: k.dim() });
    }
    let mut nodes = vec![chain_node(k.clone(), cap)?];
    let mut embeddings = Vec::new();
    while nodes.last().expect("nonempty").vertex_count < m_max {
        let prev = nodes.last().expect("nonempty");
        let rep = &prev.representative;
        let facet = rep.facets().next().expect("nonempty").clone();
        let fresh = rep.vertex_universe() + 1;
        let p = BistellarPair::new(facet, Simplex::new([fresh])?);
        let next = chain_node(apply_move(rep, &p)?, cap)?;
        let e = EmbeddingMap::identity(&prev.algebra.generators);
        if !e.preserves(&prev.algebra, &next.algebra) {
            return Err(Error::IndexMismatch(format!("level {} does not embed", prev.vertex_count)));
        }
        embeddings.push(e);
        nodes.push(next);
    }
    Ok(ClassChain { nodes, embeddings })
}

/// The map on generators induced by a move of `dim α ≥ 2` on a 4-manifold:
/// a removed codimension-1 face `α` goes to the least added face, every
/// other generator of the class of `l` is fixed.
pub fn embedding_4d(l: &TriangulatedManifold, p: &BistellarPair, cap: usize) -> Result<(EmbeddingMap, Presentation, Presentation)> {
    if l.dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, found: l.dim() });
    }
    if p.alpha.len() < 4 {
        return Err(Error::PairNotValid {
            alpha: p.alpha.clone(),
            beta: p.beta.clone(),
            reason: "α must have dimension 3 or 4".into(),
        });
    }
    let moved = apply_move(l, p)?;
    let source = presentation(&enumerate_class(l, cap)?, &Trivial)?;
    let target = presentation(&enumerate_class(&moved, cap)?, &Trivial)?;
    let before: BTreeSet<Simplex> = l.codim1_faces().into_iter().collect();
    let added: BTreeSet<Simplex> =
        moved.codim1_faces().into_iter().filter(|f| !before.contains(f)).collect();
    let mut generator_map = BTreeMap::new();
    for g in &source.generators {
        let image = if *g == p.alpha {
            added.iter().next().cloned().ok_or_else(|| Error::IndexMismatch("no face added".into()))?
        } else {
            g.clone()
        };
        generator_map.insert(g.clone(), image);
    }
    Ok((EmbeddingMap { generator_map }, source, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::simplex::simplex;

    #[test]
    fn guards() {
        let k = fixtures::tetrahedron_boundary();
        let vertex_removal = PrecedesWitness {
            source: fixtures::bipyramid_s2(),
            target: k.clone(),
            moves: vec![BistellarPair::new(simplex(&[5]), simplex(&[1, 2, 3]))],
        };
        assert!(!verify_preceq(&vertex_removal, 1));
        let empty = PrecedesWitness { source: k.clone(), target: k.clone(), moves: vec![] };
        assert!(verify_preceq(&empty, 1));
        assert!(matches!(build_chain_2d(&fixtures::simplex4_boundary(), 6, 100), Err(Error::WrongDimension { .. })));
    }

    #[test]
    fn embedding_composition() {
        let a = EmbeddingMap::identity(&[simplex(&[1, 2])]);
        let b = EmbeddingMap::identity(&[simplex(&[1, 2]), simplex(&[1, 3])]);
        assert_eq!(a.then(&b).unwrap(), a);
        assert!(b.then(&a).is_none());
        assert!(b.is_injective());
    }
}
