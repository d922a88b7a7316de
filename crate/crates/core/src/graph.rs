//! Equivalence classes under middle moves and their exchange graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::bistellar::{apply_move, find_bistellar_pairs, BistellarPair};
use crate::complex::{OrientedComplex, TriangulatedManifold};
use crate::error::{Error, Result};
use crate::simplex::{OrientedSimplex, Simplex, Vertex};

pub const DEFAULT_NODE_CAP: usize = 10_000;

/// An undirected edge; `pair` is valid in `source` and leads to `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    pub pair: BistellarPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeGraph {
    pub nodes: Vec<TriangulatedManifold>,
    /// Breadth-first distance from the start triangulation.
    pub depth: Vec<usize>,
    pub edges: Vec<GraphEdge>,
}

fn facet_key(k: &TriangulatedManifold) -> Vec<Simplex> {
    k.facets().cloned().collect()
}

/// Breadth-first closure of `{K}` under middle moves. Nodes are numbered by
/// depth, and within one depth by facet list.
pub fn enumerate_class(k: &TriangulatedManifold, cap: usize) -> Result<ExchangeGraph> {
    let n = k.dim();
    if n % 2 != 0 {
        return Err(Error::NotMiddleMove { n, h: n / 2 });
    }
    let h = n / 2;
    let mut index: BTreeMap<Vec<Simplex>, usize> = BTreeMap::new();
    let mut nodes = vec![k.clone()];
    let mut depth = vec![0];
    index.insert(facet_key(k), 0);
    let mut directed: Vec<(usize, Vec<Simplex>, BistellarPair)> = Vec::new();
    let mut level = vec![0usize];
    let mut d = 0;
    while !level.is_empty() {
        let mut fresh: BTreeMap<Vec<Simplex>, TriangulatedManifold> = BTreeMap::new();
        for &i in &level {
            for p in find_bistellar_pairs(&nodes[i], h) {
                let l = apply_move(&nodes[i], &p)?;
                let key = facet_key(&l);
                if !index.contains_key(&key) {
                    fresh.entry(key.clone()).or_insert(l);
                }
                directed.push((i, key, p));
            }
        }
        d += 1;
        level.clear();
        for (key, l) in fresh {
            if nodes.len() >= cap {
                return Err(Error::BudgetExceeded { cap });
            }
            index.insert(key, nodes.len());
            level.push(nodes.len());
            nodes.push(l);
            depth.push(d);
        }
    }
    let mut edges: Vec<GraphEdge> = directed
        .into_iter()
        .map(|(source, key, pair)| GraphEdge { source, target: index[&key], pair })
        .filter(|e| e.source < e.target)
        .collect();
    edges.sort_by(|a, b| (a.source, a.target).cmp(&(b.source, b.target)));
    Ok(ExchangeGraph { nodes, depth, edges })
}

impl ExchangeGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.source == i || e.target == i).count()
    }

    /// Neighbours of `i` with the pair that moves from `i` to them.
    pub fn neighbours(&self, i: usize) -> Vec<(usize, BistellarPair)> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.source == i {
                out.push((e.target, e.pair.clone()));
            } else if e.target == i {
                out.push((e.source, e.pair.inverse()));
            }
        }
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let tree = self.spanning_tree();
        (1..self.nodes.len()).all(|i| tree[i].is_some())
    }

    /// Neighbour lists of every node, in the order of [`Self::neighbours`].
    pub fn adjacency(&self) -> Vec<Vec<(usize, BistellarPair)>> {
        let mut adj: Vec<Vec<(usize, BistellarPair)>> = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.source].push((e.target, e.pair.clone()));
            adj[e.target].push((e.source, e.pair.inverse()));
        }
        for a in &mut adj {
            a.sort();
        }
        adj
    }

    /// Breadth-first spanning tree: for every node but the first, its
    /// parent and the pair leading from the parent to it.
    pub fn spanning_tree(&self) -> Vec<Option<(usize, BistellarPair)>> {
        let adj = self.adjacency();
        let mut parent: Vec<Option<(usize, BistellarPair)>> = vec![None; self.nodes.len()];
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = std::collections::VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for (j, p) in &adj[i] {
                if !seen[*j] {
                    seen[*j] = true;
                    parent[*j] = Some((i, p.clone()));
                    queue.push_back(*j);
                }
            }
        }
        parent
    }

    pub fn find_node(&self, k: &TriangulatedManifold) -> Option<usize> {
        let key = facet_key(k);
        self.nodes.iter().position(|n| facet_key(n) == key)
    }
}

/// `𝒮_bp`: every directed pair of every node, closed under inversion.
pub fn pair_set(g: &ExchangeGraph) -> BTreeSet<BistellarPair> {
    g.edges.iter().flat_map(|e| [e.pair.clone(), e.pair.inverse()]).collect()
}

pub fn to_dot(g: &ExchangeGraph) -> String {
    let mut out = String::from("graph exchange {\n");
    for (i, k) in g.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", k.key()).expect("write to string");
    }
    for e in &g.edges {
        writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.source, e.target, e.pair.label()).expect("write to string");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    index: usize,
    depth: usize,
    dimension: usize,
    facets: Vec<Vec<Vertex>>,
    signs: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    source: usize,
    target: usize,
    alpha: Vec<Vertex>,
    beta: Vec<Vertex>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
}

/// JSON document with full facet lists, signs and pairs.
pub fn to_structured(g: &ExchangeGraph) -> String {
    let doc = GraphDoc {
        nodes: g
            .nodes
            .iter()
            .enumerate()
            .map(|(i, k)| NodeDoc {
                index: i,
                depth: g.depth[i],
                dimension: k.dim(),
                facets: k.facets().map(|f| f.vertices().to_vec()).collect(),
                signs: k.oriented().signs().values().copied().collect(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeDoc {
                source: e.source,
                target: e.target,
                alpha: e.pair.alpha.vertices().to_vec(),
                beta: e.pair.beta.vertices().to_vec(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn from_structured(text: &str) -> Result<ExchangeGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let mut nodes = Vec::new();
    let mut depth = Vec::new();
    for (i, nd) in doc.nodes.into_iter().enumerate() {
        if nd.index != i || nd.facets.len() != nd.signs.len() {
            return Err(Error::Format(format!("malformed node {i}")));
        }
        let facets = nd
            .facets
            .iter()
            .zip(&nd.signs)
            .map(|(f, s)| Ok(OrientedSimplex::new(Simplex::new(f.iter().copied())?, *s)))
            .collect::<Result<Vec<_>>>()?;
        nodes.push(TriangulatedManifold::from_oriented(OrientedComplex::new(nd.dimension, facets)?)?);
        depth.push(nd.depth);
    }
    let edges = doc
        .edges
        .into_iter()
        .map(|e| {
            if e.source >= nodes.len() || e.target >= nodes.len() {
                return Err(Error::Format("edge endpoint out of range".into()));
            }
            let pair = BistellarPair::new(Simplex::new(e.alpha)?, Simplex::new(e.beta)?);
            Ok(GraphEdge { source: e.source, target: e.target, pair })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExchangeGraph { nodes, depth, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn tetrahedron_class_is_a_point() {
        let g = enumerate_class(&fixtures::tetrahedron_boundary(), DEFAULT_NODE_CAP).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
        assert!(pair_set(&g).is_empty());
        assert_eq!(to_dot(&g).lines().count(), 3);
    }

    #[test]
    fn odd_dimension_is_rejected() {
        let err = enumerate_class(&fixtures::simplex4_boundary(), DEFAULT_NODE_CAP).unwrap_err();
        assert!(matches!(err, Error::NotMiddleMove { n: 3, .. }));
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_class(&fixtures::bipyramid_s2(), 4).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { cap: 4 });
    }

    #[test]
    fn structured_round_trip() {
        let g = enumerate_class(&fixtures::bipyramid_s2(), DEFAULT_NODE_CAP).unwrap();
        let back = from_structured(&to_structured(&g)).unwrap();
        assert_eq!(back, g);
        assert!(from_structured("{").is_err());
    }
}
