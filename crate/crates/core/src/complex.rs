//! Abstract simplicial complexes, oriented pure complexes and closed
//! triangulated manifolds.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex::{OrientedSimplex, SignedChain, Simplex, Vertex};

/// A simplicial complex stored by its maximal faces. Every subset of a facet
/// is a face; the empty simplex belongs to every nonempty complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: BTreeSet<Simplex>,
    vertex_universe: Vertex,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces, dropping non-maximal ones.
    pub fn from_faces<I: IntoIterator<Item = Simplex>>(faces: I) -> Self {
        let mut all: Vec<Simplex> = faces.into_iter().collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut facets: Vec<Simplex> = Vec::new();
        for s in all {
            if !facets.iter().any(|f| s.is_subset_of(f)) {
                facets.push(s);
            }
        }
        let vertex_universe = facets.iter().flat_map(|f| f.vertices().iter().copied()).max().unwrap_or(0);
        SimplicialComplex { facets: facets.into_iter().collect(), vertex_universe }
    }

    /// The full simplex on `s` with all its faces.
    pub fn simplex(s: &Simplex) -> Self {
        Self::from_faces([s.clone()])
    }

    /// The boundary complex `∂s`. For a vertex this is `{∅}`.
    pub fn boundary_of(s: &Simplex) -> Self {
        if s.is_empty() {
            return SimplicialComplex { facets: BTreeSet::new(), vertex_universe: 0 };
        }
        Self::from_faces(s.facets())
    }

    pub fn facets(&self) -> impl Iterator<Item = &Simplex> {
        self.facets.iter()
    }

    pub fn facet_set(&self) -> &BTreeSet<Simplex> {
        &self.facets
    }

    pub fn vertex_universe(&self) -> Vertex {
        self.vertex_universe
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(f))
    }

    /// All faces with `size` vertices, sorted.
    pub fn faces_of_size(&self, size: usize) -> BTreeSet<Simplex> {
        self.facets.iter().flat_map(|f| f.faces_of_size(size)).collect()
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-2)
    }

    /// `{a' ∈ K : a ∪ a' ∈ K, a ∩ a' = ∅}`.
    pub fn link(&self, a: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(a) {
            return Err(Error::FaceNotInComplex(a.clone()));
        }
        let mut out = Self::from_faces(self.facets.iter().filter(|f| a.is_subset_of(f)).map(|f| f.difference(a)));
        out.vertex_universe = self.vertex_universe;
        Ok(out)
    }

    /// Join of complexes on disjoint vertex sets.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if !self.vertices().is_disjoint(&other.vertices()) {
            return Err(Error::VertexOverlap);
        }
        let mut faces = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                faces.push(a.union(b));
            }
        }
        Ok(Self::from_faces(faces))
    }
}

/// Face-count vectors of a closed `n`-manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVector {
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub g: Vec<i64>,
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

impl FaceVector {
    /// Derives `h` and `g` from `f = (f_0, ..., f_n)` via
    /// `Σ h_i t^(n+1-i) = Σ f_(i-1) (t-1)^(n+1-i)` with `f_(-1) = 1`.
    pub fn from_f(f: Vec<i64>) -> Self {
        let n = f.len() - 1;
        let d = n + 1;
        // coefficient of t^(d-i) in the right-hand side
        let mut h = vec![0i64; d + 1];
        for i in 0..=d {
            let fi = if i == 0 { 1 } else { f[i - 1] };
            let e = d - i;
            for j in 0..=e {
                // (t-1)^e contributes binom(e,j) t^j (-1)^(e-j)
                let sign = if (e - j) % 2 == 0 { 1 } else { -1 };
                h[d - j] += fi * sign * binomial(e, j);
            }
        }
        let glen = (n + 1) / 2 + 1;
        let mut g = vec![h[0]];
        for i in 1..glen {
            g.push(h[i] - h[i - 1]);
        }
        FaceVector { f, h, g }
    }

    /// Recovers `f` from `h` by inverting the defining identity.
    pub fn f_from_h(h: &[i64]) -> Vec<i64> {
        let d = h.len() - 1;
        // Σ h_i t^(d-i) evaluated at t = s+1 gives Σ f_(i-1) s^(d-i)
        let mut f = vec![0i64; d];
        for (i, hi) in h.iter().enumerate() {
            let e = d - i;
            for j in 0..=e {
                // (s+1)^e = Σ binom(e,j) s^j, s^j pairs with f_(d-j-1)
                if d - j >= 1 {
                    f[d - j - 1] += hi * binomial(e, j);
                }
            }
        }
        f
    }
}

/// A pure complex whose facets carry orientation signs. Used both for closed
/// manifolds and for local complexes with boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedComplex {
    dim: usize,
    signs: BTreeMap<Simplex, i32>,
}

impl OrientedComplex {
    /// Takes signs as given. Only purity and distinctness are checked.
    pub fn new<I: IntoIterator<Item = OrientedSimplex>>(dim: usize, facets: I) -> Result<Self> {
        let mut signs = BTreeMap::new();
        for f in facets {
            check_size(&f.simplex, dim)?;
            if signs.insert(f.simplex.clone(), f.sign).is_some() {
                return Err(Error::DuplicateFacet(f.simplex));
            }
        }
        if signs.is_empty() {
            return Err(Error::Empty);
        }
        Ok(OrientedComplex { dim, signs })
    }

    /// Orients a pure connected pseudomanifold (possibly with boundary) by
    /// propagation across interior ridges; the smallest facet is positive.
    pub fn orient(dim: usize, facets: &[Simplex]) -> Result<Self> {
        let signs = orient(dim, facets, false)?;
        Ok(OrientedComplex { dim, signs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, facet: &Simplex) -> Option<i32> {
        self.signs.get(facet).copied()
    }

    pub fn signs(&self) -> &BTreeMap<Simplex, i32> {
        &self.signs
    }

    pub fn facets(&self) -> impl Iterator<Item = &Simplex> {
        self.signs.keys()
    }

    pub fn oriented_facets(&self) -> impl Iterator<Item = OrientedSimplex> + '_ {
        self.signs.iter().map(|(s, c)| OrientedSimplex::new(s.clone(), *c))
    }

    pub fn negated(&self) -> Self {
        OrientedComplex { dim: self.dim, signs: self.signs.iter().map(|(s, c)| (s.clone(), -c)).collect() }
    }

    pub fn underlying(&self) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.signs.keys().cloned())
    }

    /// Ridge to the facets containing it.
    pub fn ridges(&self) -> BTreeMap<Simplex, Vec<Simplex>> {
        ridge_map(self.signs.keys())
    }

    /// All codimension-1 faces in lexicographic order.
    pub fn codim1_faces(&self) -> Vec<Simplex> {
        self.ridges().into_keys().collect()
    }

    /// `∂^(1)` of the signed facet sum.
    pub fn facet_boundary(&self) -> SignedChain {
        let mut c = SignedChain::zero();
        for f in self.oriented_facets() {
            c.add_oriented(&f);
        }
        c.boundary()
    }
}

fn check_size(f: &Simplex, dim: usize) -> Result<()> {
    if f.len() != dim + 1 {
        return Err(Error::NotPure { facet: f.clone(), expected: dim, found: f.dim() });
    }
    Ok(())
}

fn ridge_map<'a, I: Iterator<Item = &'a Simplex>>(facets: I) -> BTreeMap<Simplex, Vec<Simplex>> {
    let mut m: BTreeMap<Simplex, Vec<Simplex>> = BTreeMap::new();
    for f in facets {
        for r in f.facets() {
            m.entry(r).or_default().push(f.clone());
        }
    }
    m
}

/// Sign with which ridge `r` appears in `∂^(1)` of the canonical facet `f`.
fn induced_sign(f: &Simplex, r: &Simplex) -> i32 {
    let pos = f.vertices().iter().position(|v| !r.contains(*v)).expect("ridge of facet");
    if pos % 2 == 0 {
        1
    } else {
        -1
    }
}

fn orient(dim: usize, facets: &[Simplex], closed: bool) -> Result<BTreeMap<Simplex, i32>> {
    if facets.is_empty() {
        return Err(Error::Empty);
    }
    let mut set = BTreeSet::new();
    for f in facets {
        check_size(f, dim)?;
        if !set.insert(f.clone()) {
            return Err(Error::DuplicateFacet(f.clone()));
        }
    }
    let ridges = ridge_map(set.iter());
    for (r, fs) in &ridges {
        if fs.len() > 2 || (closed && fs.len() != 2) {
            return Err(Error::NotClosed { ridge: r.clone(), count: fs.len() });
        }
    }
    let mut signs: BTreeMap<Simplex, i32> = BTreeMap::new();
    let start = set.iter().next().expect("nonempty").clone();
    signs.insert(start.clone(), 1);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        let s = signs[&f];
        for r in f.facets() {
            let here = s * induced_sign(&f, &r);
            for g in &ridges[&r] {
                if *g == f {
                    continue;
                }
                let want = -here * induced_sign(g, &r);
                match signs.get(g) {
                    Some(&sg) if sg != want => return Err(Error::NotOrientable(g.clone())),
                    Some(_) => {}
                    None => {
                        signs.insert(g.clone(), want);
                        queue.push_back(g.clone());
                    }
                }
            }
        }
    }
    if signs.len() != set.len() {
        return Err(Error::NotConnected);
    }
    Ok(signs)
}

/// Checks that the facets form a connected pseudomanifold and returns
/// `NotConnected` before any orientation problem is reported.
fn check_connected(facets: &BTreeSet<Simplex>) -> Result<()> {
    let ridges = ridge_map(facets.iter());
    let index: BTreeMap<&Simplex, usize> = facets.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for fs in ridges.values() {
        for w in fs.windows(2) {
            let a = find(&mut parent, index[&w[0]]);
            let b = find(&mut parent, index[&w[1]]);
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    if (0..facets.len()).all(|i| find(&mut parent, i) == root) {
        Ok(())
    } else {
        Err(Error::NotConnected)
    }
}

/// A closed, connected, oriented pseudomanifold of dimension `n ≥ 1`, with
/// the additional vertex-link check for surfaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangulatedManifold {
    complex: OrientedComplex,
    vertex_universe: Vertex,
}

impl TriangulatedManifold {
    /// Validates the facets and orients them so the smallest facet is
    /// positive.
    pub fn from_facets(facets: &[Simplex], n: usize) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::Empty);
        }
        let mut set = BTreeSet::new();
        for f in facets {
            check_size(f, n)?;
            if !set.insert(f.clone()) {
                return Err(Error::DuplicateFacet(f.clone()));
            }
        }
        for (r, fs) in ridge_map(set.iter()) {
            if fs.len() != 2 {
                return Err(Error::NotClosed { ridge: r, count: fs.len() });
            }
        }
        check_connected(&set)?;
        let list: Vec<Simplex> = set.into_iter().collect();
        let signs = orient(n, &list, true)?;
        let m = Self::build(OrientedComplex { dim: n, signs })?;
        m.check_surface_links()?;
        Ok(m)
    }

    /// Convenience wrapper taking raw vertex lists.
    pub fn from_vertex_lists(facets: &[Vec<Vertex>], n: usize) -> Result<Self> {
        let list = facets.iter().map(|f| Simplex::new(f.iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::from_facets(&list, n)
    }

    /// Accepts explicit signs, verifying closedness, connectivity and the
    /// cycle condition.
    pub fn from_oriented(complex: OrientedComplex) -> Result<Self> {
        let ridges = complex.ridges();
        for (r, fs) in &ridges {
            if fs.len() != 2 {
                return Err(Error::NotClosed { ridge: r.clone(), count: fs.len() });
            }
        }
        check_connected(&complex.signs.keys().cloned().collect())?;
        if !complex.facet_boundary().is_zero() {
            let first = complex.facets().next().expect("nonempty").clone();
            return Err(Error::NotOrientable(first));
        }
        let m = Self::build(complex)?;
        m.check_surface_links()?;
        Ok(m)
    }

    /// Wraps a complex produced from a valid manifold by a bistellar move,
    /// which preserves every property checked by `from_oriented`.
    pub(crate) fn from_move(complex: OrientedComplex) -> Self {
        Self::build(complex).expect("build is infallible")
    }

    fn build(complex: OrientedComplex) -> Result<Self> {
        let vertex_universe = complex.facets().flat_map(|f| f.vertices().iter().copied()).max().unwrap_or(0);
        Ok(TriangulatedManifold { complex, vertex_universe })
    }

    pub(crate) fn with_universe(mut self, m: Vertex) -> Self {
        self.vertex_universe = self.vertex_universe.max(m);
        self
    }

    fn check_surface_links(&self) -> Result<()> {
        if self.dim() != 2 {
            return Ok(());
        }
        let k = self.complex.underlying();
        for v in k.vertices() {
            let link = k.link(&Simplex::from_sorted(vec![v]))?;
            let edges: Vec<&Simplex> = link.facets().collect();
            let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
            for e in &edges {
                let w = e.vertices();
                if w.len() != 2 {
                    return Err(Error::NotSurface { vertex: v });
                }
                adj.entry(w[0]).or_default().push(w[1]);
                adj.entry(w[1]).or_default().push(w[0]);
            }
            if adj.values().any(|n| n.len() != 2) {
                return Err(Error::NotSurface { vertex: v });
            }
            let start = *adj.keys().next().ok_or(Error::NotSurface { vertex: v })?;
            let (mut prev, mut cur, mut steps) = (start, adj[&start][0], 1);
            while cur != start {
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                prev = cur;
                cur = next;
                steps += 1;
            }
            if steps != adj.len() {
                return Err(Error::NotSurface { vertex: v });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.complex.dim
    }

    pub fn vertex_universe(&self) -> Vertex {
        self.vertex_universe
    }

    pub fn oriented(&self) -> &OrientedComplex {
        &self.complex
    }

    pub fn sign(&self, facet: &Simplex) -> Option<i32> {
        self.complex.sign(facet)
    }

    pub fn facets(&self) -> impl Iterator<Item = &Simplex> {
        self.complex.facets()
    }

    pub fn oriented_facets(&self) -> impl Iterator<Item = OrientedSimplex> + '_ {
        self.complex.oriented_facets()
    }

    pub fn facet_count(&self) -> usize {
        self.complex.len()
    }

    pub fn contains_facet(&self, s: &Simplex) -> bool {
        self.complex.signs.contains_key(s)
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.complex.facets().any(|f| s.is_subset_of(f))
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.complex.facets().flat_map(|f| f.vertices().iter().copied()).collect()
    }

    pub fn underlying(&self) -> SimplicialComplex {
        let mut k = self.complex.underlying();
        k.vertex_universe = self.vertex_universe;
        k
    }

    pub fn link(&self, a: &Simplex) -> Result<SimplicialComplex> {
        self.underlying().link(a)
    }

    /// `ℱ(K)`: the codimension-1 faces in lexicographic order.
    pub fn codim1_faces(&self) -> Vec<Simplex> {
        self.complex.codim1_faces()
    }

    pub fn negated(&self) -> Self {
        TriangulatedManifold { complex: self.complex.negated(), vertex_universe: self.vertex_universe }
    }

    pub fn is_cycle(&self) -> bool {
        self.complex.facet_boundary().is_zero()
    }

    pub fn face_vectors(&self) -> FaceVector {
        let n = self.dim();
        let mut f = Vec::with_capacity(n + 1);
        for size in 1..=n + 1 {
            let faces: BTreeSet<Simplex> = self.complex.facets().flat_map(|s| s.faces_of_size(size)).collect();
            f.push(faces.len() as i64);
        }
        FaceVector::from_f(f)
    }

    /// Canonical key: the sorted facet labels concatenated.
    pub fn key(&self) -> String {
        let mut out = String::new();
        for f in self.complex.facets() {
            out.push_str(&f.label());
        }
        out
    }
}

/// Labeled equality of the unsigned facet sets.
pub fn complexes_equal(a: &TriangulatedManifold, b: &TriangulatedManifold) -> bool {
    a.complex.signs.len() == b.complex.signs.len() && a.complex.facets().eq(b.complex.facets())
}
