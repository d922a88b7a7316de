//! Bistellar moves: detection, application with orientation bookkeeping,
//! local frames, the permutation `σ` and the local face sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{OrientedComplex, TriangulatedManifold};
use crate::error::{Error, Result};
use crate::simplex::{permutation_sign, OrientedSimplex, Simplex, Vertex};

/// A bistellar pair `(α, β)` of type `h = dim β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BistellarPair {
    pub alpha: Simplex,
    pub beta: Simplex,
}

impl BistellarPair {
    pub fn new(alpha: Simplex, beta: Simplex) -> Self {
        BistellarPair { alpha, beta }
    }

    pub fn move_type(&self) -> usize {
        self.beta.len() - 1
    }

    pub fn inverse(&self) -> Self {
        BistellarPair { alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    /// Facets of `α * ∂β`.
    pub fn old_facets(&self) -> Vec<Simplex> {
        if self.beta.len() == 1 {
            return vec![self.alpha.clone()];
        }
        self.beta.facets().map(|b| self.alpha.union(&b)).collect()
    }

    /// Facets of `∂α * β`.
    pub fn new_facets(&self) -> Vec<Simplex> {
        self.inverse().old_facets()
    }

    pub fn label(&self) -> String {
        format!("{}|{}", self.alpha, self.beta)
    }
}

impl fmt::Display for BistellarPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

impl fmt::Debug for BistellarPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn invalid(p: &BistellarPair, reason: impl Into<String>) -> Error {
    Error::PairNotValid { alpha: p.alpha.clone(), beta: p.beta.clone(), reason: reason.into() }
}

/// Checks `Link(α) = ∂β` and `β ∉ K`.
pub fn check_pair(k: &TriangulatedManifold, p: &BistellarPair) -> Result<()> {
    let n = k.dim();
    if p.alpha.is_empty() || p.beta.is_empty() {
        return Err(invalid(p, "empty simplex"));
    }
    if p.alpha.len() + p.beta.len() != n + 2 {
        return Err(invalid(p, "dimensions do not add up to n"));
    }
    if !p.alpha.is_disjoint(&p.beta) {
        return Err(invalid(p, "α and β intersect"));
    }
    if p.beta.len() == 1 {
        if !k.contains_facet(&p.alpha) {
            return Err(invalid(p, "α is not a facet"));
        }
        if k.vertices().contains(&p.beta.vertices()[0]) {
            return Err(invalid(p, "new vertex already in use"));
        }
        return Ok(());
    }
    let containing: Vec<&Simplex> = k.facets().filter(|f| p.alpha.is_subset_of(f)).collect();
    let expected: BTreeSet<Simplex> = p.old_facets().into_iter().collect();
    if containing.len() != expected.len() || containing.iter().any(|f| !expected.contains(*f)) {
        return Err(invalid(p, "link of α is not ∂β"));
    }
    if k.contains_face(&p.beta) {
        return Err(invalid(p, "β is a face of K"));
    }
    Ok(())
}

/// All bistellar pairs of type `h`, sorted by `α`. For `h = 0` the new
/// vertex is `vertex_universe + 1`.
pub fn find_bistellar_pairs(k: &TriangulatedManifold, h: usize) -> Vec<BistellarPair> {
    find_bistellar_pairs_with_fresh(k, h, k.vertex_universe() + 1)
}

pub fn find_bistellar_pairs_with_fresh(k: &TriangulatedManifold, h: usize, fresh: Vertex) -> Vec<BistellarPair> {
    let n = k.dim();
    if h > n {
        return Vec::new();
    }
    if h == 0 {
        if k.vertices().contains(&fresh) {
            return Vec::new();
        }
        let b = Simplex::from_sorted(vec![fresh]);
        return k.facets().map(|f| BistellarPair::new(f.clone(), b.clone())).collect();
    }
    let size = n - h + 1;
    let mut star: BTreeMap<Simplex, Vec<&Simplex>> = BTreeMap::new();
    for f in k.facets() {
        for a in f.faces_of_size(size) {
            star.entry(a).or_default().push(f);
        }
    }
    let mut out = Vec::new();
    for (a, fs) in &star {
        if fs.len() != h + 1 {
            continue;
        }
        let beta = fs.iter().fold(Simplex::empty(), |acc, f| acc.union(&f.difference(a)));
        if beta.len() != h + 1 {
            continue;
        }
        if k.contains_face(&beta) {
            continue;
        }
        out.push(BistellarPair::new(a.clone(), beta));
    }
    out
}

/// Signs of the facets of `∂α * β` that keep the signed facet sum a cycle.
fn new_facet_signs(k: &TriangulatedManifold, p: &BistellarPair) -> Result<BTreeMap<Simplex, i32>> {
    // With P = (v_0, ..., v_(n+1)) ascending, the old facets are the faces
    // opposite β-vertices and the new ones the faces opposite α-vertices.
    let all = p.alpha.union(&p.beta);
    let verts = all.vertices();
    let mut scale = None;
    for (i, v) in verts.iter().enumerate() {
        if p.beta.contains(*v) {
            let face = all.without(*v);
            let sk = k.sign(&face).ok_or_else(|| invalid(p, "missing facet"))?;
            let s = -sk * if i % 2 == 0 { 1 } else { -1 };
            match scale {
                None => scale = Some(s),
                Some(t) if t != s => return Err(Error::OrientationBreak(p.alpha.clone())),
                _ => {}
            }
        }
    }
    let s = scale.expect("β is nonempty");
    Ok(verts
        .iter()
        .enumerate()
        .filter(|(_, v)| p.alpha.contains(**v))
        .map(|(i, v)| (all.without(*v), s * if i % 2 == 0 { 1 } else { -1 }))
        .collect())
}

/// `bm_α K = (K ∖ (α * ∂β)) ∪ (∂α * β)`. Unchanged facets keep their signs.
pub fn apply_move(k: &TriangulatedManifold, p: &BistellarPair) -> Result<TriangulatedManifold> {
    check_pair(k, p)?;
    let new_signs = new_facet_signs(k, p)?;
    let removed: BTreeSet<Simplex> = p.old_facets().into_iter().collect();
    let mut facets: Vec<OrientedSimplex> =
        k.oriented_facets().filter(|f| !removed.contains(&f.simplex)).collect();
    facets.extend(new_signs.into_iter().map(|(s, c)| OrientedSimplex::new(s, c)));
    let out = TriangulatedManifold::from_move(OrientedComplex::new(k.dim(), facets)?);
    Ok(out.with_universe(k.vertex_universe().max(p.beta.vertices().iter().copied().max().unwrap_or(0))))
}

/// The states visited by a move sequence, starting with the input.
#[derive(Clone, Debug)]
pub struct MoveTrace {
    pub states: Vec<TriangulatedManifold>,
    pub moves: Vec<BistellarPair>,
}

impl MoveTrace {
    pub fn result(&self) -> &TriangulatedManifold {
        self.states.last().expect("trace holds the start state")
    }
}

pub fn apply_sequence(k: &TriangulatedManifold, moves: &[BistellarPair]) -> Result<MoveTrace> {
    let mut states = vec![k.clone()];
    for (i, p) in moves.iter().enumerate() {
        let next = apply_move(states.last().expect("nonempty"), p)
            .map_err(|e| Error::PairNotValidAtStep { step: i, source: Box::new(e) })?;
        states.push(next);
    }
    Ok(MoveTrace { states, moves: moves.to_vec() })
}

/// Ordering `(v_0, ..., v_(n+1))` of `α ∪ β` with `α` first and the facet
/// `(v_0, ..., v_n)` positively oriented in the given signs.
fn compatible_ordering(sign_of: impl Fn(&Simplex) -> Option<i32>, p: &BistellarPair) -> Result<Vec<Vertex>> {
    let mut ord: Vec<Vertex> = p.alpha.vertices().to_vec();
    ord.extend_from_slice(p.beta.vertices());
    let n1 = ord.len() - 1;
    let facet = Simplex::new(ord[..n1].iter().copied())?;
    let stored = sign_of(&facet).ok_or_else(|| invalid(p, "facet missing from complex"))?;
    if permutation_sign(&ord[..n1]) != stored {
        ord.swap(n1 - 1, n1);
    }
    Ok(ord)
}

/// Vertex ordering, signed old and new facets and `σ` for a move of type
/// `h ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveLocalFrame {
    pub pair: BistellarPair,
    pub n: usize,
    pub ordering: Vec<Vertex>,
    /// `F_0, ..., F_h` with the signs they carry in `K`.
    pub old_facets: Vec<OrientedSimplex>,
    /// `H_0, ..., H_h` with the signs they carry in `bm_α K`.
    pub new_facets: Vec<OrientedSimplex>,
    pub sigma: BTreeMap<Vertex, Vertex>,
}

impl MoveLocalFrame {
    pub fn h(&self) -> usize {
        self.pair.move_type()
    }

    pub fn sigma_vertex(&self, v: Vertex) -> Vertex {
        self.sigma.get(&v).copied().unwrap_or(v)
    }

    /// Image of a simplex under `σ` (vertices outside the frame are fixed).
    pub fn sigma_face(&self, f: &Simplex) -> Simplex {
        f.map_vertices(|v| self.sigma_vertex(v))
    }
}

/// Builds the frame. For `α < β` the ordering is the compatible ordering of
/// `(α, β)` in `K`; otherwise it is the reversal of the compatible ordering
/// of `(β, α)` in `bm_α K`, so that both directions of a move share one `σ`.
pub fn local_frame(k: &TriangulatedManifold, p: &BistellarPair) -> Result<MoveLocalFrame> {
    check_pair(k, p)?;
    if p.beta.len() < 2 || p.alpha.len() < 2 {
        return Err(invalid(p, "frames need α and β of dimension at least 1"));
    }
    let new_signs = new_facet_signs(k, p)?;
    let ordering = if p.alpha < p.beta {
        compatible_ordering(|s| k.sign(s), p)?
    } else {
        let mut o = compatible_ordering(|s| new_signs.get(s).copied(), &p.inverse())?;
        o.reverse();
        o
    };
    let n = k.dim();
    let all = p.alpha.union(&p.beta);
    let h = p.move_type();
    let old_facets = (0..=h)
        .map(|i| {
            let s = all.without(ordering[n + 1 - i]);
            let c = k.sign(&s).expect("old facet present");
            OrientedSimplex::new(s, c)
        })
        .collect();
    let na = p.alpha.len();
    let new_facets = (0..na)
        .map(|i| {
            let s = all.without(ordering[i]);
            let c = new_signs[&s];
            OrientedSimplex::new(s, c)
        })
        .collect();
    let sigma = (0..=n + 1).map(|i| (ordering[i], ordering[n + 1 - i])).collect();
    Ok(MoveLocalFrame { pair: p.clone(), n, ordering, old_facets, new_facets, sigma })
}

/// `ℱ(Λ_α)`, `ℱ(Λ_β)`, `D_α = ℱ(Λ_α) ∖ ℱ(Λ_β)` and `D_β = ℱ(Λ_β) ∖ ℱ(Λ_α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFaceSets {
    pub lambda_alpha_faces: BTreeSet<Simplex>,
    pub lambda_beta_faces: BTreeSet<Simplex>,
    pub d_alpha: BTreeSet<Simplex>,
    pub d_beta: BTreeSet<Simplex>,
}

impl LocalFaceSets {
    /// `ℱ(Λ_α) ∖ D_α`, equal to `ℱ(Λ_β) ∖ D_β`.
    pub fn common(&self) -> BTreeSet<Simplex> {
        self.lambda_alpha_faces.difference(&self.d_alpha).cloned().collect()
    }
}

fn codim1_of(facets: &[Simplex]) -> BTreeSet<Simplex> {
    facets.iter().flat_map(|f| f.facets()).collect()
}

pub fn local_face_sets(frame: &MoveLocalFrame) -> Result<LocalFaceSets> {
    let h = frame.h();
    if frame.n != 2 * h {
        return Err(Error::NotMiddleMove { n: frame.n, h });
    }
    let la = codim1_of(&frame.pair.old_facets());
    let lb = codim1_of(&frame.pair.new_facets());
    let d_alpha = la.difference(&lb).cloned().collect();
    let d_beta = lb.difference(&la).cloned().collect();
    Ok(LocalFaceSets { lambda_alpha_faces: la, lambda_beta_faces: lb, d_alpha, d_beta })
}

/// Frame and face sets of a middle move.
pub fn middle_move_data(k: &TriangulatedManifold, p: &BistellarPair) -> Result<(MoveLocalFrame, LocalFaceSets)> {
    let frame = local_frame(k, p)?;
    let sets = local_face_sets(&frame)?;
    Ok((frame, sets))
}
