//! Pair orderings, exchange matrices and matrix mutation.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bistellar::{LocalFaceSets, MoveLocalFrame};
use crate::complex::{OrientedComplex, TriangulatedManifold};
use crate::error::{Error, Result};
use crate::simplex::{OrientedSimplex, Simplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOrder {
    /// `f ≺ g`
    Precedes,
    /// `g ≺ f`
    Follows,
    Incomparable,
}

/// The coefficient `c_fg ∈ {-1, 0, 1}` of the pair ordering of two faces of
/// equal dimension inside `s`; antisymmetric in `f` and `g`.
pub fn pair_coefficient(s: &OrientedSimplex, f: &Simplex, g: &Simplex) -> Result<i32> {
    for x in [f, g] {
        if !x.is_subset_of(&s.simplex) || x.len() >= s.simplex.len() {
            return Err(Error::NotFaces(x.clone()));
        }
    }
    if f.len() != g.len() {
        return Err(Error::DimensionMismatch);
    }
    if f == g || f.is_disjoint(g) {
        return Ok(0);
    }
    let t = f.union(g).difference(&f.intersection(g));
    let c = s.boundary_coefficient(&t);
    Ok(if f < g { c } else { -c })
}

pub fn pair_order(s: &OrientedSimplex, f: &Simplex, g: &Simplex) -> Result<PairOrder> {
    Ok(match pair_coefficient(s, f, g)? {
        1 => PairOrder::Follows,
        -1 => PairOrder::Precedes,
        _ => PairOrder::Incomparable,
    })
}

/// Dense skew-symmetric integer matrix indexed by sorted faces.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    index: Vec<Simplex>,
    entries: Vec<i32>,
}

impl ExchangeMatrix {
    pub fn zeros(mut index: Vec<Simplex>) -> Self {
        index.sort();
        index.dedup();
        let n = index.len();
        ExchangeMatrix { index, entries: vec![0; n * n] }
    }

    /// Builds from rows given in the order of `index` (which must be sorted).
    pub fn from_rows(index: Vec<Simplex>, rows: &[Vec<i32>]) -> Result<Self> {
        let n = index.len();
        if index.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndexMismatch("index must be strictly increasing".into()));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::IndexMismatch(format!("expected a {n}x{n} matrix")));
        }
        Ok(ExchangeMatrix { index, entries: rows.concat() })
    }

    pub fn index(&self) -> &[Simplex] {
        &self.index
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn position(&self, f: &Simplex) -> Option<usize> {
        self.index.binary_search(f).ok()
    }

    pub fn at(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.index.len() + j]
    }

    /// `b_fg`, zero when either face is not indexed.
    pub fn get(&self, f: &Simplex, g: &Simplex) -> i32 {
        match (self.position(f), self.position(g)) {
            (Some(i), Some(j)) => self.at(i, j),
            _ => 0,
        }
    }

    fn add(&mut self, i: usize, j: usize, v: i32) {
        let n = self.index.len();
        self.entries[i * n + j] += v;
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        let n = self.index.len();
        (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect()
    }

    /// Rows and columns listed in an arbitrary face order.
    pub fn reindexed(&self, order: &[Simplex]) -> Vec<Vec<i32>> {
        order.iter().map(|f| order.iter().map(|g| self.get(f, g)).collect()).collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.at(i, j) == -self.at(j, i)))
    }

    pub fn entries_in_unit_range(&self) -> bool {
        self.entries.iter().all(|e| (-1..=1).contains(e))
    }

    pub fn negated(&self) -> Self {
        ExchangeMatrix { index: self.index.clone(), entries: self.entries.iter().map(|e| -e).collect() }
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.index.iter().map(|s| s.label()).collect();
        writeln!(f, "{}", labels.join(" "))?;
        fmt::Display::fmt(self, f)
    }
}

fn add_local(b: &mut ExchangeMatrix, s: &OrientedSimplex) {
    let faces: Vec<Simplex> = s.simplex.facets().collect();
    for f in &faces {
        for g in &faces {
            let (Some(i), Some(j)) = (b.position(f), b.position(g)) else { continue };
            let c = pair_coefficient(s, f, g).expect("faces of s");
            b.add(i, j, c);
        }
    }
}

/// `B^s`: the contribution of one oriented top simplex.
pub fn local_matrix(s: &OrientedSimplex, index: &[Simplex]) -> ExchangeMatrix {
    let mut b = ExchangeMatrix::zeros(index.to_vec());
    add_local(&mut b, s);
    b
}

/// `B = Σ_F B^F` over the oriented facets, indexed by all codimension-1 faces.
pub fn exchange_matrix_of(k: &OrientedComplex) -> ExchangeMatrix {
    let mut b = ExchangeMatrix::zeros(k.codim1_faces());
    for s in k.oriented_facets() {
        add_local(&mut b, &s);
    }
    b
}

pub fn exchange_matrix(k: &TriangulatedManifold) -> ExchangeMatrix {
    exchange_matrix_of(k.oriented())
}

/// `μ_α`: reindex by `ℱ(L)`, negate and relabel through `σ` on the block of
/// `ℱ(Λ_β)`, keep everything else.
pub fn mutate(b: &ExchangeMatrix, frame: &MoveLocalFrame, sets: &LocalFaceSets) -> Result<ExchangeMatrix> {
    for f in &sets.d_alpha {
        if b.position(f).is_none() {
            return Err(Error::IndexMismatch(format!("{f} missing from the matrix index")));
        }
    }
    for f in &sets.d_beta {
        if b.position(f).is_some() {
            return Err(Error::IndexMismatch(format!("{f} already indexed")));
        }
    }
    let index: BTreeSet<Simplex> =
        b.index.iter().filter(|f| !sets.d_alpha.contains(*f)).chain(sets.d_beta.iter()).cloned().collect();
    let mut out = ExchangeMatrix::zeros(index.into_iter().collect());
    let n = out.size();
    let images: Vec<Option<Simplex>> = out
        .index
        .iter()
        .map(|f| sets.lambda_beta_faces.contains(f).then(|| frame.sigma_face(f)))
        .collect();
    for i in 0..n {
        for j in 0..n {
            let v = match (&images[i], &images[j]) {
                (Some(sf), Some(sg)) => -b.get(sf, sg),
                _ => b.get(&out.index[i], &out.index[j]),
            };
            out.entries[i * n + j] = v;
        }
    }
    Ok(out)
}
