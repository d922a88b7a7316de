//! Simplices on positive integer vertex labels, oriented simplices and
//! signed chains with the generalized boundary operators.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex label. Labels are arbitrary positive integers and need not be
/// contiguous.
pub type Vertex = u32;

/// A simplex given by its vertex set, stored in ascending order.
///
/// Simplices are ordered the way faces of `2^[m]` are listed: first by size,
/// then lexicographically on the sorted label sequence. For faces of equal
/// dimension this is plain lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex from any vertex collection. Duplicates are rejected.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(v));
        }
        if v.first() == Some(&0) {
            return Err(Error::NonPositiveVertex);
        }
        Ok(Simplex(v))
    }

    /// Builds a simplex from a strictly increasing slice without re-checking.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension `|vertices| - 1`; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied().filter(|w| !self.contains(*w)));
        v.sort_unstable();
        Simplex(v)
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn without(&self, v: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|w| *w != v).collect())
    }

    pub fn with(&self, v: Vertex) -> Simplex {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Simplex(out)
    }

    /// The codimension-1 faces, `self` minus its `i`-th vertex for each `i`.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }

    /// All faces with exactly `size` vertices, in lexicographic order.
    pub fn faces_of_size(&self, size: usize) -> Vec<Simplex> {
        combinations(&self.0, size).into_iter().map(Simplex).collect()
    }

    /// Applies a vertex map; the image must stay injective.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Simplex {
        let mut v: Vec<Vertex> = self.0.iter().map(|x| f(*x)).collect();
        v.sort_unstable();
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    /// Compact label such as `(1,2,3)`.
    pub fn label(&self) -> String {
        format!("{self}")
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for literal simplices in tests and fixtures.
///
/// Panics on repeated or zero labels.
pub fn simplex(v: &[Vertex]) -> Simplex {
    Simplex::new(v.iter().copied()).expect("valid simplex literal")
}

pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Sign of the permutation taking `seq` to ascending order.
pub fn permutation_sign(seq: &[Vertex]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A simplex with an orientation: `sign = +1` is the canonical (ascending)
/// orientation, `sign = -1` the opposite one.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedSimplex {
    pub simplex: Simplex,
    pub sign: i32,
}

impl OrientedSimplex {
    pub fn new(simplex: Simplex, sign: i32) -> Self {
        assert!(sign == 1 || sign == -1, "orientation sign must be +1 or -1");
        OrientedSimplex { simplex, sign }
    }

    pub fn canonical(simplex: Simplex) -> Self {
        OrientedSimplex { simplex, sign: 1 }
    }

    /// The oriented simplex `(v_0, ..., v_k)` for an arbitrary vertex order.
    pub fn from_sequence(seq: &[Vertex]) -> Result<Self> {
        let simplex = Simplex::new(seq.iter().copied())?;
        Ok(OrientedSimplex { simplex, sign: permutation_sign(seq) })
    }

    pub fn negated(&self) -> Self {
        OrientedSimplex { simplex: self.simplex.clone(), sign: -self.sign }
    }

    pub fn dim(&self) -> isize {
        self.simplex.dim()
    }

    /// Generalized boundary `∂^(k)`: sum over `k`-subsets of vertex positions
    /// `i_1 < ... < i_k` of `(-1)^(i_1+...+i_k)` times the face with those
    /// positions removed.
    pub fn boundary_k(&self, k: usize) -> Result<SignedChain> {
        let n1 = self.simplex.len();
        if k == 0 || k > n1 {
            return Err(Error::KOutOfRange { k, dim: self.dim() });
        }
        let positions: Vec<usize> = (0..n1).collect();
        let mut chain = SignedChain::zero();
        for removed in combinations(&positions, k) {
            let psum: usize = removed.iter().sum();
            let sign = if psum % 2 == 0 { 1 } else { -1 };
            let face: Vec<Vertex> = (0..n1)
                .filter(|i| !removed.contains(i))
                .map(|i| self.simplex.0[i])
                .collect();
            chain.add_term(Simplex(face), (sign * self.sign) as i64);
        }
        Ok(chain)
    }

    /// Coefficient of the canonically oriented `face` in `∂^(k) self`, where
    /// `k = |self| - |face|`; zero when `face` is not a proper face.
    pub fn boundary_coefficient(&self, face: &Simplex) -> i32 {
        if !face.is_subset_of(&self.simplex) || face.len() >= self.simplex.len() {
            return 0;
        }
        let psum: usize = self
            .simplex
            .0
            .iter()
            .enumerate()
            .filter(|(_, v)| !face.contains(**v))
            .map(|(i, _)| i)
            .sum();
        let sign = if psum % 2 == 0 { 1 } else { -1 };
        sign * self.sign
    }
}

impl fmt::Display for OrientedSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        write!(f, "{}", self.simplex)
    }
}

impl fmt::Debug for OrientedSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integer chain: a formal sum of canonically oriented simplices. Zero
/// coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct SignedChain {
    terms: BTreeMap<Simplex, i64>,
}

impl SignedChain {
    pub fn zero() -> Self {
        SignedChain { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, s: Simplex, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(s.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn add_oriented(&mut self, s: &OrientedSimplex) {
        self.add_term(s.simplex.clone(), s.sign as i64);
    }

    pub fn coefficient(&self, s: &Simplex) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, i64)> {
        self.terms.iter().map(|(s, c)| (s, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn negated(&self) -> Self {
        SignedChain { terms: self.terms.iter().map(|(s, c)| (s.clone(), -c)).collect() }
    }

    /// `∂^(1)` applied term by term.
    pub fn boundary(&self) -> SignedChain {
        let mut out = SignedChain::zero();
        for (s, c) in &self.terms {
            if s.is_empty() {
                continue;
            }
            for (i, face) in s.facets().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.add_term(face, sign * c);
            }
        }
        out
    }
}

impl fmt::Display for SignedChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if mag == 1 {
                write!(f, "{sign}{s}")?;
            } else {
                write!(f, "{sign}{mag}{s}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(terms: &[(&[Vertex], i64)]) -> SignedChain {
        let mut c = SignedChain::zero();
        for (v, k) in terms {
            c.add_term(simplex(v), *k);
        }
        c
    }

    #[test]
    fn graded_lex_order() {
        let mut faces = vec![simplex(&[1, 2]), simplex(&[3]), simplex(&[1, 3]), Simplex::empty(), simplex(&[1])];
        faces.sort();
        let labels: Vec<String> = faces.iter().map(|s| s.label()).collect();
        assert_eq!(labels, ["()", "(1)", "(3)", "(1,2)", "(1,3)"]);
    }

    #[test]
    fn rejects_repeated_vertices() {
        assert!(matches!(Simplex::new([1, 2, 2]), Err(Error::RepeatedVertex(_))));
        assert!(matches!(Simplex::new([0, 2]), Err(Error::NonPositiveVertex)));
    }

    #[test]
    fn boundary_one_of_triangle() {
        let s = OrientedSimplex::canonical(simplex(&[1, 2, 3]));
        let expected = chain(&[(&[2, 3], 1), (&[1, 3], -1), (&[1, 2], 1)]);
        assert_eq!(s.boundary_k(1).unwrap(), expected);
    }

    #[test]
    fn boundary_two_of_tetrahedron() {
        let s = OrientedSimplex::canonical(simplex(&[1, 2, 3, 4]));
        let expected = chain(&[
            (&[3, 4], -1),
            (&[2, 4], 1),
            (&[2, 3], -1),
            (&[1, 4], -1),
            (&[1, 3], 1),
            (&[1, 2], -1),
        ]);
        assert_eq!(s.boundary_k(2).unwrap(), expected);
    }

    #[test]
    fn boundary_of_negated_simplex_is_negated() {
        let s = OrientedSimplex::canonical(simplex(&[1, 2, 3, 4, 5]));
        for k in 1..=5 {
            assert_eq!(s.negated().boundary_k(k).unwrap(), s.boundary_k(k).unwrap().negated());
        }
    }

    #[test]
    fn boundary_k_range() {
        let s = OrientedSimplex::canonical(simplex(&[1, 2, 3]));
        assert!(matches!(s.boundary_k(0), Err(Error::KOutOfRange { .. })));
        assert!(matches!(s.boundary_k(4), Err(Error::KOutOfRange { .. })));
        assert_eq!(s.boundary_k(3).unwrap(), chain(&[(&[], -1)]));
    }

    #[test]
    fn coefficient_matches_full_expansion() {
        let s = OrientedSimplex::new(simplex(&[2, 3, 5, 7, 11]), -1);
        for k in 1..=4 {
            let c = s.boundary_k(k).unwrap();
            for (face, coef) in c.terms() {
                assert_eq!(s.boundary_coefficient(face) as i64, coef);
            }
        }
    }

    #[test]
    fn from_sequence_sign() {
        let s = OrientedSimplex::from_sequence(&[2, 1, 3]).unwrap();
        assert_eq!(s.sign, -1);
        let s = OrientedSimplex::from_sequence(&[3, 1, 2]).unwrap();
        assert_eq!(s.sign, 1);
    }

    #[test]
    fn boundary_squared_is_zero() {
        let c = chain(&[(&[1, 2, 3, 4], 1), (&[2, 3, 4, 5], -3)]);
        assert!(c.boundary().boundary().is_zero());
    }
}
