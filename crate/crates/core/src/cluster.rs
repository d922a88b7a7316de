//! Seeds, coefficient dynamics, exchange relations and algebra presentations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::bistellar::{apply_move, local_face_sets, local_frame, middle_move_data, LocalFaceSets, MoveLocalFrame};
use crate::complex::TriangulatedManifold;
use crate::error::{Error, Result};
use crate::exchange::{exchange_matrix, mutate, ExchangeMatrix};
use crate::graph::ExchangeGraph;
use crate::poly::{Mono, Poly, RationalFunction, Var};
use crate::semifield::{PositiveRational, Semifield};
use crate::simplex::Simplex;

/// `(p⁺, p⁻)` with `p⁺ ⊕ p⁻ = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientPair<E> {
    pub plus: E,
    pub minus: E,
}

impl<E: Clone> CoefficientPair<E> {
    /// `p⁺ = u/(1⊕u)`, `p⁻ = 1/(1⊕u)`.
    pub fn from_ratio<S: Semifield<Elem = E>>(s: &S, u: &E) -> Result<Self> {
        let denom = s.oplus(&s.one(), u);
        Ok(CoefficientPair { plus: s.div(u, &denom), minus: s.inv(&denom) })
    }

    pub fn ratio<S: Semifield<Elem = E>>(&self, s: &S) -> E {
        s.div(&self.plus, &self.minus)
    }

    pub fn is_normalized<S: Semifield<Elem = E>>(&self, s: &S) -> bool {
        s.equal(&s.oplus(&self.plus, &self.minus), &s.one())
    }
}

#[derive(Clone, Debug)]
pub struct Seed<E> {
    pub host: TriangulatedManifold,
    pub cluster: BTreeMap<Simplex, Var>,
    pub coefficients: BTreeMap<Simplex, CoefficientPair<E>>,
    pub matrix: ExchangeMatrix,
}

impl<E: Clone> Seed<E> {
    pub fn variable(&self, f: &Simplex) -> Option<&Var> {
        self.cluster.get(f)
    }

    pub fn coefficient(&self, f: &Simplex) -> Option<&CoefficientPair<E>> {
        self.coefficients.get(f)
    }

    /// Same cluster labels, matrix and `u`-ratios.
    pub fn same_as<S: Semifield<Elem = E>>(&self, other: &Seed<E>, s: &S) -> bool {
        self.cluster == other.cluster
            && self.matrix == other.matrix
            && self.coefficients.len() == other.coefficients.len()
            && self.coefficients.iter().all(|(f, c)| {
                other.coefficients.get(f).is_some_and(|d| s.equal(&c.ratio(s), &d.ratio(s)))
            })
    }
}

fn cluster_of(k: &TriangulatedManifold) -> BTreeMap<Simplex, Var> {
    k.codim1_faces().into_iter().map(|f| (f.clone(), Var::Cluster(f))).collect()
}

/// Seed of `K` with `u_f` supplied by `ratio`.
pub fn initial_seed_with<S: Semifield>(
    k: &TriangulatedManifold,
    s: &S,
    ratio: impl Fn(&Simplex) -> S::Elem,
) -> Result<Seed<S::Elem>> {
    let cluster = cluster_of(k);
    let coefficients = cluster
        .keys()
        .map(|f| Ok((f.clone(), CoefficientPair::from_ratio(s, &ratio(f))?)))
        .collect::<Result<_>>()?;
    Ok(Seed { host: k.clone(), cluster, coefficients, matrix: exchange_matrix(k) })
}

/// Seed of `K` with `u_f` the semifield generator attached to `f`.
pub fn initial_seed<S: Semifield>(k: &TriangulatedManifold, s: &S) -> Result<Seed<S::Elem>> {
    initial_seed_with(k, s, |f| s.generator(f))
}

fn positive(b: i32) -> u32 {
    b.max(0) as u32
}

/// `π_{α,g} = Π_{g'∈D_α} (p⁺_{g'})^{[b_{g'g}]₊} (p⁻_{g'})^{-[-b_{g'g}]₊}`.
pub fn pi<S: Semifield>(seed: &Seed<S::Elem>, s: &S, sets: &LocalFaceSets, g: &Simplex) -> S::Elem {
    let mut out = s.one();
    for d in &sets.d_alpha {
        let b = seed.matrix.get(d, g);
        let c = &seed.coefficients[d];
        out = s.mul(&out, &s.pow(&c.plus, positive(b) as i64));
        out = s.mul(&out, &s.pow(&c.minus, -(positive(-b) as i64)));
    }
    out
}

fn check_seed_frame<E>(seed: &Seed<E>, frame: &MoveLocalFrame) -> Result<()> {
    for f in frame.pair.old_facets() {
        if !seed.host.contains_facet(&f) {
            return Err(Error::PairNotValid {
                alpha: frame.pair.alpha.clone(),
                beta: frame.pair.beta.clone(),
                reason: "frame does not belong to the seed".into(),
            });
        }
    }
    Ok(())
}

/// `Φ_α`: the seed of `bm_α K`.
pub fn mutate_seed<S: Semifield>(
    seed: &Seed<S::Elem>,
    s: &S,
    frame: &MoveLocalFrame,
    sets: &LocalFaceSets,
) -> Result<Seed<S::Elem>> {
    check_seed_frame(seed, frame)?;
    let host = apply_move(&seed.host, &frame.pair)?;
    let matrix = mutate(&seed.matrix, frame, sets)?;
    let cluster = cluster_of(&host);
    let common = sets.common();
    let mut coefficients = BTreeMap::new();
    for f in cluster.keys() {
        let u = if sets.d_beta.contains(f) {
            s.inv(&seed.coefficients[&frame.sigma_face(f)].ratio(s))
        } else if common.contains(f) {
            let sf = frame.sigma_face(f);
            s.mul(&pi(seed, s, sets, &sf), &seed.coefficients[&sf].ratio(s))
        } else {
            seed.coefficients[f].ratio(s)
        };
        coefficients.insert(f.clone(), CoefficientPair::from_ratio(s, &u)?);
    }
    Ok(Seed { host, cluster, coefficients, matrix })
}

/// `x_f x_{σ(f)} = p⁺ m⁺ + p⁻ m⁻` for `f ∈ D_α`, where `x_{σ(f)}` is the
/// new variable.
#[derive(Clone, Debug, PartialEq)]
pub struct ExchangeRelation<E> {
    pub face: Simplex,
    pub partner: Simplex,
    pub plus: Mono,
    pub minus: Mono,
    pub p_plus: E,
    pub p_minus: E,
    pub divisor: Mono,
}

impl<E> ExchangeRelation<E> {
    pub fn left(&self) -> Mono {
        Mono::from_powers([(Var::Cluster(self.face.clone()), 1), (Var::Cluster(self.partner.clone()), 1)])
    }

    pub fn is_coprime(&self) -> bool {
        self.plus.gcd(&self.minus).is_one()
    }

    /// `p⁺ m⁺ + p⁻ m⁻` in the ambient field.
    pub fn right<S: Semifield<Elem = E>>(&self, s: &S) -> RationalFunction {
        let mp = RationalFunction::from_poly(Poly::mono(self.plus.clone()));
        let mm = RationalFunction::from_poly(Poly::mono(self.minus.clone()));
        s.to_rational(&self.p_plus).mul(&mp).add(&s.to_rational(&self.p_minus).mul(&mm))
    }

    pub fn render<S: Semifield<Elem = E>>(&self, s: &S) -> String {
        let term = |c: &E, m: &Mono| {
            let r = s.to_rational(c);
            if r.is_one() {
                m.to_string()
            } else if r.denom().is_one() && r.numer().len() == 1 {
                format!("{r}*{m}")
            } else {
                format!("({r})*{m}")
            }
        };
        format!("{} = {} + {}", self.left(), term(&self.p_plus, &self.plus), term(&self.p_minus, &self.minus))
    }
}

fn power_product(faces: impl Iterator<Item = (Simplex, u32)>) -> Mono {
    Mono::from_powers(faces.filter(|(_, e)| *e > 0).map(|(f, e)| (Var::Cluster(f), e)))
}

/// One relation per `f ∈ D_α`, read from the seed of `K`.
pub fn exchange_relations<S: Semifield>(
    seed: &Seed<S::Elem>,
    _s: &S,
    frame: &MoveLocalFrame,
    sets: &LocalFaceSets,
) -> Result<Vec<ExchangeRelation<S::Elem>>> {
    check_seed_frame(seed, frame)?;
    let common = sets.common();
    let b = &seed.matrix;
    let mut out = Vec::new();
    for f in &sets.d_alpha {
        let side = |sign: i32| {
            let a = power_product(common.iter().map(|g| (g.clone(), positive(sign * b.get(f, g)))));
            let c = power_product(common.iter().map(|g| (frame.sigma_face(g), positive(sign * b.get(f, g)))));
            a.lcm(&c)
        };
        let divisor_form = |sign: i32| {
            power_product(common.iter().flat_map(|g| {
                let sg = frame.sigma_face(g);
                let (bg, bsg) = (sign * b.get(f, g), sign * b.get(f, &sg));
                let e = if bg > 0 && bsg < 0 { bg as u32 } else { 0 };
                [(g.clone(), e), (sg, e)]
            }))
        };
        let d1 = divisor_form(1);
        let d2 = divisor_form(-1);
        if d1 != d2 {
            return Err(Error::DivisorMismatch(f.clone()));
        }
        let (lp, lm) = (side(1), side(-1));
        if !d1.divides(&lp) || !d1.divides(&lm) {
            return Err(Error::NonDivisible(f.clone()));
        }
        let c = &seed.coefficients[f];
        out.push(ExchangeRelation {
            face: f.clone(),
            partner: frame.sigma_face(f),
            plus: d1.quotient_of(&lp),
            minus: d1.quotient_of(&lm),
            p_plus: c.plus.clone(),
            p_minus: c.minus.clone(),
            divisor: d1,
        });
    }
    Ok(out)
}

/// How variables on `ℱ(Λ_β) ∖ D_β` are identified across a move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariableConvention {
    /// `x_g` of `bm_α K` is `x_{σ(g)}` of `K`.
    Relabel,
    /// A face shared by `K` and `bm_α K` keeps its variable.
    Shared,
}

/// For each variable of `bm_α K`, its expression in the variables of `K`.
pub fn field_map<S: Semifield>(
    seed: &Seed<S::Elem>,
    s: &S,
    frame: &MoveLocalFrame,
    sets: &LocalFaceSets,
    convention: VariableConvention,
) -> Result<BTreeMap<Var, RationalFunction>> {
    let relations: BTreeMap<Simplex, ExchangeRelation<S::Elem>> =
        exchange_relations(seed, s, frame, sets)?.into_iter().map(|r| (r.partner.clone(), r)).collect();
    let host = apply_move(&seed.host, &frame.pair)?;
    let common = sets.common();
    let mut out = BTreeMap::new();
    for g in host.codim1_faces() {
        let value = if let Some(r) = relations.get(&g) {
            r.right(s).div(&RationalFunction::var(Var::Cluster(r.face.clone())))
        } else if common.contains(&g) && convention == VariableConvention::Relabel {
            RationalFunction::var(Var::Cluster(frame.sigma_face(&g)))
        } else {
            RationalFunction::var(Var::Cluster(g.clone()))
        };
        out.insert(Var::Cluster(g), value);
    }
    Ok(out)
}

/// Composes maps along a path: `later` expresses variables of the final
/// seed in those of an intermediate one, `earlier` those of the
/// intermediate one in the start.
pub fn compose_field_maps(
    earlier: &BTreeMap<Var, RationalFunction>,
    later: &BTreeMap<Var, RationalFunction>,
) -> BTreeMap<Var, RationalFunction> {
    later.iter().map(|(v, e)| (v.clone(), e.substitute(earlier))).collect()
}

/// Checks `M^±_{K,α,f} = M^∓_{L,β,σ(f)}`, equality of the divisors, and
/// `π^K_{α,σ(f)} π^L_{β,f} = 1` on `ℱ(Λ_β) ∖ D_β`.
pub fn symmetry_check<S: Semifield>(
    seed: &Seed<S::Elem>,
    s: &S,
    frame: &MoveLocalFrame,
    sets: &LocalFaceSets,
) -> Result<bool> {
    let next = mutate_seed(seed, s, frame, sets)?;
    let back_frame = local_frame(&next.host, &frame.pair.inverse())?;
    let back_sets = local_face_sets(&back_frame)?;
    let forward = exchange_relations(seed, s, frame, sets)?;
    let backward: BTreeMap<Simplex, ExchangeRelation<S::Elem>> = exchange_relations(&next, s, &back_frame, &back_sets)?
        .into_iter()
        .map(|r| (r.face.clone(), r))
        .collect();
    for r in &forward {
        let Some(q) = backward.get(&r.partner) else { return Ok(false) };
        if q.partner != r.face || q.plus != r.minus || q.minus != r.plus || q.divisor != r.divisor {
            return Ok(false);
        }
        if !s.equal(&q.p_plus, &r.p_minus) || !s.equal(&q.p_minus, &r.p_plus) {
            return Ok(false);
        }
    }
    for f in back_sets.common() {
        let prod = s.mul(&pi(seed, s, sets, &frame.sigma_face(&f)), &pi(&next, s, &back_sets, &f));
        if !s.equal(&prod, &s.one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An exchange relation over the ambient field, tagged with the graph edge
/// it was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationRecord {
    pub face: Simplex,
    pub partner: Simplex,
    pub plus: Mono,
    pub minus: Mono,
    pub p_plus: RationalFunction,
    pub p_minus: RationalFunction,
    pub edge: usize,
}

/// Left product and the unordered pair of right monomials.
pub type RelationKey = (Mono, BTreeSet<Mono>);

impl RelationRecord {
    pub fn left(&self) -> Mono {
        Mono::from_powers([(Var::Cluster(self.face.clone()), 1), (Var::Cluster(self.partner.clone()), 1)])
    }

    pub fn key(&self) -> RelationKey {
        (self.left(), BTreeSet::from([self.plus.clone(), self.minus.clone()]))
    }

    /// Coefficients listed with their monomials in increasing order.
    fn sorted_terms(&self) -> [(&Mono, &RationalFunction); 2] {
        if self.plus <= self.minus {
            [(&self.plus, &self.p_plus), (&self.minus, &self.p_minus)]
        } else {
            [(&self.minus, &self.p_minus), (&self.plus, &self.p_plus)]
        }
    }

    fn same_coefficients(&self, other: &RelationRecord) -> bool {
        let (a, b) = (self.sorted_terms(), other.sorted_terms());
        a[0].1 == b[0].1 && a[1].1 == b[1].1
    }
}

impl fmt::Display for RelationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: &RationalFunction, m: &Mono| {
            if c.is_one() {
                m.to_string()
            } else if c.denom().is_one() && c.numer().len() == 1 {
                format!("{c}*{m}")
            } else {
                format!("({c})*{m}")
            }
        };
        write!(f, "{} = {} + {}", self.left(), term(&self.p_plus, &self.plus), term(&self.p_minus, &self.minus))
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    /// `𝒳_[K]`: every face carrying a variable in some node.
    pub generators: BTreeSet<Simplex>,
    /// Faces whose variables take part in some exchange.
    pub exchangeable: BTreeSet<Simplex>,
    /// Deduplicated relations ordered by left product.
    pub relations: Vec<RelationRecord>,
    /// Duplicates whose coefficients differed from the kept relation.
    pub coefficient_conflicts: Vec<(RelationRecord, RelationRecord)>,
}

/// Seeds of every node, propagated from the start node along a
/// breadth-first spanning tree.
pub fn orbit_seeds<S: Semifield>(g: &ExchangeGraph, s: &S) -> Result<Vec<Seed<S::Elem>>> {
    let tree = g.spanning_tree();
    let mut seeds: Vec<Option<Seed<S::Elem>>> = vec![None; g.node_count()];
    if g.node_count() == 0 {
        return Ok(Vec::new());
    }
    seeds[0] = Some(initial_seed(&g.nodes[0], s)?);
    let mut depth = vec![0usize; g.node_count()];
    let mut order: Vec<usize> = Vec::new();
    for i in 1..g.node_count() {
        let mut j = i;
        while let Some((p, _)) = &tree[j] {
            j = *p;
            depth[i] += 1;
        }
        order.push(i);
    }
    order.sort_by_key(|&i| depth[i]);
    for i in order {
        let (parent, pair) = tree[i].clone().ok_or(Error::NotConnected)?;
        let from = seeds[parent].as_ref().expect("parents come first");
        let (frame, sets) = middle_move_data(&from.host, &pair)?;
        seeds[i] = Some(mutate_seed(from, s, &frame, &sets)?);
    }
    Ok(seeds.into_iter().map(|x| x.expect("connected")).collect())
}

pub fn presentation<S: Semifield>(g: &ExchangeGraph, s: &S) -> Result<Presentation> {
    let seeds = orbit_seeds(g, s)?;
    let generators: BTreeSet<Simplex> = seeds.iter().flat_map(|seed| seed.cluster.keys().cloned()).collect();
    let mut exchangeable = BTreeSet::new();
    let mut kept: BTreeMap<RelationKey, RelationRecord> = BTreeMap::new();
    let mut coefficient_conflicts = Vec::new();
    for (e, edge) in g.edges.iter().enumerate() {
        let seed = &seeds[edge.source];
        let (frame, sets) = middle_move_data(&seed.host, &edge.pair)?;
        for r in exchange_relations(seed, s, &frame, &sets)? {
            exchangeable.insert(r.face.clone());
            exchangeable.insert(r.partner.clone());
            let rec = RelationRecord {
                face: r.face.clone(),
                partner: r.partner.clone(),
                plus: r.plus.clone(),
                minus: r.minus.clone(),
                p_plus: s.to_rational(&r.p_plus),
                p_minus: s.to_rational(&r.p_minus),
                edge: e,
            };
            match kept.get(&rec.key()) {
                Some(old) => {
                    if !old.same_coefficients(&rec) {
                        coefficient_conflicts.push((old.clone(), rec));
                    }
                }
                None => {
                    kept.insert(rec.key(), rec);
                }
            }
        }
    }
    Ok(Presentation { generators, exchangeable, relations: kept.into_values().collect(), coefficient_conflicts })
}

/// Groups relations whose left and right products form the same set of
/// three products.
pub fn relation_classes(relations: &[RelationRecord]) -> Vec<Vec<RelationRecord>> {
    let mut classes: BTreeMap<BTreeSet<Mono>, Vec<RelationRecord>> = BTreeMap::new();
    for r in relations {
        let products = BTreeSet::from([r.left(), r.plus.clone(), r.minus.clone()]);
        classes.entry(products).or_default().push(r.clone());
    }
    classes.into_values().collect()
}

/// The ideal generated by `P - Q` for products `P`, `Q` of one relation
/// class. Coefficient variables are treated as scalars.
#[derive(Clone, Debug)]
pub struct RelationIdeal {
    classes: Vec<Vec<Mono>>,
}

impl RelationIdeal {
    pub fn from_relations(relations: &[RelationRecord]) -> Self {
        let classes = relation_classes(relations)
            .iter()
            .map(|c| {
                let set: BTreeSet<Mono> = c.iter().flat_map(|r| [r.left(), r.plus.clone(), r.minus.clone()]).collect();
                set.into_iter().collect()
            })
            .collect();
        RelationIdeal { classes }
    }

    /// Least monomial reachable from `m` by trading one product of a class
    /// for another.
    pub fn representative(&self, m: &Mono) -> Mono {
        let mut seen = BTreeSet::from([m.clone()]);
        let mut stack = vec![m.clone()];
        while let Some(cur) = stack.pop() {
            for class in &self.classes {
                for p in class.iter().filter(|p| p.divides(&cur)) {
                    let rest = p.quotient_of(&cur);
                    for q in class {
                        let next = rest.mul(q);
                        if seen.insert(next.clone()) {
                            stack.push(next);
                        }
                    }
                }
            }
        }
        seen.into_iter().next().expect("contains m")
    }

    /// A polynomial lies in a binomial ideal of this shape exactly when its
    /// coefficients sum to zero on every congruence class of monomials.
    pub fn contains(&self, p: &Poly) -> bool {
        let mut sums: BTreeMap<(Mono, Mono), BigRational> = BTreeMap::new();
        for (m, c) in p.terms() {
            let (xs, ys): (Vec<_>, Vec<_>) =
                m.powers().iter().map(|(v, e)| (v.clone(), *e)).partition(|(v, _)| matches!(v, Var::Cluster(_)));
            let key = (self.representative(&Mono::from_powers(xs)), Mono::from_powers(ys));
            *sums.entry(key).or_insert_with(BigRational::zero) += c;
        }
        sums.values().all(|c| c.is_zero())
    }

    /// `a ≡ b` in the fraction field of the quotient, tested on
    /// `num(a) den(b) - num(b) den(a)`.
    pub fn equivalent(&self, a: &RationalFunction, b: &RationalFunction) -> bool {
        self.contains(&(&(a.numer() * b.denom()) - &(b.numer() * a.denom())))
    }
}

/// Outcome of eliminating between the three relations of one class.
#[derive(Clone, Debug)]
pub struct GroupedCheck {
    /// The three products, increasing.
    pub products: [Mono; 3],
    /// Numerators of the cancelled factors, first for `P₁ = P₃` and then
    /// for `P₁ = P₂`.
    pub factors: [Poly; 2],
    /// Each coefficient pair sums to one, so a common value of the three
    /// products satisfies all relations.
    pub consistent: bool,
    pub holds: bool,
}

/// Relation `i` of a class reads `P_i = a_i P_j + b_i P_k` with `j < k`,
/// `a_i = u_i/(1+u_i)` and `b_i = 1/(1+u_i)` for independent `u, v, w`.
/// Substituting the second relation into the first gives
/// `(1 - a₁a₂) P₁ = (a₁b₂ + b₁) P₃`, and the third into the first
/// `(1 - b₁a₃) P₁ = (a₁ + b₁b₃) P₂`; both sides must carry the same nonzero
/// factor.
pub fn grouped_relation_check(class: &[RelationRecord]) -> Result<GroupedCheck> {
    let malformed = || Error::Format("not a class of three relations on three products".into());
    if class.len() != 3 {
        return Err(malformed());
    }
    let products: BTreeSet<Mono> = class.iter().map(|r| r.left()).collect();
    let products: Vec<Mono> = products.into_iter().collect();
    if products.len() != 3 {
        return Err(malformed());
    }
    for r in class {
        let right = BTreeSet::from([r.plus.clone(), r.minus.clone()]);
        let expected: BTreeSet<Mono> = products.iter().filter(|p| **p != r.left()).cloned().collect();
        if right != expected {
            return Err(malformed());
        }
    }
    let s = PositiveRational;
    let names = ["u", "v", "w"];
    let coefficients: Vec<(RationalFunction, RationalFunction)> = names
        .iter()
        .map(|n| {
            let c = CoefficientPair::from_ratio(&s, &s.named(n))?;
            Ok((c.plus, c.minus))
        })
        .collect::<Result<_>>()?;
    let consistent = coefficients.iter().all(|(a, b)| a.add(b).is_one());
    let (a1, b1) = &coefficients[0];
    let (a2, b2) = &coefficients[1];
    let (a3, b3) = &coefficients[2];
    let one = RationalFunction::one();
    let lhs13 = one.sub(&a1.mul(a2));
    let rhs13 = a1.mul(b2).add(b1);
    let lhs12 = one.sub(&b1.mul(a3));
    let rhs12 = a1.add(&b1.mul(b3));
    let holds = consistent && lhs13 == rhs13 && !lhs13.is_zero() && lhs12 == rhs12 && !lhs12.is_zero();
    let numerator = |r: &RationalFunction| {
        let (c, p) = r.numer().primitive_part();
        let (d, _) = r.denom().primitive_part();
        p.scale(&(c / d))
    };
    Ok(GroupedCheck {
        products: [products[0].clone(), products[1].clone(), products[2].clone()],
        factors: [numerator(&lhs13), numerator(&lhs12)],
        consistent,
        holds,
    })
}
