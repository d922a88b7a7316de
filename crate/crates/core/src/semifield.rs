//! Coefficient semifields: trivial, tropical and positive rational functions.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::poly::{RationalFunction, Var};
use crate::simplex::Simplex;

pub trait Semifield {
    type Elem: Clone + Debug;

    fn name(&self) -> &'static str;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// The auxiliary addition `⊕`.
    fn oplus(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    /// The generator attached to a face.
    fn generator(&self, face: &Simplex) -> Self::Elem;
    /// A free generator outside the face-indexed family.
    fn named(&self, name: &str) -> Self::Elem;
    /// Image in the field of rational functions, used for coefficients of
    /// exchange relations.
    fn to_rational(&self, a: &Self::Elem) -> RationalFunction;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let base = if e < 0 { self.inv(a) } else { a.clone() };
        let mut out = self.one();
        for _ in 0..e.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }

    fn render(&self, a: &Self::Elem) -> String {
        self.to_rational(a).to_string()
    }
}

/// The one-element semifield.
#[derive(Clone, Copy, Debug, Default)]
pub struct Trivial;

impl Semifield for Trivial {
    type Elem = ();

    fn name(&self) -> &'static str {
        "trivial"
    }
    fn one(&self) {}
    fn mul(&self, _: &(), _: &()) {}
    fn inv(&self, _: &()) {}
    fn oplus(&self, _: &(), _: &()) {}
    fn equal(&self, _: &(), _: &()) -> bool {
        true
    }
    fn generator(&self, _: &Simplex) {}
    fn named(&self, _: &str) {}
    fn to_rational(&self, _: &()) -> RationalFunction {
        RationalFunction::one()
    }
}

/// Laurent monomials in generators `y_f`, `⊕` = componentwise minimum of
/// exponents.
#[derive(Clone, Copy, Debug, Default)]
pub struct Tropical;

/// Exponent vector of a tropical element; absent keys are zero.
pub type TropicalElem = BTreeMap<Var, i64>;

fn clean(mut m: TropicalElem) -> TropicalElem {
    m.retain(|_, e| *e != 0);
    m
}

impl Semifield for Tropical {
    type Elem = TropicalElem;

    fn name(&self) -> &'static str {
        "tropical"
    }
    fn one(&self) -> TropicalElem {
        BTreeMap::new()
    }
    fn mul(&self, a: &TropicalElem, b: &TropicalElem) -> TropicalElem {
        let mut out = a.clone();
        for (v, e) in b {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        clean(out)
    }
    fn inv(&self, a: &TropicalElem) -> TropicalElem {
        a.iter().map(|(v, e)| (v.clone(), -e)).collect()
    }
    fn oplus(&self, a: &TropicalElem, b: &TropicalElem) -> TropicalElem {
        let mut out = BTreeMap::new();
        for v in a.keys().chain(b.keys()) {
            let x = a.get(v).copied().unwrap_or(0).min(b.get(v).copied().unwrap_or(0));
            out.insert(v.clone(), x);
        }
        clean(out)
    }
    fn equal(&self, a: &TropicalElem, b: &TropicalElem) -> bool {
        a == b
    }
    fn generator(&self, face: &Simplex) -> TropicalElem {
        BTreeMap::from([(Var::Coef(face.clone()), 1)])
    }
    fn named(&self, name: &str) -> TropicalElem {
        BTreeMap::from([(Var::Named(name.to_string()), 1)])
    }
    fn to_rational(&self, a: &TropicalElem) -> RationalFunction {
        RationalFunction::laurent(a.iter().map(|(v, e)| (v.clone(), *e)))
    }
}

/// Subtraction-free rational functions in generators `y_f`, `⊕` = `+`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PositiveRational;

impl Semifield for PositiveRational {
    type Elem = RationalFunction;

    fn name(&self) -> &'static str {
        "posrat"
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one()
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.mul(b)
    }
    fn inv(&self, a: &RationalFunction) -> RationalFunction {
        a.inv()
    }
    fn oplus(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.add(b)
    }
    fn equal(&self, a: &RationalFunction, b: &RationalFunction) -> bool {
        a == b
    }
    fn generator(&self, face: &Simplex) -> RationalFunction {
        RationalFunction::var(Var::Coef(face.clone()))
    }
    fn named(&self, name: &str) -> RationalFunction {
        RationalFunction::var(Var::Named(name.to_string()))
    }
    fn to_rational(&self, a: &RationalFunction) -> RationalFunction {
        a.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::simplex;

    fn axioms<S: Semifield>(s: &S, a: S::Elem, b: S::Elem, c: S::Elem) {
        let one = s.one();
        assert!(s.equal(&s.mul(&a, &s.inv(&a)), &one));
        assert!(s.equal(&s.mul(&a, &b), &s.mul(&b, &a)));
        assert!(s.equal(&s.oplus(&a, &b), &s.oplus(&b, &a)));
        assert!(s.equal(&s.oplus(&s.oplus(&a, &b), &c), &s.oplus(&a, &s.oplus(&b, &c))));
        let lhs = s.mul(&a, &s.oplus(&b, &c));
        let rhs = s.oplus(&s.mul(&a, &b), &s.mul(&a, &c));
        assert!(s.equal(&lhs, &rhs));
    }

    #[test]
    fn semifield_axioms() {
        let f = [simplex(&[1, 2]), simplex(&[1, 3]), simplex(&[2, 3])];
        axioms(&Trivial, (), (), ());
        let t = Tropical;
        let a = t.mul(&t.generator(&f[0]), &t.inv(&t.generator(&f[1])));
        axioms(&t, a, t.generator(&f[1]), t.pow(&t.generator(&f[2]), -2));
        let p = PositiveRational;
        let a = p.oplus(&p.generator(&f[0]), &p.one());
        axioms(&p, a, p.generator(&f[1]), p.div(&p.one(), &p.generator(&f[2])));
    }

    #[test]
    fn tropical_normalization() {
        let t = Tropical;
        let y = t.generator(&simplex(&[1, 2]));
        let one_plus = t.oplus(&t.one(), &y);
        assert_eq!(one_plus, t.one());
        let p_plus = t.div(&y, &one_plus);
        let p_minus = t.div(&t.one(), &one_plus);
        assert_eq!(t.oplus(&p_plus, &p_minus), t.one());
        assert_eq!(t.render(&t.inv(&y)), "1/y(1,2)");
    }
}
