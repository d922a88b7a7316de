//! Sparse multivariate polynomials and rational functions with exact
//! rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::simplex::Simplex;

/// Polynomial variable: a cluster variable `x_f`, a coefficient generator
/// `y_f` attached to a face, or a free symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    Cluster(Simplex),
    Coef(Simplex),
    Named(String),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Cluster(s) => write!(f, "x{s}"),
            Var::Coef(s) => write!(f, "y{s}"),
            Var::Named(n) => write!(f, "{n}"),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial: variables with positive exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mono(BTreeMap<Var, u32>);

impl Mono {
    pub fn one() -> Self {
        Mono(BTreeMap::new())
    }

    pub fn var(v: Var) -> Self {
        Mono(BTreeMap::from([(v, 1)]))
    }

    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(it: I) -> Self {
        let mut m = Mono::one();
        for (v, e) in it {
            m.mul_var(v, e);
        }
        m
    }

    pub fn powers(&self) -> &BTreeMap<Var, u32> {
        &self.0
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul_var(&mut self, v: Var, e: u32) {
        if e > 0 {
            *self.0.entry(v).or_insert(0) += e;
        }
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = self.clone();
        for (v, e) in &other.0 {
            out.mul_var(v.clone(), *e);
        }
        out
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        let mut out = other.clone();
        for (v, e) in &self.0 {
            let x = out.0.get_mut(v).expect("divisible");
            *x -= e;
            if *x == 0 {
                out.0.remove(v);
            }
        }
        out
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .filter_map(|(v, e)| {
                    let m = (*e).min(other.exponent(v));
                    (m > 0).then(|| (v.clone(), m))
                })
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let mut out = self.clone();
        for (v, e) in &other.0 {
            let x = out.0.entry(v.clone()).or_insert(0);
            *x = (*x).max(*e);
        }
        out
    }

    /// Lexicographic term order with smaller variables ranking higher.
    pub fn lex_cmp(&self, other: &Mono) -> Ordering {
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Mono, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Mono::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn term(m: Mono, c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Mono::var(v), rat(1))
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(m, rat(1))
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::one()).is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    /// The single monomial of a one-term polynomial with its coefficient.
    pub fn as_term(&self) -> Option<(&Mono, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().max_by(|a, b| a.0.lex_cmp(b.0))
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Mono::one() };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    /// `self / m` for a monomial dividing every term.
    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, x)| (m.quotient_of(k), x.clone())).collect() }
    }

    /// Rational `c` with `self = c * primitive` and `primitive` having
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (BigRational, Poly) {
        if self.is_zero() {
            return (BigRational::zero(), Poly::zero());
        }
        let mut lcm_den = BigInt::one();
        let mut gcd_num = BigInt::zero();
        for c in self.terms.values() {
            lcm_den = lcm_den.lcm(c.denom());
            gcd_num = gcd_num.gcd(c.numer());
        }
        let mut scale = BigRational::new(gcd_num, lcm_den);
        if self.leading().expect("nonzero").1.is_negative() {
            scale = -scale;
        }
        let inv = scale.recip();
        (scale, self.scale(&inv))
    }

    /// Exact quotient when `d` divides `self`, by division with respect to
    /// the lexicographic term order.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let m = dm.quotient_of(rm);
            let c = rc / &dc;
            r = &r - &d.mul_mono(&m).scale(&c);
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn substitute(&self, map: &BTreeMap<Var, RationalFunction>) -> RationalFunction {
        let mut out = RationalFunction::zero();
        for (m, c) in &self.terms {
            let mut t = RationalFunction::constant(c.clone());
            let mut plain = Mono::one();
            for (v, e) in m.powers() {
                match map.get(v) {
                    Some(r) => t = t.mul(&r.pow(*e as i64)),
                    None => plain.mul_var(v.clone(), *e),
                }
            }
            t = t.mul(&RationalFunction::from_poly(Poly::mono(plain)));
            out = out.add(&t);
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&rat(-1))
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Mono, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.lex_cmp(a.0));
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_coeff(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_coeff(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Quotient of polynomials. Equality is decided by cross-multiplication, so
/// the stored form need not be fully reduced.
#[derive(Clone)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalized(num, den, &[])
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::normalized(p, Poly::one(), &[])
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        RationalFunction { num: Poly::var(v), den: Poly::one() }
    }

    /// Laurent monomial `Π v^e`.
    pub fn laurent<I: IntoIterator<Item = (Var, i64)>>(it: I) -> Self {
        let mut num = Mono::one();
        let mut den = Mono::one();
        for (v, e) in it {
            if e > 0 {
                num.mul_var(v, e as u32);
            } else if e < 0 {
                den.mul_var(v, (-e) as u32);
            }
        }
        Self::normalized(Poly::mono(num), Poly::mono(den), &[])
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalized(num: Poly, den: Poly, hints: &[&Poly]) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.mono_content().gcd(&den.mono_content());
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.div_mono(&g), den.div_mono(&g)) };
        for h in hints {
            if h.len() < 2 {
                continue;
            }
            let (_, h) = h.primitive_part();
            loop {
                match (den.div_exact(&h), num.div_exact(&h)) {
                    (Some(d), Some(n)) => {
                        den = d;
                        num = n;
                    }
                    _ => break,
                }
            }
        }
        if den.len() > 1 || num.len() > 1 {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = Poly::one();
            } else if let Some(q) = den.div_exact(&num) {
                den = q;
                num = Poly::one();
            }
        }
        let (dc, dp) = den.primitive_part();
        let (nc, np) = num.primitive_part();
        RationalFunction { num: np.scale(&(nc / dc)), den: dp }
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return Self::normalized(&self.num + &o.num, self.den.clone(), &[&self.den]);
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::normalized(num, &self.den * &o.den, &[&self.den, &o.den])
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        let num = &self.num * &o.num;
        let den = &self.den * &o.den;
        Self::normalized(num, den, &[&self.num, &self.den, &o.num, &o.den])
    }

    pub fn inv(&self) -> RationalFunction {
        assert!(!self.num.is_zero(), "inverse of zero");
        Self::normalized(self.den.clone(), self.num.clone(), &[])
    }

    pub fn div(&self, o: &RationalFunction) -> RationalFunction {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: i64) -> RationalFunction {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = RationalFunction::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn substitute(&self, map: &BTreeMap<Var, RationalFunction>) -> RationalFunction {
        self.num.substitute(map).div(&self.den.substitute(map))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Poly {
        Poly::var(Var::Named(name.into()))
    }

    #[test]
    fn exact_division() {
        let (a, b) = (v("a"), v("b"));
        let p = &(&a + &b) * &(&a - &b);
        assert_eq!(p.div_exact(&(&a + &b)).unwrap(), &a - &b);
        assert!(p.div_exact(&(&a + &Poly::one())).is_none());
    }

    #[test]
    fn rational_reduction() {
        let (a, b) = (v("a"), v("b"));
        let r = RationalFunction::new(&(&a * &a) - &(&b * &b), &a + &b);
        assert_eq!(r.denom(), &Poly::one());
        assert_eq!(r.numer(), &(&a - &b));
        let u = RationalFunction::var(Var::Named("u".into()));
        let one = RationalFunction::one();
        let p_plus = u.div(&one.add(&u));
        let p_minus = one.div(&one.add(&u));
        let s = p_plus.add(&p_minus);
        assert!(s.is_one());
        assert_eq!(s.to_string(), "1");
    }

    #[test]
    fn lex_order_is_a_term_order() {
        let a = Mono::var(Var::Named("a".into()));
        let b = Mono::var(Var::Named("b".into()));
        assert_eq!(a.lex_cmp(&b), Ordering::Greater);
        assert_eq!(a.lex_cmp(&b.mul(&b)), Ordering::Greater);
        assert_eq!(a.mul(&b).lex_cmp(&a), Ordering::Greater);
        assert_eq!(Mono::one().lex_cmp(&b), Ordering::Less);
    }

    #[test]
    fn substitution() {
        let (a, b) = (v("a"), v("b"));
        let map = BTreeMap::from([(Var::Named("a".into()), RationalFunction::from_poly(&b + &Poly::one()))]);
        let r = (&a * &b).substitute(&map);
        assert_eq!(r, RationalFunction::from_poly(&(&b * &b) + &b));
    }

    #[test]
    fn display() {
        let (a, b) = (v("a"), v("b"));
        let p = &(&(&a * &a).scale(&rat(3)) - &b) + &Poly::integer(2);
        assert_eq!(p.to_string(), "3*a^2 - b + 2");
    }
}
