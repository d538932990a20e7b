//! Sparse polynomials in `x`, `y`, `z` with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with `x > y > z`. Zero coefficients are never stored,
//! so equal polynomials have identical term maps.

mod factor;
mod gcd;
mod squarefree;
pub(crate) mod univariate;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use factor::{factor_bounded, Factor, Factorization};
pub use gcd::gcd;
pub use squarefree::{squarefree_decomposition, SquareFreeDecomposition, SquareFreePart};

/// Exact rational scalar. `BigRational` keeps numerator and denominator
/// coprime with a positive denominator.
pub type Rational = BigRational;

/// A point of affine 3-space over the rationals.
pub type Point = [Rational; 3];

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn point(x: i64, y: i64, z: i64) -> Point {
    [rat(x), rat(y), rat(z)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    pub fn from_name(name: &str) -> Result<Var> {
        match name {
            "x" => Ok(Var::X),
            "y" => Ok(Var::Y),
            "z" => Ok(Var::Z),
            other => Err(Error::UnknownVariable(other.to_string())),
        }
    }
}

/// Exponent vector `(e_x, e_y, e_z)`. Ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(ex: u32, ey: u32, ez: u32) -> Self {
        Monomial([ex, ey, ez])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial([self.0[0] - other.0[0], self.0[1] - other.0[1], self.0[2] - other.0[2]]))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }

    pub fn eval(&self, pt: &Point) -> Rational {
        let mut acc = Rational::one();
        for (e, c) in self.0.iter().zip(pt.iter()) {
            if *e > 0 {
                acc *= num_traits::pow(c.clone(), *e as usize);
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `Q[x, y, z]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn x() -> Self {
        Poly::var(Var::X)
    }

    pub fn y() -> Self {
        Poly::var(Var::Y)
    }

    pub fn z() -> Self {
        Poly::var(Var::Z)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(&Monomial::ONE))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.leading_term().map(|(m, _)| *m)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.degree_in(*v) > 0).collect()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn checked_pow(&self, e: i64) -> Result<Poly> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        Ok(self.pow(e as u32))
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut n = *m;
                n.0[i] -= 1;
                out.terms.insert(n, c * rat(e as i64));
            }
        }
        out
    }

    pub fn derivative_by_name(&self, name: &str) -> Result<Poly> {
        Ok(self.derivative(Var::from_name(name)?))
    }

    pub fn evaluate(&self, pt: &Point) -> Rational {
        self.terms.iter().map(|(m, c)| c * m.eval(pt)).fold(Rational::zero(), |a, b| a + b)
    }

    /// Substitutes polynomials for `x`, `y`, `z` simultaneously.
    pub fn compose(&self, images: &[Poly; 3]) -> Poly {
        let mut powers: [Vec<Poly>; 3] = Default::default();
        for (i, img) in images.iter().enumerate() {
            let max = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0);
            let mut v = vec![Poly::one()];
            for k in 1..=max as usize {
                let next = &v[k - 1] * img;
                v.push(next);
            }
            powers[i] = v;
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for i in 0..3 {
                if m.0[i] > 0 {
                    t = &t * &powers[i][m.0[i] as usize];
                }
            }
            out += t;
        }
        out
    }

    /// `p(x + a, y + b, z + c)`.
    pub fn translate(&self, pt: &Point) -> Poly {
        let images = [
            &Poly::x() + &Poly::constant(pt[0].clone()),
            &Poly::y() + &Poly::constant(pt[1].clone()),
            &Poly::z() + &Poly::constant(pt[2].clone()),
        ];
        self.compose(&images)
    }

    /// Specializes one variable to a rational value.
    pub fn substitute(&self, v: Var, value: &Rational) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut n = *m;
            let e = n.0[i];
            n.0[i] = 0;
            out.add_term(n, c * num_traits::pow(value.clone(), e as usize));
        }
        out
    }

    /// Scales so the graded-lexicographic leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Returns `(c, q)` with `self = c * q`, `q` having coprime integer
    /// coefficients and a positive graded-lexicographic leading coefficient.
    pub fn integer_primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::zero(), Poly::zero());
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            let v = (c * Rational::from_integer(den.clone())).to_integer();
            num = num.gcd(&v);
        }
        if self.leading_coeff().is_negative() {
            num = -num;
        }
        let content = Rational::new(num, den);
        (content.clone(), self.scale(&content.recip()))
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, else `None`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (*m, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let t = m.div(&lm)?;
            let coef = &c / &lc;
            rem -= divisor.mul_monomial(&t, &coef);
            quot.add_term(t, coef);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Coefficients with respect to `v`; entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let i = v.index();
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let mut n = *m;
            let e = n.0[i] as usize;
            n.0[i] = 0;
            out[e].terms.insert(n, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mut vm = Monomial::ONE;
            vm.0[v.index()] = k as u32;
            out += c.mul_monomial(&vm, &Rational::one());
        }
        out
    }

    /// Image under the automorphism `x -> z, y -> x, z -> y`.
    pub fn rotate_vars_back(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial([m.0[1], m.0[2], m.0[0]]), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms of total degree above `cap`.
    pub fn truncated(&self, cap: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }
}

impl Ord for Poly {
    /// Compares term lists from the leading term downwards.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", crate::parser::render(self))
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<Poly> for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += rhs;
        self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul<&Rational> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Rational) -> Poly {
        self.scale(rhs)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::int(n)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("x + y") + &p("-y"), p("x"));
        assert_eq!(&p("x - y") * &p("x + y"), p("x^2 - y^2"));
        assert_eq!(&p("z^2/2 - 2*x*y") + &p("2*x*y"), p("1/2*z^2"));
        assert_eq!(p("x + 1").pow(3), p("x^3 + 3*x^2 + 3*x + 1"));
        assert!(matches!(p("x").checked_pow(-1), Err(Error::NegativeExponent(-1))));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("1/2*z^2 - 2*x*y").derivative(Var::Z), p("z"));
        assert_eq!(p("7").derivative(Var::X), Poly::zero());
        assert_eq!(p("z^2 - x*y^2").derivative(Var::Y), p("-2*x*y"));
        assert!(matches!(p("x").derivative_by_name("w"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn evaluate_examples() {
        let a = p("x*y*z - x^2 - y^2 - z^2 + 4");
        assert_eq!(a.evaluate(&point(2, 2, 2)), rat(0));
        assert_eq!(a.evaluate(&point(0, 0, 0)), rat(4));
        assert_eq!(p("x").evaluate(&point(0, 0, 0)), rat(0));
    }

    #[test]
    fn translate_examples() {
        assert_eq!(p("x").translate(&point(1, 0, 0)), p("x + 1"));
        assert_eq!(p("x*y").translate(&point(1, 1, 0)), p("x*y + x + y + 1"));
        let w = p("z^2 - x*y^2");
        for a in -3..=3 {
            let moved = w.translate(&[ratio(a, 2), rat(0), rat(0)]);
            assert_eq!(moved.evaluate(&point(0, 0, 0)), rat(0));
        }
    }

    #[test]
    fn leading_terms_use_grlex() {
        let a = p("1/2*z^2 - 2*x*y");
        assert_eq!(a.leading_monomial(), Some(Monomial::new(1, 1, 0)));
        assert_eq!(a.monic(), p("x*y - 1/4*z^2"));
        let (c, q) = p("3/2*x - 9/4*y").integer_primitive();
        assert_eq!(c, ratio(3, 4));
        assert_eq!(q, p("2*x - 3*y"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x^2 - y^2").div_exact(&p("x - y")), Some(p("x + y")));
        assert_eq!(p("x^2 + y").div_exact(&p("x")), None);
        assert_eq!(Poly::zero().div_exact(&p("x")), Some(Poly::zero()));
    }

    #[test]
    fn coefficient_split_roundtrip() {
        let a = p("x^2*y + 3*x*z - y + 2");
        let cs = a.coeffs_in(Var::X);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[1], p("3*z"));
        assert_eq!(Poly::from_coeffs_in(Var::X, &cs), a);
    }
}
