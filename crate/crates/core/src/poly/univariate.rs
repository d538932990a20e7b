//! Dense univariate polynomials over the rationals, used for eliminants.
//!
//! Rational roots are isolated with a Sturm sequence and recovered as the
//! simplest fraction inside an isolating interval narrower than `1/N^2`,
//! where `N` bounds the denominator of any rational root.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Poly, Rational, Var};

/// Coefficient `k` multiplies `t^k`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    /// Reads a polynomial that only involves `v`.
    pub fn from_poly(p: &Poly, v: Var) -> Self {
        let mut coeffs = vec![Rational::zero(); p.degree_in(v) as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(v) as usize] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    pub fn to_poly(&self, v: Var) -> Poly {
        Poly::from_terms(self.0.iter().enumerate().map(|(k, c)| {
            let mut m = Monomial::ONE;
            m.0[v.index()] = k as u32;
            (m, c.clone())
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `-1` for zero.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        UniPoly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Euclidean division.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.0.len() - 1;
        if rem.len() <= dd {
            return (UniPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        let ld = d.lead();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / ld;
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree() < 1 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut f = self.clone();
        if f.0[0].is_zero() {
            roots.push(Rational::zero());
            let shift = f.0.iter().position(|c| !c.is_zero()).unwrap_or(0);
            f = UniPoly::new(f.0[shift..].to_vec());
        }
        if f.degree() >= 1 {
            let sqf = f.div_rem(&f.gcd(&f.derivative())).0;
            roots.extend(sturm_rational_roots(&sqf));
        }
        roots.sort();
        roots
    }
}

fn sturm_rational_roots(f: &UniPoly) -> Vec<Rational> {
    if f.degree() == 1 {
        return vec![-&f.0[0] / &f.0[1]];
    }
    // Denominator bound: |leading coefficient| of the integer-primitive form.
    let den_lcm = f.0.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = f.0.iter().map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| num_integer::gcd(acc, c.clone()));
    let n_bound = Rational::from_integer((ints.last().unwrap() / &content).abs());
    let width_limit = (&n_bound * &n_bound).recip();

    let lead = f.lead().abs();
    let bound = f.0.iter().map(|c| c.abs() / &lead).fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + Rational::one();

    let seq = sturm_sequence(f);
    let mut out = Vec::new();
    let lo = -bound.clone();
    let hi = bound;
    let mut stack = vec![(lo.clone(), hi.clone(), variations(&seq, &lo) - variations(&seq, &hi))];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 && &b - &a < width_limit {
            let c = simplest_between(&a, &b);
            if f.eval(&c).is_zero() {
                out.push(c);
            }
            continue;
        }
        let m = (&a + &b) / Rational::from_integer(BigInt::from(2));
        let vm = variations(&seq, &m);
        let left = variations(&seq, &a) - vm;
        stack.push((a, m.clone(), left));
        stack.push((m, b, count - left));
    }
    out
}

fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

fn variations(seq: &[UniPoly], t: &Rational) -> i64 {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = p.eval(t);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Fraction with the least denominator in `[l, r]`.
pub(crate) fn simplest_between(l: &Rational, r: &Rational) -> Rational {
    let fl = l.floor();
    if &fl == l {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= r {
        return next;
    }
    let inner = simplest_between(&(r - &fl).recip(), &(l - &fl).recip());
    fl + inner.recip()
}
