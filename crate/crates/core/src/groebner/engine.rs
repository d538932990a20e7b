//! Buchberger's algorithm over `Z[x_0, ..., x_{n-1}]`, fraction free.
//!
//! Polynomials are kept primitive with integer coefficients; a reduction step
//! `p <- a*p - b*t*g` cancels the leading term without introducing
//! denominators. The engine is generic in the number of variables so that
//! undetermined-coefficient systems can be solved with the same code as
//! ideals of `Q[x, y, z]`.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::TermOrder;
use crate::poly::univariate::UniPoly;
use crate::poly::Rational;

pub(crate) type Exp = Vec<u32>;

impl TermOrder {
    pub(crate) fn cmp_exp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_sub(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exp_add(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Integer polynomial with terms sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Exp, BigInt)>,
}

impl IPoly {
    pub fn one(nvars: usize) -> Self {
        IPoly { terms: vec![(vec![0; nvars], BigInt::one())] }
    }

    /// Clears denominators and makes the result primitive with positive
    /// leading coefficient.
    pub fn from_rational_terms(terms: Vec<(Exp, Rational)>, order: TermOrder) -> Self {
        let den = terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut out: Vec<(Exp, BigInt)> = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, (c * Rational::from_integer(den.clone())).to_integer()))
            .collect();
        out.sort_by(|a, b| order.cmp_exp(&b.0, &a.0));
        // merge duplicate exponents
        let mut merged: Vec<(Exp, BigInt)> = Vec::with_capacity(out.len());
        for (e, c) in out {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        let mut p = IPoly { terms: merged };
        p.make_primitive();
        p
    }

    pub fn to_rational_terms(&self) -> Vec<(Exp, Rational)> {
        self.terms.iter().map(|(e, c)| (e.clone(), Rational::from_integer(c.clone()))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|e| *e == 0)
    }

    pub fn lm(&self) -> &Exp {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    /// `a*self - b*x^shift*g`.
    fn combine(&self, a: &BigInt, g: &IPoly, shift: &[u32], b: &BigInt, order: TermOrder) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted: Vec<(Exp, BigInt)> = g.terms.iter().map(|(e, c)| (exp_add(e, shift), c * b)).collect();
        while i < self.terms.len() || j < shifted.len() {
            let ord = match (self.terms.get(i), shifted.get(j)) {
                (Some(p), Some(q)) => order.cmp_exp(&p.0, &q.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    let (e, c) = &self.terms[i];
                    out.push((e.clone(), c * a));
                    i += 1;
                }
                Ordering::Less => {
                    let (e, c) = &shifted[j];
                    out.push((e.clone(), -c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 * a - &shifted[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        IPoly { terms: out }
    }

    /// Substitutes a rational value for variable `k`.
    pub fn substitute(&self, k: usize, value: &Rational, order: TermOrder) -> IPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                let d = e2[k];
                e2[k] = 0;
                (e2, Rational::from_integer(c.clone()) * num_traits::pow(value.clone(), d as usize))
            })
            .collect();
        IPoly::from_rational_terms(terms, order)
    }
}

/// Fully reduces `p` modulo `basis`; the result is primitive and equals
/// `p` times a nonzero integer modulo the ideal.
pub(crate) fn reduce(p: &IPoly, basis: &[IPoly], order: TermOrder) -> IPoly {
    let mut p = p.clone();
    let mut rem: Vec<(Exp, BigInt)> = Vec::new();
    let mut steps = 0usize;
    while !p.is_zero() {
        let (lead_e, lead_c) = p.terms[0].clone();
        if let Some(g) = basis.iter().find(|g| divides(g.lm(), &lead_e)) {
            let shift = exp_sub(&lead_e, g.lm());
            let d = lead_c.gcd(g.lc());
            let a = g.lc() / &d;
            let b = &lead_c / &d;
            p = p.combine(&a, g, &shift, &b, order);
            if !a.is_one() {
                for (_, c) in &mut rem {
                    *c = &*c * &a;
                }
            }
            steps += 1;
            if steps.is_multiple_of(8) {
                shrink(&mut p, &mut rem);
            }
        } else {
            rem.push(p.terms.remove(0));
        }
    }
    let mut r = IPoly { terms: rem };
    r.make_primitive();
    r
}

fn shrink(p: &mut IPoly, rem: &mut [(Exp, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in p.terms.iter().chain(rem.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, c) in p.terms.iter_mut().chain(rem.iter_mut()) {
        *c = &*c / &g;
    }
}

fn s_poly(f: &IPoly, g: &IPoly, order: TermOrder) -> IPoly {
    let l = exp_lcm(f.lm(), g.lm());
    let d = f.lc().gcd(g.lc());
    let a = g.lc() / &d;
    let b = f.lc() / &d;
    let sf = exp_sub(&l, f.lm());
    let sg = exp_sub(&l, g.lm());
    let f_shifted = IPoly { terms: f.terms.iter().map(|(e, c)| (exp_add(e, &sf), c.clone())).collect() };
    f_shifted.combine(&a, g, &sg, &b, order)
}

/// Reduced Groebner basis (primitive integer form, ascending leading
/// monomials). The unit ideal yields `[1]`, the zero ideal `[]`.
pub(crate) fn groebner(gens: &[IPoly], nvars: usize, order: TermOrder) -> Vec<IPoly> {
    let mut basis: Vec<IPoly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return vec![IPoly::one(nvars)];
        }
        basis.push(g.clone());
    }
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = exp_lcm(basis[a.0].lm(), basis[a.1].lm());
                let lb = exp_lcm(basis[b.0].lm(), basis[b.1].lm());
                order.cmp_exp(&la, &lb).then_with(|| a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if coprime(fi.lm(), fj.lm()) {
            continue;
        }
        let l = exp_lcm(fi.lm(), fj.lm());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lm(), &l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(fi, fj, order);
        let r = reduce(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![IPoly::one(nvars)];
        }
        let n = basis.len();
        for k in 0..n {
            pending.insert((k, n));
        }
        basis.push(r);
    }
    reduce_basis(basis, order)
}

fn reduce_basis(basis: Vec<IPoly>, order: TermOrder) -> Vec<IPoly> {
    // minimal basis: drop elements whose leading monomial is a multiple of
    // another's (keep the earliest among equal leading monomials)
    let mut minimal: Vec<IPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && divides(h.lm(), g.lm()) && (h.lm() != g.lm() || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<IPoly> =
            minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let r = reduce(&minimal[i], &others, order);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp_exp(a.lm(), b.lm()));
    reduced
}

/// True if every S-polynomial of `basis` reduces to zero.
pub(crate) fn s_pairs_reduce_to_zero(basis: &[IPoly], order: TermOrder) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            if !reduce(&s_poly(&basis[i], &basis[j], order), basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

pub(crate) fn is_unit(basis: &[IPoly]) -> bool {
    basis.iter().any(IPoly::is_constant)
}

/// Krull dimension from leading monomials; `-1` for the unit ideal.
pub(crate) fn dimension(basis: &[IPoly], nvars: usize) -> i32 {
    if is_unit(basis) {
        return -1;
    }
    let lms: Vec<&Exp> = basis.iter().map(IPoly::lm).collect();
    let mut best = 0;
    for mask in 0u32..(1 << nvars) {
        let size = mask.count_ones() as i32;
        if size <= best {
            continue;
        }
        // independent: no leading monomial is supported inside the subset
        let independent = lms.iter().all(|e| e.iter().enumerate().any(|(k, d)| *d > 0 && mask & (1 << k) == 0));
        if independent {
            best = size;
        }
    }
    best
}

pub(crate) fn is_zero_dimensional(basis: &[IPoly], nvars: usize) -> bool {
    !is_unit(basis)
        && (0..nvars).all(|k| {
            basis.iter().any(|g| g.lm().iter().enumerate().all(|(i, d)| (i == k) == (*d > 0)))
        })
}

/// Partial assignment (variable index, value), the variable left free, and
/// its univariate eliminant.
pub(crate) type RawEliminant = (Vec<(usize, Rational)>, usize, UniPoly);

#[derive(Clone, Debug, Default)]
pub(crate) struct Solutions {
    pub points: Vec<Vec<Rational>>,
    pub complete: bool,
    /// Eliminants whose roots are not all rational.
    pub eliminants: Vec<RawEliminant>,
}

pub(crate) struct NotZeroDimensional;

/// Rational common zeros of a zero-dimensional system by lexicographic
/// elimination and back-substitution. With `first_only`, stops at the first
/// rational point found.
pub(crate) fn solve(gens: &[IPoly], nvars: usize, first_only: bool) -> Result<Solutions, NotZeroDimensional> {
    let mut sol = Solutions { complete: true, ..Default::default() };
    let mut assigned: Vec<Option<Rational>> = vec![None; nvars];
    solve_rec(gens, nvars, &mut assigned, first_only, &mut sol)?;
    Ok(sol)
}

fn solve_rec(
    gens: &[IPoly],
    nvars: usize,
    assigned: &mut Vec<Option<Rational>>,
    first_only: bool,
    sol: &mut Solutions,
) -> Result<(), NotZeroDimensional> {
    if first_only && !sol.points.is_empty() {
        return Ok(());
    }
    let Some(k) = (0..nvars).rev().find(|k| assigned[*k].is_none()) else {
        let consistent = gens.iter().all(IPoly::is_zero);
        if consistent {
            sol.points.push(assigned.iter().map(|v| v.clone().expect("assigned")).collect());
        }
        return Ok(());
    };
    let basis = groebner(gens, nvars, TermOrder::Lex);
    if is_unit(&basis) {
        return Ok(());
    }
    let uni = basis
        .iter()
        .find(|g| g.terms.iter().all(|(e, _)| e.iter().enumerate().all(|(i, d)| i == k || *d == 0)))
        .ok_or(NotZeroDimensional)?;
    let mut coeffs = vec![Rational::zero(); uni.lm()[k] as usize + 1];
    for (e, c) in &uni.terms {
        coeffs[e[k] as usize] = Rational::from_integer(c.clone());
    }
    let f = UniPoly::new(coeffs);
    let roots = f.rational_roots();

    // irrational remainder of the eliminant
    let sqf = f.div_rem(&f.gcd(&f.derivative())).0;
    if (sqf.degree() as usize) > roots.len() {
        sol.complete = false;
        let mut rest = sqf;
        for r in &roots {
            let lin = UniPoly::new(vec![-r.clone(), Rational::one()]);
            rest = rest.div_rem(&lin).0;
        }
        let fixed = assigned
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.clone().map(|v| (i, v)))
            .collect();
        sol.eliminants.push((fixed, k, rest.monic()));
    }

    for r in roots {
        let next: Vec<IPoly> = basis.iter().map(|g| g.substitute(k, &r, TermOrder::Lex)).collect();
        assigned[k] = Some(r);
        solve_rec(&next, nvars, assigned, first_only, sol)?;
        assigned[k] = None;
        if first_only && !sol.points.is_empty() {
            break;
        }
    }
    Ok(())
}
