//! Bounded factorization over the rationals.
//!
//! Pipeline per square-free part: pull out variable factors and contents with
//! respect to each variable, certify polynomials of degree one in some
//! variable directly, extract rational roots of univariate parts, and search
//! the rest with an undetermined-coefficient ansatz `q = u * v` solved by the
//! Groebner engine. Factors of total degree above the bound are never
//! searched; a cofactor that could still split is reported as incomplete.

use num_traits::One;

use super::gcd::content_in;
use super::squarefree::squarefree_decomposition;
use super::univariate::UniPoly;
use super::{Monomial, Poly, Rational, Var};
use crate::error::{Error, Result};
use crate::groebner::engine::{self, IPoly};
use crate::groebner::TermOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Irreducible over the rationals, graded-lexicographic leading
    /// coefficient 1.
    pub poly: Poly,
    pub multiplicity: u32,
    /// True only when no factorization over the complex numbers exists.
    pub absolutely_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<Factor>,
    /// Cofactors (with multiplicity) whose irreducibility the degree bound
    /// could not certify.
    pub incomplete: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.incomplete.is_empty()
    }

    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for f in &self.factors {
            acc = &acc * &f.poly.pow(f.multiplicity);
        }
        for (p, m) in &self.incomplete {
            acc = &acc * &p.pow(*m);
        }
        acc
    }
}

pub fn factor_bounded(p: &Poly, max_total_degree: u32) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("factor_bounded"));
    }
    let sqf = squarefree_decomposition(p)?;
    let mut factors = Vec::new();
    let mut incomplete = Vec::new();
    for part in &sqf.parts {
        let mut split = Split::default();
        split.run(&part.factor, max_total_degree, 1, true);
        factors.extend(split.irreducible.into_iter().map(|(poly, absolutely_irreducible)| Factor {
            poly,
            multiplicity: part.multiplicity,
            absolutely_irreducible,
        }));
        incomplete.extend(split.unresolved.into_iter().map(|q| (q, part.multiplicity)));
    }
    factors.sort_by(|a, b| a.poly.cmp(&b.poly).then(a.multiplicity.cmp(&b.multiplicity)));
    incomplete.sort();
    Ok(Factorization { unit: sqf.unit, factors, incomplete })
}

#[derive(Default)]
struct Split {
    irreducible: Vec<(Poly, bool)>,
    unresolved: Vec<Poly>,
}

impl Split {
    /// `q` square-free. Factors of total degree below `start` are known not
    /// to exist; `no_complex_below` records that none exist over C either.
    fn run(&mut self, q: &Poly, bound: u32, start: u32, no_complex_below: bool) {
        let q = q.monic();
        let Some(n) = q.total_degree() else { return };
        if n == 0 {
            return;
        }
        if n == 1 {
            self.irreducible.push((q, true));
            return;
        }

        for v in Var::ALL {
            if q.terms().all(|(m, _)| m.exp(v) > 0) {
                let rest = q.div_exact(&Poly::var(v)).expect("variable divides");
                self.irreducible.push((Poly::var(v), true));
                self.run(&rest, bound, 1, true);
                return;
            }
        }

        let vars = q.variables();
        if vars.len() > 1 {
            for &v in &vars {
                let c = content_in(&q, v);
                if !c.is_constant() {
                    let rest = q.div_exact(&c).expect("content divides");
                    self.run(&c, bound, 1, true);
                    self.run(&rest, bound, 1, true);
                    return;
                }
            }
            // primitive in every variable: degree one in some variable means
            // any factorization would need a factor free of it, i.e. content
            if vars.iter().any(|v| q.degree_in(*v) == 1) {
                self.irreducible.push((q, true));
                return;
            }
        } else {
            let v = vars[0];
            let uni = UniPoly::from_poly(&q, v);
            let roots = uni.rational_roots();
            if !roots.is_empty() {
                let mut rest = q.clone();
                for r in roots {
                    let lin = &Poly::var(v) - &Poly::constant(r);
                    rest = rest.div_exact(&lin).expect("root gives a linear factor");
                    self.irreducible.push((lin, true));
                }
                self.run(&rest, bound, 2, false);
                return;
            }
            // no linear factors; every univariate of degree >= 2 splits over C
            return self.search(&q, n, bound, start.max(2), false);
        }
        self.search(&q, n, bound, start, no_complex_below)
    }

    fn search(&mut self, q: &Poly, n: u32, bound: u32, start: u32, mut no_complex_below: bool) {
        let top = (n / 2).min(bound);
        for d in start..=top {
            match find_factor(q, d) {
                Ansatz::Found(u) => {
                    let rest = q.div_exact(&u).expect("ansatz factor divides");
                    self.irreducible.push((u.monic(), no_complex_below));
                    self.run(&rest, bound, d, no_complex_below);
                    return;
                }
                Ansatz::NoneOverC => {}
                Ansatz::NoneOverQ => no_complex_below = false,
                Ansatz::Unknown => {
                    self.unresolved.push(q.clone());
                    return;
                }
            }
        }
        if top == n / 2 {
            self.irreducible.push((q.clone(), no_complex_below));
        } else {
            self.unresolved.push(q.clone());
        }
    }
}

enum Ansatz {
    Found(Poly),
    /// Every shape's system is inconsistent: no factor of this degree over C.
    NoneOverC,
    /// Complex solutions exist, none rational.
    NoneOverQ,
    /// A system was not zero-dimensional (cannot happen for square-free
    /// input, kept as a guard).
    Unknown,
}

/// Searches for a factor of total degree exactly `d` (with `2d <= deg q`).
fn find_factor(q: &Poly, d: u32) -> Ansatz {
    let n = q.total_degree().expect("nonzero");
    let (lm, lc) = q.leading_term().map(|(m, c)| (*m, c.clone())).expect("nonzero");
    let mut complex = false;
    for mu in monomials_of_degree(d).into_iter().filter(|m| m.divides(&lm)) {
        let mv = lm.div(&mu).expect("divides");
        let bound_u: [u32; 3] = std::array::from_fn(|i| q.degree_in(Var::from_index(i)) - mv.0[i]);
        let bound_v: [u32; 3] = std::array::from_fn(|i| q.degree_in(Var::from_index(i)) - mu.0[i]);
        let su: Vec<Monomial> = monomials_up_to(d)
            .into_iter()
            .filter(|m| *m < mu && (0..3).all(|i| m.0[i] <= bound_u[i]))
            .collect();
        let sv: Vec<Monomial> = monomials_up_to(n - d)
            .into_iter()
            .filter(|m| *m < mv && (0..3).all(|i| m.0[i] <= bound_v[i]))
            .collect();

        // unknowns: v's coefficients first (eliminated first under lex), then u's
        let nv = sv.len();
        let nvars = nv + su.len();
        let mut u_terms: Vec<(Monomial, Coef)> = vec![(mu, Coef::Const(Rational::one()))];
        u_terms.extend(su.iter().enumerate().map(|(k, m)| (*m, Coef::Unknown(nv + k))));
        let mut v_terms: Vec<(Monomial, Coef)> = vec![(mv, Coef::Const(lc.clone()))];
        v_terms.extend(sv.iter().enumerate().map(|(k, m)| (*m, Coef::Unknown(k))));

        let equations = product_equations(&u_terms, &v_terms, q, nvars);
        if equations.iter().any(|e| e.is_constant()) {
            continue;
        }
        let basis = engine::groebner(&equations, nvars, TermOrder::GrLex);
        if engine::is_unit(&basis) {
            continue;
        }
        complex = true;
        if !engine::is_zero_dimensional(&basis, nvars) {
            return Ansatz::Unknown;
        }
        let Ok(sol) = engine::solve(&basis, nvars, true) else {
            return Ansatz::Unknown;
        };
        if let Some(pt) = sol.points.first() {
            let u = Poly::from_terms(u_terms.iter().map(|(m, c)| {
                let value = match c {
                    Coef::Const(r) => r.clone(),
                    Coef::Unknown(k) => pt[*k].clone(),
                };
                (*m, value)
            }));
            return Ansatz::Found(u);
        }
    }
    if complex {
        Ansatz::NoneOverQ
    } else {
        Ansatz::NoneOverC
    }
}

#[derive(Clone)]
enum Coef {
    Const(Rational),
    Unknown(usize),
}

/// Coefficient equations of `u*v - q` in the unknowns.
fn product_equations(u: &[(Monomial, Coef)], v: &[(Monomial, Coef)], q: &Poly, nvars: usize) -> Vec<IPoly> {
    use std::collections::BTreeMap;
    let mut eqs: BTreeMap<Monomial, Vec<(Vec<u32>, Rational)>> = BTreeMap::new();
    let unit = |ks: &[usize]| {
        let mut e = vec![0u32; nvars];
        for k in ks {
            e[*k] += 1;
        }
        e
    };
    for (mu, cu) in u {
        for (mv, cv) in v {
            let term = match (cu, cv) {
                (Coef::Const(a), Coef::Const(b)) => (unit(&[]), a * b),
                (Coef::Const(a), Coef::Unknown(k)) | (Coef::Unknown(k), Coef::Const(a)) => (unit(&[*k]), a.clone()),
                (Coef::Unknown(j), Coef::Unknown(k)) => (unit(&[*j, *k]), Rational::one()),
            };
            eqs.entry(mu.mul(mv)).or_default().push(term);
        }
    }
    for (m, c) in q.terms() {
        eqs.entry(*m).or_default().push((unit(&[]), -c.clone()));
    }
    eqs.into_values()
        .map(|terms| IPoly::from_rational_terms(terms, TermOrder::GrLex))
        .filter(|p| !p.is_zero())
        .collect()
}

fn monomials_up_to(d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(monomials_of_degree).collect()
}

fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            out.push(Monomial::new(a, b, d - a - b));
        }
    }
    out
}

impl Factorization {
    /// Multiplicity of `f` (up to a rational unit) among the certified factors.
    pub fn multiplicity_of(&self, f: &Poly) -> Option<u32> {
        let target = f.monic();
        self.factors.iter().find(|g| g.poly == target).map(|g| g.multiplicity)
    }
}

impl Factor {
    pub fn is_linear(&self) -> bool {
        self.poly.total_degree() == Some(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    fn factors(s: &str, bound: u32) -> Vec<(Poly, u32)> {
        let f = factor_bounded(&p(s), bound).unwrap();
        assert!(f.is_complete(), "{s} incomplete: {:?}", f.incomplete);
        assert_eq!(f.expand(), p(s));
        f.factors.into_iter().map(|g| (g.poly, g.multiplicity)).collect()
    }

    #[test]
    fn heisenberg_member_splits() {
        assert_eq!(factors("x^2 - 9", 2), vec![(p("x - 3"), 1), (p("x + 3"), 1)]);
    }

    #[test]
    fn pencil_member_is_irreducible() {
        let f = factor_bounded(&p("x + y"), 1).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert!(f.factors[0].absolutely_irreducible);
    }

    #[test]
    fn cayley_cubic_is_irreducible() {
        let f = factor_bounded(&p("x*y*z - x^2 - y^2 - z^2 + 4"), 2).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.factors.len(), 1);
        assert!(f.factors[0].absolutely_irreducible);
    }

    #[test]
    fn products_of_quadrics() {
        let got = factors("(x^2 + y*z - 1)*(x*y - z^2 + 2)", 2);
        assert_eq!(got.len(), 2);
        assert!(got.contains(&(p("x^2 + y*z - 1"), 1)));
        assert!(got.contains(&(p("x*y - z^2 + 2"), 1)));
    }

    #[test]
    fn irreducible_over_q_only() {
        let f = factor_bounded(&p("x^2 - 2"), 2).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.factors.len(), 1);
        assert!(!f.factors[0].absolutely_irreducible);
        let g = factor_bounded(&p("x^2 - 2*y^2"), 2).unwrap();
        assert!(g.is_complete());
        assert!(!g.factors[0].absolutely_irreducible);
    }

    #[test]
    fn multiplicities_and_monomials() {
        let mut got = factors("-2*x^3*y*(y - z)^2*(x + z + 1)", 2);
        let mut expected = vec![(p("y - z"), 2), (p("x + z + 1"), 1), (p("y"), 1), (p("x"), 3)];
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn bound_too_small_is_incomplete() {
        let f = factor_bounded(&p("(x^2 + y*z - 1)*(x*y - z^2 + 2)"), 1).unwrap();
        assert!(!f.is_complete());
        assert_eq!(f.expand(), p("(x^2 + y*z - 1)*(x*y - z^2 + 2)"));
    }

    #[test]
    fn refactoring_a_factor_returns_it() {
        let f = factor_bounded(&p("(x*y - z)*(x + y^2*z + 3)"), 2).unwrap();
        for g in &f.factors {
            let again = factor_bounded(&g.poly, 2).unwrap();
            assert_eq!(again.factors.len(), 1);
            assert_eq!(again.factors[0].poly, g.poly);
        }
    }

    #[test]
    fn zero_rejected() {
        assert!(factor_bounded(&Poly::zero(), 2).is_err());
    }

}
