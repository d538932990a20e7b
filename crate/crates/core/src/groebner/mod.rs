//! Ideal computations in `Q[x, y, z]`: reduced Groebner bases, membership,
//! dimension and rational points of zero-dimensional ideals.

pub(crate) mod engine;

use std::cmp::Ordering;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Point, Poly, Rational, Var};
use engine::IPoly;

/// Monomial order with `x > y > z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    GrLex,
}

impl TermOrder {
    pub fn cmp_monomials(self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exp(&a.0, &b.0)
    }

    pub fn leading_term(self, p: &Poly) -> Option<(Monomial, Rational)> {
        match self {
            TermOrder::GrLex => p.leading_term().map(|(m, c)| (*m, c.clone())),
            TermOrder::Lex => p.terms().max_by(|a, b| a.0.lex_cmp(b.0)).map(|(m, c)| (*m, c.clone())),
        }
    }
}

fn to_ipoly(p: &Poly, order: TermOrder) -> IPoly {
    IPoly::from_rational_terms(p.terms().map(|(m, c)| (m.0.to_vec(), c.clone())).collect(), order)
}

fn from_ipoly(p: &IPoly) -> Poly {
    Poly::from_terms(p.to_rational_terms().into_iter().map(|(e, c)| (Monomial([e[0], e[1], e[2]]), c)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Poly>,
    basis: Vec<Poly>,
    order: TermOrder,
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: TermOrder) -> GroebnerBasis {
    let ig: Vec<IPoly> = gens.iter().map(|g| to_ipoly(g, order)).collect();
    let ib = engine::groebner(&ig, 3, order);
    debug_assert!(engine::s_pairs_reduce_to_zero(&ib, order));
    let basis = ib
        .iter()
        .map(|g| {
            let p = from_ipoly(g);
            let lc = order.leading_term(&p).expect("nonzero basis element").1;
            p.scale(&lc.recip())
        })
        .collect();
    GroebnerBasis { generators: gens.to_vec(), basis, order }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eliminant {
    /// Coordinates already fixed on this branch.
    pub fixed: Vec<(Var, Rational)>,
    /// Univariate polynomial with no rational roots left.
    pub polynomial: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoints {
    pub points: Vec<Point>,
    /// False when some eliminant has irrational roots.
    pub complete: bool,
    pub eliminants: Vec<Eliminant>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    fn ibasis(&self) -> Vec<IPoly> {
        self.basis.iter().map(|g| to_ipoly(g, self.order)).collect()
    }

    /// Remainder of multivariate division by the reduced basis.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let leads: Vec<(Monomial, Rational)> =
            self.basis.iter().map(|g| self.order.leading_term(g).expect("nonzero")).collect();
        let mut p = p.clone();
        let mut rem = Poly::zero();
        while let Some((m, c)) = self.order.leading_term(&p) {
            match leads.iter().position(|(lm, _)| lm.divides(&m)) {
                Some(k) => {
                    let shift = m.div(&leads[k].0).expect("divisible");
                    let coef = &c / &leads[k].1;
                    p -= self.basis[k].mul_monomial(&shift, &coef);
                }
                None => {
                    p.add_term(m, -c.clone());
                    rem.add_term(m, c);
                }
            }
        }
        rem
    }

    pub fn ideal_member(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub fn dimension(&self) -> i32 {
        engine::dimension(&self.ibasis(), 3)
    }

    /// Every S-polynomial of the basis and every generator reduce to zero,
    /// and the basis is reduced with unit leading coefficients.
    pub fn verify_certificate(&self) -> bool {
        let ib = self.ibasis();
        let spairs = engine::s_pairs_reduce_to_zero(&ib, self.order);
        let gens = self.generators.iter().all(|g| self.ideal_member(g));
        let leads: Vec<Monomial> =
            self.basis.iter().map(|g| self.order.leading_term(g).expect("nonzero").0).collect();
        let reduced = self.basis.iter().enumerate().all(|(i, g)| {
            self.order.leading_term(g).expect("nonzero").1 == Rational::from_integer(1.into())
                && leads.iter().enumerate().all(|(k, lm)| k == i || g.terms().all(|(m, _)| !lm.divides(m)))
        });
        spairs && gens && reduced
    }

    /// Rational common zeros of a zero-dimensional ideal (empty for the
    /// unit ideal).
    pub fn rational_points(&self) -> Result<RationalPoints> {
        let dim = self.dimension();
        if dim == -1 {
            return Ok(RationalPoints { points: vec![], complete: true, eliminants: vec![] });
        }
        if dim != 0 {
            return Err(Error::NotZeroDimensional(dim));
        }
        let gens: Vec<IPoly> = self.basis.iter().map(|g| to_ipoly(g, TermOrder::Lex)).collect();
        let sol = engine::solve(&gens, 3, false).map_err(|_| Error::NotZeroDimensional(dim))?;
        let mut points: Vec<Point> =
            sol.points.into_iter().map(|v| [v[0].clone(), v[1].clone(), v[2].clone()]).collect();
        points.sort();
        let eliminants = sol
            .eliminants
            .into_iter()
            .map(|(fixed, k, uni)| Eliminant {
                fixed: fixed.into_iter().map(|(i, v)| (Var::from_index(i), v)).collect(),
                polynomial: uni.to_poly(Var::from_index(k)),
            })
            .collect();
        Ok(RationalPoints { points, complete: sol.complete, eliminants })
    }
}

/// True when `p` vanishes at `pt`.
pub fn vanishes_at(p: &Poly, pt: &Point) -> bool {
    p.evaluate(pt).is_zero()
}
