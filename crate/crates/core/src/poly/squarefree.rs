//! Square-free decomposition over the rationals.
//!
//! The content with respect to the main variable is split off and decomposed
//! recursively in the remaining variables; the primitive part is handled by
//! Yun's iteration with the partial derivative in the main variable. Parts of
//! equal multiplicity from the two branches are coprime and get multiplied
//! together.

use std::collections::BTreeMap;

use super::gcd::{content_split, gcd};
use super::{Poly, Rational, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreePart {
    pub factor: Poly,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    pub unit: Rational,
    /// Sorted by multiplicity; factors are monic and pairwise coprime.
    pub parts: Vec<SquareFreePart>,
}

impl SquareFreeDecomposition {
    pub fn expand(&self) -> Poly {
        self.parts
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, part| &acc * &part.factor.pow(part.multiplicity))
    }
}

pub fn squarefree_decomposition(p: &Poly) -> Result<SquareFreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_decomposition"));
    }
    let unit = p.leading_coeff();
    let mut by_mult: BTreeMap<u32, Poly> = BTreeMap::new();
    decompose(&p.monic(), &Var::ALL, &mut by_mult);
    let parts = by_mult
        .into_iter()
        .map(|(multiplicity, factor)| SquareFreePart { factor: factor.monic(), multiplicity })
        .collect();
    Ok(SquareFreeDecomposition { unit, parts })
}

fn decompose(q: &Poly, vars: &[Var], acc: &mut BTreeMap<u32, Poly>) {
    let Some(pos) = vars.iter().position(|v| q.degree_in(*v) > 0) else {
        return;
    };
    let main = vars[pos];
    let rest = &vars[pos + 1..];
    let (content, primitive) = content_split(q, main, rest);
    for (mult, factor) in yun(&primitive, main) {
        let slot = acc.entry(mult).or_insert_with(Poly::one);
        *slot = &*slot * &factor;
    }
    decompose(&content, rest, acc);
}

/// Yun's algorithm for `a` primitive in `v` of positive degree.
fn yun(a: &Poly, v: Var) -> Vec<(u32, Poly)> {
    let da = a.derivative(v);
    let b = gcd(a, &da);
    let mut c = a.div_exact(&b).expect("gcd divides a");
    let mut d = &da.div_exact(&b).expect("gcd divides a'") - &c.derivative(v);
    let mut out = Vec::new();
    let mut i = 1;
    while !c.is_constant() {
        let g = gcd(&c, &d);
        if !g.is_constant() {
            out.push((i, g.clone()));
        }
        c = c.div_exact(&g).expect("gcd divides c");
        d = &d.div_exact(&g).expect("gcd divides d") - &c.derivative(v);
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::poly::rat;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    fn parts(s: &str) -> Vec<(Poly, u32)> {
        squarefree_decomposition(&p(s))
            .unwrap()
            .parts
            .into_iter()
            .map(|sp| (sp.factor, sp.multiplicity))
            .collect()
    }

    #[test]
    fn spec_examples() {
        let d = squarefree_decomposition(&p("x^2")).unwrap();
        assert_eq!(d.unit, rat(1));
        assert_eq!(parts("x^2"), vec![(p("x"), 2)]);
        assert_eq!(parts("(x - y)^2*(x + y)"), vec![(p("x + y"), 1), (p("x - y"), 2)]);
        assert_eq!(parts("z^2 - x*y^2"), vec![(p("z^2 - x*y^2").monic(), 1)]);
    }

    #[test]
    fn content_factors_are_found() {
        let d = squarefree_decomposition(&p("-3*y^3*(z + 1)^2*(x + y)")).unwrap();
        assert_eq!(d.unit, rat(-3));
        assert_eq!(d.expand(), p("-3*y^3*(z + 1)^2*(x + y)"));
        let m: Vec<u32> = d.parts.iter().map(|sp| sp.multiplicity).collect();
        assert_eq!(m, vec![1, 2, 3]);
    }

    #[test]
    fn zero_rejected() {
        assert!(squarefree_decomposition(&Poly::zero()).is_err());
    }
}
