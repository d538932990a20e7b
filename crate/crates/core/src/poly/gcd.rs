//! Multivariate GCD by primitive polynomial remainder sequences.
//!
//! A polynomial is viewed as univariate in the first of `x, y, z` that occurs,
//! with coefficients in the remaining variables. Contents are computed by
//! recursing on those remaining variables.

use num_traits::One;

use super::{Monomial, Poly, Rational, Var};

/// Greatest common divisor, normalized to graded-lexicographic leading
/// coefficient 1. `gcd(0, 0) = 0`.
pub fn gcd(p: &Poly, q: &Poly) -> Poly {
    gcd_in(p, q, &Var::ALL).monic()
}

fn gcd_in(a: &Poly, b: &Poly, vars: &[Var]) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let Some(pos) = vars.iter().position(|v| a.degree_in(*v) > 0 || b.degree_in(*v) > 0) else {
        return Poly::one();
    };
    let main = vars[pos];
    let rest = &vars[pos + 1..];

    let (ca, pa) = content_split(a, main, rest);
    let (cb, pb) = content_split(b, main, rest);
    let content = gcd_in(&ca, &cb, rest);

    let (mut r0, mut r1) = if pa.degree_in(main) >= pb.degree_in(main) { (pa, pb) } else { (pb, pa) };
    while !r1.is_zero() {
        if r1.degree_in(main) == 0 {
            r0 = Poly::one();
            break;
        }
        let r = pseudo_rem(&r0, &r1, main);
        r0 = r1;
        r1 = if r.is_zero() { r } else { content_split(&r, main, rest).1 };
    }
    (&content * &r0).monic()
}

/// `(content, primitive part)` of `a` as a polynomial in `main`.
pub(crate) fn content_split(a: &Poly, main: Var, rest: &[Var]) -> (Poly, Poly) {
    let mut content = Poly::zero();
    for c in a.coeffs_in(main) {
        if c.is_zero() {
            continue;
        }
        content = gcd_in(&content, &c, rest);
        if content.is_constant() {
            break;
        }
    }
    let content = content.monic();
    let pp = a.div_exact(&content).expect("content divides every coefficient");
    (content, pp)
}

/// Content of `a` with respect to `v`, over all other variables.
pub(crate) fn content_in(a: &Poly, v: Var) -> Poly {
    let rest: Vec<Var> = Var::ALL.into_iter().filter(|w| *w != v).collect();
    content_split(a, v, &rest).0
}

fn pseudo_rem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let lb = b.coeffs_in(v).pop().expect("nonzero divisor");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coeffs_in(v).pop().expect("nonzero remainder");
        let mut shift = Monomial::ONE;
        shift.0[v.index()] = dr - db;
        r = &(&r * &lb) - &(&lr * b).mul_monomial(&shift, &Rational::one());
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(gcd(&p("x^2 - y^2"), &p("x - y")), p("x - y"));
        assert_eq!(gcd(&p("x"), &p("y")), Poly::one());
        assert_eq!(gcd(&p("(x + y)^2*z"), &p("(x + y)*z^2")), p("(x + y)*z"));
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
        assert_eq!(gcd(&Poly::zero(), &p("-2*x + 4")), p("x - 2"));
        assert_eq!(gcd(&p("3"), &p("x")), Poly::one());
    }

    #[test]
    fn nested_contents() {
        let a = p("(y*z - 1)*(x^2 + z)*(x - y)");
        let b = p("(y*z - 1)*(x - y)^2*(z + 2)");
        assert_eq!(gcd(&a, &b), p("(y*z - 1)*(x - y)").monic());
    }

    #[test]
    fn content_with_respect_to_variable() {
        let a = p("(y^2 - 1)*x^2 + (y + 1)*x");
        assert_eq!(content_in(&a, Var::X), p("y + 1"));
    }
}
