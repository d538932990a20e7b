//! Formal factorization `F = b grad d` in `Q[[x, y, z]]`, computed modulo
//! a power of the maximal ideal.
//!
//! Near a point where `f` and `g` do not vanish, the coefficients of `b` and
//! `d` are found weight by weight from the coefficient equations of
//! `b d_x = f`, `b d_y = g`, `b d_z = h`. Only the slices `g_{ij0}` of `g`
//! enter; the remaining coefficients of `g` are reproduced because `F` is
//! Poisson, which the final congruence check confirms.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poisson::{cycle_variables, PoissonTriple, PolyVec};
use crate::poly::{Monomial, Point, Poly, Rational, Var};

/// A polynomial read modulo terms of total degree above `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: Poly,
    cap: u32,
}

impl TruncatedSeries {
    pub fn truncate(p: &Poly, cap: u32) -> Self {
        TruncatedSeries { poly: p.truncated(cap), cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.poly.coeff(m)
    }

    fn same_cap(&self, other: &Self) -> Result<u32> {
        if self.cap == other.cap {
            Ok(self.cap)
        } else {
            Err(Error::CapMismatch(self.cap, other.cap))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let cap = self.same_cap(other)?;
        Ok(TruncatedSeries { poly: &self.poly + &other.poly, cap })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let cap = self.same_cap(other)?;
        Ok(TruncatedSeries { poly: &self.poly - &other.poly, cap })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let cap = self.same_cap(other)?;
        let mut out = Poly::zero();
        for (ma, ca) in self.poly.terms() {
            for (mb, cb) in other.poly.terms() {
                let m = ma.mul(mb);
                if m.degree() <= cap {
                    out.add_term(m, ca * cb);
                }
            }
        }
        Ok(TruncatedSeries { poly: out, cap })
    }

    /// Partial derivative; known one degree less far than the input.
    pub fn derivative(&self, v: Var) -> Self {
        let cap = self.cap.saturating_sub(1);
        TruncatedSeries::truncate(&self.poly.derivative(v), cap)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.poly, self.cap + 1)
    }
}

/// The free choices made by the lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftConventions {
    /// Constant term of `d`, which no derivative sees.
    pub d_000: Rational,
    /// Coefficient of `x` in `d`.
    pub d_100: Rational,
    /// Coefficient of `x^(w+1)` in `d` for every weight `1 <= w <= W`.
    pub d_pure_x: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftResult {
    /// Known through degree `weight`.
    pub b: TruncatedSeries,
    /// Known through degree `weight + 1`.
    pub d: TruncatedSeries,
    pub weight: u32,
    pub conventions: LiftConventions,
}

impl LiftResult {
    /// `b grad d - F` through degree `weight`.
    pub fn residual(&self, f: &PolyVec) -> Result<[TruncatedSeries; 3]> {
        let w = self.weight;
        let mut out = Vec::with_capacity(3);
        for v in Var::ALL {
            let prod = self.b.mul(&self.d.derivative(v))?;
            out.push(prod.sub(&TruncatedSeries::truncate(&f[v.index()], w))?);
        }
        Ok(out.try_into().expect("three components"))
    }

    /// Every coefficient of `b grad d - F` of degree at most `weight` is zero.
    pub fn verify(&self, f: &PolyVec) -> bool {
        self.residual(f).is_ok_and(|r| r.iter().all(TruncatedSeries::is_zero))
    }
}

type Index3 = [u32; 3];

/// Coefficients assigned so far; reading an unassigned one is a bookkeeping
/// error in the sweep.
struct Unknowns {
    b: HashMap<Index3, Rational>,
    d: HashMap<Index3, Rational>,
}

impl Unknowns {
    fn b(&self, m: Index3) -> &Rational {
        self.b.get(&m).unwrap_or_else(|| panic!("b{m:?} read before it was solved"))
    }

    fn d(&self, m: Index3) -> &Rational {
        self.d.get(&m).unwrap_or_else(|| panic!("d{m:?} read before it was solved"))
    }

    /// Coefficient of `x^i y^j z^k` in `b * d_v`.
    fn product_coeff(&self, v: Var, m: Index3) -> Rational {
        let vi = v.index();
        let mut acc = Rational::zero();
        for a0 in 0..=m[0] {
            for a1 in 0..=m[1] {
                for a2 in 0..=m[2] {
                    let b = self.b([a0, a1, a2]);
                    let mut beta = [m[0] - a0, m[1] - a1, m[2] - a2];
                    let factor = beta[vi] + 1;
                    beta[vi] += 1;
                    let d = self.d(beta);
                    if !b.is_zero() && !d.is_zero() {
                        acc += b * d * Rational::from_integer(factor.into());
                    }
                }
            }
        }
        acc
    }

    /// Solves the coefficient equation at `m` of `b d_v = target` for one
    /// unknown that enters linearly with coefficient `scale`.
    fn solve(&mut self, v: Var, m: Index3, target: &Poly, unknown: Slot, scale: Rational) {
        assert!(!scale.is_zero());
        let slot = match unknown {
            Slot::B(i) => (&mut self.b, i),
            Slot::D(i) => (&mut self.d, i),
        };
        assert!(slot.0.insert(slot.1, Rational::zero()).is_none(), "{unknown:?} solved twice");
        let rest = self.product_coeff(v, m);
        let value = (target.coeff(&Monomial(m)) - rest) / scale;
        match unknown {
            Slot::B(i) => self.b.insert(i, value),
            Slot::D(i) => self.d.insert(i, value),
        };
    }
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    B(Index3),
    D(Index3),
}

/// Computes `b` through degree `w` and `d` through degree `w + 1` with
/// `b grad d = F` modulo degree `w + 1`. Needs `f(0) != 0` and `g(0) != 0`.
pub fn lift_at_origin(f: &PoissonTriple, weight: u32) -> Result<LiftResult> {
    let f = f.ensure_verified()?;
    let [ff, gg, hh] = &f.vec.0;
    let f000 = ff.coeff(&Monomial::ONE);
    let g000 = gg.coeff(&Monomial::ONE);
    if f000.is_zero() || g000.is_zero() {
        return Err(Error::Precondition("f and g must both be nonzero at the origin".into()));
    }
    let conventions =
        LiftConventions { d_000: Rational::zero(), d_100: Rational::one(), d_pure_x: Rational::zero() };
    let mut u = Unknowns { b: HashMap::new(), d: HashMap::new() };
    u.d.insert([0, 0, 0], conventions.d_000.clone());
    u.d.insert([1, 0, 0], conventions.d_100.clone());

    for w in 0..=weight {
        if w >= 1 {
            u.d.insert([w + 1, 0, 0], conventions.d_pure_x.clone());
        }
        for i in (0..=w).rev() {
            for j in (0..=w - i).rev() {
                let k = w - i - j;
                // b_{ijk} enters (ff)_{ijk} through b_{ijk} d_100
                u.solve(Var::X, [i, j, k], ff, Slot::B([i, j, k]), conventions.d_100.clone());
            }
            let b000 = u.b([0, 0, 0]).clone();
            let j = w - i;
            u.solve(Var::Y, [i, j, 0], gg, Slot::D([i, j + 1, 0]), &b000 * Rational::from_integer((j + 1).into()));
            for j in (0..=w - i).rev() {
                let k = w - i - j;
                u.solve(Var::Z, [i, j, k], hh, Slot::D([i, j, k + 1]), &b000 * Rational::from_integer((k + 1).into()));
            }
        }
    }

    let collect = |map: &HashMap<Index3, Rational>, cap: u32| {
        TruncatedSeries::truncate(&Poly::from_terms(map.iter().map(|(m, c)| (Monomial(*m), c.clone()))), cap)
    };
    let result = LiftResult { b: collect(&u.b, weight), d: collect(&u.d, weight + 1), weight, conventions };
    debug_assert_eq!(u.b.len(), (0..=weight as usize).map(|w| (w + 1) * (w + 2) / 2).sum::<usize>());
    Ok(result)
}

/// Evidence that a triple is `b grad d` near some point.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Certificate {
    /// At most one component is nonzero, so `F = b grad d` globally.
    Direct { b: Poly, d: Poly },
    /// A lift of the triple obtained by `cycles` applications of
    /// [`cycle_variables`] followed by translating `point` to the origin.
    Lift { point: Point, cycles: u32, triple: PolyVec, lift: LiftResult },
}

impl Certificate {
    /// Re-checks the certificate against `F`.
    pub fn verify(&self, f: &PolyVec) -> bool {
        match self {
            Certificate::Direct { b, d } => {
                let g = crate::poisson::grad(d).scale(b);
                &g == f
            }
            Certificate::Lift { point, cycles, triple, lift } => {
                let mut g = f.clone();
                for _ in 0..*cycles {
                    g = cycle_variables(&g);
                }
                g.map(|c| c.translate(point)) == *triple && lift.verify(triple)
            }
        }
    }
}

/// Finds a point where two components of `F` are nonzero and lifts there.
pub fn cm_certificate(f: &PoissonTriple, weight: u32, search_box: u32) -> Result<Certificate> {
    let f = f.ensure_verified()?;
    let nonzero: Vec<bool> = f.vec.0.iter().map(|c| !c.is_zero()).collect();
    let direct = |k: usize| Certificate::Direct { b: f.vec[k].clone(), d: Poly::var(Var::from_index(k)) };
    let cycles = match nonzero[..] {
        [true, true, _] => 0,
        [_, true, true] => 1,
        [true, _, true] => 2,
        [false, false, false] => return Ok(Certificate::Direct { b: Poly::zero(), d: Poly::x() }),
        _ => return Ok(direct(nonzero.iter().position(|&n| n).expect("one nonzero component"))),
    };
    let mut g = f.vec.clone();
    for _ in 0..cycles {
        g = cycle_variables(&g);
    }
    let fg = g.f() * g.g();
    let point = search_points(search_box)
        .find(|p| !fg.evaluate(p).is_zero())
        .ok_or(Error::NoPointFound(search_box))?;
    let triple = g.map(|c| c.translate(&point));
    let lift = lift_at_origin(&PoissonTriple::verify(triple.clone())?, weight)?;
    Ok(Certificate::Lift { point, cycles, triple, lift })
}

/// Integer points of `[-n, n]^3` by increasing max-norm, then the points
/// with half-integer coordinates, each shell in lexicographic order.
fn search_points(n: u32) -> impl Iterator<Item = Point> {
    let n = n as i64;
    let shells = |scale: i64, skip_integral: bool| {
        let r = n * scale;
        (0..=r).flat_map(move |norm| {
            let mut pts = Vec::new();
            for a in -norm..=norm {
                for b in -norm..=norm {
                    for c in -norm..=norm {
                        let coords = [a, b, c];
                        if coords.iter().map(|v| v.abs()).max() != Some(norm) {
                            continue;
                        }
                        if skip_integral && coords.iter().all(|v| v % scale == 0) {
                            continue;
                        }
                        pts.push(coords.map(|v| Rational::new(v.into(), scale.into())));
                    }
                }
            }
            pts
        })
    };
    shells(1, false).chain(shells(2, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::poisson::{exact_triple, m_exact_triple};
    use crate::poly::{point, ratio};

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn truncation_arithmetic() {
        assert_eq!(TruncatedSeries::truncate(&p("x^3 + x"), 2).poly(), &p("x"));
        let a = TruncatedSeries::truncate(&p("1 + x"), 1);
        let b = TruncatedSeries::truncate(&p("1 - x"), 1);
        assert_eq!(a.mul(&b).unwrap().poly(), &p("1"));
        let c = TruncatedSeries::truncate(&p("1 - x"), 2);
        assert_eq!(a.mul(&c), Err(Error::CapMismatch(1, 2)));
    }

    #[test]
    fn lift_of_translated_exact_triple() {
        let f = exact_triple(&p("x*y*z")).vec.map(|c| c.translate(&point(1, 1, 1)));
        let lift = lift_at_origin(&PoissonTriple::verify(f.clone()).unwrap(), 4).unwrap();
        assert!(lift.verify(&f));
        assert_eq!(lift.b.cap(), 4);
        assert_eq!(lift.d.cap(), 5);
        assert_eq!(lift.d.coeff(&Monomial::new(1, 0, 0)), ratio(1, 1));
        assert!(lift.d.coeff(&Monomial::new(3, 0, 0)).is_zero());
    }

    #[test]
    fn lift_of_m_exact_triple() {
        let f = m_exact_triple(&p("1 + x"), &p("x + y + z^2"));
        let lift = lift_at_origin(&f, 5).unwrap();
        assert!(lift.verify(&f.vec));
        assert_eq!(lift, lift_at_origin(&f, 5).unwrap());
    }

    #[test]
    fn lift_needs_nonzero_constants() {
        let f = PoissonTriple::verify(PolyVec::new(p("y"), p("-x"), p("0"))).unwrap();
        assert!(matches!(lift_at_origin(&f, 3), Err(Error::Precondition(_))));
        let bad = PoissonTriple::unverified(PolyVec::new(p("1 + y"), p("1 + z"), p("1 + x")));
        assert!(matches!(lift_at_origin(&bad, 3), Err(Error::NotPoissonTriple(_))));
    }

    #[test]
    fn certificates() {
        let sl2 = exact_triple(&p("1/2*z^2 - 2*x*y"));
        let cert = cm_certificate(&sl2, 4, 3).unwrap();
        assert!(cert.verify(&sl2.vec));
        match &cert {
            Certificate::Lift { point, cycles, .. } => {
                assert_eq!(*cycles, 0);
                assert_eq!(*point, crate::poly::point(-1, -1, -1));
            }
            other => panic!("unexpected {other:?}"),
        }
        let rot = PoissonTriple::verify(PolyVec::new(p("y"), p("-x"), p("0"))).unwrap();
        assert!(cm_certificate(&rot, 4, 2).unwrap().verify(&rot.vec));
        let single = PoissonTriple::verify(PolyVec::new(p("x*y + z"), p("0"), p("0"))).unwrap();
        assert_eq!(
            cm_certificate(&single, 4, 2).unwrap(),
            Certificate::Direct { b: p("x*y + z"), d: p("x") }
        );
        // x grad(yz) = (0, xz, xy) and y grad(xz) = (yz, 0, xy)
        for (b, a, cycles) in [("x", "y*z", 1), ("y", "x*z", 2)] {
            let t = m_exact_triple(&p(b), &p(a));
            let cert = cm_certificate(&t, 3, 2).unwrap();
            assert!(matches!(cert, Certificate::Lift { cycles: c, .. } if c == cycles));
            assert!(cert.verify(&t.vec));
        }
    }

    #[test]
    fn certificate_search_exhaustion() {
        // f*g vanishes on the integer and half-integer grid only at the origin
        let f = m_exact_triple(&p("1"), &p("x*y"));
        assert!(cm_certificate(&f, 2, 0).is_err());
        assert!(cm_certificate(&f, 2, 1).is_ok());
    }

    #[test]
    fn search_order() {
        let pts: Vec<Point> = search_points(1).take(2).collect();
        assert_eq!(pts, vec![point(0, 0, 0), point(-1, -1, -1)]);
        let total = search_points(1).count();
        // 27 integer points, then 125 - 27 half-integer ones
        assert_eq!(total, 27 + 98);
    }
}
