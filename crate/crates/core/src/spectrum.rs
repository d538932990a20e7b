//! Poisson prime, primitive and maximal ideals of the bracket
//! `t grad s - s grad t` for coprime `s, t`.
//!
//! The nonzero Poisson primes are the primes containing the ideal `I`
//! generated by the three bracket components, and the principal primes `uA`
//! with `u` an irreducible factor of a pencil member `lambda s - mu t`.
//! Poisson maximal ideals are the points of `V(I)`; `uA` is primitive iff
//! `u` has multiplicity one in its pencil member.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Eliminant, GroebnerBasis, TermOrder};
use crate::parser::{parse_rational, render_rational};
use crate::poisson::{generates_poisson_ideal, qm_exact_triple, PoissonTriple};
use crate::poly::{factor_bounded, Point, Poly, Rational, Var};

/// A point `(lambda : mu)` of the projective line, scaled so the first
/// nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PencilParameter {
    lambda: Rational,
    mu: Rational,
}

impl PencilParameter {
    pub fn new(lambda: Rational, mu: Rational) -> Result<Self> {
        if !lambda.is_zero() {
            let mu = &mu / &lambda;
            Ok(PencilParameter { lambda: Rational::one(), mu })
        } else if !mu.is_zero() {
            Ok(PencilParameter { lambda: Rational::zero(), mu: Rational::one() })
        } else {
            Err(Error::InvalidPencil("0:0".into()))
        }
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }
}

impl FromStr for PencilParameter {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidPencil(text.to_string());
        let (l, m) = text.split_once(':').ok_or_else(bad)?;
        let lambda = parse_rational(l).map_err(|_| bad())?;
        let mu = parse_rational(m).map_err(|_| bad())?;
        PencilParameter::new(lambda, mu).map_err(|_| bad())
    }
}

impl fmt::Display for PencilParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", render_rational(&self.lambda), render_rational(&self.mu))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointKind {
    CommonZero,
    SingularPoint(PencilParameter),
    NotPoisson,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub point: Point,
    pub kind: PointKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightOnePrime {
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub generator: Poly,
    pub multiplicity: u32,
    pub primitive: bool,
    pub absolutely_irreducible_certified: bool,
}

/// Height-one Poisson primes from one pencil member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilPrimes {
    pub parameter: PencilParameter,
    pub member: Poly,
    pub primes: Vec<HeightOnePrime>,
    /// Cofactors whose factorization the degree bound could not settle.
    pub unresolved: Vec<(Poly, u32)>,
}

impl PencilPrimes {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// The primes containing the bracket-components ideal `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduallyNull {
    pub ideal: GroebnerBasis,
    /// Krull dimension of `A/I`; `-1` when `I = A`.
    pub dimension: i32,
    /// Rational Poisson maximal points, listed only when `dimension == 0`.
    pub points: Vec<PointClass>,
    /// False when some points of `V(I)` are irrational (or not enumerated).
    pub points_complete: bool,
    pub eliminants: Vec<Eliminant>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumFlags {
    pub factorization_complete: bool,
    pub finitely_many_poisson_maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub s: Poly,
    pub t: Poly,
    pub triple: PoissonTriple,
    pub residually_null: ResiduallyNull,
    pub height_one: Vec<PencilPrimes>,
    pub max_deg: u32,
    pub flags: SpectrumFlags,
}

/// The Poisson core of a maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoissonCore {
    Maximal(Point),
    Principal { generator: Poly, parameter: PencilParameter },
}

/// Groebner basis of the ideal generated by `{y,z}`, `{z,x}`, `{x,y}`.
pub fn residually_null_ideal(f: &PoissonTriple) -> Result<GroebnerBasis> {
    let f = f.ensure_verified()?;
    Ok(buchberger(&f.vec.0, TermOrder::GrLex))
}

pub fn pencil_member(s: &Poly, t: &Poly, param: &PencilParameter) -> Poly {
    s.scale(&param.lambda) - t.scale(&param.mu)
}

/// Decides whether `p` is a Poisson point for the bracket of `(s, t)`.
pub fn classify_point(s: &Poly, t: &Poly, p: &Point) -> PointClass {
    let sp = s.evaluate(p);
    let tp = t.evaluate(p);
    let kind = if sp.is_zero() && tp.is_zero() {
        PointKind::CommonZero
    } else {
        let param = PencilParameter::new(tp, sp).expect("not both zero");
        let member = pencil_member(s, t, &param);
        if Var::ALL.iter().all(|&v| member.derivative(v).evaluate(p).is_zero()) {
            PointKind::SingularPoint(param)
        } else {
            PointKind::NotPoisson
        }
    };
    PointClass { point: p.clone(), kind }
}

pub fn poisson_maximal_locus(s: &Poly, t: &Poly) -> Result<ResiduallyNull> {
    let triple = qm_exact_triple(s, t)?;
    locus_of(s, t, &triple)
}

fn locus_of(s: &Poly, t: &Poly, triple: &PoissonTriple) -> Result<ResiduallyNull> {
    let ideal = residually_null_ideal(triple)?;
    let dimension = ideal.dimension();
    if dimension > 0 {
        return Ok(ResiduallyNull { ideal, dimension, points: vec![], points_complete: false, eliminants: vec![] });
    }
    let found = ideal.rational_points()?;
    let points = found.points.iter().map(|p| classify_point(s, t, p)).collect();
    Ok(ResiduallyNull { ideal, dimension, points, points_complete: found.complete, eliminants: found.eliminants })
}

/// Factors of one pencil member; each factor generates a Poisson prime.
pub fn height_one_primes(s: &Poly, t: &Poly, param: &PencilParameter, max_deg: u32) -> Result<PencilPrimes> {
    let triple = qm_exact_triple(s, t)?;
    pencil_primes(s, t, &triple, param, max_deg)
}

fn pencil_primes(
    s: &Poly,
    t: &Poly,
    triple: &PoissonTriple,
    param: &PencilParameter,
    max_deg: u32,
) -> Result<PencilPrimes> {
    let member = pencil_member(s, t, param);
    if member.is_constant() {
        return Err(Error::Precondition(format!("pencil member at {param} is the constant {member}")));
    }
    let fact = factor_bounded(&member, max_deg)?;
    let mut primes = Vec::with_capacity(fact.factors.len());
    for f in &fact.factors {
        assert!(generates_poisson_ideal(triple, &f.poly)?, "factor {} does not generate a Poisson ideal", f.poly);
        primes.push(HeightOnePrime {
            generator: f.poly.integer_primitive().1,
            multiplicity: f.multiplicity,
            primitive: f.multiplicity == 1,
            absolutely_irreducible_certified: f.absolutely_irreducible,
        });
    }
    Ok(PencilPrimes { parameter: param.clone(), member, primes, unresolved: fact.incomplete })
}

/// `P(M)` for the maximal ideal `M` of the point `p`.
pub fn poisson_core_of_point(s: &Poly, t: &Poly, p: &Point, max_deg: u32) -> Result<PoissonCore> {
    qm_exact_triple(s, t)?;
    let param = match classify_point(s, t, p).kind {
        PointKind::CommonZero | PointKind::SingularPoint(_) => return Ok(PoissonCore::Maximal(p.clone())),
        PointKind::NotPoisson => {
            PencilParameter::new(t.evaluate(p), s.evaluate(p)).expect("not a common zero")
        }
    };
    let member = pencil_member(s, t, &param);
    let fact = factor_bounded(&member, max_deg)?;
    let mut vanishing = fact.factors.iter().filter(|f| f.poly.evaluate(p).is_zero());
    match vanishing.next() {
        Some(u) => {
            debug_assert!(vanishing.next().is_none(), "p is a smooth point of the member");
            Ok(PoissonCore::Principal { generator: u.poly.clone(), parameter: param })
        }
        None => {
            let (poly, _) = fact
                .incomplete
                .iter()
                .find(|(q, _)| q.evaluate(p).is_zero())
                .expect("some factor of the member vanishes at p");
            Err(Error::IncompleteFactorization { poly: poly.clone(), bound: max_deg })
        }
    }
}

/// Whether `A / fA` is Poisson simple for the pencil member `f`, decided by
/// smoothness of the surface `f = 0`.
pub fn is_poisson_simple_quotient(s: &Poly, t: &Poly, param: &PencilParameter, max_deg: u32) -> Result<bool> {
    let locus = poisson_maximal_locus(s, t)?;
    if locus.dimension > 0 {
        return Err(Error::Precondition(format!(
            "infinitely many Poisson maximal ideals (V(I) has dimension {})",
            locus.dimension
        )));
    }
    let member = pencil_member(s, t, param);
    if member.is_constant() {
        return Err(Error::Precondition(format!("pencil member at {param} is constant")));
    }
    let fact = factor_bounded(&member, max_deg)?;
    if !fact.is_complete() {
        let (poly, _) = fact.incomplete[0].clone();
        return Err(Error::IncompleteFactorization { poly, bound: max_deg });
    }
    if fact.factors.len() != 1 || fact.factors[0].multiplicity != 1 {
        return Err(Error::Precondition(format!("pencil member {member} is reducible")));
    }
    let mut gens = vec![member.clone()];
    gens.extend(Var::ALL.map(|v| member.derivative(v)));
    Ok(buchberger(&gens, TermOrder::GrLex).is_unit_ideal())
}

pub fn spectrum_report(s: &Poly, t: &Poly, params: &[PencilParameter], max_deg: u32) -> Result<SpectrumReport> {
    let triple = qm_exact_triple(s, t)?;
    let residually_null = locus_of(s, t, &triple)?;
    let height_one = params
        .par_iter()
        .map(|param| pencil_primes(s, t, &triple, param, max_deg))
        .collect::<Result<Vec<_>>>()?;
    let flags = SpectrumFlags {
        factorization_complete: height_one.iter().all(PencilPrimes::is_complete),
        finitely_many_poisson_maximal: residually_null.dimension <= 0,
    };
    Ok(SpectrumReport { s: s.clone(), t: t.clone(), triple, residually_null, height_one, max_deg, flags })
}

impl SpectrumReport {
    pub fn maximal_points(&self) -> Vec<Point> {
        self.residually_null.points.iter().map(|c| c.point.clone()).collect()
    }

    pub fn pencil(&self, param: &PencilParameter) -> Option<&PencilPrimes> {
        self.height_one.iter().find(|h| &h.parameter == param)
    }
}
