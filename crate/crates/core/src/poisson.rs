//! Poisson triples on `Q[x, y, z]`.
//!
//! A triple `F = (f, g, h)` stands for the bracket with `{y,z} = f`,
//! `{z,x} = g`, `{x,y} = h`, i.e. `{b,c} = det(F; grad b; grad c)`. It is a
//! Poisson bracket exactly when `F . curl F = 0`.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::poly::{gcd, Poly, Var};

/// An element of `A^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyVec(pub [Poly; 3]);

impl PolyVec {
    pub fn new(f: Poly, g: Poly, h: Poly) -> Self {
        PolyVec([f, g, h])
    }

    pub fn zero() -> Self {
        PolyVec::new(Poly::zero(), Poly::zero(), Poly::zero())
    }

    pub fn f(&self) -> &Poly {
        &self.0[0]
    }

    pub fn g(&self) -> &Poly {
        &self.0[1]
    }

    pub fn h(&self) -> &Poly {
        &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, b: &Poly) -> PolyVec {
        PolyVec(self.0.each_ref().map(|c| b * c))
    }

    pub fn add(&self, other: &PolyVec) -> PolyVec {
        PolyVec(std::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }

    pub fn sub(&self, other: &PolyVec) -> PolyVec {
        PolyVec(std::array::from_fn(|i| &self.0[i] - &other.0[i]))
    }

    pub fn neg(&self) -> PolyVec {
        PolyVec(self.0.each_ref().map(|c| -c))
    }

    pub fn map(&self, op: impl Fn(&Poly) -> Poly) -> PolyVec {
        PolyVec(self.0.each_ref().map(op))
    }
}

impl Index<usize> for PolyVec {
    type Output = Poly;

    fn index(&self, i: usize) -> &Poly {
        &self.0[i]
    }
}

impl fmt::Display for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// A triple, flagged once `F . curl F = 0` has been checked or is known by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonTriple {
    pub vec: PolyVec,
    pub verified: bool,
}

impl PoissonTriple {
    pub fn unverified(vec: PolyVec) -> Self {
        PoissonTriple { vec, verified: false }
    }

    /// Checks the Jacobi criterion.
    pub fn verify(vec: PolyVec) -> Result<Self> {
        match poisson_witness(&vec) {
            None => Ok(PoissonTriple { vec, verified: true }),
            Some(w) => Err(Error::NotPoissonTriple(w)),
        }
    }

    fn trusted(vec: PolyVec) -> Self {
        debug_assert!(poisson_witness(&vec).is_none(), "constructor produced a non-Poisson triple {vec}");
        PoissonTriple { vec, verified: true }
    }

    /// Returns a verified copy, checking only if necessary.
    pub fn ensure_verified(&self) -> Result<Self> {
        if self.verified {
            Ok(self.clone())
        } else {
            PoissonTriple::verify(self.vec.clone())
        }
    }
}

pub fn grad(a: &Poly) -> PolyVec {
    PolyVec(Var::ALL.map(|v| a.derivative(v)))
}

pub fn curl(v: &PolyVec) -> PolyVec {
    let [f, g, h] = &v.0;
    PolyVec::new(
        h.derivative(Var::Y) - g.derivative(Var::Z),
        f.derivative(Var::Z) - h.derivative(Var::X),
        g.derivative(Var::X) - f.derivative(Var::Y),
    )
}

pub fn cross(a: &PolyVec, b: &PolyVec) -> PolyVec {
    PolyVec::new(
        &a.0[1] * &b.0[2] - &a.0[2] * &b.0[1],
        &a.0[2] * &b.0[0] - &a.0[0] * &b.0[2],
        &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0],
    )
}

pub fn dot(a: &PolyVec, b: &PolyVec) -> Poly {
    (0..3).fold(Poly::zero(), |acc, i| acc + &a.0[i] * &b.0[i])
}

/// Determinant of the Jacobian matrix with rows `grad a`, `grad b`, `grad c`.
pub fn jacobian_det(a: &Poly, b: &Poly, c: &Poly) -> Poly {
    dot(&grad(a), &cross(&grad(b), &grad(c)))
}

/// `{b, c}` for the bracket of `F`.
pub fn bracket(f: &PoissonTriple, b: &Poly, c: &Poly) -> Poly {
    dot(&f.vec, &cross(&grad(b), &grad(c)))
}

/// `({b,x}, {b,y}, {b,z})`, the coefficients of the derivation `{b, -}`.
pub fn hamiltonian(f: &PoissonTriple, b: &Poly) -> PolyVec {
    let [bx, by, bz] = grad(b).0;
    let [f, g, h] = &f.vec.0;
    PolyVec::new(g * &bz - h * &by, h * &bx - f * &bz, f * &by - g * &bx)
}

/// `{a,{b,c}} + {b,{c,a}} + {c,{a,b}}`.
pub fn jacobiator(f: &PoissonTriple, a: &Poly, b: &Poly, c: &Poly) -> Poly {
    bracket(f, a, &bracket(f, b, c)) + bracket(f, b, &bracket(f, c, a)) + bracket(f, c, &bracket(f, a, b))
}

/// `None` if `F . curl F = 0`, otherwise that nonzero polynomial.
pub fn poisson_witness(f: &PolyVec) -> Option<Poly> {
    let w = dot(f, &curl(f));
    (!w.is_zero()).then_some(w)
}

pub fn is_poisson_triple(f: &PolyVec) -> bool {
    poisson_witness(f).is_none()
}

/// `grad a`.
pub fn exact_triple(a: &Poly) -> PoissonTriple {
    PoissonTriple::trusted(grad(a))
}

/// `b grad a`.
pub fn m_exact_triple(b: &Poly, a: &Poly) -> PoissonTriple {
    PoissonTriple::trusted(grad(a).scale(b))
}

/// `t grad s - s grad t`, the bracket with `s/t` in the centre of the
/// fraction field.
pub fn qm_exact_triple(s: &Poly, t: &Poly) -> Result<PoissonTriple> {
    if s.is_zero() {
        return Err(Error::ZeroPolynomial("s"));
    }
    if t.is_zero() {
        return Err(Error::ZeroPolynomial("t"));
    }
    let common = gcd(s, t);
    if !common.is_constant() {
        return Err(Error::NotCoprime(common));
    }
    Ok(qm_exact_unchecked(s, t))
}

pub(crate) fn qm_exact_unchecked(s: &Poly, t: &Poly) -> PoissonTriple {
    PoissonTriple::trusted(grad(s).scale(t).sub(&grad(t).scale(s)))
}

/// Every `lambda F + mu G` is Poisson.
pub fn compatible(f: &PolyVec, g: &PolyVec) -> bool {
    is_poisson_triple(f) && is_poisson_triple(g) && (dot(f, &curl(g)) + dot(g, &curl(f))).is_zero()
}

/// Compatibility of `c grad a` and `d grad b`, via
/// `c J(a,b,d) - d J(a,b,c) = 0`.
pub fn compatible_m_exact(c: &Poly, a: &Poly, d: &Poly, b: &Poly) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial("d"));
    }
    let delta = |e: &Poly| jacobian_det(a, b, e);
    Ok((c * &delta(d) - d * &delta(c)).is_zero())
}

pub fn is_poisson_central(f: &PoissonTriple, p: &Poly) -> bool {
    hamiltonian(f, p).is_zero()
}

/// Whether `pA` is a Poisson ideal.
pub fn generates_poisson_ideal(f: &PoissonTriple, p: &Poly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("ideal generator"));
    }
    Ok(hamiltonian(f, p).0.iter().all(|c| p.divides(c)))
}

/// Transports a triple along the automorphism `x -> z, y -> x, z -> y`,
/// which moves components `(g, h)` into the first two slots.
pub fn cycle_variables(f: &PolyVec) -> PolyVec {
    let [f, g, h] = &f.0;
    PolyVec::new(g.rotate_vars_back(), h.rotate_vars_back(), f.rotate_vars_back())
}
