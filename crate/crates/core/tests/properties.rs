use num_traits::Zero;
use pba_core::cm_exact::{lift_at_origin, TruncatedSeries};
use pba_core::poisson::{
    bracket, cross, curl, cycle_variables, dot, grad, hamiltonian, is_poisson_triple, jacobiator, qm_exact_triple,
    PoissonTriple, PolyVec,
};
use pba_core::poly::{factor_bounded, gcd, squarefree_decomposition};
use pba_core::{parse, render, Monomial, Poly, Rational, Var};
use proptest::prelude::*;

/// Polynomials of total degree at most `deg` with up to `terms` terms.
fn poly(deg: u32, terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=deg, 0..=deg, 0..=deg, -5i64..=5, 1i64..=3), 0..=terms).prop_map(move |ts| {
        let mut p = Poly::zero();
        for (a, b, c, n, d) in ts {
            if a + b + c <= deg {
                p.add_term(Monomial::new(a, b, c), Rational::new(n.into(), d.into()));
            }
        }
        p
    })
}

fn nonzero(deg: u32, terms: usize) -> impl Strategy<Value = Poly> {
    poly(deg, terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn vec3(deg: u32) -> impl Strategy<Value = PolyVec> {
    (poly(deg, 4), poly(deg, 4), poly(deg, 4)).prop_map(|(f, g, h)| PolyVec::new(f, g, h))
}

fn same_up_to_unit(a: &Poly, b: &Poly) -> bool {
    a.monic() == b.monic()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(3, 5), b in poly(3, 5), c in poly(3, 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn derivative_leibniz(a in poly(3, 5), b in poly(3, 5)) {
        for v in Var::ALL {
            let lhs = (&a * &b).derivative(v);
            let rhs = &a.derivative(v) * &b + &a * &b.derivative(v);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn parse_render_round_trip(a in poly(4, 6), b in poly(4, 6)) {
        let text = render(&a);
        prop_assert_eq!(parse(&text).unwrap(), a.clone());
        if a != b {
            prop_assert_ne!(text, render(&b));
        }
    }

    #[test]
    fn truncation_is_a_ring_map(a in poly(4, 5), b in poly(4, 5), cap in 0u32..5) {
        prop_assert_eq!((&a + &b).truncated(cap), &a.truncated(cap) + &b.truncated(cap));
        prop_assert_eq!((&a * &b).truncated(cap), (&a.truncated(cap) * &b.truncated(cap)).truncated(cap));
        let sa = TruncatedSeries::truncate(&a, cap);
        let sb = TruncatedSeries::truncate(&b, cap);
        let prod = sa.mul(&sb).unwrap();
        prop_assert_eq!(prod.poly(), &(&a * &b).truncated(cap));
    }

    #[test]
    fn vector_identities(f in poly(3, 4), v in vec3(3), w in vec3(2)) {
        prop_assert!(curl(&grad(&f)).is_zero());
        let lhs = curl(&v.scale(&f));
        prop_assert_eq!(lhs, curl(&v).scale(&f).sub(&cross(&v, &grad(&f))));
        prop_assert!(dot(&v, &cross(&v, &w)).is_zero());
    }

    #[test]
    fn bracket_is_an_antisymmetric_biderivation(f in vec3(2), a in poly(2, 3), b in poly(2, 3), c in poly(2, 3)) {
        let t = PoissonTriple::unverified(f);
        prop_assert_eq!(bracket(&t, &a, &b), -bracket(&t, &b, &a));
        let lhs = bracket(&t, &a, &(&b * &c));
        prop_assert_eq!(lhs, &bracket(&t, &a, &b) * &c + &b * &bracket(&t, &a, &c));
        // the Hamiltonian field of a applied to b is {a, b}
        prop_assert_eq!(dot(&hamiltonian(&t, &a), &grad(&b)), bracket(&t, &a, &b));
    }

    #[test]
    fn qm_exact_is_antisymmetric(s in nonzero(2, 3), t in nonzero(2, 3)) {
        prop_assume!(gcd(&s, &t).is_constant());
        let st = qm_exact_triple(&s, &t).unwrap();
        let ts = qm_exact_triple(&t, &s).unwrap();
        prop_assert_eq!(st.vec, ts.vec.neg());
    }

    #[test]
    fn m_exact_triples_satisfy_jacobi(a in poly(3, 4), b in poly(2, 3), u in poly(2, 3), v in poly(2, 3)) {
        let f = grad(&a).scale(&b);
        prop_assert!(is_poisson_triple(&f));
        let t = PoissonTriple::verify(f.clone()).unwrap();
        prop_assert!(jacobiator(&t, &u, &v, &Poly::z()).is_zero());
        let cycled = cycle_variables(&f);
        prop_assert!(is_poisson_triple(&cycled));
        prop_assert!(is_poisson_triple(&cycle_variables(&cycled)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gcd_of_multiples(p in nonzero(2, 3), q in nonzero(2, 3), r in nonzero(2, 3)) {
        let g = gcd(&(&p * &r), &(&q * &r));
        prop_assert!(same_up_to_unit(&g, &(&gcd(&p, &q) * &r)));
    }

    #[test]
    fn squarefree_reconstructs(p in nonzero(2, 3), q in nonzero(1, 3)) {
        let input = &p * &q.pow(2);
        let d = squarefree_decomposition(&input).unwrap();
        prop_assert_eq!(d.expand(), input);
        for (i, a) in d.parts.iter().enumerate() {
            for b in &d.parts[i + 1..] {
                prop_assert!(gcd(&a.factor, &b.factor).is_constant());
            }
            let sq = squarefree_decomposition(&a.factor).unwrap();
            prop_assert!(sq.parts.iter().all(|s| s.multiplicity == 1));
        }
    }

    #[test]
    fn factors_multiply_back(p in nonzero(2, 3), q in nonzero(2, 3)) {
        let input = &p * &q;
        let fact = factor_bounded(&input, 2).unwrap();
        prop_assert_eq!(fact.expand(), input);
        for f in &fact.factors {
            let again = factor_bounded(&f.poly, 2).unwrap();
            prop_assert!(again.is_complete());
            prop_assert_eq!(again.factors.len(), 1);
            prop_assert_eq!(&again.factors[0].poly, &f.poly);
            prop_assert_eq!(again.factors[0].multiplicity, 1);
        }
    }

    #[test]
    fn lift_is_deterministic_and_exact(a in poly(3, 4), b in poly(2, 3), c in 1i64..4, weight in 1u32..5) {
        // b + c and a + x + y keep f(0), g(0) nonzero whenever possible
        let bb = &b + &Poly::int(c);
        let aa = &a + &Poly::x() + Poly::y();
        let f = PoissonTriple::verify(grad(&aa).scale(&bb)).unwrap();
        let origin = f.vec.0.iter().take(2).all(|q| !q.coeff(&Monomial::ONE).is_zero());
        prop_assume!(origin);
        let first = lift_at_origin(&f, weight).unwrap();
        prop_assert_eq!(&first, &lift_at_origin(&f, weight).unwrap());
        let res = first.residual(&f.vec).unwrap();
        prop_assert!(res.iter().all(TruncatedSeries::is_zero));
        // the g-coefficients with a z in them are never solved for, only reproduced
        let gd = first.b.mul(&first.d.derivative(Var::Y)).unwrap();
        for (m, c) in f.vec.g().terms().filter(|(m, _)| m.exp(Var::Z) >= 1 && m.degree() <= weight) {
            prop_assert_eq!(&gd.coeff(m), c);
        }
    }
}
