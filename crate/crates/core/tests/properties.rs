use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use padovan_core::exact_arith::{int_rational, parse_rational, rational};
use padovan_core::padovan_matrices::{b_power_closed, mp, GroupElementB, MpSequence};
use padovan_core::sequences::{biperiodic_terms, padovan, BiPeriodicParams, PadovanConvention};
use padovan_core::spectra::{cubic_discriminant, isolate_roots, mp1_verdict, RootClass};
use padovan_core::{BivariatePoly, CubicPoly, Mat3, QuadraticSurd, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rational(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn surd() -> impl Strategy<Value = QuadraticSurd> {
    (small_rational(), small_rational()).prop_map(|(r, c)| QuadraticSurd::new(r, c))
}

fn matrix() -> impl Strategy<Value = Mat3<Rational>> {
    proptest::array::uniform9(small_rational()).prop_map(|e| Mat3::from_fn(|i, j| e[3 * i + j].clone()))
}

fn int_matrix() -> impl Strategy<Value = Mat3<BigInt>> {
    proptest::array::uniform9(-5i64..=5).prop_map(|e| Mat3::from_fn(|i, j| BigInt::from(e[3 * i + j])))
}

fn poly() -> impl Strategy<Value = BivariatePoly> {
    proptest::collection::vec((-4i64..=4, 0u32..4, 0u32..3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(BivariatePoly::zero(), |acc, (c, da, db)| {
            let a_pow = (0..da).fold(BivariatePoly::one(), |p, _| p * BivariatePoly::a());
            let b_pow = (0..db).fold(BivariatePoly::one(), |p, _| p * BivariatePoly::b());
            acc + BivariatePoly::constant(BigInt::from(c)) * a_pow * b_pow
        })
    })
}

proptest! {
    #[test]
    fn rationals_are_normalized(p in -1000i64..1000, q in 1i64..1000) {
        let r = parse_rational(&format!("{p}/{q}")).unwrap();
        prop_assert!(r.denom().is_positive());
        prop_assert!(r.numer().gcd(r.denom()).is_one());
        prop_assert_eq!(r.clone(), rational(-p, -q));
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn surd_field_axioms(x in surd(), y in surd(), z in surd()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadraticSurd::one());
        }
        prop_assert_eq!(x.norm(), (&x * &x.conjugate()).rat().clone());
    }

    #[test]
    fn surd_order_matches_floats(x in surd(), y in surd()) {
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x < y, fx < fy);
        }
    }

    #[test]
    fn poly_eval_is_a_ring_homomorphism(p in poly(), q in poly(), a in small_rational(), b in small_rational()) {
        let ev = |x: &BivariatePoly| x.eval(&a, &b);
        prop_assert_eq!(ev(&(&p + &q)), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&(&p * &q)), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&(&p - &q)), ev(&p) - ev(&q));
    }

    #[test]
    fn mat_pow_adds_exponents(m in int_matrix(), n in 0u64..12, k in 0u64..12) {
        prop_assert_eq!(m.pow(n + k), m.pow(n).matmul(&m.pow(k)));
    }

    #[test]
    fn determinant_is_multiplicative(x in matrix(), y in matrix()) {
        prop_assert_eq!(x.matmul(&y).det(), x.det() * y.det());
    }

    #[test]
    fn trace_is_similarity_invariant(m in matrix(), p in matrix()) {
        if let Some(p_inv) = p.inverse() {
            prop_assert_eq!(p.matmul(&m).matmul(&p_inv).trace(), m.trace());
            prop_assert_eq!(p.matmul(&m).matmul(&p_inv).char_poly(), m.char_poly());
        }
    }

    #[test]
    fn diagonal_char_poly_has_the_diagonal_as_roots(d in proptest::array::uniform3(small_rational())) {
        let m = Mat3::diagonal(d.clone());
        let [x, y, z] = d;
        prop_assert_eq!(m.char_poly(), CubicPoly::from_roots(x, y, z));
    }

    #[test]
    fn cayley_hamilton(m in matrix()) {
        let c = m.char_poly();
        let residual = m.pow(3).scale(&c.c3) + m.pow(2).scale(&c.c2) + m.scale(&c.c1)
            + Mat3::identity().scale(&c.c0);
        prop_assert!(residual.is_zero());
    }

    #[test]
    fn mp_family_commutes(a in nonzero_rational(), b in nonzero_rational(), n in 0usize..12, k in 0usize..12) {
        let params = BiPeriodicParams::numeric(a, b).unwrap();
        let (x, y) = (mp(n, &params), mp(k, &params));
        prop_assert_eq!(x.matmul(&y), y.matmul(&x));
    }

    #[test]
    fn numeric_mp_is_the_symbolic_mp_evaluated(a in nonzero_rational(), b in nonzero_rational(), n in 0usize..16) {
        let params = BiPeriodicParams::numeric(a, b).unwrap();
        let m = mp(n, &params);
        let sym = MpSequence::symbolic().get(n).clone();
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(sym.get(i, j).eval(params.a(), params.b()), m.get(i, j).clone());
            }
        }
    }

    #[test]
    fn biperiodic_terms_follow_the_parity_recurrence(a in nonzero_rational(), b in nonzero_rational()) {
        let params = BiPeriodicParams::numeric(a.clone(), b.clone()).unwrap();
        let t = biperiodic_terms(20, &params);
        for n in 3..=20usize {
            let c = if n % 2 == 0 { &a } else { &b };
            prop_assert_eq!(t[n].clone(), c * &t[n - 2] + &t[n - 3]);
        }
    }

    #[test]
    fn det_of_m1_is_one(a in nonzero_rational(), b in nonzero_rational()) {
        let params = BiPeriodicParams::numeric(a, b).unwrap();
        prop_assert!(mp(1, &params).det().is_one());
    }

    #[test]
    fn padovan_recurrence_holds_everywhere(n in -40i64..200) {
        for conv in [PadovanConvention::Classic, PadovanConvention::Shifted] {
            prop_assert_eq!(padovan(n, conv), padovan(n - 2, conv) + padovan(n - 3, conv));
        }
    }

    #[test]
    fn b_group_is_indexed_by_addition(n in -50i64..50, m in -50i64..50, a in small_rational()) {
        let x = GroupElementB::new(n, a.clone());
        let y = GroupElementB::new(m, a.clone());
        prop_assert_eq!(x.matrix().matmul(&y.matrix()), b_power_closed(n + m, &a));
        prop_assert_eq!(x.compose(&x.inverse()).matrix(), Mat3::identity());
    }

    #[test]
    fn classification_agrees_with_isolation(p in -40i64..40, q in 1i64..8) {
        let a = rational(p, q);
        let class = mp1_verdict(&a).classification;
        let isolated = isolate_roots(&a, 1e-10).is_ok();
        prop_assert_eq!(class == RootClass::ThreeDistinctReal, isolated);
        prop_assert_eq!(class == RootClass::ThreeDistinctReal, cubic_discriminant(&a) > int_rational(0));
    }
}
