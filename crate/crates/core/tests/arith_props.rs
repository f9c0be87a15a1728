use iyang::arith::{GaussRat, Poly, RatFunc, Rational, SeriesU};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-20i64..=20, 1i64..=12).prop_map(|(a, b)| Rational::new(a, b)),
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(a, b)| Rational::new(a, b)),
    ]
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    ((-5i64..=5, 1i64..=4), (-5i64..=5, 1i64..=4))
        .prop_map(|((a, b), (c, d))| GaussRat::new(Rational::new(a, b), Rational::new(c, d)))
}

/// Sparse polynomials in `x1..x3` and `ℏ` of degree ≤ 3.
fn poly() -> impl Strategy<Value = Poly> {
    let mono = (0u8..=2, 0u8..=1, 0u8..=1, 0u8..=1);
    prop::collection::vec((mono, gauss()), 0..5).prop_map(|terms| {
        let mut p = Poly::zero();
        for ((a, b, c, h), k) in terms {
            let m = &(&Poly::x(0).pow(a as u32) * &Poly::x(1).pow(b as u32))
                * &(&Poly::x(2).pow(c as u32) * &Poly::hbar().pow(h as u32));
            p = &p + &m.scale(&k);
        }
        p
    })
}

fn big(r: &Rational) -> BigRational {
    r.to_big()
}

proptest! {
    #[test]
    fn rational_matches_bigrational(a in rational(), b in rational()) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&(&a / &b)), big(&a) / big(&b));
        }
    }

    #[test]
    fn rational_normal_form(a in rational()) {
        let back = Rational::from_bigints(a.numer(), a.denom());
        prop_assert_eq!(&back, &a);
        prop_assert!(a.denom() > BigInt::from(0));
    }

    #[test]
    fn poly_ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_div_inverts_mul(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn poly_text_round_trip(p in poly()) {
        let back: Poly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn signed_permute_is_an_action(p in poly(), q in poly()) {
        let map = [(1usize, true), (2, false), (0, true)];
        let lhs = (&p * &q).signed_permute(&map);
        prop_assert_eq!(lhs, &p.signed_permute(&map) * &q.signed_permute(&map));
    }

    #[test]
    fn ratfunc_field_ops(p in poly(), q in poly(), a in -3i64..=3, b in -3i64..=3) {
        let den = &(&Poly::x(0) - &Poly::x(1).scale(&GaussRat::from(a))) + &Poly::hbar().scale(&GaussRat::from(b));
        prop_assume!(!den.is_zero() && !den.is_constant());
        let f = RatFunc::quotient(p.clone(), &den).unwrap();
        let g = RatFunc::quotient(q.clone(), &den).unwrap();
        let sum = f.add(&g);
        prop_assert!(sum.value_eq(&RatFunc::quotient(&p + &q, &den).unwrap()));
        prop_assert!(f.mul_poly(&den).simplify().to_poly().unwrap() == p);
    }

    #[test]
    fn series_log_exp(c1 in gauss(), c2 in gauss(), c3 in gauss()) {
        let coeffs = [GaussRat::one(), c1, c2, c3]
            .into_iter()
            .map(RatFunc::constant)
            .collect();
        let s = SeriesU::from_coeffs(coeffs);
        let back = s.log().unwrap().exp().unwrap();
        prop_assert!(back.value_eq(&s));
    }
}
