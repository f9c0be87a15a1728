use iyang::arith::{GaussRat, Poly, RatFunc};
use iyang::orbit::{compose_set, enum_weights, enumerate_xi, leq_order, ThetaElementary, WeightVec};
use iyang::rep::basis_of_component;
use iyang::symmetry::{CosetSpace, ParabolicSubgroup, WeylElem};
use proptest::prelude::*;

const D: usize = 4;

fn weyl() -> impl Strategy<Value = WeylElem> {
    (Just((1..=D as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), D)).prop_map(
        |(perm, signs)| {
            let images = perm.into_iter().zip(signs).map(|(m, s)| if s { -m } else { m }).collect();
            WeylElem::from_images(images).expect("signed permutation")
        },
    )
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..D, 0u32..=2, -3i64..=3), 1..5).prop_map(|terms| {
        let mut p = Poly::zero();
        for (k, e, c) in terms {
            p = &p + &(&Poly::x(k).pow(e) * &Poly::x((k + 1) % D)).scale(&GaussRat::from(c));
        }
        &p + &Poly::hbar()
    })
}

proptest! {
    #[test]
    fn weyl_group_laws(a in weyl(), b in weyl(), c in weyl()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn weyl_action_is_multiplicative(w in weyl(), p in poly(), q in poly()) {
        prop_assert_eq!(w.act(&(&p * &q)), &w.act(&p) * &w.act(&q));
        prop_assert_eq!(w.act(&(&p + &q)), &w.act(&p) + &w.act(&q));
    }

    #[test]
    fn weyl_action_composes(a in weyl(), b in weyl(), p in poly()) {
        prop_assert_eq!(a.compose(&b).act(&p), a.act(&b.act(&p)));
    }

    #[test]
    fn coset_sum_lands_in_the_larger_invariants(p in poly()) {
        let sub = ParabolicSubgroup::new(D, vec![(1, 2)], Some((3, 4))).unwrap();
        let whole = ParabolicSubgroup::new(D, vec![], Some((1, 4))).unwrap();
        let g: Poly = sub.elements().iter().fold(Poly::zero(), |acc, w| &acc + &w.act(&p));
        let space = CosetSpace::new(sub, whole.clone()).unwrap();
        let s = space.sum(&RatFunc::from_poly(g)).unwrap();
        prop_assert!(whole.is_invariant_ratfunc(&s));
    }
}

#[test]
fn coset_index_is_order_ratio() {
    let sub = ParabolicSubgroup::new(D, vec![(1, 2)], Some((3, 4))).unwrap();
    let whole = ParabolicSubgroup::new(D, vec![], Some((1, 4))).unwrap();
    let (a, b) = (sub.order(), whole.order());
    assert_eq!(CosetSpace::new(sub, whole).unwrap().index() as u64, b / a);
}

#[test]
fn closure_order_is_a_partial_order() {
    for (n, d) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let xi = enumerate_xi(n, d);
        for a in &xi {
            assert!(leq_order(a, a));
            for b in &xi {
                if leq_order(a, b) && leq_order(b, a) {
                    assert_eq!(a, b);
                }
                for c in &xi {
                    if leq_order(a, b) && leq_order(b, c) {
                        assert!(leq_order(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn orbit_matrices_are_theta_symmetric_with_weight_margins() {
    for (n, d) in [(1, 2), (2, 2)] {
        let weights = enum_weights(n, d);
        for m in enumerate_xi(n, d) {
            let big_n = m.big_n();
            for i in 1..=big_n {
                for j in 1..=big_n {
                    assert_eq!(m.get(i, j), m.get(big_n + 1 - i, big_n + 1 - j));
                }
            }
            assert!(weights.contains(m.ro()) && weights.contains(m.co()));
        }
    }
}

#[test]
fn trivial_composition_returns_b() {
    for b in enumerate_xi(2, 2) {
        let a = ThetaElementary::new(1, b.ro().clone(), 0).unwrap();
        assert_eq!(compose_set(&a, &b).unwrap(), vec![b]);
    }
}

#[test]
fn weights_count() {
    assert_eq!(enum_weights(1, 2).len(), 3);
    assert_eq!(enum_weights(2, 2).len(), 6);
}

#[test]
fn basis_elements_are_invariant_and_distinct() {
    for (n, d) in [(1, 2), (2, 2)] {
        for v in enum_weights(n, d) {
            let g = v.parabolic();
            let basis = basis_of_component(&v, 3).unwrap();
            for (k, b) in basis.iter().enumerate() {
                assert!(g.is_invariant(b.poly()), "{v}: {}", b.poly());
                assert!(b.poly().x_degree().unwrap_or(0) <= 3);
                for c in &basis[k + 1..] {
                    assert_ne!(b.poly(), c.poly());
                }
            }
        }
    }
}

#[test]
fn weight_text_round_trip() {
    for v in enum_weights(2, 2) {
        let back: WeightVec = v.to_string().parse().unwrap();
        assert_eq!(back, v);
    }
}
