use nakit_core::algebra::{is_v_associative, phi_apply, BilinearMap, TrilinearMap};
use nakit_core::linalg::{parse_rational, rat, Matrix, Rational, Solution};
use nakit_core::sigma3::{contains, fv_rank, ga_mul, GroupAlgebraElement as G, Perm, Target};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn element() -> impl Strategy<Value = G> {
    proptest::array::uniform6(small()).prop_map(G)
}

fn nonzero_element() -> impl Strategy<Value = G> {
    element().prop_filter("nonzero", |v| !v.is_zero())
}

fn trilinear(n: usize) -> impl Strategy<Value = TrilinearMap> {
    proptest::collection::vec(small(), n * n * n * n).prop_map(move |c| {
        TrilinearMap::from_fn(n, |i, j, k| {
            let at = ((i * n + j) * n + k) * n;
            c[at..at + n].to_vec()
        })
    })
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(small(), c), r))
        .prop_map(Matrix::from_rows)
}

#[test]
fn group_multiplication_is_associative_with_unit() {
    for a in Perm::ALL {
        let ea = G::perm(a);
        assert_eq!(ga_mul(&ea, &G::id()), ea);
        assert_eq!(ga_mul(&G::id(), &ea), ea);
        for b in Perm::ALL {
            for c in Perm::ALL {
                let (eb, ec) = (G::perm(b), G::perm(c));
                assert_eq!(
                    ga_mul(&ga_mul(&ea, &eb), &ec),
                    ga_mul(&ea, &ga_mul(&eb, &ec))
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ga_mul_is_associative(u in element(), v in element(), w in element()) {
        prop_assert_eq!(ga_mul(&ga_mul(&u, &v), &w), ga_mul(&u, &ga_mul(&v, &w)));
        prop_assert_eq!(ga_mul(&G::id(), &u), u.clone());
        prop_assert_eq!(ga_mul(&u, &G::id()), u);
    }

    // Applying v then u equals applying the product u·v.
    #[test]
    fn phi_composition(t in trilinear(2), u in element(), v in element()) {
        prop_assert_eq!(phi_apply(&phi_apply(&t, &v), &u), phi_apply(&t, &ga_mul(&u, &v)));
    }

    #[test]
    fn rank_is_orbit_invariant(v in nonzero_element()) {
        let r = fv_rank(&v).unwrap();
        for s in Perm::ALL {
            prop_assert_eq!(fv_rank(&ga_mul(&G::perm(s), &v)).unwrap(), r);
        }
    }

    #[test]
    fn certificates_are_valid(v in nonzero_element()) {
        for target in [Target::VLad, Target::V3Pa] {
            let m = contains(&v, target).unwrap();
            prop_assert_eq!(m.member, m.certificate.is_some());
            if let Some(u) = m.certificate {
                prop_assert_eq!(ga_mul(&u, &v), target.vector());
            }
        }
    }

    #[test]
    fn v_associativity_is_orbit_invariant(
        c in proptest::collection::vec(-1i64..=1, 8),
        v in nonzero_element(),
    ) {
        let a = BilinearMap::from_fn(2, |i, j| {
            vec![rat(c[4 * i + 2 * j], 1), rat(c[4 * i + 2 * j + 1], 1)]
        });
        let base = is_v_associative(&a, &v);
        for s in Perm::ALL {
            prop_assert_eq!(is_v_associative(&a, &ga_mul(&G::perm(s), &v)), base);
        }
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == rat(0, 1)));
        }
    }

    #[test]
    fn solutions_satisfy_the_system(m in matrix(), seed in proptest::collection::vec(small(), 5)) {
        // A right-hand side in the column space, and an arbitrary one.
        let x: Vec<Rational> = seed[..m.cols()].to_vec();
        let b = m.mul_vec(&x);
        match m.solve(&b).unwrap() {
            Solution::Consistent { particular, kernel } => {
                prop_assert_eq!(m.mul_vec(&particular), b);
                for k in &kernel {
                    prop_assert!(m.mul_vec(k).iter().all(|x| *x == rat(0, 1)));
                }
            }
            Solution::Inconsistent => prop_assert!(false, "image vector reported inconsistent"),
        }
        let b: Vec<Rational> = (0..m.rows()).map(|i| seed[i % 5].clone()).collect();
        if let Solution::Consistent { particular, .. } = m.solve(&b).unwrap() {
            prop_assert_eq!(m.mul_vec(&particular), b);
        }
    }

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = rat(n, d);
        prop_assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
    }
}
