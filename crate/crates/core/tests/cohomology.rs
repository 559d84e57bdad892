mod common;

use nakit_core::algebra::BilinearMap;
use nakit_core::cohomology::{
    anticommutative_anti_expansion, cocycle_basis, commutative_twisted_expansion, delta1, delta2,
    BaseDifferential, CoboundaryFlavor,
};
use nakit_core::corpus;
use nakit_core::linalg::{Matrix, Rational};
use nakit_core::sigma3::GroupAlgebraElement as G;
use num::Zero;
use proptest::prelude::*;

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn commutative_expansion_matches_twisted_differential(n in 1usize..=3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = commutative(&mut r, n);
        let phi = bilinear(&mut r, n);
        let w = group_element(&mut r);
        prop_assume!(!w.is_zero());
        let direct = delta2(&mu, &phi, &CoboundaryFlavor::v_twisted(w.clone())).unwrap();
        prop_assert_eq!(direct, commutative_twisted_expansion(&mu, &phi, &w));
    }

    #[test]
    fn anticommutative_expansion_matches_twisted_anti(n in 1usize..=3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu = anticommutative(&mut r, n);
        let phi = bilinear(&mut r, n);
        let w = group_element(&mut r);
        prop_assume!(!w.is_zero());
        let flavor = CoboundaryFlavor::Twisted { v: w.clone(), base: BaseDifferential::Anti };
        prop_assert_eq!(delta2(&mu, &phi, &flavor).unwrap(), anticommutative_anti_expansion(&mu, &phi, &w));
    }

    #[test]
    fn cocycle_dimension_plus_rank(n in 1usize..=3, seed in any::<u64>(), pick in 0usize..5) {
        let mut r = rng(seed);
        let mu = bilinear(&mut r, n);
        let v = nonzero_group_element(&mut r);
        let w = nonzero_group_element(&mut r);
        let flavor = match pick {
            0 => CoboundaryFlavor::Hochschild,
            1 => CoboundaryFlavor::Anti,
            2 => CoboundaryFlavor::v_twisted(v),
            3 => CoboundaryFlavor::Twisted { v, base: BaseDifferential::Anti },
            _ => CoboundaryFlavor::LeftRight { v, w },
        };
        let space = cocycle_basis(&mu, &flavor).unwrap();
        prop_assert_eq!(space.dim + space.coboundary_rank, n * n * n);
        prop_assert_eq!(space.basis.len(), space.dim);
        for phi in &space.basis {
            prop_assert!(delta2(&mu, phi, &flavor).unwrap().is_zero());
        }
    }

    // With XX != 0 and phi(XX, X) != 0, a twist whose coefficients do not sum
    // to zero never annihilates phi.
    #[test]
    fn twist_sum_diagnostic(n in 2usize..=3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut mu = commutative(&mut r, n);
        mu.set(0, 0, 0, nonzero(&mut r));
        let phi = anticommutative(&mut r, n);
        let xx: Vec<Rational> = mu.at(0, 0).to_vec();
        prop_assume!(!phi.lmul(&xx, 0).iter().all(Zero::is_zero));
        let w = nonzero_group_element(&mut r);
        prop_assume!(!w.plain_sum().is_zero());
        prop_assert!(!delta2(&mu, &phi, &CoboundaryFlavor::v_twisted(w)).unwrap().is_zero());
    }

    #[test]
    fn anti_coboundaries_are_cocycles(seed in any::<u64>(), which in 0usize..5) {
        let mut r = rng(seed);
        let name = ["aa3-1", "aa3-2", "aa3-3", "aa3-4", "heisenberg"][which];
        let e = corpus::get(name).unwrap();
        let params: Vec<(String, Rational)> =
            e.param_names().into_iter().map(|p| (p, small(&mut r))).collect();
        let mu = e.with_params(&as_refs(&params)).unwrap().algebra;
        let n = mu.dim();
        let f = Matrix::from_rows((0..n).map(|_| (0..n).map(|_| small(&mut r)).collect()).collect());
        let d1: BilinearMap = delta1(&mu, &f).unwrap();
        prop_assert!(delta2(&mu, &d1, &CoboundaryFlavor::Anti).unwrap().is_zero());
    }
}

#[test]
fn twisting_by_v_lad_kills_every_commutative_differential() {
    let mut r = rng(9);
    for n in 1..=3 {
        let mu = commutative(&mut r, n);
        let space = cocycle_basis(&mu, &CoboundaryFlavor::v_twisted(G::v_lad())).unwrap();
        assert_eq!(space.dim, n * n * n);
        assert_eq!(space.coboundary_rank, 0);
    }
}

// w = Id + τ12 has vanishing alternating sum and a2 + a3 + a4 = 1, yet the
// twisted anti-associative differential does not annihilate a generic phi.
#[test]
fn anti_twist_with_vanishing_alternating_sum_is_not_zero() {
    let w = G::from_ints([1, 1, 0, 0, 0, 0]);
    let flavor = CoboundaryFlavor::Twisted {
        v: w.clone(),
        base: BaseDifferential::Anti,
    };
    let mut r = rng(42);
    for name in ["aa3-1", "aa3-2", "heisenberg"] {
        let mu = corpus::get(name).unwrap().algebra();
        let phi = bilinear(&mut r, mu.dim());
        let d = delta2(&mu, &phi, &flavor).unwrap();
        assert!(!d.is_zero(), "{name}");
        let space = cocycle_basis(&mu, &flavor).unwrap();
        assert!(space.dim < mu.dim().pow(3), "{name}");
    }
}
