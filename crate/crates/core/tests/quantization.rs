//! Structures read off the first-order term of verified deformations.
//!
//! Deformations are built by taking a random cocycle as `phi1` and solving the
//! order-2 equation for `phi2`; samples whose order-2 equation is obstructed
//! are discarded.

mod common;

use nakit_core::algebra::{Algebra, BilinearMap, Identity, TrilinearMap};
use nakit_core::cohomology::{joint_cocycle_basis, CoboundaryFlavor};
use nakit_core::corpus;
use nakit_core::deformation::{
    first_order, poisson_check, verify, vw_verify, BulletFlavor, OrderResidual, PoissonKind,
    TruncatedDeformation,
};
use nakit_core::linalg::{int, Matrix, Rational, Solution};
use nakit_core::sigma3::{contains, GroupAlgebraElement as G, Target};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use common::*;

/// The deformation equations a sample must satisfy through order 2.
#[derive(Clone)]
#[allow(clippy::large_enum_variant)]
enum System {
    V(G),
    Vw(Vec<(G, G)>),
}

impl System {
    fn cocycle_flavors(&self) -> Vec<CoboundaryFlavor> {
        match self {
            System::V(v) => vec![CoboundaryFlavor::v_twisted(v.clone())],
            System::Vw(pairs) => pairs
                .iter()
                .map(|(v, w)| CoboundaryFlavor::LeftRight {
                    v: v.clone(),
                    w: w.clone(),
                })
                .collect(),
        }
    }

    /// Residuals through order `through` (at most 2), flattened per order.
    fn residuals(&self, d: &TruncatedDeformation, through: usize) -> Vec<Vec<Rational>> {
        let mut out = vec![Vec::new(); through + 1];
        let mut push = |r: &[OrderResidual]| {
            for (o, x) in out.iter_mut().zip(r) {
                flatten(&x.residual, o);
            }
        };
        match self {
            System::V(v) => push(&verify(d, &BulletFlavor::V(v.clone()), through).unwrap()),
            System::Vw(pairs) => {
                for (v, w) in pairs {
                    push(&vw_verify(d, v, w, through).unwrap());
                }
            }
        }
        out
    }
}

fn flatten(t: &TrilinearMap, out: &mut Vec<Rational>) {
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.extend_from_slice(t.at(i, j, k));
            }
        }
    }
}

/// A verified order-2 deformation of `mu0` under `system`, if the random
/// first-order term extends.
fn sample(mu0: &Algebra, system: &System, r: &mut ChaCha8Rng) -> Option<TruncatedDeformation> {
    let n = mu0.dim();
    let space = joint_cocycle_basis(mu0, &system.cocycle_flavors()).unwrap();
    if space.dim == 0 {
        return None;
    }
    let mut phi1 = BilinearMap::zeros(n);
    for b in &space.basis {
        if r.gen_bool(0.6) {
            phi1 = phi1.add(&b.scale(&nonzero(r)));
        }
    }
    if phi1.is_zero() {
        return None;
    }
    let build = |phi2: BilinearMap| {
        TruncatedDeformation::new(vec![mu0.clone(), phi1.clone(), phi2]).unwrap()
    };
    let r = system.residuals(&build(BilinearMap::zeros(n)), 2);
    assert!(
        r[1].iter().all(|x| *x == int(0)),
        "cocycle fails the order-1 equation"
    );
    // phi2 enters the order-2 equation through the order-1 operator.
    let columns: Vec<Vec<Rational>> = (0..n * n * n)
        .map(|u| {
            let mut c = vec![int(0); n * n * n];
            c[u] = int(1);
            let d = TruncatedDeformation::new(vec![mu0.clone(), BilinearMap::from_flat(n, c)]);
            system.residuals(&d.unwrap(), 1).swap_remove(1)
        })
        .collect();
    let m = Matrix::from_columns(r[2].len(), &columns);
    let rhs: Vec<Rational> = r[2].iter().map(|x| -x).collect();
    match m.solve(&rhs).unwrap() {
        Solution::Consistent { particular, .. } => {
            let d = build(BilinearMap::from_flat(n, particular));
            let check = system.residuals(&d, 2);
            assert!(check[1].iter().chain(&check[2]).all(|x| *x == int(0)));
            Some(d)
        }
        Solution::Inconsistent => None,
    }
}

/// Commutative algebras whose products all land in the span of the last basis vector.
fn two_step(r: &mut ChaCha8Rng, n: usize) -> Algebra {
    let mut m = Algebra::zeros(n);
    for i in 0..n - 1 {
        for j in i..n - 1 {
            let c = small(r);
            m.set(i, j, n - 1, c.clone());
            m.set(j, i, n - 1, c);
        }
    }
    m
}

fn commutative_associative(r: &mut ChaCha8Rng) -> Algebra {
    match r.gen_range(0..4) {
        0 => corpus::get("poly3").unwrap().algebra(),
        1 => corpus::sample("qplane")
            .unwrap()
            .file()
            .deformation
            .mu0()
            .clone(),
        2 => two_step(r, 3),
        _ => two_step(r, 4),
    }
}

fn holds(mu0: &Algebra, beta: &BilinearMap, kind: PoissonKind) -> bool {
    poisson_check(mu0, beta, &kind).unwrap().holds()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn associative_deformations_quantize_poisson(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu0 = commutative_associative(&mut r);
        let d = sample(&mu0, &System::V(G::id()), &mut r);
        prop_assume!(d.is_some());
        let d = d.unwrap();
        let (psi1, _) = first_order(&d).unwrap();
        prop_assert!(holds(&mu0, &psi1, PoissonKind::Poisson));
    }

    #[test]
    fn weakly_associative_deformations_quantize_poisson(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu0 = commutative_associative(&mut r);
        let d = sample(&mu0, &System::V(G::from_ints([1, -1, 0, 0, 1, 0])), &mut r);
        prop_assume!(d.is_some());
        let (psi1, _) = first_order(&d.unwrap()).unwrap();
        prop_assert!(holds(&mu0, &psi1, PoissonKind::Poisson));
    }

    #[test]
    fn g5_deformations_give_cyclic_brackets(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu0 = commutative_associative(&mut r);
        let g5 = G::from_ints([1, 0, 0, 0, 1, 1]);
        let d = sample(&mu0, &System::V(g5.clone()), &mut r);
        prop_assume!(d.is_some());
        let (psi1, _) = first_order(&d.unwrap()).unwrap();
        prop_assert!(Identity::Lie.evaluate(&psi1).holds);
        let n = mu0.dim();
        let cyc = TrilinearMap::from_fn(n, |x, y, z| {
            let a = psi1.lmul(mu0.at(x, y), z);
            let b = psi1.lmul(mu0.at(y, z), x);
            let c = psi1.lmul(mu0.at(z, x), y);
            a.iter().zip(&b).zip(&c).map(|((a, b), c)| a + b + c).collect()
        });
        prop_assert!(cyc.is_zero());
        prop_assert!(holds(&mu0, &psi1, PoissonKind::NonassocVPoisson(g5)));
    }

    #[test]
    fn rank_five_deformations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mu0 = commutative_associative(&mut r);
        let v = G::from_ints([2, -1, -1, -1, 1, 0]);
        let d = sample(&mu0, &System::V(v), &mut r);
        prop_assume!(d.is_some());
        let (psi1, _) = first_order(&d.unwrap()).unwrap();
        let tau13 = G::from_ints([1, 0, -1, 0, 0, 0]);
        prop_assert!(holds(&mu0, &psi1, PoissonKind::NonassocVPoisson(tau13)));
    }

    // Whenever v_Lad lies in the orbit span, the first-order term is Lie-admissible.
    #[test]
    fn lie_admissible_first_order(seed in any::<u64>(), pick in 0usize..6) {
        let mut r = rng(seed);
        let v = [
            G::id(),
            G::from_ints([1, -1, 0, 0, 1, 0]),
            G::from_ints([1, 0, 0, 0, 1, 1]),
            G::from_ints([1, -1, 0, 0, 0, 0]),
            G::from_ints([2, -1, -1, -1, 1, 0]),
            G::from_ints([2, 1, 1, 0, 1, 1]),
        ][pick].clone();
        prop_assert!(contains(&v, Target::VLad).unwrap().member);
        let mu0 = commutative_associative(&mut r);
        let d = sample(&mu0, &System::V(v), &mut r);
        prop_assume!(d.is_some());
        prop_assert!(Identity::LieAdmissible.evaluate(&d.unwrap().maps()[1]).holds);
    }

    #[test]
    fn leibniz_deformations_are_pseudo_poisson(seed in any::<u64>(), side in 0usize..3) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=3);
        let mu0 = two_step(&mut r, n);
        let left = (G::id(), G::from_ints([1, -1, 0, 0, 0, 0]));
        let right = (G::from_ints([1, 0, 0, -1, 0, 0]), G::id());
        let pairs = match side {
            0 => vec![left],
            1 => vec![right],
            _ => vec![left, right],
        };
        let d = sample(&mu0, &System::Vw(pairs), &mut r);
        prop_assume!(d.is_some());
        let (psi1, _) = first_order(&d.unwrap()).unwrap();
        if side != 1 {
            prop_assert!(holds(&mu0, &psi1, PoissonKind::PseudoLeft));
        }
        if side != 0 {
            prop_assert!(holds(&mu0, &psi1, PoissonKind::PseudoRight));
        }
        if side == 2 {
            prop_assert!(Identity::Lie.evaluate(&psi1).holds);
        }
    }
}

#[test]
fn corpus_deformations_verify() {
    let cases = [
        ("qplane", "plain"),
        ("qplane", "v:wa"),
        ("qplane", "v:g2"),
        ("g5-pair", "v:g5"),
        ("lad-line", "v:vlad"),
    ];
    for (name, flavor) in cases {
        let d = corpus::sample(name).unwrap().file().deformation;
        let r = verify(&d, &BulletFlavor::parse(flavor).unwrap(), d.order()).unwrap();
        assert!(r.iter().all(|x| x.is_zero()), "{name} under {flavor}");
    }
    let d = corpus::sample("anti-center").unwrap().file().deformation;
    let r = vw_verify(&d, &G::id(), &G::id().scale(&int(-1)), 2).unwrap();
    assert!(r.iter().all(|x| x.is_zero()));
    let (_, rho1) = first_order(&d).unwrap();
    assert!(holds(d.mu0(), &rho1, PoissonKind::AntiPoisson));
}
