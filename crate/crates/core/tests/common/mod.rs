//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use nakit_core::algebra::{Algebra, BilinearMap};
use nakit_core::linalg::{rat, Rational};
use nakit_core::sigma3::GroupAlgebraElement;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with small numerator and denominator, zero about a third of the time.
pub fn small(r: &mut ChaCha8Rng) -> Rational {
    if r.gen_bool(0.3) {
        return rat(0, 1);
    }
    rat(r.gen_range(-4..=4), r.gen_range(1..=3))
}

pub fn nonzero(r: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = rat(r.gen_range(-9..=9), r.gen_range(1..=5));
        if x != rat(0, 1) {
            return x;
        }
    }
}

pub fn bilinear(r: &mut ChaCha8Rng, n: usize) -> BilinearMap {
    BilinearMap::from_fn(n, |_, _| (0..n).map(|_| small(r)).collect())
}

pub fn commutative(r: &mut ChaCha8Rng, n: usize) -> Algebra {
    let m = bilinear(r, n);
    m.add(&m.transpose())
}

pub fn anticommutative(r: &mut ChaCha8Rng, n: usize) -> Algebra {
    let m = bilinear(r, n);
    m.sub(&m.transpose())
}

pub fn group_element(r: &mut ChaCha8Rng) -> GroupAlgebraElement {
    GroupAlgebraElement(std::array::from_fn(|_| small(r)))
}

pub fn nonzero_group_element(r: &mut ChaCha8Rng) -> GroupAlgebraElement {
    loop {
        let v = group_element(r);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random parameter assignments: the boundary points first, then `extra` samples.
pub fn param_samples(names: &[String], extra: usize, seed: u64) -> Vec<Vec<(String, Rational)>> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let boundary = [rat(0, 1), rat(1, 1), rat(-1, 1)];
    match names.len() {
        0 => return vec![vec![]],
        1 => {
            for b in &boundary {
                out.push(vec![(names[0].clone(), b.clone())]);
            }
        }
        _ => {
            for a in &boundary {
                for b in &boundary {
                    let mut s = vec![(names[0].clone(), a.clone()), (names[1].clone(), b.clone())];
                    for n in &names[2..] {
                        s.push((n.clone(), rat(0, 1)));
                    }
                    out.push(s);
                }
            }
        }
    }
    for _ in 0..extra {
        out.push(names.iter().map(|n| (n.clone(), nonzero(&mut r))).collect());
    }
    out
}

pub fn as_refs(p: &[(String, Rational)]) -> Vec<(&str, Rational)> {
    p.iter().map(|(n, v)| (n.as_str(), v.clone())).collect()
}
