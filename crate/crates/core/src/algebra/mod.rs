//! Algebras by structure constants, multilinear maps and the Σ₃ action on them.
//!
//! Every identity in this crate is multilinear, so it holds on all of `A` as
//! soon as it holds on basis tuples; predicates only evaluate basis tuples.

mod identities;
mod polar;

pub use identities::{check_identity, Identity, Verdict, Witness};
pub(crate) use polar::graded_leibniz;
pub use polar::{
    depolarize, jacobiator, leibniz_like, leibniz_polarization_defects, polarize, LeibnizKind,
    Parity,
};

use num::{One, Zero};

use crate::error::Error;
use crate::linalg::{is_zero_vec, Rational};
use crate::sigma3::{GroupAlgebraElement, Perm};

/// A bilinear map `A × A → A`; entry `(i, j, k)` is the `e_k` coefficient of `φ(eᵢ, eⱼ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    n: usize,
    c: Vec<Rational>,
}

/// An algebra is its multiplication.
pub type Algebra = BilinearMap;

/// A trilinear map `A × A × A → A`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrilinearMap {
    n: usize,
    t: Vec<Rational>,
}

pub(crate) fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += s * b;
        }
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl BilinearMap {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be positive");
        BilinearMap {
            n,
            c: vec![Rational::zero(); n * n * n],
        }
    }

    /// Builds `φ` from the values `φ(eᵢ, eⱼ)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.len(), n);
                m.c[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&v);
            }
        }
        m
    }

    /// Builds `φ` from a flat `n³` coefficient list in `(i, j, k)` order.
    pub fn from_flat(n: usize, c: Vec<Rational>) -> Self {
        assert_eq!(c.len(), n * n * n);
        BilinearMap { n, c }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &[Rational] {
        &self.c
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.n + j) * self.n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Rational) {
        let n = self.n;
        self.c[(i * n + j) * n + k] = x;
    }

    /// `φ(eᵢ, eⱼ)`.
    pub fn at(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.n;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// `φ(u, e_k)`.
    pub fn lmul(&self, u: &[Rational], k: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n];
        for (m, s) in u.iter().enumerate() {
            axpy(&mut out, s, self.at(m, k));
        }
        out
    }

    /// `φ(eᵢ, u)`.
    pub fn rmul(&self, i: usize, u: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n];
        for (m, s) in u.iter().enumerate() {
            axpy(&mut out, s, self.at(i, m));
        }
        out
    }

    /// `φ(u, v)` on arbitrary vectors.
    pub fn apply(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    axpy(&mut out, &(a * b), self.at(i, j));
                }
            }
        }
        out
    }

    /// `(x, y) ↦ φ(y, x)`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.at(j, i).to_vec())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.c)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.add(&self.transpose()).is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        BilinearMap {
            n: self.n,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        BilinearMap {
            n: self.n,
            c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        BilinearMap {
            n: self.n,
            c: self.c.iter().map(|a| a * s).collect(),
        }
    }

    /// `φ∘(χ⊗Id)`, i.e. `(x, y, z) ↦ φ(χ(x, y), z)`.
    pub fn compose_left(&self, chi: &Self) -> TrilinearMap {
        assert_eq!(self.n, chi.n, "dimension mismatch");
        TrilinearMap::from_fn(self.n, |i, j, k| self.lmul(chi.at(i, j), k))
    }

    /// `φ∘(Id⊗χ)`, i.e. `(x, y, z) ↦ φ(x, χ(y, z))`.
    pub fn compose_right(&self, chi: &Self) -> TrilinearMap {
        assert_eq!(self.n, chi.n, "dimension mismatch");
        TrilinearMap::from_fn(self.n, |i, j, k| self.rmul(i, chi.at(j, k)))
    }

    /// First basis pair where `φ(eᵢ, eⱼ) ≠ 0`.
    pub fn first_nonzero(&self) -> Option<Witness> {
        (0..self.n * self.n).find_map(|p| {
            let (i, j) = (p / self.n, p % self.n);
            let v = self.at(i, j);
            (!is_zero_vec(v)).then(|| Witness {
                args: vec![i, j],
                value: v.to_vec(),
            })
        })
    }
}

impl TrilinearMap {
    pub fn zeros(n: usize) -> Self {
        TrilinearMap {
            n,
            t: vec![Rational::zero(); n * n * n * n],
        }
    }

    /// Builds `T` from the values `T(eᵢ, eⱼ, e_k)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Vec<Rational>) -> Self {
        let mut t = Vec::with_capacity(n * n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = f(i, j, k);
                    assert_eq!(v.len(), n);
                    t.extend(v);
                }
            }
        }
        TrilinearMap { n, t }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `T(eᵢ, eⱼ, e_k)`.
    pub fn at(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let n = self.n;
        let o = ((i * n + j) * n + k) * n;
        &self.t[o..o + n]
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.at(i, j, k)[l]
    }

    /// `T(u, v, w)` on arbitrary vectors.
    pub fn apply(&self, u: &[Rational], v: &[Rational], w: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    axpy(&mut out, &(&ab * c), self.at(i, j, k));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.t)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        TrilinearMap {
            n: self.n,
            t: self.t.iter().zip(&o.t).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        TrilinearMap {
            n: self.n,
            t: self.t.iter().zip(&o.t).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TrilinearMap {
            n: self.n,
            t: self.t.iter().map(|a| a * s).collect(),
        }
    }

    /// First basis triple in lexicographic order where `T` is nonzero.
    pub fn first_nonzero(&self) -> Option<Witness> {
        let n = self.n;
        (0..n * n * n).find_map(|p| {
            let (i, j, k) = (p / (n * n), (p / n) % n, p % n);
            let v = self.at(i, j, k);
            (!is_zero_vec(v)).then(|| Witness {
                args: vec![i, j, k],
                value: v.to_vec(),
            })
        })
    }

    /// Number of basis triples on which `T` is nonzero.
    pub fn support_size(&self) -> usize {
        self.t.chunks(self.n).filter(|v| !is_zero_vec(v)).count()
    }
}

/// `Σ_σ v_σ · T∘Φ_σ` with `Φ_σ(x₁, x₂, x₃) = (x_{σ(1)}, x_{σ(2)}, x_{σ(3)})`.
///
/// Twisting composes as `phi_apply(phi_apply(T, v), u) = phi_apply(T, u·v)`.
pub fn phi_apply(t: &TrilinearMap, v: &GroupAlgebraElement) -> TrilinearMap {
    let n = t.n;
    TrilinearMap::from_fn(n, |i, j, k| {
        let x = [i, j, k];
        let mut out = vec![Rational::zero(); n];
        for s in Perm::ALL {
            let im = s.images();
            axpy(&mut out, v.coeff(s), t.at(x[im[0]], x[im[1]], x[im[2]]));
        }
        out
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssociatorKind {
    /// `𝒜^L − 𝒜^R`
    Full,
    /// `μ∘(μ⊗Id)`
    Left,
    /// `μ∘(Id⊗μ)`
    Right,
    /// `𝒜^L + 𝒜^R`
    Anti,
}

pub fn associator(m: &BilinearMap, kind: AssociatorKind) -> TrilinearMap {
    match kind {
        AssociatorKind::Left => m.compose_left(m),
        AssociatorKind::Right => m.compose_right(m),
        AssociatorKind::Full => m.compose_left(m).sub(&m.compose_right(m)),
        AssociatorKind::Anti => m.compose_left(m).add(&m.compose_right(m)),
    }
}

pub fn is_v_associative(a: &Algebra, v: &GroupAlgebraElement) -> bool {
    phi_apply(&associator(a, AssociatorKind::Full), v).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VwMode {
    /// `𝒜^L∘Φ_v = 0` and `𝒜^R∘Φ_w = 0`.
    Pair,
    /// `𝒜^L∘Φ_v − 𝒜^R∘Φ_w = 0`.
    Difference,
}

pub fn vw_defect(a: &Algebra, v: &GroupAlgebraElement, w: &GroupAlgebraElement) -> TrilinearMap {
    let l = phi_apply(&associator(a, AssociatorKind::Left), v);
    l.sub(&phi_apply(&associator(a, AssociatorKind::Right), w))
}

pub fn is_vw_associative(
    a: &Algebra,
    v: &GroupAlgebraElement,
    w: &GroupAlgebraElement,
    mode: VwMode,
) -> bool {
    match mode {
        VwMode::Pair => {
            phi_apply(&associator(a, AssociatorKind::Left), v).is_zero()
                && phi_apply(&associator(a, AssociatorKind::Right), w).is_zero()
        }
        VwMode::Difference => vw_defect(a, v, w).is_zero(),
    }
}

pub(crate) fn same_dim(a: usize, b: usize) -> Result<(), Error> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a,
            found: b,
        })
    }
}
