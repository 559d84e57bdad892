//! Coboundary operators and cocycle spaces.

use std::fmt;

use num::Zero;

use crate::algebra::{
    axpy, phi_apply, same_dim, unit, Algebra, BilinearMap, TrilinearMap, Witness,
};
use crate::error::Error;
use crate::linalg::{int, is_zero_vec, Matrix, Rational};
use crate::sigma3::GroupAlgebraElement;

/// Untwisted degree-2 differential underlying a `Twisted` flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseDifferential {
    Hochschild,
    Anti,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum CoboundaryFlavor {
    /// `δ²_H φ = −xφ(y,z) + φ(xy,z) − φ(x,yz) + φ(x,y)z`
    Hochschild,
    /// `δ²_AA φ = xφ(y,z) + φ(xy,z) + φ(x,yz) + φ(x,y)z`
    Anti,
    /// `δ² φ ∘ Φ_v` over either base differential. Twisting the anti
    /// differential is an extension; the Hochschild twist is the `v`-deformation
    /// differential.
    Twisted {
        v: GroupAlgebraElement,
        base: BaseDifferential,
    },
    /// `δ^{2,L}_v φ − δ^{2,R}_w φ` for `(v, w)`-algebras.
    LeftRight {
        v: GroupAlgebraElement,
        w: GroupAlgebraElement,
    },
}

impl CoboundaryFlavor {
    pub fn v_twisted(v: GroupAlgebraElement) -> Self {
        CoboundaryFlavor::Twisted {
            v,
            base: BaseDifferential::Hochschild,
        }
    }

    /// Parses `h`, `aa`, `v:<vec>`, `aav:<vec>` or `lr:<vec>;<vec>`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let vec = GroupAlgebraElement::parse;
        match s {
            "h" | "hochschild" => return Ok(CoboundaryFlavor::Hochschild),
            "aa" | "anti" => return Ok(CoboundaryFlavor::Anti),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("v:") {
            return Ok(CoboundaryFlavor::v_twisted(vec(rest)?));
        }
        if let Some(rest) = s.strip_prefix("aav:") {
            return Ok(CoboundaryFlavor::Twisted {
                v: vec(rest)?,
                base: BaseDifferential::Anti,
            });
        }
        if let Some(rest) = s.strip_prefix("lr:") {
            if let Some((v, w)) = rest.split_once(';') {
                return Ok(CoboundaryFlavor::LeftRight {
                    v: vec(v)?,
                    w: vec(w)?,
                });
            }
        }
        Err(Error::Parse {
            line: 0,
            msg: format!("unknown coboundary flavor `{s}`"),
        })
    }
}

impl fmt::Display for CoboundaryFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoboundaryFlavor::Hochschild => write!(f, "hochschild"),
            CoboundaryFlavor::Anti => write!(f, "anti"),
            CoboundaryFlavor::Twisted {
                v,
                base: BaseDifferential::Hochschild,
            } => {
                write!(f, "hochschild twisted by {v}")
            }
            CoboundaryFlavor::Twisted {
                v,
                base: BaseDifferential::Anti,
            } => {
                write!(f, "anti twisted by {v}")
            }
            CoboundaryFlavor::LeftRight { v, w } => write!(f, "left-right ({v}; {w})"),
        }
    }
}

/// `δ¹(f)(x,y) = xf(y) − f(xy) + f(x)y`, where column `j` of `f` is `f(eⱼ)`.
pub fn delta1(mu0: &Algebra, f: &Matrix) -> Result<BilinearMap, Error> {
    let n = mu0.dim();
    same_dim(n, f.rows())?;
    same_dim(n, f.cols())?;
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| f.column(j)).collect();
    Ok(BilinearMap::from_fn(n, |i, j| {
        let mut v = mu0.rmul(i, &cols[j]);
        axpy(&mut v, &int(-1), &f.mul_vec(mu0.at(i, j)));
        axpy(&mut v, &int(1), &mu0.lmul(&cols[i], j));
        v
    }))
}

/// Signed sum `s₁·xφ(y,z) + s₂·φ(xy,z) + s₃·φ(x,yz) + s₄·φ(x,y)z`.
fn four_term(mu0: &Algebra, phi: &BilinearMap, s: [i64; 4]) -> TrilinearMap {
    let s = s.map(int);
    TrilinearMap::from_fn(mu0.dim(), |x, y, z| {
        let mut v = mu0
            .rmul(x, phi.at(y, z))
            .iter()
            .map(|a| a * &s[0])
            .collect::<Vec<_>>();
        axpy(&mut v, &s[1], &phi.lmul(mu0.at(x, y), z));
        axpy(&mut v, &s[2], &phi.rmul(x, mu0.at(y, z)));
        axpy(&mut v, &s[3], &mu0.lmul(phi.at(x, y), z));
        v
    })
}

fn base_delta2(mu0: &Algebra, phi: &BilinearMap, base: BaseDifferential) -> TrilinearMap {
    match base {
        BaseDifferential::Hochschild => four_term(mu0, phi, [-1, 1, -1, 1]),
        BaseDifferential::Anti => four_term(mu0, phi, [1, 1, 1, 1]),
    }
}

/// `δ^{2,L}_v φ = (φ∘(μ₀⊗Id) + μ₀∘(φ⊗Id))∘Φ_v`.
pub fn delta2_left(mu0: &Algebra, phi: &BilinearMap, v: &GroupAlgebraElement) -> TrilinearMap {
    phi_apply(&phi.compose_left(mu0).add(&mu0.compose_left(phi)), v)
}

/// `δ^{2,R}_w φ = (φ∘(Id⊗μ₀) + μ₀∘(Id⊗φ))∘Φ_w`.
pub fn delta2_right(mu0: &Algebra, phi: &BilinearMap, w: &GroupAlgebraElement) -> TrilinearMap {
    phi_apply(&phi.compose_right(mu0).add(&mu0.compose_right(phi)), w)
}

pub fn delta2(
    mu0: &Algebra,
    phi: &BilinearMap,
    flavor: &CoboundaryFlavor,
) -> Result<TrilinearMap, Error> {
    same_dim(mu0.dim(), phi.dim())?;
    Ok(match flavor {
        CoboundaryFlavor::Hochschild => base_delta2(mu0, phi, BaseDifferential::Hochschild),
        CoboundaryFlavor::Anti => base_delta2(mu0, phi, BaseDifferential::Anti),
        CoboundaryFlavor::Twisted { v, base } => {
            if v.is_zero() {
                return Err(Error::ZeroVector);
            }
            phi_apply(&base_delta2(mu0, phi, *base), v)
        }
        CoboundaryFlavor::LeftRight { v, w } => {
            delta2_left(mu0, phi, v).sub(&delta2_right(mu0, phi, w))
        }
    })
}

/// The four components of the degree-3 differential of the anti-associative
/// minimal model, evaluated on demand on basis 5-tuples.
pub struct Delta3Anti<'a> {
    mu0: &'a Algebra,
    g: &'a TrilinearMap,
}

pub fn delta3_anti<'a>(mu0: &'a Algebra, g: &'a TrilinearMap) -> Result<Delta3Anti<'a>, Error> {
    same_dim(mu0.dim(), g.dim())?;
    Ok(Delta3Anti { mu0, g })
}

impl Delta3Anti<'_> {
    /// Component `k ∈ 1..=4` at `(x, y, z, t, u)`.
    pub fn eval(&self, k: usize, args: [usize; 5]) -> Vec<Rational> {
        let n = self.mu0.dim();
        let m = |a: &[Rational], b: &[Rational]| self.mu0.apply(a, b);
        let g = |a: &[Rational], b: &[Rational], c: &[Rational]| self.g.apply(a, b, c);
        let [x, y, z, t, u] = args.map(|i| unit(n, i));
        let xy = m(&x, &y);
        let yz = m(&y, &z);
        let zt = m(&z, &t);
        let tu = m(&t, &u);
        let mut acc = vec![Rational::zero(); n];
        let mut term = |sign: i64, v: Vec<Rational>| axpy(&mut acc, &int(sign), &v);
        match k {
            1 => {
                term(1, m(&x, &g(&y, &z, &tu)));
                term(-1, g(&x, &y, &m(&z, &tu)));
                term(1, m(&xy, &g(&z, &t, &u)));
                term(-1, g(&xy, &zt, &u));
                term(1, m(&g(&xy, &z, &t), &u));
                term(-1, g(&m(&xy, &z), &t, &u));
                term(1, m(&g(&x, &y, &z), &tu));
                term(-1, g(&x, &yz, &tu));
            }
            2 => {
                term(1, g(&m(&xy, &z), &t, &u));
                term(-1, m(&g(&xy, &z, &t), &u));
                term(1, m(&g(&x, &y, &zt), &u));
                term(-1, g(&x, &m(&y, &zt), &u));
                term(1, m(&x, &g(&y, &zt, &u)));
                term(-1, g(&x, &y, &m(&zt, &u)));
                term(1, m(&xy, &g(&z, &t, &u)));
                term(-1, g(&xy, &z, &tu));
            }
            3 => {
                term(1, g(&x, &yz, &tu));
                term(-1, m(&x, &g(&yz, &t, &u)));
                term(1, g(&x, &m(&yz, &t), &u));
                term(-1, m(&x, &m(&g(&y, &z, &t), &u)));
                term(1, m(&g(&x, &y, &zt), &u));
                term(-1, m(&g(&xy, &z, &t), &u));
                term(1, m(&m(&g(&x, &y, &z), &t), &u));
                term(-1, g(&m(&x, &yz), &t, &u));
            }
            4 => {
                term(1, g(&xy, &zt, &u));
                term(-1, g(&x, &y, &m(&zt, &u)));
                term(1, m(&x, &g(&y, &zt, &u)));
                term(-1, g(&x, &m(&y, &zt), &u));
                term(1, m(&m(&x, &g(&y, &z, &t)), &u));
                term(-1, m(&g(&x, &yz, &t), &u));
                term(1, m(&m(&g(&x, &y, &z), &t), &u));
                term(-1, m(&g(&xy, &z, &t), &u));
            }
            _ => panic!("delta3 has components 1..=4, got {k}"),
        }
        acc
    }
}

/// Per-component summary of `δ³(δ²_AA φ)` over all basis 5-tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta3Residual {
    /// `(component, nonzero tuple count, first nonzero tuple)` for components 1..=4.
    pub components: Vec<(usize, usize, Option<Witness>)>,
}

impl Delta3Residual {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|(_, c, _)| *c == 0)
    }
}

impl fmt::Display for Delta3Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, count, w) in &self.components {
            match w {
                None => writeln!(f, "delta3_{k}: zero")?,
                Some(w) => writeln!(f, "delta3_{k}: {count} nonzero tuples, first {w}")?,
            }
        }
        Ok(())
    }
}

/// Evaluates `δ³ ∘ δ²_AA` on `φ` at every basis 5-tuple.
pub fn delta3_residual(mu0: &Algebra, phi: &BilinearMap) -> Result<Delta3Residual, Error> {
    let g = delta2(mu0, phi, &CoboundaryFlavor::Anti)?;
    let d3 = delta3_anti(mu0, &g)?;
    let n = mu0.dim();
    let mut components = Vec::new();
    for k in 1..=4 {
        let mut count = 0;
        let mut first = None;
        for code in 0..n.pow(5) {
            let mut args = [0; 5];
            let mut c = code;
            for slot in args.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            let v = d3.eval(k, args);
            if !is_zero_vec(&v) {
                count += 1;
                first.get_or_insert(Witness {
                    args: args.to_vec(),
                    value: v,
                });
            }
        }
        components.push((k, count, first));
    }
    Ok(Delta3Residual { components })
}

/// A basis of the cocycle space `ker δ²` and the rank of the coboundary system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSpace {
    pub dim: usize,
    pub basis: Vec<BilinearMap>,
    pub coboundary_rank: usize,
}

/// Kernel of `φ ↦ δ²φ` with unknowns ordered lexicographically by `(i, j, k)`.
pub fn cocycle_basis(mu0: &Algebra, flavor: &CoboundaryFlavor) -> Result<CocycleSpace, Error> {
    joint_cocycle_basis(mu0, std::slice::from_ref(flavor))
}

/// Common kernel of several differentials.
pub fn joint_cocycle_basis(
    mu0: &Algebra,
    flavors: &[CoboundaryFlavor],
) -> Result<CocycleSpace, Error> {
    let n = mu0.dim();
    let unknowns = n * n * n;
    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut c = vec![Rational::zero(); unknowns];
        c[u] = int(1);
        let phi = BilinearMap::from_flat(n, c);
        let mut col = Vec::new();
        for f in flavors {
            let d = delta2(mu0, &phi, f)?;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        col.extend_from_slice(d.at(i, j, k));
                    }
                }
            }
        }
        columns.push(col);
    }
    let rows = flavors.len() * n.pow(4);
    let system = Matrix::from_columns(rows, &columns);
    let kernel = system.kernel_basis();
    let basis: Vec<BilinearMap> = kernel
        .into_iter()
        .map(|k| BilinearMap::from_flat(n, k))
        .collect();
    Ok(CocycleSpace {
        dim: basis.len(),
        coboundary_rank: unknowns - basis.len(),
        basis,
    })
}

/// Twelve-term expansion of `δ²_H φ ∘ Φ_w` valid for commutative `μ₀`.
pub fn commutative_twisted_expansion(
    mu0: &Algebra,
    phi: &BilinearMap,
    w: &GroupAlgebraElement,
) -> TrilinearMap {
    let a: Vec<Rational> = w.components().to_vec();
    let c = |i: usize| a[i - 1].clone();
    let terms = [
        c(5) - c(1),
        c(3) - c(4),
        c(4) - c(2),
        c(6) - c(5),
        c(1) - c(6),
        c(2) - c(3),
        c(1) + c(2),
        c(3) + c(5),
        c(4) + c(6),
        -(c(1) + c(4)),
        -(c(2) + c(5)),
        -(c(3) + c(6)),
    ];
    TrilinearMap::from_fn(mu0.dim(), |x, y, z| {
        let ph = |p: usize, q: usize| phi.at(p, q).to_vec();
        let values = [
            mu0.rmul(x, &ph(y, z)),
            mu0.rmul(x, &ph(z, y)),
            mu0.rmul(y, &ph(x, z)),
            mu0.rmul(y, &ph(z, x)),
            mu0.rmul(z, &ph(x, y)),
            mu0.rmul(z, &ph(y, x)),
            phi.lmul(mu0.at(x, y), z),
            phi.lmul(mu0.at(y, z), x),
            phi.lmul(mu0.at(x, z), y),
            phi.rmul(x, mu0.at(y, z)),
            phi.rmul(y, mu0.at(x, z)),
            phi.rmul(z, mu0.at(x, y)),
        ];
        combine(&terms, &values, mu0.dim())
    })
}

/// Twelve-term expansion of `δ²_AA φ ∘ Φ_w` valid for anticommutative `μ₀`.
pub fn anticommutative_anti_expansion(
    mu0: &Algebra,
    phi: &BilinearMap,
    w: &GroupAlgebraElement,
) -> TrilinearMap {
    let a: Vec<Rational> = w.components().to_vec();
    let c = |i: usize| a[i - 1].clone();
    let terms = [
        c(1) - c(5),
        c(4) - c(3),
        c(2) - c(4),
        c(5) - c(6),
        c(6) - c(1),
        c(3) - c(2),
        c(1) - c(2),
        c(5) - c(3),
        c(6) - c(4),
        c(1) - c(4),
        c(5) - c(2),
        c(6) - c(3),
    ];
    TrilinearMap::from_fn(mu0.dim(), |x, y, z| {
        let ph = |p: usize, q: usize| phi.at(p, q).to_vec();
        let values = [
            mu0.rmul(x, &ph(y, z)),
            mu0.rmul(x, &ph(z, y)),
            mu0.rmul(y, &ph(x, z)),
            mu0.rmul(y, &ph(z, x)),
            mu0.rmul(z, &ph(x, y)),
            mu0.rmul(z, &ph(y, x)),
            phi.lmul(mu0.at(x, y), z),
            phi.lmul(mu0.at(y, z), x),
            phi.lmul(mu0.at(z, x), y),
            phi.rmul(x, mu0.at(y, z)),
            phi.rmul(y, mu0.at(z, x)),
            phi.rmul(z, mu0.at(x, y)),
        ];
        combine(&terms, &values, mu0.dim())
    })
}

fn combine(coeffs: &[Rational], values: &[Vec<Rational>], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (s, v) in coeffs.iter().zip(values) {
        axpy(&mut out, s, v);
    }
    out
}
