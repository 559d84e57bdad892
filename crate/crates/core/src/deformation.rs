//! Truncated formal deformations `μ_t = μ₀ + Σ tⁱφᵢ` and the Poisson-type
//! structures read off their first-order term.
//!
//! Two conventions for the skew/symmetric split coexist: [`polarize`] uses
//! `½(xy ± yx)`, while [`first_order`] returns the factor-free
//! `ψ₁ = φ₁ − φ₁ᵀ`, `ρ₁ = φ₁ + φ₁ᵀ`. They differ by a factor of 2.
//!
//! [`polarize`]: crate::algebra::polarize

use std::fmt;

use crate::algebra::{
    axpy, graded_leibniz, jacobiator, leibniz_like, phi_apply, same_dim, Algebra, BilinearMap,
    Identity, LeibnizKind, Parity, TrilinearMap, Verdict, Witness,
};
use crate::error::Error;
use crate::linalg::int;
use crate::sigma3::GroupAlgebraElement;

/// Maps `φ₀ = μ₀, φ₁, …, φ_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    maps: Vec<BilinearMap>,
}

impl TruncatedDeformation {
    pub fn new(maps: Vec<BilinearMap>) -> Result<Self, Error> {
        let first = maps
            .first()
            .ok_or_else(|| Error::Invalid("a deformation needs μ₀".into()))?;
        for m in &maps {
            same_dim(first.dim(), m.dim())?;
        }
        Ok(TruncatedDeformation { maps })
    }

    pub fn order(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.maps[0].dim()
    }

    pub fn mu0(&self) -> &Algebra {
        &self.maps[0]
    }

    pub fn maps(&self) -> &[BilinearMap] {
        &self.maps
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BulletFlavor {
    /// `φ∘(χ⊗Id) − φ∘(Id⊗χ)`
    Plain,
    /// The plain bullet composed with `Φ_v`.
    V(GroupAlgebraElement),
    /// `φ∘(χ⊗Id)∘Φ_v`
    L(GroupAlgebraElement),
    /// `φ∘(Id⊗χ)∘Φ_w`
    R(GroupAlgebraElement),
}

impl BulletFlavor {
    /// Parses `plain`, `v:<vec>`, `l:<vec>` or `r:<vec>`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "plain" {
            return Ok(BulletFlavor::Plain);
        }
        let vec = GroupAlgebraElement::parse;
        if let Some(rest) = s.strip_prefix("v:") {
            return Ok(BulletFlavor::V(vec(rest)?));
        }
        if let Some(rest) = s.strip_prefix("l:") {
            return Ok(BulletFlavor::L(vec(rest)?));
        }
        if let Some(rest) = s.strip_prefix("r:") {
            return Ok(BulletFlavor::R(vec(rest)?));
        }
        Err(Error::Parse {
            line: 0,
            msg: format!("unknown deformation flavor `{s}`"),
        })
    }
}

pub fn bullet(
    phi: &BilinearMap,
    chi: &BilinearMap,
    flavor: &BulletFlavor,
) -> Result<TrilinearMap, Error> {
    same_dim(phi.dim(), chi.dim())?;
    Ok(match flavor {
        BulletFlavor::Plain => phi.compose_left(chi).sub(&phi.compose_right(chi)),
        BulletFlavor::V(v) => phi_apply(&phi.compose_left(chi).sub(&phi.compose_right(chi)), v),
        BulletFlavor::L(v) => phi_apply(&phi.compose_left(chi), v),
        BulletFlavor::R(w) => phi_apply(&phi.compose_right(chi), w),
    })
}

/// The order-`k` left-hand side of the deformation equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderResidual {
    pub order: usize,
    pub residual: TrilinearMap,
    /// First basis triple, in lexicographic order, where the residual is nonzero.
    pub witness: Option<Witness>,
}

impl OrderResidual {
    fn new(order: usize, residual: TrilinearMap) -> Self {
        let witness = residual.first_nonzero();
        OrderResidual {
            order,
            residual,
            witness,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for OrderResidual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "order {}: zero", self.order),
            Some(w) => write!(
                f,
                "order {}: nonzero on {} triples, first {w}",
                self.order,
                self.residual.support_size()
            ),
        }
    }
}

/// Evaluates `Σ_{i+j=k} φᵢ • φⱼ` for every order `k ≤ through`.
pub fn verify(
    def: &TruncatedDeformation,
    flavor: &BulletFlavor,
    through: usize,
) -> Result<Vec<OrderResidual>, Error> {
    check_order(def, through)?;
    (0..=through)
        .map(|k| {
            let mut acc = TrilinearMap::zeros(def.dim());
            for i in 0..=k {
                acc = acc.add(&bullet(&def.maps[i], &def.maps[k - i], flavor)?);
            }
            Ok(OrderResidual::new(k, acc))
        })
        .collect()
}

/// Orders 0 to 2 of the `(v, w)`-deformation equations:
/// `Σ_{i+j=k} φᵢ •^L_v φⱼ − φᵢ •^R_w φⱼ = 0`.
pub fn vw_verify(
    def: &TruncatedDeformation,
    v: &GroupAlgebraElement,
    w: &GroupAlgebraElement,
    through: usize,
) -> Result<Vec<OrderResidual>, Error> {
    if through > 2 {
        return Err(Error::OrderOutOfRange {
            order: 2,
            requested: through,
        });
    }
    check_order(def, through)?;
    let (l, r) = (BulletFlavor::L(v.clone()), BulletFlavor::R(w.clone()));
    (0..=through)
        .map(|k| {
            let mut acc = TrilinearMap::zeros(def.dim());
            for i in 0..=k {
                let (a, b) = (&def.maps[i], &def.maps[k - i]);
                acc = acc.add(&bullet(a, b, &l)?).sub(&bullet(a, b, &r)?);
            }
            Ok(OrderResidual::new(k, acc))
        })
        .collect()
}

fn check_order(def: &TruncatedDeformation, through: usize) -> Result<(), Error> {
    if through > def.order() {
        Err(Error::OrderOutOfRange {
            order: def.order(),
            requested: through,
        })
    } else {
        Ok(())
    }
}

/// `(ψ₁, ρ₁) = (φ₁ − φ₁ᵀ, φ₁ + φ₁ᵀ)`, without the ½ of [`polarize`](crate::algebra::polarize).
pub fn first_order(def: &TruncatedDeformation) -> Result<(BilinearMap, BilinearMap), Error> {
    let phi1 = def.maps.get(1).ok_or(Error::OrderOutOfRange {
        order: 0,
        requested: 1,
    })?;
    let t = phi1.transpose();
    Ok((phi1.sub(&t), phi1.add(&t)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoissonKind {
    Poisson,
    NonassocPoisson,
    VPoisson(GroupAlgebraElement),
    NonassocVPoisson(GroupAlgebraElement),
    AntiPoisson,
    PseudoLeft,
    PseudoRight,
}

impl PoissonKind {
    /// Parses `poisson`, `nonassoc-poisson`, `v-poisson:<vec>`,
    /// `nonassoc-v-poisson:<vec>`, `anti-poisson`, `pseudo-left` or `pseudo-right`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let vec = GroupAlgebraElement::parse;
        if let Some(rest) = s.strip_prefix("nonassoc-v-poisson:") {
            return Ok(PoissonKind::NonassocVPoisson(vec(rest)?));
        }
        if let Some(rest) = s.strip_prefix("v-poisson:") {
            return Ok(PoissonKind::VPoisson(vec(rest)?));
        }
        Ok(match s {
            "poisson" => PoissonKind::Poisson,
            "nonassoc-poisson" => PoissonKind::NonassocPoisson,
            "anti-poisson" => PoissonKind::AntiPoisson,
            "pseudo-left" => PoissonKind::PseudoLeft,
            "pseudo-right" => PoissonKind::PseudoRight,
            _ => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("unknown Poisson kind `{s}`"),
                })
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonReport {
    pub axioms: Vec<(String, Verdict)>,
}

impl PoissonReport {
    pub fn holds(&self) -> bool {
        self.axioms.iter().all(|(_, v)| v.holds)
    }
}

impl fmt::Display for PoissonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in &self.axioms {
            match &v.witness {
                None => writeln!(f, "{name}: yes")?,
                Some(w) => writeln!(f, "{name}: no, {w}")?,
            }
        }
        Ok(())
    }
}

fn verdict(t: TrilinearMap) -> Verdict {
    let w = t.first_nonzero();
    Verdict {
        holds: w.is_none(),
        witness: w,
    }
}

/// `μ(x,β(y,z)) − β(y,μ(x,z)) − β(μ(x,y),z)`
fn pseudo_left(mu: &BilinearMap, beta: &BilinearMap) -> TrilinearMap {
    TrilinearMap::from_fn(mu.dim(), |x, y, z| {
        let mut v = mu.rmul(x, beta.at(y, z));
        axpy(&mut v, &int(-1), &beta.rmul(y, mu.at(x, z)));
        axpy(&mut v, &int(-1), &beta.lmul(mu.at(x, y), z));
        v
    })
}

/// `μ(z,β(x,y)) − β(x,μ(y,z)) + β(y,μ(x,z))`
fn pseudo_right(mu: &BilinearMap, beta: &BilinearMap) -> TrilinearMap {
    TrilinearMap::from_fn(mu.dim(), |x, y, z| {
        let mut v = mu.rmul(z, beta.at(x, y));
        axpy(&mut v, &int(-1), &beta.rmul(x, mu.at(y, z)));
        axpy(&mut v, &int(1), &beta.rmul(y, mu.at(x, z)));
        v
    })
}

/// Evaluates each axiom of the requested Poisson-type structure on `(μ, β)`.
pub fn poisson_check(
    mu: &BilinearMap,
    beta: &BilinearMap,
    kind: &PoissonKind,
) -> Result<PoissonReport, Error> {
    same_dim(mu.dim(), beta.dim())?;
    let mut axioms: Vec<(String, Verdict)> = Vec::new();
    let mut push = |name: &str, v: Verdict| axioms.push((name.to_string(), v));
    let ident = |i: Identity| i.evaluate(mu);
    if *kind == PoissonKind::AntiPoisson {
        if !beta.is_symmetric() {
            return Err(Error::Symmetry(
                "anti-Poisson needs a symmetric bracket".into(),
            ));
        }
        push("product skew-symmetric", ident(Identity::Skew));
        push("product anti-associative", ident(Identity::AntiAssociative));
        push(
            "bracket Jacobi-Jordan",
            Identity::JacobiJordan.evaluate(beta),
        );
        push(
            "graded Leibniz",
            verdict(graded_leibniz(mu, beta, Parity::Symmetric)),
        );
        return Ok(PoissonReport { axioms });
    }
    if !beta.is_skew() {
        return Err(Error::Symmetry("the bracket must be skew-symmetric".into()));
    }
    let leibniz = || leibniz_like(LeibnizKind::L, mu, beta, None).expect("same dimension");
    push("product commutative", ident(Identity::Commutative));
    match kind {
        PoissonKind::Poisson | PoissonKind::VPoisson(_) => {
            push("product associative", ident(Identity::Associative));
        }
        PoissonKind::PseudoLeft => push("product left Leibniz", ident(Identity::LeftLeibniz)),
        PoissonKind::PseudoRight => push("product right Leibniz", ident(Identity::RightLeibniz)),
        _ => {}
    }
    match kind {
        PoissonKind::Poisson
        | PoissonKind::NonassocPoisson
        | PoissonKind::VPoisson(_)
        | PoissonKind::NonassocVPoisson(_) => {
            push("bracket Lie", verdict(jacobiator(beta)?));
        }
        _ => {}
    }
    match kind {
        PoissonKind::Poisson | PoissonKind::NonassocPoisson => {
            push("Leibniz rule", verdict(leibniz()));
        }
        PoissonKind::VPoisson(v) | PoissonKind::NonassocVPoisson(v) => {
            push("twisted Leibniz rule", verdict(phi_apply(&leibniz(), v)));
        }
        PoissonKind::PseudoLeft => push("pseudo-Leibniz relation", verdict(pseudo_left(mu, beta))),
        PoissonKind::PseudoRight => {
            push("pseudo-Leibniz relation", verdict(pseudo_right(mu, beta)))
        }
        PoissonKind::AntiPoisson => unreachable!(),
    }
    Ok(PoissonReport { axioms })
}
