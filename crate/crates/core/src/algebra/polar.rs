//! Polarization `μ ↔ (ρ, ψ)` and the Leibniz-type trilinear defects.

use super::{axpy, same_dim, Algebra, BilinearMap, TrilinearMap};
use crate::error::Error;
use crate::linalg::{rat, Rational};

/// `ρ(x,y) = ½(xy + yx)` and `ψ(x,y) = ½(xy − yx)`.
pub fn polarize(a: &Algebra) -> (BilinearMap, BilinearMap) {
    let t = a.transpose();
    let half = rat(1, 2);
    (a.add(&t).scale(&half), a.sub(&t).scale(&half))
}

/// `μ = ρ + ψ`; inverse of [`polarize`].
pub fn depolarize(rho: &BilinearMap, psi: &BilinearMap) -> Result<Algebra, Error> {
    same_dim(rho.dim(), psi.dim())?;
    if !rho.is_symmetric() {
        return Err(Error::Symmetry("rho must be symmetric".into()));
    }
    if !psi.is_skew() {
        return Err(Error::Symmetry("psi must be skew-symmetric".into()));
    }
    Ok(rho.add(psi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeibnizKind {
    /// `L(m,b)(x,y,z) = b(m(x,y),z) − m(x,b(y,z)) − m(b(x,z),y)`
    L,
    /// `LR(m,b)(x,y,z) = b(x,m(y,z)) − m(y,b(x,z)) − m(b(x,y),z)`
    LR,
    /// `Lg(η,ϱ)(x,y,z) = ϱ(x,η(y,z)) + (−1)^|ϱ| η(y,ϱ(x,z)) + (−1)^|ϱ| η(ϱ(x,y),z)`
    Lg,
}

/// Parity of a bilinear map in the graded Leibniz identity.
///
/// Symmetric maps have degree 0 and skew maps degree 1, so `Lg(ψ,ψ)` is the
/// Jacobi identity and `Lg(ρ,ρ)` the Jacobi-Jordan identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Symmetric,
    Skew,
}

impl Parity {
    pub fn degree(self) -> u8 {
        match self {
            Parity::Symmetric => 0,
            Parity::Skew => 1,
        }
    }

    fn check(self, m: &BilinearMap, what: &str) -> Result<(), Error> {
        let ok = match self {
            Parity::Symmetric => m.is_symmetric(),
            Parity::Skew => m.is_skew(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Symmetry(
                format!("{what} is not {self:?}").to_lowercase(),
            ))
        }
    }
}

/// The Leibniz-type defect of `b` acting on `m` (for `Lg`, `m = η` and `b = ϱ`).
///
/// `parities` is required for `Lg` and must match the actual symmetry of `(η, ϱ)`.
pub fn leibniz_like(
    kind: LeibnizKind,
    m: &BilinearMap,
    b: &BilinearMap,
    parities: Option<(Parity, Parity)>,
) -> Result<TrilinearMap, Error> {
    same_dim(m.dim(), b.dim())?;
    let n = m.dim();
    let out = match kind {
        LeibnizKind::L => TrilinearMap::from_fn(n, |x, y, z| {
            let mut v = b.lmul(m.at(x, y), z);
            axpy(&mut v, &-one(), &m.rmul(x, b.at(y, z)));
            axpy(&mut v, &-one(), &m.lmul(b.at(x, z), y));
            v
        }),
        LeibnizKind::LR => TrilinearMap::from_fn(n, |x, y, z| {
            let mut v = b.rmul(x, m.at(y, z));
            axpy(&mut v, &-one(), &m.rmul(y, b.at(x, z)));
            axpy(&mut v, &-one(), &m.lmul(b.at(x, y), z));
            v
        }),
        LeibnizKind::Lg => {
            let (pe, pr) = parities.ok_or_else(|| {
                Error::Symmetry("graded Leibniz needs the parities of both maps".into())
            })?;
            pe.check(m, "eta")?;
            pr.check(b, "varrho")?;
            graded_leibniz(m, b, pr)
        }
    };
    Ok(out)
}

/// `Lg(η,ϱ)` with the parity of `ϱ` taken on trust.
pub(crate) fn graded_leibniz(eta: &BilinearMap, rho: &BilinearMap, p: Parity) -> TrilinearMap {
    let s = if p.degree() == 0 { one() } else { -one() };
    TrilinearMap::from_fn(eta.dim(), |x, y, z| {
        let mut v = rho.rmul(x, eta.at(y, z));
        axpy(&mut v, &s, &eta.rmul(y, rho.at(x, z)));
        axpy(&mut v, &s, &eta.lmul(rho.at(x, y), z));
        v
    })
}

fn one() -> Rational {
    rat(1, 1)
}

/// `J(x,y,z) = ψ(x,ψ(y,z)) − ψ(ψ(x,y),z) − ψ(y,ψ(x,z))`.
pub fn jacobiator(psi: &BilinearMap) -> Result<TrilinearMap, Error> {
    if !psi.is_skew() {
        return Err(Error::Symmetry(
            "jacobiator needs a skew-symmetric map".into(),
        ));
    }
    Ok(jacobi_defect(psi))
}

pub(crate) fn jacobi_defect(psi: &BilinearMap) -> TrilinearMap {
    TrilinearMap::from_fn(psi.dim(), |x, y, z| {
        let mut v = psi.rmul(x, psi.at(y, z));
        axpy(&mut v, &-one(), &psi.lmul(psi.at(x, y), z));
        axpy(&mut v, &-one(), &psi.rmul(y, psi.at(x, z)));
        v
    })
}

/// `x(yz) + y(zx) + z(xy)`.
pub(crate) fn cyclic_jacobi_sum(m: &BilinearMap) -> TrilinearMap {
    TrilinearMap::from_fn(m.dim(), |x, y, z| {
        let mut v = m.rmul(x, m.at(y, z));
        axpy(&mut v, &one(), &m.rmul(y, m.at(z, x)));
        axpy(&mut v, &one(), &m.rmul(z, m.at(x, y)));
        v
    })
}

/// The two identities tying `ρ = •` and `ψ = [,]` for a polarized Leibniz product:
/// `x•[y,z] − [x,y]•z − [x,y•z]` and `[x,y•z] + [x•z,y] − z•[x,y] − J(x,y,z)`,
/// with `J` as in [`jacobiator`].
pub fn leibniz_polarization_defects(
    rho: &BilinearMap,
    psi: &BilinearMap,
) -> Result<(TrilinearMap, TrilinearMap), Error> {
    same_dim(rho.dim(), psi.dim())?;
    let first = TrilinearMap::from_fn(rho.dim(), |x, y, z| {
        let mut v = rho.rmul(x, psi.at(y, z));
        axpy(&mut v, &-one(), &rho.lmul(psi.at(x, y), z));
        axpy(&mut v, &-one(), &psi.rmul(x, rho.at(y, z)));
        v
    });
    let j = jacobi_defect(psi);
    let second = TrilinearMap::from_fn(rho.dim(), |x, y, z| {
        let mut v = psi.rmul(x, rho.at(y, z));
        axpy(&mut v, &one(), &psi.lmul(rho.at(x, z), y));
        axpy(&mut v, &-one(), &rho.rmul(z, psi.at(x, y)));
        axpy(&mut v, &-one(), j.at(x, y, z));
        v
    });
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use num::Zero;

    fn bracket_3d() -> BilinearMap {
        let mut p = BilinearMap::zeros(3);
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 1)] {
            p.set(i, j, k, int(1));
            p.set(j, i, k, int(-1));
        }
        p
    }

    #[test]
    fn polarize_example() {
        let mut m = Algebra::zeros(3);
        m.set(0, 0, 1, int(1));
        m.set(0, 1, 2, int(1));
        m.set(1, 0, 2, int(-1));
        let (rho, psi) = polarize(&m);
        assert_eq!(rho.at(0, 0), &[int(0), int(1), int(0)][..]);
        assert!(rho.at(0, 1).iter().all(Zero::is_zero));
        assert_eq!(psi.at(0, 1), &[int(0), int(0), int(1)][..]);
        assert_eq!(depolarize(&rho, &psi).unwrap(), m);
    }

    #[test]
    fn depolarize_checks_symmetry() {
        let p = bracket_3d();
        assert!(depolarize(&p, &p).is_err());
        assert!(depolarize(&BilinearMap::zeros(3), &p).is_ok());
    }

    #[test]
    fn jacobiator_examples() {
        let mut p = BilinearMap::zeros(2);
        p.set(0, 1, 1, int(1));
        p.set(1, 0, 1, int(-1));
        assert!(jacobiator(&p).unwrap().is_zero());
        assert!(!jacobi_defect(&bracket_3d())
            .at(0, 1, 2)
            .iter()
            .all(Zero::is_zero));
        let mut not_skew = BilinearMap::zeros(1);
        not_skew.set(0, 0, 0, int(1));
        assert!(jacobiator(&not_skew).is_err());
    }

    #[test]
    fn graded_leibniz_specialisations() {
        let psi = bracket_3d();
        let lg = leibniz_like(
            LeibnizKind::Lg,
            &psi,
            &psi,
            Some((Parity::Skew, Parity::Skew)),
        );
        assert_eq!(lg.unwrap(), jacobi_defect(&psi));
        let mut rho = BilinearMap::zeros(2);
        rho.set(0, 0, 1, int(1));
        rho.set(0, 1, 0, int(2));
        rho.set(1, 0, 0, int(2));
        let lg = leibniz_like(
            LeibnizKind::Lg,
            &rho,
            &rho,
            Some((Parity::Symmetric, Parity::Symmetric)),
        );
        assert_eq!(lg.unwrap(), cyclic_jacobi_sum(&rho));
        assert!(leibniz_like(
            LeibnizKind::Lg,
            &psi,
            &psi,
            Some((Parity::Symmetric, Parity::Skew))
        )
        .is_err());
        assert!(leibniz_like(LeibnizKind::Lg, &psi, &psi, None).is_err());
    }

    #[test]
    fn leibniz_with_zero_bracket() {
        let psi = bracket_3d();
        let z = BilinearMap::zeros(3);
        assert!(leibniz_like(LeibnizKind::L, &psi, &z, None)
            .unwrap()
            .is_zero());
        assert!(leibniz_like(LeibnizKind::LR, &psi, &z, None)
            .unwrap()
            .is_zero());
    }
}
