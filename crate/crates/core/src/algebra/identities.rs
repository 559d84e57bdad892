//! Named identities evaluated on basis tuples.

use std::fmt;

use super::polar::{cyclic_jacobi_sum, jacobi_defect};
use super::{associator, phi_apply, vw_defect, Algebra, AssociatorKind, TrilinearMap};
use crate::error::Error;
use crate::linalg::{fmt_vec, is_zero_vec, Rational};
use crate::sigma3::GroupAlgebraElement;

/// A basis tuple on which an identity fails, with the offending value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub args: Vec<usize>,
    pub value: Vec<Rational>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "({}) -> [{}]", args.join(", "), fmt_vec(&self.value))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn of(w: Option<Witness>) -> Self {
        Verdict {
            holds: w.is_none(),
            witness: w,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Commutative,
    Skew,
    Associative,
    AntiAssociative,
    Lie,
    JacobiJordan,
    LeftLeibniz,
    RightLeibniz,
    SymmetricLeibniz,
    WeaklyAssociative,
    LieAdmissible,
    ThreePowerAssociative,
    Nil4,
}

impl Identity {
    pub const ALL: [Identity; 13] = [
        Identity::Commutative,
        Identity::Skew,
        Identity::Associative,
        Identity::AntiAssociative,
        Identity::Lie,
        Identity::JacobiJordan,
        Identity::LeftLeibniz,
        Identity::RightLeibniz,
        Identity::SymmetricLeibniz,
        Identity::WeaklyAssociative,
        Identity::LieAdmissible,
        Identity::ThreePowerAssociative,
        Identity::Nil4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Commutative => "commutative",
            Identity::Skew => "skew",
            Identity::Associative => "associative",
            Identity::AntiAssociative => "anti_associative",
            Identity::Lie => "lie",
            Identity::JacobiJordan => "jacobi_jordan",
            Identity::LeftLeibniz => "left_leibniz",
            Identity::RightLeibniz => "right_leibniz",
            Identity::SymmetricLeibniz => "symmetric_leibniz",
            Identity::WeaklyAssociative => "weakly_associative",
            Identity::LieAdmissible => "lie_admissible",
            Identity::ThreePowerAssociative => "three_power_associative",
            Identity::Nil4 => "nil4",
        }
    }

    /// Accepts the registry name with `-` or `_` separators; `leibniz` means right Leibniz.
    pub fn parse(s: &str) -> Result<Identity, Error> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        if key == "leibniz" {
            return Ok(Identity::RightLeibniz);
        }
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == key)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }

    pub fn evaluate(self, a: &Algebra) -> Verdict {
        let tri = |t: TrilinearMap| t.first_nonzero();
        let wa = GroupAlgebraElement::from_ints([1, -1, 0, 0, 1, 0]);
        let id = GroupAlgebraElement::id();
        let left = || {
            let w = GroupAlgebraElement::from_ints([1, -1, 0, 0, 0, 0]);
            tri(vw_defect(a, &id, &w))
        };
        let right = || {
            let v = GroupAlgebraElement::from_ints([1, 0, 0, -1, 0, 0]);
            tri(vw_defect(a, &v, &id))
        };
        let w = match self {
            Identity::Commutative => a.sub(&a.transpose()).first_nonzero(),
            Identity::Skew => a.add(&a.transpose()).first_nonzero(),
            Identity::Associative => tri(associator(a, AssociatorKind::Full)),
            Identity::AntiAssociative => tri(associator(a, AssociatorKind::Anti)),
            Identity::Lie => Identity::Skew
                .evaluate(a)
                .witness
                .or_else(|| tri(jacobi_defect(a))),
            Identity::JacobiJordan => Identity::Commutative
                .evaluate(a)
                .witness
                .or_else(|| tri(cyclic_jacobi_sum(a))),
            Identity::LeftLeibniz => left(),
            Identity::RightLeibniz => right(),
            Identity::SymmetricLeibniz => left().or_else(right),
            Identity::WeaklyAssociative => {
                tri(phi_apply(&associator(a, AssociatorKind::Full), &wa))
            }
            Identity::LieAdmissible => tri(phi_apply(
                &associator(a, AssociatorKind::Full),
                &GroupAlgebraElement::v_lad(),
            )),
            Identity::ThreePowerAssociative => tri(phi_apply(
                &associator(a, AssociatorKind::Full),
                &GroupAlgebraElement::v_3pa(),
            )),
            Identity::Nil4 => nil4_witness(a),
        };
        Verdict::of(w)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates a registry identity by name.
pub fn check_identity(a: &Algebra, name: &str) -> Result<bool, Error> {
    Ok(Identity::parse(name)?.evaluate(a).holds)
}

/// Checks the five bracketings of four basis elements.
fn nil4_witness(a: &Algebra) -> Option<Witness> {
    let n = a.dim();
    let mul = |u: &[Rational], v: &[Rational]| a.apply(u, v);
    let e = |i: usize| super::unit(n, i);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for t in 0..n {
                    let (ex, ey, ez, et) = (e(x), e(y), e(z), e(t));
                    let xy = a.at(x, y).to_vec();
                    let yz = a.at(y, z).to_vec();
                    let zt = a.at(z, t).to_vec();
                    let candidates = [
                        mul(&mul(&xy, &ez), &et),
                        mul(&mul(&ex, &yz), &et),
                        mul(&xy, &zt),
                        mul(&ex, &mul(&yz, &et)),
                        mul(&ex, &mul(&ey, &zt)),
                    ];
                    if let Some(v) = candidates.into_iter().find(|v| !is_zero_vec(v)) {
                        return Some(Witness {
                            args: vec![x, y, z, t],
                            value: v,
                        });
                    }
                }
            }
        }
    }
    None
}
