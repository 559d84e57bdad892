//! The symmetric group Σ₃ and its group algebra K[Σ₃].
//!
//! Canonical basis order is `Id, τ₁₂, τ₁₃, τ₂₃, c, c²` with `c: 1↦2, 2↦3, 3↦1`.
//! Products compose right to left: `s·t` applies `t` first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::Error;
use crate::linalg::{int, parse_rational, Matrix, Rational, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perm {
    Id,
    T12,
    T13,
    T23,
    C,
    C2,
}

impl Perm {
    pub const ALL: [Perm; 6] = [Perm::Id, Perm::T12, Perm::T13, Perm::T23, Perm::C, Perm::C2];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Zero-based images: `images()[i] = σ(i)`.
    pub fn images(self) -> [usize; 3] {
        match self {
            Perm::Id => [0, 1, 2],
            Perm::T12 => [1, 0, 2],
            Perm::T13 => [2, 1, 0],
            Perm::T23 => [0, 2, 1],
            Perm::C => [1, 2, 0],
            Perm::C2 => [2, 0, 1],
        }
    }

    pub fn from_images(images: [usize; 3]) -> Perm {
        *Perm::ALL
            .iter()
            .find(|p| p.images() == images)
            .expect("not a permutation of {0,1,2}")
    }

    /// Signature of the permutation.
    pub fn sign(self) -> i64 {
        match self {
            Perm::Id | Perm::C | Perm::C2 => 1,
            _ => -1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Perm::Id => "id",
            Perm::T12 => "t12",
            Perm::T13 => "t13",
            Perm::T23 => "t23",
            Perm::C => "c",
            Perm::C2 => "c2",
        }
    }

    pub fn parse(s: &str) -> Option<Perm> {
        Perm::ALL
            .into_iter()
            .find(|p| p.label().eq_ignore_ascii_case(s))
    }
}

/// `s∘t`, with `t` applied first.
pub fn perm_mul(s: Perm, t: Perm) -> Perm {
    let (si, ti) = (s.images(), t.images());
    Perm::from_images([si[ti[0]], si[ti[1]], si[ti[2]]])
}

impl Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        perm_mul(self, rhs)
    }
}

/// An element `Σ aᵢσᵢ` of K[Σ₃].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement(pub [Rational; 6]);

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn perm(p: Perm) -> Self {
        let mut v = Self::zero();
        v.0[p.index()] = Rational::one();
        v
    }

    pub fn id() -> Self {
        Self::perm(Perm::Id)
    }

    pub fn from_ints(a: [i64; 6]) -> Self {
        GroupAlgebraElement(a.map(int))
    }

    /// Signed sum of all permutations.
    pub fn v_lad() -> Self {
        Self::from_ints([1, -1, -1, -1, 1, 1])
    }

    /// Plain sum of all permutations.
    pub fn v_3pa() -> Self {
        Self::from_ints([1; 6])
    }

    pub fn components(&self) -> &[Rational; 6] {
        &self.0
    }

    pub fn coeff(&self, p: Perm) -> &Rational {
        &self.0[p.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn plain_sum(&self) -> Rational {
        self.0.iter().sum()
    }

    /// `a₁ − a₂ − a₃ − a₄ + a₅ + a₆`, the signum character.
    pub fn alternating_sum(&self) -> Rational {
        Perm::ALL
            .iter()
            .map(|&p| &self.0[p.index()] * int(p.sign()))
            .sum()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        GroupAlgebraElement(std::array::from_fn(|i| &self.0[i] * s))
    }

    /// Parses six comma-separated rationals, one of the aliases
    /// `vlad v3pa id g2 g3 g4 g5 wa`, or a combination such as `Id - t12 + 1/2c`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let alias = match s.to_ascii_lowercase().as_str() {
            "vlad" => Some([1, -1, -1, -1, 1, 1]),
            "v3pa" => Some([1; 6]),
            "id" => Some([1, 0, 0, 0, 0, 0]),
            "g2" => Some([1, -1, 0, 0, 0, 0]),
            "g3" => Some([1, 0, -1, 0, 0, 0]),
            "g4" => Some([1, 0, 0, -1, 0, 0]),
            "g5" => Some([1, 0, 0, 0, 1, 1]),
            "wa" => Some([1, -1, 0, 0, 1, 0]),
            _ => None,
        };
        if let Some(a) = alias {
            return Ok(Self::from_ints(a));
        }
        if !s.contains(',') && s.chars().any(|c| c.is_ascii_alphabetic()) {
            return Self::parse_combination(s);
        }
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected six comma-separated rationals or an alias, got `{s}`"),
            });
        }
        let mut out = Self::zero();
        for (slot, p) in out.0.iter_mut().zip(parts) {
            *slot = parse_rational(p)?;
        }
        Ok(out)
    }

    fn parse_combination(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("cannot read `{s}` as an element of K[S3]"),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms: Vec<String> = Vec::new();
        for (i, ch) in compact.char_indices() {
            if i == 0 || ch == '+' || ch == '-' {
                terms.push(String::new());
            }
            terms.last_mut().expect("started above").push(ch);
        }
        let mut out = Self::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let lower = body.to_ascii_lowercase();
            let p = ["t12", "t13", "t23", "c2", "id", "c"]
                .into_iter()
                .find(|l| lower.ends_with(l))
                .and_then(Perm::parse)
                .ok_or_else(bad)?;
            let prefix = &body[..body.len() - p.label().len()];
            let prefix = prefix.strip_suffix('*').unwrap_or(prefix);
            let mut c = if prefix.is_empty() {
                Rational::one()
            } else {
                parse_rational(prefix).map_err(|_| bad())?
            };
            if neg {
                c = -c;
            }
            out.0[p.index()] += c;
        }
        Ok(out)
    }

    /// Comma-separated component list, the inverse of [`parse`](Self::parse).
    pub fn literal(&self) -> String {
        self.0
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for GroupAlgebraElement {
    /// Linear-combination form such as `Id - t12 + c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["Id", "t12", "t13", "t23", "c", "c2"];
        let mut first = true;
        for (a, name) in self.0.iter().zip(NAMES) {
            if a.is_zero() {
                continue;
            }
            let neg = a < &Rational::zero();
            let mag = if neg { -a.clone() } else { a.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn ga_mul(u: &GroupAlgebraElement, v: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero();
    for s in Perm::ALL {
        let a = u.coeff(s);
        if a.is_zero() {
            continue;
        }
        for t in Perm::ALL {
            let b = v.coeff(t);
            if !b.is_zero() {
                out.0[(s * t).index()] += a * b;
            }
        }
    }
    out
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        ga_mul(self, rhs)
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        GroupAlgebraElement(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        GroupAlgebraElement(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        GroupAlgebraElement(std::array::from_fn(|i| -&self.0[i]))
    }
}

/// The 6×6 matrix whose `j`-th column holds the components of `σⱼ·v`.
pub fn m_matrix(v: &GroupAlgebraElement) -> Matrix {
    let cols: Vec<Vec<Rational>> = Perm::ALL
        .iter()
        .map(|&s| ga_mul(&GroupAlgebraElement::perm(s), v).0.to_vec())
        .collect();
    Matrix::from_columns(6, &cols)
}

/// `dim F_v`, the dimension of the span of the orbit of `v`.
pub fn fv_rank(v: &GroupAlgebraElement) -> Result<usize, Error> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(m_matrix(v).rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    VLad,
    V3Pa,
}

impl Target {
    pub fn vector(self) -> GroupAlgebraElement {
        match self {
            Target::VLad => GroupAlgebraElement::v_lad(),
            Target::V3Pa => GroupAlgebraElement::v_3pa(),
        }
    }
}

/// Membership of a target in `F_v`, with a witness `u` such that `u·v = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub certificate: Option<GroupAlgebraElement>,
}

/// Decides `target ∈ F_v` by its character sum and by solving `M_v U = target`;
/// the two answers must agree.
pub fn contains(v: &GroupAlgebraElement, target: Target) -> Result<Membership, Error> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let by_character = match target {
        Target::VLad => !v.alternating_sum().is_zero(),
        Target::V3Pa => !v.plain_sum().is_zero(),
    };
    let t = target.vector();
    let certificate = match m_matrix(v).solve(&t.0)? {
        Solution::Consistent { particular, .. } => {
            let u = GroupAlgebraElement(particular.try_into().expect("six components"));
            debug_assert_eq!(ga_mul(&u, v), t);
            Some(u)
        }
        Solution::Inconsistent => None,
    };
    if by_character != certificate.is_some() {
        return Err(Error::Invalid(format!(
            "character test and linear solve disagree on {} for {v}",
            t.literal()
        )));
    }
    Ok(Membership {
        member: by_character,
        certificate,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeLabel {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeLabel::I => "I",
            TypeLabel::II => "II",
            TypeLabel::III => "III",
            TypeLabel::IV => "IV",
            TypeLabel::V => "V",
            TypeLabel::VI => "VI",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub dim_fv: usize,
    pub has_vlad: bool,
    pub has_v3pa: bool,
    /// Lie-admissible type, present only when `v_Lad ∈ F_v`.
    pub type_label: Option<TypeLabel>,
}

pub fn classify_vector(v: &GroupAlgebraElement) -> Result<Classification, Error> {
    let dim_fv = fv_rank(v)?;
    let has_vlad = contains(v, Target::VLad)?.member;
    let has_v3pa = contains(v, Target::V3Pa)?.member;
    let type_label = has_vlad.then(|| {
        [
            TypeLabel::I,
            TypeLabel::II,
            TypeLabel::III,
            TypeLabel::IV,
            TypeLabel::V,
            TypeLabel::VI,
        ][dim_fv - 1]
    });
    Ok(Classification {
        dim_fv,
        has_vlad,
        has_v3pa,
        type_label,
    })
}
