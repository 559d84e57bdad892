//! Degree-truncated relatively free algebras.
//!
//! A [`Presentation`] fixes a product symmetry and a list of multilinear cubic
//! identities. [`graded_basis`] builds the free algebra of that variety one
//! degree at a time, one multidegree component at a time. In degree `d` the
//! spanning set is every product of basis monomials of lower degree, so
//! consequences of lower-degree relations vanish automatically; the new
//! relations are the identities evaluated on all triples of basis monomials.
//! Since the identities are multilinear this covers every substitution.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::Zero;

use crate::error::Error;
use crate::linalg::{int, parse_rational, Matrix, Rational};
use crate::sigma3::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Commutative,
    Anticommutative,
}

impl Symmetry {
    fn parse(s: &str) -> Option<Symmetry> {
        match s {
            "none" => Some(Symmetry::None),
            "comm" | "commutative" => Some(Symmetry::Commutative),
            "anticomm" | "anticommutative" => Some(Symmetry::Anticommutative),
            _ => None,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Symmetry::None => "none",
            Symmetry::Commutative => "comm",
            Symmetry::Anticommutative => "anticomm",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `(xy)z`
    LL,
    /// `x(yz)`
    RR,
}

/// `coeff · bracketing(x_{σ(1)}, x_{σ(2)}, x_{σ(3)})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub bracketing: Bracketing,
    pub perm: Perm,
}

pub type Relation = Vec<Term>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    symmetry: Symmetry,
    relations: Vec<Relation>,
}

pub const PRESETS: [&str; 5] = [
    "jacobi-jordan",
    "anti-associative",
    "aas",
    "lie",
    "associative",
];

fn term(c: i64, bracketing: Bracketing, perm: Perm) -> Term {
    Term {
        coeff: int(c),
        bracketing,
        perm,
    }
}

impl Presentation {
    pub fn new(
        generators: usize,
        symmetry: Symmetry,
        relations: Vec<Relation>,
    ) -> Result<Self, Error> {
        if generators == 0 {
            return Err(Error::Invalid(
                "a presentation needs at least one generator".into(),
            ));
        }
        let relations: Vec<Relation> = relations.into_iter().filter(|r| !r.is_empty()).collect();
        if relations.is_empty() && symmetry == Symmetry::None {
            return Err(Error::Invalid(
                "a presentation needs a relation or a symmetry".into(),
            ));
        }
        Ok(Presentation {
            generators,
            symmetry,
            relations,
        })
    }

    pub fn preset(name: &str, generators: usize) -> Result<Self, Error> {
        use Bracketing::{LL, RR};
        let cyclic = vec![
            term(1, RR, Perm::Id),
            term(1, RR, Perm::C),
            term(1, RR, Perm::C2),
        ];
        let anti = vec![term(1, LL, Perm::Id), term(1, RR, Perm::Id)];
        let (sym, rel) = match name {
            "jacobi-jordan" | "jj" => (Symmetry::Commutative, cyclic),
            "anti-associative" | "aass" => (Symmetry::None, anti),
            "aas" => (Symmetry::Anticommutative, anti),
            "lie" => (Symmetry::Anticommutative, cyclic),
            "associative" | "ass" => (
                Symmetry::None,
                vec![term(1, LL, Perm::Id), term(-1, RR, Perm::Id)],
            ),
            _ => return Err(Error::Invalid(format!("unknown preset `{name}`"))),
        };
        Presentation::new(generators, sym, vec![rel])
    }

    /// Parses `gens <n>`, `symmetry <none|comm|anticomm>` and
    /// `rel <coeff> <LL|RR> <perm> [+ <coeff> <LL|RR> <perm> …]` lines.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut gens = None;
        let mut symmetry = Symmetry::None;
        let mut relations = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let err = |msg: String| Error::Parse { line, msg };
            let content = raw.split('#').next().unwrap_or("").trim();
            let Some((head, rest)) =
                content
                    .split_once(char::is_whitespace)
                    .or(if content.is_empty() {
                        None
                    } else {
                        Some((content, ""))
                    })
            else {
                continue;
            };
            let rest = rest.trim();
            match head {
                "gens" => {
                    let n = rest
                        .parse::<usize>()
                        .map_err(|_| err(format!("bad generator count `{rest}`")))?;
                    gens = Some(n);
                }
                "symmetry" => {
                    symmetry = Symmetry::parse(rest)
                        .ok_or_else(|| err(format!("unknown symmetry `{rest}`")))?;
                }
                "rel" => {
                    let mut rel = Vec::new();
                    for chunk in rest.split('+') {
                        let w: Vec<&str> = chunk.split_whitespace().collect();
                        let [c, b, p] = w[..] else {
                            return Err(err(format!(
                                "expected `<coeff> <LL|RR> <perm>`, got `{}`",
                                chunk.trim()
                            )));
                        };
                        let coeff = parse_rational(c).map_err(|e| err(e.to_string()))?;
                        let bracketing = match b {
                            "LL" => Bracketing::LL,
                            "RR" => Bracketing::RR,
                            _ => return Err(err(format!("unknown bracketing `{b}`"))),
                        };
                        let perm = Perm::parse(p)
                            .ok_or_else(|| err(format!("unknown permutation `{p}`")))?;
                        rel.push(Term {
                            coeff,
                            bracketing,
                            perm,
                        });
                    }
                    relations.push(rel);
                }
                _ => return Err(err(format!("unknown directive `{head}`"))),
            }
        }
        let gens = gens.ok_or(Error::Parse {
            line: 0,
            msg: "missing `gens` line".into(),
        })?;
        Presentation::new(gens, symmetry, relations)
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn with_generators(&self, generators: usize) -> Result<Self, Error> {
        Presentation::new(generators, self.symmetry, self.relations.clone())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.generators)?;
        writeln!(f, "symmetry {}", self.symmetry.label())?;
        for rel in &self.relations {
            let terms: Vec<String> = rel
                .iter()
                .map(|t| {
                    let b = match t.bracketing {
                        Bracketing::LL => "LL",
                        Bracketing::RR => "RR",
                    };
                    format!("{} {b} {}", t.coeff, t.perm.label())
                })
                .collect();
            writeln!(f, "rel {}", terms.join(" + "))?;
        }
        Ok(())
    }
}

/// A basis monomial: component index and position in that component's basis.
/// Components are numbered by increasing degree, so the derived order
/// compares degree first.
pub type MonoRef = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Gen(usize),
    Prod(MonoRef, MonoRef),
}

#[derive(Clone, Debug)]
struct Component {
    multideg: Vec<u8>,
    degree: usize,
    basis: Vec<Tree>,
    candidates: Vec<(MonoRef, MonoRef)>,
    cand_index: HashMap<(MonoRef, MonoRef), usize>,
    /// Basis coordinates of each candidate product.
    reduce: Vec<Vec<Rational>>,
}

/// A homogeneous element: coordinates in one multidegree component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    comp: usize,
    coords: Vec<Rational>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element {
            comp: self.comp,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, o: &Element) -> Result<Element, Error> {
        if self.comp != o.comp {
            return Err(Error::Invalid(
                "adding elements of different multidegree".into(),
            ));
        }
        let coords = self
            .coords
            .iter()
            .zip(&o.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Element {
            comp: self.comp,
            coords,
        })
    }
}

/// The free algebra of a presentation through a fixed degree.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    presentation: Presentation,
    max_degree: usize,
    multilinear: bool,
    components: Vec<Component>,
    by_multideg: HashMap<Vec<u8>, usize>,
}

/// All multidegrees of total `d` over `g` generators, lexicographically descending.
fn multidegrees(g: usize, d: usize, cap: u8) -> Vec<Vec<u8>> {
    fn rec(g: usize, d: usize, cap: u8, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == g - 1 {
            if d <= cap as usize {
                let mut v = prefix.clone();
                v.push(d as u8);
                out.push(v);
            }
            return;
        }
        for a in (0..=d.min(cap as usize)).rev() {
            prefix.push(a as u8);
            rec(g, d - a, cap, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, d, cap, &mut Vec::new(), &mut out);
    out
}

fn sub_multideg(a: &[u8], b: &[u8]) -> Option<Vec<u8>> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

impl GradedBasis {
    fn build(p: &Presentation, max_degree: usize, multilinear: bool) -> Result<Self, Error> {
        if max_degree < 1 {
            return Err(Error::Invalid("maximal degree must be at least 1".into()));
        }
        let g = p.generators;
        let cap = if multilinear { 1 } else { u8::MAX };
        if max_degree > u8::MAX as usize {
            return Err(Error::Invalid("maximal degree too large".into()));
        }
        let mut fb = GradedBasis {
            presentation: p.clone(),
            max_degree,
            multilinear,
            components: Vec::new(),
            by_multideg: HashMap::new(),
        };
        for i in 0..g {
            let mut md = vec![0u8; g];
            md[i] = 1;
            fb.push(Component {
                multideg: md,
                degree: 1,
                basis: vec![Tree::Gen(i)],
                candidates: Vec::new(),
                cand_index: HashMap::new(),
                reduce: Vec::new(),
            });
        }
        for d in 2..=max_degree {
            for md in multidegrees(g, d, cap) {
                let c = fb.component(md, d);
                fb.push(c);
            }
        }
        Ok(fb)
    }

    fn push(&mut self, c: Component) {
        self.by_multideg
            .insert(c.multideg.clone(), self.components.len());
        self.components.push(c);
    }

    /// Canonical candidate for the product of two basis monomials, with sign.
    fn canonical(&self, a: MonoRef, b: MonoRef) -> Option<((MonoRef, MonoRef), i64)> {
        match self.presentation.symmetry {
            Symmetry::None => Some(((a, b), 1)),
            Symmetry::Commutative => Some(if a <= b { ((a, b), 1) } else { ((b, a), 1) }),
            Symmetry::Anticommutative => match a.cmp(&b) {
                std::cmp::Ordering::Less => Some(((a, b), 1)),
                std::cmp::Ordering::Greater => Some(((b, a), -1)),
                std::cmp::Ordering::Equal => None,
            },
        }
    }

    /// Product of two homogeneous elements as candidate coordinates of the
    /// target component (before reduction).
    fn product_candidates(&self, target: &Component, x: &Element, y: &Element) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); target.candidates.len()];
        for (i, xi) in x.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if let Some((key, sign)) = self.canonical((x.comp, i), (y.comp, j)) {
                    let idx = target.cand_index[&key];
                    let v = xi * yj;
                    if sign > 0 {
                        out[idx] += v;
                    } else {
                        out[idx] -= v;
                    }
                }
            }
        }
        out
    }

    fn reduce(target: &Component, comp: usize, cand: &[Rational]) -> Element {
        let mut coords = vec![Rational::zero(); target.basis.len()];
        for (c, x) in cand.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, r) in target.reduce[c]
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.is_zero())
            {
                coords[k] += x * r;
            }
        }
        Element { comp, coords }
    }

    fn target_of(&self, a: usize, b: usize) -> Result<usize, Error> {
        let md: Vec<u8> = self.components[a]
            .multideg
            .iter()
            .zip(&self.components[b].multideg)
            .map(|(x, y)| x + y)
            .collect();
        self.by_multideg.get(&md).copied().ok_or_else(|| {
            Error::Invalid(format!(
                "product of degree {} lies outside the computed range",
                md.iter().map(|&x| x as usize).sum::<usize>()
            ))
        })
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element, Error> {
        let t = self.target_of(x.comp, y.comp)?;
        let target = &self.components[t];
        let cand = self.product_candidates(target, x, y);
        Ok(Self::reduce(target, t, &cand))
    }

    fn basis_element(&self, (comp, idx): MonoRef) -> Element {
        let mut coords = vec![Rational::zero(); self.components[comp].basis.len()];
        coords[idx] = int(1);
        Element { comp, coords }
    }

    pub fn generator(&self, i: usize) -> Result<Element, Error> {
        if i >= self.presentation.generators {
            return Err(Error::Invalid(format!("no generator {i}")));
        }
        Ok(self.basis_element((i, 0)))
    }

    /// Evaluates one relation on three homogeneous elements.
    pub fn relation_value(&self, rel: &Relation, args: [&Element; 3]) -> Result<Element, Error> {
        let mut acc: Option<Element> = None;
        for t in rel {
            let im = t.perm.images();
            let (a, b, c) = (args[im[0]], args[im[1]], args[im[2]]);
            let v = match t.bracketing {
                Bracketing::LL => self.mul(&self.mul(a, b)?, c)?,
                Bracketing::RR => self.mul(a, &self.mul(b, c)?)?,
            }
            .scale(&t.coeff);
            acc = Some(match acc {
                None => v,
                Some(s) => s.add(&v)?,
            });
        }
        acc.ok_or_else(|| Error::Invalid("empty relation".into()))
    }

    /// Builds the component of multidegree `md`; all lower degrees exist.
    fn component(&self, md: Vec<u8>, degree: usize) -> Component {
        let lower: Vec<usize> = (0..self.components.len()).collect();
        let mut cands = Vec::new();
        for &a in &lower {
            let Some(rest) = sub_multideg(&md, &self.components[a].multideg) else {
                continue;
            };
            let Some(&b) = self.by_multideg.get(&rest) else {
                continue;
            };
            for i in 0..self.components[a].basis.len() {
                for j in 0..self.components[b].basis.len() {
                    if let Some((key, _)) = self.canonical((a, i), (b, j)) {
                        cands.push(key);
                    }
                }
            }
        }
        cands.sort();
        cands.dedup();
        let cand_index: HashMap<_, _> = cands.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut comp = Component {
            multideg: md.clone(),
            degree,
            basis: Vec::new(),
            candidates: cands,
            cand_index,
            reduce: Vec::new(),
        };
        let m = comp.candidates.len();
        // Until reduced, the candidates themselves serve as coordinates.
        comp.reduce = (0..m)
            .map(|i| {
                let mut v = vec![Rational::zero(); m];
                v[i] = int(1);
                v
            })
            .collect();
        comp.basis = comp
            .candidates
            .iter()
            .map(|&(a, b)| Tree::Prod(a, b))
            .collect();

        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for &a in &lower {
            let Some(r1) = sub_multideg(&md, &self.components[a].multideg) else {
                continue;
            };
            for &b in &lower {
                let Some(r2) = sub_multideg(&r1, &self.components[b].multideg) else {
                    continue;
                };
                let Some(&c) = self.by_multideg.get(&r2) else {
                    continue;
                };
                for i in 0..self.components[a].basis.len() {
                    for j in 0..self.components[b].basis.len() {
                        for k in 0..self.components[c].basis.len() {
                            let args = [
                                self.basis_element((a, i)),
                                self.basis_element((b, j)),
                                self.basis_element((c, k)),
                            ];
                            for rel in &self.presentation.relations {
                                let row = self.relation_row(&comp, rel, &args);
                                if row.iter().any(|x| !x.is_zero()) {
                                    rows.push(row);
                                }
                            }
                        }
                    }
                }
            }
        }

        // Columns reversed so that pivots land on the latest candidates and the
        // earliest candidates survive as basis monomials.
        let reversed: Vec<Vec<Rational>> = rows
            .into_iter()
            .map(|r| r.into_iter().rev().collect())
            .collect();
        let pivots = if reversed.is_empty() {
            Vec::new()
        } else {
            let mut mat = Matrix::from_rows(reversed);
            let piv = mat.rref();
            piv.iter()
                .enumerate()
                .map(|(r, &pc)| {
                    (
                        m - 1 - pc,
                        mat.row(r).iter().rev().cloned().collect::<Vec<_>>(),
                    )
                })
                .collect::<Vec<_>>()
        };
        let pivot_rows: BTreeMap<usize, Vec<Rational>> = pivots.into_iter().collect();
        let free: Vec<usize> = (0..m).filter(|c| !pivot_rows.contains_key(c)).collect();
        let reduce = (0..m)
            .map(|c| match pivot_rows.get(&c) {
                Some(row) => free.iter().map(|&f| -row[f].clone()).collect(),
                None => free
                    .iter()
                    .map(|&f| if f == c { int(1) } else { Rational::zero() })
                    .collect(),
            })
            .collect();
        comp.basis = free
            .iter()
            .map(|&f| Tree::Prod(comp.candidates[f].0, comp.candidates[f].1))
            .collect();
        comp.reduce = reduce;
        comp
    }

    /// One relation instance as candidate coordinates of `target`.
    fn relation_row(
        &self,
        target: &Component,
        rel: &Relation,
        args: &[Element; 3],
    ) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); target.candidates.len()];
        for t in rel {
            let im = t.perm.images();
            let (a, b, c) = (&args[im[0]], &args[im[1]], &args[im[2]]);
            let cand = match t.bracketing {
                Bracketing::LL => {
                    let ab = self.mul(a, b).expect("lower degree product");
                    self.product_candidates(target, &ab, c)
                }
                Bracketing::RR => {
                    let bc = self.mul(b, c).expect("lower degree product");
                    self.product_candidates(target, a, &bc)
                }
            };
            for (r, x) in row.iter_mut().zip(cand) {
                *r += &t.coeff * x;
            }
        }
        row
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Dimensions of degrees `1..=max_degree`.
    pub fn dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree];
        for c in &self.components {
            out[c.degree - 1] += c.basis.len();
        }
        out
    }

    /// Dimension of the component with the given multidegree.
    pub fn component_dim(&self, multideg: &[u8]) -> Option<usize> {
        self.by_multideg
            .get(multideg)
            .map(|&c| self.components[c].basis.len())
    }

    /// Basis monomials of degree `d`, rendered as bracketed words.
    pub fn monomials(&self, d: usize) -> Vec<String> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.degree == d)
            .flat_map(|(ci, c)| (0..c.basis.len()).map(move |i| (ci, i)))
            .map(|r| self.render(r, true))
            .collect()
    }

    /// All basis monomials of degree `d` as elements.
    pub fn basis_elements(&self, d: usize) -> Vec<Element> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.degree == d)
            .flat_map(|(ci, c)| (0..c.basis.len()).map(move |i| (ci, i)))
            .map(|r| self.basis_element(r))
            .collect()
    }

    fn gen_name(&self, i: usize) -> String {
        const NAMES: [&str; 4] = ["X", "Y", "Z", "W"];
        if self.presentation.generators <= NAMES.len() {
            NAMES[i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }

    fn render(&self, (c, i): MonoRef, top: bool) -> String {
        match &self.components[c].basis[i] {
            Tree::Gen(g) => self.gen_name(*g),
            Tree::Prod(a, b) => {
                let s = format!("{}{}", self.render(*a, false), self.render(*b, false));
                if top {
                    s
                } else {
                    format!("({s})")
                }
            }
        }
    }

    /// Whether only multilinear components were built.
    pub fn is_multilinear(&self) -> bool {
        self.multilinear
    }
}

/// The free algebra of `p` through degree `max_degree`.
pub fn graded_basis(p: &Presentation, max_degree: usize) -> Result<GradedBasis, Error> {
    GradedBasis::build(p, max_degree, false)
}

/// Dimension of the multidegree `(1,…,1)` part of the free algebra on `k`
/// generators: the arity-`k` component of the operad.
pub fn multilinear_dim(p: &Presentation, k: usize) -> Result<usize, Error> {
    if k < 1 {
        return Err(Error::Invalid("arity must be at least 1".into()));
    }
    let fb = GradedBasis::build(&p.with_generators(k)?, k, true)?;
    Ok(fb.component_dim(&vec![1; k]).unwrap_or(0))
}

/// Per-degree dimensions of the non-unital free algebra on `n` generators.
pub fn hilbert_coeffs(p: &Presentation, n: usize, max_degree: usize) -> Result<Vec<usize>, Error> {
    Ok(graded_basis(&p.with_generators(n)?, max_degree)?.dims())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_jordan_dims() {
        let jj = Presentation::preset("jacobi-jordan", 2).unwrap();
        assert_eq!(graded_basis(&jj, 5).unwrap().dims(), vec![2, 3, 2, 1, 0]);
        let jj1 = jj.with_generators(1).unwrap();
        assert_eq!(graded_basis(&jj1, 3).unwrap().dims(), vec![1, 1, 0]);
    }

    #[test]
    fn operad_dims() {
        let jj = Presentation::preset("jacobi-jordan", 1).unwrap();
        let aa = Presentation::preset("anti-associative", 1).unwrap();
        let ass = Presentation::preset("associative", 1).unwrap();
        let lie = Presentation::preset("lie", 1).unwrap();
        let dims = |p: &Presentation| {
            (1..=4)
                .map(|k| multilinear_dim(p, k).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(dims(&jj), vec![1, 1, 2, 5]);
        assert_eq!(dims(&aa), vec![1, 2, 6, 0]);
        assert_eq!(dims(&ass), vec![1, 2, 6, 24]);
        assert_eq!(dims(&lie), vec![1, 1, 2, 6]);
    }

    #[test]
    fn aas_three_generators() {
        let p = Presentation::preset("aas", 3).unwrap();
        let fb = graded_basis(&p, 4).unwrap();
        assert_eq!(fb.dims(), vec![3, 3, 1, 0]);
        assert_eq!(fb.monomials(2), vec!["XY", "XZ", "YZ"]);
    }

    #[test]
    fn parse_round_trip() {
        let p = Presentation::preset("jacobi-jordan", 2).unwrap();
        let text = p.to_string();
        assert_eq!(Presentation::parse(&text).unwrap(), p);
        let q =
            Presentation::parse("gens 2\nsymmetry comm\nrel 1 RR id + 1 RR c + 1 RR c2\n").unwrap();
        assert_eq!(q, p);
        assert!(matches!(
            Presentation::parse("gens 2\nrel 1 XX id"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Presentation::parse("gens 2\nsymmetry none\n").is_err());
    }

    #[test]
    fn out_of_range_product() {
        let p = Presentation::preset("jacobi-jordan", 1).unwrap();
        let fb = graded_basis(&p, 1).unwrap();
        let x = fb.generator(0).unwrap();
        assert!(fb.mul(&x, &x).is_err());
        assert!(graded_basis(&p, 0).is_err());
    }
}
