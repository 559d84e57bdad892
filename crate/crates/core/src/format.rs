//! Text format for algebras and truncated deformations.
//!
//! ```text
//! # comment
//! dim 3
//! basis e1 e2 e3          (optional; default e1..en)
//! param a 1/2             (named rational, usable in coefficients)
//! mul e1 e1 -> e2
//! mul e1 e3 -> a e2 + -1/2 e3
//! mul e3 e1 -> 2*a e2 - e1
//! ```
//!
//! Omitted products are zero. A deformation file shares the header and then
//! lists `order k` sections for `k = 0, 1, …`, each holding the `mul` lines of
//! `φ_k`.

use std::collections::{BTreeMap, HashSet};

use num::{One, Zero};

use crate::algebra::{Algebra, BilinearMap};
use crate::deformation::TruncatedDeformation;
use crate::error::Error;
use crate::linalg::{parse_rational, Rational};

/// A parsed algebra together with its header data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: Algebra,
    pub basis: Vec<String>,
    pub params: Vec<(String, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationFile {
    pub deformation: TruncatedDeformation,
    pub basis: Vec<String>,
    pub params: Vec<(String, Rational)>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct Header {
    dim: Option<usize>,
    basis: Option<Vec<String>>,
    params: BTreeMap<String, Rational>,
    order: Vec<String>,
}

impl Header {
    fn new() -> Self {
        Header {
            dim: None,
            basis: None,
            params: BTreeMap::new(),
            order: Vec::new(),
        }
    }

    fn names(&self) -> Vec<String> {
        match &self.basis {
            Some(b) => b.clone(),
            None => (1..=self.dim.unwrap_or(0))
                .map(|i| format!("e{i}"))
                .collect(),
        }
    }

    fn index(&self, name: &str, line: usize) -> Result<usize, Error> {
        self.names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| perr(line, format!("unknown basis element `{name}`")))
    }

    /// Handles `dim`, `basis` and `param`; returns false for other directives.
    fn directive(&mut self, head: &str, rest: &[&str], line: usize) -> Result<bool, Error> {
        match head {
            "dim" => {
                if self.dim.is_some() {
                    return Err(perr(line, "duplicate `dim` line"));
                }
                let [n] = rest else {
                    return Err(perr(line, "expected `dim <n>`"));
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| perr(line, format!("bad dimension `{n}`")))?;
                if n == 0 {
                    return Err(perr(line, "dimension must be positive"));
                }
                self.dim = Some(n);
            }
            "basis" => {
                let n = self.dim.ok_or_else(|| perr(line, "`basis` before `dim`"))?;
                if rest.len() != n {
                    return Err(perr(
                        line,
                        format!("expected {n} basis names, found {}", rest.len()),
                    ));
                }
                let names: Vec<String> = rest.iter().map(|s| s.to_string()).collect();
                if names.iter().collect::<HashSet<_>>().len() != n {
                    return Err(perr(line, "repeated basis name"));
                }
                if let Some(bad) = names.iter().find(|s| parse_rational(s).is_ok()) {
                    return Err(perr(
                        line,
                        format!("basis name `{bad}` looks like a number"),
                    ));
                }
                self.basis = Some(names);
            }
            "param" => {
                let [name, value] = rest else {
                    return Err(perr(line, "expected `param <name> <rational>`"));
                };
                if parse_rational(name).is_ok() || name.contains('*') || name.starts_with('-') {
                    return Err(perr(line, format!("bad parameter name `{name}`")));
                }
                if self.params.contains_key(*name) {
                    return Err(perr(line, format!("duplicate parameter `{name}`")));
                }
                let v = parse_rational(value).map_err(|e| perr(line, e.to_string()))?;
                self.params.insert(name.to_string(), v);
                self.order.push(name.to_string());
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn apply_overrides(&mut self, overrides: &[(&str, Rational)]) -> Result<(), Error> {
        for (name, v) in overrides {
            match self.params.get_mut(*name) {
                Some(slot) => *slot = v.clone(),
                None => return Err(Error::Invalid(format!("no parameter named `{name}`"))),
            }
        }
        Ok(())
    }

    fn params(&self) -> Vec<(String, Rational)> {
        self.order
            .iter()
            .map(|n| (n.clone(), self.params[n].clone()))
            .collect()
    }

    fn coeff(&self, tok: &str, line: usize) -> Result<Rational, Error> {
        if let Ok(r) = parse_rational(tok) {
            return Ok(r);
        }
        let (scale, name) = match tok.split_once('*') {
            Some((r, name)) => (
                parse_rational(r).map_err(|e| perr(line, e.to_string()))?,
                name,
            ),
            None => match tok.strip_prefix('-') {
                Some(name) => (-Rational::one(), name),
                None => (Rational::one(), tok),
            },
        };
        let v = self
            .params
            .get(name)
            .ok_or_else(|| perr(line, format!("unbound parameter `{name}`")))?;
        Ok(scale * v)
    }

    /// Parses `ei ej -> terms` into `(i, j, coefficients)`.
    fn mul_line(&self, rest: &[&str], line: usize) -> Result<(usize, usize, Vec<Rational>), Error> {
        let n = self.dim.ok_or_else(|| perr(line, "`mul` before `dim`"))?;
        let [a, b, arrow, rhs @ ..] = rest else {
            return Err(perr(line, "expected `mul <ei> <ej> -> <terms>`"));
        };
        if *arrow != "->" {
            return Err(perr(line, "expected `->`"));
        }
        let (i, j) = (self.index(a, line)?, self.index(b, line)?);
        let mut out = vec![Rational::zero(); n];
        let mut sign = Rational::one();
        let mut pending: Option<Rational> = None;
        let mut expect_term = true;
        for (pos, tok) in rhs.iter().enumerate() {
            if *tok == "+" || *tok == "-" {
                if pending.is_some() || (expect_term && pos > 0) {
                    return Err(perr(line, format!("unexpected `{tok}`")));
                }
                if *tok == "-" {
                    sign = -sign;
                }
                expect_term = true;
            } else if let Ok(k) = self.index(tok, line) {
                if !expect_term {
                    return Err(perr(line, format!("missing `+` before `{tok}`")));
                }
                let c = pending.take().unwrap_or_else(Rational::one);
                out[k] += &sign * c;
                sign = Rational::one();
                expect_term = false;
            } else if pending.is_none() && expect_term {
                pending = Some(self.coeff(tok, line)?);
            } else {
                return Err(perr(line, format!("unexpected `{tok}`")));
            }
        }
        if expect_term || pending.is_some() {
            return Err(perr(line, "incomplete right-hand side"));
        }
        Ok((i, j, out))
    }
}

fn tokens(raw: &str) -> Vec<&str> {
    raw.split('#')
        .next()
        .unwrap_or("")
        .split_whitespace()
        .collect()
}

/// Parses an algebra file, with parameter values optionally overridden.
pub fn parse_algebra_file(
    text: &str,
    overrides: &[(&str, Rational)],
) -> Result<AlgebraFile, Error> {
    let mut h = Header::new();
    let mut lines = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let toks = tokens(raw);
        let Some((&head, rest)) = toks.split_first() else {
            continue;
        };
        if h.directive(head, rest, line)? {
            continue;
        }
        match head {
            "mul" if h.dim.is_none() => return Err(perr(line, "`mul` before `dim`")),
            "mul" => lines.push((line, rest.to_vec())),
            "order" => return Err(perr(line, "`order` sections belong in deformation files")),
            _ => return Err(perr(line, format!("unknown directive `{head}`"))),
        }
    }
    h.apply_overrides(overrides)?;
    let n = h.dim.ok_or_else(|| perr(0, "missing `dim` line"))?;
    let algebra = fill(&h, n, &lines)?;
    Ok(AlgebraFile {
        algebra,
        basis: h.names(),
        params: h.params(),
    })
}

fn fill(h: &Header, n: usize, lines: &[(usize, Vec<&str>)]) -> Result<BilinearMap, Error> {
    let mut a = BilinearMap::zeros(n);
    let mut seen = HashSet::new();
    for (line, rest) in lines {
        let (i, j, v) = h.mul_line(rest, *line)?;
        if !seen.insert((i, j)) {
            return Err(perr(
                *line,
                format!("duplicate product for ({}, {})", rest[0], rest[1]),
            ));
        }
        for (k, c) in v.into_iter().enumerate() {
            a.set(i, j, k, c);
        }
    }
    Ok(a)
}

pub fn parse_algebra(text: &str) -> Result<Algebra, Error> {
    Ok(parse_algebra_file(text, &[])?.algebra)
}

pub fn parse_deformation_file(
    text: &str,
    overrides: &[(&str, Rational)],
) -> Result<DeformationFile, Error> {
    let mut h = Header::new();
    let mut sections: Vec<Vec<(usize, Vec<&str>)>> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let toks = tokens(raw);
        let Some((&head, rest)) = toks.split_first() else {
            continue;
        };
        if h.directive(head, rest, line)? {
            if !sections.is_empty() {
                return Err(perr(
                    line,
                    format!("`{head}` after the first `order` section"),
                ));
            }
            continue;
        }
        match head {
            "order" => {
                let [k] = rest else {
                    return Err(perr(line, "expected `order <k>`"));
                };
                let k: usize = k
                    .parse()
                    .map_err(|_| perr(line, format!("bad order `{k}`")))?;
                if k != sections.len() {
                    return Err(perr(line, format!("expected `order {}`", sections.len())));
                }
                sections.push(Vec::new());
            }
            "mul" => match sections.last_mut() {
                Some(s) => s.push((line, rest.to_vec())),
                None => return Err(perr(line, "`mul` before `order 0`")),
            },
            _ => return Err(perr(line, format!("unknown directive `{head}`"))),
        }
    }
    h.apply_overrides(overrides)?;
    let n = h.dim.ok_or_else(|| perr(0, "missing `dim` line"))?;
    if sections.is_empty() {
        return Err(perr(0, "missing `order 0` section"));
    }
    let maps = sections
        .iter()
        .map(|s| fill(&h, n, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DeformationFile {
        deformation: TruncatedDeformation::new(maps)?,
        basis: h.names(),
        params: h.params(),
    })
}

pub fn parse_deformation(text: &str) -> Result<TruncatedDeformation, Error> {
    Ok(parse_deformation_file(text, &[])?.deformation)
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn write_header(out: &mut String, n: usize, basis: Option<&[String]>) {
    out.push_str(&format!("dim {n}\n"));
    if let Some(b) = basis {
        if b != default_names(n).as_slice() {
            out.push_str(&format!("basis {}\n", b.join(" ")));
        }
    }
}

fn write_products(out: &mut String, m: &BilinearMap, names: &[String]) {
    let n = m.dim();
    for i in 0..n {
        for j in 0..n {
            let terms: Vec<String> = m
                .at(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    if c.is_one() {
                        names[k].clone()
                    } else {
                        format!("{c} {}", names[k])
                    }
                })
                .collect();
            if !terms.is_empty() {
                out.push_str(&format!(
                    "mul {} {} -> {}\n",
                    names[i],
                    names[j],
                    terms.join(" + ")
                ));
            }
        }
    }
}

/// Serializes with numeric coefficients only.
pub fn write_algebra(a: &Algebra, basis: Option<&[String]>) -> String {
    let names = basis.map_or_else(|| default_names(a.dim()), <[String]>::to_vec);
    let mut out = String::new();
    write_header(&mut out, a.dim(), basis);
    write_products(&mut out, a, &names);
    out
}

pub fn write_deformation(d: &TruncatedDeformation, basis: Option<&[String]>) -> String {
    let names = basis.map_or_else(|| default_names(d.dim()), <[String]>::to_vec);
    let mut out = String::new();
    write_header(&mut out, d.dim(), basis);
    for (k, m) in d.maps().iter().enumerate() {
        out.push_str(&format!("order {k}\n"));
        write_products(&mut out, m, &names);
    }
    out
}
