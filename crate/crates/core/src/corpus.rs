//! Built-in example algebras and sample deformations.
//!
//! Each algebra carries a list of expected properties: registry identity
//! names, or `v:<vector>` for v-associativity, prefixed with `!` when the
//! property must fail. Parameterized entries must meet their list for every
//! parameter value.

use crate::algebra::{is_v_associative, Algebra, Identity};
use crate::error::Error;
use crate::format::{parse_algebra_file, parse_deformation_file, AlgebraFile, DeformationFile};
use crate::linalg::Rational;
use crate::sigma3::GroupAlgebraElement;

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub source: &'static str,
    pub expected: &'static [&'static str],
}

/// Outcome of one expected property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub property: String,
    pub expected: bool,
    pub actual: bool,
}

impl Expectation {
    pub fn met(&self) -> bool {
        self.expected == self.actual
    }
}

/// Evaluates a property token: a registry identity name or `v:<vector>`.
pub fn property_holds(a: &Algebra, property: &str) -> Result<bool, Error> {
    match property.strip_prefix("v:") {
        Some(v) => Ok(is_v_associative(a, &GroupAlgebraElement::parse(v)?)),
        None => Ok(Identity::parse(property)?.evaluate(a).holds),
    }
}

impl CorpusEntry {
    pub fn file(&self) -> AlgebraFile {
        parse_algebra_file(self.source, &[]).expect("corpus files parse")
    }

    pub fn algebra(&self) -> Algebra {
        self.file().algebra
    }

    pub fn with_params(&self, values: &[(&str, Rational)]) -> Result<AlgebraFile, Error> {
        parse_algebra_file(self.source, values)
    }

    pub fn param_names(&self) -> Vec<String> {
        self.file().params.into_iter().map(|(n, _)| n).collect()
    }

    /// Checks the expected-property list against `a` (an instance of this entry).
    pub fn check(&self, a: &Algebra) -> Result<Vec<Expectation>, Error> {
        self.expected
            .iter()
            .map(|tok| {
                let (expected, property) = match tok.strip_prefix('!') {
                    Some(p) => (false, p),
                    None => (true, *tok),
                };
                let actual = property_holds(a, property)?;
                Ok(Expectation {
                    property: property.to_string(),
                    expected,
                    actual,
                })
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SampleDeformation {
    pub name: &'static str,
    pub description: &'static str,
    pub source: &'static str,
}

impl SampleDeformation {
    pub fn file(&self) -> DeformationFile {
        parse_deformation_file(self.source, &[]).expect("corpus files parse")
    }

    pub fn with_params(&self, values: &[(&str, Rational)]) -> Result<DeformationFile, Error> {
        parse_deformation_file(self.source, values)
    }
}

macro_rules! entry {
    ($name:literal, $desc:literal, [$($e:literal),* $(,)?]) => {
        CorpusEntry {
            name: $name,
            description: $desc,
            source: include_str!(concat!("../corpus/", $name, ".alg")),
            expected: &[$($e),*],
        }
    };
}

macro_rules! sample {
    ($name:literal, $desc:literal) => {
        SampleDeformation {
            name: $name,
            description: $desc,
            source: include_str!(concat!("../corpus/", $name, ".def")),
        }
    };
}

pub const ENTRIES: &[CorpusEntry] = &[
    entry!(
        "aa3-1",
        "anti-associative, dim 3: e1e2 = -e2e1 = e3",
        [
            "anti_associative",
            "skew",
            "lie",
            "nil4",
            "symmetric_leibniz",
            "!commutative",
        ]
    ),
    entry!(
        "aa3-2",
        "anti-associative, dim 3: free on one generator",
        [
            "anti_associative",
            "nil4",
            "lie_admissible",
            "!associative",
            "!skew",
            "!commutative",
            "!weakly_associative",
            "!three_power_associative",
        ]
    ),
    entry!(
        "aa3-3",
        "anti-associative, dim 3, parameters a, b, with e3e3 = e2",
        ["anti_associative", "nil4", "associative", "!skew", "!lie",]
    ),
    entry!(
        "aa3-4",
        "anti-associative, dim 3, parameters a, b, with e3e3 = 0",
        ["anti_associative", "nil4", "associative", "!skew", "!lie",]
    ),
    entry!(
        "one-dim",
        "the base field",
        [
            "commutative",
            "associative",
            "!skew",
            "!anti_associative",
            "!nil4",
        ]
    ),
    entry!(
        "poly3",
        "truncated polynomials K[x]/(x^3)",
        ["commutative", "associative", "!jacobi_jordan", "!nil4",]
    ),
    entry!(
        "m2",
        "2x2 matrices",
        [
            "associative",
            "weakly_associative",
            "lie_admissible",
            "!commutative",
            "!left_leibniz",
            "!right_leibniz",
        ]
    ),
    entry!(
        "sl2",
        "the simple Lie algebra sl(2)",
        [
            "skew",
            "lie",
            "symmetric_leibniz",
            "weakly_associative",
            "!associative",
            "!nil4",
        ]
    ),
    entry!(
        "heisenberg",
        "3-dimensional Heisenberg Lie algebra",
        ["skew", "lie", "associative", "anti_associative", "nil4",]
    ),
    entry!(
        "rleib2",
        "right Leibniz, not left Leibniz",
        [
            "right_leibniz",
            "lie_admissible",
            "!left_leibniz",
            "!symmetric_leibniz",
            "!associative",
        ]
    ),
    entry!(
        "lleib2",
        "left Leibniz, not right Leibniz",
        [
            "left_leibniz",
            "lie_admissible",
            "!right_leibniz",
            "!symmetric_leibniz",
            "!associative",
        ]
    ),
    entry!(
        "symleib3",
        "symmetric Leibniz, not associative",
        [
            "symmetric_leibniz",
            "weakly_associative",
            "lie_admissible",
            "!associative",
            "!skew",
        ]
    ),
    entry!(
        "vinberg2",
        "Vinberg (left-symmetric) algebra",
        [
            "v:g2",
            "lie_admissible",
            "!associative",
            "!left_leibniz",
            "!weakly_associative",
        ]
    ),
    entry!(
        "g5-2",
        "(Id+c+c2)-associative algebra",
        [
            "v:g5",
            "lie_admissible",
            "three_power_associative",
            "!associative",
            "!weakly_associative",
        ]
    ),
    entry!(
        "weak2",
        "weakly associative algebra",
        [
            "weakly_associative",
            "lie_admissible",
            "!associative",
            "!symmetric_leibniz",
        ]
    ),
    entry!(
        "poisson-2d",
        "depolarized two-parameter pair mu0 + psi1",
        [
            "v:g5",
            "lie_admissible",
            "three_power_associative",
            "!commutative",
            "!anti_associative",
            "!nil4",
        ]
    ),
    entry!(
        "octonions",
        "the octonions, unit e0",
        [
            "three_power_associative",
            "!associative",
            "!commutative",
            "!lie_admissible",
            "!weakly_associative",
        ]
    ),
];

pub const SAMPLES: &[SampleDeformation] = &[
    sample!(
        "qplane",
        "quantum exterior plane, exact associative deformation"
    ),
    sample!(
        "g5-pair",
        "(Id+c+c2)-deformation from the two-parameter pair"
    ),
    sample!("lad-line", "Lie-admissible deformation of the zero algebra"),
    sample!("anti-center", "anti-associative deformation of aa3-1"),
    sample!(
        "leib-square",
        "right Leibniz deformation of a commutative algebra"
    ),
    sample!(
        "symleib-split",
        "symmetric Leibniz deformation of a commutative algebra"
    ),
];

pub fn get(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

pub fn sample(name: &str) -> Option<&'static SampleDeformation> {
    SAMPLES.iter().find(|e| e.name == name)
}
