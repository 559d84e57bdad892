//! Cross-check of deformation-derived and polarization-derived structures.
//!
//! Each row names an algebra family, the structure expected on each side, and
//! the concrete checks run on corpus data. A row agrees when every check holds.

use std::fmt;

use crate::algebra::{
    jacobiator, leibniz_like, leibniz_polarization_defects, phi_apply, polarize, Identity,
    LeibnizKind, Parity,
};
use crate::corpus;
use crate::deformation::{
    first_order, poisson_check, verify, vw_verify, BulletFlavor, PoissonKind, TruncatedDeformation,
};
use crate::error::Error;
use crate::sigma3::GroupAlgebraElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyCheck {
    pub subject: &'static str,
    pub description: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub family: &'static str,
    pub deformation_expected: &'static str,
    pub polarization_expected: &'static str,
    pub deformation: Vec<SurveyCheck>,
    pub polarization: Vec<SurveyCheck>,
}

impl SurveyRow {
    pub fn agrees(&self) -> bool {
        self.deformation
            .iter()
            .chain(&self.polarization)
            .all(|c| c.holds)
    }
}

impl fmt::Display for SurveyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.agrees() { "agree" } else { "disagree" };
        writeln!(f, "{}: {verdict}", self.family)?;
        let sides = [
            ("deformation", self.deformation_expected, &self.deformation),
            (
                "polarization",
                self.polarization_expected,
                &self.polarization,
            ),
        ];
        for (side, expected, checks) in sides {
            writeln!(f, "  {side}: {expected}")?;
            for c in checks {
                let mark = if c.holds { "yes" } else { "no" };
                writeln!(f, "    {}: {}: {mark}", c.subject, c.description)?;
            }
        }
        Ok(())
    }
}

fn ga(s: &str) -> GroupAlgebraElement {
    GroupAlgebraElement::parse(s).expect("valid group algebra literal")
}

fn check(subject: &'static str, description: impl Into<String>, holds: bool) -> SurveyCheck {
    SurveyCheck {
        subject,
        description: description.into(),
        holds,
    }
}

fn deformation(name: &str) -> TruncatedDeformation {
    corpus::sample(name)
        .expect("known sample")
        .file()
        .deformation
}

fn verifies(subject: &'static str, flavor: &str) -> Result<SurveyCheck, Error> {
    let d = deformation(subject);
    let r = verify(&d, &BulletFlavor::parse(flavor)?, d.order())?;
    let ok = r.iter().all(|x| x.is_zero());
    Ok(check(
        subject,
        format!("{flavor} equations through order {}", d.order()),
        ok,
    ))
}

fn vw_verifies(subject: &'static str, v: &str, w: &str) -> Result<SurveyCheck, Error> {
    let d = deformation(subject);
    let ok = vw_verify(&d, &ga(v), &ga(w), 2)?
        .iter()
        .all(|x| x.is_zero());
    Ok(check(
        subject,
        format!("({v}, {w}) equations through order 2"),
        ok,
    ))
}

fn deformation_poisson(
    subject: &'static str,
    kind: PoissonKind,
    label: &str,
) -> Result<SurveyCheck, Error> {
    let d = deformation(subject);
    let (psi1, rho1) = first_order(&d)?;
    let beta = if kind == PoissonKind::AntiPoisson {
        rho1
    } else {
        psi1
    };
    let ok = poisson_check(d.mu0(), &beta, &kind)?.holds();
    Ok(check(
        subject,
        format!("first-order term gives {label}"),
        ok,
    ))
}

fn polarized_poisson(
    subject: &'static str,
    kind: PoissonKind,
    label: &str,
) -> Result<SurveyCheck, Error> {
    let (rho, psi) = polarize(&corpus::get(subject).expect("known entry").algebra());
    let ok = poisson_check(&rho, &psi, &kind)?.holds();
    Ok(check(subject, format!("(rho, psi) is {label}"), ok))
}

fn bracket_lie(subject: &'static str) -> Result<SurveyCheck, Error> {
    let (_, psi) = polarize(&corpus::get(subject).expect("known entry").algebra());
    Ok(check(
        subject,
        "psi is a Lie bracket",
        jacobiator(&psi)?.is_zero(),
    ))
}

fn anti_polarization(subject: &'static str) -> Result<SurveyCheck, Error> {
    let (rho, psi) = polarize(&corpus::get(subject).expect("known entry").algebra());
    let jj = Identity::JacobiJordan.evaluate(&rho).holds;
    let lg = leibniz_like(
        LeibnizKind::Lg,
        &psi,
        &rho,
        Some((Parity::Skew, Parity::Symmetric)),
    )?;
    Ok(check(
        subject,
        "rho Jacobi-Jordan, graded Leibniz Lg(psi, rho) = 0",
        jj && lg.is_zero(),
    ))
}

fn leibniz_polarization(subject: &'static str) -> Result<Vec<SurveyCheck>, Error> {
    let (rho, psi) = polarize(&corpus::get(subject).expect("known entry").algebra());
    let (first, second) = leibniz_polarization_defects(&rho, &psi)?;
    Ok(vec![
        check(subject, "x.[y,z] - [x,y].z - [x,y.z] = 0", first.is_zero()),
        check(
            subject,
            "[x,y.z] + [x.z,y] - z.[x,y] - J(x,y,z) = 0",
            second.is_zero(),
        ),
    ])
}

/// Recomputes every row on the built-in corpus.
pub fn survey() -> Result<Vec<SurveyRow>, Error> {
    let d = deformation("qplane");
    let phi1 = &d.maps()[1];
    let lr = leibniz_like(LeibnizKind::LR, d.mu0(), phi1, None)?;
    let vinberg_link = phi_apply(&lr, &ga("g2")).is_zero();
    let lad = deformation("lad-line");

    Ok(vec![
        SurveyRow {
            family: "associative",
            deformation_expected: "Poisson (associative deformation); nonassociative Poisson \
                                   (weakly associative deformation)",
            polarization_expected: "nonassociative Poisson",
            deformation: vec![
                verifies("qplane", "plain")?,
                deformation_poisson("qplane", PoissonKind::Poisson, "a Poisson algebra")?,
                verifies("qplane", "v:wa")?,
                deformation_poisson(
                    "qplane",
                    PoissonKind::NonassocPoisson,
                    "a nonassociative Poisson algebra",
                )?,
            ],
            polarization: vec![polarized_poisson(
                "m2",
                PoissonKind::NonassocPoisson,
                "nonassociative Poisson",
            )?],
        },
        SurveyRow {
            family: "Lie-admissible",
            deformation_expected: "Lie-admissible",
            polarization_expected: "Lie",
            deformation: vec![
                verifies("lad-line", "v:vlad")?,
                check(
                    "lad-line",
                    "phi1 is Lie-admissible",
                    Identity::LieAdmissible.evaluate(&lad.maps()[1]).holds,
                ),
            ],
            polarization: vec![bracket_lie("vinberg2")?, bracket_lie("g5-2")?],
        },
        SurveyRow {
            family: "(Id+c+c2)-associative",
            deformation_expected: "nonassociative (Id+c+c2)-Poisson",
            polarization_expected: "nonassociative (Id+c+c2)-Poisson",
            deformation: vec![
                verifies("g5-pair", "v:g5")?,
                deformation_poisson(
                    "g5-pair",
                    PoissonKind::NonassocVPoisson(ga("g5")),
                    "a nonassociative (Id+c+c2)-Poisson algebra",
                )?,
            ],
            polarization: vec![polarized_poisson(
                "g5-2",
                PoissonKind::NonassocVPoisson(ga("g5")),
                "nonassociative (Id+c+c2)-Poisson",
            )?],
        },
        SurveyRow {
            family: "Vinberg",
            deformation_expected: "Lie-admissible with the (Id-t12)-Leibniz condition",
            polarization_expected: "(no entry)",
            deformation: vec![
                verifies("qplane", "v:g2")?,
                check(
                    "qplane",
                    "phi1 is Lie-admissible",
                    Identity::LieAdmissible.evaluate(phi1).holds,
                ),
                check(
                    "qplane",
                    "LR(mu0, phi1) composed with Id - t12 vanishes",
                    vinberg_link,
                ),
            ],
            polarization: vec![],
        },
        SurveyRow {
            family: "weakly associative",
            deformation_expected: "nonassociative Poisson",
            polarization_expected: "nonassociative Poisson",
            deformation: vec![
                verifies("qplane", "v:wa")?,
                deformation_poisson(
                    "qplane",
                    PoissonKind::NonassocPoisson,
                    "a nonassociative Poisson algebra",
                )?,
            ],
            polarization: vec![polarized_poisson(
                "weak2",
                PoissonKind::NonassocPoisson,
                "nonassociative Poisson",
            )?],
        },
        SurveyRow {
            family: "anti-associative",
            deformation_expected: "anti-Poisson (Jacobi-Jordan bracket)",
            polarization_expected: "anti-Poisson (Jacobi-Jordan bracket)",
            deformation: vec![
                vw_verifies("anti-center", "Id", "-Id")?,
                deformation_poisson(
                    "anti-center",
                    PoissonKind::AntiPoisson,
                    "an anti-Poisson algebra",
                )?,
            ],
            polarization: vec![
                anti_polarization("aa3-1")?,
                anti_polarization("aa3-2")?,
                anti_polarization("aa3-3")?,
                anti_polarization("aa3-4")?,
            ],
        },
        SurveyRow {
            family: "Leibniz",
            deformation_expected: "pseudo-Poisson",
            polarization_expected: "pseudo-Poisson",
            deformation: vec![
                vw_verifies("leib-square", "Id - t23", "Id")?,
                deformation_poisson(
                    "leib-square",
                    PoissonKind::PseudoRight,
                    "a pseudo-Poisson algebra",
                )?,
            ],
            polarization: [
                leibniz_polarization("rleib2")?,
                leibniz_polarization("lleib2")?,
            ]
            .concat(),
        },
        SurveyRow {
            family: "symmetric Leibniz",
            deformation_expected: "pseudo-Poisson",
            polarization_expected: "nonassociative Poisson",
            deformation: vec![
                vw_verifies("symleib-split", "Id - t23", "Id")?,
                vw_verifies("symleib-split", "Id", "Id - t12")?,
                deformation_poisson(
                    "symleib-split",
                    PoissonKind::PseudoLeft,
                    "a pseudo-Poisson algebra (left)",
                )?,
                deformation_poisson(
                    "symleib-split",
                    PoissonKind::PseudoRight,
                    "a pseudo-Poisson algebra (right)",
                )?,
            ],
            polarization: vec![polarized_poisson(
                "symleib3",
                PoissonKind::NonassocPoisson,
                "nonassociative Poisson",
            )?],
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        let rows = survey().unwrap();
        assert_eq!(rows.len(), 8);
        for r in &rows {
            assert_eq!(r.agrees(), r.family != "Leibniz", "{r}");
        }
    }
}
