//! Subcommand implementations. Each returns the full report and whether every
//! checked property held.

use std::fmt::Write as _;
use std::fs;

use nakit_core::algebra::{
    associator, leibniz_like, leibniz_polarization_defects, phi_apply, polarize as split,
    AssociatorKind, Identity, LeibnizKind, Parity, Witness,
};
use nakit_core::cohomology::{joint_cocycle_basis, CoboundaryFlavor};
use nakit_core::corpus;
use nakit_core::deformation::{
    first_order, poisson_check, verify, vw_verify, BulletFlavor, PoissonKind,
};
use nakit_core::format::{
    parse_algebra_file, parse_deformation_file, write_algebra, AlgebraFile, DeformationFile,
};
use nakit_core::free::{graded_basis, multilinear_dim, Presentation};
use nakit_core::linalg::{parse_rational, Rational};
use nakit_core::series::{comp_inverse, compose as series_compose, gen_series, koszul_check};
use nakit_core::series::{Convention, TruncatedSeries};
use nakit_core::sigma3::GroupAlgebraElement;
use nakit_core::sigma3::{classify_vector, contains as orbit_contains, fv_rank, Target};
use nakit_core::Error;

use crate::{ConventionArg, Format, TargetArg};

pub struct Report {
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

type Res = Result<Report, Error>;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_text(w: &Option<Witness>) -> String {
    w.as_ref().map_or_else(String::new, ToString::to_string)
}

fn params(raw: &[String]) -> Result<Vec<(&str, Rational)>, Error> {
    raw.iter()
        .map(|p| {
            let (name, value) = p
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("parameter `{p}` is not name=value")))?;
            Ok((name.trim(), parse_rational(value.trim())?))
        })
        .collect()
}

fn read(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))
}

fn load_algebra(input: &str, raw: &[String]) -> Result<AlgebraFile, Error> {
    let p = params(raw)?;
    match input.strip_prefix("corpus:") {
        Some(name) => corpus::get(name)
            .ok_or_else(|| Error::Invalid(format!("no corpus algebra `{name}`")))?
            .with_params(&p),
        None => parse_algebra_file(&read(input)?, &p),
    }
}

fn load_deformation(input: &str, raw: &[String]) -> Result<DeformationFile, Error> {
    let p = params(raw)?;
    match input.strip_prefix("corpus:") {
        Some(name) => corpus::sample(name)
            .ok_or_else(|| Error::Invalid(format!("no corpus deformation `{name}`")))?
            .with_params(&p),
        None => parse_deformation_file(&read(input)?, &p),
    }
}

pub fn classify(v: &str, fmt: Format) -> Res {
    let c = classify_vector(&GroupAlgebraElement::parse(v)?)?;
    let text = match fmt {
        Format::Tsv => format!(
            "dim_fv\t{}\nv_lad\t{}\nv_3pa\t{}\ntype\t{}\n",
            c.dim_fv,
            yes_no(c.has_vlad),
            yes_no(c.has_v3pa),
            c.type_label
                .map_or_else(|| "-".to_string(), |t| t.to_string())
        ),
        Format::Text => match c.type_label {
            Some(t) => format!("dim F_v = {}; contains v_Lad: yes; type {t}\n", c.dim_fv),
            None => format!(
                "dim F_v = {}; contains v_Lad: no; contains v_3Pa: {}\n",
                c.dim_fv,
                yes_no(c.has_v3pa)
            ),
        },
    };
    Ok(Report::ok(text))
}

pub fn rank(v: &str, fmt: Format) -> Res {
    let r = fv_rank(&GroupAlgebraElement::parse(v)?)?;
    Ok(Report::ok(match fmt {
        Format::Tsv => format!("dim_fv\t{r}\n"),
        Format::Text => format!("dim F_v = {r}\n"),
    }))
}

pub fn contains(v: &str, target: TargetArg, fmt: Format) -> Res {
    let (t, label) = match target {
        TargetArg::Lad => (Target::VLad, "v_Lad"),
        TargetArg::ThreePa => (Target::V3Pa, "v_3Pa"),
    };
    let m = orbit_contains(&GroupAlgebraElement::parse(v)?, t)?;
    let cert = m.certificate.as_ref();
    let text = match fmt {
        Format::Tsv => format!(
            "{label}\t{}\t{}\n",
            yes_no(m.member),
            cert.map_or_else(String::new, GroupAlgebraElement::literal)
        ),
        Format::Text => match cert {
            Some(u) => format!(
                "contains {label}: yes; u = {} (u*v = {label})\n",
                u.literal()
            ),
            None => format!("contains {label}: no\n"),
        },
    };
    Ok(Report { text, ok: m.member })
}

fn evaluate_property(
    a: &nakit_core::algebra::Algebra,
    name: &str,
) -> Result<(String, Option<Witness>), Error> {
    match name.trim().strip_prefix("v:") {
        Some(v) => {
            let v = GroupAlgebraElement::parse(v)?;
            let w = phi_apply(&associator(a, AssociatorKind::Full), &v).first_nonzero();
            Ok((format!("{v}-associative"), w))
        }
        None => {
            let id = Identity::parse(name)?;
            Ok((id.name().to_string(), id.evaluate(a).witness))
        }
    }
}

pub fn check(identities: &[String], input: &str, raw: &[String], fmt: Format) -> Res {
    let a = load_algebra(input, raw)?.algebra;
    let mut text = String::new();
    let mut ok = true;
    for name in identities {
        let (label, w) = evaluate_property(&a, name)?;
        ok &= w.is_none();
        match fmt {
            Format::Tsv => writeln!(
                text,
                "{label}\t{}\t{}",
                yes_no(w.is_none()),
                witness_text(&w)
            )
            .unwrap(),
            Format::Text => match &w {
                None => writeln!(text, "{label}: yes").unwrap(),
                Some(w) => writeln!(text, "{label}: no, witness {w}").unwrap(),
            },
        }
    }
    Ok(Report { text, ok })
}

fn pair_checks(
    rho: &nakit_core::algebra::BilinearMap,
    psi: &nakit_core::algebra::BilinearMap,
    check: &str,
) -> Result<Vec<(String, Option<Witness>)>, Error> {
    Ok(match check.trim() {
        "anti" => vec![
            (
                "rho Jacobi-Jordan".to_string(),
                Identity::JacobiJordan.evaluate(rho).witness,
            ),
            (
                "graded Leibniz Lg(psi, rho)".to_string(),
                leibniz_like(
                    LeibnizKind::Lg,
                    psi,
                    rho,
                    Some((Parity::Skew, Parity::Symmetric)),
                )?
                .first_nonzero(),
            ),
        ],
        "leibniz" => {
            let (first, second) = leibniz_polarization_defects(rho, psi)?;
            vec![
                (
                    "x.[y,z] - [x,y].z - [x,y.z]".to_string(),
                    first.first_nonzero(),
                ),
                (
                    "[x,y.z] + [x.z,y] - z.[x,y] - J(x,y,z)".to_string(),
                    second.first_nonzero(),
                ),
            ]
        }
        other => {
            let kind = PoissonKind::parse(other)?;
            poisson_check(rho, psi, &kind)?
                .axioms
                .into_iter()
                .map(|(n, v)| (format!("{other}: {n}"), v.witness))
                .collect()
        }
    })
}

pub fn polarize(checks: &[String], input: &str, raw: &[String], fmt: Format) -> Res {
    let file = load_algebra(input, raw)?;
    let (rho, psi) = split(&file.algebra);
    let basis = Some(file.basis.as_slice());
    let mut text = String::new();
    if fmt == Format::Text {
        writeln!(text, "# rho, the symmetric part").unwrap();
        text.push_str(&write_algebra(&rho, basis));
        writeln!(text, "# psi, the skew part").unwrap();
        text.push_str(&write_algebra(&psi, basis));
    }
    let mut ok = true;
    for c in checks {
        for (label, w) in pair_checks(&rho, &psi, c)? {
            ok &= w.is_none();
            match fmt {
                Format::Tsv => writeln!(
                    text,
                    "{label}\t{}\t{}",
                    yes_no(w.is_none()),
                    witness_text(&w)
                )
                .unwrap(),
                Format::Text => match &w {
                    None => writeln!(text, "{label}: yes").unwrap(),
                    Some(w) => writeln!(text, "{label}: no, witness {w}").unwrap(),
                },
            }
        }
    }
    Ok(Report { text, ok })
}

pub fn cocycles(flavors: &[String], basis: bool, input: &str, raw: &[String], fmt: Format) -> Res {
    let file = load_algebra(input, raw)?;
    let parsed = flavors
        .iter()
        .map(|f| CoboundaryFlavor::parse(f))
        .collect::<Result<Vec<_>, _>>()?;
    let space = joint_cocycle_basis(&file.algebra, &parsed)?;
    let mut text = match fmt {
        Format::Tsv => format!(
            "dim\t{}\ncoboundary_rank\t{}\n",
            space.dim, space.coboundary_rank
        ),
        Format::Text => format!(
            "dim Z2 = {}; coboundary rank {}\n",
            space.dim, space.coboundary_rank
        ),
    };
    if basis {
        for (i, phi) in space.basis.iter().enumerate() {
            writeln!(text, "# cocycle {}", i + 1).unwrap();
            text.push_str(&write_algebra(phi, Some(file.basis.as_slice())));
        }
    }
    Ok(Report::ok(text))
}

pub fn deform_verify(
    flavor: &str,
    through: Option<usize>,
    input: &str,
    raw: &[String],
    fmt: Format,
) -> Res {
    let d = load_deformation(input, raw)?.deformation;
    let residuals = match flavor.trim().strip_prefix("vw:") {
        Some(rest) => {
            let (v, w) = rest
                .split_once(';')
                .ok_or_else(|| Error::Invalid(format!("`{flavor}` needs two vectors")))?;
            let (v, w) = (
                GroupAlgebraElement::parse(v)?,
                GroupAlgebraElement::parse(w)?,
            );
            vw_verify(&d, &v, &w, through.unwrap_or(d.order().min(2)))?
        }
        None => verify(
            &d,
            &BulletFlavor::parse(flavor)?,
            through.unwrap_or(d.order()),
        )?,
    };
    let mut text = String::new();
    for r in &residuals {
        match fmt {
            Format::Tsv => writeln!(
                text,
                "{}\t{}\t{}\t{}",
                r.order,
                yes_no(r.is_zero()),
                r.residual.support_size(),
                witness_text(&r.witness)
            )
            .unwrap(),
            Format::Text => writeln!(text, "{r}").unwrap(),
        }
    }
    Ok(Report {
        text,
        ok: residuals.iter().all(|r| r.is_zero()),
    })
}

pub fn deform_poisson(kind: &str, input: &str, raw: &[String], fmt: Format) -> Res {
    let d = load_deformation(input, raw)?.deformation;
    let kind = PoissonKind::parse(kind)?;
    let (psi1, rho1) = first_order(&d)?;
    let beta = if kind == PoissonKind::AntiPoisson {
        rho1
    } else {
        psi1
    };
    let report = poisson_check(d.mu0(), &beta, &kind)?;
    let text = match fmt {
        Format::Text => report.to_string(),
        Format::Tsv => report
            .axioms
            .iter()
            .map(|(n, v)| format!("{n}\t{}\t{}\n", yes_no(v.holds), witness_text(&v.witness)))
            .collect(),
    };
    Ok(Report {
        text,
        ok: report.holds(),
    })
}

pub fn free(
    preset: Option<&str>,
    presentation: Option<&str>,
    gens: usize,
    max_deg: usize,
    multilinear: Option<usize>,
    basis: bool,
    fmt: Format,
) -> Res {
    let p = match (preset, presentation) {
        (Some(name), _) => Presentation::preset(name, gens)?,
        (None, Some(path)) => Presentation::parse(&read(path)?)?.with_generators(gens)?,
        (None, None) => return Err(Error::Invalid("give --preset or --presentation".into())),
    };
    if let Some(k) = multilinear {
        let d = multilinear_dim(&p, k)?;
        return Ok(Report::ok(match fmt {
            Format::Tsv => format!("{k}\t{d}\n"),
            Format::Text => format!("multilinear dim in arity {k} = {d}\n"),
        }));
    }
    let fb = graded_basis(&p, max_deg)?;
    let mut text = String::new();
    for (i, dim) in fb.dims().into_iter().enumerate() {
        let deg = i + 1;
        let monos = if basis {
            fb.monomials(deg).join(" ")
        } else {
            String::new()
        };
        match fmt {
            Format::Tsv => writeln!(text, "{deg}\t{dim}\t{monos}").unwrap(),
            Format::Text if basis && dim > 0 => {
                writeln!(text, "degree {deg}: dim {dim}: {monos}").unwrap()
            }
            Format::Text => writeln!(text, "degree {deg}: dim {dim}").unwrap(),
        }
    }
    Ok(Report::ok(text))
}

fn series_text(s: &TruncatedSeries, fmt: Format) -> String {
    match fmt {
        Format::Tsv => {
            let cs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            format!("{}\n", cs.join("\t"))
        }
        Format::Text => format!("{s}\n"),
    }
}

pub fn inverse(s: &str, fmt: Format) -> Res {
    Ok(Report::ok(series_text(
        &comp_inverse(&TruncatedSeries::parse(s)?)?,
        fmt,
    )))
}

pub fn compose(g: &str, f: &str, fmt: Format) -> Res {
    let (g, f) = (TruncatedSeries::parse(g)?, TruncatedSeries::parse(f)?);
    Ok(Report::ok(series_text(&series_compose(&g, &f)?, fmt)))
}

fn parse_dims(s: &str) -> Result<Vec<u64>, Error> {
    s.split(',')
        .map(|d| {
            d.trim()
                .parse::<u64>()
                .map_err(|e| Error::Invalid(format!("dimension `{d}`: {e}")))
        })
        .collect()
}

pub fn gen(dims: &str, order: Option<usize>, fmt: Format) -> Res {
    let d = parse_dims(dims)?;
    let n = order.unwrap_or(d.len());
    Ok(Report::ok(series_text(&gen_series(&d, n), fmt)))
}

pub fn koszul(
    series: &str,
    dual: &str,
    convention: ConventionArg,
    dims: bool,
    order: Option<usize>,
    fmt: Format,
) -> Res {
    let conv = match convention {
        ConventionArg::Signed => Convention::Signed,
        ConventionArg::Unsigned => Convention::Unsigned,
    };
    let (gp, gd) = if dims {
        let (a, b) = (parse_dims(series)?, parse_dims(dual)?);
        let n = order.unwrap_or(a.len().min(b.len()));
        let (gp, gd) = (gen_series(&a, n), gen_series(&b, n));
        match conv {
            Convention::Signed => (gp, gd),
            Convention::Unsigned => (gp.reflect(), gd.reflect()),
        }
    } else {
        (
            TruncatedSeries::parse(series)?,
            TruncatedSeries::parse(dual)?,
        )
    };
    let r = koszul_check(&gp, &gd, conv)?;
    let text = match fmt {
        Format::Text => format!("{r}\nresidual: {}\n", r.residual),
        Format::Tsv => match &r.failure {
            None => format!("clean\t{}\n", r.order),
            Some(f) => format!(
                "fails\t{}\t{}\t{}\t{}\n",
                f.order, f.residual, f.inverse, f.expected
            ),
        },
    };
    Ok(Report {
        text,
        ok: r.is_clean(),
    })
}

pub fn corpus_list(fmt: Format) -> Res {
    let mut text = String::new();
    let sep = if fmt == Format::Tsv { "\t" } else { "  " };
    for e in corpus::ENTRIES {
        writeln!(text, "algebra{sep}{}{sep}{}", e.name, e.description).unwrap();
    }
    for s in corpus::SAMPLES {
        writeln!(text, "deformation{sep}{}{sep}{}", s.name, s.description).unwrap();
    }
    Ok(Report::ok(text))
}

pub fn corpus_show(name: &str) -> Res {
    if let Some(e) = corpus::get(name) {
        let mut text = e.source.to_string();
        writeln!(text, "# expected: {}", e.expected.join(" ")).unwrap();
        return Ok(Report::ok(text));
    }
    corpus::sample(name)
        .map(|s| Report::ok(s.source.to_string()))
        .ok_or_else(|| Error::Invalid(format!("no corpus entry `{name}`")))
}

pub fn corpus_check(name: Option<&str>, fmt: Format) -> Res {
    let entries: Vec<&corpus::CorpusEntry> = match name {
        Some(n) => {
            vec![corpus::get(n).ok_or_else(|| Error::Invalid(format!("no corpus algebra `{n}`")))?]
        }
        None => corpus::ENTRIES.iter().collect(),
    };
    let mut text = String::new();
    let mut ok = true;
    for e in entries {
        for x in e.check(&e.algebra())? {
            ok &= x.met();
            let verdict = if x.met() { "ok" } else { "MISMATCH" };
            match fmt {
                Format::Tsv => writeln!(
                    text,
                    "{}\t{}\t{}\t{}",
                    e.name,
                    x.property,
                    yes_no(x.expected),
                    yes_no(x.actual)
                )
                .unwrap(),
                Format::Text => writeln!(
                    text,
                    "{}: {} expected {}, found {}: {verdict}",
                    e.name,
                    x.property,
                    yes_no(x.expected),
                    yes_no(x.actual)
                )
                .unwrap(),
            }
        }
    }
    Ok(Report { text, ok })
}

pub fn survey(fmt: Format) -> Res {
    let rows = nakit_core::survey::survey()?;
    let mut text = String::new();
    for r in &rows {
        match fmt {
            Format::Text => write!(text, "{r}").unwrap(),
            Format::Tsv => {
                let verdict = if r.agrees() { "agree" } else { "disagree" };
                for (side, checks) in [
                    ("deformation", &r.deformation),
                    ("polarization", &r.polarization),
                ] {
                    for c in checks {
                        writeln!(
                            text,
                            "{}\t{verdict}\t{side}\t{}\t{}\t{}",
                            r.family,
                            c.subject,
                            c.description,
                            yes_no(c.holds)
                        )
                        .unwrap();
                    }
                }
            }
        }
    }
    Ok(Report::ok(text))
}
