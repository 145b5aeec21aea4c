//! Worked examples embedded in the binary, each with its expected outcome.

use serde_json::{json, Value};

use super::commands::{normal_form, NormalFormFailure};
use super::document::{parse_document, parse_linear, ChartBundle, ConnectionBundle, Document};
use crate::connection::{curvature, is_parallel, torsion};
use crate::kind::StructureKind;
use crate::linalg::{int, unit_vector, Rat, Subspace};
use crate::normal_form::{CanonicalTemplate, NormalFormError};
use crate::polyforms::{kernel_distribution, parse_form, pullback_map, rank_profile, PolyForm};
use crate::verifier::{classify, Witness};

/// Source documents, by file name.
pub const DOCUMENTS: &[(&str, &str)] = &[
    (
        "immersion.toml",
        include_str!("../../corpus/immersion.toml"),
    ),
    ("omega-p.toml", include_str!("../../corpus/omega-p.toml")),
    ("counter.toml", include_str!("../../corpus/counter.toml")),
    (
        "counter-point.toml",
        include_str!("../../corpus/counter-point.toml"),
    ),
    (
        "section-pullback.toml",
        include_str!("../../corpus/section-pullback.toml"),
    ),
    (
        "contact-connection.toml",
        include_str!("../../corpus/contact-connection.toml"),
    ),
    (
        "flat-parallel.toml",
        include_str!("../../corpus/flat-parallel.toml"),
    ),
    (
        "symplectic.toml",
        include_str!("../../corpus/symplectic.toml"),
    ),
    (
        "presymplectic.toml",
        include_str!("../../corpus/presymplectic.toml"),
    ),
    (
        "cosymplectic.toml",
        include_str!("../../corpus/cosymplectic.toml"),
    ),
    (
        "precosymplectic.toml",
        include_str!("../../corpus/precosymplectic.toml"),
    ),
    (
        "two-symplectic.toml",
        include_str!("../../corpus/two-symplectic.toml"),
    ),
    (
        "two-presymplectic.toml",
        include_str!("../../corpus/two-presymplectic.toml"),
    ),
    (
        "two-cosymplectic.toml",
        include_str!("../../corpus/two-cosymplectic.toml"),
    ),
    (
        "two-precosymplectic.toml",
        include_str!("../../corpus/two-precosymplectic.toml"),
    ),
    (
        "multisymplectic.toml",
        include_str!("../../corpus/multisymplectic.toml"),
    ),
];

pub fn document(name: &str) -> Option<&'static str> {
    DOCUMENTS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub struct Example {
    pub name: &'static str,
    pub citation: &'static str,
    pub files: &'static [&'static str],
    run: fn(&mut Checks) -> Result<(), String>,
}

#[derive(Default)]
pub struct Checks(Vec<(String, bool)>);

impl Checks {
    fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.0.push((label.into(), passed));
    }
}

pub struct ExampleResult {
    pub name: &'static str,
    pub citation: &'static str,
    pub passed: bool,
    pub checks: Vec<(String, bool)>,
    pub error: Option<String>,
}

fn chart_bundle(file: &str) -> Result<ChartBundle, String> {
    match parse_document(document(file).ok_or("missing document")?).map_err(|e| e.to_string())? {
        Document::Chart(d) => d.resolve().map_err(|e| e.to_string()),
        _ => Err(format!("{file} is not a chart document")),
    }
}

fn connection_bundle(file: &str) -> Result<ConnectionBundle, String> {
    match parse_document(document(file).ok_or("missing document")?).map_err(|e| e.to_string())? {
        Document::Connection(d) => d.resolve().map_err(|e| e.to_string()),
        _ => Err(format!("{file} is not a connection document")),
    }
}

fn form<'a>(forms: &'a [(String, PolyForm)], name: &str) -> Result<&'a PolyForm, String> {
    forms
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, f)| f)
        .ok_or_else(|| format!("no form {name}"))
}

fn e(s: impl ToString) -> String {
    s.to_string()
}

fn point(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| int(v)).collect()
}

fn immersion(c: &mut Checks) -> Result<(), String> {
    let b = chart_bundle("immersion.toml")?;
    let j = &b.maps[0];
    let pulled = pullback_map(&j.map, form(&b.forms, "omega")?).map_err(e)?;
    let expected = parse_form(j.map.source(), "p*dx∧dp").map_err(e)?;
    c.check("pullback = p·dx∧dp", pulled == expected);
    c.check(
        "kernel full at p = 0",
        kernel_distribution(&pulled, &point(&[0, 0]))
            .map_err(e)?
            .is_full(),
    );
    c.check(
        "kernel zero at p = 1",
        kernel_distribution(&pulled, &point(&[0, 1]))
            .map_err(e)?
            .is_zero(),
    );
    Ok(())
}

fn omega_p(c: &mut Checks) -> Result<(), String> {
    let b = chart_bundle("omega-p.toml")?;
    let w = form(&b.forms, "omega_P")?;
    c.check("closed", w.is_closed());
    let ranks = rank_profile(w, &[point(&[0, 0]), point(&[1, 0])]).map_err(e)?;
    c.check("rank 0 at the origin", ranks[0] == 0);
    c.check("rank 2 at (1, 0)", ranks[1] == 2);
    Ok(())
}

fn counter(c: &mut Checks) -> Result<(), String> {
    let b = chart_bundle("counter.toml")?;
    let (w1, w2) = (form(&b.forms, "omega1")?, form(&b.forms, "omega2")?);
    c.check("ω¹ closed", w1.is_closed());
    c.check("ω² closed", w2.is_closed());
    let lambda = b.chart.var("lambda").ok_or("no lambda")?;
    c.check("ω² = 2λ ω¹", w2 == &w1.mul_poly(&lambda.scale(&int(2))));

    let spec =
        parse_linear(document("counter-point.toml").ok_or("missing document")?).map_err(e)?;
    let at = point(&[1, 0, 0]);
    c.check(
        "point data is the chart forms at λ = 1",
        spec.omegas == vec![w1.evaluate(&at).map_err(e)?, w2.evaluate(&at).map_err(e)?],
    );
    let cls = classify(&spec).map_err(e)?;
    let verdict = cls
        .verdict(StructureKind::KPresymplectic)
        .ok_or("no verdict")?;
    c.check("k-presymplectic checker rejects", !verdict.accepted);
    let coincide = verdict
        .failed()
        .any(|cl| matches!(&cl.witness, Some(Witness::Note(t)) if t.contains("kernels coincide")));
    c.check("diagnostic: kernels coincide", coincide);
    let attempt = normal_form(&spec);
    c.check(
        "normal form refused by a hypothesis",
        matches!(
            attempt,
            Err(NormalFormFailure::Rejected(
                NormalFormError::Hypothesis { .. }
            ))
        ),
    );
    Ok(())
}

fn section_pullback(c: &mut Checks) -> Result<(), String> {
    let b = chart_bundle("section-pullback.toml")?;
    let s = &b.maps[0];
    let source = s.map.source();
    for (alpha, (name, theta)) in [("omega1", "x*dy"), ("omega2", "y*dx")]
        .into_iter()
        .enumerate()
    {
        let pulled = pullback_map(&s.map, form(&b.forms, name)?).map_err(e)?;
        let minus_d_theta = parse_form(source, theta).map_err(e)?.d().neg();
        c.check(
            format!("pullback of ω^{} = −dθ^{}", alpha + 1, alpha + 1),
            pulled == minus_d_theta,
        );
    }
    Ok(())
}

fn contact_connection(c: &mut Checks) -> Result<(), String> {
    let b = connection_bundle("contact-connection.toml")?;
    let conn = &b.connection;
    let eta = form(&b.forms, "eta")?;
    c.check("∇η = 0", is_parallel(conn, eta).map_err(e)?);
    let t = torsion(conn);
    let idx = |n: &str| {
        conn.chart()
            .index(n)
            .ok_or_else(|| format!("no coordinate {n}"))
    };
    let (ti, xi, pi) = (idx("t")?, idx("x")?, idx("p")?);
    c.check(
        "T^t_{xp} = 1",
        t.get(&[ti, xi, pi]).as_constant() == Some(int(1)),
    );
    c.check(
        "T^t_{px} = −1",
        t.get(&[ti, pi, xi]).as_constant() == Some(int(-1)),
    );
    c.check("no other torsion", t.nonzero().len() == 2);
    c.check("curvature = 0", curvature(conn).is_zero());
    c.check("dη ≠ 0", !eta.is_closed());
    Ok(())
}

fn flat_parallel(c: &mut Checks) -> Result<(), String> {
    let b = connection_bundle("flat-parallel.toml")?;
    let conn = &b.connection;
    c.check("torsion-free", torsion(conn).is_zero());
    for (name, f) in &b.forms {
        let parallel = is_parallel(conn, f).map_err(e)?;
        c.check(format!("{name} parallel"), parallel);
        c.check(format!("{name} closed"), !parallel || f.is_closed());
    }
    Ok(())
}

fn canonical(
    file: &str,
    kind: StructureKind,
    template: CanonicalTemplate,
    c: &mut Checks,
) -> Result<(), String> {
    let spec = parse_linear(document(file).ok_or("missing document")?).map_err(e)?;
    let cls = classify(&spec).map_err(e)?;
    c.check(
        format!("{kind} accepted"),
        cls.verdict(kind).is_some_and(|v| v.accepted),
    );
    let report = normal_form(&spec).map_err(|f| format!("{f:?}"))?;
    c.check("normal form verified", report.verified);
    c.check(format!("template {template}"), report.template == template);
    Ok(())
}

fn canonical_models(c: &mut Checks) -> Result<(), String> {
    use CanonicalTemplate as T;
    use StructureKind as K;
    canonical("symplectic.toml", K::Symplectic, T::Symplectic { n: 2 }, c)?;
    canonical(
        "presymplectic.toml",
        K::Presymplectic,
        T::Presymplectic { r: 1, d: 1 },
        c,
    )?;
    canonical(
        "cosymplectic.toml",
        K::Cosymplectic,
        T::Cosymplectic { n: 1 },
        c,
    )?;
    canonical(
        "precosymplectic.toml",
        K::Precosymplectic,
        T::Precosymplectic { r: 1, d: 1 },
        c,
    )?;
    canonical(
        "two-symplectic.toml",
        K::KSymplectic,
        T::KSymplectic { k: 2, n: 1 },
        c,
    )?;
    let sets = vec![vec![0], vec![1]];
    canonical(
        "two-presymplectic.toml",
        K::KPresymplectic,
        T::KPresymplectic {
            n: 2,
            index_sets: sets,
            d: 1,
        },
        c,
    )?;
    let sets = vec![vec![0], vec![0]];
    let template = T::KPrecosymplectic {
        n: 1,
        index_sets: sets,
        d: 1,
    };
    canonical("two-precosymplectic.toml", K::KPrecosymplectic, template, c)?;

    let spec =
        parse_linear(document("multisymplectic.toml").ok_or("missing document")?).map_err(e)?;
    let cls = classify(&spec).map_err(e)?;
    c.check(
        "multisymplectic accepted",
        cls.verdict(K::Multisymplectic).is_some_and(|v| v.accepted),
    );
    Ok(())
}

fn reeb_model(c: &mut Checks) -> Result<(), String> {
    let spec =
        parse_linear(document("two-cosymplectic.toml").ok_or("missing document")?).map_err(e)?;
    let cls = classify(&spec).map_err(e)?;
    c.check(
        "k-cosymplectic accepted",
        cls.verdict(StructureKind::KCosymplectic)
            .is_some_and(|v| v.accepted),
    );
    let report = normal_form(&spec).map_err(|f| format!("{f:?}"))?;
    c.check("normal form verified", report.verified);
    c.check(
        "template k=2, n=1",
        report.template == CanonicalTemplate::KCosymplectic { k: 2, n: 1 },
    );
    c.check(
        "Reeb base (e₁, e₂)",
        report.reeb == Some(vec![unit_vector(5, 0), unit_vector(5, 1)]),
    );
    c.check(
        "Reeb freedom {0}",
        report.reeb_freedom.as_ref().is_some_and(Subspace::is_zero),
    );
    c.check("frame is the identity", report.frame.is_identity());
    Ok(())
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "immersion",
        citation: "immersion of T*ℝ into T*ℝ², pullback p_x dx∧dp_x",
        files: &["immersion.toml"],
        run: immersion,
    },
    Example {
        name: "omega-p",
        citation: "ω_P = (x²+y²) dx∧dy, closed with non-constant rank",
        files: &["omega-p.toml"],
        run: omega_p,
    },
    Example {
        name: "counter",
        citation: "proportional closed forms, f = λ², kernels coincide",
        files: &["counter.toml", "counter-point.toml"],
        run: counter,
    },
    Example {
        name: "section-pullback",
        citation: "section of the polarised bundle, j_S*ω^α = −dθ^α|_S for θ¹ = x dy, θ² = y dx",
        files: &["section-pullback.toml"],
        run: section_pullback,
    },
    Example {
        name: "contact-connection",
        citation: "connection with ∇η = 0 for η = dt − p dx",
        files: &["contact-connection.toml"],
        run: contact_connection,
    },
    Example {
        name: "flat-parallel",
        citation: "torsion-free connection with parallel forms, which are then closed",
        files: &["flat-parallel.toml"],
        run: flat_parallel,
    },
    Example {
        name: "canonical-models",
        citation: "canonical Darboux models of each family",
        files: &[
            "symplectic.toml",
            "presymplectic.toml",
            "cosymplectic.toml",
            "precosymplectic.toml",
            "two-symplectic.toml",
            "two-presymplectic.toml",
            "two-precosymplectic.toml",
            "multisymplectic.toml",
        ],
        run: canonical_models,
    },
    Example {
        name: "k-cosymplectic-reeb",
        citation: "k-cosymplectic model, R_α = ∂/∂x^α",
        files: &["two-cosymplectic.toml"],
        run: reeb_model,
    },
];

/// Runs every example whose name contains `filter`.
pub fn run_corpus(filter: Option<&str>) -> Vec<ExampleResult> {
    EXAMPLES
        .iter()
        .filter(|ex| filter.map_or(true, |f| ex.name.contains(f)))
        .map(|ex| {
            let mut checks = Checks::default();
            let error = (ex.run)(&mut checks).err();
            let passed =
                error.is_none() && !checks.0.is_empty() && checks.0.iter().all(|(_, ok)| *ok);
            ExampleResult {
                name: ex.name,
                citation: ex.citation,
                passed,
                checks: checks.0,
                error,
            }
        })
        .collect()
}

pub fn corpus_report(results: &[ExampleResult]) -> Value {
    let examples: Vec<Value> = results
        .iter()
        .map(|r| {
            let checks: Vec<Value> = r.checks.iter().map(|(l, ok)| json!({ "check": l, "passed": ok })).collect();
            let mut v = json!({ "name": r.name, "citation": r.citation, "passed": r.passed, "checks": checks });
            if let Some(err) = &r.error {
                v.as_object_mut().expect("object").insert("error".into(), json!(err));
            }
            v
        })
        .collect();
    let passed = results.iter().filter(|r| r.passed).count();
    json!({
        "examples": examples,
        "passed": passed,
        "total": results.len(),
        "all_passed": passed == results.len() && !results.is_empty(),
    })
}
