//! Command bodies. Each returns a report body and whether the input was
//! accepted; input errors are returned as `Err`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use super::document::{ChartBundle, ConnectionBundle};
use super::report;
use super::CliError;
use crate::connection::{covariant_derivative_form, curvature, torsion, TensorField};
use crate::kind::StructureKind;
use crate::linalg::{random_invertible, Mat, Rat, Subspace};
use crate::normal_form::{
    candidate_splitting, cosymplectic_darboux, k_cosymplectic_darboux, k_precosymplectic_darboux,
    k_presymplectic_darboux, k_symplectic_darboux, precosymplectic_darboux, presymplectic_darboux,
    symplectic_darboux, DarbouxReport, NormalFormError,
};
use crate::polyforms::{
    frobenius_involutive, generic_rank, kernel_distribution, pullback_map, rank_profile, PolyForm,
};
use crate::verifier::{classify, StructureSpec, VerifierError};

pub struct Outcome {
    pub body: Value,
    pub accepted: bool,
}

fn verifier_error(e: VerifierError) -> CliError {
    CliError::Invalid(e.to_string())
}

pub fn run_classify(spec: &StructureSpec) -> Result<Outcome, CliError> {
    let c = classify(spec).map_err(verifier_error)?;
    Ok(Outcome {
        accepted: c.accepted(),
        body: report::classification(&c),
    })
}

/// Why a normal form was not produced.
#[derive(Debug)]
pub enum NormalFormFailure {
    /// The spec does not describe the declared kind's data.
    Input(String),
    /// The data violates a hypothesis of the normal form.
    Rejected(NormalFormError),
}

impl From<NormalFormError> for NormalFormFailure {
    fn from(e: NormalFormError) -> Self {
        match e {
            NormalFormError::Hypothesis { .. }
            | NormalFormError::NoReeb { .. }
            | NormalFormError::NoAdaptedBasis
            | NormalFormError::CertificateFailed => NormalFormFailure::Rejected(e),
            other => NormalFormFailure::Input(other.to_string()),
        }
    }
}

fn counts(
    spec: &StructureSpec,
    etas: Option<usize>,
    omegas: Option<usize>,
) -> Result<(), NormalFormFailure> {
    let kind = spec.kind.map_or("unknown", |k| k.name());
    if let Some(e) = etas {
        if spec.etas.len() != e {
            return Err(NormalFormFailure::Input(format!(
                "{kind} needs {e} eta form(s), found {}",
                spec.etas.len()
            )));
        }
    }
    if let Some(o) = omegas {
        if spec.omegas.len() != o {
            return Err(NormalFormFailure::Input(format!(
                "{kind} needs {o} omega form(s), found {}",
                spec.omegas.len()
            )));
        }
    }
    Ok(())
}

fn polarisation(spec: &StructureSpec) -> Result<&Subspace, NormalFormFailure> {
    spec.polarisation
        .as_ref()
        .ok_or_else(|| NormalFormFailure::Input("polarisation is required".into()))
}

/// Dispatches on the declared kind. Missing splittings are replaced by
/// the candidate splitting for the spec's metric (identity by default).
pub fn normal_form(spec: &StructureSpec) -> Result<DarbouxReport, NormalFormFailure> {
    spec.validate()
        .map_err(|e| NormalFormFailure::Input(e.to_string()))?;
    let g = spec
        .metric
        .clone()
        .unwrap_or_else(|| Mat::identity(spec.dim));
    let kind = spec
        .kind
        .ok_or_else(|| NormalFormFailure::Input("normalform needs a declared kind".into()))?;
    let report = match kind {
        StructureKind::Symplectic => {
            counts(spec, Some(0), Some(1))?;
            symplectic_darboux(&spec.omegas[0])?
        }
        StructureKind::Presymplectic => {
            counts(spec, Some(0), Some(1))?;
            presymplectic_darboux(&spec.omegas[0])?
        }
        StructureKind::Cosymplectic => {
            counts(spec, Some(1), Some(1))?;
            cosymplectic_darboux(&spec.etas[0], &spec.omegas[0])?
        }
        StructureKind::Precosymplectic => {
            counts(spec, Some(1), Some(1))?;
            precosymplectic_darboux(&spec.etas[0], &spec.omegas[0])?
        }
        StructureKind::KSymplectic => {
            counts(spec, Some(0), None)?;
            k_symplectic_darboux(&spec.omegas, polarisation(spec)?)?
        }
        StructureKind::KPresymplectic => {
            counts(spec, Some(0), None)?;
            let v = polarisation(spec)?;
            let split = match &spec.splitting {
                Some(s) => s.clone(),
                None => candidate_splitting(&[], &spec.omegas, v, &g)?,
            };
            k_presymplectic_darboux(&spec.omegas, v, &split, &g)?
        }
        StructureKind::KCosymplectic => {
            k_cosymplectic_darboux(&spec.etas, &spec.omegas, polarisation(spec)?)?
        }
        StructureKind::KPrecosymplectic => {
            let v = polarisation(spec)?;
            let split = match &spec.splitting {
                Some(s) => s.clone(),
                None => candidate_splitting(&spec.etas, &spec.omegas, v, &g)?,
            };
            k_precosymplectic_darboux(&spec.etas, &spec.omegas, v, &split, &g)?
        }
        StructureKind::Multisymplectic => {
            return Err(NormalFormFailure::Input(
                "no linear normal form is computed for multisymplectic forms".into(),
            ))
        }
    };
    Ok(report)
}

fn failure_body(f: &NormalFormError) -> Value {
    let mut m = Map::new();
    m.insert("verified".into(), json!(false));
    match f {
        NormalFormError::Hypothesis { clause, detail } => {
            m.insert("failed_hypothesis".into(), json!(clause));
            m.insert("detail".into(), json!(detail));
        }
        other => {
            m.insert("detail".into(), json!(other.to_string()));
        }
    }
    Value::Object(m)
}

pub fn run_normal_form(spec: &StructureSpec, seed: Option<u64>) -> Result<Outcome, CliError> {
    let report = match normal_form(spec) {
        Ok(r) => r,
        Err(NormalFormFailure::Input(m)) => return Err(CliError::Invalid(m)),
        Err(NormalFormFailure::Rejected(e)) => {
            return Ok(Outcome {
                body: failure_body(&e),
                accepted: false,
            })
        }
    };
    let mut body = report::darboux(&report);
    let mut accepted = report.verified;
    if let Some(seed) = seed {
        let (test, ok) = self_test(spec, &report, seed)?;
        accepted &= ok;
        body.as_object_mut()
            .expect("object")
            .insert("self_test".into(), test);
    }
    Ok(Outcome { body, accepted })
}

/// Pushes the spec through a seeded random change of basis and checks
/// that the normal form of the result is verified with the same template.
fn self_test(
    spec: &StructureSpec,
    original: &DarbouxReport,
    seed: u64,
) -> Result<(Value, bool), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = random_invertible(&mut rng, spec.dim, 3);
    let moved = spec.pulled_back(&l).map_err(verifier_error)?;
    let (verified, same, detail) = match normal_form(&moved) {
        Ok(r) => (r.verified, r.template == original.template, None),
        Err(NormalFormFailure::Input(m)) => (false, false, Some(m)),
        Err(NormalFormFailure::Rejected(e)) => (false, false, Some(e.to_string())),
    };
    let mut m = Map::new();
    m.insert("seed".into(), json!(seed));
    m.insert("matrix".into(), report::matrix(&l));
    m.insert("verified".into(), json!(verified));
    m.insert("template_matches".into(), json!(same));
    if let Some(d) = detail {
        m.insert("detail".into(), json!(d));
    }
    Ok((Value::Object(m), verified && same))
}

fn form_entry(name: &str, form: &PolyForm, points: &[Vec<Rat>]) -> Result<Value, CliError> {
    let poly = |e: crate::polyforms::PolyError| CliError::Invalid(format!("{name}: {e}"));
    let mut m = Map::new();
    m.insert("name".into(), json!(name));
    m.insert("expr".into(), json!(form.to_string()));
    m.insert("degree".into(), json!(form.degree()));
    m.insert("closed".into(), json!(form.is_closed()));
    m.insert("d".into(), json!(form.d().to_string()));
    if form.degree() > 0 {
        m.insert("generic_rank".into(), json!(generic_rank(form)));
        m.insert(
            "ranks".into(),
            json!(rank_profile(form, points).map_err(poly)?),
        );
        let kernels = points
            .iter()
            .map(|p| {
                Ok(report::subspace(
                    &kernel_distribution(form, p).map_err(poly)?,
                ))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        m.insert("kernels".into(), Value::Array(kernels));
    }
    Ok(Value::Object(m))
}

pub fn run_chart_check(
    bundle: &ChartBundle,
    points: Option<&[Vec<Rat>]>,
) -> Result<Outcome, CliError> {
    let points = points.unwrap_or(&bundle.points);
    if let Some(bad) = points.iter().find(|p| p.len() != bundle.chart.dim()) {
        return Err(CliError::Invalid(format!(
            "point has {} coordinates, chart has {}",
            bad.len(),
            bundle.chart.dim()
        )));
    }
    let forms = bundle
        .forms
        .iter()
        .map(|(name, f)| form_entry(name, f, points))
        .collect::<Result<Vec<_>, _>>()?;
    let mut distributions = Vec::new();
    for (name, gens) in &bundle.distributions {
        let r = frobenius_involutive(gens, points)
            .map_err(|e| CliError::Invalid(format!("{name}: {e}")))?;
        distributions.push(json!({
            "name": name,
            "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "involutive": r.generic,
            "involutive_at": r.pointwise,
        }));
    }
    let mut maps = Vec::new();
    for m in &bundle.maps {
        let mut pulled = Vec::new();
        for name in &m.pull {
            let (_, form) = bundle
                .forms
                .iter()
                .find(|(n, _)| n == name)
                .expect("checked when resolving");
            let p = pullback_map(&m.map, form)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", m.name)))?;
            let mut entry = form_entry(name, &p, &m.points)?;
            entry
                .as_object_mut()
                .expect("object")
                .insert("form".into(), json!(name));
            pulled.push(entry);
        }
        maps.push(json!({
            "name": m.name,
            "source": m.map.source().names(),
            "points": m.points.iter().map(|p| report::vector(p)).collect::<Vec<_>>(),
            "pullbacks": pulled,
        }));
    }
    let body = json!({
        "chart": bundle.chart.names(),
        "points": points.iter().map(|p| report::vector(p)).collect::<Vec<_>>(),
        "forms": forms,
        "distributions": distributions,
        "maps": maps,
    });
    Ok(Outcome {
        body,
        accepted: true,
    })
}

fn tensor(t: &TensorField) -> Value {
    let names = t.chart().names();
    let comps: Vec<Value> = t
        .nonzero()
        .into_iter()
        .map(|(idx, c)| {
            let label = |s: &[usize]| s.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
            json!({
                "upper": label(&idx[..t.upper()]),
                "lower": label(&idx[t.upper()..]),
                "value": c.display_with(names),
            })
        })
        .collect();
    json!({ "zero": t.is_zero(), "components": comps })
}

pub fn run_connection_check(bundle: &ConnectionBundle) -> Result<Outcome, CliError> {
    let conn = &bundle.connection;
    let t = torsion(conn);
    let torsion_free = t.is_zero();
    let mut forms = Vec::new();
    for (name, f) in &bundle.forms {
        let nabla = covariant_derivative_form(conn, f)
            .map_err(|e| CliError::Invalid(format!("{name}: {e}")))?;
        let parallel = nabla.is_zero();
        forms.push(json!({
            "name": name,
            "expr": f.to_string(),
            "parallel": parallel,
            "closed": f.is_closed(),
            "d": f.d().to_string(),
            "covariant_derivative": tensor(&nabla),
        }));
    }
    let body = json!({
        "chart": conn.chart().names(),
        "christoffel": tensor(conn.christoffel()),
        "torsion": tensor(&t),
        "torsion_free": torsion_free,
        "curvature": tensor(&curvature(conn)),
        "forms": forms,
    });
    Ok(Outcome {
        body,
        accepted: true,
    })
}
