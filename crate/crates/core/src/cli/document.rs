//! Input documents (TOML).
//!
//! The `kind` field selects one of three shapes: a linear structure (one of
//! the nine kinds, or `unknown`), a `chart` bundle of polynomial forms, or a
//! `connection` bundle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connection::{ChristoffelEntry, Connection};
use crate::exterior::{AltForm, TermRecord};
use crate::kind::StructureKind;
use crate::linalg::{format_rat, parse_rat, Mat, Rat, Subspace, Vector};
use crate::normal_form::Splitting;
use crate::polyforms::{
    parse_form, parse_poly, parse_vector_field, Chart, PolyForm, PolyMap, PolyVectorField,
};
use crate::verifier::{Params, StructureSpec};

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("{path}: {message}")]
    Semantic { path: String, message: String },
}

fn semantic(path: impl Into<String>, message: impl ToString) -> InputError {
    InputError::Semantic {
        path: path.into(),
        message: message.to_string(),
    }
}

/// A rational written as a string (`"3/2"`) or an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn to_rat(&self, path: &str) -> Result<Rat, InputError> {
        match self {
            Scalar::Int(i) => Ok(Rat::from_integer((*i).into())),
            Scalar::Text(s) => parse_rat(s).map_err(|e| semantic(path, e)),
        }
    }

    fn from_rat(r: &Rat) -> Self {
        Scalar::Text(format_rat(r))
    }
}

fn vector(values: &[Scalar], dim: usize, path: &str) -> Result<Vector, InputError> {
    if values.len() != dim {
        return Err(semantic(
            path,
            format!("expected {dim} entries, found {}", values.len()),
        ));
    }
    values
        .iter()
        .enumerate()
        .map(|(i, s)| s.to_rat(&format!("{path}[{i}]")))
        .collect()
}

fn subspace(rows: &[Vec<Scalar>], dim: usize, path: &str) -> Result<Subspace, InputError> {
    let vectors = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector(r, dim, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Subspace::span(dim, vectors).map_err(|e| semantic(path, e))
}

fn rows_of(s: &Subspace) -> Vec<Vec<Scalar>> {
    s.basis()
        .iter()
        .map(|v| v.iter().map(Scalar::from_rat).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormRecord {
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiformRecord {
    pub degree: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceRecord {
    pub basis: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplittingRecord {
    pub parts: Vec<Vec<Vec<Scalar>>>,
    pub d: Vec<Vec<Scalar>>,
}

fn params_empty(p: &Params) -> bool {
    p == &Params::default()
}

/// Linear data at a point. Indices in term records are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearDocument {
    pub version: u32,
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub metric: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "params_empty")]
    pub params: Params,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eta: Vec<FormRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omega: Vec<FormRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiform: Option<MultiformRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarisation: Option<SubspaceRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<SplittingRecord>,
}

impl LinearDocument {
    pub fn from_spec(spec: &StructureSpec) -> Self {
        let form = |f: &AltForm| FormRecord {
            terms: f.to_records(),
        };
        LinearDocument {
            version: VERSION,
            kind: spec
                .kind
                .map_or_else(|| "unknown".to_string(), |k| k.name().to_string()),
            dim: spec.dim,
            metric: spec
                .metric
                .as_ref()
                .map(|g| {
                    g.row_vectors()
                        .iter()
                        .map(|r| r.iter().map(Scalar::from_rat).collect())
                        .collect()
                })
                .unwrap_or_default(),
            params: spec.params.clone(),
            eta: spec.etas.iter().map(form).collect(),
            omega: spec.omegas.iter().map(form).collect(),
            multiform: spec.multiform.as_ref().map(|f| MultiformRecord {
                degree: f.degree(),
                terms: f.to_records(),
            }),
            polarisation: spec
                .polarisation
                .as_ref()
                .map(|v| SubspaceRecord { basis: rows_of(v) }),
            splitting: spec.splitting.as_ref().map(|s| SplittingRecord {
                parts: s.parts.iter().map(rows_of).collect(),
                d: rows_of(&s.d),
            }),
        }
    }

    pub fn to_spec(&self) -> Result<StructureSpec, InputError> {
        let kind = if self.kind == "unknown" {
            None
        } else {
            Some(
                self.kind
                    .parse::<StructureKind>()
                    .map_err(|e| semantic("kind", e))?,
            )
        };
        let n = self.dim;
        let forms = |records: &[FormRecord], degree: usize, name: &str| {
            records
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    AltForm::from_records(n, degree, &r.terms)
                        .map_err(|e| semantic(format!("{name}[{i}].terms"), e))
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let metric = if self.metric.is_empty() {
            None
        } else {
            if self.metric.len() != n {
                return Err(semantic(
                    "metric",
                    format!("expected {n} rows, found {}", self.metric.len()),
                ));
            }
            let rows = self
                .metric
                .iter()
                .enumerate()
                .map(|(i, r)| vector(r, n, &format!("metric[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Some(Mat::from_rows(n, rows).map_err(|e| semantic("metric", e))?)
        };
        let splitting = match &self.splitting {
            None => None,
            Some(s) => Some(Splitting {
                parts: s
                    .parts
                    .iter()
                    .enumerate()
                    .map(|(i, p)| subspace(p, n, &format!("splitting.parts[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?,
                d: subspace(&s.d, n, "splitting.d")?,
            }),
        };
        Ok(StructureSpec {
            kind,
            dim: n,
            etas: forms(&self.eta, 1, "eta")?,
            omegas: forms(&self.omega, 2, "omega")?,
            multiform: match &self.multiform {
                None => None,
                Some(m) => Some(
                    AltForm::from_records(n, m.degree, &m.terms)
                        .map_err(|e| semantic("multiform.terms", e))?,
                ),
            },
            polarisation: match &self.polarisation {
                None => None,
                Some(p) => Some(subspace(&p.basis, n, "polarisation.basis")?),
            },
            splitting,
            metric,
            params: self.params.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedExpr {
    pub name: String,
    pub expr: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionRecord {
    pub name: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapRecord {
    pub name: String,
    /// Source coordinates; the target is the document chart.
    pub source: Vec<String>,
    /// Target coordinates written in the source coordinates.
    pub components: Vec<String>,
    /// Names of document forms to pull back.
    #[serde(default)]
    pub pull: Vec<String>,
    /// Source points at which to evaluate the pullbacks.
    #[serde(default)]
    pub points: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartDocument {
    pub version: u32,
    pub kind: String,
    pub chart: Vec<String>,
    #[serde(default)]
    pub points: Vec<Vec<Scalar>>,
    #[serde(default)]
    pub forms: Vec<NamedExpr>,
    #[serde(default)]
    pub distributions: Vec<DistributionRecord>,
    #[serde(default)]
    pub maps: Vec<MapRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionDocument {
    pub version: u32,
    pub kind: String,
    pub chart: Vec<String>,
    #[serde(default)]
    pub christoffel: Vec<ChristoffelEntry>,
    #[serde(default)]
    pub forms: Vec<NamedExpr>,
}

/// A resolved chart bundle.
#[derive(Clone, Debug)]
pub struct ChartBundle {
    pub chart: Chart,
    pub points: Vec<Vector>,
    pub forms: Vec<(String, PolyForm)>,
    pub distributions: Vec<(String, Vec<PolyVectorField>)>,
    pub maps: Vec<MapBundle>,
}

#[derive(Clone, Debug)]
pub struct MapBundle {
    pub name: String,
    pub map: PolyMap,
    pub pull: Vec<String>,
    pub points: Vec<Vector>,
}

#[derive(Clone, Debug)]
pub struct ConnectionBundle {
    pub connection: Connection,
    pub forms: Vec<(String, PolyForm)>,
}

fn chart(names: &[String], path: &str) -> Result<Chart, InputError> {
    Chart::new(names.iter().cloned()).map_err(|e| semantic(path, e))
}

fn named_forms(chart: &Chart, forms: &[NamedExpr]) -> Result<Vec<(String, PolyForm)>, InputError> {
    let mut out: Vec<(String, PolyForm)> = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        if out.iter().any(|(n, _)| n == &f.name) {
            return Err(semantic(
                format!("forms[{i}].name"),
                format!("duplicate name `{}`", f.name),
            ));
        }
        let form =
            parse_form(chart, &f.expr).map_err(|e| semantic(format!("forms[{i}].expr"), e))?;
        out.push((f.name.clone(), form));
    }
    Ok(out)
}

fn points(raw: &[Vec<Scalar>], dim: usize, path: &str) -> Result<Vec<Vector>, InputError> {
    raw.iter()
        .enumerate()
        .map(|(i, p)| vector(p, dim, &format!("{path}[{i}]")))
        .collect()
}

impl ChartDocument {
    pub fn resolve(&self) -> Result<ChartBundle, InputError> {
        let c = chart(&self.chart, "chart")?;
        let forms = named_forms(&c, &self.forms)?;
        let mut distributions = Vec::new();
        for (i, d) in self.distributions.iter().enumerate() {
            let gens = d
                .generators
                .iter()
                .enumerate()
                .map(|(j, g)| {
                    parse_vector_field(&c, g)
                        .map_err(|e| semantic(format!("distributions[{i}].generators[{j}]"), e))
                })
                .collect::<Result<Vec<_>, _>>()?;
            distributions.push((d.name.clone(), gens));
        }
        let mut maps = Vec::new();
        for (i, m) in self.maps.iter().enumerate() {
            let source = chart(&m.source, &format!("maps[{i}].source"))?;
            let comps = m
                .components
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_poly(&source, s)
                        .map_err(|e| semantic(format!("maps[{i}].components[{j}]"), e))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let map = PolyMap::new(&source, &c, comps)
                .map_err(|e| semantic(format!("maps[{i}].components"), e))?;
            for (j, name) in m.pull.iter().enumerate() {
                if !forms.iter().any(|(n, _)| n == name) {
                    return Err(semantic(
                        format!("maps[{i}].pull[{j}]"),
                        format!("no form named `{name}`"),
                    ));
                }
            }
            let pts = points(&m.points, source.dim(), &format!("maps[{i}].points"))?;
            maps.push(MapBundle {
                name: m.name.clone(),
                map,
                pull: m.pull.clone(),
                points: pts,
            });
        }
        Ok(ChartBundle {
            points: points(&self.points, c.dim(), "points")?,
            chart: c,
            forms,
            distributions,
            maps,
        })
    }
}

impl ConnectionDocument {
    pub fn resolve(&self) -> Result<ConnectionBundle, InputError> {
        let c = chart(&self.chart, "chart")?;
        let connection = Connection::from_entries(&c, &self.christoffel)
            .map_err(|e| semantic("christoffel", e))?;
        Ok(ConnectionBundle {
            forms: named_forms(&c, &self.forms)?,
            connection,
        })
    }
}

#[derive(Clone, Debug)]
pub enum Document {
    Linear(LinearDocument),
    Chart(ChartDocument),
    Connection(ConnectionDocument),
}

fn syntax(e: toml::de::Error) -> InputError {
    InputError::Syntax(e.to_string().trim_end().to_string())
}

/// Parses a document. TOML syntax and schema errors carry line and column;
/// semantic errors are reported later, by field path, when resolving.
pub fn parse_document(text: &str) -> Result<Document, InputError> {
    let value: toml::Table = toml::from_str(text).map_err(syntax)?;
    match value.get("version") {
        Some(toml::Value::Integer(v)) if *v == i64::from(VERSION) => {}
        Some(other) => return Err(semantic("version", format!("unsupported version {other}"))),
        None => return Err(semantic("version", "missing")),
    }
    let kind = match value.get("kind") {
        Some(toml::Value::String(s)) => s.clone(),
        _ => return Err(semantic("kind", "missing or not a string")),
    };
    Ok(match kind.as_str() {
        "chart" => Document::Chart(toml::from_str(text).map_err(syntax)?),
        "connection" => Document::Connection(toml::from_str(text).map_err(syntax)?),
        _ => Document::Linear(toml::from_str(text).map_err(syntax)?),
    })
}

pub fn parse_linear(text: &str) -> Result<StructureSpec, InputError> {
    match parse_document(text)? {
        Document::Linear(d) => d.to_spec(),
        _ => Err(semantic("kind", "expected a linear structure")),
    }
}

pub fn serialize_spec(spec: &StructureSpec) -> String {
    toml::to_string(&LinearDocument::from_spec(spec)).expect("documents serialize")
}
