//! Structural definitions as checkable predicates.
//!
//! Each checker evaluates every clause of a definition it can, in order,
//! and reports all of them, so a rejected structure shows every failing
//! clause together with a witness where one exists.

mod families;
mod multi;

pub use families::{
    check_cosymplectic, check_k_cosymplectic, check_k_precosymplectic, check_k_presymplectic,
    check_k_symplectic, check_precosymplectic, check_presymplectic, check_symplectic,
};
pub use multi::{
    check_multisymplectic, check_standard_nplectic, check_standard_w, isotropy_type, IsotropyType,
    MultisymplecticVerdict, StandardVerdict,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exterior::{AltForm, ExteriorError};
use crate::kind::StructureKind;
use crate::linalg::{LinalgError, Mat, Subspace, Vector};
use crate::normal_form::Splitting;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifierError {
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, VerifierError>;

fn malformed(msg: impl Into<String>) -> VerifierError {
    VerifierError::Malformed(msg.into())
}

/// Declared (or, in a verdict, computed) numeric parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

/// Linear data of a structure at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSpec {
    /// `None` asks the classifier to try every kind.
    pub kind: Option<StructureKind>,
    pub dim: usize,
    pub etas: Vec<AltForm>,
    pub omegas: Vec<AltForm>,
    pub multiform: Option<AltForm>,
    pub polarisation: Option<Subspace>,
    pub splitting: Option<Splitting>,
    pub metric: Option<Mat>,
    pub params: Params,
}

impl StructureSpec {
    pub fn new(dim: usize) -> Self {
        StructureSpec {
            kind: None,
            dim,
            etas: vec![],
            omegas: vec![],
            multiform: None,
            polarisation: None,
            splitting: None,
            metric: None,
            params: Params::default(),
        }
    }

    /// Shape checks shared by all kinds: dimensions agree and degrees are
    /// right.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for (name, f, deg) in self
            .etas
            .iter()
            .map(|f| ("eta", f, Some(1)))
            .chain(self.omegas.iter().map(|f| ("omega", f, Some(2))))
            .chain(self.multiform.iter().map(|f| ("multiform", f, None)))
        {
            if f.dim() != n {
                return Err(malformed(format!(
                    "{name} has dimension {}, expected {n}",
                    f.dim()
                )));
            }
            if let Some(deg) = deg {
                if f.degree() != deg {
                    return Err(malformed(format!(
                        "{name} has degree {}, expected {deg}",
                        f.degree()
                    )));
                }
            }
        }
        let subspaces = self.polarisation.iter().chain(
            self.splitting
                .iter()
                .flat_map(|s| s.parts.iter().chain(std::iter::once(&s.d))),
        );
        for s in subspaces {
            if s.ambient_dim() != n {
                return Err(malformed(format!(
                    "subspace lives in dimension {}, expected {n}",
                    s.ambient_dim()
                )));
            }
        }
        if let Some(g) = &self.metric {
            if g.rows() != n || g.cols() != n {
                return Err(malformed(format!(
                    "metric is {}x{}, expected {n}x{n}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(())
    }

    /// The same structure seen through a change of basis `l`: forms are
    /// pulled back, subspaces are mapped by `l⁻¹`, the metric becomes `lᵀgl`.
    pub fn pulled_back(&self, l: &Mat) -> Result<StructureSpec> {
        let inv = l.inverse()?;
        let pull = |f: &AltForm| f.pullback(l);
        let map = |s: &Subspace| s.map(&inv);
        Ok(StructureSpec {
            kind: self.kind,
            dim: self.dim,
            etas: self
                .etas
                .iter()
                .map(pull)
                .collect::<std::result::Result<_, _>>()?,
            omegas: self
                .omegas
                .iter()
                .map(pull)
                .collect::<std::result::Result<_, _>>()?,
            multiform: self.multiform.as_ref().map(pull).transpose()?,
            polarisation: self.polarisation.as_ref().map(map).transpose()?,
            splitting: match &self.splitting {
                Some(s) => Some(Splitting {
                    parts: s
                        .parts
                        .iter()
                        .map(map)
                        .collect::<std::result::Result<_, _>>()?,
                    d: map(&s.d)?,
                }),
                None => None,
            },
            metric: match &self.metric {
                Some(g) => Some(l.transpose().mul(g)?.mul(l)?),
                None => None,
            },
            params: self.params.clone(),
        })
    }
}

/// Evidence attached to a failed clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vector(Vector),
    Subspace(Subspace),
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub citation: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: StructureKind,
    pub accepted: bool,
    pub clauses: Vec<Clause>,
    /// Parameters computed from the data.
    pub params: Params,
}

impl Verdict {
    pub fn failed(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

pub(crate) struct VerdictBuilder {
    kind: StructureKind,
    citation: &'static str,
    clauses: Vec<Clause>,
}

impl VerdictBuilder {
    pub(crate) fn new(kind: StructureKind, citation: &'static str) -> Self {
        VerdictBuilder {
            kind,
            citation,
            clauses: Vec::new(),
        }
    }

    pub(crate) fn check(
        &mut self,
        label: &str,
        name: impl Into<String>,
        passed: bool,
        witness: Option<Witness>,
    ) {
        let citation = if label.is_empty() {
            self.citation.to_string()
        } else {
            format!("{}, clause {label}", self.citation)
        };
        self.clauses.push(Clause {
            name: name.into(),
            citation,
            passed,
            witness: if passed { None } else { witness },
        });
    }

    pub(crate) fn finish(self, params: Params) -> Verdict {
        let accepted = self.clauses.iter().all(|c| c.passed);
        Verdict {
            kind: self.kind,
            accepted,
            clauses: self.clauses,
            params,
        }
    }
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub requested: Option<StructureKind>,
    pub verdicts: Vec<Verdict>,
}

impl Classification {
    pub fn accepted(&self) -> bool {
        self.verdicts.iter().any(|v| v.accepted)
    }

    pub fn accepted_kinds(&self) -> Vec<StructureKind> {
        self.verdicts
            .iter()
            .filter(|v| v.accepted)
            .map(|v| v.kind)
            .collect()
    }

    pub fn verdict(&self, kind: StructureKind) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.kind == kind)
    }
}

/// Whether the data has the right shape for a kind: which forms are
/// present, and whether the polarisation is given.
fn fits(spec: &StructureSpec, kind: StructureKind) -> std::result::Result<(), String> {
    let (e, w) = (spec.etas.len(), spec.omegas.len());
    let need_v = || {
        spec.polarisation
            .is_some()
            .then_some(())
            .ok_or_else(|| "a polarisation V is required".to_string())
    };
    match kind {
        StructureKind::Symplectic | StructureKind::Presymplectic => (e == 0 && w == 1)
            .then_some(())
            .ok_or_else(|| "expected exactly one two-form and no one-forms".into()),
        StructureKind::Cosymplectic | StructureKind::Precosymplectic => (e == 1 && w == 1)
            .then_some(())
            .ok_or_else(|| "expected one one-form and one two-form".into()),
        StructureKind::KSymplectic | StructureKind::KPresymplectic => {
            if e != 0 || w == 0 {
                return Err("expected k ≥ 1 two-forms and no one-forms".into());
            }
            need_v()
        }
        StructureKind::KCosymplectic | StructureKind::KPrecosymplectic => {
            if e != w || w == 0 {
                return Err("expected k ≥ 1 one-forms and as many two-forms".into());
            }
            need_v()
        }
        StructureKind::Multisymplectic => {
            if spec.multiform.is_some() || (e == 0 && w == 1) {
                Ok(())
            } else {
                Err("expected a multiform".into())
            }
        }
    }
}

fn run(spec: &StructureSpec, kind: StructureKind) -> Result<Verdict> {
    let v = spec.polarisation.as_ref();
    let p = &spec.params;
    Ok(match kind {
        StructureKind::Symplectic => check_symplectic(&spec.omegas[0])?,
        StructureKind::Presymplectic => check_presymplectic(&spec.omegas[0], p)?,
        StructureKind::Cosymplectic => check_cosymplectic(&spec.etas[0], &spec.omegas[0])?,
        StructureKind::Precosymplectic => check_precosymplectic(&spec.etas[0], &spec.omegas[0], p)?,
        StructureKind::KSymplectic => check_k_symplectic(&spec.omegas, v.expect("checked"), p)?,
        StructureKind::KPresymplectic => check_k_presymplectic(
            &spec.omegas,
            v.expect("checked"),
            spec.splitting.as_ref(),
            p,
        )?,
        StructureKind::KCosymplectic => {
            check_k_cosymplectic(&spec.etas, &spec.omegas, v.expect("checked"), p)?
        }
        StructureKind::KPrecosymplectic => check_k_precosymplectic(
            &spec.etas,
            &spec.omegas,
            v.expect("checked"),
            spec.splitting.as_ref(),
            p,
        )?,
        StructureKind::Multisymplectic => {
            let form = match &spec.multiform {
                Some(f) => f,
                None => &spec.omegas[0],
            };
            check_multisymplectic(form)?.verdict
        }
    })
}

/// Runs the checker for the declared kind, or every applicable checker when
/// the kind is unknown.
pub fn classify(spec: &StructureSpec) -> Result<Classification> {
    spec.validate()?;
    match spec.kind {
        Some(kind) => {
            fits(spec, kind).map_err(|m| malformed(format!("{kind}: {m}")))?;
            Ok(Classification {
                requested: Some(kind),
                verdicts: vec![run(spec, kind)?],
            })
        }
        None => {
            let mut verdicts = Vec::new();
            for kind in StructureKind::ALL {
                if fits(spec, kind).is_ok() {
                    verdicts.push(run(spec, kind)?);
                }
            }
            Ok(Classification {
                requested: None,
                verdicts,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn e(n: usize, i: usize) -> AltForm {
        AltForm::basis_covector(n, i)
    }

    fn w(n: usize, i: usize, j: usize) -> AltForm {
        e(n, i).wedge(&e(n, j)).unwrap()
    }

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::span(n, idx.iter().map(|&i| unit_vector(n, i)).collect()).unwrap()
    }

    #[test]
    fn canonical_symplectic_nests() {
        let mut spec = StructureSpec::new(4);
        spec.omegas = vec![w(4, 0, 1).add(&w(4, 2, 3)).unwrap()];
        let c = classify(&spec).unwrap();
        let kinds = c.accepted_kinds();
        assert!(kinds.contains(&StructureKind::Symplectic));
        assert!(kinds.contains(&StructureKind::Presymplectic));
        let pre = c.verdict(StructureKind::Presymplectic).unwrap();
        assert_eq!(pre.params.r, Some(vec![2]));
        assert_eq!(pre.params.d, Some(0));
    }

    #[test]
    fn canonical_two_symplectic() {
        let mut spec = StructureSpec::new(3);
        spec.kind = Some(StructureKind::KSymplectic);
        spec.omegas = vec![w(3, 0, 1), w(3, 0, 2)];
        spec.polarisation = Some(span(3, &[1, 2]));
        let c = classify(&spec).unwrap();
        assert!(c.accepted());
        assert_eq!(c.verdicts[0].params.k, Some(2));
        assert_eq!(c.verdicts[0].params.n, Some(1));
    }

    #[test]
    fn lagrangian_polarisation_k_one() {
        let mut spec = StructureSpec::new(4);
        spec.kind = Some(StructureKind::KSymplectic);
        spec.omegas = vec![w(4, 0, 1).add(&w(4, 2, 3)).unwrap()];
        spec.polarisation = Some(span(4, &[1, 3]));
        assert!(classify(&spec).unwrap().accepted());
    }

    #[test]
    fn missing_polarisation_is_malformed() {
        let mut spec = StructureSpec::new(3);
        spec.kind = Some(StructureKind::KSymplectic);
        spec.omegas = vec![w(3, 0, 1), w(3, 0, 2)];
        assert!(matches!(classify(&spec), Err(VerifierError::Malformed(_))));
    }

    #[test]
    fn degree_mismatch_is_malformed() {
        let mut spec = StructureSpec::new(3);
        spec.omegas = vec![e(3, 0)];
        assert!(matches!(classify(&spec), Err(VerifierError::Malformed(_))));
    }
}
