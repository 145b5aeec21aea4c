//! Darboux normal forms for linear structures.
//!
//! Every routine builds a [`Frame`] and then checks, by exact pullback, that
//! the input forms become the forms of a [`CanonicalTemplate`] in that frame.
//! A report is only returned when that check passes.

mod polarised;
mod symplectic;
mod template;

pub use polarised::{
    candidate_splitting, k_cosymplectic_darboux, k_precosymplectic_darboux,
    k_presymplectic_darboux, k_symplectic_darboux,
};
pub use symplectic::{
    cosymplectic_darboux, precosymplectic_darboux, presymplectic_darboux, reeb_solve,
    symplectic_darboux,
};
pub use template::{CanonicalTemplate, TemplateForms};

use thiserror::Error;

use crate::exterior::{AltForm, ExteriorError, Frame};
use crate::linalg::{intersect_all, LinalgError, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalFormError {
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("expected a {expected}-form, found degree {found}")]
    Degree { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty family: at least one two-form is required")]
    EmptyFamily,
    #[error("hypothesis `{clause}` fails: {detail}")]
    Hypothesis { clause: String, detail: String },
    #[error("no Reeb vector solves the system for index {alpha}")]
    NoReeb { alpha: usize },
    #[error("the images ω^α(V_α) admit no common adapted basis")]
    NoAdaptedBasis,
    #[error("internal error: frame does not reproduce the template")]
    CertificateFailed,
}

pub type Result<T> = std::result::Result<T, NormalFormError>;

pub(crate) fn hypothesis(clause: impl Into<String>, detail: impl Into<String>) -> NormalFormError {
    NormalFormError::Hypothesis {
        clause: clause.into(),
        detail: detail.into(),
    }
}

/// A decomposition `V = V₁ ⊕ … ⊕ V_k ⊕ D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub parts: Vec<Subspace>,
    pub d: Subspace,
}

/// Certified normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxReport {
    pub frame: Frame,
    pub template: CanonicalTemplate,
    /// One particular Reeb vector per `η^α`, when the structure has them.
    pub reeb: Option<Vec<Vector>>,
    /// Directions by which the Reeb vectors may be shifted.
    pub reeb_freedom: Option<Subspace>,
    pub splitting: Option<Splitting>,
    pub verified: bool,
}

impl DarbouxReport {
    pub fn index_sets(&self) -> Option<&[Vec<usize>]> {
        self.template.index_sets()
    }
}

/// Whether pulling the inputs back through `frame` gives exactly the
/// template forms.
pub fn certify(
    frame: &Frame,
    template: &CanonicalTemplate,
    etas: &[AltForm],
    omegas: &[AltForm],
) -> Result<bool> {
    let model = template.forms();
    if model.etas.len() != etas.len()
        || model.omegas.len() != omegas.len()
        || frame.dim() != template.dim()
    {
        return Ok(false);
    }
    for (input, expected) in etas
        .iter()
        .zip(&model.etas)
        .chain(omegas.iter().zip(&model.omegas))
    {
        if &frame.pull(input)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn finish(
    columns: &[Vector],
    template: CanonicalTemplate,
    etas: &[AltForm],
    omegas: &[AltForm],
    reeb: Option<(Vec<Vector>, Subspace)>,
    splitting: Option<Splitting>,
) -> Result<DarbouxReport> {
    let frame = Frame::from_columns(columns)?;
    if !certify(&frame, &template, etas, omegas)? {
        return Err(NormalFormError::CertificateFailed);
    }
    let (reeb, reeb_freedom) = match reeb {
        Some((base, freedom)) => (Some(base), Some(freedom)),
        None => (None, None),
    };
    Ok(DarbouxReport {
        frame,
        template,
        reeb,
        reeb_freedom,
        splitting,
        verified: true,
    })
}

pub(crate) fn check_degree(form: &AltForm, degree: usize) -> Result<()> {
    if form.degree() != degree {
        return Err(NormalFormError::Degree {
            expected: degree,
            found: form.degree(),
        });
    }
    Ok(())
}

/// Checks that every form has the given degree and that all share one
/// dimension, which is returned.
pub(crate) fn common_dim(etas: &[AltForm], omegas: &[AltForm]) -> Result<usize> {
    let dim = omegas
        .first()
        .or(etas.first())
        .map(AltForm::dim)
        .ok_or(NormalFormError::EmptyFamily)?;
    for f in etas {
        check_degree(f, 1)?;
    }
    for f in omegas {
        check_degree(f, 2)?;
    }
    for f in etas.iter().chain(omegas) {
        if f.dim() != dim {
            return Err(NormalFormError::DimensionMismatch {
                expected: dim,
                found: f.dim(),
            });
        }
    }
    Ok(dim)
}

/// `⋂ ker f` over the given forms.
pub fn common_kernel<'a>(
    dim: usize,
    forms: impl IntoIterator<Item = &'a AltForm>,
) -> Result<Subspace> {
    let kernels = forms
        .into_iter()
        .map(AltForm::one_kernel)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(intersect_all(dim, &kernels)?)
}
