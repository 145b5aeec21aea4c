//! Differential forms and vector fields with polynomial coefficients on a
//! coordinate chart.
//!
//! A chart is an ordered list of coordinate names. Everything here is exact:
//! coefficients are polynomials over `ℚ`, evaluation happens at rational
//! points, and generic ranks are taken over the field of rational functions
//! by fraction-free elimination.

mod field;
mod form;
mod parse;
mod poly;

pub use field::{frobenius_involutive, lie_bracket, FrobeniusReport, PolyVectorField};
pub use form::{generic_rank, kernel_distribution, pullback_map, rank_profile, PolyForm, PolyMap};
pub use parse::{parse_form, parse_poly, parse_vector_field, ParseError};
pub use poly::{Exponents, Poly};

use thiserror::Error;

use crate::exterior::ExteriorError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("chart mismatch: [{left}] vs [{right}]")]
    ChartMismatch { left: String, right: String },
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("expected {expected} components, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("invalid chart: {0}")]
    BadChart(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// Ordered coordinate names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chart {
    names: Vec<String>,
}

impl Chart {
    /// Names must be distinct identifiers (a letter, then letters, digits or
    /// `_`).
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            let mut chars = n.chars();
            let ok = chars.next().is_some_and(char::is_alphabetic)
                && chars.all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::BadChart(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(PolyError::BadChart(format!("`{n}` appears twice")));
            }
        }
        Ok(Chart { names })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Option<Poly> {
        self.index(name).map(|i| Poly::var(self.dim(), i))
    }

    pub(crate) fn same(&self, other: &Chart) -> Result<()> {
        if self != other {
            return Err(PolyError::ChartMismatch {
                left: self.names.join(", "),
                right: other.names.join(", "),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for Chart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.names.join(", "))
    }
}
