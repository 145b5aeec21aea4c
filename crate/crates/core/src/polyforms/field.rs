use super::{Chart, Poly, PolyError, Result};
use crate::linalg::{fraction_free_echelon, Mat, Rat, Vector};

/// `Σ X^i ∂_i` with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    chart: Chart,
    components: Vec<Poly>,
}

impl PolyVectorField {
    pub fn new(chart: &Chart, components: Vec<Poly>) -> Result<Self> {
        if components.len() != chart.dim() {
            return Err(PolyError::Arity {
                expected: chart.dim(),
                found: components.len(),
            });
        }
        if let Some(bad) = components.iter().find(|c| c.nvars() != chart.dim()) {
            return Err(PolyError::Arity {
                expected: chart.dim(),
                found: bad.nvars(),
            });
        }
        Ok(PolyVectorField {
            chart: chart.clone(),
            components,
        })
    }

    pub fn zero(chart: &Chart) -> Self {
        PolyVectorField {
            chart: chart.clone(),
            components: vec![Poly::zero(chart.dim()); chart.dim()],
        }
    }

    /// `∂_i`.
    pub fn coordinate(chart: &Chart, i: usize) -> Self {
        let mut x = PolyVectorField::zero(chart);
        x.components[i] = Poly::one(chart.dim());
        x
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &PolyVectorField) -> Result<PolyVectorField> {
        self.chart.same(&other.chart)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(PolyVectorField {
            chart: self.chart.clone(),
            components,
        })
    }

    pub fn mul_poly(&self, f: &Poly) -> PolyVectorField {
        PolyVectorField {
            chart: self.chart.clone(),
            components: self.components.iter().map(|c| c.mul(f)).collect(),
        }
    }

    /// `X(f) = Σ X^i ∂_i f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.components
            .iter()
            .enumerate()
            .fold(Poly::zero(self.chart.dim()), |acc, (i, c)| {
                acc.add(&c.mul(&f.derivative(i)))
            })
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Vector> {
        if point.len() != self.chart.dim() {
            return Err(PolyError::Arity {
                expected: self.chart.dim(),
                found: point.len(),
            });
        }
        Ok(self.components.iter().map(|c| c.eval(point)).collect())
    }

    pub fn display(&self) -> String {
        let names = self.chart.names();
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match c.as_constant() {
                Some(k) if k == Rat::from_integer(1.into()) => format!("∂{}", names[i]),
                _ if c.terms().len() == 1 => format!("{}*∂{}", c.display_with(names), names[i]),
                _ => format!("({})*∂{}", c.display_with(names), names[i]),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

impl std::fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.display())
    }
}

/// `[X, Y]^i = X(Y^i) − Y(X^i)`.
pub fn lie_bracket(x: &PolyVectorField, y: &PolyVectorField) -> Result<PolyVectorField> {
    x.chart.same(&y.chart)?;
    let components = (0..x.chart.dim())
        .map(|i| x.apply(&y.components[i]).sub(&y.apply(&x.components[i])))
        .collect();
    Ok(PolyVectorField {
        chart: x.chart.clone(),
        components,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    /// One entry per requested point.
    pub pointwise: Vec<bool>,
    /// Over the field of rational functions.
    pub generic: bool,
}

fn generic_rank_of(fields: &[&PolyVectorField]) -> usize {
    let mut rows: Vec<Vec<Poly>> = fields.iter().map(|f| f.components.clone()).collect();
    if rows.is_empty() {
        return 0;
    }
    fraction_free_echelon(&mut rows).0.len()
}

fn rank_at(fields: &[&PolyVectorField], point: &[Rat]) -> Result<usize> {
    if fields.is_empty() {
        return Ok(0);
    }
    let rows = fields
        .iter()
        .map(|f| f.evaluate(point))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(point.len(), rows)
        .expect("rows have chart length")
        .rank())
}

/// Whether every bracket of generators lies in the span of the generators,
/// at each point and generically.
pub fn frobenius_involutive(
    generators: &[PolyVectorField],
    points: &[Vec<Rat>],
) -> Result<FrobeniusReport> {
    let mut brackets = Vec::new();
    for (i, x) in generators.iter().enumerate() {
        for y in &generators[i + 1..] {
            brackets.push(lie_bracket(x, y)?);
        }
    }
    let base: Vec<&PolyVectorField> = generators.iter().collect();
    let all: Vec<&PolyVectorField> = generators.iter().chain(&brackets).collect();
    let pointwise = points
        .iter()
        .map(|p| Ok(rank_at(&all, p)? == rank_at(&base, p)?))
        .collect::<Result<Vec<_>>>()?;
    let generic = generic_rank_of(&all) == generic_rank_of(&base);
    Ok(FrobeniusReport { pointwise, generic })
}
