use std::collections::BTreeMap;

use super::{Chart, Poly, PolyError, PolyVectorField, Result};
use crate::exterior::{combinations, sort_with_sign, AltForm};
use crate::linalg::{fraction_free_echelon, Rat, Subspace};

/// A differential form on a chart, with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyForm {
    chart: Chart,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

impl PolyForm {
    pub fn zero(chart: &Chart, degree: usize) -> Self {
        PolyForm {
            chart: chart.clone(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A function, as a 0-form.
    pub fn function(chart: &Chart, f: Poly) -> Self {
        let mut out = PolyForm::zero(chart, 0);
        out.add_term(vec![], f);
        out
    }

    /// `dx^i`.
    pub fn differential(chart: &Chart, i: usize) -> Self {
        let mut out = PolyForm::zero(chart, 1);
        out.add_term(vec![i], Poly::one(chart.dim()));
        out
    }

    /// Builds from unsorted index tuples, normalising signs; repeated
    /// indices give zero.
    pub fn from_terms(
        chart: &Chart,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Poly)>,
    ) -> Result<Self> {
        let mut out = PolyForm::zero(chart, degree);
        for (mut idx, c) in terms {
            if idx.len() != degree {
                return Err(PolyError::DegreeMismatch {
                    expected: degree,
                    found: idx.len(),
                });
            }
            if idx.iter().any(|&i| i >= chart.dim()) || c.nvars() != chart.dim() {
                return Err(PolyError::Arity {
                    expected: chart.dim(),
                    found: c.nvars(),
                });
            }
            if let Some(neg) = sort_with_sign(&mut idx) {
                out.add_term(idx, if neg { c.neg() } else { c });
            }
        }
        Ok(out)
    }

    /// A constant-coefficient form.
    pub fn from_alt(chart: &Chart, a: &AltForm) -> Result<Self> {
        if a.dim() != chart.dim() {
            return Err(PolyError::Arity {
                expected: chart.dim(),
                found: a.dim(),
            });
        }
        let n = chart.dim();
        PolyForm::from_terms(
            chart,
            a.degree(),
            a.terms()
                .iter()
                .map(|(i, c)| (i.clone(), Poly::constant(n, c.clone()))),
        )
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Poly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&idx) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(idx, sum);
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: &[usize]) -> Poly {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.chart.dim()))
    }

    fn same(&self, other: &PolyForm) -> Result<()> {
        self.chart.same(&other.chart)?;
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyForm) -> Result<PolyForm> {
        self.same(other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyForm) -> Result<PolyForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyForm {
        self.mul_poly(&Poly::constant(
            self.chart.dim(),
            Rat::from_integer((-1).into()),
        ))
    }

    pub fn mul_poly(&self, f: &Poly) -> PolyForm {
        let mut out = PolyForm::zero(&self.chart, self.degree);
        for (i, c) in &self.terms {
            out.add_term(i.clone(), c.mul(f));
        }
        out
    }

    pub fn wedge(&self, other: &PolyForm) -> Result<PolyForm> {
        self.chart.same(&other.chart)?;
        let mut out = PolyForm::zero(&self.chart, self.degree + other.degree);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut idx: Vec<usize> = i.iter().chain(j).copied().collect();
                if let Some(neg) = sort_with_sign(&mut idx) {
                    let c = a.mul(b);
                    out.add_term(idx, if neg { c.neg() } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative.
    pub fn d(&self) -> PolyForm {
        let mut out = PolyForm::zero(&self.chart, self.degree + 1);
        for (idx, c) in &self.terms {
            for j in 0..self.chart.dim() {
                let dc = c.derivative(j);
                if dc.is_zero() {
                    continue;
                }
                let mut full = vec![j];
                full.extend(idx);
                if let Some(neg) = sort_with_sign(&mut full) {
                    out.add_term(full, if neg { dc.neg() } else { dc });
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.d().is_zero()
    }

    /// `ι_X a`, contracting the first slot.
    pub fn interior(&self, x: &PolyVectorField) -> Result<PolyForm> {
        self.chart.same(x.chart())?;
        if self.degree == 0 {
            return Ok(PolyForm::zero(&self.chart, 0));
        }
        let mut out = PolyForm::zero(&self.chart, self.degree - 1);
        for (idx, c) in &self.terms {
            for (pos, &i) in idx.iter().enumerate() {
                let xi = &x.components()[i];
                if xi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let t = c.mul(xi);
                out.add_term(rest, if pos % 2 == 1 { t.neg() } else { t });
            }
        }
        Ok(out)
    }

    /// The constant form at a rational point.
    pub fn evaluate(&self, point: &[Rat]) -> Result<AltForm> {
        if point.len() != self.chart.dim() {
            return Err(PolyError::Arity {
                expected: self.chart.dim(),
                found: point.len(),
            });
        }
        Ok(AltForm::from_terms(
            self.chart.dim(),
            self.degree,
            self.terms.iter().map(|(i, c)| (i.clone(), c.eval(point))),
        )?)
    }

    /// Matrix of `v ↦ ι_v a` with polynomial entries: one row per increasing
    /// `(k−1)`-tuple, one column per coordinate.
    fn contraction_rows(&self) -> Vec<Vec<Poly>> {
        let n = self.chart.dim();
        let rows = combinations(n, self.degree - 1);
        let row_of: BTreeMap<&Vec<usize>, usize> =
            rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut m = vec![vec![Poly::zero(n); n]; rows.len()];
        for j in 0..n {
            let image = self
                .interior(&PolyVectorField::coordinate(&self.chart, j))
                .expect("same chart");
            for (idx, c) in image.terms() {
                m[row_of[idx]][j] = c.clone();
            }
        }
        m
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = self.chart.names();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let diff: Vec<String> = idx.iter().map(|&i| format!("d{}", names[i])).collect();
                let diff = diff.join("∧");
                let coeff = c.display_with(names);
                match (c.as_constant(), diff.is_empty()) {
                    (_, true) => coeff,
                    (Some(k), false) if k == Rat::from_integer(1.into()) => diff,
                    (Some(k), false) if k == Rat::from_integer((-1).into()) => format!("-{diff}"),
                    (_, false) if c.terms().len() == 1 => format!("{coeff}*{diff}"),
                    _ => format!("({coeff})*{diff}"),
                }
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl std::fmt::Display for PolyForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.display())
    }
}

/// A polynomial map between charts, given by its target components written
/// in the source variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    source: Chart,
    target: Chart,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(source: &Chart, target: &Chart, components: Vec<Poly>) -> Result<Self> {
        if components.len() != target.dim() {
            return Err(PolyError::Arity {
                expected: target.dim(),
                found: components.len(),
            });
        }
        if let Some(bad) = components.iter().find(|c| c.nvars() != source.dim()) {
            return Err(PolyError::Arity {
                expected: source.dim(),
                found: bad.nvars(),
            });
        }
        Ok(PolyMap {
            source: source.clone(),
            target: target.clone(),
            components,
        })
    }

    pub fn identity(chart: &Chart) -> Self {
        let comps = (0..chart.dim())
            .map(|i| Poly::var(chart.dim(), i))
            .collect();
        PolyMap {
            source: chart.clone(),
            target: chart.clone(),
            components: comps,
        }
    }

    pub fn source(&self) -> &Chart {
        &self.source
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// `dφ^i = Σ_j ∂_j φ^i dx^j`.
    fn differential(&self, i: usize) -> PolyForm {
        let n = self.source.dim();
        let terms = (0..n).map(|j| (vec![j], self.components[i].derivative(j)));
        PolyForm::from_terms(&self.source, 1, terms).expect("well-formed")
    }
}

/// `φ* a`: substitute the components into the coefficients and pull each
/// `dy^i` back to `dφ^i`.
pub fn pullback_map(phi: &PolyMap, a: &PolyForm) -> Result<PolyForm> {
    phi.target.same(&a.chart)?;
    let diffs: Vec<PolyForm> = (0..phi.target.dim()).map(|i| phi.differential(i)).collect();
    let mut out = PolyForm::zero(&phi.source, a.degree);
    for (idx, c) in &a.terms {
        let mut term = PolyForm::function(&phi.source, c.compose(&phi.components));
        for &i in idx {
            term = term.wedge(&diffs[i])?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Pointwise ranks of `v ↦ ι_v ω` at each point.
pub fn rank_profile(omega: &PolyForm, points: &[Vec<Rat>]) -> Result<Vec<usize>> {
    points
        .iter()
        .map(|p| Ok(omega.evaluate(p)?.rank()?))
        .collect()
}

/// Rank of `v ↦ ι_v ω` over the field of rational functions.
pub fn generic_rank(omega: &PolyForm) -> usize {
    if omega.degree == 0 || omega.is_zero() {
        return 0;
    }
    let mut m = omega.contraction_rows();
    fraction_free_echelon(&mut m).0.len()
}

/// `ker ω` at a point.
pub fn kernel_distribution(omega: &PolyForm, point: &[Rat]) -> Result<Subspace> {
    Ok(omega.evaluate(point)?.one_kernel()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Mat};

    fn chart(names: &[&str]) -> Chart {
        Chart::new(names.iter().copied()).unwrap()
    }

    fn var(c: &Chart, n: &str) -> Poly {
        c.var(n).unwrap()
    }

    fn dx(c: &Chart, n: &str) -> PolyForm {
        PolyForm::differential(c, c.index(n).unwrap())
    }

    #[test]
    fn exterior_derivative_examples() {
        let qp = chart(&["q", "p"]);
        let theta = dx(&qp, "q").mul_poly(&var(&qp, "p"));
        // d(p dq) = dp∧dq = -dq∧dp
        assert_eq!(theta.d(), dx(&qp, "p").wedge(&dx(&qp, "q")).unwrap());
        assert_eq!(theta.d().coefficient(&[0, 1]), Poly::constant(2, int(-1)));

        let xy = chart(&["x", "y"]);
        let x = var(&xy, "x");
        let y = var(&xy, "y");
        let omega_p = dx(&xy, "x")
            .wedge(&dx(&xy, "y"))
            .unwrap()
            .mul_poly(&x.mul(&x).add(&y.mul(&y)));
        assert!(omega_p.d().is_zero());
        assert!(omega_p.is_closed());
        let xdy = dx(&xy, "y").mul_poly(&x);
        assert_eq!(xdy.d(), dx(&xy, "x").wedge(&dx(&xy, "y")).unwrap());
    }

    #[test]
    fn contact_form_not_closed() {
        let c = chart(&["t", "x", "p"]);
        let eta = dx(&c, "t")
            .sub(&dx(&c, "x").mul_poly(&var(&c, "p")))
            .unwrap();
        assert!(!eta.is_closed());
        assert!(eta.d().is_closed());
    }

    #[test]
    fn pullback_of_immersion() {
        let src = chart(&["x", "p"]);
        let tgt = chart(&["x", "px", "y", "py"]);
        let (x, p) = (var(&src, "x"), var(&src, "p"));
        let half = Poly::constant(2, crate::linalg::rat(1, 2));
        let phi = PolyMap::new(
            &src,
            &tgt,
            vec![x, p.mul(&p).mul(&half), Poly::zero(2), p.clone()],
        )
        .unwrap();
        let omega = dx(&tgt, "x")
            .wedge(&dx(&tgt, "px"))
            .unwrap()
            .add(&dx(&tgt, "y").wedge(&dx(&tgt, "py")).unwrap())
            .unwrap();
        let pulled = pullback_map(&phi, &omega).unwrap();
        assert_eq!(
            pulled,
            dx(&src, "x").wedge(&dx(&src, "p")).unwrap().mul_poly(&p)
        );
        assert_eq!(
            kernel_distribution(&pulled, &[int(3), int(0)]).unwrap(),
            Subspace::full(2)
        );
        assert!(kernel_distribution(&pulled, &[int(3), int(1)])
            .unwrap()
            .is_zero());
        assert_eq!(
            pullback_map(&PolyMap::identity(&tgt), &omega).unwrap(),
            omega
        );
    }

    #[test]
    fn linear_pullback_matches_exterior() {
        let c = chart(&["a", "b", "c"]);
        let l = Mat::from_i64(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]);
        let comps = (0..3)
            .map(|i| {
                (0..3).fold(Poly::zero(3), |acc, j| {
                    acc.add(&Poly::var(3, j).scale(&l[(i, j)]))
                })
            })
            .collect();
        let phi = PolyMap::new(&c, &c, comps).unwrap();
        let a =
            AltForm::from_terms(3, 2, vec![(vec![0, 1], int(1)), (vec![1, 2], int(-2))]).unwrap();
        let pulled = pullback_map(&phi, &PolyForm::from_alt(&c, &a).unwrap()).unwrap();
        assert_eq!(
            pulled.evaluate(&[int(0), int(0), int(0)]).unwrap(),
            a.pullback(&l).unwrap()
        );
    }

    #[test]
    fn ranks() {
        let xy = chart(&["x", "y"]);
        let (x, y) = (var(&xy, "x"), var(&xy, "y"));
        let omega_p = dx(&xy, "x")
            .wedge(&dx(&xy, "y"))
            .unwrap()
            .mul_poly(&x.mul(&x).add(&y.mul(&y)));
        assert_eq!(
            rank_profile(&omega_p, &[vec![int(0), int(0)], vec![int(1), int(0)]]).unwrap(),
            vec![0, 2]
        );
        assert_eq!(generic_rank(&omega_p), 2);
        assert_eq!(
            kernel_distribution(&omega_p, &[int(0), int(0)]).unwrap(),
            Subspace::full(2)
        );

        // Counter ω² with f = λ²: 2λ dλ∧dy¹.
        let c = chart(&["lambda", "y1", "y2"]);
        let lam = var(&c, "lambda");
        let w2 = dx(&c, "lambda")
            .wedge(&dx(&c, "y1"))
            .unwrap()
            .mul_poly(&lam.scale(&int(2)));
        let pts = [vec![int(1), int(0), int(0)], vec![int(0), int(5), int(0)]];
        assert_eq!(rank_profile(&w2, &pts).unwrap(), vec![2, 0]);
        assert_eq!(generic_rank(&w2), 2);
    }

    #[test]
    fn generic_rank_of_a_degenerate_family() {
        // x dx∧dy + y dx∧dz + dy∧dz has rank 2 everywhere it is nonzero.
        let c = chart(&["x", "y", "z"]);
        let (x, y) = (var(&c, "x"), var(&c, "y"));
        let w = dx(&c, "x")
            .wedge(&dx(&c, "y"))
            .unwrap()
            .mul_poly(&x)
            .add(&dx(&c, "x").wedge(&dx(&c, "z")).unwrap().mul_poly(&y))
            .unwrap()
            .add(&dx(&c, "y").wedge(&dx(&c, "z")).unwrap())
            .unwrap();
        assert_eq!(generic_rank(&w), 2);
        let vol = w.wedge(&dx(&c, "x")).unwrap();
        assert_eq!(generic_rank(&vol), 3);
    }

    #[test]
    fn display() {
        let xy = chart(&["x", "y"]);
        let (x, y) = (var(&xy, "x"), var(&xy, "y"));
        let w = dx(&xy, "x")
            .wedge(&dx(&xy, "y"))
            .unwrap()
            .mul_poly(&x.mul(&x).add(&y.mul(&y)));
        assert_eq!(w.to_string(), "(x^2 + y^2)*dx∧dy");
        assert_eq!(
            dx(&xy, "x")
                .sub(&dx(&xy, "y").mul_poly(&x))
                .unwrap()
                .to_string(),
            "dx - x*dy"
        );
    }
}
