//! Alternating multilinear forms on `ℚⁿ`.
//!
//! An [`AltForm`] of degree `k` stores one coefficient per strictly increasing
//! index tuple `i₁ < … < i_k`, meaning `Σ c_I e^{i₁}∧…∧e^{i_k}` in the dual
//! basis. Indices are 0-based in memory and 1-based in every textual form.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{
    format_rat, parse_rat, LinalgError, Mat, ParseRatError, Rat, Subspace, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("interior product of a degree-0 form")]
    DegreeZero,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("index tuple {0:?} has the wrong length")]
    BadTuple(Vec<usize>),
    #[error("r = {r} out of range for a degree-{degree} form")]
    ROutOfRange { r: usize, degree: usize },
    #[error("frame is singular")]
    SingularFrame,
    #[error("bad coefficient: {0}")]
    Coefficient(#[from] ParseRatError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Result<T> = std::result::Result<T, ExteriorError>;

/// Exact alternating `k`-form on an `n`-dimensional rational space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AltForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Rat>,
}

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or `None` if an index repeats.
pub(crate) fn sort_with_sign(indices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    // insertion sort; tuples are tiny
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// All strictly increasing `k`-tuples from `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl AltForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        AltForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-0 form with value `c`.
    pub fn scalar(dim: usize, c: Rat) -> Self {
        let mut f = AltForm::zero(dim, 0);
        if !c.is_zero() {
            f.terms.insert(Vec::new(), c);
        }
        f
    }

    /// The dual basis covector `e^i` (0-based).
    pub fn basis_covector(dim: usize, i: usize) -> Self {
        AltForm::covector(&crate::linalg::unit_vector(dim, i))
    }

    /// The one-form with the given coefficients.
    pub fn covector(coeffs: &[Rat]) -> Self {
        let mut f = AltForm::zero(coeffs.len(), 1);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                f.terms.insert(vec![i], c.clone());
            }
        }
        f
    }

    /// Builds a form from arbitrary (not necessarily sorted) index tuples,
    /// normalising signs and summing repeated monomials.
    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Rat)>,
    {
        let mut f = AltForm::zero(dim, degree);
        for (mut idx, c) in terms {
            if idx.len() != degree {
                return Err(ExteriorError::BadTuple(idx));
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= dim) {
                return Err(ExteriorError::IndexOutOfRange { index: bad, dim });
            }
            match sort_with_sign(&mut idx) {
                None => continue,
                Some(neg) => f.add_term(idx, if neg { -c } else { c }),
            }
        }
        Ok(f)
    }

    /// The degree-2 form `Σ_{i<j} A_ij e^i∧e^j` of an antisymmetric matrix.
    pub fn from_matrix(a: &Mat) -> Result<Self> {
        if !a.is_antisymmetric() {
            return Err(LinalgError::NotSymmetric.into());
        }
        let n = a.rows();
        let mut f = AltForm::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                f.add_term(vec![i, j], a[(i, j)].clone());
            }
        }
        Ok(f)
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero coefficients keyed by increasing 0-based index tuples.
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rat> {
        &self.terms
    }

    pub fn coefficient(&self, idx: &[usize]) -> Rat {
        self.terms.get(idx).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_compatible(&self, other: &AltForm) -> Result<()> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.degree != other.degree {
            return Err(ExteriorError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AltForm) -> Result<AltForm> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AltForm) -> Result<AltForm> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> AltForm {
        if s.is_zero() {
            return AltForm::zero(self.dim, self.degree);
        }
        AltForm {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// `self ∧ other`.
    pub fn wedge(&self, other: &AltForm) -> Result<AltForm> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = AltForm::zero(self.dim, self.degree + other.degree);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                if let Some(neg) = sort_with_sign(&mut idx) {
                    let c = a * b;
                    out.add_term(idx, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `ι_v self`, contracting the first slot.
    pub fn interior(&self, v: &[Rat]) -> Result<AltForm> {
        if self.degree == 0 {
            return Err(ExteriorError::DegreeZero);
        }
        if v.len() != self.dim {
            return Err(ExteriorError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut out = AltForm::zero(self.dim, self.degree - 1);
        for (idx, c) in &self.terms {
            for (pos, &i) in idx.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let val = c * &v[i];
                out.add_term(rest, if pos % 2 == 1 { -val } else { val });
            }
        }
        Ok(out)
    }

    /// `self(v₁, …, v_k)`.
    pub fn evaluate(&self, vectors: &[Vector]) -> Result<Rat> {
        if vectors.len() != self.degree {
            return Err(ExteriorError::DegreeMismatch {
                expected: self.degree,
                found: vectors.len(),
            });
        }
        let mut f = self.clone();
        for v in vectors {
            f = f.interior(v)?;
        }
        Ok(f.coefficient(&[]))
    }

    /// `Lᵀ`-pullback: `(L* a)(v₁,…) = a(L v₁, …)`. `L` has `a.dim()` rows; the
    /// result lives in `L.cols()` dimensions.
    pub fn pullback(&self, l: &Mat) -> Result<AltForm> {
        if l.rows() != self.dim {
            return Err(ExteriorError::DimensionMismatch {
                expected: self.dim,
                found: l.rows(),
            });
        }
        let m = l.cols();
        match self.degree {
            0 => Ok(AltForm::scalar(m, self.coefficient(&[]))),
            1 => {
                let mut row = vec![Rat::zero(); m];
                for (idx, c) in &self.terms {
                    for (x, y) in row.iter_mut().zip(l.row(idx[0])) {
                        *x += c * y;
                    }
                }
                Ok(AltForm::covector(&row))
            }
            2 => {
                let a = l.transpose().mul(&self.matrix()?)?.mul(l)?;
                AltForm::from_matrix(&a)
            }
            _ => self.pullback_by_minors(l),
        }
    }

    /// Pullback coefficient by coefficient: each target monomial collects
    /// `c · det L[idx, target]`.
    fn pullback_by_minors(&self, l: &Mat) -> Result<AltForm> {
        let m = l.cols();
        let mut out = AltForm::zero(m, self.degree);
        if self.degree > m {
            return Ok(out);
        }
        for target in combinations(m, self.degree) {
            let mut acc = Rat::zero();
            for (idx, c) in &self.terms {
                let minor = l.select(idx, &target).determinant()?;
                acc += c * minor;
            }
            out.add_term(target, acc);
        }
        Ok(out)
    }

    /// Antisymmetric matrix `A_ij = a(e_i, e_j)` of a degree-2 form.
    pub fn matrix(&self) -> Result<Mat> {
        if self.degree != 2 {
            return Err(ExteriorError::DegreeMismatch {
                expected: 2,
                found: self.degree,
            });
        }
        let mut a = Mat::zeros(self.dim, self.dim);
        for (idx, c) in &self.terms {
            a[(idx[0], idx[1])] = c.clone();
            a[(idx[1], idx[0])] = -c.clone();
        }
        Ok(a)
    }

    /// Coefficient vector of a one-form.
    pub fn covector_coefficients(&self) -> Result<Vector> {
        if self.degree != 1 {
            return Err(ExteriorError::DegreeMismatch {
                expected: 1,
                found: self.degree,
            });
        }
        Ok((0..self.dim).map(|i| self.coefficient(&[i])).collect())
    }

    /// Matrix of `v ↦ ι_v a`: one column per basis vector, one row per
    /// `(k-1)`-tuple.
    fn contraction_matrix(&self) -> Result<Mat> {
        let rows = combinations(self.dim, self.degree - 1);
        let row_of: BTreeMap<&Vec<usize>, usize> =
            rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut m = Mat::zeros(rows.len(), self.dim);
        for j in 0..self.dim {
            let image = self.interior(&crate::linalg::unit_vector(self.dim, j))?;
            for (idx, c) in image.terms() {
                m[(row_of[idx], j)] = c.clone();
            }
        }
        Ok(m)
    }

    /// Rank of the contraction map `v ↦ ι_v a`. For a two-form this is the
    /// rank of its matrix.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.dim - self.one_kernel()?.dim())
    }

    /// `{v : ι_v a = 0}`.
    pub fn one_kernel(&self) -> Result<Subspace> {
        if self.degree == 0 {
            return Err(ExteriorError::DegreeZero);
        }
        if self.is_zero() {
            return Ok(Subspace::full(self.dim));
        }
        Ok(self.contraction_matrix()?.kernel())
    }

    /// Restriction to a subspace, written in the subspace's canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<AltForm> {
        if s.ambient_dim() != self.dim {
            return Err(ExteriorError::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        self.pullback(&s.as_columns())
    }

    /// Whether the form vanishes on all tuples from `s`.
    pub fn vanishes_on(&self, s: &Subspace) -> Result<bool> {
        Ok(self.restrict(s)?.is_zero())
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(idx, c)| TermRecord {
                indices: idx.iter().map(|i| i + 1).collect(),
                coeff: format_rat(c),
            })
            .collect()
    }

    /// Inverse of [`AltForm::to_records`]. Records must carry strictly
    /// increasing 1-based indices and may not repeat a tuple.
    pub fn from_records(dim: usize, degree: usize, records: &[TermRecord]) -> Result<AltForm> {
        let mut f = AltForm::zero(dim, degree);
        for rec in records {
            if rec.indices.len() != degree || rec.indices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(ExteriorError::BadTuple(rec.indices.clone()));
            }
            if let Some(&bad) = rec.indices.iter().find(|&&i| i == 0 || i > dim) {
                return Err(ExteriorError::IndexOutOfRange { index: bad, dim });
            }
            let idx: Vec<usize> = rec.indices.iter().map(|i| i - 1).collect();
            if f.terms.contains_key(&idx) {
                return Err(ExteriorError::BadTuple(rec.indices.clone()));
            }
            let c = parse_rat(&rec.coeff)?;
            f.add_term(idx, c);
        }
        Ok(f)
    }
}

/// `{v : ι(v∧w₁∧…∧w_r) a = 0 for all w_i ∈ W}`.
///
/// Only increasing `r`-tuples of the basis of `W` are used, which suffices
/// by multilinearity and antisymmetry.
pub fn r_orthogonal(w: &Subspace, a: &AltForm, r: usize) -> Result<Subspace> {
    if r == 0 || r + 1 > a.degree() {
        return Err(ExteriorError::ROutOfRange {
            r,
            degree: a.degree(),
        });
    }
    if w.ambient_dim() != a.dim() {
        return Err(ExteriorError::DimensionMismatch {
            expected: a.dim(),
            found: w.ambient_dim(),
        });
    }
    let basis = w.basis();
    let mut rows: Vec<Vector> = Vec::new();
    for tuple in combinations(basis.len(), r) {
        let mut b = a.clone();
        for &t in &tuple {
            b = b.interior(&basis[t])?;
        }
        if !b.is_zero() {
            rows.extend(b.contraction_matrix()?.row_vectors());
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(a.dim()));
    }
    Ok(Mat::from_rows(a.dim(), rows)?.kernel())
}

/// One coefficient of a serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub indices: Vec<usize>,
    pub coeff: String,
}

impl fmt::Display for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            let body: Vec<String> = idx.iter().map(|i| format!("e{}", i + 1)).collect();
            let body = body.join("∧");
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (mag.is_one(), body.is_empty()) {
                (true, false) => write!(f, "{body}")?,
                (_, true) => write!(f, "{}", format_rat(&mag))?,
                (false, false) => write!(f, "{} {body}", format_rat(&mag))?,
            }
        }
        Ok(())
    }
}

/// A change of basis. Columns are the new basis vectors written in the old
/// basis; pulling a form back through the frame expresses it in the new
/// dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    change: Mat,
}

impl Frame {
    pub fn new(change: Mat) -> Result<Self> {
        if !change.is_square() {
            return Err(LinalgError::NotSquare {
                rows: change.rows(),
                cols: change.cols(),
            }
            .into());
        }
        if change.determinant()?.is_zero() {
            return Err(ExteriorError::SingularFrame);
        }
        Ok(Frame { change })
    }

    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let n = columns.len();
        Frame::new(Mat::from_columns(n, columns)?)
    }

    pub fn identity(n: usize) -> Self {
        Frame {
            change: Mat::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.change.rows()
    }

    pub fn matrix(&self) -> &Mat {
        &self.change
    }

    pub fn column(&self, j: usize) -> Vector {
        self.change.column(j)
    }

    pub fn is_identity(&self) -> bool {
        self.change == Mat::identity(self.dim())
    }

    /// The form expressed in the frame's dual basis.
    pub fn pull(&self, a: &AltForm) -> Result<AltForm> {
        a.pullback(&self.change)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat, unit_vector};

    fn e(n: usize, i: usize) -> AltForm {
        AltForm::basis_covector(n, i)
    }

    fn w(a: &AltForm, b: &AltForm) -> AltForm {
        a.wedge(b).unwrap()
    }

    #[test]
    fn wedge_examples() {
        let area = w(&e(2, 0), &e(2, 1));
        assert_eq!(area.coefficient(&[0, 1]), int(1));
        assert_eq!(area.terms().len(), 1);
        assert!(w(&e(2, 0), &e(2, 0)).is_zero());
        let sum = e(3, 0).add(&e(3, 1)).unwrap();
        let f = w(&sum, &e(3, 2));
        assert_eq!(f.coefficient(&[0, 2]), int(1));
        assert_eq!(f.coefficient(&[1, 2]), int(1));
        assert_eq!(f.terms().len(), 2);
        assert!(e(2, 0).wedge(&e(3, 0)).is_err());
    }

    #[test]
    fn wedge_past_dimension_is_zero() {
        let vol = w(&e(2, 0), &e(2, 1));
        let f = vol.wedge(&e(2, 0)).unwrap();
        assert_eq!(f.degree(), 3);
        assert!(f.is_zero());
    }

    #[test]
    fn interior_examples() {
        let e12 = w(&e(2, 0), &e(2, 1));
        assert_eq!(e12.interior(&unit_vector(2, 0)).unwrap(), e(2, 1));
        let e12_3 = w(&e(3, 0), &e(3, 1));
        assert!(e12_3.interior(&unit_vector(3, 2)).unwrap().is_zero());
        let vol = w(&w(&e(3, 0), &e(3, 1)), &e(3, 2));
        assert_eq!(
            vol.interior(&unit_vector(3, 0)).unwrap(),
            w(&e(3, 1), &e(3, 2))
        );
        assert_eq!(
            AltForm::scalar(2, int(1)).interior(&unit_vector(2, 0)),
            Err(ExteriorError::DegreeZero)
        );
    }

    #[test]
    fn low_degree_pullback_matches_minors() {
        let l = Mat::from_i64(&[&[1, 2, 0], &[0, -1, 3], &[2, 0, 1], &[1, 1, 1]]);
        let one = AltForm::covector(&[int(1), int(-2), rat(1, 2), int(3)]);
        let two = w(&e(4, 0), &e(4, 2))
            .add(&w(&e(4, 1), &e(4, 3)).scale(&int(-3)))
            .unwrap();
        let zero = AltForm::scalar(4, int(5));
        for f in [zero, one, two] {
            assert_eq!(f.pullback(&l).unwrap(), f.pullback_by_minors(&l).unwrap());
        }
    }

    #[test]
    fn pullback_examples() {
        let e12 = w(&e(2, 0), &e(2, 1));
        assert_eq!(e12.pullback(&Mat::identity(2)).unwrap(), e12);
        let diag = Mat::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(e12.pullback(&diag).unwrap(), e12.scale(&int(6)));
        let swap = Mat::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(e12.pullback(&swap).unwrap(), e12.scale(&int(-1)));
    }

    #[test]
    fn one_kernel_examples() {
        let e12 = w(&e(3, 0), &e(3, 1));
        assert_eq!(
            e12.one_kernel().unwrap(),
            Subspace::span(3, vec![unit_vector(3, 2)]).unwrap()
        );
        let vol = w(&e12, &e(3, 2));
        assert!(vol.one_kernel().unwrap().is_zero());
        assert!(AltForm::zero(3, 2).one_kernel().unwrap().is_full());
        assert_eq!(
            AltForm::scalar(3, int(1)).one_kernel(),
            Err(ExteriorError::DegreeZero)
        );
    }

    #[test]
    fn r_orthogonal_examples() {
        let vol = w(&w(&e(3, 0), &e(3, 1)), &e(3, 2));
        let line = Subspace::span(3, vec![unit_vector(3, 0)]).unwrap();
        assert_eq!(r_orthogonal(&line, &vol, 1).unwrap(), line);
        assert!(r_orthogonal(&Subspace::zero(3), &vol, 1).unwrap().is_full());
        let e12 = w(&e(2, 0), &e(2, 1));
        let l2 = Subspace::span(2, vec![unit_vector(2, 0)]).unwrap();
        assert_eq!(r_orthogonal(&l2, &e12, 1).unwrap(), l2);
        assert!(r_orthogonal(&l2, &e12, 2).is_err());
        assert!(r_orthogonal(&l2, &e12, 0).is_err());
    }

    #[test]
    fn matrix_view_round_trips() {
        let a = Mat::from_i64(&[&[0, 1, -2], &[-1, 0, 3], &[2, -3, 0]]);
        let f = AltForm::from_matrix(&a).unwrap();
        assert_eq!(f.matrix().unwrap(), a);
        assert_eq!(f.coefficient(&[0, 2]), int(-2));
    }

    #[test]
    fn from_terms_normalises_sign() {
        let f =
            AltForm::from_terms(3, 2, vec![(vec![2, 0], int(1)), (vec![1, 1], int(5))]).unwrap();
        assert_eq!(f.coefficient(&[0, 2]), int(-1));
        assert_eq!(f.terms().len(), 1);
    }

    #[test]
    fn records_reject_duplicates_and_bad_order() {
        let rec = |i: Vec<usize>, c: &str| TermRecord {
            indices: i,
            coeff: c.into(),
        };
        assert!(
            AltForm::from_records(3, 2, &[rec(vec![1, 2], "1"), rec(vec![1, 2], "2")]).is_err()
        );
        assert!(AltForm::from_records(3, 2, &[rec(vec![2, 1], "1")]).is_err());
        assert!(AltForm::from_records(3, 2, &[rec(vec![1, 4], "1")]).is_err());
        assert!(matches!(
            AltForm::from_records(3, 2, &[rec(vec![1, 2], "1/0")]),
            Err(ExteriorError::Coefficient(ParseRatError::ZeroDenominator(
                _
            )))
        ));
        let f = AltForm::from_records(3, 2, &[rec(vec![1, 3], "3/2")]).unwrap();
        assert_eq!(f.to_records(), vec![rec(vec![1, 3], "3/2")]);
    }

    #[test]
    fn display_is_one_based() {
        let f = w(&e(3, 0), &e(3, 1))
            .sub(&w(&e(3, 1), &e(3, 2)).scale(&int(2)))
            .unwrap();
        assert_eq!(f.to_string(), "e1∧e2 - 2 e2∧e3");
    }
}
