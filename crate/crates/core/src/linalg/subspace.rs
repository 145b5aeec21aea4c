use num_traits::Zero;

use super::{LinalgError, Mat, Rat, Vector};

/// A linear subspace of `ℚⁿ`, the value of a distribution at one point.
///
/// The basis is kept in reduced row echelon form, so two subspaces are
/// equal as sets exactly when they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Span of the given vectors; dependent or zero vectors are fine.
    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Result<Self, LinalgError> {
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = Mat::from_rows(ambient, vectors)?;
        let (r, _) = m.rref();
        Ok(Subspace {
            ambient,
            basis: r.row_vectors(),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient).row_vectors(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// The basis vectors as rows of a `dim × ambient` matrix.
    pub fn as_rows(&self) -> Mat {
        Mat::from_rows(self.ambient, self.basis.clone()).expect("basis rows match ambient dim")
    }

    /// The basis vectors as columns of an `ambient × dim` matrix.
    pub fn as_columns(&self) -> Mat {
        Mat::from_columns(self.ambient, &self.basis).expect("basis columns match ambient dim")
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Mat::from_rows(self.ambient, rows)
            .map(|m| m.rank() == self.dim())
            .unwrap_or(false)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. The basis is reduced, so the coordinates are simply the
    /// entries of `v` at the pivot positions.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vector> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vector = self
            .basis
            .iter()
            .map(|b| {
                let p = b
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("basis vectors are nonzero");
                v[p].clone()
            })
            .collect();
        let mut rebuilt = super::zero_vector(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            super::add_scaled(&mut rebuilt, c, b);
        }
        (rebuilt == v).then_some(coords)
    }

    /// Image of the subspace under a linear map `m` (`m.cols() == ambient`).
    pub fn map(&self, m: &Mat) -> Result<Subspace, LinalgError> {
        let images = self
            .basis
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::span(m.rows(), images)
    }
}

/// Result of [`subspace_sum`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceSum {
    pub sum: Subspace,
    pub is_direct: bool,
}

/// `a + b`, flagging whether the sum is direct.
pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<SubspaceSum, LinalgError> {
    a.check_same_ambient(b)?;
    let mut vectors = a.basis.clone();
    vectors.extend(b.basis.iter().cloned());
    let sum = Subspace::span(a.ambient, vectors)?;
    let is_direct = sum.dim() == a.dim() + b.dim();
    Ok(SubspaceSum { sum, is_direct })
}

/// Covectors (in dual coordinates) vanishing on `s`.
pub fn annihilator(s: &Subspace) -> Subspace {
    if s.is_zero() {
        return Subspace::full(s.ambient);
    }
    s.as_rows().kernel()
}

/// `a ∩ b`, computed as the common kernel of both annihilators.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace, LinalgError> {
    a.check_same_ambient(b)?;
    let mut rows = annihilator(a).basis;
    rows.extend(annihilator(b).basis);
    if rows.is_empty() {
        return Ok(Subspace::full(a.ambient));
    }
    Ok(Mat::from_rows(a.ambient, rows)?.kernel())
}

/// Intersection of any number of subspaces of `ℚⁿ`; the empty intersection
/// is the whole space.
pub fn intersect_all<'a, I>(ambient: usize, spaces: I) -> Result<Subspace, LinalgError>
where
    I: IntoIterator<Item = &'a Subspace>,
{
    let mut acc = Subspace::full(ambient);
    for s in spaces {
        acc = intersect(&acc, s)?;
    }
    Ok(acc)
}

/// `{v : g(v, s) = 0}` for a symmetric positive definite `g`.
pub fn orthogonal_complement(s: &Subspace, g: &Mat) -> Result<Subspace, LinalgError> {
    if g.rows() != s.ambient {
        return Err(LinalgError::DimensionMismatch {
            expected: s.ambient,
            found: g.rows(),
        });
    }
    g.check_spd()?;
    if s.is_zero() {
        return Ok(Subspace::full(s.ambient));
    }
    Ok(s.as_rows().mul(g)?.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, unit_vector};

    fn e(n: usize, i: usize) -> Vector {
        unit_vector(n, i)
    }

    fn span(n: usize, vs: Vec<Vector>) -> Subspace {
        Subspace::span(n, vs).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let a = span(3, vec![e(3, 0), e(3, 1)]);
        let b = span(3, vec![e(3, 1), e(3, 2)]);
        assert_eq!(intersect(&a, &b).unwrap(), span(3, vec![e(3, 1)]));
        assert_eq!(intersect(&a, &a).unwrap(), a);
        let c = span(3, vec![e(3, 0)]);
        let d = span(3, vec![e(3, 1)]);
        assert!(intersect(&c, &d).unwrap().is_zero());
        assert!(intersect(&c, &Subspace::zero(2)).is_err());
    }

    #[test]
    fn sum_examples() {
        let s = subspace_sum(&span(2, vec![e(2, 0)]), &span(2, vec![e(2, 1)])).unwrap();
        assert!(s.is_direct && s.sum.is_full());
        let s = subspace_sum(
            &span(2, vec![e(2, 0)]),
            &span(2, vec![vec![int(1), int(1)]]),
        )
        .unwrap();
        assert!(s.is_direct && s.sum.is_full());
        let ab = span(3, vec![e(3, 0), e(3, 1)]);
        let s = subspace_sum(&ab, &span(3, vec![e(3, 1)])).unwrap();
        assert!(!s.is_direct);
        assert_eq!(s.sum, ab);
    }

    #[test]
    fn orthogonal_complement_examples() {
        let g3 = Mat::identity(3);
        let c = orthogonal_complement(&span(3, vec![e(3, 0)]), &g3).unwrap();
        assert_eq!(c, span(3, vec![e(3, 1), e(3, 2)]));
        let c =
            orthogonal_complement(&span(2, vec![vec![int(1), int(1)]]), &Mat::identity(2)).unwrap();
        assert_eq!(c, span(2, vec![vec![int(1), int(-1)]]));
        assert!(orthogonal_complement(&Subspace::full(3), &g3)
            .unwrap()
            .is_zero());
        let bad = Mat::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(orthogonal_complement(&Subspace::zero(2), &bad).is_err());
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(annihilator(&span(2, vec![e(2, 0)])), span(2, vec![e(2, 1)]));
        assert!(annihilator(&Subspace::zero(3)).is_full());
        let a = annihilator(&span(2, vec![vec![int(1), int(1)]]));
        assert_eq!(a, span(2, vec![vec![int(1), int(-1)]]));
    }

    #[test]
    fn coordinates_use_pivots() {
        let s = span(
            3,
            vec![vec![int(1), int(0), int(2)], vec![int(0), int(1), int(-1)]],
        );
        let v = vec![int(3), int(-2), int(8)];
        assert_eq!(s.coordinates(&v), Some(vec![int(3), int(-2)]));
        assert_eq!(s.coordinates(&e(3, 2)), None);
    }

    #[test]
    fn canonical_basis_makes_span_equality_literal() {
        let a = span(
            3,
            vec![vec![int(2), int(4), int(0)], vec![int(0), int(0), int(5)]],
        );
        let b = span(
            3,
            vec![vec![int(1), int(2), int(5)], vec![int(1), int(2), int(-5)]],
        );
        assert_eq!(a, b);
    }
}
