use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An integral domain with exact division, enough for fraction-free
/// elimination. Implemented for big integers here and for multivariate
/// polynomials in [`crate::polyforms`].
pub trait ExactDomain: Clone {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn times(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    /// `self / divisor`, where the division is known to be exact.
    fn div_exact(&self, divisor: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % divisor)));
        self / divisor
    }
}

/// Bareiss elimination to row echelon form, in place.
///
/// Pivots are chosen as the first row (at or below the current one) with a
/// nonzero entry, scanning columns left to right; zero columns are skipped.
/// Every intermediate entry is a minor of the input, so the divisions by the
/// previous pivot are exact. Returns the pivot columns and the parity of the
/// row swaps performed.
pub(crate) fn fraction_free_echelon<T: ExactDomain>(m: &mut [Vec<T>]) -> (Vec<usize>, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = T::one_value();
    let mut odd_swaps = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero_value()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            odd_swaps = !odd_swaps;
        }
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in below.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let lhs = pivot.times(&row[j]);
                let rhs = factor.times(&pivot_row[j]);
                row[j] = lhs.minus(&rhs).div_exact(&prev);
            }
            row[c] = T::zero_value();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (pivots, odd_swaps)
}
