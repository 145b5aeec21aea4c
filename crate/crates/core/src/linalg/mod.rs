//! Exact rational linear algebra.
//!
//! Everything downstream (ranks of two-forms, kernels, polarisations, Reeb
//! systems) reduces to the routines here. There is no floating point in this
//! crate: scalars are arbitrary-precision rationals and elimination is done
//! fraction-free over the integers, in the style of Bareiss.
//!
//! Vectors are plain `Vec<Rat>` in the coordinates of the ambient space, and
//! covectors are represented in the dual basis, so both live in `ℚⁿ`.

mod bareiss;
mod mat;
mod subspace;

pub(crate) use bareiss::fraction_free_echelon;
pub use bareiss::ExactDomain;
pub use mat::Mat;
pub use subspace::{
    annihilator, intersect, intersect_all, orthogonal_complement, subspace_sum, Subspace,
    SubspaceSum,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

/// A column vector in coordinates.
pub type Vector = Vec<Rat>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("metric is not symmetric")]
    NotSymmetric,
    #[error("metric is not positive definite (leading minor {index} is {minor})")]
    NotPositiveDefinite { index: usize, minor: Rat },
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatError {
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("invalid rational {0:?}")]
    Invalid(String),
}

/// Parses `"p"`, `"-p"` or `"p/q"` into a reduced rational.
pub fn parse_rat(text: &str) -> Result<Rat, ParseRatError> {
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| ParseRatError::Invalid(text.to_string()))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| ParseRatError::Invalid(text.to_string()))?;
    if den.is_zero() {
        return Err(ParseRatError::ZeroDenominator(text.to_string()));
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rat::zero(); n]
}

/// The `i`-th standard basis vector of `ℚⁿ` (0-based).
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rat::one();
    v
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vector(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rat], scale: &Rat, v: &[Rat]) {
    if scale.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += scale * x;
    }
}

pub fn scale_vector(scale: &Rat, v: &[Rat]) -> Vector {
    v.iter().map(|x| scale * x).collect()
}

/// A random invertible matrix with integer entries in `[-bound, bound]`.
pub fn random_invertible<R: rand::Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Mat {
    loop {
        let rows: Vec<Vector> = (0..n)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let m = Mat::from_rows(n, rows).expect("square");
        if m.rank() == n {
            return m;
        }
    }
}

/// Multiplies a rational row by the lcm of its denominators, giving an
/// integer row with the same span.
pub(crate) fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}
