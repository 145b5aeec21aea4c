use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::linalg::{format_rat, ExactDomain, Rat};

/// A monomial's exponents, one per chart variable.
pub type Exponents = Vec<u32>;

/// Multivariate polynomial with rational coefficients in `nvars` variables.
///
/// Variable names live on the [`Chart`](super::Chart); a `Poly` only knows
/// how many variables there are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    /// The `i`-th coordinate function.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Rat::one());
        p
    }

    pub fn monomial(exponents: Exponents, c: Rat) -> Self {
        let mut p = Poly::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
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

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    fn check(&self, other: &Poly) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different variable counts"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rat::from_integer(e[i].into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "point dimension");
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `subs[i]` for the `i`-th variable. The result lives in the
    /// variables of the substitutes.
    pub fn compose(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars, "one substitute per variable");
        let target = subs.first().map_or(0, Poly::nvars);
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (s, &k) in subs.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&s.pow(k));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Leading term in lexicographic order of exponents.
    fn leading(&self) -> Option<(&Exponents, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn checked_div(&self, divisor: &Poly) -> Option<Poly> {
        self.check(divisor);
        let (lead_e, lead_c) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quotient = Poly::zero(self.nvars);
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponents = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let t = Poly::monomial(qe, c / lead_c);
            rem = rem.sub(&t.mul(divisor));
            quotient = quotient.add(&t);
        }
        Some(quotient)
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{p}", names[i])
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_rat(&mag));
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{}*", format_rat(&mag));
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl ExactDomain for Poly {
    fn zero_value() -> Self {
        // Only used as a placeholder by elimination; arity fixed on first use.
        Poly::zero(0)
    }
    fn one_value() -> Self {
        Poly::zero(0).with_constant_one()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, other: &Self) -> Self {
        let (a, b) = unify(self, other);
        a.mul(&b)
    }
    fn minus(&self, other: &Self) -> Self {
        let (a, b) = unify(self, other);
        a.sub(&b)
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        let (a, b) = unify(self, divisor);
        a.checked_div(&b)
            .expect("fraction-free elimination divides exactly")
    }
}

impl Poly {
    fn with_constant_one(mut self) -> Self {
        self.terms.insert(vec![0; self.nvars], Rat::one());
        self
    }

    /// Pads a variable-free constant to `nvars` variables.
    fn widen(&self, nvars: usize) -> Poly {
        if self.nvars == nvars {
            return self.clone();
        }
        assert_eq!(self.nvars, 0, "only constants can be widened");
        Poly::constant(
            nvars,
            self.terms
                .get(&Vec::new())
                .cloned()
                .unwrap_or_else(Rat::zero),
        )
    }
}

/// The elimination routine seeds its pivot with a zero-variable one; bring
/// both sides to a common arity.
fn unify(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let n = a.nvars.max(b.nvars);
    (a.widen(n), b.widen(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn x() -> Poly {
        Poly::var(2, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 1)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = x().mul(&x()).add(&y().mul(&y()));
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(p.display_with(&names), "x^2 + y^2");
        assert_eq!(p.derivative(0), x().scale(&int(2)));
        assert_eq!(p.eval(&[int(1), int(2)]), int(5));
        assert_eq!(p.sub(&p), Poly::zero(2));
        assert_eq!(Poly::constant(2, rat(-1, 2)).display_with(&names), "-1/2");
    }

    #[test]
    fn exact_division() {
        let a = x().add(&y());
        let b = x().sub(&y());
        let prod = a.mul(&b);
        assert_eq!(prod.checked_div(&a), Some(b.clone()));
        assert_eq!(prod.checked_div(&b), Some(a));
        assert_eq!(x().checked_div(&y()), None);
    }

    #[test]
    fn composition() {
        // (x, y) ↦ (y², x + 1) substituted into x·y.
        let p = x().mul(&y());
        let q = p.compose(&[y().mul(&y()), x().add(&Poly::one(2))]);
        assert_eq!(q, y().mul(&y()).mul(&x().add(&Poly::one(2))));
    }
}
