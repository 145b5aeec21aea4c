//! Multisymplectic forms, r-orthogonals and standard n-plectic checks.

use super::{malformed, Params, Result, Verdict, VerdictBuilder, Witness};
use crate::exterior::{r_orthogonal, AltForm};
use crate::kind::StructureKind;
use crate::linalg::{intersect, unit_vector, Rat, Subspace};

const MULTISYMPLECTIC: &str = "multisymplectic form definition";
const STANDARD: &str = "standard n-plectic structure definition";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisymplecticVerdict {
    /// Accepted iff the form is one-nondegenerate.
    pub verdict: Verdict,
    pub degree: usize,
    pub kernel: Subspace,
}

pub fn check_multisymplectic(omega: &AltForm) -> Result<MultisymplecticVerdict> {
    if omega.degree() < 2 {
        return Err(malformed(format!(
            "a multiform needs degree ≥ 2, found {}",
            omega.degree()
        )));
    }
    let kernel = omega.one_kernel()?;
    let mut b = VerdictBuilder::new(StructureKind::Multisymplectic, MULTISYMPLECTIC);
    b.check(
        "",
        "ι_v Ω = 0 implies v = 0",
        kernel.is_zero(),
        kernel.basis().first().cloned().map(Witness::Vector),
    );
    let params = Params {
        d: Some(kernel.dim()),
        ..Params::default()
    };
    Ok(MultisymplecticVerdict {
        verdict: b.finish(params),
        degree: omega.degree(),
        kernel,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsotropyType {
    Isotropic,
    Coisotropic,
    Lagrangian,
    None,
}

pub fn isotropy_type(w: &Subspace, omega: &AltForm, r: usize) -> Result<IsotropyType> {
    let perp = r_orthogonal(w, omega, r)?;
    Ok(if &perp == w {
        IsotropyType::Lagrangian
    } else if perp.contains_subspace(w) {
        IsotropyType::Isotropic
    } else if w.contains_subspace(&perp) {
        IsotropyType::Coisotropic
    } else {
        IsotropyType::None
    })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Why `w` fails to make `omega` standard, if it does.
fn standard_problem(omega: &AltForm, w: &Subspace) -> Result<Option<String>> {
    let n = omega.degree() - 1;
    if !r_orthogonal(w, omega, 1)?.contains_subspace(w) {
        return Ok(Some("ι_{u∧v}Ω ≠ 0 for some u, v ∈ W".into()));
    }
    let quotient = omega.dim() - w.dim();
    let target = binomial(quotient, n);
    if w.dim() != target {
        return Ok(Some(format!(
            "dim W = {}, dim Λ^{n}(E/W)* = {target}",
            w.dim()
        )));
    }
    if !intersect(w, &omega.one_kernel()?)?.is_zero() {
        return Ok(Some("ω^♯ is not injective on W".into()));
    }
    Ok(None)
}

/// Whether `w` is 1-isotropic and `w ↦ ι_w Ω` is an isomorphism onto
/// `Λⁿ(E/W)*`.
pub fn check_standard_w(omega: &AltForm, w: &Subspace) -> Result<bool> {
    if omega.degree() < 3 {
        return Err(malformed("standard n-plectic checks need degree ≥ 3"));
    }
    Ok(w.dim() > 0 && standard_problem(omega, w)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardVerdict {
    pub verdict: Verdict,
    /// The subspace that made the form standard, if one was found.
    pub w: Option<Subspace>,
}

/// `X^{⊥,1}`.
fn perp(omega: &AltForm, x: &Subspace) -> Result<Subspace> {
    Ok(r_orthogonal(x, omega, 1)?)
}

/// `X^{⊥⊥}`, the smallest closed subspace containing `X`. For `X ⊂ W` with
/// `W = W^{⊥,1}` it stays inside `W`.
fn closure(omega: &AltForm, x: &Subspace) -> Result<Subspace> {
    perp(omega, &perp(omega, x)?)
}

fn is_isotropic(omega: &AltForm, x: &Subspace) -> Result<bool> {
    Ok(perp(omega, x)?.contains_subspace(x))
}

/// Grows an isotropic subspace from `seeds[start]`, adding the later seeds
/// (cyclically) whenever the closure stays isotropic.
fn grow(omega: &AltForm, seeds: &[Vec<Rat>], start: usize) -> Result<Option<Subspace>> {
    let dim = omega.dim();
    let mut x = closure(omega, &Subspace::span(dim, vec![seeds[start].clone()])?)?;
    if !is_isotropic(omega, &x)? {
        return Ok(None);
    }
    for t in (1..seeds.len()).map(|i| &seeds[(start + i) % seeds.len()]) {
        if x.contains(t) || !perp(omega, &x)?.contains(t) {
            continue;
        }
        let mut vectors = x.basis().to_vec();
        vectors.push(t.clone());
        let y = closure(omega, &Subspace::span(dim, vectors)?)?;
        if is_isotropic(omega, &y)? {
            x = y;
        }
    }
    Ok(Some(x))
}

/// Searches for `W` by growing isotropic closures from seeds: basis vectors
/// and sums of pairs of them. The search is not exhaustive.
pub fn check_standard_nplectic(omega: &AltForm) -> Result<StandardVerdict> {
    if omega.degree() < 3 {
        return Err(malformed(format!(
            "standard n-plectic checks need degree ≥ 3, found {}",
            omega.degree()
        )));
    }
    let dim = omega.dim();
    let mut b = VerdictBuilder::new(StructureKind::Multisymplectic, STANDARD);
    let kernel = omega.one_kernel()?;
    b.check(
        "",
        "Ω one-nondegenerate",
        kernel.is_zero(),
        kernel.basis().first().cloned().map(Witness::Vector),
    );
    let mut seeds: Vec<Vec<Rat>> = (0..dim).map(|i| unit_vector(dim, i)).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut s = unit_vector(dim, i);
            s[j] = Rat::from_integer(1.into());
            seeds.push(s);
        }
    }
    let mut tried: Vec<Subspace> = Vec::new();
    let mut found = None;
    if kernel.is_zero() {
        for start in 0..seeds.len() {
            let Some(w) = grow(omega, &seeds, start)? else {
                continue;
            };
            if w.is_zero() || tried.contains(&w) {
                continue;
            }
            if standard_problem(omega, &w)?.is_none() {
                found = Some(w);
                break;
            }
            tried.push(w);
        }
    }
    b.check(
        "",
        "W with ι_{u∧v}Ω = 0 on W and ω^♯: W ≅ Λⁿ(E/W)*",
        found.is_some(),
        Some(Witness::Note(format!(
            "no candidate among {} isotropic subspaces from the seed search",
            tried.len()
        ))),
    );
    let params = Params {
        n: Some(omega.degree() - 1),
        ..Params::default()
    };
    Ok(StandardVerdict {
        verdict: b.finish(params),
        w: found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> AltForm {
        AltForm::basis_covector(n, i)
    }

    fn wedge(forms: &[AltForm]) -> AltForm {
        forms[1..]
            .iter()
            .fold(forms[0].clone(), |acc, f| acc.wedge(f).unwrap())
    }

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::span(n, idx.iter().map(|&i| unit_vector(n, i)).collect()).unwrap()
    }

    #[test]
    fn multisymplectic_examples() {
        let vol = wedge(&[e(3, 0), e(3, 1), e(3, 2)]);
        let m = check_multisymplectic(&vol).unwrap();
        assert!(m.verdict.accepted);
        assert_eq!(m.degree, 3);

        // dp₁₂∧dx¹∧dx² on (x¹, x², p₁₂, pad, pad, pad).
        let padded = wedge(&[e(6, 2), e(6, 0), e(6, 1)]);
        let m = check_multisymplectic(&padded).unwrap();
        assert!(!m.verdict.accepted);
        assert_eq!(m.kernel, span(6, &[3, 4, 5]));

        let sym = wedge(&[e(2, 0), e(2, 1)]);
        let m = check_multisymplectic(&sym).unwrap();
        assert!(m.verdict.accepted);
        assert_eq!(m.degree, 2);

        assert!(check_multisymplectic(&e(2, 0)).is_err());
    }

    #[test]
    fn isotropy_examples() {
        let plane = wedge(&[e(2, 0), e(2, 1)]);
        assert_eq!(
            isotropy_type(&span(2, &[0]), &plane, 1).unwrap(),
            IsotropyType::Lagrangian
        );
        let four = wedge(&[e(4, 0), e(4, 1)])
            .add(&wedge(&[e(4, 2), e(4, 3)]))
            .unwrap();
        assert_eq!(
            isotropy_type(&span(4, &[0]), &four, 1).unwrap(),
            IsotropyType::Isotropic
        );
        assert_eq!(
            isotropy_type(&Subspace::full(4), &four, 1).unwrap(),
            IsotropyType::Coisotropic
        );
        assert!(isotropy_type(&span(4, &[0]), &four, 2).is_err());
    }

    #[test]
    fn standard_examples() {
        // (x¹, x², p): Ω = dp∧dx¹∧dx².
        let omega = wedge(&[e(3, 2), e(3, 0), e(3, 1)]);
        assert!(check_standard_w(&omega, &span(3, &[2])).unwrap());
        let s = check_standard_nplectic(&omega).unwrap();
        assert!(s.verdict.accepted);
        assert_eq!(s.w.unwrap().dim(), 1);

        let degenerate = wedge(&[e(4, 0), e(4, 1), e(4, 2)]);
        assert!(
            !check_standard_nplectic(&degenerate)
                .unwrap()
                .verdict
                .accepted
        );
        assert!(check_standard_nplectic(&wedge(&[e(2, 0), e(2, 1)])).is_err());
    }

    #[test]
    fn standard_bundle_of_two_forms() {
        // Λ²T*ℚ³: (x¹, x², x³, p₁₂, p₁₃, p₂₃), Ω = Σ dp_I ∧ dx^I.
        let n = 6;
        let pairs = [(3, 0, 1), (4, 0, 2), (5, 1, 2)];
        let mut omega = AltForm::zero(n, 3);
        for (p, a, b) in pairs {
            omega = omega.add(&wedge(&[e(n, p), e(n, a), e(n, b)])).unwrap();
        }
        let s = check_standard_nplectic(&omega).unwrap();
        assert!(s.verdict.accepted);
        assert_eq!(s.w.unwrap(), span(n, &[3, 4, 5]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
    }
}
