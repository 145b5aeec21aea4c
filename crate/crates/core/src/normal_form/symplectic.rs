use num_traits::{One, Zero};

use super::{
    common_dim, common_kernel, finish, hypothesis, CanonicalTemplate, DarbouxReport,
    NormalFormError, Result, Splitting,
};
use crate::exterior::AltForm;
use crate::linalg::{
    intersect, scale_vector, subspace_sum, unit_vector, Mat, Rat, Subspace, Vector,
};

/// Skew Gram-Schmidt: splits `vectors` into pairs `(u, v)` with
/// `ω(u, v) = 1`, mutually ω-orthogonal, plus leftover vectors that pair
/// to zero with everything in the span.
pub(crate) fn skew_gram_schmidt(
    a: &Mat,
    mut pool: Vec<Vector>,
) -> (Vec<(Vector, Vector)>, Vec<Vector>) {
    let mut pairs = Vec::new();
    loop {
        let found = (0..pool.len()).find_map(|i| {
            (0..pool.len())
                .find(|&j| !a.bilinear(&pool[i], &pool[j]).is_zero())
                .map(|j| (i, j))
        });
        let Some((i, j)) = found else {
            return (pairs, pool);
        };
        let u = pool[i].clone();
        let c = a.bilinear(&u, &pool[j]);
        let v = scale_vector(&(Rat::one() / c), &pool[j]);
        let rest: Vec<Vector> = pool
            .into_iter()
            .enumerate()
            .filter(|&(t, _)| t != i && t != j)
            .map(|(_, x)| {
                let xv = a.bilinear(&x, &v);
                let xu = a.bilinear(&x, &u);
                x.iter()
                    .zip(&u)
                    .zip(&v)
                    .map(|((xi, ui), vi)| xi - &xv * ui + &xu * vi)
                    .collect()
            })
            .collect();
        pairs.push((u, v));
        pool = rest;
    }
}

fn flatten(pairs: Vec<(Vector, Vector)>) -> Vec<Vector> {
    pairs.into_iter().flat_map(|(u, v)| [u, v]).collect()
}

fn standard_basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

/// Darboux basis of a nondegenerate two-form.
pub fn symplectic_darboux(omega: &AltForm) -> Result<DarbouxReport> {
    let dim = common_dim(&[], std::slice::from_ref(omega))?;
    if dim % 2 == 1 {
        return Err(hypothesis("even dimension", format!("dimension is {dim}")));
    }
    let kernel = omega.one_kernel()?;
    if !kernel.is_zero() {
        return Err(hypothesis(
            "ker ω = 0",
            format!("kernel has dimension {}", kernel.dim()),
        ));
    }
    let (pairs, _) = skew_gram_schmidt(&omega.matrix()?, standard_basis(dim));
    let template = CanonicalTemplate::Symplectic { n: pairs.len() };
    finish(
        &flatten(pairs),
        template,
        &[],
        std::slice::from_ref(omega),
        None,
        None,
    )
}

/// Darboux basis of a two-form of any rank: `r` pairs followed by a basis
/// of the kernel.
pub fn presymplectic_darboux(omega: &AltForm) -> Result<DarbouxReport> {
    let dim = common_dim(&[], std::slice::from_ref(omega))?;
    let (pairs, rest) = skew_gram_schmidt(&omega.matrix()?, standard_basis(dim));
    let template = CanonicalTemplate::Presymplectic {
        r: pairs.len(),
        d: rest.len(),
    };
    let mut columns = flatten(pairs);
    columns.extend(rest);
    finish(
        &columns,
        template,
        &[],
        std::slice::from_ref(omega),
        None,
        None,
    )
}

/// Solves `ι_{R_α} η^β = δ^β_α`, `ι_{R_α} ω^β = 0`.
///
/// Returns one solution per `α` (free variables set to zero) and the common
/// solution space of the homogeneous system, `⋂ (ker η^β ∩ ker ω^β)`.
pub fn reeb_solve(etas: &[AltForm], omegas: &[AltForm]) -> Result<(Vec<Vector>, Subspace)> {
    let dim = common_dim(etas, omegas)?;
    let mut rows: Vec<Vector> = etas
        .iter()
        .map(AltForm::covector_coefficients)
        .collect::<std::result::Result<_, _>>()?;
    for w in omegas {
        rows.extend(w.matrix()?.row_vectors());
    }
    let system = Mat::from_rows(dim, rows)?;
    let mut base = Vec::with_capacity(etas.len());
    for alpha in 0..etas.len() {
        let mut rhs = vec![Rat::zero(); system.rows()];
        rhs[alpha] = Rat::one();
        match system.solve(&rhs)? {
            Some(r) => base.push(r),
            None => return Err(NormalFormError::NoReeb { alpha }),
        }
    }
    let freedom = if system.rows() == 0 {
        Subspace::full(dim)
    } else {
        system.kernel()
    };
    Ok((base, freedom))
}

fn check_eta(eta: &AltForm) -> Result<()> {
    if eta.is_zero() {
        return Err(hypothesis("η ≠ 0", "η vanishes"));
    }
    Ok(())
}

/// Darboux basis with `η` the last dual covector and `R` the last column.
pub fn cosymplectic_darboux(eta: &AltForm, omega: &AltForm) -> Result<DarbouxReport> {
    let (etas, omegas) = (std::slice::from_ref(eta), std::slice::from_ref(omega));
    let dim = common_dim(etas, omegas)?;
    check_eta(eta)?;
    let ker_eta = eta.one_kernel()?;
    let ker_omega = omega.one_kernel()?;
    let sum = subspace_sum(&ker_eta, &ker_omega)?;
    if !(sum.is_direct && sum.sum.is_full()) {
        return Err(hypothesis(
            "ker η ⊕ ker ω = E",
            format!(
                "dim ker η = {}, dim ker ω = {}, dim of sum = {}",
                ker_eta.dim(),
                ker_omega.dim(),
                sum.sum.dim()
            ),
        ));
    }
    let (base, freedom) = reeb_solve(etas, omegas)?;
    let (pairs, rest) = skew_gram_schmidt(&omega.matrix()?, ker_eta.basis().to_vec());
    debug_assert!(rest.is_empty());
    let template = CanonicalTemplate::Cosymplectic { n: pairs.len() };
    debug_assert_eq!(template.dim(), dim);
    let mut columns = flatten(pairs);
    columns.push(base[0].clone());
    finish(
        &columns,
        template,
        etas,
        omegas,
        Some((base, freedom)),
        None,
    )
}

/// Darboux basis `(pairs, kernel, t)`; the Reeb vector is one member of an
/// affine family, whose direction space is reported alongside.
pub fn precosymplectic_darboux(eta: &AltForm, omega: &AltForm) -> Result<DarbouxReport> {
    let (etas, omegas) = (std::slice::from_ref(eta), std::slice::from_ref(omega));
    let dim = common_dim(etas, omegas)?;
    check_eta(eta)?;
    let ker_eta = eta.one_kernel()?;
    let ker_omega = omega.one_kernel()?;
    let d = intersect(&ker_eta, &ker_omega)?;
    if d == ker_omega {
        return Err(hypothesis("ker η ∩ ker ω ⊊ ker ω", "η vanishes on ker ω"));
    }
    let (base, freedom) = reeb_solve(etas, omegas)?;
    let (pairs, rest) = skew_gram_schmidt(&omega.matrix()?, ker_eta.basis().to_vec());
    let template = CanonicalTemplate::Precosymplectic {
        r: pairs.len(),
        d: rest.len(),
    };
    debug_assert_eq!(template.dim(), dim);
    let mut columns = flatten(pairs);
    columns.extend(rest);
    columns.push(base[0].clone());
    let splitting = Splitting {
        parts: vec![],
        d: common_kernel(dim, [eta, omega])?,
    };
    finish(
        &columns,
        template,
        etas,
        omegas,
        Some((base, freedom)),
        Some(splitting),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn e(n: usize, i: usize) -> AltForm {
        AltForm::basis_covector(n, i)
    }

    fn w(n: usize, i: usize, j: usize) -> AltForm {
        e(n, i).wedge(&e(n, j)).unwrap()
    }

    #[test]
    fn symplectic_examples() {
        let rep = symplectic_darboux(&w(2, 0, 1)).unwrap();
        assert!(rep.frame.is_identity() && rep.verified);
        let rep = symplectic_darboux(&w(2, 0, 1).scale(&int(3))).unwrap();
        // F^T (3J) F = J: one column scaled by 1/3
        let f = rep.frame.matrix();
        let lhs = f
            .transpose()
            .mul(&w(2, 0, 1).scale(&int(3)).matrix().unwrap())
            .unwrap()
            .mul(f)
            .unwrap();
        assert_eq!(lhs, w(2, 0, 1).matrix().unwrap());
        let bad = w(3, 0, 1).add(&w(3, 0, 2)).unwrap();
        assert!(matches!(
            symplectic_darboux(&bad),
            Err(NormalFormError::Hypothesis { .. })
        ));
        assert!(symplectic_darboux(&w(4, 0, 1)).is_err());
    }

    #[test]
    fn presymplectic_examples() {
        let rep = presymplectic_darboux(&AltForm::zero(3, 2)).unwrap();
        assert_eq!(
            rep.template,
            CanonicalTemplate::Presymplectic { r: 0, d: 3 }
        );
        assert!(rep.frame.is_identity());
        let rep = presymplectic_darboux(&w(3, 0, 1)).unwrap();
        assert_eq!(
            rep.template,
            CanonicalTemplate::Presymplectic { r: 1, d: 1 }
        );
        assert_eq!(
            Subspace::span(3, vec![rep.frame.column(2)]).unwrap(),
            w(3, 0, 1).one_kernel().unwrap()
        );
        let omega = w(4, 0, 2).add(&w(4, 1, 3)).unwrap();
        let a = presymplectic_darboux(&omega).unwrap();
        let b = symplectic_darboux(&omega).unwrap();
        assert_eq!(a.template, CanonicalTemplate::Presymplectic { r: 2, d: 0 });
        assert_eq!(a.frame, b.frame);
    }

    #[test]
    fn cosymplectic_examples() {
        let rep = cosymplectic_darboux(&e(1, 0), &AltForm::zero(1, 2)).unwrap();
        assert_eq!(rep.reeb.unwrap(), vec![unit_vector(1, 0)]);
        let rep = cosymplectic_darboux(&e(3, 2), &w(3, 0, 1)).unwrap();
        assert!(rep.frame.is_identity());
        assert_eq!(rep.reeb.unwrap(), vec![unit_vector(3, 2)]);
        assert!(rep.reeb_freedom.unwrap().is_zero());
        assert!(matches!(
            cosymplectic_darboux(&e(3, 0), &w(3, 0, 1)),
            Err(NormalFormError::Hypothesis { .. })
        ));
        assert!(cosymplectic_darboux(&AltForm::zero(3, 1), &w(3, 0, 1)).is_err());
    }

    #[test]
    fn precosymplectic_examples() {
        // ker η ∩ ker ω = span{e₂} is strictly inside ker ω = ℚ²
        let rep = precosymplectic_darboux(&e(2, 0), &AltForm::zero(2, 2)).unwrap();
        assert_eq!(
            rep.template,
            CanonicalTemplate::Precosymplectic { r: 0, d: 1 }
        );
        assert!(precosymplectic_darboux(&e(3, 2), &w(3, 0, 2)).is_err());
        let rep = precosymplectic_darboux(&e(4, 3), &w(4, 0, 1)).unwrap();
        assert_eq!(
            rep.template,
            CanonicalTemplate::Precosymplectic { r: 1, d: 1 }
        );
        assert!(rep.frame.is_identity());
        assert_eq!(
            rep.splitting.unwrap().d,
            Subspace::span(4, vec![unit_vector(4, 2)]).unwrap()
        );
        let rep = precosymplectic_darboux(&e(3, 2), &w(3, 0, 1)).unwrap();
        assert_eq!(
            rep.template,
            CanonicalTemplate::Precosymplectic { r: 1, d: 0 }
        );
        let co = cosymplectic_darboux(&e(3, 2), &w(3, 0, 1)).unwrap();
        assert_eq!(rep.frame, co.frame);
    }

    #[test]
    fn reeb_examples() {
        let (base, freedom) = reeb_solve(&[e(4, 3)], &[w(4, 0, 1)]).unwrap();
        assert_eq!(base, vec![unit_vector(4, 3)]);
        assert_eq!(freedom, Subspace::span(4, vec![unit_vector(4, 2)]).unwrap());
        assert_eq!(
            reeb_solve(&[AltForm::zero(2, 1)], &[AltForm::zero(2, 2)]),
            Err(NormalFormError::NoReeb { alpha: 0 })
        );
        let etas = [e(5, 0), e(5, 1)];
        let omegas = [w(5, 2, 3), w(5, 2, 4)];
        let (base, freedom) = reeb_solve(&etas, &omegas).unwrap();
        assert_eq!(base, vec![unit_vector(5, 0), unit_vector(5, 1)]);
        assert!(freedom.is_zero());
    }
}
