//! Checkers for the two-form families: (pre)symplectic, (pre)cosymplectic
//! and their k-versions.

use num_traits::Zero;

use super::{Params, Result, Verdict, VerdictBuilder, Witness};
use crate::exterior::AltForm;
use crate::kind::StructureKind;
use crate::linalg::{intersect, subspace_sum, Subspace, Vector};
use crate::normal_form::{common_kernel, Splitting};

const SYMPLECTIC: &str = "symplectic form definition";
const PRESYMPLECTIC: &str = "presymplectic form definition";
const COSYMPLECTIC: &str = "cosymplectic structure definition";
const PRECOSYMPLECTIC: &str = "precosymplectic structure definition";
const K_SYMPLECTIC: &str = "k-symplectic structure definition";
const K_PRESYMPLECTIC: &str = "k-presymplectic manifold definition (with splitting)";
const K_COSYMPLECTIC: &str = "k-cosymplectic structure definition";
const K_PRECOSYMPLECTIC: &str = "k-precosymplectic structure definition";

fn first_vector(s: &Subspace) -> Option<Witness> {
    s.basis().first().cloned().map(Witness::Vector)
}

fn note(text: impl Into<String>) -> Option<Witness> {
    Some(Witness::Note(text.into()))
}

/// A basis vector `b` of `V` with `ω^α(b, ·)|_V ≠ 0` for some `α`.
pub(crate) fn isotropy_witness(omegas: &[AltForm], v: &Subspace) -> Result<Option<Vector>> {
    for w in omegas {
        for b in v.basis() {
            if !w.interior(b)?.vanishes_on(v)? {
                return Ok(Some(b.clone()));
            }
        }
    }
    Ok(None)
}

/// A basis vector of `V` on which some `η^α` does not vanish.
fn eta_witness(etas: &[AltForm], v: &Subspace) -> Result<Option<Vector>> {
    for eta in etas {
        for b in v.basis() {
            if !eta.evaluate(std::slice::from_ref(b))?.is_zero() {
                return Ok(Some(b.clone()));
            }
        }
    }
    Ok(None)
}

fn wedge_all(etas: &[AltForm], dim: usize) -> Result<AltForm> {
    let mut acc = AltForm::scalar(dim, num_traits::One::one());
    for eta in etas {
        acc = acc.wedge(eta)?;
    }
    Ok(acc)
}

fn half_ranks(omegas: &[AltForm]) -> Result<Vec<usize>> {
    omegas.iter().map(|w| Ok(w.rank()? / 2)).collect()
}

fn check_declared<T: PartialEq + std::fmt::Debug>(
    b: &mut VerdictBuilder,
    label: &str,
    name: &str,
    declared: Option<&T>,
    computed: &T,
) {
    if let Some(decl) = declared {
        b.check(
            label,
            name,
            decl == computed,
            note(format!("declared {decl:?}, computed {computed:?}")),
        );
    }
}

/// `V ∩ ⋂_{β≠α} ker ω^β`.
fn others_kernel(omegas: &[AltForm], v: &Subspace, alpha: usize) -> Result<Subspace> {
    let others = omegas
        .iter()
        .enumerate()
        .filter(|&(b, _)| b != alpha)
        .map(|(_, w)| w);
    Ok(intersect(
        v,
        &common_kernel(v.ambient_dim(), others).map_err(nf)?,
    )?)
}

fn nf(e: crate::normal_form::NormalFormError) -> super::VerifierError {
    use crate::normal_form::NormalFormError as E;
    match e {
        E::Exterior(e) => e.into(),
        E::Linalg(e) => e.into(),
        other => super::malformed(other.to_string()),
    }
}

fn ker_all<'a>(dim: usize, forms: impl IntoIterator<Item = &'a AltForm>) -> Result<Subspace> {
    common_kernel(dim, forms).map_err(nf)
}

pub fn check_symplectic(omega: &AltForm) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::Symplectic, SYMPLECTIC);
    let ker = omega.one_kernel()?;
    b.check("", "ker ω = 0", ker.is_zero(), first_vector(&ker));
    let params = Params {
        n: Some(omega.rank()? / 2),
        ..Params::default()
    };
    Ok(b.finish(params))
}

/// Pointwise every two-form is presymplectic; only declared ranks can fail.
pub fn check_presymplectic(omega: &AltForm, declared: &Params) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::Presymplectic, PRESYMPLECTIC);
    let r = omega.rank()? / 2;
    let d = omega.dim() - 2 * r;
    check_declared(&mut b, "", "rank ω = 2r", declared.r.as_ref(), &vec![r]);
    check_declared(&mut b, "", "d = dim ker ω", declared.d.as_ref(), &d);
    Ok(b.finish(Params {
        r: Some(vec![r]),
        d: Some(d),
        ..Params::default()
    }))
}

pub fn check_cosymplectic(eta: &AltForm, omega: &AltForm) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::Cosymplectic, COSYMPLECTIC);
    let dim = omega.dim();
    b.check("", "η ≠ 0", !eta.is_zero(), None);
    let (ke, kw) = (eta.one_kernel()?, omega.one_kernel()?);
    let meet = intersect(&ke, &kw)?;
    b.check("", "ker η ∩ ker ω = 0", meet.is_zero(), first_vector(&meet));
    let sum = subspace_sum(&ke, &kw)?.sum;
    b.check(
        "",
        "ker η + ker ω = E",
        sum.is_full(),
        note(format!(
            "ker η + ker ω has dimension {}, ambient {dim}",
            sum.dim()
        )),
    );
    Ok(b.finish(Params {
        n: Some(omega.rank()? / 2),
        ..Params::default()
    }))
}

pub fn check_precosymplectic(eta: &AltForm, omega: &AltForm, declared: &Params) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::Precosymplectic, PRECOSYMPLECTIC);
    let kw = omega.one_kernel()?;
    let d_space = intersect(&eta.one_kernel()?, &kw)?;
    b.check(
        "",
        "ker η ∩ ker ω ⊊ ker ω",
        d_space != kw,
        Some(Witness::Subspace(kw.clone())),
    );
    let r = omega.rank()? / 2;
    b.check(
        "",
        "rank ω = 2r < dim",
        2 * r < omega.dim(),
        note(format!("rank ω = {}", 2 * r)),
    );
    check_declared(&mut b, "", "rank ω = 2r", declared.r.as_ref(), &vec![r]);
    check_declared(
        &mut b,
        "",
        "d = rank(ker η ∩ ker ω)",
        declared.d.as_ref(),
        &d_space.dim(),
    );
    Ok(b.finish(Params {
        r: Some(vec![r]),
        d: Some(d_space.dim()),
        ..Params::default()
    }))
}

fn check_k(b: &mut VerdictBuilder, declared: &Params, k: usize) {
    check_declared(b, "", "k = number of two-forms", declared.k.as_ref(), &k);
}

fn check_isotropy(
    b: &mut VerdictBuilder,
    label: &str,
    omegas: &[AltForm],
    v: &Subspace,
) -> Result<()> {
    let wit = isotropy_witness(omegas, v)?;
    b.check(
        label,
        "ω^α|V×V = 0",
        wit.is_none(),
        wit.map(Witness::Vector),
    );
    Ok(())
}

pub fn check_k_symplectic(omegas: &[AltForm], v: &Subspace, declared: &Params) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::KSymplectic, K_SYMPLECTIC);
    let k = omegas.len();
    let dim = v.ambient_dim();
    check_k(&mut b, declared, k);
    let n = declared.n.unwrap_or(dim / (k + 1));
    b.check(
        "",
        "dim = n(k+1)",
        dim == n * (k + 1),
        note(format!("dim = {dim}, n(k+1) = {}", n * (k + 1))),
    );
    b.check(
        "",
        "rank V = nk",
        v.dim() == n * k,
        note(format!("rank V = {}, nk = {}", v.dim(), n * k)),
    );
    check_isotropy(&mut b, "(1)", omegas, v)?;
    let ker = ker_all(dim, omegas)?;
    b.check("(2)", "⋂ ker ω^α = 0", ker.is_zero(), first_vector(&ker));
    Ok(b.finish(Params {
        k: Some(k),
        n: Some(n),
        ..Params::default()
    }))
}

/// Clauses shared by the k-pre families about `V`, `D` and the splitting.
fn check_splitting_clauses(
    b: &mut VerdictBuilder,
    label: &str,
    omegas: &[AltForm],
    v: &Subspace,
    d: &Subspace,
    r: &[usize],
    split: Option<&Splitting>,
) -> Result<()> {
    let k = omegas.len();
    b.check(
        label,
        "D ⊂ V",
        v.contains_subspace(d),
        Some(Witness::Subspace(d.clone())),
    );
    if k >= 2 {
        for a in 0..k {
            let room = others_kernel(omegas, v, a)?;
            let ok = room.dim() == d.dim() + r[a];
            let wit = if &room == d && r[a] > 0 {
                format!(
                    "kernels coincide: V ∩ ⋂_{{β≠{}}} ker ω^β equals the common kernel D",
                    a + 1
                )
            } else {
                format!(
                    "V ∩ ⋂_{{β≠{}}} ker ω^β has dimension {}, expected {}",
                    a + 1,
                    room.dim(),
                    d.dim() + r[a]
                )
            };
            b.check(
                label,
                format!("dim(V ∩ ⋂_{{β≠{}}} ker ω^β) = d + r_{}", a + 1, a + 1),
                ok,
                note(wit),
            );
        }
    }
    let name = "V = ⊕ V_α ⊕ D with D + V_α = V ∩ ⋂_{β≠α} ker ω^β";
    match split {
        None if k >= 2 => b.check(label, name, false, note("splitting required")),
        None => {}
        Some(s) => {
            let problem = splitting_problem(omegas, v, d, r, s)?;
            b.check(label, name, problem.is_none(), problem.map(Witness::Note));
        }
    }
    Ok(())
}

fn splitting_problem(
    omegas: &[AltForm],
    v: &Subspace,
    d: &Subspace,
    r: &[usize],
    s: &Splitting,
) -> Result<Option<String>> {
    let k = omegas.len();
    if s.parts.len() != k {
        return Ok(Some(format!("{} parts given for k = {k}", s.parts.len())));
    }
    if &s.d != d {
        return Ok(Some(
            "the D of the splitting is not the common kernel".into(),
        ));
    }
    let mut sum = s.d.clone();
    let mut total = s.d.dim();
    for (a, part) in s.parts.iter().enumerate() {
        if part.dim() != r[a] {
            return Ok(Some(format!(
                "dim V_{} = {}, r_{} = {}",
                a + 1,
                part.dim(),
                a + 1,
                r[a]
            )));
        }
        sum = subspace_sum(&sum, part)?.sum;
        total += part.dim();
    }
    if sum.dim() != total || &sum != v {
        return Ok(Some("the parts do not form a direct sum equal to V".into()));
    }
    if k >= 2 {
        for (a, part) in s.parts.iter().enumerate() {
            if subspace_sum(d, part)?.sum != others_kernel(omegas, v, a)? {
                return Ok(Some(format!(
                    "D + V_{} differs from V ∩ ⋂_{{β≠{}}} ker ω^β",
                    a + 1,
                    a + 1
                )));
            }
        }
    }
    Ok(None)
}

fn check_r_range(b: &mut VerdictBuilder, label: &str, r: &[usize], n: usize) {
    let ok = r.iter().all(|&ra| 1 <= ra && ra <= n);
    b.check(
        label,
        "1 ≤ r_α ≤ n",
        ok,
        note(format!("r = {r:?}, n = {n}")),
    );
}

pub fn check_k_presymplectic(
    omegas: &[AltForm],
    v: &Subspace,
    split: Option<&Splitting>,
    declared: &Params,
) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::KPresymplectic, K_PRESYMPLECTIC);
    let k = omegas.len();
    let dim = v.ambient_dim();
    check_k(&mut b, declared, k);
    check_isotropy(&mut b, "", omegas, v)?;
    let r = half_ranks(omegas)?;
    check_declared(&mut b, "", "rank ω^α = 2r_α", declared.r.as_ref(), &r);
    let r_total: usize = r.iter().sum();
    let d_space = ker_all(dim, omegas)?;
    let d = d_space.dim();
    check_declared(&mut b, "", "d = rank ⋂ ker ω^α", declared.d.as_ref(), &d);
    let n = declared.n.unwrap_or(dim.saturating_sub(r_total + d));
    b.check(
        "",
        "dim = n + r + d",
        dim == n + r_total + d,
        note(format!("dim = {dim}, n + r + d = {}", n + r_total + d)),
    );
    check_r_range(&mut b, "", &r, n);
    b.check(
        "",
        "rank V = r + d",
        v.dim() == r_total + d,
        note(format!("rank V = {}, r + d = {}", v.dim(), r_total + d)),
    );
    check_splitting_clauses(&mut b, "", omegas, v, &d_space, &r, split)?;
    Ok(b.finish(Params {
        k: Some(k),
        n: Some(n),
        r: Some(r),
        d: Some(d),
    }))
}

fn check_eta_clauses(
    b: &mut VerdictBuilder,
    etas: &[AltForm],
    omegas: &[AltForm],
    v: &Subspace,
) -> Result<()> {
    let wedge = wedge_all(etas, v.ambient_dim())?;
    b.check("(1)", "η¹∧…∧η^k ≠ 0", !wedge.is_zero(), None);
    let wit = eta_witness(etas, v)?;
    b.check("(1)", "η^α|V = 0", wit.is_none(), wit.map(Witness::Vector));
    check_isotropy(b, "(1)", omegas, v)
}

pub fn check_k_cosymplectic(
    etas: &[AltForm],
    omegas: &[AltForm],
    v: &Subspace,
    declared: &Params,
) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::KCosymplectic, K_COSYMPLECTIC);
    let k = omegas.len();
    let dim = v.ambient_dim();
    check_k(&mut b, declared, k);
    let n = declared.n.unwrap_or(dim.saturating_sub(k) / (k + 1));
    b.check(
        "",
        "dim = n(k+1) + k",
        dim == n * (k + 1) + k,
        note(format!("dim = {dim}, n(k+1) + k = {}", n * (k + 1) + k)),
    );
    b.check(
        "",
        "rank V = nk",
        v.dim() == n * k,
        note(format!("rank V = {}, nk = {}", v.dim(), n * k)),
    );
    check_eta_clauses(&mut b, etas, omegas, v)?;
    let joint = ker_all(dim, etas.iter().chain(omegas))?;
    b.check(
        "(2)",
        "⋂ (ker η^α ∩ ker ω^α) = 0",
        joint.is_zero(),
        first_vector(&joint),
    );
    let kw = ker_all(dim, omegas)?;
    b.check(
        "(2)",
        "rank ⋂ ker ω^α = k",
        kw.dim() == k,
        Some(Witness::Subspace(kw.clone())),
    );
    Ok(b.finish(Params {
        k: Some(k),
        n: Some(n),
        ..Params::default()
    }))
}

pub fn check_k_precosymplectic(
    etas: &[AltForm],
    omegas: &[AltForm],
    v: &Subspace,
    split: Option<&Splitting>,
    declared: &Params,
) -> Result<Verdict> {
    let mut b = VerdictBuilder::new(StructureKind::KPrecosymplectic, K_PRECOSYMPLECTIC);
    let k = omegas.len();
    let dim = v.ambient_dim();
    check_k(&mut b, declared, k);
    let r = half_ranks(omegas)?;
    check_declared(&mut b, "", "rank ω^α = 2r_α", declared.r.as_ref(), &r);
    let n = declared.n.unwrap_or(dim.saturating_sub(v.dim() + k));
    b.check(
        "",
        "corank V = n + k",
        dim == v.dim() + n + k,
        note(format!("corank V = {}, n + k = {}", dim - v.dim(), n + k)),
    );
    check_r_range(&mut b, "", &r, n);
    check_eta_clauses(&mut b, etas, omegas, v)?;
    let d_space = ker_all(dim, etas.iter().chain(omegas))?;
    let d = d_space.dim();
    let kw = ker_all(dim, omegas)?;
    b.check(
        "(2)",
        "rank ⋂ ker ω^α = k + d",
        kw.dim() == k + d,
        Some(Witness::Subspace(kw.clone())),
    );
    if let Some(decl) = declared.d {
        b.check(
            "(3)",
            "rank ⋂ (ker ω^α ∩ ker η^α) = d",
            decl == d,
            note(format!("declared d = {decl}, computed {d}")),
        );
    }
    let r_total: usize = r.iter().sum();
    b.check(
        "(4)",
        "rank V = r + d",
        v.dim() == r_total + d,
        note(format!("rank V = {}, r + d = {}", v.dim(), r_total + d)),
    );
    check_splitting_clauses(&mut b, "(4)", omegas, v, &d_space, &r, split)?;
    Ok(b.finish(Params {
        k: Some(k),
        n: Some(n),
        r: Some(r),
        d: Some(d),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat;
    use crate::linalg::{int, unit_vector};
    use crate::normal_form::candidate_splitting;

    fn e(n: usize, i: usize) -> AltForm {
        AltForm::basis_covector(n, i)
    }

    fn w(n: usize, i: usize, j: usize) -> AltForm {
        e(n, i).wedge(&e(n, j)).unwrap()
    }

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::span(n, idx.iter().map(|&i| unit_vector(n, i)).collect()).unwrap()
    }

    fn none() -> Params {
        Params::default()
    }

    #[test]
    fn k_symplectic_common_kernel_witness() {
        let omegas = vec![w(3, 0, 1), w(3, 0, 1)];
        let verdict = check_k_symplectic(&omegas, &span(3, &[1, 2]), &none()).unwrap();
        assert!(!verdict.accepted);
        let c = verdict.clause("⋂ ker ω^α = 0").unwrap();
        assert!(!c.passed);
        let Some(Witness::Vector(x)) = &c.witness else {
            panic!("no witness")
        };
        assert_eq!(x, &unit_vector(3, 2));
        for om in &omegas {
            assert!(om.interior(x).unwrap().is_zero());
        }
    }

    #[test]
    fn k_symplectic_wrong_rank_v() {
        let verdict =
            check_k_symplectic(&[w(3, 0, 1), w(3, 0, 2)], &span(3, &[1]), &none()).unwrap();
        assert!(!verdict.clause("rank V = nk").unwrap().passed);
    }

    fn k_cosymplectic_model() -> (Vec<AltForm>, Vec<AltForm>, Subspace) {
        // (x¹, x², y, y¹, y²): η^α = dx^α, ω^α = dy ∧ dy^α, V = ⟨∂y¹, ∂y²⟩.
        (
            vec![e(5, 0), e(5, 1)],
            vec![w(5, 2, 3), w(5, 2, 4)],
            span(5, &[3, 4]),
        )
    }

    #[test]
    fn k_cosymplectic_examples() {
        let (etas, omegas, v) = k_cosymplectic_model();
        assert!(
            check_k_cosymplectic(&etas, &omegas, &v, &none())
                .unwrap()
                .accepted
        );

        let same = vec![e(5, 0), e(5, 0)];
        let verdict = check_k_cosymplectic(&same, &omegas, &v, &none()).unwrap();
        assert!(!verdict.clause("η¹∧…∧η^k ≠ 0").unwrap().passed);

        let bigger = subspace_sum(&v, &span(5, &[0])).unwrap().sum;
        let verdict = check_k_cosymplectic(&etas, &omegas, &bigger, &none()).unwrap();
        let c = verdict.clause("η^α|V = 0").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness, Some(Witness::Vector(unit_vector(5, 0))));
        assert_eq!(etas[0].evaluate(&[unit_vector(5, 0)]).unwrap(), int(1));
    }

    fn product() -> (Vec<AltForm>, Vec<AltForm>, Subspace) {
        // ℚ × (ω = e1∧e3 + e2∧e4 on ℚ⁴ with a z-direction): coordinates (t, a, b, c, d, z).
        let omega = w(6, 1, 3).add(&w(6, 2, 4)).unwrap();
        (vec![e(6, 0)], vec![omega], span(6, &[3, 4, 5]))
    }

    #[test]
    fn k_precosymplectic_product_and_mis_declared_d() {
        let (etas, omegas, v) = product();
        let split = candidate_splitting(&etas, &omegas, &v, &Mat::identity(6)).unwrap();
        let verdict = check_k_precosymplectic(&etas, &omegas, &v, Some(&split), &none()).unwrap();
        assert!(verdict.accepted, "{verdict:?}");
        assert_eq!(verdict.params.d, Some(1));
        assert_eq!(verdict.params.n, Some(2));

        let declared = Params {
            d: Some(2),
            ..none()
        };
        let verdict = check_k_precosymplectic(&etas, &omegas, &v, Some(&split), &declared).unwrap();
        assert!(!verdict.accepted);
        let failed: Vec<_> = verdict.failed().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["rank ⋂ (ker ω^α ∩ ker η^α) = d"]);
        assert!(verdict.failed().all(|c| c.citation.ends_with("clause (3)")));
    }

    #[test]
    fn k_precosymplectic_needs_splitting_for_k_two() {
        // ℚ² × 2-symplectic dim 3, with η^α = dx^α.
        let etas = vec![e(5, 0), e(5, 1)];
        let omegas = vec![w(5, 2, 3), w(5, 2, 4)];
        let v = span(5, &[3, 4]);
        let verdict = check_k_precosymplectic(&etas, &omegas, &v, None, &none()).unwrap();
        assert!(!verdict.accepted);
        let c = verdict.failed().next().unwrap();
        assert_eq!(c.witness, Some(Witness::Note("splitting required".into())));
        let split = candidate_splitting(&etas, &omegas, &v, &Mat::identity(5)).unwrap();
        assert!(
            check_k_precosymplectic(&etas, &omegas, &v, Some(&split), &none())
                .unwrap()
                .accepted
        );
    }

    #[test]
    fn k_presymplectic_counter_example() {
        // (λ, y¹, y²) with ω¹ = dλ∧dy¹, ω² = 2 dλ∧dy¹, V = ⟨∂λ, ∂y²⟩.
        let omegas = vec![w(3, 0, 1), w(3, 0, 1).scale(&int(2))];
        let verdict = check_k_presymplectic(&omegas, &span(3, &[0, 2]), None, &none()).unwrap();
        assert!(!verdict.accepted);
        let coincide = verdict.failed().any(
            |c| matches!(&c.witness, Some(Witness::Note(t)) if t.contains("kernels coincide")),
        );
        assert!(coincide);
    }

    #[test]
    fn k_symplectic_nests_into_k_presymplectic() {
        let omegas = vec![w(3, 0, 1), w(3, 0, 2)];
        let v = span(3, &[1, 2]);
        let split = candidate_splitting(&[], &omegas, &v, &Mat::identity(3)).unwrap();
        let verdict = check_k_presymplectic(&omegas, &v, Some(&split), &none()).unwrap();
        assert!(verdict.accepted, "{verdict:?}");
        assert_eq!(verdict.params.r, Some(vec![1, 1]));
        assert_eq!(verdict.params.d, Some(0));
        assert_eq!(verdict.params.n, Some(1));
    }

    #[test]
    fn cosymplectic_nests_into_precosymplectic() {
        let (eta, omega) = (e(3, 2), w(3, 0, 1));
        assert!(check_cosymplectic(&eta, &omega).unwrap().accepted);
        let pre = check_precosymplectic(&eta, &omega, &none()).unwrap();
        assert!(pre.accepted);
        assert_eq!(pre.params.d, Some(0));
    }

    #[test]
    fn cosymplectic_failure_witness() {
        let (eta, omega) = (e(3, 0), w(3, 0, 1));
        let verdict = check_cosymplectic(&eta, &omega).unwrap();
        let c = verdict.clause("ker η ∩ ker ω = 0").unwrap();
        let Some(Witness::Vector(x)) = &c.witness else {
            panic!()
        };
        assert!(eta.interior(x).unwrap().is_zero() && omega.interior(x).unwrap().is_zero());
    }

    #[test]
    fn isotropy_witness_is_sound() {
        let omegas = vec![w(4, 0, 1)];
        let v = span(4, &[0, 1]);
        let x = isotropy_witness(&omegas, &v).unwrap().unwrap();
        assert!(!omegas[0].interior(&x).unwrap().vanishes_on(&v).unwrap());
    }
}
