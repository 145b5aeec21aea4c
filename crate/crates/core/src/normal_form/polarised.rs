//! Normal forms for families of two-forms with a polarisation.
//!
//! All four k-families reduce to one construction on a space `E` carrying
//! two-forms `ω^α`, an isotropic `V = V₁ ⊕ … ⊕ V_k ⊕ D` with
//! `D = ⋂ ker ω^α` and `V_α ∩ ker ω^α = 0`:
//!
//! 1. take `S = V^{⊥g}` and map each `V_α` into `S*` by `b ↦ ω^α(·, b)|_S`;
//! 2. find a basis of `S*` adapted to all the images `A_α` at once;
//! 3. its dual basis of `S`, corrected by elements of the `V_α`, together
//!    with preimages of the adapted basis and a basis of `D`, is the frame.

use num_traits::{One, Zero};

use super::template::mask_order;
use super::{
    common_dim, common_kernel, finish, hypothesis, reeb_solve, CanonicalTemplate, DarbouxReport,
    NormalFormError, Result, Splitting,
};
use crate::exterior::AltForm;
use crate::linalg::{
    add_scaled, intersect, intersect_all, orthogonal_complement, subspace_sum, zero_vector, Mat,
    Rat, Subspace, Vector,
};

struct Polarised {
    columns: Vec<Vector>,
    n: usize,
    index_sets: Vec<Vec<usize>>,
}

fn leading_index(v: &[Rat]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(v.len())
}

/// Basis of `ℚⁿ` adapted to every `A_α`, grouped as nested `h`-orthogonal
/// complements: for each set `T` of indices (larger sets first) the piece
/// `P_T` is the complement, inside `⋂_{α∈T} A_α`, of the pieces already
/// built for supersets of `T`. Returns `(vector, T)` pairs sorted by
/// `T` (see [`CanonicalTemplate::canonical`]), then leading index.
fn adapted_basis(n: usize, images: &[Subspace], h: &Mat) -> Result<Vec<(Vector, u32)>> {
    let k = images.len();
    let mut masks: Vec<u32> = (0..1u32 << k).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let mut pieces: Vec<(u32, Subspace)> = Vec::new();
    for &mask in &masks {
        let members: Vec<&Subspace> = (0..k)
            .filter(|a| mask & (1 << a) != 0)
            .map(|a| &images[a])
            .collect();
        let host = intersect_all(n, members)?;
        let mut below = Subspace::zero(n);
        for (m, p) in &pieces {
            if m & mask == mask && *m != mask {
                below = subspace_sum(&below, p)?.sum;
            }
        }
        let piece = intersect(&host, &orthogonal_complement(&below, h)?)?;
        if !piece.is_zero() {
            pieces.push((mask, piece));
        }
    }
    let total: usize = pieces.iter().map(|(_, p)| p.dim()).sum();
    let span = pieces.iter().try_fold(Subspace::zero(n), |acc, (_, p)| {
        subspace_sum(&acc, p).map(|s| s.sum)
    })?;
    if total != n || span.dim() != n {
        return Err(NormalFormError::NoAdaptedBasis);
    }
    for (a, image) in images.iter().enumerate() {
        let inside: usize = pieces
            .iter()
            .filter(|(m, _)| m & (1 << a) != 0)
            .map(|(_, p)| p.dim())
            .sum();
        if inside != image.dim() {
            return Err(NormalFormError::NoAdaptedBasis);
        }
    }
    let mut basis: Vec<(Vector, u32)> = pieces
        .into_iter()
        .flat_map(|(m, p)| {
            p.basis()
                .iter()
                .map(move |v| (v.clone(), m))
                .collect::<Vec<_>>()
        })
        .collect();
    basis.sort_by_key(|(v, m)| (mask_order(*m), leading_index(v)));
    Ok(basis)
}

fn polarised_frame(
    omegas: &[AltForm],
    v: &Subspace,
    parts: &[Subspace],
    d: &Subspace,
    g: &Mat,
) -> Result<Polarised> {
    let s = orthogonal_complement(v, g)?;
    let n = s.dim();
    let sb = s.basis();
    let mats = omegas
        .iter()
        .map(AltForm::matrix)
        .collect::<std::result::Result<Vec<_>, _>>()?;

    // functionals ω^α(·, b)|_S for the basis vectors b of V_α, in S-coordinates
    let mut functionals: Vec<Vec<Vector>> = Vec::with_capacity(parts.len());
    let mut images = Vec::with_capacity(parts.len());
    for (a, (part, m)) in parts.iter().zip(&mats).enumerate() {
        let fs: Vec<Vector> = part
            .basis()
            .iter()
            .map(|b| sb.iter().map(|sj| m.bilinear(sj, b)).collect())
            .collect();
        let image = Subspace::span(n, fs.clone())?;
        if image.dim() != part.dim() {
            return Err(hypothesis(
                "V_α ∩ ker ω^α = 0",
                format!("fails for α = {}", a + 1),
            ));
        }
        functionals.push(fs);
        images.push(image);
    }

    let gram = Mat::from_rows(
        n,
        sb.iter()
            .map(|si| sb.iter().map(|sj| g.bilinear(si, sj)).collect())
            .collect(),
    )?;
    let dual_metric = if n == 0 { gram } else { gram.inverse()? };
    let basis = adapted_basis(n, &images, &dual_metric)?;
    let index_sets: Vec<Vec<usize>> = (0..parts.len())
        .map(|a| (0..n).filter(|&i| basis[i].1 & (1 << a) != 0).collect())
        .collect();

    // a'_i: the basis of S dual to the adapted basis of S*
    let big_n = v.ambient_dim();
    let mut a_cols: Vec<Vector> = vec![zero_vector(big_n); n];
    if n > 0 {
        let c = Mat::from_rows(n, basis.iter().map(|(e, _)| e.clone()).collect())?.inverse()?;
        for (i, col) in a_cols.iter_mut().enumerate() {
            for (j, sj) in sb.iter().enumerate() {
                add_scaled(col, &c[(j, i)], sj);
            }
        }
    }

    // b^α_μ ∈ V_α with ω^α(·, b^α_μ)|_S equal to the μ-th adapted covector
    let mut b_cols: Vec<Vec<Vector>> = Vec::with_capacity(parts.len());
    for (a, part) in parts.iter().enumerate() {
        let phi = Mat::from_columns(n, &functionals[a])?;
        let mut cols = Vec::with_capacity(index_sets[a].len());
        for &mu in &index_sets[a] {
            let x = phi
                .solve(&basis[mu].0)?
                .ok_or(NormalFormError::NoAdaptedBasis)?;
            let mut b = zero_vector(big_n);
            for (xt, vt) in x.iter().zip(part.basis()) {
                add_scaled(&mut b, xt, vt);
            }
            cols.push(b);
        }
        b_cols.push(cols);
    }

    // remove ω^α(a'_i, a'_j) using the b's, which ω^β ignores for β ≠ α
    let half = Rat::one() / Rat::from_integer(2.into());
    let mut corrected = a_cols.clone();
    for (a, m) in mats.iter().enumerate() {
        for (i, ai) in corrected.iter_mut().enumerate() {
            let i_in = index_sets[a].contains(&i);
            for (pos, &mu) in index_sets[a].iter().enumerate() {
                let c = m.bilinear(&a_cols[i], &a_cols[mu]);
                let t = if i_in { &c * &half } else { c };
                add_scaled(ai, &t, &b_cols[a][pos]);
            }
        }
    }

    let mut columns = corrected;
    columns.extend(b_cols.into_iter().flatten());
    columns.extend(d.basis().iter().cloned());
    Ok(Polarised {
        columns,
        n,
        index_sets,
    })
}

fn check_family(etas: &[AltForm], omegas: &[AltForm], v: &Subspace) -> Result<usize> {
    if omegas.is_empty() {
        return Err(NormalFormError::EmptyFamily);
    }
    let dim = common_dim(etas, omegas)?;
    if v.ambient_dim() != dim {
        return Err(NormalFormError::DimensionMismatch {
            expected: dim,
            found: v.ambient_dim(),
        });
    }
    Ok(dim)
}

fn check_metric(g: &Mat, dim: usize) -> Result<()> {
    if g.rows() != dim || g.cols() != dim {
        return Err(NormalFormError::DimensionMismatch {
            expected: dim,
            found: g.rows(),
        });
    }
    g.check_spd()
        .map_err(|e| hypothesis("g symmetric positive definite", e.to_string()))
}

fn check_isotropic(omegas: &[AltForm], v: &Subspace) -> Result<()> {
    for (a, w) in omegas.iter().enumerate() {
        if !w.vanishes_on(v)? {
            return Err(hypothesis(
                "ω^α|V×V = 0",
                format!("fails for α = {}", a + 1),
            ));
        }
    }
    Ok(())
}

fn check_etas_on_v(etas: &[AltForm], v: &Subspace) -> Result<()> {
    for (a, eta) in etas.iter().enumerate() {
        if !eta.vanishes_on(v)? {
            return Err(hypothesis("η^α|V = 0", format!("fails for α = {}", a + 1)));
        }
    }
    Ok(())
}

fn check_etas_independent(etas: &[AltForm]) -> Result<()> {
    let dim = etas[0].dim();
    let wedge = etas
        .iter()
        .try_fold(AltForm::scalar(dim, Rat::one()), |acc, e| acc.wedge(e))?;
    if wedge.is_zero() {
        return Err(hypothesis(
            "η¹∧…∧η^k ≠ 0",
            "the one-forms are linearly dependent",
        ));
    }
    Ok(())
}

/// `V ∩ ⋂_{β≠α} ker ω^β`.
fn others_kernel(omegas: &[AltForm], v: &Subspace, alpha: usize) -> Result<Subspace> {
    let others: Vec<&AltForm> = omegas
        .iter()
        .enumerate()
        .filter(|&(b, _)| b != alpha)
        .map(|(_, w)| w)
        .collect();
    Ok(intersect(v, &common_kernel(v.ambient_dim(), others)?)?)
}

fn half_ranks(omegas: &[AltForm]) -> Result<Vec<usize>> {
    omegas.iter().map(|w| Ok(w.rank()? / 2)).collect()
}

/// A splitting of `V` built from the data: `D` is the common kernel of all
/// the forms, and `V_α` is the `g`-orthogonal complement of `D` inside
/// `V ∩ ⋂_{β≠α} ker ω^β` (inside `V` when `k = 1`).
pub fn candidate_splitting(
    etas: &[AltForm],
    omegas: &[AltForm],
    v: &Subspace,
    g: &Mat,
) -> Result<Splitting> {
    let dim = check_family(etas, omegas, v)?;
    check_metric(g, dim)?;
    let d = common_kernel(dim, etas.iter().chain(omegas))?;
    let d_perp = orthogonal_complement(&d, g)?;
    let parts = if omegas.len() == 1 {
        vec![intersect(v, &d_perp)?]
    } else {
        (0..omegas.len())
            .map(|a| Ok(intersect(&others_kernel(omegas, v, a)?, &d_perp)?))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(Splitting { parts, d })
}

/// Checks `V ∩ ⋂_{β≠α} ker ω^β` is big enough to host `D ⊕ V_α`. When it
/// collapses onto `D` the kernels of the other forms coincide with the
/// common kernel and no splitting can exist.
fn check_kernel_room(omegas: &[AltForm], v: &Subspace, d: &Subspace, r: &[usize]) -> Result<()> {
    if omegas.len() < 2 {
        return Ok(());
    }
    for a in 0..omegas.len() {
        let room = others_kernel(omegas, v, a)?;
        if room.dim() != d.dim() + r[a] {
            let detail = if &room == d && r[a] > 0 {
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
            return Err(hypothesis("D + V_α = V ∩ ⋂_{β≠α} ker ω^β", detail));
        }
    }
    Ok(())
}

/// `D ⊂ V`, room for each `V_α`, then `rank V = r + d`. The room check goes
/// first so that coinciding kernels are reported as such.
fn check_v_shape(omegas: &[AltForm], v: &Subspace, d: &Subspace, r: &[usize]) -> Result<()> {
    if !v.contains_subspace(d) {
        return Err(hypothesis(
            "D ⊂ V",
            "the common kernel is not contained in V",
        ));
    }
    check_kernel_room(omegas, v, d, r)?;
    let r_total: usize = r.iter().sum();
    if v.dim() != r_total + d.dim() {
        return Err(hypothesis(
            "rank V = r + d",
            format!("rank V = {}, r + d = {}", v.dim(), r_total + d.dim()),
        ));
    }
    Ok(())
}

fn check_splitting(
    omegas: &[AltForm],
    v: &Subspace,
    split: &Splitting,
    d: &Subspace,
    r: &[usize],
) -> Result<()> {
    let k = omegas.len();
    if split.parts.len() != k {
        return Err(hypothesis(
            "splitting",
            format!("{} parts given for k = {k}", split.parts.len()),
        ));
    }
    if &split.d != d {
        return Err(hypothesis(
            "splitting",
            "the D of the splitting is not the common kernel",
        ));
    }
    let mut sum = split.d.clone();
    let mut total = split.d.dim();
    for (a, part) in split.parts.iter().enumerate() {
        if part.ambient_dim() != v.ambient_dim() {
            return Err(NormalFormError::DimensionMismatch {
                expected: v.ambient_dim(),
                found: part.ambient_dim(),
            });
        }
        if part.dim() != r[a] {
            return Err(hypothesis(
                "dim V_α = r_α",
                format!("dim V_{} = {}, r_{} = {}", a + 1, part.dim(), a + 1, r[a]),
            ));
        }
        sum = subspace_sum(&sum, part)?.sum;
        total += part.dim();
    }
    if sum.dim() != total || &sum != v {
        return Err(hypothesis(
            "V = V₁ ⊕ … ⊕ V_k ⊕ D",
            "the parts do not form a direct sum equal to V",
        ));
    }
    if k >= 2 {
        for (a, part) in split.parts.iter().enumerate() {
            if subspace_sum(d, part)?.sum != others_kernel(omegas, v, a)? {
                return Err(hypothesis(
                    "D + V_α = V ∩ ⋂_{β≠α} ker ω^β",
                    format!("fails for α = {}", a + 1),
                ));
            }
        }
    }
    Ok(())
}

/// Darboux basis of a k-symplectic structure with polarisation `V`.
pub fn k_symplectic_darboux(omegas: &[AltForm], v: &Subspace) -> Result<DarbouxReport> {
    let dim = check_family(&[], omegas, v)?;
    let k = omegas.len();
    if dim % (k + 1) != 0 {
        return Err(hypothesis(
            "dim = n(k+1)",
            format!("dimension {dim} is not a multiple of {}", k + 1),
        ));
    }
    let n = dim / (k + 1);
    if v.dim() != n * k {
        return Err(hypothesis(
            "rank V = nk",
            format!("rank V = {}, nk = {}", v.dim(), n * k),
        ));
    }
    check_isotropic(omegas, v)?;
    let kernel = common_kernel(dim, omegas)?;
    if !kernel.is_zero() {
        return Err(hypothesis(
            "⋂ ker ω^α = 0",
            format!("the common kernel has dimension {}", kernel.dim()),
        ));
    }
    let parts = if k == 1 {
        vec![v.clone()]
    } else {
        (0..k)
            .map(|a| others_kernel(omegas, v, a))
            .collect::<Result<Vec<_>>>()?
    };
    for (a, p) in parts.iter().enumerate() {
        if p.dim() != n {
            return Err(hypothesis(
                "dim V_α = n",
                format!("dim V_{} = {}", a + 1, p.dim()),
            ));
        }
    }
    let out = polarised_frame(omegas, v, &parts, &kernel, &Mat::identity(dim))?;
    debug_assert!(out.index_sets.iter().all(|s| s.len() == n));
    let splitting = Splitting { parts, d: kernel };
    finish(
        &out.columns,
        CanonicalTemplate::KSymplectic { k, n },
        &[],
        omegas,
        None,
        Some(splitting),
    )
}

/// Darboux basis of a k-presymplectic structure with a given splitting of
/// `V` and an auxiliary metric `g`.
pub fn k_presymplectic_darboux(
    omegas: &[AltForm],
    v: &Subspace,
    split: &Splitting,
    g: &Mat,
) -> Result<DarbouxReport> {
    let dim = check_family(&[], omegas, v)?;
    check_metric(g, dim)?;
    let r = half_ranks(omegas)?;
    let d = common_kernel(dim, omegas)?;
    check_isotropic(omegas, v)?;
    check_v_shape(omegas, v, &d, &r)?;
    check_splitting(omegas, v, split, &d, &r)?;
    let out = polarised_frame(omegas, v, &split.parts, &d, g)?;
    let template = CanonicalTemplate::KPresymplectic {
        n: out.n,
        index_sets: out.index_sets,
        d: d.dim(),
    };
    finish(
        &out.columns,
        template,
        &[],
        omegas,
        None,
        Some(split.clone()),
    )
}

/// Restriction of the data to a subspace `h`, in coordinates of its
/// canonical basis.
struct Restricted {
    basis: Mat,
    omegas: Vec<AltForm>,
}

impl Restricted {
    fn new(h: &Subspace, omegas: &[AltForm]) -> Result<Self> {
        let basis = h.as_columns();
        let omegas = omegas
            .iter()
            .map(|w| w.pullback(&basis))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Restricted { basis, omegas })
    }

    fn dim(&self) -> usize {
        self.basis.cols()
    }

    fn subspace(&self, h: &Subspace, s: &Subspace) -> Result<Subspace> {
        let coords = s
            .basis()
            .iter()
            .map(|x| {
                h.coordinates(x)
                    .ok_or_else(|| hypothesis("V ⊂ ⋂ ker η^α", "a subspace leaves the η-kernel"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.dim(), coords)?)
    }

    fn metric(&self, g: &Mat) -> Result<Mat> {
        Ok(self.basis.transpose().mul(g)?.mul(&self.basis)?)
    }

    fn lift(&self, x: &[Rat]) -> Result<Vector> {
        Ok(self.basis.mul_vec(x)?)
    }
}

fn check_cosymplectic_family(etas: &[AltForm], omegas: &[AltForm], v: &Subspace) -> Result<usize> {
    let dim = check_family(etas, omegas, v)?;
    if etas.len() != omegas.len() {
        return Err(hypothesis(
            "k one-forms and k two-forms",
            format!("{} η and {} ω", etas.len(), omegas.len()),
        ));
    }
    check_etas_independent(etas)?;
    check_etas_on_v(etas, v)?;
    check_isotropic(omegas, v)?;
    Ok(dim)
}

/// Darboux basis of a k-cosymplectic structure: Reeb vectors first, then a
/// k-symplectic basis of `⋂ ker η^α`.
pub fn k_cosymplectic_darboux(
    etas: &[AltForm],
    omegas: &[AltForm],
    v: &Subspace,
) -> Result<DarbouxReport> {
    let dim = check_cosymplectic_family(etas, omegas, v)?;
    let k = omegas.len();
    if dim < k || (dim - k) % (k + 1) != 0 {
        return Err(hypothesis(
            "dim = n(k+1) + k",
            format!("dimension {dim} does not fit k = {k}"),
        ));
    }
    let n = (dim - k) / (k + 1);
    if v.dim() != n * k {
        return Err(hypothesis(
            "rank V = nk",
            format!("rank V = {}, nk = {}", v.dim(), n * k),
        ));
    }
    let trivial = common_kernel(dim, etas.iter().chain(omegas))?;
    if !trivial.is_zero() {
        return Err(hypothesis(
            "⋂ (ker η^α ∩ ker ω^α) = 0",
            format!("dimension {}", trivial.dim()),
        ));
    }
    let kernel = common_kernel(dim, omegas)?;
    if kernel.dim() != k {
        return Err(hypothesis(
            "rank ⋂ ker ω^α = k",
            format!("rank is {}", kernel.dim()),
        ));
    }
    let (reeb, freedom) = reeb_solve(etas, omegas)?;
    let h = common_kernel(dim, etas)?;
    let local = Restricted::new(&h, omegas)?;
    let v_local = local.subspace(&h, v)?;
    let parts_local = if k == 1 {
        vec![v_local.clone()]
    } else {
        (0..k)
            .map(|a| others_kernel(&local.omegas, &v_local, a))
            .collect::<Result<Vec<_>>>()?
    };
    let g_local = Mat::identity(local.dim());
    let out = polarised_frame(
        &local.omegas,
        &v_local,
        &parts_local,
        &Subspace::zero(local.dim()),
        &g_local,
    )?;
    let mut columns = reeb.clone();
    for c in &out.columns {
        columns.push(local.lift(c)?);
    }
    let parts = parts_local
        .iter()
        .map(|p| lift_subspace(&local, p, dim))
        .collect::<Result<Vec<_>>>()?;
    let splitting = Splitting {
        parts,
        d: Subspace::zero(dim),
    };
    finish(
        &columns,
        CanonicalTemplate::KCosymplectic { k, n },
        etas,
        omegas,
        Some((reeb, freedom)),
        Some(splitting),
    )
}

fn lift_subspace(local: &Restricted, s: &Subspace, dim: usize) -> Result<Subspace> {
    let vs = s
        .basis()
        .iter()
        .map(|x| local.lift(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(dim, vs)?)
}

/// Darboux basis of a k-precosymplectic structure with a given splitting.
/// The Reeb vectors are one solution of the Reeb system; the report also
/// carries the space of admissible shifts.
pub fn k_precosymplectic_darboux(
    etas: &[AltForm],
    omegas: &[AltForm],
    v: &Subspace,
    split: &Splitting,
    g: &Mat,
) -> Result<DarbouxReport> {
    let dim = check_cosymplectic_family(etas, omegas, v)?;
    check_metric(g, dim)?;
    let k = omegas.len();
    let d = common_kernel(dim, etas.iter().chain(omegas))?;
    let kernel = common_kernel(dim, omegas)?;
    if kernel.dim() != k + d.dim() {
        return Err(hypothesis(
            "rank ⋂ ker ω^α = k + d",
            format!("rank is {}, k + d = {}", kernel.dim(), k + d.dim()),
        ));
    }
    let r = half_ranks(omegas)?;
    check_v_shape(omegas, v, &d, &r)?;
    check_splitting(omegas, v, split, &d, &r)?;
    let (reeb, freedom) = reeb_solve(etas, omegas)?;
    let h = common_kernel(dim, etas)?;
    let local = Restricted::new(&h, omegas)?;
    let v_local = local.subspace(&h, v)?;
    let parts_local = split
        .parts
        .iter()
        .map(|p| local.subspace(&h, p))
        .collect::<Result<Vec<_>>>()?;
    let d_local = local.subspace(&h, &d)?;
    let out = polarised_frame(
        &local.omegas,
        &v_local,
        &parts_local,
        &d_local,
        &local.metric(g)?,
    )?;
    let mut columns = reeb.clone();
    for c in &out.columns {
        columns.push(local.lift(c)?);
    }
    let template = CanonicalTemplate::KPrecosymplectic {
        n: out.n,
        index_sets: out.index_sets,
        d: d.dim(),
    };
    finish(
        &columns,
        template,
        etas,
        omegas,
        Some((reeb, freedom)),
        Some(split.clone()),
    )
}
