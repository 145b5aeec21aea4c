//! Shared generators for the integration tests. All randomness comes from a
//! seeded ChaCha stream so failures reproduce.

#![allow(dead_code)]

use darboux::exterior::{combinations, AltForm};
use darboux::kind::StructureKind;
use darboux::linalg::{int, random_invertible, rat, Mat, Rat, Subspace, Vector};
use darboux::normal_form::{CanonicalTemplate, Splitting};
use darboux::polyforms::{Chart, Poly, PolyForm, PolyMap, PolyVectorField};
use darboux::verifier::StructureSpec;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat<R: Rng>(rng: &mut R) -> Rat {
    let den = [1, 1, 1, 2, 3][rng.gen_range(0..5)];
    rat(rng.gen_range(-4..=4), den)
}

pub fn random_form<R: Rng>(rng: &mut R, dim: usize, degree: usize, density: f64) -> AltForm {
    let mut terms: Vec<(Vec<usize>, Rat)> = Vec::new();
    for idx in combinations(dim, degree) {
        if rng.gen_bool(density) {
            terms.push((idx, small_rat(rng)));
        }
    }
    AltForm::from_terms(dim, degree, terms).unwrap()
}

pub fn span(dim: usize, cols: impl IntoIterator<Item = usize>) -> Subspace {
    Subspace::span(
        dim,
        cols.into_iter()
            .map(|i| darboux::linalg::unit_vector(dim, i))
            .collect(),
    )
    .unwrap()
}

/// The model structure of a template with its polarisation and splitting,
/// following the column layout documented on `CanonicalTemplate`.
pub fn template_spec(t: &CanonicalTemplate) -> StructureSpec {
    let dim = t.dim();
    let forms = t.forms();
    let mut spec = StructureSpec::new(dim);
    spec.kind = Some(t.kind());
    spec.etas = forms.etas;
    spec.omegas = forms.omegas;
    let polarised = |shift: usize, n: usize, sets: &[Vec<usize>], d: usize| {
        let mut offset = shift + n;
        let parts: Vec<Subspace> = sets
            .iter()
            .map(|s| {
                let p = span(dim, offset..offset + s.len());
                offset += s.len();
                p
            })
            .collect();
        let dspace = span(dim, offset..offset + d);
        (span(dim, shift + n..dim), Splitting { parts, d: dspace })
    };
    match t {
        CanonicalTemplate::KSymplectic { k, n } | CanonicalTemplate::KCosymplectic { k, n } => {
            let shift = if t.kind() == StructureKind::KCosymplectic {
                *k
            } else {
                0
            };
            let sets = vec![(0..*n).collect::<Vec<_>>(); *k];
            let (v, split) = polarised(shift, *n, &sets, 0);
            spec.polarisation = Some(v);
            if *k > 1 {
                spec.splitting = Some(split);
            }
        }
        CanonicalTemplate::KPresymplectic { n, index_sets, d } => {
            let (v, split) = polarised(0, *n, index_sets, *d);
            spec.polarisation = Some(v);
            spec.splitting = Some(split);
        }
        CanonicalTemplate::KPrecosymplectic { n, index_sets, d } => {
            let (v, split) = polarised(index_sets.len(), *n, index_sets, *d);
            spec.polarisation = Some(v);
            spec.splitting = Some(split);
        }
        _ => {}
    }
    spec
}

/// Index sets `I_α ⊂ {0..n}` with `|I_α| ≤ 2` covering every index.
/// Loops forever unless `n ≤ 2k`.
pub fn random_index_sets<R: Rng>(rng: &mut R, k: usize, n: usize) -> Vec<Vec<usize>> {
    loop {
        let sets: Vec<Vec<usize>> = (0..k)
            .map(|_| {
                let size = rng.gen_range(1..=n.min(2));
                let mut all: Vec<usize> = (0..n).collect();
                all.shuffle(rng);
                let mut s = all[..size].to_vec();
                s.sort();
                s
            })
            .collect();
        if (0..n).all(|i| sets.iter().any(|s| s.contains(&i))) {
            return sets;
        }
    }
}

/// A random template within the ranges of the round-trip criterion.
pub fn random_template<R: Rng>(rng: &mut R, kind: StructureKind) -> CanonicalTemplate {
    use CanonicalTemplate as T;
    match kind {
        StructureKind::Symplectic => T::Symplectic {
            n: rng.gen_range(1..=3),
        },
        StructureKind::Presymplectic => T::Presymplectic {
            r: rng.gen_range(1..=2),
            d: rng.gen_range(0..=2),
        },
        StructureKind::Cosymplectic => T::Cosymplectic {
            n: rng.gen_range(1..=2),
        },
        StructureKind::Precosymplectic => T::Precosymplectic {
            r: rng.gen_range(1..=2),
            d: rng.gen_range(0..=2),
        },
        StructureKind::KSymplectic => T::KSymplectic {
            k: rng.gen_range(1..=3),
            n: rng.gen_range(1..=3),
        },
        StructureKind::KPresymplectic => {
            let k = rng.gen_range(1..=2);
            let n = rng.gen_range(1..=2 * k);
            T::KPresymplectic {
                n,
                index_sets: random_index_sets(rng, k, n),
                d: rng.gen_range(0..=2),
            }
        }
        StructureKind::KCosymplectic => T::KCosymplectic {
            k: rng.gen_range(1..=2),
            n: rng.gen_range(1..=2),
        },
        StructureKind::KPrecosymplectic => {
            let k = rng.gen_range(1..=2);
            let n = rng.gen_range(1..=2 * k);
            T::KPrecosymplectic {
                n,
                index_sets: random_index_sets(rng, k, n),
                d: rng.gen_range(0..=2),
            }
        }
        StructureKind::Multisymplectic => panic!("no template"),
    }
}

/// A template pushed through a random invertible matrix with entries in
/// `[-5, 5]`, together with that matrix.
pub fn disguised<R: Rng>(rng: &mut R, t: &CanonicalTemplate) -> (StructureSpec, Mat) {
    let l = random_invertible(rng, t.dim(), 5);
    (template_spec(t).pulled_back(&l).unwrap(), l)
}

pub fn chart(names: &[&str]) -> Chart {
    Chart::new(names.iter().copied()).unwrap()
}

pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, terms: usize, max_exp: u32) -> Poly {
    Poly::from_terms(
        nvars,
        (0..rng.gen_range(0..=terms))
            .map(|_| {
                (
                    (0..nvars)
                        .map(|_| rng.gen_range(0..=max_exp))
                        .collect::<Vec<u32>>(),
                    int(rng.gen_range(-3..=3)),
                )
            })
            .collect::<Vec<_>>(),
    )
}

pub fn random_polyform<R: Rng>(rng: &mut R, chart: &Chart, degree: usize) -> PolyForm {
    let n = chart.dim();
    let mut terms: Vec<(Vec<usize>, Poly)> = Vec::new();
    for idx in combinations(n, degree) {
        if rng.gen_bool(0.6) {
            terms.push((idx, random_poly(rng, n, 3, 2)));
        }
    }
    PolyForm::from_terms(chart, degree, terms).unwrap()
}

pub fn random_field<R: Rng>(rng: &mut R, chart: &Chart) -> PolyVectorField {
    let comps = (0..chart.dim())
        .map(|_| random_poly(rng, chart.dim(), 3, 2))
        .collect();
    PolyVectorField::new(chart, comps).unwrap()
}

pub fn random_map<R: Rng>(rng: &mut R, source: &Chart, target: &Chart) -> PolyMap {
    let comps = (0..target.dim())
        .map(|_| random_poly(rng, source.dim(), 3, 2))
        .collect();
    PolyMap::new(source, target, comps).unwrap()
}

/// Plain `a[i][j]` matrix of a two-form: `a(e_i, e_j)`.
pub fn plain_matrix(w: &AltForm) -> Vec<Vec<Rat>> {
    let n = w.dim();
    let mut m = vec![vec![int(0); n]; n];
    for (idx, c) in w.terms() {
        m[idx[0]][idx[1]] = c.clone();
        m[idx[1]][idx[0]] = -c.clone();
    }
    m
}

pub fn plain_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(int(0), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn plain_transpose(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Rank by textbook Gaussian elimination over ℚ, written independently of
/// the crate's fraction-free routine.
pub fn plain_rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != int(0)) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..rows {
            if r != rank && m[r][c] != int(0) {
                let f = &m[r][c] / &pivot;
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn columns(m: &Mat) -> Vec<Vec<Rat>> {
    m.row_vectors()
}

pub fn eval_covector(eta: &AltForm, v: &Vector) -> Rat {
    eta.terms()
        .iter()
        .fold(int(0), |acc, (idx, c)| acc + c * &v[idx[0]])
}
