use std::fmt;

use num_traits::One;

use crate::exterior::AltForm;
use crate::kind::StructureKind;
use crate::linalg::Rat;

/// A model structure on `ℚ^dim`, written in the standard dual basis.
///
/// Column conventions (0-based):
/// * (pre)symplectic: pairs `(q¹,p₁,q²,p₂,…)`, then the kernel;
/// * (pre)cosymplectic: the same, followed by `t` last;
/// * k-(pre)symplectic: `y¹…yⁿ`, then `y^α_μ` for `μ ∈ I_α` for each `α` in
///   turn, then the kernel `z¹…z^d`;
/// * k-(pre)cosymplectic: `x¹…x^k` first, then the k-(pre)symplectic layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalTemplate {
    Symplectic {
        n: usize,
    },
    Presymplectic {
        r: usize,
        d: usize,
    },
    Cosymplectic {
        n: usize,
    },
    Precosymplectic {
        r: usize,
        d: usize,
    },
    KSymplectic {
        k: usize,
        n: usize,
    },
    /// `index_sets[α]` is `I_α`, sorted, 0-based.
    KPresymplectic {
        n: usize,
        index_sets: Vec<Vec<usize>>,
        d: usize,
    },
    KCosymplectic {
        k: usize,
        n: usize,
    },
    KPrecosymplectic {
        n: usize,
        index_sets: Vec<Vec<usize>>,
        d: usize,
    },
}

/// The model forms of a template.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateForms {
    pub etas: Vec<AltForm>,
    pub omegas: Vec<AltForm>,
}

fn pair(dim: usize, i: usize, j: usize) -> AltForm {
    AltForm::from_terms(dim, 2, [(vec![i, j], Rat::one())]).expect("indices in range")
}

fn sum(dim: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> AltForm {
    pairs
        .into_iter()
        .fold(AltForm::zero(dim, 2), |acc, (i, j)| {
            acc.add(&pair(dim, i, j)).expect("same shape")
        })
}

fn polarised_omegas(dim: usize, shift: usize, n: usize, index_sets: &[Vec<usize>]) -> Vec<AltForm> {
    let mut offset = shift + n;
    index_sets
        .iter()
        .map(|set| {
            let f = sum(
                dim,
                set.iter()
                    .enumerate()
                    .map(|(j, &mu)| (shift + mu, offset + j)),
            );
            offset += set.len();
            f
        })
        .collect()
}

impl CanonicalTemplate {
    pub fn kind(&self) -> StructureKind {
        match self {
            CanonicalTemplate::Symplectic { .. } => StructureKind::Symplectic,
            CanonicalTemplate::Presymplectic { .. } => StructureKind::Presymplectic,
            CanonicalTemplate::Cosymplectic { .. } => StructureKind::Cosymplectic,
            CanonicalTemplate::Precosymplectic { .. } => StructureKind::Precosymplectic,
            CanonicalTemplate::KSymplectic { .. } => StructureKind::KSymplectic,
            CanonicalTemplate::KPresymplectic { .. } => StructureKind::KPresymplectic,
            CanonicalTemplate::KCosymplectic { .. } => StructureKind::KCosymplectic,
            CanonicalTemplate::KPrecosymplectic { .. } => StructureKind::KPrecosymplectic,
        }
    }

    /// Number of two-forms.
    pub fn k(&self) -> usize {
        match self {
            CanonicalTemplate::KSymplectic { k, .. }
            | CanonicalTemplate::KCosymplectic { k, .. } => *k,
            CanonicalTemplate::KPresymplectic { index_sets, .. }
            | CanonicalTemplate::KPrecosymplectic { index_sets, .. } => index_sets.len(),
            _ => 1,
        }
    }

    /// For the (pre)(co)symplectic families this is the number of conjugate
    /// pairs; for the k-families it is the number of base coordinates `yⁱ`.
    pub fn n(&self) -> usize {
        match self {
            CanonicalTemplate::Symplectic { n }
            | CanonicalTemplate::Cosymplectic { n }
            | CanonicalTemplate::KSymplectic { n, .. }
            | CanonicalTemplate::KCosymplectic { n, .. }
            | CanonicalTemplate::KPresymplectic { n, .. }
            | CanonicalTemplate::KPrecosymplectic { n, .. } => *n,
            CanonicalTemplate::Presymplectic { r, .. }
            | CanonicalTemplate::Precosymplectic { r, .. } => *r,
        }
    }

    /// Half-ranks `r_α` of the two-forms.
    pub fn r_alpha(&self) -> Vec<usize> {
        match self {
            CanonicalTemplate::Symplectic { n } | CanonicalTemplate::Cosymplectic { n } => vec![*n],
            CanonicalTemplate::Presymplectic { r, .. }
            | CanonicalTemplate::Precosymplectic { r, .. } => vec![*r],
            CanonicalTemplate::KSymplectic { k, n } | CanonicalTemplate::KCosymplectic { k, n } => {
                vec![*n; *k]
            }
            CanonicalTemplate::KPresymplectic { index_sets, .. }
            | CanonicalTemplate::KPrecosymplectic { index_sets, .. } => {
                index_sets.iter().map(Vec::len).collect()
            }
        }
    }

    pub fn d(&self) -> usize {
        match self {
            CanonicalTemplate::Presymplectic { d, .. }
            | CanonicalTemplate::Precosymplectic { d, .. }
            | CanonicalTemplate::KPresymplectic { d, .. }
            | CanonicalTemplate::KPrecosymplectic { d, .. } => *d,
            _ => 0,
        }
    }

    pub fn index_sets(&self) -> Option<&[Vec<usize>]> {
        match self {
            CanonicalTemplate::KPresymplectic { index_sets, .. }
            | CanonicalTemplate::KPrecosymplectic { index_sets, .. } => Some(index_sets),
            _ => None,
        }
    }

    /// The same template with the `y` indices relabelled into the order the
    /// normal form produces: indices lying in more of the `I_α` first, ties
    /// broken by the bit mask of the `α` containing them. Two templates with
    /// equal `canonical()` differ by a permutation of the `y` labels only.
    pub fn canonical(&self) -> CanonicalTemplate {
        match self {
            CanonicalTemplate::KPresymplectic { n, index_sets, d } => {
                CanonicalTemplate::KPresymplectic {
                    n: *n,
                    index_sets: canonical_index_sets(*n, index_sets),
                    d: *d,
                }
            }
            CanonicalTemplate::KPrecosymplectic { n, index_sets, d } => {
                CanonicalTemplate::KPrecosymplectic {
                    n: *n,
                    index_sets: canonical_index_sets(*n, index_sets),
                    d: *d,
                }
            }
            other => other.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        let r: usize = self.r_alpha().iter().sum();
        match self {
            CanonicalTemplate::Symplectic { n } => 2 * n,
            CanonicalTemplate::Presymplectic { r, d } => 2 * r + d,
            CanonicalTemplate::Cosymplectic { n } => 2 * n + 1,
            CanonicalTemplate::Precosymplectic { r, d } => 2 * r + d + 1,
            CanonicalTemplate::KSymplectic { k, n } => n * (k + 1),
            CanonicalTemplate::KCosymplectic { k, n } => n * (k + 1) + k,
            CanonicalTemplate::KPresymplectic { n, d, .. } => n + r + d,
            CanonicalTemplate::KPrecosymplectic { n, d, .. } => n + r + d + self.k(),
        }
    }

    pub fn forms(&self) -> TemplateForms {
        let dim = self.dim();
        let pairs = |r: usize| sum(dim, (0..r).map(|i| (2 * i, 2 * i + 1)));
        let full = |k: usize, n: usize| vec![(0..n).collect::<Vec<_>>(); k];
        match self {
            CanonicalTemplate::Symplectic { n } => TemplateForms {
                etas: vec![],
                omegas: vec![pairs(*n)],
            },
            CanonicalTemplate::Presymplectic { r, .. } => TemplateForms {
                etas: vec![],
                omegas: vec![pairs(*r)],
            },
            CanonicalTemplate::Cosymplectic { n } => TemplateForms {
                etas: vec![AltForm::basis_covector(dim, dim - 1)],
                omegas: vec![pairs(*n)],
            },
            CanonicalTemplate::Precosymplectic { r, .. } => TemplateForms {
                etas: vec![AltForm::basis_covector(dim, dim - 1)],
                omegas: vec![pairs(*r)],
            },
            CanonicalTemplate::KSymplectic { k, n } => TemplateForms {
                etas: vec![],
                omegas: polarised_omegas(dim, 0, *n, &full(*k, *n)),
            },
            CanonicalTemplate::KPresymplectic { n, index_sets, .. } => TemplateForms {
                etas: vec![],
                omegas: polarised_omegas(dim, 0, *n, index_sets),
            },
            CanonicalTemplate::KCosymplectic { k, n } => TemplateForms {
                etas: (0..*k).map(|a| AltForm::basis_covector(dim, a)).collect(),
                omegas: polarised_omegas(dim, *k, *n, &full(*k, *n)),
            },
            CanonicalTemplate::KPrecosymplectic { n, index_sets, .. } => {
                let k = index_sets.len();
                TemplateForms {
                    etas: (0..k).map(|a| AltForm::basis_covector(dim, a)).collect(),
                    omegas: polarised_omegas(dim, k, *n, index_sets),
                }
            }
        }
    }
}

impl fmt::Display for CanonicalTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalTemplate::Symplectic { n } | CanonicalTemplate::Cosymplectic { n } => {
                write!(f, "{}(n={n})", self.kind())
            }
            CanonicalTemplate::Presymplectic { r, d }
            | CanonicalTemplate::Precosymplectic { r, d } => {
                write!(f, "{}(r={r}, d={d})", self.kind())
            }
            CanonicalTemplate::KSymplectic { k, n } | CanonicalTemplate::KCosymplectic { k, n } => {
                write!(f, "{}(k={k}, n={n})", self.kind())
            }
            CanonicalTemplate::KPresymplectic { n, index_sets, d }
            | CanonicalTemplate::KPrecosymplectic { n, index_sets, d } => {
                let sets: Vec<String> = index_sets
                    .iter()
                    .map(|s| {
                        let inner: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
                        format!("{{{}}}", inner.join(","))
                    })
                    .collect();
                write!(
                    f,
                    "{}(k={}, n={n}, I=[{}], d={d})",
                    self.kind(),
                    index_sets.len(),
                    sets.join(", ")
                )
            }
        }
    }
}

/// Membership mask of `i`: bit `α` set when `i ∈ I_α`.
fn membership(sets: &[Vec<usize>], i: usize) -> u32 {
    sets.iter()
        .enumerate()
        .filter(|(_, s)| s.contains(&i))
        .fold(0, |m, (a, _)| m | (1 << a))
}

/// Sort key shared by `canonical` and the adapted basis.
pub(crate) fn mask_order(mask: u32) -> (std::cmp::Reverse<u32>, u32) {
    (std::cmp::Reverse(mask.count_ones()), mask)
}

fn canonical_index_sets(n: usize, sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| mask_order(membership(sets, i)));
    (0..sets.len())
        .map(|a| {
            (0..n)
                .filter(|&pos| sets[a].contains(&order[pos]))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> AltForm {
        AltForm::basis_covector(n, i)
    }

    #[test]
    fn canonical_relabels_y() {
        let t = CanonicalTemplate::KPresymplectic {
            n: 4,
            index_sets: vec![vec![2, 3], vec![0, 1, 3]],
            d: 1,
        };
        // masks: y0,y1 -> {2}, y2 -> {1}, y3 -> {1,2}
        let c = t.canonical();
        assert_eq!(c.index_sets().unwrap(), &[vec![0, 1], vec![0, 2, 3]]);
        assert_eq!(c.canonical(), c);
        assert_eq!(c.dim(), t.dim());
    }

    #[test]
    fn k_symplectic_model() {
        let t = CanonicalTemplate::KSymplectic { k: 2, n: 1 };
        let f = t.forms();
        assert_eq!(f.omegas[0], e(3, 0).wedge(&e(3, 1)).unwrap());
        assert_eq!(f.omegas[1], e(3, 0).wedge(&e(3, 2)).unwrap());
        let t = CanonicalTemplate::KSymplectic { k: 2, n: 2 };
        let om = &t.forms().omegas;
        let expect = e(6, 1)
            .wedge(&e(6, 5))
            .unwrap()
            .add(&e(6, 0).wedge(&e(6, 4)).unwrap())
            .unwrap();
        assert_eq!(om[1], expect);
    }

    #[test]
    fn k_cosymplectic_model() {
        let f = CanonicalTemplate::KCosymplectic { k: 2, n: 1 }.forms();
        assert_eq!(f.etas, vec![e(5, 0), e(5, 1)]);
        assert_eq!(f.omegas[0], e(5, 2).wedge(&e(5, 3)).unwrap());
        assert_eq!(f.omegas[1], e(5, 2).wedge(&e(5, 4)).unwrap());
    }

    #[test]
    fn precosymplectic_puts_time_last() {
        let t = CanonicalTemplate::Precosymplectic { r: 1, d: 1 };
        let f = t.forms();
        assert_eq!(t.dim(), 4);
        assert_eq!(f.etas[0], e(4, 3));
        assert_eq!(f.omegas[0], e(4, 0).wedge(&e(4, 1)).unwrap());
    }

    #[test]
    fn k_presymplectic_index_sets() {
        let t = CanonicalTemplate::KPresymplectic {
            n: 2,
            index_sets: vec![vec![0], vec![1]],
            d: 0,
        };
        let f = t.forms();
        assert_eq!(f.omegas[0], e(4, 0).wedge(&e(4, 2)).unwrap());
        assert_eq!(f.omegas[1], e(4, 1).wedge(&e(4, 3)).unwrap());
        assert_eq!(
            t.to_string(),
            "k-presymplectic(k=2, n=2, I=[{1}, {2}], d=0)"
        );
    }
}
