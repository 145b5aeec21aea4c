mod common;

use common::*;
use darboux::cli::commands::normal_form;
use darboux::cli::{parse_linear, serialize_spec};
use darboux::kind::StructureKind;
use darboux::linalg::random_invertible;
use darboux::normal_form::CanonicalTemplate;
use darboux::polyforms::pullback_map;
use darboux::verifier::classify;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

const FAMILIES: [StructureKind; 8] = [
    StructureKind::Symplectic,
    StructureKind::Presymplectic,
    StructureKind::Cosymplectic,
    StructureKind::Precosymplectic,
    StructureKind::KSymplectic,
    StructureKind::KPresymplectic,
    StructureKind::KCosymplectic,
    StructureKind::KPrecosymplectic,
];

fn family() -> impl Strategy<Value = StructureKind> {
    prop::sample::select(FAMILIES.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), deg in 0usize..=2) {
        let mut g = rng(seed);
        let a = random_polyform(&mut g, &chart(&["a", "b", "c", "d"]), deg);
        prop_assert!(a.d().d().is_zero());
    }

    #[test]
    fn map_pullback_commutes_with_d_and_wedge(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (src, dst) = (chart(&["u", "v"]), chart(&["x", "y", "z"]));
        let phi = random_map(&mut g, &src, &dst);
        let a = random_polyform(&mut g, &dst, 1);
        let b = random_polyform(&mut g, &dst, 1);
        let pa = pullback_map(&phi, &a).unwrap();
        prop_assert_eq!(pullback_map(&phi, &a.d()).unwrap(), pa.d());
        prop_assert_eq!(
            pullback_map(&phi, &a.wedge(&b).unwrap()).unwrap(),
            pa.wedge(&pullback_map(&phi, &b).unwrap()).unwrap()
        );
    }

    #[test]
    fn linear_pullback_is_contravariant(seed in any::<u64>(), deg in 0usize..=3) {
        let mut g = rng(seed);
        let a = random_form(&mut g, 4, deg, 0.6);
        let l = random_invertible(&mut g, 4, 3);
        let m = random_invertible(&mut g, 4, 3);
        let direct = a.pullback(&l.mul(&m).unwrap()).unwrap();
        prop_assert_eq!(direct, a.pullback(&l).unwrap().pullback(&m).unwrap());
    }

    #[test]
    fn verdicts_ignore_the_basis(seed in any::<u64>(), kind in family()) {
        let mut g = rng(seed);
        let t = random_template(&mut g, kind);
        let mut spec = template_spec(&t);
        if g.gen_bool(0.5) {
            let pos = g.gen_range(0..spec.omegas.len());
            spec.omegas[pos] = random_form(&mut g, spec.dim, 2, 0.3);
        }
        let l = random_invertible(&mut g, spec.dim, 4);
        let before = classify(&spec).unwrap();
        let after = classify(&spec.pulled_back(&l).unwrap()).unwrap();
        prop_assert_eq!(before.accepted_kinds(), after.accepted_kinds());
        for (x, y) in before.verdicts.iter().zip(&after.verdicts) {
            prop_assert_eq!(&x.params, &y.params);
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), kind in family()) {
        let mut g = rng(seed);
        let t = random_template(&mut g, kind);
        let (spec, _) = disguised(&mut g, &t);
        prop_assert_eq!(parse_linear(&serialize_spec(&spec)).unwrap(), spec);
    }

    #[test]
    fn normal_form_recovers_the_canonical_template(seed in any::<u64>(), kind in family()) {
        let mut g = rng(seed);
        let t = random_template(&mut g, kind);
        let (spec, _) = disguised(&mut g, &t);
        let report = normal_form(&spec).unwrap();
        prop_assert!(report.verified);
        prop_assert_eq!(report.template, t.canonical());
    }

    #[test]
    fn canonical_forgets_y_labels(seed in any::<u64>(), k in 1usize..=3, n_pick in 0usize..6) {
        let n = 1 + n_pick % (2 * k);
        let mut g = rng(seed);
        let sets = random_index_sets(&mut g, k, n);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut g);
        let moved: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s.iter().map(|&i| perm[i]).collect();
                v.sort();
                v
            })
            .collect();
        let a = CanonicalTemplate::KPresymplectic { n, index_sets: sets, d: 1 };
        let b = CanonicalTemplate::KPresymplectic { n, index_sets: moved, d: 1 };
        prop_assert_eq!(a.canonical(), b.canonical());
    }
}
