use std::sync::Arc;

use proptest::prelude::*;

use kac_core::algebra::{parse_algebra, LieSuperalgebra, Parity};
use kac_core::analysis::{
    cyclic_closure, find_isomorphism, hom_space, is_indecomposable, is_simple, simple_top_of_kac,
    socle_of_kac, OracleConfig, Verdict,
};
use kac_core::induction::kac_module;
use kac_core::linalg::SparseVec;
use kac_core::module::{one_dim, simple_g0_module, FinDimModule};
use kac_core::roots::{dominant_grid, Weight};

fn simple(g: &Arc<LieSuperalgebra>, lambda: &Weight) -> FinDimModule {
    simple_g0_module(g, lambda, Parity::Even).unwrap()
}

#[test]
fn atypical_gl11_kac_module() {
    let g = parse_algebra("gl(1|1)").unwrap();
    let k = kac_module(&g, &simple(&g, &Weight::from_ints(&[0, 0]))).unwrap();
    // the lowest vector e_{2,1} ⊗ 1 is killed by everything but the Cartan part
    let lowest = cyclic_closure(&k, &SparseVec::unit(1));
    assert_eq!(lowest.dim(), 1);
    assert!(cyclic_closure(&k, &SparseVec::unit(0)).is_full());
    let cert = is_simple(&k, &OracleConfig::default());
    assert_eq!(cert.verdict, Verdict::NotSimple);
    assert_eq!(cert.submodule(&k).unwrap(), lowest);
}

#[test]
fn tops_are_never_parity_self_dual() {
    let cfg = OracleConfig::default();
    let g = parse_algebra("gl(2|1)").unwrap();
    for lambda in dominant_grid(&g, -1, 1).unwrap() {
        let top = simple_top_of_kac(&g, &simple(&g, &lambda), &cfg)
            .unwrap()
            .top;
        assert!(hom_space(&top, &top.parity_shift()).unwrap().is_empty());
        assert_eq!(hom_space(&top, &top).unwrap().len(), 1);
    }
}

#[test]
fn socles_determine_the_g0_module() {
    let cfg = OracleConfig::default();
    let g = parse_algebra("gl(1|1)").unwrap();
    let weights = dominant_grid(&g, -2, 2).unwrap();
    let socles: Vec<FinDimModule> = weights
        .iter()
        .map(|l| {
            socle_of_kac(&g, &simple(&g, l), &cfg)
                .unwrap()
                .module
                .without_zdegrees()
        })
        .collect();
    for i in 0..weights.len() {
        for j in 0..weights.len() {
            let iso = find_isomorphism(&socles[i], &socles[j], &cfg)
                .unwrap()
                .is_some();
            assert_eq!(iso, i == j, "{} {}", weights[i], weights[j]);
        }
    }
}

#[test]
fn direct_sums_decompose() {
    let cfg = OracleConfig::default();
    let g = parse_algebra("gl(1|1)").unwrap();
    let m = one_dim(&g, &Weight::from_ints(&[1, 2])).unwrap();
    assert!(is_indecomposable(&m, &cfg).unwrap().indecomposable);
    let sum = m.direct_sum(&m).unwrap();
    let cert = is_indecomposable(&sum, &cfg).unwrap();
    assert!(!cert.indecomposable);
    let e = cert.idempotent.unwrap();
    assert_eq!(e.mul(&e), e);
    assert!(!e.is_zero() && e != kac_core::linalg::RatMatrix::identity(2));
}

fn gl21_weight() -> impl Strategy<Value = Weight> {
    (-2i64..=2, 0i64..=2, -2i64..=2).prop_map(|(b, gap, c)| Weight::from_ints(&[b + gap, b, c]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn not_simple_witnesses_are_proper_submodules(lambda in gl21_weight(), seed in any::<u64>()) {
        let g = parse_algebra("gl(2|1)").unwrap();
        let k = kac_module(&g, &simple(&g, &lambda)).unwrap();
        let cert = is_simple(&k, &OracleConfig::with_seed(seed));
        prop_assert_ne!(cert.verdict, Verdict::Inconclusive);
        if cert.verdict == Verdict::NotSimple {
            let sub = cert.submodule(&k).unwrap();
            prop_assert!(!sub.is_zero() && !sub.is_full());
            prop_assert!(k.submodule(&sub).is_ok());
        }
    }

    #[test]
    fn verdicts_do_not_depend_on_the_seed(lambda in gl21_weight(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = parse_algebra("gl(2|1)").unwrap();
        let k = kac_module(&g, &simple(&g, &lambda)).unwrap();
        prop_assert_eq!(
            is_simple(&k, &OracleConfig::with_seed(s1)).verdict,
            is_simple(&k, &OracleConfig::with_seed(s2)).verdict
        );
    }
}
