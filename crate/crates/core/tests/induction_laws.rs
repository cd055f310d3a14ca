use std::sync::Arc;

use proptest::prelude::*;

use kac_core::algebra::{parse_algebra, LieSuperalgebra, Parity};
use kac_core::analysis::{hom_space, oracle_submodules, OracleConfig};
use kac_core::induction::{
    coinduced_module, d_eigenspaces, induced, invariants, kac_module, opposite_kac_module,
    wedge_layer, Convention, Side,
};
use kac_core::linalg::{q, Rational, Subspace};
use kac_core::module::{simple_g0_module, FinDimModule};
use kac_core::roots::{dominant_grid, Weight};

fn simple(g: &Arc<LieSuperalgebra>, lambda: &Weight) -> FinDimModule {
    simple_g0_module(g, lambda, Parity::Even).unwrap()
}

fn family(text: &str, lo: i64, hi: i64) -> (Arc<LieSuperalgebra>, Vec<FinDimModule>) {
    let g = parse_algebra(text).unwrap();
    let modules = dominant_grid(&g, lo, hi)
        .unwrap()
        .iter()
        .map(|l| simple(&g, l))
        .collect();
    (g, modules)
}

#[test]
fn frobenius_reciprocity_for_kac_modules() {
    for (text, lo, hi) in [("gl(1|1)", -1, 1), ("gl(2|1)", 0, 1)] {
        let (g, modules) = family(text, lo, hi);
        for v in &modules {
            let k = kac_module(&g, v).unwrap();
            for w in &modules {
                for m in [
                    opposite_kac_module(&g, w).unwrap(),
                    kac_module(&g, w).unwrap(),
                    kac_module(&g, w).unwrap().parity_shift(),
                ] {
                    let (_, fixed) = invariants(&m, 1).unwrap();
                    let lhs = hom_space(&k, &m).unwrap().len();
                    let rhs = hom_space(v, &fixed).unwrap().len();
                    assert_eq!(lhs, rhs, "{text}");
                }
            }
        }
    }
}

#[test]
fn frobenius_reciprocity_for_opposite_kac_modules() {
    let (g, modules) = family("gl(1|1)", -1, 1);
    for v in &modules {
        let k = opposite_kac_module(&g, v).unwrap();
        for w in &modules {
            for m in [
                kac_module(&g, w).unwrap(),
                opposite_kac_module(&g, w).unwrap(),
            ] {
                let (_, fixed) = invariants(&m, -1).unwrap();
                assert_eq!(
                    hom_space(&k, &m).unwrap().len(),
                    hom_space(v, &fixed).unwrap().len()
                );
            }
        }
    }
}

#[test]
fn kac_module_weights_match_cartan_eigenvalues() {
    // e_{2,1} has weight −ε₁ + ε₂, read off from commutators with the diagonal units
    let g = parse_algebra("gl(1|1)").unwrap();
    let k = kac_module(&g, &simple(&g, &Weight::from_ints(&[1, 0]))).unwrap();
    let h1 = k.action(g.index_of("e_{1,1}").unwrap()).unwrap();
    let h2 = k.action(g.index_of("e_{2,2}").unwrap()).unwrap();
    let observed: Vec<(Rational, Rational)> =
        (0..2).map(|i| (h1.get(i, i), h2.get(i, i))).collect();
    assert_eq!(observed, [(q(1), q(0)), (q(0), q(1))]);
    let kp = opposite_kac_module(&g, &simple(&g, &Weight::from_ints(&[0, 1]))).unwrap();
    assert_eq!(
        kp.weights().unwrap(),
        [Weight::from_ints(&[0, 1]), Weight::from_ints(&[1, 0])]
    );
}

#[test]
fn submodules_split_along_grading_layers() {
    let cfg = OracleConfig::default();
    for (text, lo, hi) in [("gl(1|1)", -2, 2), ("gl(2|1)", -1, 1), ("p(2)", 0, 1)] {
        let (g, modules) = family(text, lo, hi);
        for v in &modules {
            let k = kac_module(&g, v).unwrap();
            let layers = d_eigenspaces(&k).unwrap();
            for sub in oracle_submodules(&k, &cfg) {
                let pieces = layers.iter().fold(Subspace::zero(k.dim()), |acc, (_, e)| {
                    acc.sum(&sub.intersection(e).unwrap()).unwrap()
                });
                assert_eq!(pieces, sub, "{text}");
            }
        }
    }
}

#[test]
fn grading_eigenvalues_are_affine_in_the_wedge_degree() {
    for (text, weight) in [
        ("gl(2|1)", "1,0|2"),
        ("gl(1|2)", "0|1,0"),
        ("osp(2|2)", "1|1"),
        ("p(2)", "1,0"),
    ] {
        let g = parse_algebra(text).unwrap();
        let v = simple(&g, &kac_core::roots::parse_weight(&g, weight).unwrap());
        let k = kac_module(&g, &v).unwrap();
        let layers = d_eigenspaces(&k).unwrap();
        let top = g.indices_of_degree(-1).len();
        assert_eq!(layers.len(), top + 1, "{text}");
        let layer_of = |space: &Subspace| {
            (0..=top).find(|&i| wedge_layer(&g, v.dim(), Side::NonNegative, i) == *space)
        };
        let mut by_degree: Vec<(usize, Rational)> = layers
            .iter()
            .map(|(r, s)| (layer_of(s).expect("a wedge layer"), r.clone()))
            .collect();
        by_degree.sort();
        let step = &by_degree[1].1 - &by_degree[0].1;
        assert!(
            by_degree.windows(2).all(|w| &w[1].1 - &w[0].1 == step),
            "{text}"
        );
    }
}

#[test]
fn parity_shift_flips_kac_parities() {
    let g = parse_algebra("gl(2|1)").unwrap();
    let k = kac_module(&g, &simple(&g, &Weight::from_ints(&[1, 0, 0]))).unwrap();
    let shifted = k.parity_shift();
    assert!(k
        .parities()
        .iter()
        .zip(shifted.parities())
        .all(|(a, b)| a.flip() == *b));
    assert_eq!(shifted.parity_shift(), k);
}

#[test]
fn coinduced_from_trivial_gl11() {
    let g = parse_algebra("gl(1|1)").unwrap();
    let v = simple(&g, &Weight::from_ints(&[0, 0]));
    for side in [Side::NonNegative, Side::NonPositive] {
        for convention in [Convention::Super, Convention::Usual] {
            assert_eq!(coinduced_module(&g, &v, side, convention).unwrap().dim(), 2);
        }
    }
}

fn gl21_weight() -> impl Strategy<Value = Weight> {
    (-2i64..=2, 0i64..=2, -2i64..=2).prop_map(|(b, gap, c)| Weight::from_ints(&[b + gap, b, c]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn induced_and_coinduced_modules_are_representations(lambda in gl21_weight(), odd in any::<bool>()) {
        let g = parse_algebra("gl(2|1)").unwrap();
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let v = simple_g0_module(&g, &lambda, parity).unwrap();
        for side in [Side::NonNegative, Side::NonPositive] {
            let m = induced(&g, &v, side).unwrap();
            prop_assert!(m.validate().is_ok());
            prop_assert_eq!(m.dim(), 4 * v.dim());
            for convention in [Convention::Super, Convention::Usual] {
                prop_assert!(coinduced_module(&g, &v, side, convention).unwrap().validate().is_ok());
            }
        }
    }

    #[test]
    fn bottom_layer_is_the_odd_invariants(lambda in gl21_weight()) {
        let g = parse_algebra("gl(2|1)").unwrap();
        let v = simple(&g, &lambda);
        let k = kac_module(&g, &v).unwrap();
        prop_assert_eq!(invariants(&k, -1).unwrap().0, wedge_layer(&g, v.dim(), Side::NonNegative, 2));
        let kp = opposite_kac_module(&g, &v).unwrap();
        prop_assert_eq!(invariants(&kp, 1).unwrap().0, wedge_layer(&g, v.dim(), Side::NonPositive, 2));
    }
}
