//! Simple `g₀`-modules `V(λ)` cut out of tensor products of exterior powers.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::{invariant_closure, FinDimModule, Scope};
use crate::algebra::{build_algebra, AlgebraSpec, Family, LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::linalg::{as_i64, qf, sign, RatMatrix, Rational, SparseVec};
use crate::roots::{coroot_pairing, is_even_dominant_integral, root_data, Weight};

/// Derivation action of `a` on `Λ^j` of its space, with subsets in lexicographic order.
pub fn exterior_power_action(a: &RatMatrix, j: usize) -> (RatMatrix, Vec<Vec<usize>>) {
    let k = a.nrows();
    let subsets: Vec<Vec<usize>> = (0..k).combinations(j).collect();
    let index: HashMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut out = RatMatrix::zeros(subsets.len(), subsets.len());
    for (col, set) in subsets.iter().enumerate() {
        for &s in set {
            for (&t, c) in a.column(s) {
                if t == s {
                    out.add_at(col, col, c);
                    continue;
                }
                if set.contains(&t) {
                    continue;
                }
                let (lo, hi) = if s < t { (s, t) } else { (t, s) };
                let between = set.iter().filter(|&&x| x > lo && x < hi).count();
                let mut image: Vec<usize> =
                    set.iter().map(|&x| if x == s { t } else { x }).collect();
                image.sort_unstable();
                out.add_at(index[image.as_slice()], col, &(c * sign(between)));
            }
        }
    }
    (out, subsets)
}

fn coordinate_weight(g: &LieSuperalgebra, r: usize) -> Weight {
    Weight(g.frame().iter().map(|d| d[r].clone()).collect())
}

/// Restriction of the `g₀` realization to the invariant coordinate set `coords`.
fn block_matrices(g: &LieSuperalgebra, coords: &[usize]) -> Result<Vec<Option<RatMatrix>>> {
    let mut out = Vec::with_capacity(g.dim());
    for b in g.basis() {
        if b.parity != Parity::Even {
            out.push(None);
            continue;
        }
        for &c in coords {
            if b.matrix.column(c).indices().any(|r| !coords.contains(&r)) {
                return Err(Error::Validation(format!(
                    "{} does not preserve the block",
                    b.label
                )));
            }
        }
        out.push(Some(b.matrix.submatrix(coords, coords)));
    }
    Ok(out)
}

/// `Λ^j` of the coordinate block together with the index of its top vector.
fn fundamental(
    g: &Arc<LieSuperalgebra>,
    coords: &[usize],
    j: usize,
) -> Result<(FinDimModule, usize)> {
    let restricted = block_matrices(g, coords)?;
    let mut subsets = Vec::new();
    let actions: Vec<Option<RatMatrix>> = restricted
        .iter()
        .map(|a| {
            a.as_ref().map(|a| {
                let (m, s) = exterior_power_action(a, j);
                subsets = s;
                m
            })
        })
        .collect();
    let weights = subsets
        .iter()
        .map(|s| {
            s.iter().fold(Weight::zero(g.rank()), |acc, &t| {
                &acc + &coordinate_weight(g, coords[t])
            })
        })
        .collect();
    let top = subsets
        .iter()
        .position(|s| *s == (0..j).collect::<Vec<_>>())
        .expect("initial subset");
    let parities = vec![Parity::Even; subsets.len()];
    let module = FinDimModule::from_parts(
        g.clone(),
        Scope::Even,
        actions,
        parities,
        Some(weights),
        None,
    )?;
    Ok((module, top))
}

/// `x ↦ s · tr(x|_block)`.
fn block_character(
    g: &Arc<LieSuperalgebra>,
    coords: &[usize],
    s: &Rational,
) -> Result<FinDimModule> {
    let restricted = block_matrices(g, coords)?;
    let actions = restricted
        .iter()
        .map(|a| a.as_ref().map(|a| RatMatrix::scalar(1, &(a.trace() * s))))
        .collect();
    let weight = coords
        .iter()
        .fold(Weight::zero(g.rank()), |acc, &t| {
            &acc + &coordinate_weight(g, t)
        })
        .scaled(s);
    FinDimModule::from_parts(
        g.clone(),
        Scope::Even,
        actions,
        vec![Parity::Even],
        Some(vec![weight]),
        None,
    )
}

/// Highest component of `current ⊗ next`, generated by the product of top vectors.
fn cartan_product(
    current: (FinDimModule, usize),
    next: (FinDimModule, usize),
) -> Result<(FinDimModule, usize)> {
    let (a, top_a) = current;
    let (b, top_b) = next;
    let product = a.tensor(&b)?;
    let top = top_a * b.dim() + top_b;
    let span = invariant_closure(
        &product.action_matrices(),
        &[SparseVec::unit(top)],
        product.dim(),
    );
    let position = span
        .pivots()
        .iter()
        .position(|&p| p == top)
        .ok_or_else(|| Error::Validation("top vector is not a pivot of its closure".into()))?;
    Ok((product.submodule(&span)?, position))
}

enum Block {
    /// `gl(k)` on the coordinates, weight given in the same order.
    General(Vec<usize>, Vec<Rational>),
    /// `sp(2k)` on `a_1..a_k, b_1..b_k`, weight on the `a`'s.
    Symplectic(Vec<usize>, Vec<Rational>),
    /// One coordinate scaled by the given value.
    Scalar(usize, Rational),
}

fn block_module(g: &Arc<LieSuperalgebra>, block: &Block) -> Result<FinDimModule> {
    let start = || super::trivial(g, Scope::Even);
    let mut current = (start(), 0);
    match block {
        Block::General(coords, mu) => {
            let shift = mu.last().cloned().unwrap_or_else(Rational::zero);
            let partition: Vec<Rational> = mu.iter().map(|x| x - &shift).collect();
            for j in 1..coords.len() {
                let times = as_i64(&(&partition[j - 1] - &partition[j])).unwrap_or(0);
                for _ in 0..times {
                    current = cartan_product(current, fundamental(g, coords, j)?)?;
                }
            }
            if !shift.is_zero() {
                current = (
                    current.0.tensor(&block_character(g, coords, &shift)?)?,
                    current.1,
                );
            }
        }
        Block::Symplectic(coords, mu) => {
            for j in 1..=mu.len() {
                let next = mu.get(j).cloned().unwrap_or_else(Rational::zero);
                let times = as_i64(&(&mu[j - 1] - &next)).unwrap_or(0);
                for _ in 0..times {
                    current = cartan_product(current, fundamental(g, coords, j)?)?;
                }
            }
        }
        Block::Scalar(coord, value) => {
            current = (block_character(g, &[*coord], value)?, 0);
        }
    }
    Ok(current.0)
}

/// The simple `g₀`-module of highest weight `λ` with top vector of the given parity.
pub fn simple_g0_module(
    g: &Arc<LieSuperalgebra>,
    lambda: &Weight,
    parity: Parity,
) -> Result<FinDimModule> {
    if !is_even_dominant_integral(g, lambda)? {
        return Err(Error::NotDominant(format!(
            "{lambda} is not dominant integral for the even part"
        )));
    }
    let spec = g.spec();
    let coords = lambda.coords();
    let module = match spec.family {
        Family::Gl => {
            let (m, n) = (spec.m, spec.n);
            let blocks = [
                Block::General((0..m).collect(), coords[..m].to_vec()),
                Block::General((m..m + n).collect(), coords[m..].to_vec()),
            ];
            tensor_blocks(g, &blocks)?
        }
        Family::Osp2 => {
            let n = spec.n;
            let blocks = [
                Block::Scalar(0, coords[0].clone()),
                Block::Symplectic((2..2 + 2 * n).collect(), coords[1..].to_vec()),
            ];
            tensor_blocks(g, &blocks)?
        }
        Family::P => tensor_blocks(g, &[Block::General((0..spec.n).collect(), coords.to_vec())])?,
        Family::Sl => {
            let parent = build_algebra(AlgebraSpec::gl(spec.m, spec.n))?;
            simple_g0_module(&parent, lambda, Parity::Even)?.restrict(g)?
        }
        Family::PPrime => {
            let parent = build_algebra(AlgebraSpec::p(spec.n))?;
            simple_g0_module(&parent, lambda, Parity::Even)?.restrict(g)?
        }
        Family::SlNnModCenter => {
            let parent = build_algebra(AlgebraSpec::sl(spec.n, spec.n))?;
            simple_g0_module(&parent, lambda, Parity::Even)?.descend_to_quotient(g)?
        }
    };
    module.validate()?;
    Ok(module.with_uniform_shift(parity))
}

fn tensor_blocks(g: &Arc<LieSuperalgebra>, blocks: &[Block]) -> Result<FinDimModule> {
    let mut out = super::trivial(g, Scope::Even);
    for block in blocks {
        out = out.tensor(&block_module(g, block)?)?;
    }
    Ok(out)
}

/// Weyl dimension formula for the even part.
pub fn weyl_dimension(g: &LieSuperalgebra, lambda: &Weight) -> Result<Rational> {
    let data = root_data(g)?;
    let positive: Vec<Weight> = data
        .positive(Parity::Even)
        .map(|r| r.weight.clone())
        .collect();
    let rho0 = positive
        .iter()
        .fold(Weight::zero(g.rank()), |acc, a| &acc + a)
        .scaled(&qf(1, 2));
    let shifted = lambda + &rho0;
    let mut dim = Rational::one();
    for alpha in &positive {
        dim *= coroot_pairing(g, &shifted, alpha)? / coroot_pairing(g, &rho0, alpha)?;
    }
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::analysis::{is_simple, Verdict};
    use crate::linalg::q;
    use crate::roots::{dominant_grid, parse_weight};

    fn v(text: &str, weight: &str) -> FinDimModule {
        let g = parse_algebra(text).unwrap();
        simple_g0_module(&g, &parse_weight(&g, weight).unwrap(), Parity::Even).unwrap()
    }

    #[test]
    fn small_examples() {
        let m = v("gl(1|1)", "3|-2");
        assert_eq!(m.dim(), 1);
        let g = m.algebra().clone();
        assert_eq!(
            m.action(g.index_of("e_{1,1}").unwrap()).unwrap().get(0, 0),
            q(3)
        );
        assert_eq!(
            m.action(g.index_of("e_{2,2}").unwrap()).unwrap().get(0, 0),
            q(-2)
        );
        assert_eq!(v("gl(2|1)", "1,0|0").dim(), 2);
        assert_eq!(v("gl(2|1)", "2,0|0").dim(), 3);
        assert_eq!(
            simple_g0_module(&g, &Weight(vec![qf(1, 2), q(0)]), Parity::Even)
                .unwrap()
                .dim(),
            1
        );
        let g2 = parse_algebra("gl(2|1)").unwrap();
        assert!(matches!(
            simple_g0_module(&g2, &Weight::from_ints(&[0, 1, 0]), Parity::Even),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn exterior_square_of_natural_gl3() {
        let a = RatMatrix::from_triplets(3, 3, [(0, 1, q(1))]);
        let (m, subsets) = exterior_power_action(&a, 2);
        // e_{1,2} sends e_2∧e_3 to e_1∧e_3
        let from = subsets.iter().position(|s| *s == [1, 2]).unwrap();
        let to = subsets.iter().position(|s| *s == [0, 2]).unwrap();
        assert_eq!(m.get(to, from), q(1));
        let b = RatMatrix::from_triplets(3, 3, [(0, 2, q(1))]);
        let (m, subsets) = exterior_power_action(&b, 2);
        let from = subsets.iter().position(|s| *s == [1, 2]).unwrap();
        let to = subsets.iter().position(|s| *s == [0, 1]).unwrap();
        // e_2∧e_1 = −e_1∧e_2
        assert_eq!(m.get(to, from), q(-1));
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        for (text, lo, hi) in [
            ("gl(2|1)", -2, 2),
            ("gl(3|1)", -1, 1),
            ("osp(2|4)", 0, 2),
            ("p(3)", -1, 1),
            ("gl(2|2)", -1, 1),
        ] {
            let g = parse_algebra(text).unwrap();
            for lambda in dominant_grid(&g, lo, hi).unwrap() {
                let m = simple_g0_module(&g, &lambda, Parity::Even).unwrap();
                assert_eq!(
                    q(m.dim() as i64),
                    weyl_dimension(&g, &lambda).unwrap(),
                    "{text} {lambda}"
                );
            }
        }
    }

    #[test]
    fn highest_weight_space_is_one_dimensional() {
        let g = parse_algebra("osp(2|4)").unwrap();
        let lambda = parse_weight(&g, "1|2,1").unwrap();
        let m = simple_g0_module(&g, &lambda, Parity::Odd).unwrap();
        let weights = m.weights().unwrap();
        assert_eq!(weights.iter().filter(|w| **w == lambda).count(), 1);
        assert!(m.parities().iter().all(|p| p.is_odd()));
        for w in weights.iter().filter(|w| **w != lambda) {
            assert!((&lambda - w).is_lex_positive());
        }
    }

    #[test]
    fn modules_are_absolutely_simple() {
        for (text, weight) in [
            ("gl(2|1)", "2,-1|3"),
            ("osp(2|4)", "0|1,1"),
            ("p(3)", "1,0,0"),
            ("gl(2|2)", "1,0|0,-1"),
        ] {
            let m = v(text, weight);
            assert_eq!(
                is_simple(&m, &Default::default()).verdict,
                Verdict::AbsolutelySimple,
                "{text} {weight}"
            );
        }
    }

    #[test]
    fn restricted_families() {
        let sl = v("sl(2|1)", "1,0|0");
        assert_eq!(sl.dim(), 2);
        let pp = v("p'(2)", "1,0");
        assert_eq!(pp.dim(), 2);
        let q22 = v("sl(2|2)/I", "1,0|0,-1");
        assert_eq!(q22.dim(), 4);
        let g = parse_algebra("sl(2|2)/I").unwrap();
        assert!(simple_g0_module(&g, &parse_weight(&g, "1,0|0,0").unwrap(), Parity::Even).is_err());
    }
}
