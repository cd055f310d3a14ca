//! Kac modules, opposite Kac modules and coinduced modules.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::analysis::ModuleMap;
use crate::error::{Error, Result};
use crate::linalg::{charpoly, kernel, sign, RatMatrix, Rational, SparseVec, Subspace};
use crate::module::{FinDimModule, Scope};
use crate::roots::{weight_of_basis, Weight};

/// Which parabolic subalgebra a module is induced or coinduced from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `g≥0`; the free part is `Λ(g₋₁)`.
    NonNegative,
    /// `g≤0`; the free part is `Λ(g₁)`.
    NonPositive,
}

impl Side {
    /// `Z`-degree of the free odd generators.
    pub fn free_degree(self) -> i8 {
        match self {
            Side::NonNegative => -1,
            Side::NonPositive => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Super,
    Usual,
}

/// Basis label `y_S ⊗ v` of an induced or coinduced module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedBasisLabel {
    pub wedge_subset: Vec<usize>,
    pub v_index: usize,
}

/// Subsets of the free odd generators ordered by size, then lexicographically.
#[derive(Clone, Debug)]
struct WedgeLayout {
    free: Vec<usize>,
    position: HashMap<usize, usize>,
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl WedgeLayout {
    fn new(g: &LieSuperalgebra, degree: i8) -> Self {
        let free = g.indices_of_degree(degree);
        let position = free.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let subsets: Vec<Vec<usize>> = (0..=free.len())
            .flat_map(|k| (0..free.len()).combinations(k))
            .collect();
        let index = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Self {
            free,
            position,
            subsets,
            index,
        }
    }

    /// Coordinates of `y_u · y_S`, or `None` when `u ∈ S`.
    fn left_multiply(&self, u: usize, set: &[usize]) -> Option<(usize, Rational)> {
        if set.contains(&u) {
            return None;
        }
        let before = set.iter().filter(|&&s| s < u).count();
        let mut image = set.to_vec();
        image.push(u);
        image.sort_unstable();
        Some((self.index[&image], sign(before)))
    }

    /// Coordinates of `y_S` with the factor at `s` replaced by `u`.
    fn replace(&self, set: &[usize], s: usize, u: usize) -> Option<(usize, Rational)> {
        if u != s && set.contains(&u) {
            return None;
        }
        let (lo, hi) = if s < u { (s, u) } else { (u, s) };
        let between = set.iter().filter(|&&x| x > lo && x < hi).count();
        let mut image: Vec<usize> = set.iter().map(|&x| if x == s { u } else { x }).collect();
        image.sort_unstable();
        Some((self.index[&image], sign(between)))
    }

    fn weight(&self, g: &LieSuperalgebra, set: &[usize]) -> Result<Weight> {
        let mut w = Weight::zero(g.rank());
        for &s in set {
            w = &w + &weight_of_basis(g, self.free[s])?;
        }
        Ok(w)
    }

    /// Free coefficients of an element of the free layer, by position.
    fn free_coords(&self, x: &SparseVec) -> Vec<(usize, Rational)> {
        x.iter()
            .map(|(i, c)| (self.position[i], c.clone()))
            .collect()
    }
}

fn even_actions(v: &FinDimModule, g: &LieSuperalgebra) -> Result<Vec<Option<RatMatrix>>> {
    if v.algebra().spec() != g.spec() {
        return Err(Error::AlgebraMismatch(format!(
            "module over {} used with {}",
            v.algebra().spec(),
            g.spec()
        )));
    }
    (0..g.dim())
        .map(|i| {
            if g.parity(i) == Parity::Even {
                v.action(i).map(|m| Some(m.clone()))
            } else {
                Ok(None)
            }
        })
        .collect()
}

/// `Ind` from `g≥0` (Kac module) or `g≤0` (opposite Kac module).
pub fn induced(g: &Arc<LieSuperalgebra>, v: &FinDimModule, side: Side) -> Result<FinDimModule> {
    let v_actions = even_actions(v, g)?;
    let layout = WedgeLayout::new(g, side.free_degree());
    let dv = v.dim();
    let total = layout.subsets.len() * dv;
    let at = |s: usize, j: usize| s * dv + j;
    let mut actions: Vec<Option<RatMatrix>> = vec![None; g.dim()];

    // free generators act by left wedge multiplication
    for (u, &x) in layout.free.iter().enumerate() {
        let mut m = RatMatrix::zeros(total, total);
        for (s, set) in layout.subsets.iter().enumerate() {
            if let Some((t, c)) = layout.left_multiply(u, set) {
                for j in 0..dv {
                    m.set(at(t, j), at(s, j), c.clone());
                }
            }
        }
        actions[x] = Some(m);
    }

    // g₀ acts by derivation on the wedge plus the action on V
    for x in g.even_indices() {
        let a = v_actions[x].as_ref().expect("even action");
        let mut m = RatMatrix::zeros(total, total);
        for (s, set) in layout.subsets.iter().enumerate() {
            for &p in set {
                let bracket = g.bracket_basis(x, layout.free[p]);
                for (u, c) in layout.free_coords(bracket) {
                    if let Some((t, e)) = layout.replace(set, p, u) {
                        for j in 0..dv {
                            m.add_at(at(t, j), at(s, j), &(&c * &e));
                        }
                    }
                }
            }
            for j in 0..dv {
                for (&r, c) in a.column(j) {
                    m.add_at(at(s, r), at(s, j), c);
                }
            }
        }
        actions[x] = Some(m);
    }

    // the other odd part: z·(y w) = [z, y]·w − y·(z·w), and z kills V
    for z in g.indices_of_degree(-side.free_degree()) {
        let mut cols: Vec<SparseVec> = vec![SparseVec::new(); total];
        for (s, set) in layout.subsets.iter().enumerate() {
            let Some((&first, rest)) = set.split_first() else {
                continue;
            };
            let r = layout.index[rest];
            let bracket = g.bracket_basis(z, layout.free[first]);
            for j in 0..dv {
                let w = SparseVec::unit(at(r, j));
                let mut col = SparseVec::new();
                for (&e, c) in bracket {
                    col.add_scaled(&actions[e].as_ref().expect("even action").apply(&w), c);
                }
                let inner = &cols[at(r, j)];
                col.add_scaled(
                    &actions[layout.free[first]]
                        .as_ref()
                        .expect("free action")
                        .apply(inner),
                    &-Rational::one(),
                );
                cols[at(s, j)] = col;
            }
        }
        actions[z] = Some(RatMatrix::from_columns(total, cols));
    }

    let mut parities = Vec::with_capacity(total);
    let mut weights = v.weights().map(|_| Vec::with_capacity(total));
    let mut zdegrees = Vec::with_capacity(total);
    let step = -(side.free_degree() as i32);
    for set in &layout.subsets {
        let wedge_weight = layout.weight(g, set)?;
        for j in 0..dv {
            parities.push(v.parity(j).add(Parity::from_bit(set.len())));
            if let (Some(ws), Some(vw)) = (weights.as_mut(), v.weights()) {
                ws.push(&vw[j] + &wedge_weight);
            }
            zdegrees.push(-step * set.len() as i32);
        }
    }
    let module = FinDimModule::from_parts(
        g.clone(),
        Scope::Full,
        actions,
        parities,
        weights,
        Some(zdegrees),
    )?;
    if cfg!(debug_assertions) {
        module.validate()?;
    }
    Ok(module)
}

/// `K(V) = Ind_{g≥0}^g V`.
pub fn kac_module(g: &Arc<LieSuperalgebra>, v: &FinDimModule) -> Result<FinDimModule> {
    induced(g, v, Side::NonNegative)
}

/// `K′(V) = Ind_{g≤0}^g V`.
pub fn opposite_kac_module(g: &Arc<LieSuperalgebra>, v: &FinDimModule) -> Result<FinDimModule> {
    induced(g, v, Side::NonPositive)
}

/// Basis labels of an induced or coinduced module in index order.
pub fn induced_labels(g: &LieSuperalgebra, v: &FinDimModule, side: Side) -> Vec<InducedBasisLabel> {
    let layout = WedgeLayout::new(g, side.free_degree());
    layout
        .subsets
        .iter()
        .flat_map(|set| {
            (0..v.dim()).map(move |j| InducedBasisLabel {
                wedge_subset: set.clone(),
                v_index: j,
            })
        })
        .collect()
}

/// Values `f(word)` as a map from wedge subsets `T` to matrices `M` with `f(word) = Σ_T M f(y_T)`.
struct WordEvaluator<'a> {
    g: &'a LieSuperalgebra,
    layout: &'a WedgeLayout,
    v_actions: &'a [Option<RatMatrix>],
    free_degree: i8,
    dv: usize,
    memo: HashMap<Vec<usize>, Vec<(usize, RatMatrix)>>,
}

impl WordEvaluator<'_> {
    fn eval(&mut self, word: &[usize]) -> Vec<(usize, RatMatrix)> {
        if let Some(found) = self.memo.get(word) {
            return found.clone();
        }
        let result = self.compute(word);
        self.memo.insert(word.to_vec(), result.clone());
        result
    }

    fn compute(&mut self, word: &[usize]) -> Vec<(usize, RatMatrix)> {
        let free_degree = self.free_degree;
        let Some(k) = word.iter().position(|&x| self.g.zdegree(x) != free_degree) else {
            // a pure wedge word: sort with Koszul signs
            let mut positions: Vec<usize> = word.iter().map(|x| self.layout.position[x]).collect();
            let mut swaps = 0;
            for a in 0..positions.len() {
                for b in 0..positions.len() - 1 - a {
                    if positions[b] > positions[b + 1] {
                        positions.swap(b, b + 1);
                        swaps += 1;
                    }
                }
            }
            if positions.windows(2).any(|w| w[0] == w[1]) {
                return Vec::new();
            }
            let t = self.layout.index[&positions];
            return vec![(t, RatMatrix::identity(self.dv).scaled(&sign(swaps)))];
        };
        let x = word[k];
        if k == 0 {
            if self.g.zdegree(x) != 0 {
                return Vec::new();
            }
            let a = self.v_actions[x].clone().expect("even action");
            return self
                .eval(&word[1..])
                .into_iter()
                .map(|(t, m)| (t, a.mul(&m)))
                .collect();
        }
        // y x = (−1)^{|x||y|} x y + [y, x] for the free letter y just before x
        let y = word[k - 1];
        let mut swapped = word.to_vec();
        swapped.swap(k - 1, k);
        let factor = if self.g.parity(x).is_odd() {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut acc: HashMap<usize, RatMatrix> = HashMap::new();
        let add =
            |acc: &mut HashMap<usize, RatMatrix>, parts: Vec<(usize, RatMatrix)>, c: &Rational| {
                for (t, m) in parts {
                    acc.entry(t)
                        .and_modify(|e| e.add_scaled_assign(&m, c))
                        .or_insert_with(|| m.scaled(c));
                }
            };
        let first = self.eval(&swapped);
        add(&mut acc, first, &factor);
        for (&e, c) in &self.g.bracket_basis(y, x).clone() {
            let mut replaced = word[..k - 1].to_vec();
            replaced.push(e);
            replaced.extend_from_slice(&word[k + 1..]);
            let part = self.eval(&replaced);
            add(&mut acc, part, c);
        }
        let mut out: Vec<(usize, RatMatrix)> =
            acc.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        out.sort_by_key(|(t, _)| *t);
        out
    }
}

/// Coinduced module realized on `Hom(Λ(g∓1), V)`, basis `f_{T,j}` sending `y_T ↦ v_j`.
pub fn coinduced_module(
    g: &Arc<LieSuperalgebra>,
    v: &FinDimModule,
    side: Side,
    convention: Convention,
) -> Result<FinDimModule> {
    let v_actions = even_actions(v, g)?;
    let layout = WedgeLayout::new(g, side.free_degree());
    let dv = v.dim();
    let total = layout.subsets.len() * dv;
    let at = |s: usize, j: usize| s * dv + j;
    let f_parity = |t: usize, j: usize| v.parity(j).add(Parity::from_bit(layout.subsets[t].len()));
    let mut evaluator = WordEvaluator {
        g,
        layout: &layout,
        v_actions: &v_actions,
        free_degree: side.free_degree(),
        dv,
        memo: HashMap::new(),
    };
    let mut actions: Vec<Option<RatMatrix>> = vec![None; g.dim()];
    for x in 0..g.dim() {
        let mut m = RatMatrix::zeros(total, total);
        let x_odd = g.parity(x).is_odd();
        for (s, set) in layout.subsets.iter().enumerate() {
            let mut word: Vec<usize> = set.iter().map(|&p| layout.free[p]).collect();
            word.push(x);
            for (t, block) in evaluator.eval(&word) {
                for j in 0..dv {
                    let sign_bit = match convention {
                        Convention::Super if x_odd => set.len() + f_parity(t, j).bit(),
                        _ => 0,
                    };
                    for (&r, c) in block.column(j) {
                        m.add_at(at(s, r), at(t, j), &(c * sign(sign_bit)));
                    }
                }
            }
        }
        actions[x] = Some(m);
    }
    let mut parities = Vec::with_capacity(total);
    let mut weights = v.weights().map(|_| Vec::with_capacity(total));
    let mut zdegrees = Vec::with_capacity(total);
    let step = -(side.free_degree() as i32);
    for (t, set) in layout.subsets.iter().enumerate() {
        let wedge_weight = layout.weight(g, set)?;
        for j in 0..dv {
            parities.push(f_parity(t, j));
            if let (Some(ws), Some(vw)) = (weights.as_mut(), v.weights()) {
                ws.push(&vw[j] - &wedge_weight);
            }
            zdegrees.push(step * set.len() as i32);
        }
    }
    let module = FinDimModule::from_parts(
        g.clone(),
        Scope::Full,
        actions,
        parities,
        weights,
        Some(zdegrees),
    )?;
    module.validate()?;
    Ok(module)
}

/// `f ↦ f†` with `f†(y) = (−1)^{|f||y|} f(y)`, from the super to the usual convention.
pub fn dagger_iso(
    super_module: &FinDimModule,
    usual_module: &FinDimModule,
    side: Side,
) -> Result<ModuleMap> {
    super_module.same_algebra(usual_module)?;
    if super_module.dim() != usual_module.dim() {
        return Err(Error::DimensionMismatch(
            "coinduced modules differ in dimension".into(),
        ));
    }
    let g = super_module.algebra();
    let layout = WedgeLayout::new(g, side.free_degree());
    let dv = super_module.dim() / layout.subsets.len().max(1);
    let mut matrix = RatMatrix::zeros(super_module.dim(), super_module.dim());
    for (t, set) in layout.subsets.iter().enumerate() {
        for j in 0..dv {
            let k = t * dv + j;
            let exponent = super_module.parity(k).bit() * set.len();
            matrix.set(k, k, sign(exponent));
        }
    }
    let map = ModuleMap::new(super_module, usual_module, matrix);
    map.verify(super_module, usual_module)?;
    Ok(map)
}

/// `M^{g_k} = {m : g_k m = 0}` and its `g₀`-module structure.
pub fn invariants(m: &FinDimModule, part: i8) -> Result<(Subspace, FinDimModule)> {
    if part != 1 && part != -1 {
        return Err(Error::InvalidParams(format!("invariants under g_{part}")));
    }
    let g = m.algebra();
    let mut rows = Vec::new();
    for x in g.indices_of_degree(part) {
        rows.extend(m.action(x)?.rows());
    }
    let space = kernel(&RatMatrix::from_rows(m.dim(), &rows));
    let sub = m.to_even().submodule(&space)?;
    Ok((space, sub))
}

/// Eigenspaces of the grading element `d` on `M`, sorted by eigenvalue.
pub fn d_eigenspaces(m: &FinDimModule) -> Result<Vec<(Rational, Subspace)>> {
    let g = m.algebra();
    let d = g.grading_operator()?;
    let element = d.element.ok_or_else(|| {
        Error::Unsupported(format!("the grading element lies outside {}", g.spec()))
    })?;
    let action = m.action_of(&element)?;
    let poly = charpoly(&action).squarefree_part();
    let roots = poly
        .rational_roots()
        .filter(|r| r.len() == poly.degree())
        .ok_or_else(|| Error::NotDiagonalizable("d has irrational eigenvalues".into()))?;
    let mut out = Vec::new();
    let mut total = 0;
    for r in roots {
        let shifted = action.sub(&RatMatrix::scalar(m.dim(), &r));
        let space = kernel(&shifted);
        total += space.dim();
        out.push((r, space));
    }
    if total != m.dim() {
        return Err(Error::NotDiagonalizable("d is not diagonalizable".into()));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// The layer `Λ^i(free) ⊗ V` of an induced module, as a coordinate subspace.
pub fn wedge_layer(g: &LieSuperalgebra, v_dim: usize, side: Side, i: usize) -> Subspace {
    let layout = WedgeLayout::new(g, side.free_degree());
    let indices: Vec<usize> = layout
        .subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.len() == i)
        .flat_map(|(t, _)| (0..v_dim).map(move |j| t * v_dim + j))
        .collect();
    Subspace::coordinate(layout.subsets.len() * v_dim, &indices)
}
