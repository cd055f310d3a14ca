//! Finite-dimensional supermodules given by explicit action matrices.

mod descriptor;
mod simple;

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, RatMatrix, Rational, SparseVec, Subspace};
use crate::roots::Weight;

pub use descriptor::{ActionDescriptor, ModuleDescriptor};
pub use simple::{exterior_power_action, simple_g0_module, weyl_dimension};

/// Which part of the algebra acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Only `g₀` acts.
    Even,
    /// The whole superalgebra acts.
    Full,
}

/// Which top exterior power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopWedge {
    Plus,
    Minus,
    DualPlus,
    DualMinus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimModule {
    algebra: Arc<LieSuperalgebra>,
    scope: Scope,
    dim: usize,
    actions: Vec<Option<RatMatrix>>,
    parities: Vec<Parity>,
    weights: Option<Vec<Weight>>,
    zdegrees: Option<Vec<i32>>,
}

impl FinDimModule {
    /// Build and validate a module from action matrices indexed by algebra basis index.
    pub fn new(
        algebra: Arc<LieSuperalgebra>,
        scope: Scope,
        actions: Vec<Option<RatMatrix>>,
        parities: Vec<Parity>,
        weights: Option<Vec<Weight>>,
        zdegrees: Option<Vec<i32>>,
    ) -> Result<Self> {
        let module = Self::from_parts(algebra, scope, actions, parities, weights, zdegrees)?;
        module.validate()?;
        Ok(module)
    }

    /// Shape checks only; the caller vouches for the representation property.
    pub(crate) fn from_parts(
        algebra: Arc<LieSuperalgebra>,
        scope: Scope,
        actions: Vec<Option<RatMatrix>>,
        parities: Vec<Parity>,
        weights: Option<Vec<Weight>>,
        zdegrees: Option<Vec<i32>>,
    ) -> Result<Self> {
        let dim = parities.len();
        if actions.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action slots for an algebra of dimension {}",
                actions.len(),
                algebra.dim()
            )));
        }
        for (i, a) in actions.iter().enumerate() {
            let wanted = scope == Scope::Full || algebra.parity(i) == Parity::Even;
            match a {
                Some(m) if !wanted => {
                    let _ = m;
                    return Err(Error::Validation(format!(
                        "{} is outside the acting scope",
                        algebra.label(i)
                    )));
                }
                Some(m) if m.nrows() != dim || m.ncols() != dim => {
                    return Err(Error::DimensionMismatch(format!(
                        "action of {} is {}x{}, module has dimension {dim}",
                        algebra.label(i),
                        m.nrows(),
                        m.ncols()
                    )))
                }
                None if wanted => {
                    return Err(Error::Validation(format!(
                        "missing action of {}",
                        algebra.label(i)
                    )))
                }
                _ => {}
            }
        }
        if weights
            .as_ref()
            .is_some_and(|w| w.len() != dim || w.iter().any(|x| x.len() != algebra.rank()))
        {
            return Err(Error::DimensionMismatch(
                "weight list does not match the module".into(),
            ));
        }
        if zdegrees.as_ref().is_some_and(|z| z.len() != dim) {
            return Err(Error::DimensionMismatch(
                "grading list does not match the module".into(),
            ));
        }
        Ok(Self {
            algebra,
            scope,
            dim,
            actions,
            parities,
            weights,
            zdegrees,
        })
    }

    pub fn algebra(&self) -> &Arc<LieSuperalgebra> {
        &self.algebra
    }

    pub fn scope(&self) -> Scope {
        self.scope
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, k: usize) -> Parity {
        self.parities[k]
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn zdegrees(&self) -> Option<&[i32]> {
        self.zdegrees.as_deref()
    }

    /// Indices of the algebra basis that act.
    pub fn acting_indices(&self) -> Vec<usize> {
        (0..self.actions.len())
            .filter(|&i| self.actions[i].is_some())
            .collect()
    }

    pub fn action(&self, i: usize) -> Result<&RatMatrix> {
        self.actions.get(i).and_then(Option::as_ref).ok_or_else(|| {
            Error::Validation(format!(
                "{} does not act on this module",
                self.algebra.label(i)
            ))
        })
    }

    /// Action of a combination of basis elements.
    pub fn action_of(&self, x: &SparseVec) -> Result<RatMatrix> {
        let mut out = RatMatrix::zeros(self.dim, self.dim);
        for (&i, c) in x {
            out.add_scaled_assign(self.action(i)?, c);
        }
        Ok(out)
    }

    pub fn action_matrices(&self) -> Vec<&RatMatrix> {
        self.actions.iter().flatten().collect()
    }

    pub fn same_algebra(&self, other: &FinDimModule) -> Result<()> {
        if self.algebra.spec() != other.algebra.spec() {
            return Err(Error::AlgebraMismatch(format!(
                "{} vs {}",
                self.algebra.spec(),
                other.algebra.spec()
            )));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_parity()?;
        self.check_representation()?;
        self.check_weights()
    }

    /// Odd elements flip parity, even elements preserve it.
    pub fn check_parity(&self) -> Result<()> {
        for i in self.acting_indices() {
            let shift = self.algebra.parity(i);
            for (r, c, _) in self.action(i)?.triplets() {
                if self.parities[r] != self.parities[c].add(shift) {
                    return Err(Error::Violation(format!(
                        "{} maps vector {c} to vector {r} against the parity",
                        self.algebra.label(i)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `act([x,y]) = act(x)act(y) − (−1)^{|x||y|} act(y)act(x)` on all acting pairs.
    pub fn check_representation(&self) -> Result<()> {
        let acting = self.acting_indices();
        for (a, &i) in acting.iter().enumerate() {
            for &j in &acting[a..] {
                let both_odd = self.algebra.parity(i).is_odd() && self.algebra.parity(j).is_odd();
                let lhs = self.action(i)?.supercommutator(self.action(j)?, both_odd);
                let rhs = self.action_of(self.algebra.bracket_basis(i, j))?;
                if lhs != rhs {
                    return Err(Error::Violation(format!(
                        "representation fails on ({}, {})",
                        self.algebra.label(i),
                        self.algebra.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Each basis vector is an eigenvector of the Cartan with the recorded weight.
    pub fn check_weights(&self) -> Result<()> {
        let Some(weights) = &self.weights else {
            return Ok(());
        };
        for &h in self.algebra.cartan_indices() {
            let Ok(m) = self.action(h) else { continue };
            for (k, w) in weights.iter().enumerate() {
                let expected =
                    SparseVec::unit(k).scaled(&self.algebra.cartan_pairing(h, w.coords()));
                if m.column(k) != &expected {
                    return Err(Error::Violation(format!(
                        "vector {k} is not of weight {w} for {}",
                        self.algebra.label(h)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Joint eigenvalues of the acting Cartan elements on each basis vector, if diagonal.
    pub fn cartan_signature(&self, k: usize) -> Option<Vec<Rational>> {
        let mut out = Vec::new();
        for &h in self.algebra.cartan_indices() {
            let m = self.action(h).ok()?;
            let col = m.column(k);
            if col.indices().any(|r| r != k) {
                return None;
            }
            out.push(col.get(k));
        }
        Some(out)
    }

    /// Same module viewed over `g₀` only.
    pub fn to_even(&self) -> FinDimModule {
        let actions = self
            .actions
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if self.algebra.parity(i) == Parity::Even {
                    a.clone()
                } else {
                    None
                }
            })
            .collect();
        FinDimModule {
            scope: Scope::Even,
            actions,
            ..self.clone()
        }
    }

    pub fn without_zdegrees(&self) -> FinDimModule {
        FinDimModule {
            zdegrees: None,
            ..self.clone()
        }
    }

    pub fn with_zdegrees(mut self, zdegrees: Vec<i32>) -> Result<FinDimModule> {
        if zdegrees.len() != self.dim {
            return Err(Error::DimensionMismatch(
                "grading list does not match the module".into(),
            ));
        }
        self.zdegrees = Some(zdegrees);
        Ok(self)
    }

    /// Change the parity of every basis vector.
    pub fn parity_shift(&self) -> FinDimModule {
        FinDimModule {
            parities: self.parities.iter().map(|p| p.flip()).collect(),
            ..self.clone()
        }
    }

    pub fn with_uniform_shift(&self, parity: Parity) -> FinDimModule {
        if parity.is_odd() {
            self.parity_shift()
        } else {
            self.clone()
        }
    }

    /// Super tensor product `x(v⊗w) = xv⊗w + (−1)^{|x||v|} v⊗xw`.
    pub fn tensor(&self, other: &FinDimModule) -> Result<FinDimModule> {
        self.same_algebra(other)?;
        if self.scope != other.scope {
            return Err(Error::Validation(
                "tensor factors have different scopes".into(),
            ));
        }
        let (p, q) = (self.dim, other.dim);
        let id_left = RatMatrix::identity(p);
        let id_right = RatMatrix::identity(q);
        let odd_left: Vec<usize> = (0..p).filter(|&k| self.parities[k].is_odd()).collect();
        let mut actions = Vec::with_capacity(self.actions.len());
        for (i, a) in self.actions.iter().enumerate() {
            let Some(a) = a else {
                actions.push(None);
                continue;
            };
            let b = other.action(i)?;
            let mut m = a.kron(&id_right);
            let mut right = id_left.kron(b);
            if self.algebra.parity(i).is_odd() && !odd_left.is_empty() {
                let mut signs = RatMatrix::identity(p);
                for &k in &odd_left {
                    signs.set(k, k, -Rational::one());
                }
                right = signs.kron(&id_right).mul(&right);
            }
            m.add_scaled_assign(&right, &Rational::one());
            actions.push(Some(m));
        }
        let mut parities = Vec::with_capacity(p * q);
        for a in &self.parities {
            for b in &other.parities {
                parities.push(a.add(*b));
            }
        }
        let weights = match (&self.weights, &other.weights) {
            (Some(x), Some(y)) => Some(
                x.iter()
                    .flat_map(|a| y.iter().map(move |b| a + b))
                    .collect(),
            ),
            _ => None,
        };
        let zdegrees = match (&self.zdegrees, &other.zdegrees) {
            (Some(x), Some(y)) => Some(
                x.iter()
                    .flat_map(|a| y.iter().map(move |b| a + b))
                    .collect(),
            ),
            _ => None,
        };
        FinDimModule::from_parts(
            self.algebra.clone(),
            self.scope,
            actions,
            parities,
            weights,
            zdegrees,
        )
    }

    /// Dual module with action `(xf)(v) = −(−1)^{|x||f|} f(xv)`.
    pub fn dual(&self) -> FinDimModule {
        let actions = self
            .actions
            .iter()
            .enumerate()
            .map(|(i, a)| {
                a.as_ref().map(|a| {
                    let odd_x = self.algebra.parity(i).is_odd();
                    let triplets = a.triplets().into_iter().map(|(r, c, x)| {
                        let flip = odd_x && self.parities[r].is_odd();
                        (c, r, if flip { x } else { -x })
                    });
                    RatMatrix::from_triplets(self.dim, self.dim, triplets)
                })
            })
            .collect();
        FinDimModule {
            actions,
            weights: self
                .weights
                .as_ref()
                .map(|w| w.iter().map(|x| -x).collect()),
            zdegrees: self
                .zdegrees
                .as_ref()
                .map(|z| z.iter().map(|d| -d).collect()),
            ..self.clone()
        }
    }

    pub fn direct_sum(&self, other: &FinDimModule) -> Result<FinDimModule> {
        self.same_algebra(other)?;
        if self.scope != other.scope {
            return Err(Error::Validation("summands have different scopes".into()));
        }
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(a.direct_sum(b)),
                _ => None,
            })
            .collect();
        let mut parities = self.parities.clone();
        parities.extend_from_slice(&other.parities);
        let weights = match (&self.weights, &other.weights) {
            (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
            _ => None,
        };
        let zdegrees = match (&self.zdegrees, &other.zdegrees) {
            (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
            _ => None,
        };
        FinDimModule::from_parts(
            self.algebra.clone(),
            self.scope,
            actions,
            parities,
            weights,
            zdegrees,
        )
    }

    /// Submodule on an invariant, homogeneous subspace; basis = its echelon basis.
    pub fn submodule(&self, subspace: &Subspace) -> Result<FinDimModule> {
        if subspace.ambient() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace of ambient {} in a module of dimension {}",
                subspace.ambient(),
                self.dim
            )));
        }
        let basis = subspace.basis();
        let pivots = subspace.pivots();
        for v in basis {
            let lead = v.leading().map(|(i, _)| i).unwrap_or(0);
            let homogeneous = v.indices().all(|i| {
                self.parities[i] == self.parities[lead]
                    && self.weights.as_ref().map_or(true, |w| w[i] == w[lead])
                    && self.zdegrees.as_ref().map_or(true, |z| z[i] == z[lead])
            });
            if !homogeneous {
                return Err(Error::Validation(
                    "subspace is not spanned by homogeneous vectors".into(),
                ));
            }
        }
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            let Some(a) = a else {
                actions.push(None);
                continue;
            };
            let mut cols = Vec::with_capacity(basis.len());
            for v in basis {
                let image = a.apply(v);
                let coords: SparseVec = pivots
                    .iter()
                    .enumerate()
                    .map(|(t, &p)| (t, image.get(p)))
                    .collect();
                let mut rebuilt = SparseVec::new();
                for (&t, c) in &coords {
                    rebuilt.add_scaled(&basis[t], c);
                }
                if rebuilt != image {
                    return Err(Error::Validation("subspace is not invariant".into()));
                }
                cols.push(coords);
            }
            actions.push(Some(RatMatrix::from_columns(basis.len(), cols)));
        }
        let parities = pivots.iter().map(|&p| self.parities[p]).collect();
        let weights = self
            .weights
            .as_ref()
            .map(|w| pivots.iter().map(|&p| w[p].clone()).collect());
        let zdegrees = self
            .zdegrees
            .as_ref()
            .map(|z| pivots.iter().map(|&p| z[p]).collect());
        FinDimModule::from_parts(
            self.algebra.clone(),
            self.scope,
            actions,
            parities,
            weights,
            zdegrees,
        )
    }

    /// Re-express the action over a subalgebra whose basis lies in the span of ours.
    pub fn restrict(&self, sub: &Arc<LieSuperalgebra>) -> Result<FinDimModule> {
        let embedding = self.algebra.embedding_of(sub)?;
        let mut actions = Vec::with_capacity(sub.dim());
        for (i, coords) in embedding.iter().enumerate() {
            let wanted = self.scope == Scope::Full || sub.parity(i) == Parity::Even;
            actions.push(if wanted {
                Some(self.action_of(coords)?)
            } else {
                None
            });
        }
        FinDimModule::from_parts(
            sub.clone(),
            self.scope,
            actions,
            self.parities.clone(),
            self.weights.clone(),
            self.zdegrees.clone(),
        )
    }

    /// Pass from an `sl(n|n)`-module on which the identity acts by zero to `sl(n|n)/I`.
    pub fn descend_to_quotient(&self, quotient: &Arc<LieSuperalgebra>) -> Result<FinDimModule> {
        let identity = self
            .algebra
            .express_matrix(&RatMatrix::identity(self.algebra.realization_size()))?;
        if !self.action_of(&identity)?.is_zero() {
            return Err(Error::NotACharacter(
                "the identity does not act by zero".into(),
            ));
        }
        let mut actions = Vec::with_capacity(quotient.dim());
        for b in quotient.basis() {
            let source = self.algebra.index_of(&b.label).ok_or_else(|| {
                Error::AlgebraMismatch(format!("{} has no {}", self.algebra.spec(), b.label))
            })?;
            actions.push(self.actions[source].clone());
        }
        FinDimModule::from_parts(
            quotient.clone(),
            self.scope,
            actions,
            self.parities.clone(),
            self.weights.clone(),
            self.zdegrees.clone(),
        )
    }
}

/// One-dimensional even `g₀`-module of weight `μ`.
pub fn one_dim(g: &Arc<LieSuperalgebra>, mu: &Weight) -> Result<FinDimModule> {
    if mu.len() != g.rank() {
        return Err(Error::DimensionMismatch(format!(
            "weight of length {} for rank {}",
            mu.len(),
            g.rank()
        )));
    }
    let actions = (0..g.dim())
        .map(|i| {
            (g.parity(i) == Parity::Even).then(|| {
                let value = if g.cartan_indices().contains(&i) {
                    g.cartan_pairing(i, mu.coords())
                } else {
                    Rational::zero()
                };
                RatMatrix::scalar(1, &value)
            })
        })
        .collect();
    let module = FinDimModule::from_parts(
        g.clone(),
        Scope::Even,
        actions,
        vec![Parity::Even],
        Some(vec![mu.clone()]),
        None,
    )?;
    module.check_representation().map_err(|_| {
        Error::NotACharacter(format!("{mu} does not define a one-dimensional module"))
    })?;
    Ok(module)
}

/// Trivial one-dimensional module.
pub fn trivial(g: &Arc<LieSuperalgebra>, scope: Scope) -> FinDimModule {
    let actions = (0..g.dim())
        .map(|i| {
            (scope == Scope::Full || g.parity(i) == Parity::Even).then(|| RatMatrix::zeros(1, 1))
        })
        .collect();
    FinDimModule::from_parts(
        g.clone(),
        scope,
        actions,
        vec![Parity::Even],
        Some(vec![Weight::zero(g.rank())]),
        None,
    )
    .expect("trivial module is well formed")
}

/// The one-dimensional `g₀`-module `Λ^max(g_{±1})` or its dual.
pub fn lambda_max_module(g: &Arc<LieSuperalgebra>, which: TopWedge) -> Result<FinDimModule> {
    let (degree, dual) = match which {
        TopWedge::Plus => (1, false),
        TopWedge::Minus => (-1, false),
        TopWedge::DualPlus => (1, true),
        TopWedge::DualMinus => (-1, true),
    };
    let layer = g.indices_of_degree(degree);
    let factor = if dual {
        -Rational::one()
    } else {
        Rational::one()
    };
    let actions = (0..g.dim())
        .map(|i| {
            (g.parity(i) == Parity::Even).then(|| {
                let mut trace = Rational::zero();
                for &j in &layer {
                    trace += g.bracket_basis(i, j).get(j);
                }
                RatMatrix::scalar(1, &(trace * &factor))
            })
        })
        .collect();
    let mut weight = Weight::zero(g.rank());
    for &j in &layer {
        weight = &weight + &crate::roots::weight_of_basis(g, j)?;
    }
    if dual {
        weight = -&weight;
    }
    let parity = Parity::from_bit(layer.len());
    FinDimModule::new(
        g.clone(),
        Scope::Even,
        actions,
        vec![parity],
        Some(vec![weight]),
        None,
    )
}

/// Smallest subspace containing `seeds` and stable under `matrices`.
pub fn invariant_closure(matrices: &[&RatMatrix], seeds: &[SparseVec], ambient: usize) -> Subspace {
    let mut basis = EchelonBasis::new(ambient);
    let mut queue: Vec<SparseVec> = Vec::new();
    for s in seeds {
        if basis.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if basis.is_full() {
            break;
        }
        for m in matrices {
            let image = m.apply(&v);
            if !image.is_zero() && basis.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    basis.into_subspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::linalg::q;

    #[test]
    fn one_dim_characters() {
        let g = parse_algebra("gl(1|1)").unwrap();
        let m = one_dim(&g, &Weight::from_ints(&[1, -1])).unwrap();
        assert_eq!(
            m.action(g.index_of("e_{1,1}").unwrap()).unwrap().get(0, 0),
            q(1)
        );
        assert_eq!(
            m.action(g.index_of("e_{2,2}").unwrap()).unwrap().get(0, 0),
            q(-1)
        );
        let g2 = parse_algebra("gl(2|1)").unwrap();
        assert!(matches!(
            one_dim(&g2, &Weight::from_ints(&[1, 0, 0])),
            Err(Error::NotACharacter(_))
        ));
        assert!(one_dim(&g2, &Weight::from_ints(&[1, 1, -2])).is_ok());
    }

    #[test]
    fn lambda_max_weights() {
        let g = parse_algebra("gl(1|1)").unwrap();
        let m = lambda_max_module(&g, TopWedge::Minus).unwrap();
        assert_eq!(m.weights().unwrap()[0], Weight::from_ints(&[-1, 1]));
        let g2 = parse_algebra("gl(2|1)").unwrap();
        let top = lambda_max_module(&g2, TopWedge::Plus).unwrap();
        assert_eq!(top.weights().unwrap()[0], Weight::from_ints(&[1, 1, -2]));
        for text in ["gl(2|1)", "osp(2|2)", "p(2)"] {
            let g = parse_algebra(text).unwrap();
            for (a, b) in [
                (TopWedge::Minus, TopWedge::DualMinus),
                (TopWedge::Plus, TopWedge::DualPlus),
            ] {
                let prod = lambda_max_module(&g, a)
                    .unwrap()
                    .tensor(&lambda_max_module(&g, b).unwrap())
                    .unwrap();
                assert!(prod.action_matrices().iter().all(|m| m.is_zero()), "{text}");
                assert!(prod.weights().unwrap()[0].is_zero());
            }
        }
    }

    #[test]
    fn parity_shift_is_an_involution() {
        let g = parse_algebra("gl(2|1)").unwrap();
        let v = simple_g0_module(&g, &Weight::from_ints(&[1, 0, 0]), Parity::Even).unwrap();
        assert_eq!(v.parity_shift().parity_shift(), v);
        assert!(v.parity_shift().parities().iter().all(|p| p.is_odd()));
    }

    #[test]
    fn tensor_and_dual_are_modules() {
        let g = parse_algebra("gl(2|1)").unwrap();
        let v = simple_g0_module(&g, &Weight::from_ints(&[1, 0, 0]), Parity::Even).unwrap();
        let t = v.tensor(&v.dual()).unwrap();
        t.validate().unwrap();
        assert_eq!(t.dim(), 4);
        // the evaluation map gives a trivial submodule
        let acting = t.action_matrices();
        let mut invariant = crate::linalg::EchelonBasis::new(4);
        let stacked: Vec<SparseVec> = acting.iter().flat_map(|m| m.rows()).collect();
        let kernel = crate::linalg::kernel(&RatMatrix::from_rows(4, &stacked));
        for v in kernel.basis() {
            invariant.insert(v.clone());
        }
        assert_eq!(invariant.dim(), 1);
    }

    #[test]
    fn closure_of_zero_is_zero() {
        let m = RatMatrix::identity(3);
        assert!(invariant_closure(&[&m], &[SparseVec::new()], 3).is_zero());
    }
}
