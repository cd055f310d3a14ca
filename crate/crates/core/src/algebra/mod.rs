//! Type-I Lie superalgebras built from matrix realizations.

mod realization;
mod spec;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, q, EchelonBasis, RatMatrix, Rational, SparseVec};

pub use spec::{AlgebraSpec, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        Parity::from_bit(self.bit() + 1)
    }

    pub fn add(self, other: Parity) -> Self {
        Parity::from_bit(self.bit() + other.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraBasisElement {
    pub index: usize,
    pub label: String,
    pub parity: Parity,
    pub zdegree: i8,
    /// Realization matrix; for `sl(n|n)/I` a representative in `sl(n|n)`.
    pub matrix: RatMatrix,
}

/// Writes matrices in a fixed list of linearly independent matrices.
#[derive(Clone, Debug)]
struct Expresser {
    pivots: Vec<usize>,
    inverse: RatMatrix,
    flats: Vec<SparseVec>,
}

impl Expresser {
    fn new(matrices: &[RatMatrix]) -> Result<Self> {
        let flats: Vec<SparseVec> = matrices.iter().map(RatMatrix::flatten).collect();
        let ambient = matrices.first().map_or(0, |m| m.nrows() * m.ncols());
        let mut echelon = EchelonBasis::new(ambient);
        for (i, flat) in flats.iter().enumerate() {
            if !echelon.insert(flat.clone()) {
                return Err(Error::Validation(format!(
                    "basis element {i} is linearly dependent"
                )));
            }
        }
        let pivots = echelon.pivots().to_vec();
        let k = flats.len();
        let mut restricted = RatMatrix::zeros(k, k);
        for (i, flat) in flats.iter().enumerate() {
            for (p, &pivot) in pivots.iter().enumerate() {
                restricted.set(p, i, flat.get(pivot));
            }
        }
        let inverse = restricted.inverse()?;
        Ok(Self {
            pivots,
            inverse,
            flats,
        })
    }

    fn express(&self, m: &RatMatrix) -> Option<SparseVec> {
        let flat = m.flatten();
        let target: SparseVec = self
            .pivots
            .iter()
            .enumerate()
            .map(|(p, &pivot)| (p, flat.get(pivot)))
            .collect();
        let coords = self.inverse.apply(&target);
        let mut residual = flat;
        for (&i, c) in &coords {
            residual.add_scaled(&self.flats[i], &-c);
        }
        residual.is_zero().then_some(coords)
    }
}

/// Data for `sl(n|n)/I`: coordinates live on `sl(n|n)` minus one dropped Cartan index.
#[derive(Clone, Debug)]
struct CenterQuotient {
    center: SparseVec,
    dropped: usize,
    position: Vec<Option<usize>>,
}

impl CenterQuotient {
    fn project(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        let c = v.get(self.dropped);
        if !c.is_zero() {
            out.add_scaled(&self.center, &-(c / self.center.get(self.dropped)));
        }
        out.remap(|i| self.position[i])
    }
}

/// The grading element `d` and the constant `c` with `[d, x] = c k x` on `g_k`.
#[derive(Clone, Debug)]
pub struct GradingOperator {
    pub matrix: RatMatrix,
    /// Coordinates over the basis when `d` lies in the algebra.
    pub element: Option<SparseVec>,
    pub constant: Rational,
}

impl GradingOperator {
    pub fn is_inner(&self) -> bool {
        self.element.is_some()
    }
}

/// Counts from a full structure check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub triples_checked: usize,
    pub jacobi_failures: usize,
    pub grading_failures: usize,
    pub odd_square_failures: usize,
    pub operator_failures: usize,
}

impl StructureReport {
    pub fn is_clean(&self) -> bool {
        self.jacobi_failures
            + self.grading_failures
            + self.odd_square_failures
            + self.operator_failures
            == 0
    }
}

#[derive(Clone, Debug)]
pub struct LieSuperalgebra {
    spec: AlgebraSpec,
    basis: Vec<AlgebraBasisElement>,
    table: Vec<Vec<SparseVec>>,
    cartan: Vec<usize>,
    frame: Vec<Vec<Rational>>,
    form_signs: Option<Vec<i8>>,
    weight_blocks: Vec<usize>,
    grading_diag: Vec<Rational>,
    odd_from: usize,
    expresser: Expresser,
    quotient: Option<CenterQuotient>,
}

/// Build (or fetch from the process-wide cache) a validated algebra.
pub fn build_algebra(spec: AlgebraSpec) -> Result<Arc<LieSuperalgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<AlgebraSpec, Arc<LieSuperalgebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(found) = cache.lock().expect("algebra cache poisoned").get(&spec) {
        return Ok(found.clone());
    }
    let built = Arc::new(LieSuperalgebra::construct(spec)?);
    let mut guard = cache.lock().expect("algebra cache poisoned");
    Ok(guard.entry(spec).or_insert(built).clone())
}

pub fn parse_algebra(text: &str) -> Result<Arc<LieSuperalgebra>> {
    build_algebra(text.parse()?)
}

fn both_odd(a: &AlgebraBasisElement, b: &AlgebraBasisElement) -> bool {
    a.parity.is_odd() && b.parity.is_odd()
}

impl LieSuperalgebra {
    fn construct(spec: AlgebraSpec) -> Result<Self> {
        spec.validate()?;
        if spec.family == Family::SlNnModCenter {
            let parent = build_algebra(AlgebraSpec::sl(spec.n, spec.n))?;
            let algebra = parent.quotient_by_identity(spec)?;
            algebra.validate()?;
            return Ok(algebra);
        }
        let raw = realization::realize(spec);
        let mut basis = Vec::with_capacity(raw.elements.len());
        for (index, e) in raw.elements.into_iter().enumerate() {
            let parity = if e.zdegree == 0 {
                Parity::Even
            } else {
                Parity::Odd
            };
            if !block_parity_matches(&e.matrix, raw.odd_from, parity) {
                return Err(Error::Validation(format!(
                    "{} does not have parity {parity}",
                    e.label
                )));
            }
            basis.push(AlgebraBasisElement {
                index,
                label: e.label,
                parity,
                zdegree: e.zdegree,
                matrix: e.matrix,
            });
        }
        let matrices: Vec<RatMatrix> = basis.iter().map(|b| b.matrix.clone()).collect();
        let expresser = Expresser::new(&matrices)?;
        let mut table = vec![vec![SparseVec::new(); basis.len()]; basis.len()];
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                let m = basis[i]
                    .matrix
                    .supercommutator(&basis[j].matrix, both_odd(&basis[i], &basis[j]));
                table[i][j] = expresser.express(&m).ok_or_else(|| {
                    Error::Validation(format!(
                        "[{}, {}] leaves the span of the basis",
                        basis[i].label, basis[j].label
                    ))
                })?;
            }
        }
        let cartan = basis
            .iter()
            .filter(|b| b.matrix.is_diagonal())
            .map(|b| b.index)
            .collect();
        let algebra = Self {
            spec,
            basis,
            table,
            cartan,
            frame: raw.frame,
            form_signs: raw.form_signs,
            weight_blocks: raw.weight_blocks,
            grading_diag: raw.grading,
            odd_from: raw.odd_from,
            expresser,
            quotient: None,
        };
        algebra.validate()?;
        Ok(algebra)
    }

    fn quotient_by_identity(&self, spec: AlgebraSpec) -> Result<Self> {
        let size = self.realization_size();
        let center = self
            .expresser
            .express(&RatMatrix::identity(size))
            .ok_or_else(|| Error::Validation("identity is not in sl(n|n)".into()))?;
        if (0..self.dim()).any(|i| !self.bracket_vec(&center, &SparseVec::unit(i)).is_zero()) {
            return Err(Error::Validation("identity is not central".into()));
        }
        let dropped = center
            .max_index()
            .ok_or_else(|| Error::Validation("zero center".into()))?;
        let mut position = vec![None; self.dim()];
        let mut basis = Vec::new();
        for b in &self.basis {
            if b.index != dropped {
                position[b.index] = Some(basis.len());
                basis.push(AlgebraBasisElement {
                    index: basis.len(),
                    ..b.clone()
                });
            }
        }
        let quotient = CenterQuotient {
            center,
            dropped,
            position,
        };
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| i != dropped).collect();
        let table = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| quotient.project(&self.table[i][j]))
                    .collect()
            })
            .collect();
        let cartan = self
            .cartan
            .iter()
            .filter_map(|&h| quotient.position[h])
            .collect();
        Ok(Self {
            spec,
            basis,
            table,
            cartan,
            frame: self.frame.clone(),
            form_signs: self.form_signs.clone(),
            weight_blocks: self.weight_blocks.clone(),
            grading_diag: self.grading_diag.clone(),
            odd_from: self.odd_from,
            expresser: self.expresser.clone(),
            quotient: Some(quotient),
        })
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[AlgebraBasisElement] {
        &self.basis
    }

    pub fn element(&self, i: usize) -> &AlgebraBasisElement {
        &self.basis[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn zdegree(&self, i: usize) -> i8 {
        self.basis[i].zdegree
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn indices_of_degree(&self, k: i8) -> Vec<usize> {
        self.basis
            .iter()
            .filter(|b| b.zdegree == k)
            .map(|b| b.index)
            .collect()
    }

    pub fn even_indices(&self) -> Vec<usize> {
        self.indices_of_degree(0)
    }

    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    /// Index in `sl(n|n)` of the Cartan element removed by the quotient.
    pub fn center_element_removed(&self) -> Option<usize> {
        self.quotient.as_ref().map(|q| q.dropped)
    }

    pub fn rank(&self) -> usize {
        self.frame.len()
    }

    pub fn weight_blocks(&self) -> &[usize] {
        &self.weight_blocks
    }

    pub fn form_signs(&self) -> Option<&[i8]> {
        self.form_signs.as_deref()
    }

    pub fn realization_size(&self) -> usize {
        self.grading_diag.len()
    }

    pub fn odd_from(&self) -> usize {
        self.odd_from
    }

    /// Diagonal matrices whose eigenvalues give the `ε`-coordinates of weights.
    pub fn frame(&self) -> &[Vec<Rational>] {
        &self.frame
    }

    /// Value of Cartan element `h` on the weight with `ε`-coordinates `weight`.
    pub fn cartan_pairing(&self, h: usize, weight: &[Rational]) -> Rational {
        let diag = self.basis[h].matrix.diagonal();
        let mut acc = Rational::zero();
        for (k, d) in self.frame.iter().enumerate() {
            // d is a 0/±1 indicator; recover the frame coefficient of h on coordinate k.
            let support = d
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero frame element");
            acc += &diag[support] / &d[support] * &weight[k];
        }
        acc
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in x {
            for (&j, b) in y {
                out.add_scaled(&self.table[i][j], &(a * b));
            }
        }
        out
    }

    /// Realization matrix of a combination of basis elements.
    pub fn matrix_of(&self, x: &SparseVec) -> RatMatrix {
        let size = self.realization_size();
        let mut out = RatMatrix::zeros(size, size);
        for (&i, c) in x {
            out.add_scaled_assign(&self.basis[i].matrix, c);
        }
        out
    }

    /// Coordinates of a realization matrix over the basis.
    pub fn express_matrix(&self, m: &RatMatrix) -> Result<SparseVec> {
        let coords = self
            .expresser
            .express(m)
            .ok_or_else(|| Error::NotInSpan(format!("matrix not in {}", self.spec)))?;
        Ok(match &self.quotient {
            Some(quotient) => quotient.project(&coords),
            None => coords,
        })
    }

    /// Supercommutator computed on realization matrices and re-expressed.
    pub fn matrix_bracket(&self, i: usize, j: usize) -> Result<SparseVec> {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        self.express_matrix(&a.matrix.supercommutator(&b.matrix, both_odd(a, b)))
    }

    pub fn ad_matrix(&self, x: &SparseVec) -> RatMatrix {
        let cols = (0..self.dim())
            .map(|j| self.bracket_vec(x, &SparseVec::unit(j)))
            .collect();
        RatMatrix::from_columns(self.dim(), cols)
    }

    pub fn grading_operator(&self) -> Result<GradingOperator> {
        let size = self.realization_size();
        let matrix = RatMatrix::from_triplets(
            size,
            size,
            self.grading_diag
                .iter()
                .enumerate()
                .map(|(i, x)| (i, i, x.clone())),
        );
        let element = self.express_matrix(&matrix).ok();
        let mut constant = None;
        for b in &self.basis {
            let image = self.express_matrix(&matrix.supercommutator(&b.matrix, false))?;
            let expected_zero = b.zdegree == 0;
            let factor = if expected_zero {
                Rational::zero()
            } else {
                image.get(b.index) / q(b.zdegree as i64)
            };
            if image != SparseVec::unit(b.index).scaled(&(&factor * q(b.zdegree as i64))) {
                return Err(Error::Validation(format!(
                    "ad(d) is not scalar on {}",
                    b.label
                )));
            }
            if !expected_zero {
                match &constant {
                    None => constant = Some(factor),
                    Some(c) if *c == factor => {}
                    Some(_) => return Err(Error::Validation("ad(d) constant varies".into())),
                }
            }
        }
        let constant = constant
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Validation("ad(d) vanishes on g_1".into()))?;
        Ok(GradingOperator {
            matrix,
            element,
            constant,
        })
    }

    /// Coordinates of `[d, x_i]`.
    pub fn grading_action(&self, i: usize) -> Result<SparseVec> {
        let d = self.grading_operator()?;
        self.express_matrix(&d.matrix.supercommutator(&self.basis[i].matrix, false))
    }

    pub fn derived_subalgebra(&self) -> Result<Arc<LieSuperalgebra>> {
        let target = match self.spec.family {
            Family::Gl => AlgebraSpec::sl(self.spec.m, self.spec.n),
            Family::P => AlgebraSpec::p_prime(self.spec.n),
            _ => {
                return Err(Error::Unsupported(format!(
                    "derived subalgebra of {}",
                    self.spec
                )))
            }
        };
        let derived = build_algebra(target)?;
        let size = self.realization_size();
        let mut brackets = EchelonBasis::new(size * size);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                brackets.insert(self.matrix_of(&self.table[i][j]).flatten());
            }
        }
        let mut sub = EchelonBasis::new(size * size);
        for b in derived.basis() {
            sub.insert(b.matrix.flatten());
        }
        if brackets.into_subspace() != sub.into_subspace() {
            return Err(Error::Validation(format!(
                "{target} is not [g, g] for {}",
                self.spec
            )));
        }
        Ok(derived)
    }

    /// Coordinates over `self` of each basis element of `sub`.
    pub fn embedding_of(&self, sub: &LieSuperalgebra) -> Result<Vec<SparseVec>> {
        if sub.realization_size() != self.realization_size() || self.quotient.is_some() {
            return Err(Error::AlgebraMismatch(format!(
                "{} is not a subalgebra of {}",
                sub.spec, self.spec
            )));
        }
        sub.basis
            .iter()
            .map(|b| self.express_matrix(&b.matrix))
            .collect()
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let bit = |a: usize, b: usize| self.parity(a).bit() * self.parity(b).bit();
        let sign = |e: usize| if e % 2 == 0 { q(1) } else { q(-1) };
        let term = |a: usize, b: usize, c: usize| {
            let inner = &self.table[b][c];
            let mut out = SparseVec::new();
            for (&t, x) in inner {
                out.add_scaled(&self.table[a][t], x);
            }
            out.scaled(&sign(bit(a, c)))
        };
        let mut total = term(i, j, k);
        total.add_assign(&term(j, k, i));
        total.add_assign(&term(k, i, j));
        total
    }

    fn grading_ok(&self, i: usize, j: usize) -> bool {
        let target = self.zdegree(i) + self.zdegree(j);
        self.table[i][j]
            .indices()
            .all(|t| self.zdegree(t) == target)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if !self.grading_ok(i, j) {
                    return Err(Error::Validation(format!(
                        "[{}, {}] violates the Z-grading",
                        self.label(i),
                        self.label(j)
                    )));
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    if !self.jacobiator(i, j, k).is_zero() {
                        return Err(Error::Validation(format!(
                            "super-Jacobi fails on ({}, {}, {})",
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive structure check over all ordered basis triples.
    pub fn check_structure(&self) -> StructureReport {
        let n = self.dim();
        let mut report = StructureReport::default();
        for i in 0..n {
            for j in 0..n {
                if !self.grading_ok(i, j) {
                    report.grading_failures += 1;
                }
                let same_odd_degree = self.zdegree(i) == self.zdegree(j) && self.zdegree(i) != 0;
                if same_odd_degree && !self.table[i][j].is_zero() {
                    report.odd_square_failures += 1;
                }
                for k in 0..n {
                    report.triples_checked += 1;
                    if !self.jacobiator(i, j, k).is_zero() {
                        report.jacobi_failures += 1;
                    }
                }
            }
        }
        match self.grading_operator() {
            Ok(d) => {
                for b in &self.basis {
                    let expected =
                        SparseVec::unit(b.index).scaled(&(&d.constant * q(b.zdegree as i64)));
                    if self.grading_action(b.index).ok().as_ref() != Some(&expected) {
                        report.operator_failures += 1;
                    }
                }
            }
            Err(_) => report.operator_failures += 1,
        }
        report
    }

    /// Render a combination of basis elements, e.g. `e_{1,1} + e_{2,2}`.
    pub fn format_element(&self, x: &SparseVec) -> String {
        format_terms(
            x.iter()
                .map(|(&i, c)| (self.label(i).to_string(), c.clone())),
        )
    }
}

impl PartialEq for LieSuperalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for LieSuperalgebra {}

impl fmt::Display for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)
    }
}

/// Render `c_1 t_1 + c_2 t_2 + ...` with unit coefficients suppressed.
pub fn format_terms<I: IntoIterator<Item = (String, Rational)>>(terms: I) -> String {
    let mut out = String::new();
    for (term, c) in terms {
        let negative = c < Rational::zero();
        let magnitude = if negative { -c } else { c };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit = magnitude == q(1);
        if term.is_empty() {
            out.push_str(&format_rational(&magnitude));
        } else if unit {
            out.push_str(&term);
        } else {
            out.push_str(&format!("{}*{}", format_rational(&magnitude), term));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn block_parity_matches(m: &RatMatrix, odd_from: usize, parity: Parity) -> bool {
    m.triplets()
        .iter()
        .all(|(i, j, _)| ((*i >= odd_from) != (*j >= odd_from)) == parity.is_odd())
}
