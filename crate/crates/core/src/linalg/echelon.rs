use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::matrix::RatMatrix;
use super::rational::Rational;
use super::vector::SparseVec;
use crate::error::{Error, Result};

/// Incrementally maintained reduced row echelon basis.
///
/// Every stored row has a leading 1 in its pivot column and zeros in the pivot
/// columns of all other rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    row_of_pivot: BTreeMap<usize, usize>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of_pivot: BTreeMap::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        let hits: Vec<usize> = v
            .indices()
            .filter(|c| self.row_of_pivot.contains_key(c))
            .collect();
        for col in hits {
            let coeff = out.get(col);
            if !coeff.is_zero() {
                let row = &self.rows[self.row_of_pivot[&col]];
                out.add_scaled(row, &-coeff);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.max_index().map_or(true, |i| i < self.ambient));
        let mut r = self.reduce(&v);
        let Some((pivot, lead)) = r.leading().map(|(p, x)| (p, x.clone())) else {
            return false;
        };
        r.scale(&(Rational::one() / lead));
        for row in &mut self.rows {
            let c = row.get(pivot);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.row_of_pivot.insert(pivot, self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(r);
        true
    }

    /// Coefficients of `v` in terms of the stored rows (in insertion order),
    /// or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_subspace(self) -> Subspace {
        let mut pairs: Vec<(usize, SparseVec)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        Subspace {
            ambient: self.ambient,
            basis: pairs.into_iter().map(|(_, r)| r).collect(),
        }
    }
}

/// A linear subspace of `Q^ambient`, stored by its canonical reduced echelon basis.
///
/// Two subspaces with the same span compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

/// Result of [`subspace_ops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// Whether the first subspace contains the second.
    pub contains: bool,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(SparseVec::unit).collect(),
        }
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(ambient: usize, vectors: I) -> Self {
        let mut eb = EchelonBasis::new(ambient);
        for v in vectors {
            eb.insert(v);
        }
        eb.into_subspace()
    }

    /// Span of the listed standard basis vectors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::span(ambient, indices.iter().map(|&i| SparseVec::unit(i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.leading().map(|(p, _)| p).unwrap_or(0))
            .collect()
    }

    fn echelon(&self) -> EchelonBasis {
        let mut eb = EchelonBasis::new(self.ambient);
        for v in &self.basis {
            eb.insert(v.clone());
        }
        eb
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        let mut r = v.clone();
        for row in &self.basis {
            let (p, _) = row.leading().expect("echelon rows are nonzero");
            let c = r.get(p);
            if !c.is_zero() {
                r.add_scaled(row, &-c);
            }
        }
        r.is_zero()
    }

    /// `self ⊇ other`.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Coordinates of `v` in the stored basis, `None` if `v` lies outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots().into_iter().map(|p| v.get(p)).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut eb = self.echelon();
        for v in &other.basis {
            eb.insert(v.clone());
        }
        Ok(eb.into_subspace())
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let p = self.dim();
        let mut cols: Vec<SparseVec> = self.basis.clone();
        cols.extend(other.basis.iter().map(SparseVec::neg));
        let relations = kernel(&RatMatrix::from_columns(self.ambient, cols));
        let vectors = relations.basis().iter().map(|rel| {
            let mut v = SparseVec::new();
            for (&i, a) in rel {
                if i < p {
                    v.add_scaled(&self.basis[i], a);
                }
            }
            v
        });
        Ok(Subspace::span(self.ambient, vectors.collect::<Vec<_>>()))
    }

    /// Vectors `x` with `<b, x> = 0` for every basis row `b`.
    pub fn annihilator(&self) -> Subspace {
        kernel(&RatMatrix::from_rows(self.ambient, &self.basis))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

pub fn subspace_ops(u: &Subspace, v: &Subspace) -> Result<SubspaceOps> {
    Ok(SubspaceOps {
        sum: u.sum(v)?,
        intersection: u.intersection(v)?,
        contains: u.contains_subspace(v),
    })
}

/// Right null space of `m`.
pub fn kernel(m: &RatMatrix) -> Subspace {
    let ncols = m.ncols();
    let mut eb = EchelonBasis::new(ncols);
    for row in m.rows() {
        eb.insert(row);
        if eb.is_full() {
            break;
        }
    }
    kernel_from_echelon(&eb)
}

/// Null space of the row space held in `eb`.
pub fn kernel_from_echelon(eb: &EchelonBasis) -> Subspace {
    let ncols = eb.ambient();
    let mut is_pivot = vec![false; ncols];
    for &p in eb.pivots() {
        is_pivot[p] = true;
    }
    let vectors = (0..ncols).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = SparseVec::unit(f);
        for (row, &p) in eb.rows().iter().zip(eb.pivots()) {
            let c = row.get(f);
            if !c.is_zero() {
                v.set(p, -c);
            }
        }
        v
    });
    Subspace::span(ncols, vectors.collect::<Vec<_>>())
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve_linear(a: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != a.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for a matrix with {} rows",
            b.len(),
            a.nrows()
        )));
    }
    let n = a.ncols();
    let mut eb = EchelonBasis::new(n + 1);
    for (mut row, rhs) in a.rows().into_iter().zip(b) {
        row.set(n, rhs.clone());
        eb.insert(row);
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in eb.rows().iter().zip(eb.pivots()) {
        if p == n {
            return Ok(None);
        }
        x[p] = row.get(n);
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;
    use proptest::prelude::*;

    fn vec_of(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&RatMatrix::identity(2)).is_zero());
        let k = kernel(&RatMatrix::from_dense(&[vec![q(1), q(1)]]));
        assert_eq!(k, Subspace::span(2, [vec_of(&[1, -1])]));
        assert!(kernel(&RatMatrix::zeros(3, 3)).is_full());
    }

    #[test]
    fn solve_examples() {
        let x = solve_linear(&RatMatrix::identity(2), &[q(1), q(2)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
        let a = RatMatrix::from_dense(&[vec![q(1), q(1)]]);
        let x = solve_linear(&a, &[q(0)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], q(0));
        assert_eq!(
            solve_linear(&RatMatrix::zeros(1, 1), &[q(1)]).unwrap(),
            None
        );
        assert!(matches!(
            solve_linear(&RatMatrix::identity(2), &[q(1)]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn subspace_examples() {
        let u = Subspace::span(2, [vec_of(&[1, 2])]);
        let ops = subspace_ops(&u, &u).unwrap();
        assert_eq!(ops.sum, u);
        assert_eq!(ops.intersection, u);
        assert!(ops.contains);

        let a = Subspace::span(2, [vec_of(&[1, 0])]);
        let b = Subspace::span(2, [vec_of(&[0, 1])]);
        let ops = subspace_ops(&a, &b).unwrap();
        assert!(ops.sum.is_full());
        assert!(ops.intersection.is_zero());
        assert!(!ops.contains);

        let u = Subspace::span(3, [vec_of(&[1, 0, 0])]);
        let v = Subspace::span(3, [vec_of(&[1, 1, 0]), vec_of(&[0, 1, 0])]);
        let ops = subspace_ops(&u, &v).unwrap();
        assert_eq!(ops.intersection, u);
        assert_eq!(ops.sum, v);
        assert!(!ops.contains);
        assert!(v.contains_subspace(&u));

        assert!(u.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_dense(&[vec![q(2), q(1)], vec![q(1), q(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert!(RatMatrix::zeros(2, 2).inverse().is_err());
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |xs| {
                let rows: Vec<Vec<Rational>> = xs
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&x| q(x)).collect())
                    .collect();
                RatMatrix::from_dense(&rows)
            })
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(m in small_matrix()) {
            let k = kernel(&m);
            prop_assert_eq!(m.rank() + k.dim(), m.ncols());
            for v in k.basis() {
                prop_assert!(m.apply(v).is_zero());
            }
        }

        #[test]
        fn solutions_satisfy_system(m in small_matrix(), seed in prop::collection::vec(-3i64..=3, 5)) {
            let x0: Vec<Rational> = (0..m.ncols()).map(|i| q(seed[i % seed.len()])).collect();
            let b = m.apply(&SparseVec::from_dense(&x0)).to_dense(m.nrows());
            let x = solve_linear(&m, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.apply(&SparseVec::from_dense(&x)).to_dense(m.nrows()), b);
        }

        #[test]
        fn echelon_form_is_canonical(m in small_matrix(), shift in -2i64..=2) {
            let rows = m.rows();
            let a = Subspace::span(m.ncols(), rows.clone());
            // same span, different generators: add a multiple of row 0 to every other row
            let mut mixed = rows.clone();
            for i in 1..mixed.len() {
                let r0 = rows[0].clone();
                mixed[i].add_scaled(&r0, &q(shift));
            }
            mixed.reverse();
            let b = Subspace::span(m.ncols(), mixed);
            prop_assert_eq!(a, b);
        }

        #[test]
        fn dimension_formula(m1 in small_matrix(), m2 in small_matrix()) {
            let n = m1.ncols().min(m2.ncols());
            let cut = |m: &RatMatrix| Subspace::span(n, m.rows().iter().map(|r| r.remap(|i| (i < n).then_some(i))).collect::<Vec<_>>());
            let (u, v) = (cut(&m1), cut(&m2));
            let ops = subspace_ops(&u, &v).unwrap();
            prop_assert_eq!(ops.sum.dim() + ops.intersection.dim(), u.dim() + v.dim());
            prop_assert!(ops.sum.contains_subspace(&u) && ops.sum.contains_subspace(&v));
            prop_assert!(u.contains_subspace(&ops.intersection) && v.contains_subspace(&ops.intersection));
        }
    }
}
