use std::fmt;

use num_traits::{One, Zero};

use super::echelon::EchelonBasis;
use super::rational::{format_rational, Rational};
use super::vector::SparseVec;
use crate::error::{Error, Result};

/// Sparse rational matrix stored column by column.
///
/// Column `j` holds the image of the `j`-th standard basis vector, which is the
/// natural shape for action matrices of modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn scalar(n: usize, value: &Rational) -> Self {
        Self::identity(n).scaled(value)
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.max_index().map_or(true, |i| i < rows)));
        Self { rows, cols }
    }

    pub fn from_rows(cols: usize, rows: &[SparseVec]) -> Self {
        let mut out = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (&j, x) in row {
                out.cols[j].set(i, x.clone());
            }
        }
        out
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let sparse: Vec<SparseVec> = rows.iter().map(|r| SparseVec::from_dense(r)).collect();
        Self::from_rows(ncols, &sparse)
    }

    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, Rational)>>(
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Self {
        let mut out = Self::zeros(rows, cols);
        for (i, j, x) in triplets {
            out.cols[j].add_at(i, &x);
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.cols[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(
            row < self.rows && col < self.cols.len(),
            "index out of bounds"
        );
        self.cols[col].set(row, value);
    }

    pub fn add_at(&mut self, row: usize, col: usize, value: &Rational) {
        assert!(
            row < self.rows && col < self.cols.len(),
            "index out of bounds"
        );
        self.cols[col].add_at(row, value);
    }

    pub fn column(&self, col: usize) -> &SparseVec {
        &self.cols[col]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        let mut out = vec![SparseVec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, x) in col {
                out[i].set(j, x.clone());
            }
        }
        out
    }

    /// Triplets `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(&i, x)| (i, j, x.clone())))
            .collect()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix {
            rows: self.cols.len(),
            cols: self.rows(),
        }
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, x) in v {
            out.add_scaled(&self.cols[j], x);
        }
        out
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch in product");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        RatMatrix {
            rows: self.rows,
            cols,
        }
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        self.add_scaled(other, &-Rational::one())
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, other: &RatMatrix, factor: &Rational) -> RatMatrix {
        assert_eq!(
            (self.rows, self.ncols()),
            (other.rows, other.ncols()),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (col, ocol) in out.cols.iter_mut().zip(&other.cols) {
            col.add_scaled(ocol, factor);
        }
        out
    }

    pub fn add_scaled_assign(&mut self, other: &RatMatrix, factor: &Rational) {
        assert_eq!(
            (self.rows, self.ncols()),
            (other.rows, other.ncols()),
            "shape mismatch"
        );
        for (col, ocol) in self.cols.iter_mut().zip(&other.cols) {
            col.add_scaled(ocol, factor);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols.iter().map(|c| c.scaled(factor)).collect(),
        }
    }

    /// Commutator `AB - sign * BA`.
    pub fn supercommutator(&self, other: &RatMatrix, both_odd: bool) -> RatMatrix {
        let ab = self.mul(other);
        let ba = other.mul(self);
        if both_odd {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    pub fn trace(&self) -> Rational {
        let mut acc = Rational::zero();
        for (j, col) in self.cols.iter().enumerate() {
            if let Some(x) = col.get_ref(j) {
                acc += x;
            }
        }
        acc
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, col)| col.indices().all(|i| i == j))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.ncols()))
            .map(|i| self.get(i, i))
            .collect()
    }

    /// Returns `Some(c)` when the matrix equals `c` times the identity.
    pub fn scalar_value(&self) -> Option<Rational> {
        if !self.is_square() || !self.is_diagonal() {
            return None;
        }
        let diag = self.diagonal();
        let first = diag.first().cloned().unwrap_or_else(Rational::zero);
        diag.iter().all(|x| *x == first).then_some(first)
    }

    /// Restrict to the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let mut row_pos = vec![None; self.rows];
        for (k, &r) in rows.iter().enumerate() {
            row_pos[r] = Some(k);
        }
        let cols = cols
            .iter()
            .map(|&c| self.cols[c].remap(|i| row_pos[i]))
            .collect();
        RatMatrix {
            rows: rows.len(),
            cols,
        }
    }

    /// Flatten column-major into a vector of length `rows * cols`.
    pub fn flatten(&self) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, x) in col {
                out.set(j * self.rows + i, x.clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.rows);
        for col in &self.cols {
            basis.insert(col.clone());
        }
        basis.dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Exact inverse via Gauss-Jordan on the augmented matrix.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows,
                self.ncols()
            )));
        }
        let n = self.rows;
        let mut rows: Vec<SparseVec> = self.rows();
        for (i, row) in rows.iter_mut().enumerate() {
            row.set(n + i, Rational::one());
        }
        let mut basis = EchelonBasis::new(2 * n);
        for row in rows {
            basis.insert(row);
        }
        let reduced = basis.into_subspace();
        if reduced.dim() != n
            || reduced
                .basis()
                .iter()
                .any(|r| r.leading().map_or(true, |(p, _)| p >= n))
        {
            return Err(Error::Singular);
        }
        let inv_rows: Vec<SparseVec> = reduced
            .basis()
            .iter()
            .map(|r| r.remap(|j| (j >= n).then(|| j - n)))
            .collect();
        Ok(RatMatrix::from_rows(n, &inv_rows))
    }

    pub fn pow(&self, exponent: usize) -> RatMatrix {
        let mut acc = RatMatrix::identity(self.rows);
        for _ in 0..exponent {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.ncols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, x) in col {
                out[i][j] = x.clone();
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &RatMatrix) -> RatMatrix {
        let shift = self.rows;
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.remap(|i| Some(i + shift))));
        RatMatrix {
            rows: self.rows + other.rows,
            cols,
        }
    }

    /// Kronecker product, index `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let (p, q) = (other.rows, other.ncols());
        let mut cols = vec![SparseVec::new(); self.ncols() * q];
        for (j, col) in self.cols.iter().enumerate() {
            for (l, ocol) in other.cols.iter().enumerate() {
                let target = &mut cols[j * q + l];
                for (&i, x) in col {
                    for (&k, y) in ocol {
                        target.set(i * p + k, x * y);
                    }
                }
            }
        }
        RatMatrix {
            rows: self.rows * p,
            cols,
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dense = self.to_dense();
        let cells: Vec<Vec<String>> = dense
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}
