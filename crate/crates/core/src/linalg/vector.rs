use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::rational::{format_rational, Rational};

/// Sparse rational vector; absent indices are zero and zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: BTreeMap<usize, Rational>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(index, Rational::from_integer(1.into()));
        v
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        Self { entries }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut v = Self::new();
        for (i, x) in pairs {
            v.add_at(i, &x);
        }
        v
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (&i, x) in &self.entries {
            out[i] = x.clone();
        }
        out
    }

    pub fn get(&self, index: usize) -> Rational {
        self.entries
            .get(&index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn get_ref(&self, index: usize) -> Option<&Rational> {
        self.entries.get(&index)
    }

    pub fn set(&mut self, index: usize, value: Rational) {
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    pub fn add_at(&mut self, index: usize, value: &Rational) {
        if value.is_zero() {
            return;
        }
        match self.entries.entry(index) {
            Entry::Vacant(slot) => {
                slot.insert(value.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &SparseVec, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (&i, x) in &other.entries {
            self.add_at(i, &(x * factor));
        }
    }

    pub fn add_assign(&mut self, other: &SparseVec) {
        for (&i, x) in &other.entries {
            self.add_at(i, x);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> SparseVec {
        if factor.is_zero() {
            return SparseVec::new();
        }
        let entries = self.entries.iter().map(|(&i, x)| (i, x * factor)).collect();
        SparseVec { entries }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.entries.clear();
            return;
        }
        for x in self.entries.values_mut() {
            *x *= factor;
        }
    }

    pub fn neg(&self) -> SparseVec {
        let entries = self.entries.iter().map(|(&i, x)| (i, -x)).collect();
        SparseVec { entries }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (small, large) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (i, x) in &small.entries {
            if let Some(y) = large.entries.get(i) {
                acc += x * y;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// First nonzero entry (smallest index).
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(&i, x)| (i, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, usize, Rational> {
        self.entries.iter()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// Re-index the entries through `map`; entries mapped to `None` are dropped.
    pub fn remap<F: Fn(usize) -> Option<usize>>(&self, map: F) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, x) in &self.entries {
            if let Some(j) = map(i) {
                out.add_at(j, x);
            }
        }
        out
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        SparseVec::from_pairs(iter)
    }
}

impl<'a> IntoIterator for &'a SparseVec {
    type Item = (&'a usize, &'a Rational);
    type IntoIter = btree_map::Iter<'a, usize, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, x)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {}", format_rational(x))?;
        }
        write!(f, "}}")
    }
}
