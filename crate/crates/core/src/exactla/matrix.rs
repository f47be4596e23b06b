use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(16)])?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: ExactMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, entries: Vec<F::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { field, rows, cols, entries })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        ExactMatrix { field, rows, cols, entries }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds a matrix from integer entries, reduced into the field.
    pub fn from_i64(field: F, rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        let entries = data.iter().map(|&x| field.from_i64(x)).collect();
        Self::new(field, rows, cols, entries)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::ShapeMismatch(format!(
                    "column {c} has length {} instead of {rows}",
                    col.len()
                )));
            }
            for (r, x) in col.iter().enumerate() {
                m.entries[r * cols + c] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_rows(field: F, cols: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {r} has length {} instead of {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().cloned());
        }
        Self::new(field, rows.len(), cols, entries)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F::Elem) {
        self.entries[r * self.cols + c] = value;
    }

    /// Adds `value` to entry `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, value: &F::Elem) {
        let i = r * self.cols + c;
        self.entries[i] = self.field.add(&self.entries[i], value);
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let k = &self.field;
        let mut out = Self::zeros(k.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            let out_row = &mut out.entries[r * other.cols..(r + 1) * other.cols];
            for (i, a) in self.row(r).iter().enumerate() {
                k.axpy(out_row, a, other.row(i));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let k = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(k.zero(), |acc, (a, b)| {
                    if k.is_zero(a) || k.is_zero(b) {
                        acc
                    } else {
                        k.add(&acc, &k.mul(a, b))
                    }
                })
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self::new(self.field.clone(), self.rows + other.rows, self.cols, entries)
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn rref(&self) -> Rref<F> {
        let k = self.field.clone();
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for c in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(found) = (pivot_row..rows).find(|&r| !k.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = k.inv(m.get(pivot_row, c)).expect("pivot is nonzero");
            k.scale(&mut m.entries[pivot_row * cols..(pivot_row + 1) * cols], &inv);
            let pivot: Vec<F::Elem> = m.row(pivot_row).to_vec();
            for r in 0..rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if !k.is_zero(&factor) {
                    let neg = k.neg(&factor);
                    k.axpy(&mut m.entries[r * cols..(r + 1) * cols], &neg, &pivot);
                }
            }
            pivots.push(c);
            pivot_row += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.entries.split_at_mut(hi * cols);
        head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
    }

    /// Rank by forward elimination on rows.
    pub fn rank(&self) -> usize {
        let k = self.field.clone();
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(found) = (rank..rows).find(|&r| !k.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(found, rank);
            let inv = k.inv(m.get(rank, c)).expect("pivot is nonzero");
            let pivot: Vec<F::Elem> = m.row(rank).to_vec();
            for r in rank + 1..rows {
                let factor = m.get(r, c).clone();
                if !k.is_zero(&factor) {
                    let f = k.neg(&k.mul(&factor, &inv));
                    k.axpy(&mut m.entries[r * cols..(r + 1) * cols], &f, &pivot);
                }
            }
            rank += 1;
        }
        rank
    }

    /// A basis of the null space `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let k = &self.field;
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = matrix.get(i, free);
                if !k.is_zero(x) {
                    v[p] = k.neg(x);
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn rank_examples() {
        let z = ExactMatrix::zeros(Rationals, 3, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(ExactMatrix::identity(Rationals, 3).rank(), 3);
        let ones = ExactMatrix::from_i64(f2(), 2, 2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(ones.rank(), 1);
        assert_eq!(ExactMatrix::zeros(Rationals, 0, 4).rank(), 0);
        assert_eq!(ExactMatrix::zeros(Rationals, 4, 0).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(Rationals, 2).kernel_basis().is_empty());
        assert_eq!(ExactMatrix::zeros(Rationals, 2, 3).kernel_basis().len(), 3);
        let parity = ExactMatrix::from_i64(f2(), 1, 2, &[1, 1]).unwrap();
        assert_eq!(parity.kernel_basis(), vec![vec![1u32, 1]]);
    }

    #[test]
    fn characteristic_matters() {
        // [[1,1],[1,-1]] has determinant -2.
        let q = ExactMatrix::from_i64(Rationals, 2, 2, &[1, 1, 1, -1]).unwrap();
        let m2 = ExactMatrix::from_i64(f2(), 2, 2, &[1, 1, 1, -1]).unwrap();
        assert_eq!(q.rank(), 2);
        assert_eq!(m2.rank(), 1);
    }

    #[test]
    fn product_and_transpose() {
        let a = ExactMatrix::from_i64(Rationals, 2, 3, &[1, 2, 3, 4, 5, 6]).unwrap();
        let b = a.transpose();
        let c = a.mul(&b).unwrap();
        let want = ExactMatrix::from_i64(Rationals, 2, 2, &[14, 32, 32, 77]).unwrap();
        assert_eq!(c, want);
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn rref_of_rational_matrix() {
        let a = ExactMatrix::from_i64(Rationals, 2, 3, &[2, 4, 6, 1, 3, 5]).unwrap();
        let r = a.rref();
        assert_eq!(r.pivots, vec![0, 1]);
        let want = ExactMatrix::from_i64(Rationals, 2, 3, &[1, 0, -1, 0, 1, 2]).unwrap();
        assert_eq!(r.matrix, want);
    }
}
