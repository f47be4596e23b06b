use crate::field::Field;

/// An incrementally grown subspace of `k^dim`, kept in reduced row echelon form.
///
/// Every stored row has a leading one at its pivot column and zeros at all
/// other pivot columns, so reducing a vector only needs one pass over the
/// pivots.
#[derive(Clone, Debug)]
pub struct EchelonSpace<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    row_of_col: Vec<Option<usize>>,
}

impl<F: Field> EchelonSpace<F> {
    pub fn new(field: F, dim: usize) -> Self {
        EchelonSpace { field, dim, rows: Vec::new(), pivots: Vec::new(), row_of_col: vec![None; dim] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// The stored basis, in reduced echelon form.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the span from `v`, leaving the canonical representative of
    /// `v` modulo the stored subspace.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        debug_assert_eq!(v.len(), self.dim);
        let k = &self.field;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !k.is_zero(&v[c]) {
                let factor = k.neg(&v[c]);
                k.axpy(v, &factor, row);
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        if self.is_full() {
            return true;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let k = self.field.clone();
        let Some(lead) = v.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&v[lead]).expect("leading entry is nonzero");
        k.scale(&mut v, &inv);
        for row in self.rows.iter_mut() {
            if !k.is_zero(&row[lead]) {
                let factor = k.neg(&row[lead]);
                k.axpy(row, &factor, &v);
            }
        }
        self.row_of_col[lead] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(lead);
        true
    }

    /// Coordinates of a vector of the span in terms of the stored basis, or
    /// `None` when the vector lies outside the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let k = &self.field;
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let mut w = v.to_vec();
        for (row, a) in self.rows.iter().zip(&coords) {
            let neg = k.neg(a);
            k.axpy(&mut w, &neg, row);
        }
        w.iter().all(|x| k.is_zero(x)).then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn grows_and_detects_membership() {
        let mut s = EchelonSpace::new(Rationals, 3);
        assert!(s.insert(q(&[1, 2, 3])));
        assert!(s.insert(q(&[0, 1, 1])));
        assert!(!s.insert(q(&[2, 5, 7])));
        assert!(s.contains(&q(&[1, 3, 4])));
        assert!(!s.contains(&q(&[0, 0, 1])));
        assert_eq!(s.rank(), 2);
        let c = s.coordinates(&q(&[2, 5, 7])).unwrap();
        assert_eq!(c.len(), 2);
        assert!(s.coordinates(&q(&[0, 0, 1])).is_none());
    }

    #[test]
    fn full_space_over_f2() {
        let k = PrimeField::new(2).unwrap();
        let mut s = EchelonSpace::new(k, 2);
        assert!(s.insert(vec![1, 1]));
        assert!(!s.insert(vec![1, 1]));
        assert!(s.insert(vec![0, 1]));
        assert!(s.is_full());
        assert!(s.contains(&[1, 0]));
    }
}
