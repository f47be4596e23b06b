use rayon::prelude::*;

use super::ExactMatrix;
use crate::error::{Error, Result};
use crate::field::Field;

/// A bounded chain complex `C_N -> ... -> C_1 -> C_0` of finite-dimensional
/// spaces. `differentials[n - 1]` is `d_n : C_n -> C_{n-1}`, of shape
/// `dims[n-1] x dims[n]`.
#[derive(Clone, Debug)]
pub struct ChainComplex<F: Field> {
    field: F,
    dims: Vec<usize>,
    differentials: Vec<ExactMatrix<F>>,
}

impl<F: Field> ChainComplex<F> {
    /// Validates shapes and `d_n ∘ d_{n+1} = 0`.
    pub fn new(field: F, dims: Vec<usize>, differentials: Vec<ExactMatrix<F>>) -> Result<Self> {
        if dims.is_empty() {
            if !differentials.is_empty() {
                return Err(Error::ShapeMismatch("differentials without spaces".into()));
            }
        } else if differentials.len() != dims.len() - 1 {
            return Err(Error::ShapeMismatch(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            let n = i + 1;
            if d.rows() != dims[n - 1] || d.cols() != dims[n] {
                return Err(Error::ShapeMismatch(format!(
                    "d_{n} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[n - 1],
                    dims[n]
                )));
            }
        }
        for (i, pair) in differentials.windows(2).enumerate() {
            if !pair[0].mul(&pair[1])?.is_zero() {
                return Err(Error::DifferentialSquareNonzero(i + 1));
            }
        }
        Ok(ChainComplex { field, dims, differentials })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    /// `d_n`, for `1 <= n <= N`.
    pub fn differential(&self, n: usize) -> Option<&ExactMatrix<F>> {
        n.checked_sub(1).and_then(|i| self.differentials.get(i))
    }

    /// Ranks of `d_1..d_N`, computed in parallel.
    pub fn differential_ranks(&self) -> Vec<usize> {
        self.differentials.par_iter().map(|d| d.rank()).collect()
    }

    /// `dim H_n = dims[n] - rank d_n - rank d_{n+1}` for every degree `0..=N`;
    /// differentials outside the complex are zero maps.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks = self.differential_ranks();
        let rank_of = |n: usize| -> usize {
            if n == 0 {
                0
            } else {
                ranks.get(n - 1).copied().unwrap_or(0)
            }
        };
        (0..self.dims.len())
            .map(|n| self.dims[n] - rank_of(n) - rank_of(n + 1))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn point_complex() {
        let c = ChainComplex::new(Rationals, vec![1], vec![]).unwrap();
        assert_eq!(c.homology_dims(), vec![1]);
    }

    #[test]
    fn identity_is_exact() {
        let d = ExactMatrix::identity(Rationals, 1);
        let c = ChainComplex::new(Rationals, vec![1, 1], vec![d]).unwrap();
        assert_eq!(c.homology_dims(), vec![0, 0]);
    }

    #[test]
    fn rejects_nonzero_square() {
        let d1 = ExactMatrix::identity(Rationals, 1);
        let d2 = ExactMatrix::identity(Rationals, 1);
        let err = ChainComplex::new(Rationals, vec![1, 1, 1], vec![d1, d2]).unwrap_err();
        assert_eq!(err, Error::DifferentialSquareNonzero(1));
    }

    #[test]
    fn rejects_bad_shape() {
        let d = ExactMatrix::zeros(Rationals, 2, 1);
        assert!(ChainComplex::new(Rationals, vec![1, 1], vec![d]).is_err());
    }

    #[test]
    fn cech_of_two_chain_by_hand() {
        // M = {0, a} (a + a = a) collapsing onto the trivial monoid.
        // X_0 = M, X_1 = M x M, X_2 = M x M x M; faces delete a coordinate.
        // Basis of X_1 ordered (x0, x1) -> 2*x0 + x1; d = d_0 - d_1 with
        // d_0(x0, x1) = x1 and d_1(x0, x1) = x0.
        let k = PrimeField::new(3).unwrap();
        let mut d1 = ExactMatrix::zeros(k, 2, 4);
        for x0 in 0..2 {
            for x1 in 0..2 {
                let col = 2 * x0 + x1;
                d1.add_to(x1, col, &1);
                d1.add_to(x0, col, &k.neg(&1));
            }
        }
        let mut d2 = ExactMatrix::zeros(k, 4, 8);
        for x0 in 0..2 {
            for x1 in 0..2 {
                for x2 in 0..2 {
                    let col = 4 * x0 + 2 * x1 + x2;
                    let faces = [(x1, x2), (x0, x2), (x0, x1)];
                    for (i, (a, b)) in faces.iter().enumerate() {
                        let sign = if i % 2 == 0 { 1 } else { k.neg(&1) };
                        d2.add_to(2 * a + b, col, &sign);
                    }
                }
            }
        }
        let c = ChainComplex::new(k, vec![2, 4, 8], vec![d1.clone(), d2]).unwrap();
        let h = c.homology_dims();
        assert_eq!(h[0], 1);
        assert_eq!(h[1], 0);

        // augmented: k[X_1] -> k[X_0] -> k[A] -> 0, A trivial
        let aug = ExactMatrix::from_i64(k, 1, 2, &[1, 1]).unwrap();
        let c = ChainComplex::new(k, vec![1, 2, 4], vec![aug, d1]).unwrap();
        let h = c.homology_dims();
        assert_eq!(&h[..2], &[0, 0]);
    }
}
