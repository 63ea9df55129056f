use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Integral domain with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, where the caller guarantees `rhs` divides `self`.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl ExactRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl ExactRing for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        Polynomial::exact_div(self, rhs)
    }
}

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

pub type PolyMatrix = Matrix<Polynomial>;
pub type RationalMatrix = Matrix<Rational>;

impl<T: ExactRing> Matrix<T> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: bad.len(),
            });
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn map<U: ExactRing>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Copy of the matrix with column `j` (0-based) replaced by `column`.
    pub fn replace_column(&self, j: usize, column: &[T]) -> Result<Self> {
        if j >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.dim,
            });
        }
        if column.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: column.len(),
            });
        }
        let mut out = self.clone();
        for (i, v) in column.iter().enumerate() {
            out.entries[i * self.dim + j] = v.clone();
        }
        Ok(out)
    }

    /// Determinant by Bareiss fraction-free elimination.
    ///
    /// Every division in the loop is exact in the ring, so intermediate entries
    /// stay in the ring (polynomials stay polynomials).
    pub fn determinant(&self) -> T {
        let n = self.dim;
        let mut a: Vec<Vec<T>> = self.entries.chunks(n).map(<[T]>::to_vec).collect();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.exact_div(&prev);
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            det.neg()
        } else {
            det
        }
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.dim)
    }
}
