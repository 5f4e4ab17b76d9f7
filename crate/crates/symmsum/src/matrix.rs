//! Dense row-major matrices over a generic scalar ring.
//!
//! Low-level arithmetic (operators, `trace`, indexing) asserts dimension
//! compatibility and panics on misuse; the operations exposed as library
//! entry points validate their inputs and return [`Error`].

use crate::error::Error;
use crate::ring::Ring;
use std::ops::{Add, Index, Mul, Neg, Sub};

/// Strictly increasing set of 0-based row or column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Builds an index set, rejecting unsorted or repeated indices.
    pub fn new(indices: Vec<usize>) -> Result<Self, Error> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::invalid(format!(
                    "index set must be strictly increasing, got {:?}",
                    indices
                )));
            }
        }
        Ok(IndexSet(indices))
    }

    /// The full set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    /// Internal constructor for indices already known to be sorted.
    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexSet(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Largest index, if any.
    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

/// Dense matrix with row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::dim(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::dim("rows of unequal length".to_string()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(diag: &[R]) -> Self {
        let n = diag.len();
        Matrix::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&R> {
        if i < self.rows && j < self.cols {
            Some(&self.entries[i * self.cols + j])
        } else {
            None
        }
    }

    pub(crate) fn require_square(&self) -> Result<usize, Error> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Sum of the diagonal. Panics if the matrix is not square.
    pub fn trace(&self) -> R {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(R::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// The submatrix lying in `rows` x `cols`, preserving relative order.
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Self, Error> {
        if let Some(i) = rows.max().filter(|&i| i >= self.rows) {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rows,
            });
        }
        if let Some(j) = cols.max().filter(|&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.cols,
            });
        }
        let rs = rows.as_slice();
        let cs = cols.as_slice();
        Ok(Matrix::from_fn(rs.len(), cs.len(), |i, j| {
            self[(rs[i], cs[j])].clone()
        }))
    }

    /// `m`-th power of a square matrix; `m = 0` gives the identity.
    pub fn pow(&self, m: usize) -> Result<Self, Error> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..m {
            acc = &acc * self;
        }
        Ok(acc)
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;

    fn index(&self, (i, j): (usize, usize)) -> &R {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;

    fn add(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix addition dimension mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;

    fn sub(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix subtraction dimension mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<R: Ring> Neg for &Matrix<R> {
    type Output = Matrix<R>;

    fn neg(self) -> Matrix<R> {
        self.map(|x| -x.clone())
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;

    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch"
        );
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }
}
