//! Matrix-valued polynomials in one variable.
//!
//! A `MatPoly` is a list of coefficient matrices C_0..C_d representing
//! C_0 + C_1 t + ... + C_d t^d. Multiplication is the Cauchy product
//! with the factor order of each term preserved, since the coefficients
//! do not commute. The trailing coefficient may be zero: the stored
//! degree is an upper bound.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
pub struct MatPoly<R> {
    coeffs: Vec<Matrix<R>>,
    rows: usize,
    cols: usize,
}

impl<R: Ring> MatPoly<R> {
    /// Builds a matrix polynomial from coefficient matrices of equal
    /// shape, lowest degree first.
    pub fn new(coeffs: Vec<Matrix<R>>) -> Result<Self, Error> {
        let Some(first) = coeffs.first() else {
            return Err(Error::invalid(
                "matrix polynomial needs at least one coefficient".to_string(),
            ));
        };
        let (rows, cols) = (first.rows(), first.cols());
        for c in &coeffs {
            if (c.rows(), c.cols()) != (rows, cols) {
                return Err(Error::dim(format!(
                    "coefficient shapes differ: {}x{} vs {}x{}",
                    rows,
                    cols,
                    c.rows(),
                    c.cols()
                )));
            }
        }
        Ok(MatPoly { coeffs, rows, cols })
    }

    pub fn constant(m: Matrix<R>) -> Self {
        let (rows, cols) = (m.rows(), m.cols());
        MatPoly {
            coeffs: vec![m],
            rows,
            cols,
        }
    }

    /// The linear pencil A + tB.
    pub fn pencil(a: &Matrix<R>, b: &Matrix<R>) -> Result<Self, Error> {
        if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
            return Err(Error::dim(format!(
                "pencil parts differ in shape: {}x{} vs {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        MatPoly::new(vec![a.clone(), b.clone()])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Upper bound on the degree (the index of the last stored
    /// coefficient, which may be zero).
    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Matrix<R>] {
        &self.coeffs
    }

    /// Coefficient of t^l, a zero matrix beyond the stored degree.
    pub fn coeff(&self, l: usize) -> Matrix<R> {
        self.coeffs
            .get(l)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.rows, self.cols))
    }

    /// Horner evaluation at the scalar `t`.
    pub fn eval(&self, t: &R) -> Matrix<R> {
        let mut acc = self.coeffs.last().expect("nonempty by invariant").clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = &acc.scale(t) + c;
        }
        acc
    }

    /// Cauchy product: coefficient C_l = sum_{i+j=l} P_i Q_j, factor
    /// order preserved.
    pub fn mul(&self, rhs: &MatPoly<R>) -> Result<MatPoly<R>, Error> {
        if self.cols != rhs.rows {
            return Err(Error::dim(format!(
                "product shapes incompatible: {}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let deg = self.degree_bound() + rhs.degree_bound();
        let mut out: Vec<Matrix<R>> = (0..=deg)
            .map(|_| Matrix::zeros(self.rows, rhs.cols))
            .collect();
        for (i, p) in self.coeffs.iter().enumerate() {
            for (j, q) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(p * q);
            }
        }
        MatPoly::new(out)
    }

    /// Reads the same data as a matrix whose entries are scalar
    /// polynomials, the form the symmetric-function routines consume.
    pub fn to_poly_matrix(&self) -> Matrix<Poly<R>> {
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            Poly::new(self.coeffs.iter().map(|c| c[(i, j)].clone()).collect())
        })
    }
}

/// (A + tB)^m by repeated pencil multiplication; the result stores
/// exactly m+1 coefficients. The coefficient of t^k is the sum of all
/// C(m, k) words in A and B of length m with k letters B.
pub fn matpoly_pow<R: Ring>(
    a: &Matrix<R>,
    b: &Matrix<R>,
    m: usize,
) -> Result<MatPoly<R>, Error> {
    let n = a.require_square()?;
    if b.require_square()? != n {
        return Err(Error::dim(format!(
            "pencil parts differ in dimension: {} vs {}",
            n,
            b.rows()
        )));
    }
    let mut acc = MatPoly::constant(Matrix::identity(n));
    if m == 0 {
        return Ok(acc);
    }
    let pencil = MatPoly::pencil(a, b)?;
    for _ in 0..m {
        acc = acc.mul(&pencil)?;
    }
    Ok(acc)
}
