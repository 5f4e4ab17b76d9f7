//! Elementary symmetric functions of a square matrix.
//!
//! For an n x n matrix A with eigenvalues counted by multiplicity,
//! S_k(A) is the k-th elementary symmetric function of the eigenvalues,
//! equal to the sum of all C(n, k) principal k x k minors, and up to
//! sign the coefficients of the characteristic polynomial
//! det(tI - A) = t^n - S_1 t^{n-1} + ... + (-1)^n S_n.
//!
//! Two independent algorithms are provided: [`symm_minors`] sums minors
//! directly (the oracle), while [`symm_all`] converts the traces of
//! A, A^2, ..., A^n through the Newton identities (the production path,
//! O(n^4) ring operations). Both are generic over the scalar ring, so
//! they apply unchanged to matrices of polynomials.

use crate::combinatorics::index_subsets;
use crate::det::det_bareiss;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::ring::Ring;
use num_traits::One;

/// The vector (S_0, S_1, ..., S_n) for one n x n matrix; S_0 = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmVector<R> {
    values: Vec<R>,
}

impl<R: Ring> SymmVector<R> {
    /// Wraps a value vector, enforcing the empty-product convention
    /// S_0 = 1.
    pub fn new(values: Vec<R>) -> Result<Self, Error> {
        match values.first() {
            Some(v) if v.is_one() => Ok(SymmVector { values }),
            Some(_) => Err(Error::invalid("S_0 must be 1".to_string())),
            None => Err(Error::invalid("empty symmetric-function vector".to_string())),
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<R>) -> Self {
        debug_assert!(values.first().is_some_and(One::is_one));
        SymmVector { values }
    }

    /// Matrix dimension n (one less than the stored length).
    pub fn dim(&self) -> usize {
        self.values.len() - 1
    }

    /// The stored values (S_0, ..., S_n).
    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// S_k, which is zero for k > n.
    pub fn get(&self, k: usize) -> R {
        self.values.get(k).cloned().unwrap_or_else(R::zero)
    }
}

/// The power sums (p_1, ..., p_m) with p_j = Tr(A^j).
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumVector<R> {
    values: Vec<R>,
}

impl<R: Ring> PowerSumVector<R> {
    pub fn new(values: Vec<R>) -> Self {
        PowerSumVector { values }
    }

    /// Computes (Tr(A), Tr(A^2), ..., Tr(A^count)).
    pub fn from_traces(a: &Matrix<R>, count: usize) -> Result<Self, Error> {
        a.require_square()?;
        let mut values = Vec::with_capacity(count);
        let mut power = a.clone();
        for j in 1..=count {
            values.push(power.trace());
            if j < count {
                power = &power * a;
            }
        }
        Ok(PowerSumVector { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The stored values (p_1, ..., p_m); index 0 holds p_1.
    pub fn values(&self) -> &[R] {
        &self.values
    }
}

/// S_k(A) as the sum of all k x k principal minors.
pub fn symm_minors<R: Ring>(a: &Matrix<R>, k: usize) -> Result<R, Error> {
    let n = a.require_square()?;
    if k > n {
        return Err(Error::invalid(format!(
            "S_{} undefined for a {}x{} matrix",
            k, n, n
        )));
    }
    let mut acc = R::zero();
    for subset in index_subsets(n, k)? {
        let minor = a.submatrix(&subset, &subset)?;
        acc = acc + det_bareiss(&minor)?;
    }
    Ok(acc)
}

/// All of S_0, ..., S_n by the trace recurrence: compute Tr(A^j) for
/// j = 1..n and convert with [`newton_to_elementary`].
pub fn symm_all<R: Ring>(a: &Matrix<R>) -> Result<SymmVector<R>, Error> {
    let n = a.require_square()?;
    let p = PowerSumVector::from_traces(a, n)?;
    Ok(newton_to_elementary(&p))
}

/// Ascending coefficients (c_0, ..., c_n) of det(tI - A), so c_n = 1
/// and c_{n-k} = (-1)^k S_k(A).
pub fn charpoly_coeffs<R: Ring>(a: &Matrix<R>) -> Result<Vec<R>, Error> {
    let s = symm_all(a)?;
    let n = s.dim();
    Ok((0..=n)
        .map(|j| {
            let k = n - j;
            let v = s.get(k);
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect())
}

/// Elementary symmetric functions from power sums by the Newton
/// identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
pub fn newton_to_elementary<R: Ring>(p: &PowerSumVector<R>) -> SymmVector<R> {
    let n = p.len();
    let mut e = Vec::with_capacity(n + 1);
    e.push(R::one());
    for k in 1..=n {
        let mut acc = R::zero();
        for i in 1..=k {
            let term = e[k - i].clone() * p.values()[i - 1].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc.div_int(k as i64));
    }
    SymmVector::from_values_unchecked(e)
}

/// Power sums from elementary symmetric functions, inverting
/// [`newton_to_elementary`]:
/// p_k = (-1)^{k-1} k e_k + sum_{i=1..k-1} (-1)^{i-1} e_i p_{k-i}.
pub fn elementary_to_newton<R: Ring>(e: &SymmVector<R>) -> PowerSumVector<R> {
    let n = e.dim();
    let mut p: Vec<R> = Vec::with_capacity(n);
    for k in 1..=n {
        let lead = e.get(k) * R::from_i64(k as i64);
        let mut acc = if k % 2 == 1 { lead } else { -lead };
        for i in 1..k {
            let term = e.get(i) * p[k - i - 1].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        p.push(acc);
    }
    PowerSumVector::new(p)
}
