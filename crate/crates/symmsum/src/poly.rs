//! Univariate polynomials with ascending coefficients.
//!
//! Canonical form has no trailing zero coefficient; the zero polynomial
//! stores no coefficients and has degree `None`. `Poly<R>` is itself a
//! scalar ring, so matrices of polynomials work everywhere matrices of
//! numbers do (in particular through the determinant routines, whose
//! interim divisions stay exact by the same argument as for integers).

use crate::error::Error;
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    /// Builds a polynomial from ascending coefficients, trimming
    /// trailing zeros.
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * t^k.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of t^k, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| c.clone() * a.clone()).collect())
    }

    /// Divides by the linear factor (t - root), requiring a zero
    /// remainder, i.e. `root` must actually be a root.
    pub fn deflate(&self, root: &R) -> Result<Poly<R>, Error> {
        if self.coeffs.is_empty() {
            return Ok(Poly::zero());
        }
        // Synthetic division from the top coefficient down.
        let mut quotient = vec![R::zero(); self.coeffs.len() - 1];
        let mut carry = R::zero();
        for k in (0..self.coeffs.len()).rev() {
            let value = self.coeffs[k].clone() + carry.clone() * root.clone();
            if k == 0 {
                if !value.is_zero() {
                    return Err(Error::invalid(
                        "deflation point is not a root".to_string(),
                    ));
                }
            } else {
                quotient[k - 1] = value.clone();
                carry = value;
            }
        }
        Ok(Poly::new(quotient))
    }

    /// Unique interpolating polynomial of degree below `points.len()`
    /// through pairwise distinct nodes, by the Lagrange formula. All
    /// divisions go through [`Ring::exact_div`], so over the rationals
    /// the result is exact.
    pub fn interpolate(points: &[(R, R)]) -> Result<Poly<R>, Error> {
        for (a, _) in points {
            if points.iter().filter(|(b, _)| b == a).count() > 1 {
                return Err(Error::invalid(format!(
                    "repeated interpolation node {:?}",
                    a
                )));
            }
        }
        let mut acc = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::constant(R::one());
            let mut denom = R::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if j == i {
                    continue;
                }
                basis = basis * Poly::new(vec![-xj.clone(), R::one()]);
                denom = denom * (xi.clone() - xj.clone());
            }
            let term = Poly::new(
                basis
                    .coeffs
                    .iter()
                    .map(|c| (yi.clone() * c.clone()).exact_div(&denom))
                    .collect(),
            );
            acc = acc + term;
        }
        Ok(acc)
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;

    fn add(self, rhs: Poly<R>) -> Poly<R> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (k, c) in short.into_iter().enumerate() {
            long[k] = long[k].clone() + c;
        }
        Poly::new(long)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;

    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_bigint(n: &BigInt) -> Self {
        Poly::constant(R::from_bigint(n))
    }

    fn div_int(&self, k: i64) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.div_int(k)).collect())
    }

    /// Polynomial long division with the remainder required to vanish.
    /// Every leading-coefficient division goes through the scalar
    /// `exact_div`, so this is only valid when `d` truly divides `self`.
    fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.coeffs.is_empty(), "polynomial division by zero");
        if self.coeffs.is_empty() {
            return Poly::zero();
        }
        let deg_n = self.coeffs.len() - 1;
        let deg_d = d.coeffs.len() - 1;
        assert!(
            deg_n >= deg_d,
            "inexact polynomial division (degree too low)"
        );
        let lead = &d.coeffs[deg_d];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); deg_n - deg_d + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + deg_d].exact_div(lead);
            if !q.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - q.clone() * c.clone();
                }
            }
            quot[k] = q;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "inexact polynomial division (nonzero remainder)"
        );
        Poly::new(quot)
    }
}
