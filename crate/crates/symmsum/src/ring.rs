//! Scalar rings the rest of the crate is generic over.
//!
//! The same generic code computes over exact rationals, floats, complex
//! floats, complex rationals, and univariate polynomials built from any
//! of those. Exact rationals are the default for identity verification;
//! the float rings exist for the conjecture scanners.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always reduced with positive denominator.
pub type Rational = BigRational;

/// Complex floating scalar, used by the hermitian scan path.
pub type Complex64 = Complex<f64>;

/// Complex scalar over exact rationals, used when a hermitian scan hit
/// is escalated to exact arithmetic.
pub type ComplexRational = Complex<BigRational>;

/// Gaussian integer scalar. Escalation rescales dyadic matrices to
/// integer entries and computes here: minor expansion never divides, so
/// plain integers avoid the per-operation gcd cost of rationals.
pub type ComplexInt = Complex<BigInt>;

/// Commutative scalar ring.
///
/// `div_int` and `exact_div` are exact on the exact rings; on floating
/// rings they are ordinary division and results carry rounding error.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Embeds an arbitrary-precision integer.
    fn from_bigint(n: &BigInt) -> Self;

    /// Embeds a machine integer.
    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Divides by a nonzero integer. The Newton-Girard conversions rely
    /// on this being exact over exact rings.
    fn div_int(&self, k: i64) -> Self;

    /// Divides by a ring element the caller knows divides `self`
    /// (Bareiss pivots, interpolation denominators). Implementations do
    /// not check divisibility.
    fn exact_div(&self, d: &Self) -> Self;
}

impl Ring for Rational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn div_int(&self, k: i64) -> Self {
        debug_assert!(k != 0);
        self / BigRational::from_integer(BigInt::from(k))
    }

    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl Ring for BigInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn div_int(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        debug_assert!(!k.is_zero() && (self % &k).is_zero());
        self / k
    }

    fn exact_div(&self, d: &Self) -> Self {
        debug_assert!(!d.is_zero() && (self % d).is_zero());
        self / d
    }
}

impl Ring for ComplexInt {
    fn from_bigint(n: &BigInt) -> Self {
        Complex::new(n.clone(), BigInt::zero())
    }

    fn div_int(&self, k: i64) -> Self {
        Complex::new(self.re.div_int(k), self.im.div_int(k))
    }

    fn exact_div(&self, d: &Self) -> Self {
        self.clone() / d.clone()
    }
}

impl Ring for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn div_int(&self, k: i64) -> Self {
        self / k as f64
    }

    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl Ring for Complex64 {
    fn from_bigint(n: &BigInt) -> Self {
        Complex::new(f64::from_bigint(n), 0.0)
    }

    fn div_int(&self, k: i64) -> Self {
        self / k as f64
    }

    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}

impl Ring for ComplexRational {
    fn from_bigint(n: &BigInt) -> Self {
        Complex::new(Rational::from_bigint(n), Rational::zero())
    }

    fn div_int(&self, k: i64) -> Self {
        Complex::new(self.re.div_int(k), self.im.div_int(k))
    }

    fn exact_div(&self, d: &Self) -> Self {
        self.clone() / d.clone()
    }
}
