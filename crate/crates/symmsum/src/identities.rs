//! Alternating-sum identities for determinants and symmetric functions
//! of matrix sums, their closed-form specializations, and the witness
//! showing the tuple-length bound is tight.
//!
//! The central object is the residual
//!
//! ```text
//! sum_{k=0}^{N} (-1)^k sum_{|O|=k} det(A + sum_{i in O} A_i)
//! ```
//!
//! over all 2^N subsets O of a tuple (A_1, ..., A_N) of n x n matrices.
//! Over an exact ring the residual vanishes whenever N >= n+1, and the
//! same alternating sum applied to S_tau instead of det vanishes
//! whenever N >= tau+1. [`optimality_witness`] constructs a tuple with
//! N = n whose residual is (-1)^n, so the bound cannot be improved.
//!
//! Subsets are enumerated by increasing bitmask; the per-subset terms
//! may be computed in parallel but are always reduced in mask order, so
//! results are bitwise reproducible at any thread count, floats
//! included.

use crate::combinatorics::{binomial, index_subsets};
use crate::det::det_bareiss;
use crate::error::Error;
use crate::matrix::{IndexSet, Matrix};
use crate::ring::Ring;
use crate::symm::symm_all;
use rayon::prelude::*;

/// Default bound on tuple length; 2^N subset enumeration beyond this is
/// rejected rather than attempted.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// Absolute bound imposed by the bitmask representation.
const HARD_SUBSET_CAP: usize = 62;

/// Ordered tuple (A_1, ..., A_N) of same-dimension square matrices.
/// Duplicates are allowed; order matters only for reproducibility of
/// enumeration, not for any result.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixTuple<R> {
    members: Vec<Matrix<R>>,
    dim: usize,
    cap: usize,
}

impl<R: Ring> MatrixTuple<R> {
    /// Builds a tuple under the default length cap.
    pub fn new(members: Vec<Matrix<R>>) -> Result<Self, Error> {
        Self::with_cap(members, DEFAULT_SUBSET_CAP)
    }

    /// Builds a tuple under an explicit length cap (at most 62).
    pub fn with_cap(members: Vec<Matrix<R>>, cap: usize) -> Result<Self, Error> {
        let cap = cap.min(HARD_SUBSET_CAP);
        if members.is_empty() {
            return Err(Error::invalid("matrix tuple must be nonempty".to_string()));
        }
        if members.len() > cap {
            return Err(Error::SizeLimit {
                what: "matrix tuple length",
                limit: cap,
                requested: members.len(),
            });
        }
        let dim = members[0].require_square()?;
        for m in &members[1..] {
            if m.require_square()? != dim {
                return Err(Error::dim(format!(
                    "tuple members must all be {}x{}, found {}x{}",
                    dim,
                    dim,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(MatrixTuple { members, dim, cap })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Common dimension n of all members.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[Matrix<R>] {
        &self.members
    }

    pub(crate) fn cap(&self) -> usize {
        self.cap
    }

    /// Sum of all members.
    pub fn total(&self) -> Matrix<R> {
        self.members
            .iter()
            .skip(1)
            .fold(self.members[0].clone(), |acc, m| &acc + m)
    }
}

/// Value of an alternating subset sum together with the parameters that
/// decide whether it is guaranteed to vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual<R> {
    /// The alternating sum itself.
    pub value: R,
    /// Dimension of the matrices fed to det or S_tau.
    pub dim: usize,
    /// Number of tuple members N.
    pub tuple_len: usize,
    /// Present when the summand is S_tau rather than det.
    pub tau: Option<usize>,
}

impl<R: Ring> Residual<R> {
    /// Whether the tuple is long enough for the exact-zero guarantee:
    /// N >= tau+1 for symmetric-function residuals, N >= n+1 for
    /// determinant residuals.
    pub fn guaranteed_zero(&self) -> bool {
        let threshold = self.tau.unwrap_or(self.dim) + 1;
        self.tuple_len >= threshold
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// A + sum of the members selected by `mask`.
fn masked_sum<R: Ring>(base: &Matrix<R>, members: &[Matrix<R>], mask: usize) -> Matrix<R> {
    let mut acc = base.clone();
    for (i, m) in members.iter().enumerate() {
        if mask & (1 << i) != 0 {
            acc = &acc + m;
        }
    }
    acc
}

/// Signed sum over all 2^N subset masks, reduced in mask order.
fn alternating_subset_sum<R, F>(n_members: usize, eval: F) -> R
where
    R: Ring,
    F: Fn(usize) -> R + Sync,
{
    let terms: Vec<R> = (0..1_usize << n_members)
        .into_par_iter()
        .map(|mask| {
            let v = eval(mask);
            if mask.count_ones() % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    terms.into_iter().fold(R::zero(), |acc, t| acc + t)
}

/// The alternating determinant residual
/// sum_k (-1)^k sum_{|O|=k} det(A + sum_{i in O} A_i).
///
/// Exactly zero over exact rings whenever N >= n+1.
pub fn alternating_det_residual<R: Ring>(
    a: &Matrix<R>,
    s: &MatrixTuple<R>,
) -> Result<Residual<R>, Error> {
    let n = a.require_square()?;
    if n != s.dim() {
        return Err(Error::dim(format!(
            "base matrix is {}x{} but tuple members are {}x{}",
            n,
            n,
            s.dim(),
            s.dim()
        )));
    }
    let value = alternating_subset_sum(s.len(), |mask| {
        det_bareiss(&masked_sum(a, s.members(), mask)).expect("square by construction")
    });
    Ok(Residual {
        value,
        dim: n,
        tuple_len: s.len(),
        tau: None,
    })
}

/// The determinant residual of the blocks A(rows, cols) and
/// A_i(rows, cols). Zero whenever N >= |rows| + 1.
pub fn submatrix_residual<R: Ring>(
    a: &Matrix<R>,
    s: &MatrixTuple<R>,
    rows: &IndexSet,
    cols: &IndexSet,
) -> Result<Residual<R>, Error> {
    if rows.len() != cols.len() {
        return Err(Error::dim(format!(
            "row selection has {} indices but column selection has {}",
            rows.len(),
            cols.len()
        )));
    }
    let sub_base = a.submatrix(rows, cols)?;
    let sub_members = s
        .members()
        .iter()
        .map(|m| m.submatrix(rows, cols))
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        // 0x0 blocks all have det 1, so the residual telescopes to
        // (1-1)^N without any enumeration.
        return Ok(Residual {
            value: R::zero(),
            dim: 0,
            tuple_len: s.len(),
            tau: None,
        });
    }
    let sub_tuple = MatrixTuple::with_cap(sub_members, s.cap())?;
    alternating_det_residual(&sub_base, &sub_tuple)
}

/// The alternating symmetric-function residual
/// sum_k (-1)^k sum_{|O|=k} S_tau(A + sum_{i in O} A_i).
///
/// Exactly zero over exact rings whenever N >= tau+1.
pub fn symm_residual<R: Ring>(
    a: &Matrix<R>,
    s: &MatrixTuple<R>,
    tau: usize,
) -> Result<Residual<R>, Error> {
    let n = a.require_square()?;
    if n != s.dim() {
        return Err(Error::dim(format!(
            "base matrix is {}x{} but tuple members are {}x{}",
            n,
            n,
            s.dim(),
            s.dim()
        )));
    }
    if tau > n {
        return Err(Error::invalid(format!(
            "S_{} undefined for {}x{} matrices",
            tau, n, n
        )));
    }
    let value = alternating_subset_sum(s.len(), |mask| {
        symm_all(&masked_sum(a, s.members(), mask))
            .expect("square by construction")
            .get(tau)
    });
    Ok(Residual {
        value,
        dim: n,
        tuple_len: s.len(),
        tau: Some(tau),
    })
}

/// Reconstructs S_tau(A_1 + ... + A_N) from the values of S_tau on
/// sums of at most tau members:
///
/// ```text
/// sum_{j=0}^{tau-1} (-1)^j C(j+N-tau-1, N-tau-1)
///     sum_{|O|=tau-j} S_tau(sum_{i in O} A_i)
/// ```
///
/// Requires N >= tau+1. For tau = 0 both sides are the empty-product
/// convention S_0 = 1, so 1 is returned directly.
pub fn reconstruct_symm<R: Ring>(s: &MatrixTuple<R>, tau: usize) -> Result<R, Error> {
    let n_members = s.len();
    if n_members < tau + 1 {
        return Err(Error::invalid(format!(
            "reconstruction of S_{} needs at least {} matrices, got {}",
            tau,
            tau + 1,
            n_members
        )));
    }
    if tau > s.dim() {
        return Err(Error::invalid(format!(
            "S_{} undefined for {}x{} matrices",
            tau,
            s.dim(),
            s.dim()
        )));
    }
    if tau == 0 {
        return Ok(R::one());
    }
    let mut acc = R::zero();
    for j in 0..tau {
        let weight = R::from_bigint(&binomial(j + n_members - tau - 1, n_members - tau - 1));
        let subsets = index_subsets(n_members, tau - j)?;
        let terms: Vec<R> = subsets
            .par_iter()
            .map(|subset| {
                let mut sum = Matrix::zeros(s.dim(), s.dim());
                for i in subset.iter() {
                    sum = &sum + &s.members()[i];
                }
                symm_all(&sum).expect("square by construction").get(tau)
            })
            .collect();
        let inner = terms.into_iter().fold(R::zero(), |a, t| a + t);
        let signed = weight * inner;
        acc = if j % 2 == 0 { acc + signed } else { acc - signed };
    }
    Ok(acc)
}

fn require_same_square<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<usize, Error> {
    let n = a.require_square()?;
    let m = b.require_square()?;
    if n != m {
        return Err(Error::dim(format!(
            "expected matching square matrices, got {}x{} and {}x{}",
            n, n, m, m
        )));
    }
    Ok(n)
}

/// S_k(M) without recomputing the whole vector at each call site.
fn sk<R: Ring>(m: &Matrix<R>, k: usize) -> R {
    symm_all(m).expect("square by construction").get(k)
}

/// Closed form for S_2 of a sum of two matrices:
/// S_2(A) + S_2(B) + S_1(A)S_1(B) - S_1(AB).
pub fn s2_of_sum<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<R, Error> {
    require_same_square(a, b)?;
    let ab = a * b;
    Ok(sk(a, 2) + sk(b, 2) + a.trace() * b.trace() - ab.trace())
}

/// Closed form for S_3 of a sum of two matrices:
/// S_3(A) + S_3(B) - S_1(A+B)S_1(AB) + S_1(A)S_2(B) + S_1(B)S_2(A)
/// + S_1(A^2 B) + S_1(A B^2).
pub fn s3_of_sum<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<R, Error> {
    require_same_square(a, b)?;
    let ab = a * b;
    Ok(sk(a, 3) + sk(b, 3) - (a + b).trace() * ab.trace()
        + a.trace() * sk(b, 2)
        + b.trace() * sk(a, 2)
        + (a * &ab).trace()
        + (&ab * b).trace())
}

/// Closed form for S_3 of a sum of three matrices. Both word orders
/// A B C and A C B appear; for generic matrices their traces differ and
/// the identity needs both. The product of the three traces is also
/// required (dropping it breaks the identity already at A=B=C=I).
pub fn s3_of_sum3<R: Ring>(
    a: &Matrix<R>,
    b: &Matrix<R>,
    c: &Matrix<R>,
) -> Result<R, Error> {
    let n = require_same_square(a, b)?;
    if c.require_square()? != n {
        return Err(Error::dim(format!(
            "third matrix is {}x{}, expected {}x{}",
            c.rows(),
            c.cols(),
            n,
            n
        )));
    }
    let ab = a * b;
    let ac = a * c;
    let bc = b * c;
    let pair_sum = &(&ab + &ac) + &bc;
    Ok(sk(a, 3)
        + sk(b, 3)
        + sk(c, 3)
        - (&(a + b) + c).trace() * pair_sum.trace()
        + a.trace() * (sk(b, 2) + sk(c, 2))
        + b.trace() * (sk(a, 2) + sk(c, 2))
        + c.trace() * (sk(a, 2) + sk(b, 2))
        + a.trace() * b.trace() * c.trace()
        + (a * &ab).trace()
        + (&ab * b).trace()
        + (a * &ac).trace()
        + (&ac * c).trace()
        + (b * &bc).trace()
        + (&bc * c).trace()
        + (&ab * c).trace()
        + (&ac * b).trace())
}

/// Closed form for S_4 of a sum of two matrices (sixteen terms):
/// S_4(A) + S_4(B) - S_1(A^3 B) - S_1(A^2 B^2) - S_1(A B^3)
/// + S_1(A^2 B)(S_1(A) + S_1(B)) + S_1(A B^2)(S_1(A) + S_1(B))
/// - S_1(AB)S_1(A)S_1(B) + S_3(A)S_1(B) + S_3(B)S_1(A)
/// + S_2(A)S_2(B) - (S_2(A) + S_2(B))S_1(AB) + S_2(AB).
pub fn s4_of_sum<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<R, Error> {
    require_same_square(a, b)?;
    let ab = a * b;
    let aab = a * &ab;
    let abb = &ab * b;
    Ok(sk(a, 4) + sk(b, 4)
        - (a * &aab).trace()
        - (&aab * b).trace()
        - (&abb * b).trace()
        + aab.trace() * a.trace()
        + aab.trace() * b.trace()
        + abb.trace() * a.trace()
        + abb.trace() * b.trace()
        - ab.trace() * a.trace() * b.trace()
        + sk(a, 3) * b.trace()
        + sk(b, 3) * a.trace()
        + sk(a, 2) * sk(b, 2)
        - sk(a, 2) * ab.trace()
        - sk(b, 2) * ab.trace()
        + sk(&ab, 2))
}

/// Builds the tuple A_i = diag(e_i), i = 1..n, with base A = x diag(e_1),
/// and returns its determinant residual, which equals (-1)^n for every
/// x. With N = n members the residual does not vanish, so the N >= n+1
/// requirement of [`alternating_det_residual`]'s zero guarantee is
/// tight.
pub fn optimality_witness<R: Ring>(n: usize, x: &R) -> (Matrix<R>, MatrixTuple<R>, Residual<R>) {
    assert!(n >= 1, "witness needs dimension at least 1");
    let members: Vec<Matrix<R>> = (0..n)
        .map(|i| Matrix::from_fn(n, n, |r, c| if r == i && c == i { R::one() } else { R::zero() }))
        .collect();
    let base = Matrix::from_fn(n, n, |r, c| {
        if r == 0 && c == 0 {
            x.clone()
        } else {
            R::zero()
        }
    });
    let tuple = MatrixTuple::with_cap(members, HARD_SUBSET_CAP).expect("valid by construction");
    let residual = alternating_det_residual(&base, &tuple).expect("valid by construction");
    (base, tuple, residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn rat(x: i64) -> Rational {
        Rational::from_i64(x)
    }

    fn ratio(p: i64, q: i64) -> Rational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn rmat(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
        .unwrap()
    }

    fn tuple(members: Vec<Matrix<Rational>>) -> MatrixTuple<Rational> {
        MatrixTuple::new(members).unwrap()
    }

    // Fixed matrices standing in for "random rational" inputs so
    // failures reproduce without a seed.
    fn sample_3x3(salt: i64) -> Matrix<Rational> {
        Matrix::from_fn(3, 3, |i, j| {
            rat(((i as i64 + 2) * (j as i64 + 3) * (salt + 1)) % 17 - 8)
        })
    }

    fn sample_4x4(salt: i64) -> Matrix<Rational> {
        Matrix::from_fn(4, 4, |i, j| {
            rat(((i as i64 + 3) * (j as i64 + 5) * (salt + 2)) % 19 - 9)
        })
    }

    #[test]
    fn det_residual_vanishes_for_identity_tuple() {
        // N = 4 copies of I_3 over base 0: the sixteen terms are
        // (-1)^k C(4,k) k^3 = -4 + 48 - 108 + 64.
        let s = tuple(vec![Matrix::identity(3); 4]);
        let r = alternating_det_residual(&Matrix::zeros(3, 3), &s).unwrap();
        assert!(r.guaranteed_zero());
        assert!(r.value.is_zero());
    }

    #[test]
    fn det_residual_vanishes_for_random_tuple() {
        let s = tuple((0..4).map(sample_3x3).collect());
        let r = alternating_det_residual(&Matrix::zeros(3, 3), &s).unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn det_residual_with_short_tuple_need_not_vanish() {
        // N = n = 2: residual is (-1)^2 = 1 for every x.
        for x in [rat(0), rat(1), rat(-5), ratio(7, 3)] {
            let base = Matrix::diagonal(&[x, rat(0)]);
            let s = tuple(vec![
                Matrix::diagonal(&[rat(1), rat(0)]),
                Matrix::diagonal(&[rat(0), rat(1)]),
            ]);
            let r = alternating_det_residual(&base, &s).unwrap();
            assert!(!r.guaranteed_zero());
            assert_eq!(r.value, rat(1));
        }
    }

    #[test]
    fn det_residual_rejects_dimension_mismatch() {
        let s = tuple(vec![Matrix::identity(2); 3]);
        let r = alternating_det_residual(&Matrix::<Rational>::zeros(3, 3), &s);
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn tuple_rejects_mixed_dimensions_and_overlong() {
        assert!(MatrixTuple::new(vec![Matrix::<Rational>::identity(2), Matrix::identity(3)]).is_err());
        assert!(MatrixTuple::new(Vec::<Matrix<Rational>>::new()).is_err());
        assert!(MatrixTuple::with_cap(vec![Matrix::<Rational>::identity(1); 4], 3).is_err());
    }

    #[test]
    fn submatrix_residual_scalar_blocks() {
        // 1x1 blocks with N = 2: the scalar case, must vanish.
        let s = tuple(vec![sample_3x3(1), sample_3x3(2)]);
        let rows = IndexSet::new(vec![1]).unwrap();
        let cols = IndexSet::new(vec![2]).unwrap();
        let r = submatrix_residual(&sample_3x3(0), &s, &rows, &cols).unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn submatrix_residual_two_by_two_blocks() {
        let s = tuple((0..3).map(sample_4x4).collect());
        let rows = IndexSet::new(vec![0, 2]).unwrap();
        let cols = IndexSet::new(vec![1, 3]).unwrap();
        let r = submatrix_residual(&sample_4x4(9), &s, &rows, &cols).unwrap();
        assert_eq!(r.dim, 2);
        assert!(r.value.is_zero());
    }

    #[test]
    fn submatrix_residual_full_selection_degenerates() {
        let s = tuple((0..4).map(sample_3x3).collect());
        let a = sample_3x3(7);
        let full = IndexSet::full(3);
        let sub = submatrix_residual(&a, &s, &full, &full).unwrap();
        let whole = alternating_det_residual(&a, &s).unwrap();
        assert_eq!(sub.value, whole.value);
    }

    #[test]
    fn submatrix_residual_empty_selection_is_zero() {
        let s = tuple(vec![sample_3x3(1), sample_3x3(2)]);
        let empty = IndexSet::new(vec![]).unwrap();
        let r = submatrix_residual(&sample_3x3(0), &s, &empty, &empty).unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn symm_residual_first_order_telescopes() {
        // S_1 is linear, so N = 2 already cancels.
        let s = tuple(vec![sample_3x3(4), sample_3x3(5)]);
        let r = symm_residual(&sample_3x3(6), &s, 1).unwrap();
        assert!(r.value.is_zero());
        assert!(r.guaranteed_zero());
    }

    #[test]
    fn symm_residual_second_order() {
        let s = tuple((10..13).map(sample_3x3).collect());
        let r = symm_residual(&sample_3x3(13), &s, 2).unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn symm_residual_top_order_matches_det_residual() {
        let s = tuple((0..4).map(sample_3x3).collect());
        let a = sample_3x3(20);
        let via_symm = symm_residual(&a, &s, 3).unwrap();
        let via_det = alternating_det_residual(&a, &s).unwrap();
        assert_eq!(via_symm.value, via_det.value);
    }

    #[test]
    fn symm_residual_rejects_large_tau() {
        let s = tuple(vec![Matrix::identity(2); 3]);
        let r = symm_residual(&Matrix::<Rational>::identity(2), &s, 3);
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn reconstruct_trace_of_pair() {
        let s = tuple(vec![sample_3x3(1), sample_3x3(2)]);
        let direct = symm_all(&s.total()).unwrap().get(1);
        assert_eq!(reconstruct_symm(&s, 1).unwrap(), direct);
    }

    #[test]
    fn reconstruct_second_order_from_three() {
        let s = tuple((3..6).map(sample_3x3).collect());
        // Spelled-out form for N = 3, tau = 2: pair sums minus singles.
        let m = s.members();
        let by_hand = sk(&(&m[0] + &m[1]), 2) + sk(&(&m[0] + &m[2]), 2) + sk(&(&m[1] + &m[2]), 2)
            - sk(&m[0], 2)
            - sk(&m[1], 2)
            - sk(&m[2], 2);
        let reconstructed = reconstruct_symm(&s, 2).unwrap();
        assert_eq!(reconstructed, by_hand);
        assert_eq!(reconstructed, symm_all(&s.total()).unwrap().get(2));
    }

    #[test]
    fn reconstruct_third_order_from_five() {
        let s = tuple((0..5).map(sample_4x4).collect());
        let direct = symm_all(&s.total()).unwrap().get(3);
        assert_eq!(reconstruct_symm(&s, 3).unwrap(), direct);
    }

    #[test]
    fn reconstruct_zeroth_order_is_one() {
        let s = tuple(vec![sample_3x3(0)]);
        assert_eq!(reconstruct_symm(&s, 0).unwrap(), rat(1));
    }

    #[test]
    fn reconstruct_rejects_short_tuple() {
        let s = tuple(vec![sample_3x3(0), sample_3x3(1)]);
        assert!(matches!(
            reconstruct_symm(&s, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn s2_closed_form_anchors() {
        let zero = Matrix::zeros(2, 2);
        let a = rmat(vec![vec![3, 1], vec![4, 1]]);
        assert_eq!(s2_of_sum(&a, &zero).unwrap(), sk(&a, 2));
        let d12 = Matrix::diagonal(&[rat(1), rat(2)]);
        let d34 = Matrix::diagonal(&[rat(3), rat(4)]);
        assert_eq!(s2_of_sum(&d12, &d34).unwrap(), rat(24));
        let i2: Matrix<Rational> = Matrix::identity(2);
        assert_eq!(s2_of_sum(&i2, &i2).unwrap(), rat(4));
    }

    #[test]
    fn s3_closed_form_anchors() {
        let a = sample_3x3(3);
        let zero = Matrix::zeros(3, 3);
        assert_eq!(s3_of_sum(&a, &zero).unwrap(), sk(&a, 3));
        let i3: Matrix<Rational> = Matrix::identity(3);
        assert_eq!(s3_of_sum(&i3, &i3).unwrap(), rat(8));
        let b = sample_4x4(0);
        let c = sample_4x4(5);
        assert_eq!(s3_of_sum(&b, &c).unwrap(), sk(&(&b + &c), 3));
    }

    #[test]
    fn s3_triple_closed_form_anchors() {
        let a = sample_3x3(1);
        let b = sample_3x3(4);
        let zero = Matrix::zeros(3, 3);
        assert_eq!(
            s3_of_sum3(&a, &b, &zero).unwrap(),
            s3_of_sum(&a, &b).unwrap()
        );
        let i3: Matrix<Rational> = Matrix::identity(3);
        assert_eq!(s3_of_sum3(&i3, &i3, &i3).unwrap(), rat(27));
        let c = sample_3x3(8);
        let total = &(&a + &b) + &c;
        assert_eq!(s3_of_sum3(&a, &b, &c).unwrap(), sk(&total, 3));
    }

    #[test]
    fn s4_closed_form_anchors() {
        let a = sample_4x4(1);
        let zero = Matrix::zeros(4, 4);
        assert_eq!(s4_of_sum(&a, &zero).unwrap(), sk(&a, 4));
        let i4: Matrix<Rational> = Matrix::identity(4);
        assert_eq!(s4_of_sum(&i4, &i4).unwrap(), rat(16));
        let b5 = Matrix::from_fn(5, 5, |i, j| rat(((i * 5 + j) as i64 * 7) % 23 - 11));
        let c5 = Matrix::from_fn(5, 5, |i, j| rat(((i * 5 + j) as i64 * 11) % 29 - 14));
        assert_eq!(s4_of_sum(&b5, &c5).unwrap(), sk(&(&b5 + &c5), 4));
    }

    #[test]
    fn witness_residual_is_signed_unit() {
        let (_, _, r1) = optimality_witness(1, &rat(0));
        assert_eq!(r1.value, rat(-1));
        let (_, _, r2) = optimality_witness(2, &ratio(7, 3));
        assert_eq!(r2.value, rat(1));
        let (_, _, r4) = optimality_witness(4, &rat(-5));
        assert_eq!(r4.value, rat(1));
        assert!(!r4.guaranteed_zero());
    }

    #[test]
    fn witness_shape() {
        let (base, s, _) = optimality_witness(3, &rat(2));
        assert_eq!(s.len(), 3);
        assert_eq!(base[(0, 0)], rat(2));
        assert_eq!(s.members()[2][(2, 2)], rat(1));
        assert!(s.members()[2][(0, 0)].is_zero());
    }

    fn square(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(-9_i64..=9, n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(rat).collect()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn det_residual_zero_when_tuple_long_enough(
            n in 1_usize..=3,
            entries in proptest::collection::vec(-9_i64..=9, 5 * 9 + 9),
        ) {
            let nn = n * n;
            let base = Matrix::new(n, n, entries[..nn].iter().map(|&x| rat(x)).collect()).unwrap();
            let members: Vec<_> = (0..n + 1)
                .map(|i| {
                    Matrix::new(n, n, entries[(i + 1) * nn..(i + 2) * nn].iter().map(|&x| rat(x)).collect())
                        .unwrap()
                })
                .collect();
            let r = alternating_det_residual(&base, &tuple(members)).unwrap();
            prop_assert!(r.value.is_zero());
        }

        #[test]
        fn symm_residual_zero_when_tuple_long_enough(
            tau in 1_usize..=3,
            entries in proptest::collection::vec(-6_i64..=6, 5 * 9 + 9),
        ) {
            let n = 3;
            let nn = n * n;
            let base = Matrix::new(n, n, entries[..nn].iter().map(|&x| rat(x)).collect()).unwrap();
            let members: Vec<_> = (0..tau + 1)
                .map(|i| {
                    Matrix::new(n, n, entries[(i + 1) * nn..(i + 2) * nn].iter().map(|&x| rat(x)).collect())
                        .unwrap()
                })
                .collect();
            let r = symm_residual(&base, &tuple(members), tau).unwrap();
            prop_assert!(r.value.is_zero());
        }

        #[test]
        fn reconstruction_matches_direct_value(
            tau in 1_usize..=2,
            entries in proptest::collection::vec(-6_i64..=6, 4 * 9),
        ) {
            let n = 3;
            let members: Vec<_> = (0..tau + 1)
                .map(|i| {
                    Matrix::new(n, n, entries[i * 9..(i + 1) * 9].iter().map(|&x| rat(x)).collect())
                        .unwrap()
                })
                .collect();
            let s = tuple(members);
            let direct = symm_all(&s.total()).unwrap().get(tau);
            prop_assert_eq!(reconstruct_symm(&s, tau).unwrap(), direct);
        }

        #[test]
        fn closed_forms_match_direct(a in square(4), b in square(4)) {
            let sum = &a + &b;
            prop_assert_eq!(s2_of_sum(&a, &b).unwrap(), sk(&sum, 2));
            prop_assert_eq!(s3_of_sum(&a, &b).unwrap(), sk(&sum, 3));
            prop_assert_eq!(s4_of_sum(&a, &b).unwrap(), sk(&sum, 4));
        }

        #[test]
        fn triple_closed_form_matches_direct(a in square(3), b in square(3), c in square(3)) {
            let sum = &(&a + &b) + &c;
            prop_assert_eq!(s3_of_sum3(&a, &b, &c).unwrap(), sk(&sum, 3));
        }

        #[test]
        fn pairwise_closed_forms_are_symmetric(a in square(4), b in square(4)) {
            prop_assert_eq!(s2_of_sum(&a, &b).unwrap(), s2_of_sum(&b, &a).unwrap());
            prop_assert_eq!(s4_of_sum(&a, &b).unwrap(), s4_of_sum(&b, &a).unwrap());
        }

        #[test]
        fn witness_residual_sign_for_all_dimensions(n in 1_usize..=6, x in -9_i64..=9) {
            let (_, _, r) = optimality_witness(n, &rat(x));
            let expected = if n % 2 == 0 { rat(1) } else { rat(-1) };
            prop_assert_eq!(r.value, expected);
        }
    }
}
