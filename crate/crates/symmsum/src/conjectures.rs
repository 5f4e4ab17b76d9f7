//! Coefficient vectors of Tr((A+tB)^m) and S_k((A+tB)^m).
//!
//! For positive semidefinite A and B these polynomials are conjectured
//! (k = 1: proven) to have only nonnegative coefficients. This module
//! extracts the coefficients exactly; the randomized sampling lives in
//! the scan module.
//!
//! Extraction never enumerates the C(m, k) words in A and B. The
//! production path multiplies out the pencil power by convolution and
//! runs the symmetric-function recurrence over the ring of scalar
//! polynomials; an independent interpolation path evaluates at integer
//! nodes and applies exact Lagrange interpolation.

use crate::combinatorics::index_subsets;
use crate::det::{det_laplace, MAX_LAPLACE_DIM};
use crate::error::Error;
use crate::matpoly::matpoly_pow;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::symm::symm_all;

/// Coefficients (c_0, ..., c_m) of Tr((A+tB)^m): the trace of each
/// coefficient matrix of the pencil power.
pub fn bmv_coeffs<R: Ring>(a: &Matrix<R>, b: &Matrix<R>, m: usize) -> Result<Vec<R>, Error> {
    let p = matpoly_pow(a, b, m)?;
    Ok(p.coeffs().iter().map(Matrix::trace).collect())
}

/// Coefficients (c_0, ..., c_{k·m}) of S_k((A+tB)^m), by running the
/// symmetric-function recurrence over polynomial scalars. Trailing
/// zero coefficients are kept so the length is always k·m + 1.
pub fn symm_poly_coeffs<R: Ring>(
    a: &Matrix<R>,
    b: &Matrix<R>,
    m: usize,
    k: usize,
) -> Result<Vec<R>, Error> {
    let r = a.require_square()?;
    if k > r {
        return Err(Error::invalid(format!(
            "S_{} undefined for {}x{} matrices",
            k, r, r
        )));
    }
    Ok(symm_poly_coeffs_upto(a, b, m, k)?.pop().expect("k+1 vectors"))
}

/// Coefficient vectors of S_k((A+tB)^m) for every k = 0, ..., k_max in
/// one pass; the recurrence produces all orders at once, so batching is
/// k_max times cheaper than separate calls.
pub fn symm_poly_coeffs_upto<R: Ring>(
    a: &Matrix<R>,
    b: &Matrix<R>,
    m: usize,
    k_max: usize,
) -> Result<Vec<Vec<R>>, Error> {
    let r = a.require_square()?;
    if k_max > r {
        return Err(Error::invalid(format!(
            "S_{} undefined for {}x{} matrices",
            k_max, r, r
        )));
    }
    let p = matpoly_pow(a, b, m)?.to_poly_matrix();
    let all = symm_all(&p)?;
    Ok((0..=k_max)
        .map(|k| {
            let sk: Poly<R> = all.get(k);
            (0..=k * m).map(|j| sk.coeff(j)).collect()
        })
        .collect())
}

/// Same coefficient vectors as [`symm_poly_coeffs_upto`], but each
/// S_k is expanded as a sum of k x k principal-minor determinants,
/// computed division-free. Over floats this is far better conditioned
/// than the power-sum recurrence, whose intermediate traces dwarf the
/// result and cancel; over exact rings both routes agree term for term.
/// Orders past the cofactor-determinant cap fall back to the recurrence.
pub fn symm_poly_coeffs_by_minors<R: Ring>(
    a: &Matrix<R>,
    b: &Matrix<R>,
    m: usize,
    k_max: usize,
) -> Result<Vec<Vec<R>>, Error> {
    let r = a.require_square()?;
    if k_max > r {
        return Err(Error::invalid(format!(
            "S_{} undefined for {}x{} matrices",
            k_max, r, r
        )));
    }
    let p = matpoly_pow(a, b, m)?.to_poly_matrix();
    let mut recurrence: Option<crate::symm::SymmVector<Poly<R>>> = None;
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let sk: Poly<R> = if k <= MAX_LAPLACE_DIM {
            let mut acc: Poly<R> = num_traits::Zero::zero();
            for alpha in index_subsets(r, k)? {
                acc = acc + det_laplace(&p.submatrix(&alpha, &alpha)?)?;
            }
            acc
        } else {
            if recurrence.is_none() {
                recurrence = Some(symm_all(&p)?);
            }
            recurrence.as_ref().expect("just filled").get(k)
        };
        out.push((0..=k * m).map(|j| sk.coeff(j)).collect());
    }
    Ok(out)
}

/// Same coefficients through the independent route: evaluate
/// S_k((A + t_j B)^m) at the integer nodes t_j = 0, 1, ..., k·m and
/// interpolate. Intended for exact rings, where it must agree with
/// [`symm_poly_coeffs`] term for term.
pub fn symm_poly_coeffs_interpolated<R: Ring>(
    a: &Matrix<R>,
    b: &Matrix<R>,
    m: usize,
    k: usize,
) -> Result<Vec<R>, Error> {
    let r = a.require_square()?;
    if b.require_square()? != r {
        return Err(Error::dim(format!(
            "pencil parts differ in dimension: {} vs {}",
            r,
            b.rows()
        )));
    }
    if k > r {
        return Err(Error::invalid(format!(
            "S_{} undefined for {}x{} matrices",
            k, r, r
        )));
    }
    let degree_bound = k * m;
    let mut points = Vec::with_capacity(degree_bound + 1);
    for j in 0..=degree_bound {
        let t = R::from_i64(j as i64);
        let value = symm_all(&(a + &b.scale(&t)).pow(m)?)?.get(k);
        points.push((t, value));
    }
    let poly = Poly::interpolate(&points)?;
    Ok((0..=degree_bound).map(|j| poly.coeff(j)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;
    use num_traits::{ToPrimitive, Zero};
    use proptest::prelude::*;

    fn rat(x: i64) -> Rational {
        Rational::from_i64(x)
    }

    fn rmat(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rvec(values: Vec<i64>) -> Vec<Rational> {
        values.into_iter().map(rat).collect()
    }

    #[test]
    fn trace_coeffs_of_orthogonal_diagonals() {
        // (diag(1,0) + t diag(0,1))^3 = diag(1, t^3).
        let a = Matrix::diagonal(&[rat(1), rat(0)]);
        let b = Matrix::diagonal(&[rat(0), rat(1)]);
        assert_eq!(bmv_coeffs(&a, &b, 3).unwrap(), rvec(vec![1, 0, 0, 1]));
    }

    #[test]
    fn trace_coeffs_of_identity_pair() {
        // Tr((I + tI)^2) = 2 (1 + t)^2.
        let i2: Matrix<Rational> = Matrix::identity(2);
        assert_eq!(bmv_coeffs(&i2, &i2, 2).unwrap(), rvec(vec![2, 4, 2]));
    }

    #[test]
    fn trace_coeffs_evaluate_consistently() {
        let a = rmat(vec![vec![2, 1], vec![1, 3]]);
        let b = rmat(vec![vec![1, -1], vec![-1, 2]]);
        let m = 4;
        let coeffs = Poly::new(bmv_coeffs(&a, &b, m).unwrap());
        for t0 in [0, 1, 2, -3, 7] {
            let t0 = rat(t0);
            let direct = (&a + &b.scale(&t0)).pow(m).unwrap().trace();
            assert_eq!(coeffs.eval(&t0), direct);
        }
    }

    #[test]
    fn order_zero_coeffs_are_constant_one() {
        let a = rmat(vec![vec![2, 1], vec![1, 3]]);
        let b = rmat(vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(symm_poly_coeffs(&a, &b, 3, 0).unwrap(), rvec(vec![1]));
    }

    #[test]
    fn order_one_coeffs_match_trace_coeffs() {
        let a = rmat(vec![vec![2, 1], vec![1, 3]]);
        let b = rmat(vec![vec![1, -1], vec![-1, 2]]);
        assert_eq!(
            symm_poly_coeffs(&a, &b, 3, 1).unwrap(),
            bmv_coeffs(&a, &b, 3).unwrap()
        );
    }

    #[test]
    fn rank_one_difference_determinant() {
        // det(A + tB) with A all-ones and B the signed checkerboard:
        // (1+t)^2 - (1-t)^2 = 4t.
        let a = rmat(vec![vec![1, 1], vec![1, 1]]);
        let b = rmat(vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(symm_poly_coeffs(&a, &b, 1, 2).unwrap(), rvec(vec![0, 4, 0]));
    }

    #[test]
    fn both_extraction_routes_agree() {
        let a = rmat(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 1]]);
        let b = rmat(vec![vec![1, -1, 2], vec![-1, 2, 0], vec![2, 0, 5]]);
        for k in 0..=3 {
            for m in 1..=3 {
                assert_eq!(
                    symm_poly_coeffs(&a, &b, m, k).unwrap(),
                    symm_poly_coeffs_interpolated(&a, &b, m, k).unwrap(),
                    "k={} m={}",
                    k,
                    m
                );
            }
        }
    }

    #[test]
    fn coefficient_length_is_always_full() {
        let a = Matrix::diagonal(&rvec(vec![1, 0]));
        let b = Matrix::diagonal(&rvec(vec![0, 0]));
        // B = 0 kills every positive-degree coefficient, but the vector
        // keeps its k*m + 1 slots.
        let c = symm_poly_coeffs(&a, &b, 3, 1).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], rat(1));
        assert!(c[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn order_above_dimension_is_rejected() {
        let a = rmat(vec![vec![1, 0], vec![0, 1]]);
        assert!(symm_poly_coeffs(&a, &a, 2, 3).is_err());
        assert!(symm_poly_coeffs_interpolated(&a, &a, 2, 3).is_err());
    }

    #[test]
    fn float_path_matches_rational_path() {
        let a = rmat(vec![vec![2, 1], vec![1, 3]]);
        let b = rmat(vec![vec![1, -1], vec![-1, 2]]);
        let af = a.map(|x| x.to_f64().unwrap());
        let bf = b.map(|x| x.to_f64().unwrap());
        let exact = symm_poly_coeffs(&a, &b, 4, 2).unwrap();
        let float = symm_poly_coeffs(&af, &bf, 4, 2).unwrap();
        for (e, f) in exact.iter().zip(&float) {
            assert!((e.to_f64().unwrap() - f).abs() < 1e-9);
        }
    }

    fn square2() -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(-5_i64..=5, 4)
            .prop_map(|v| Matrix::new(2, 2, v.into_iter().map(rat).collect()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn trace_coeffs_swap_symmetry(a in square2(), b in square2(), m in 1_usize..=5) {
            // Swapping A and B reverses the word weights.
            let ab = bmv_coeffs(&a, &b, m).unwrap();
            let ba = bmv_coeffs(&b, &a, m).unwrap();
            for kk in 0..=m {
                prop_assert_eq!(&ab[kk], &ba[m - kk]);
            }
        }

        #[test]
        fn symm_coeffs_scale_homogeneously(a in square2(), b in square2(), c in -4_i64..=4, k in 0_usize..=2) {
            // Replacing B by c B scales the t^j coefficient by c^j.
            let m = 2;
            let base = symm_poly_coeffs(&a, &b, m, k).unwrap();
            let scaled = symm_poly_coeffs(&a, &b.scale(&rat(c)), m, k).unwrap();
            let mut factor = rat(1);
            for j in 0..=k * m {
                prop_assert_eq!(&scaled[j], &(factor.clone() * base[j].clone()));
                factor *= rat(c);
            }
        }

        #[test]
        fn symm_coeffs_evaluate_consistently(a in square2(), b in square2(), m in 1_usize..=3, k in 0_usize..=2, t0 in -5_i64..=5) {
            let coeffs = Poly::new(symm_poly_coeffs(&a, &b, m, k).unwrap());
            let t0 = rat(t0);
            let direct = symm_all(&(&a + &b.scale(&t0)).pow(m).unwrap()).unwrap().get(k);
            prop_assert_eq!(coeffs.eval(&t0), direct);
        }

        #[test]
        fn interpolation_route_agrees(a in square2(), b in square2(), m in 1_usize..=3, k in 0_usize..=2) {
            prop_assert_eq!(
                symm_poly_coeffs(&a, &b, m, k).unwrap(),
                symm_poly_coeffs_interpolated(&a, &b, m, k).unwrap()
            );
        }

        #[test]
        fn minor_route_agrees(a in square2(), b in square2(), m in 1_usize..=4, k_max in 0_usize..=2) {
            prop_assert_eq!(
                symm_poly_coeffs_by_minors(&a, &b, m, k_max).unwrap(),
                symm_poly_coeffs_upto(&a, &b, m, k_max).unwrap()
            );
        }

        #[test]
        fn minor_route_handles_orders_past_the_laplace_cap(diag in proptest::collection::vec(-3_i64..=3, 11)) {
            // 11x11 diagonal pencil: order 11 exceeds the Laplace cutoff
            // and exercises the recurrence fallback. S_11((A+tI)^1) is
            // the product of (d_i + t).
            let n = diag.len();
            let a = Matrix::diagonal(&diag.iter().map(|&d| rat(d)).collect::<Vec<_>>());
            let b = Matrix::identity(n);
            let top = symm_poly_coeffs_by_minors(&a, &b, 1, n).unwrap().pop().unwrap();
            let want = diag
                .iter()
                .map(|&d| Poly::new(vec![rat(d), rat(1)]))
                .fold(Poly::new(vec![rat(1)]), |acc, f| acc * f);
            for (j, c) in top.iter().enumerate() {
                prop_assert_eq!(c, &want.coeff(j));
            }
        }

        #[test]
        fn top_order_at_degree_one_is_det_pencil(a in square2(), b in square2()) {
            // S_2((A+tB)^1) = det(A+tB); its middle coefficient is
            // S_1(A)S_1(B) - S_1(AB).
            let c = symm_poly_coeffs(&a, &b, 1, 2).unwrap();
            let middle = a.trace() * b.trace() - (&a * &b).trace();
            prop_assert_eq!(&c[1], &middle);
            prop_assert_eq!(&c[0], &symm_all(&a).unwrap().get(2));
            prop_assert_eq!(&c[2], &symm_all(&b).unwrap().get(2));
        }
    }
}
