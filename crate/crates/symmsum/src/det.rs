//! Determinants over an exact ring.
//!
//! Three routes with different cost profiles:
//! * [`det_bareiss`]: fraction-free elimination, O(n^3) ring operations,
//!   the default for anything but tiny matrices.
//! * [`det_laplace`]: cofactor expansion, O(n!) but allocation-light,
//!   capped at n <= 10.
//! * [`det_permutation`]: signed sum over all permutations, capped at
//!   n <= 8, useful as an independent cross-check of the other two.
//!
//! All three agree exactly over exact rings; the empty 0x0 matrix has
//! determinant one.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Largest dimension accepted by [`det_permutation`].
pub const MAX_PERMUTATION_DIM: usize = 8;

/// Largest dimension accepted by [`det_laplace`].
pub const MAX_LAPLACE_DIM: usize = 10;

/// Determinant by fraction-free Gaussian elimination.
///
/// Interim entries stay in the ring because each division is exact
/// (Bareiss). Row swaps flip the sign; a fully zero pivot column means
/// the matrix is singular and the determinant is zero.
pub fn det_bareiss<R: Ring>(a: &Matrix<R>) -> Result<R, Error> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(R::one());
    }
    let mut m: Vec<Vec<R>> = (0..n)
        .map(|i| (0..n).map(|j| a[(i, j)].clone()).collect())
        .collect();
    let mut negated = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(pivot) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(R::zero());
        };
        if pivot != k {
            m.swap(pivot, k);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negated { -d } else { d })
}

/// Determinant by cofactor expansion along the first remaining row.
pub fn det_laplace<R: Ring>(a: &Matrix<R>) -> Result<R, Error> {
    let n = a.require_square()?;
    if n > MAX_LAPLACE_DIM {
        return Err(Error::SizeLimit {
            what: "det_laplace dimension",
            limit: MAX_LAPLACE_DIM,
            requested: n,
        });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace_rec(a, 0, &cols))
}

fn laplace_rec<R: Ring>(a: &Matrix<R>, row: usize, cols: &[usize]) -> R {
    match cols {
        [] => R::one(),
        [j] => a[(row, *j)].clone(),
        _ => {
            let mut acc = R::zero();
            for (pos, &j) in cols.iter().enumerate() {
                let entry = a[(row, j)].clone();
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols
                    .iter()
                    .copied()
                    .filter(|&c| c != j)
                    .collect();
                let minor = laplace_rec(a, row + 1, &rest);
                let term = entry * minor;
                acc = if pos % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Determinant as the signed sum over all permutations.
pub fn det_permutation<R: Ring>(a: &Matrix<R>) -> Result<R, Error> {
    let n = a.require_square()?;
    if n > MAX_PERMUTATION_DIM {
        return Err(Error::SizeLimit {
            what: "det_permutation dimension",
            limit: MAX_PERMUTATION_DIM,
            requested: n,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = R::zero();
    permutation_sum(a, &mut perm, 0, false, &mut acc);
    Ok(acc)
}

fn permutation_sum<R: Ring>(
    a: &Matrix<R>,
    perm: &mut Vec<usize>,
    depth: usize,
    negated: bool,
    acc: &mut R,
) {
    let n = perm.len();
    if depth == n {
        let mut term = R::one();
        for (i, &j) in perm.iter().enumerate() {
            term = term * a[(i, j)].clone();
        }
        *acc = if negated {
            std::mem::replace(acc, R::zero()) - term
        } else {
            std::mem::replace(acc, R::zero()) + term
        };
        return;
    }
    for i in depth..n {
        perm.swap(depth, i);
        // A transposition of distinct positions flips the parity.
        let flipped = negated ^ (i != depth);
        permutation_sum(a, perm, depth + 1, flipped, acc);
        perm.swap(depth, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn rmat(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rational::from_i64).collect())
                .collect(),
        )
        .unwrap()
    }

    fn all_dets(a: &Matrix<Rational>) -> (Rational, Rational, Rational) {
        (
            det_bareiss(a).unwrap(),
            det_laplace(a).unwrap(),
            det_permutation(a).unwrap(),
        )
    }

    #[test]
    fn det_of_empty_matrix_is_one() {
        let z: Matrix<Rational> = Matrix::zeros(0, 0);
        let (b, l, p) = all_dets(&z);
        assert!(b.is_one() && l.is_one() && p.is_one());
    }

    #[test]
    fn det_known_values() {
        assert_eq!(
            det_bareiss(&rmat(vec![vec![1, 2], vec![3, 4]])).unwrap(),
            Rational::from_i64(-2)
        );
        assert_eq!(
            det_bareiss(&rmat(vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]])).unwrap(),
            Rational::from_i64(30)
        );
        // Vandermonde on 1, 2, 3: product of differences = 2.
        let v = rmat(vec![vec![1, 1, 1], vec![1, 2, 3], vec![1, 4, 9]]);
        assert_eq!(det_bareiss(&v).unwrap(), Rational::from_i64(2));
    }

    #[test]
    fn det_singular_matrix_is_zero() {
        let s = rmat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let (b, l, p) = all_dets(&s);
        assert!(b.is_zero() && l.is_zero() && p.is_zero());
    }

    #[test]
    fn det_needs_row_swap() {
        // Zero in the top-left pivot position forces a swap.
        let a = rmat(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(det_bareiss(&a).unwrap(), Rational::from_i64(-1));
        let b = rmat(vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(det_bareiss(&b).unwrap(), Rational::from_i64(-1));
    }

    #[test]
    fn det_rejects_non_square() {
        let a: Matrix<Rational> = Matrix::zeros(2, 3);
        assert!(matches!(det_bareiss(&a), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn size_caps_are_enforced() {
        let a: Matrix<Rational> = Matrix::identity(9);
        assert!(matches!(det_permutation(&a), Err(Error::SizeLimit { .. })));
        assert!(det_laplace(&a).is_ok());
        let b: Matrix<Rational> = Matrix::identity(11);
        assert!(matches!(det_laplace(&b), Err(Error::SizeLimit { .. })));
        assert!(det_bareiss(&b).unwrap().is_one());
    }

    #[test]
    fn det_of_float_matrix() {
        let a = Matrix::from_rows(vec![vec![1.0_f64, 2.0], vec![3.0, 4.0]]).unwrap();
        assert!((det_bareiss(&a).unwrap() + 2.0).abs() < 1e-12);
    }

    fn small_square(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec(-9_i64..=9, n * n).prop_map(move |v| {
            Matrix::new(n, n, v.into_iter().map(Rational::from_i64).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn routes_agree(n in 1_usize..=4, seed_entries in proptest::collection::vec(-9_i64..=9, 16)) {
            let a = Matrix::new(n, n, seed_entries[..n * n]
                .iter()
                .map(|&x| Rational::from_i64(x))
                .collect())
                .unwrap();
            let (b, l, p) = all_dets(&a);
            prop_assert_eq!(&b, &l);
            prop_assert_eq!(&b, &p);
        }

        #[test]
        fn det_is_multiplicative(a in small_square(3), b in small_square(3)) {
            let lhs = det_bareiss(&(&a * &b)).unwrap();
            let rhs = det_bareiss(&a).unwrap() * det_bareiss(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn det_invariant_under_transpose(a in small_square(4)) {
            prop_assert_eq!(det_bareiss(&a).unwrap(), det_bareiss(&a.transpose()).unwrap());
        }

        #[test]
        fn det_scales_per_row(a in small_square(3), c in -5_i64..=5) {
            // Scaling the whole matrix by c scales det by c^n.
            let c = Rational::from_i64(c);
            let scaled = a.scale(&c);
            let expected = c.clone() * c.clone() * c * det_bareiss(&a).unwrap();
            prop_assert_eq!(det_bareiss(&scaled).unwrap(), expected);
        }
    }
}
