//! Elementary symmetric functions of matrix sums.
//!
//! The crate provides exact linear algebra over generic scalar rings
//! (arbitrary-precision rationals, floats, and their complexifications),
//! determinant and characteristic-polynomial routines, verifiers for a
//! family of alternating-sum determinant identities, and randomized
//! floating-point scans of trace-positivity questions for matrix pencils
//! `(A + tB)^m`.

pub mod combinatorics;
pub mod det;
pub mod poly;
pub mod symm;
pub mod conjectures;
pub mod error;
pub mod identities;
pub mod io;
pub mod matpoly;
pub mod matrix;
pub mod ring;
pub mod scan;

pub use combinatorics::index_subsets;
pub use det::{det_bareiss, det_laplace, det_permutation, MAX_LAPLACE_DIM, MAX_PERMUTATION_DIM};
pub use error::Error;
pub use conjectures::{bmv_coeffs, symm_poly_coeffs, symm_poly_coeffs_by_minors, symm_poly_coeffs_interpolated, symm_poly_coeffs_upto};
pub use matpoly::{matpoly_pow, MatPoly};
pub use io::{exact_matrix_to_json, float_matrix_to_json, parse_matrix_str, parse_rational, MatrixFile};
pub use identities::{alternating_det_residual, optimality_witness, reconstruct_symm, s2_of_sum, s3_of_sum, s3_of_sum3, s4_of_sum, submatrix_residual, symm_residual, MatrixTuple, Residual, DEFAULT_SUBSET_CAP};
pub use poly::Poly;
pub use matrix::{IndexSet, Matrix};
pub use symm::{charpoly_coeffs, elementary_to_newton, newton_to_elementary, symm_all, symm_minors, PowerSumVector, SymmVector};
pub use scan::{psd_random, psd_random_hermitian, scan, trial_rng, KSummary, ScanConfig, ScanReport, ScanRing, Violation};
pub use ring::{Complex64, ComplexInt, ComplexRational, Rational, Ring};
