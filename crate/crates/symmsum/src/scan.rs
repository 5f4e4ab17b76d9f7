//! Randomized scans for nonnegativity of the coefficient vectors of
//! S_k((A+tB)^m) over positive semidefinite pairs.
//!
//! Every trial derives its own RNG stream from (seed, trial index), so
//! results are identical at any thread count; trials may run in
//! parallel and are aggregated in trial order. Matrices are sampled as
//! Gram matrices G^T G (or G* G), which are PSD by construction.
//!
//! A coefficient counts as a violation candidate when it falls below
//! -tolerance * scale, where scale = max(1, largest |coefficient| of
//! that polynomial); the threshold is relative because magnitudes grow
//! like (norm A + norm B)^m. Candidates are then escalated: the float
//! entries are converted bit-exactly to dyadic rationals and the
//! coefficient is recomputed over the exact ring. Only candidates that
//! stay negative exactly are reported as violations.

use crate::conjectures::symm_poly_coeffs_by_minors;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::ring::{Complex64, ComplexInt, ComplexRational, Rational, Ring};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Product r * m beyond which a scan is refused.
const MAX_SCAN_WORK: usize = 256;

/// Scalar domain the scan samples from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanRing {
    /// Real symmetric PSD pairs (the default regime).
    FloatSymmetric,
    /// Complex Hermitian PSD pairs.
    FloatHermitian,
}

fn default_tolerance() -> f64 {
    1e-9
}

fn default_ring() -> ScanRing {
    ScanRing::FloatSymmetric
}

/// Parameters of one scan run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    /// Matrix dimension r.
    pub r: usize,
    /// Power m of the pencil.
    pub m: usize,
    /// Orders k of S_k to test, each between 0 and r.
    pub k_values: Vec<usize>,
    /// Number of PSD pairs to sample.
    pub trials: usize,
    /// Base seed; trial i uses RNG stream i of this seed.
    pub seed: u64,
    /// Relative violation threshold.
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_ring")]
    pub ring: ScanRing,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.r < 1 {
            return Err(Error::invalid("dimension r must be at least 1".to_string()));
        }
        if self.m < 1 {
            return Err(Error::invalid("power m must be at least 1".to_string()));
        }
        if self.trials < 1 {
            return Err(Error::invalid("need at least one trial".to_string()));
        }
        if self.k_values.is_empty() {
            return Err(Error::invalid("no symmetric-function orders given".to_string()));
        }
        if let Some(&k) = self.k_values.iter().find(|&&k| k > self.r) {
            return Err(Error::invalid(format!(
                "order k={} exceeds matrix dimension r={}",
                k, self.r
            )));
        }
        if !self.tolerance.is_finite() || self.tolerance < 0.0 {
            return Err(Error::invalid(
                "tolerance must be finite and nonnegative".to_string(),
            ));
        }
        if self.r * self.m > MAX_SCAN_WORK {
            return Err(Error::SizeLimit {
                what: "scan work bound r*m",
                limit: MAX_SCAN_WORK,
                requested: self.r * self.m,
            });
        }
        Ok(())
    }
}

/// Per-order summary over all trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KSummary {
    pub k: usize,
    /// Smallest coefficient seen, normalized by its polynomial's scale.
    pub min_coeff: f64,
    /// Trial that attained the minimum (first one on ties).
    pub argmin_trial: usize,
    /// Digest of that trial's sampled pair, for replay verification.
    pub argmin_digest: String,
}

/// A negative coefficient that survived exact recomputation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: usize,
    pub k: usize,
    pub coeff_index: usize,
    /// Float value that triggered the candidate.
    pub value: f64,
    /// Exact value after rationalizing the pair, as a rational string.
    pub exact_value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub config: ScanConfig,
    pub per_k: Vec<KSummary>,
    pub violations: Vec<Violation>,
    /// Candidates that escalation proved to be rounding artifacts.
    pub escalations_resolved: usize,
    pub elapsed_seconds: f64,
}

/// Per-trial RNG: stream `trial` of the base seed, so any subset of
/// trials can be replayed independently.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Random symmetric PSD matrix G^T G with G entries uniform on [-1, 1].
pub fn psd_random(r: usize, rng: &mut impl Rng) -> Matrix<f64> {
    let g = Matrix::from_fn(r, r, |_, _| rng.random_range(-1.0..=1.0));
    // Entry (i, j) sums G[k][i] G[k][j] over k in a fixed order; float
    // multiplication commutes bitwise, so the result is exactly
    // symmetric with no fixup step.
    Matrix::from_fn(r, r, |i, j| {
        (0..r).map(|k| g[(k, i)] * g[(k, j)]).sum()
    })
}

/// Random Hermitian PSD matrix G* G with real and imaginary parts of G
/// uniform on [-1, 1]. Exactly Hermitian as numbers by the same
/// pairing argument as the symmetric case (diagonal imaginary parts
/// cancel to signed zeros), so rationalizing the entries yields an
/// exactly Hermitian rational matrix.
pub fn psd_random_hermitian(r: usize, rng: &mut impl Rng) -> Matrix<Complex64> {
    let g = Matrix::from_fn(r, r, |_, _| {
        Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
    });
    Matrix::from_fn(r, r, |i, j| {
        (0..r)
            .map(|k| g[(k, i)].conj() * g[(k, j)])
            .fold(Complex64::zero(), |acc, z| acc + z)
    })
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x1000_0000_01b3;

/// FNV-1a over a little-endian byte stream; stable across platforms.
fn fnv1a(bytes: impl Iterator<Item = u8>) -> u64 {
    bytes.fold(FNV_OFFSET, |h, b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

/// Scan-scalar abstraction: how to sample, digest, rationalize, and
/// read coefficients for each supported ring.
pub(crate) trait ScanScalar: Ring {
    type Exact: Ring;
    /// Integer form of `Exact`, the ring escalation computes in.
    type Int: Ring;

    fn sample_psd(r: usize, rng: &mut ChaCha8Rng) -> Matrix<Self>;
    fn digest_pair(a: &Matrix<Self>, b: &Matrix<Self>) -> String;
    /// Real part used for the nonnegativity check.
    fn to_real(c: &Self) -> f64;
    /// Bit-exact conversion of every entry to an exact scalar.
    fn rationalize(m: &Matrix<Self>) -> Matrix<Self::Exact>;
    /// Multiplies every entry by 2^e for the smallest e >= 0 that makes
    /// all entries integers (rationalized floats are dyadic). A positive
    /// scale factor, so it never changes a coefficient's sign, and the
    /// exact recheck then runs on plain integers with no gcd work.
    fn integerize(m: &Matrix<Self::Exact>) -> (Matrix<Self::Int>, i64);
    fn int_is_negative(v: &Self::Int) -> bool;
    /// Maps a scaled integer result back to the exact scalar v * 2^e.
    fn int_to_exact(v: &Self::Int, e: i64) -> Self::Exact;
    fn exact_to_string(v: &Self::Exact) -> String;
}

/// Smallest e such that 2^e clears every denominator in sight, assuming
/// power-of-two denominators; still a harmless positive scaling if not.
fn dyadic_exponent<'a>(denoms: impl Iterator<Item = &'a BigInt>) -> i64 {
    denoms
        .map(|d| d.bits() as i64 - 1)
        .max()
        .unwrap_or(0)
        .max(0)
}

fn pow2(e: i64) -> Rational {
    Rational::from_integer(BigInt::one() << e.unsigned_abs() as usize)
}

fn times_pow2(v: &Rational, e: i64) -> Rational {
    if e >= 0 {
        v.clone() * pow2(e)
    } else {
        v.clone() / pow2(e)
    }
}

fn int_times_pow2(n: &BigInt, e: i64) -> Rational {
    let shift = e.unsigned_abs() as usize;
    if e >= 0 {
        Rational::from_integer(n.clone() << shift)
    } else {
        Rational::new(n.clone(), BigInt::one() << shift)
    }
}

impl ScanScalar for f64 {
    type Exact = Rational;
    type Int = BigInt;

    fn sample_psd(r: usize, rng: &mut ChaCha8Rng) -> Matrix<f64> {
        psd_random(r, rng)
    }

    fn digest_pair(a: &Matrix<f64>, b: &Matrix<f64>) -> String {
        let bytes = a
            .entries()
            .iter()
            .chain(b.entries())
            .flat_map(|x| x.to_bits().to_le_bytes());
        format!("{:016x}", fnv1a(bytes))
    }

    fn to_real(c: &f64) -> f64 {
        *c
    }

    fn rationalize(m: &Matrix<f64>) -> Matrix<Rational> {
        m.map(|&x| Rational::from_float(x).expect("finite float entry"))
    }

    fn integerize(m: &Matrix<Rational>) -> (Matrix<BigInt>, i64) {
        let e = dyadic_exponent(m.entries().iter().map(|v| v.denom()));
        (
            m.map(|v| {
                let scaled = times_pow2(v, e);
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            }),
            e,
        )
    }

    fn int_is_negative(v: &BigInt) -> bool {
        v.is_negative()
    }

    fn int_to_exact(v: &BigInt, e: i64) -> Rational {
        int_times_pow2(v, e)
    }

    fn exact_to_string(v: &Rational) -> String {
        v.to_string()
    }
}

impl ScanScalar for Complex64 {
    type Exact = ComplexRational;
    type Int = ComplexInt;

    fn sample_psd(r: usize, rng: &mut ChaCha8Rng) -> Matrix<Complex64> {
        psd_random_hermitian(r, rng)
    }

    fn digest_pair(a: &Matrix<Complex64>, b: &Matrix<Complex64>) -> String {
        let bytes = a.entries().iter().chain(b.entries()).flat_map(|z| {
            z.re.to_bits()
                .to_le_bytes()
                .into_iter()
                .chain(z.im.to_bits().to_le_bytes())
        });
        format!("{:016x}", fnv1a(bytes))
    }

    fn to_real(c: &Complex64) -> f64 {
        c.re
    }

    fn rationalize(m: &Matrix<Complex64>) -> Matrix<ComplexRational> {
        m.map(|z| {
            ComplexRational::new(
                Rational::from_float(z.re).expect("finite float entry"),
                Rational::from_float(z.im).expect("finite float entry"),
            )
        })
    }

    fn integerize(m: &Matrix<ComplexRational>) -> (Matrix<ComplexInt>, i64) {
        let e = dyadic_exponent(
            m.entries()
                .iter()
                .flat_map(|z| [z.re.denom(), z.im.denom()]),
        );
        (
            m.map(|z| {
                let re = times_pow2(&z.re, e);
                let im = times_pow2(&z.im, e);
                debug_assert!(re.is_integer() && im.is_integer());
                ComplexInt::new(re.to_integer(), im.to_integer())
            }),
            e,
        )
    }

    fn int_is_negative(v: &ComplexInt) -> bool {
        // S_k of an exactly Hermitian matrix pencil has exactly real
        // coefficients; a nonzero imaginary part would mean the input
        // was not Hermitian.
        debug_assert!(v.im.is_zero());
        v.re.is_negative()
    }

    fn int_to_exact(v: &ComplexInt, e: i64) -> ComplexRational {
        ComplexRational::new(int_times_pow2(&v.re, e), int_times_pow2(&v.im, e))
    }

    fn exact_to_string(v: &ComplexRational) -> String {
        if v.im.is_zero() {
            v.re.to_string()
        } else {
            format!("{}+{}i", v.re, v.im)
        }
    }
}

pub(crate) struct Candidate {
    k: usize,
    coeff_index: usize,
    value: f64,
}

struct TrialOutcome<S: ScanScalar> {
    digest: String,
    /// Minimum normalized coefficient for each entry of k_values.
    min_norm: Vec<f64>,
    candidates: Vec<Candidate>,
    /// Sampled pair, kept only when escalation will need it.
    pair: Option<(Matrix<S>, Matrix<S>)>,
}

fn run_trial<S: ScanScalar>(
    config: &ScanConfig,
    trial: usize,
) -> Result<TrialOutcome<S>, Error> {
    let mut rng = trial_rng(config.seed, trial);
    let a = S::sample_psd(config.r, &mut rng);
    let b = S::sample_psd(config.r, &mut rng);
    let digest = S::digest_pair(&a, &b);
    let mut min_norm = Vec::with_capacity(config.k_values.len());
    let mut candidates = Vec::new();
    let k_max = config.k_values.iter().copied().max().unwrap_or(0);
    // Minor expansion, not the power-sum recurrence: over floats the
    // recurrence cancels catastrophically once m is large.
    let all_orders = symm_poly_coeffs_by_minors(&a, &b, config.m, k_max)?;
    for &k in &config.k_values {
        let coeffs = &all_orders[k];
        let reals: Vec<f64> = coeffs.iter().map(S::to_real).collect();
        let scale = reals.iter().fold(1.0_f64, |s, c| s.max(c.abs()));
        let mut trial_min = f64::INFINITY;
        for (j, &c) in reals.iter().enumerate() {
            trial_min = trial_min.min(c / scale);
            if c < -config.tolerance * scale {
                candidates.push(Candidate {
                    k,
                    coeff_index: j,
                    value: c,
                });
            }
        }
        min_norm.push(trial_min);
    }
    let pair = if candidates.is_empty() {
        None
    } else {
        Some((a, b))
    };
    Ok(TrialOutcome {
        digest,
        min_norm,
        candidates,
        pair,
    })
}

/// Recomputes every flagged coefficient of one trial over the exact
/// ring. Both matrices are scaled to integer entries first (see
/// [`ScanScalar::integerize`]); with A scaled by 2^alpha and B by
/// 2^beta, coefficient j of order k picks up the positive factor
/// 2^(alpha*m*k - j*(alpha-beta)), so signs carry over and the true
/// value is recovered by undoing that factor. Returns the number of
/// candidates cleared as float rounding artifacts and the violations
/// that survived.
pub(crate) fn escalate_trial<S: ScanScalar>(
    a: &Matrix<S>,
    b: &Matrix<S>,
    m: usize,
    trial: usize,
    candidates: &[Candidate],
) -> Result<(usize, Vec<Violation>), Error> {
    let (a_int, alpha) = S::integerize(&S::rationalize(a));
    let (b_int, beta) = S::integerize(&S::rationalize(b));
    let mut resolved = 0;
    let mut violations = Vec::new();
    let mut orders: Vec<usize> = candidates.iter().map(|c| c.k).collect();
    orders.sort_unstable();
    orders.dedup();
    for &k in &orders {
        let coeffs = symm_poly_coeffs_by_minors(&a_int, &b_int, m, k)?
            .pop()
            .expect("one vector per order");
        for cand in candidates.iter().filter(|c| c.k == k) {
            let scaled = &coeffs[cand.coeff_index];
            if S::int_is_negative(scaled) {
                let e = cand.coeff_index as i64 * (alpha - beta) - alpha * (m * k) as i64;
                let value = S::int_to_exact(scaled, e);
                violations.push(Violation {
                    trial,
                    k,
                    coeff_index: cand.coeff_index,
                    value: cand.value,
                    exact_value: S::exact_to_string(&value),
                });
            } else {
                resolved += 1;
            }
        }
    }
    Ok((resolved, violations))
}

fn scan_generic<S: ScanScalar>(config: &ScanConfig) -> Result<ScanReport, Error> {
    let start = Instant::now();
    let outcomes: Vec<TrialOutcome<S>> = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial::<S>(config, trial))
        .collect::<Result<_, _>>()?;

    let mut per_k = Vec::with_capacity(config.k_values.len());
    for (ki, &k) in config.k_values.iter().enumerate() {
        let mut best = (f64::INFINITY, 0_usize);
        for (trial, outcome) in outcomes.iter().enumerate() {
            if outcome.min_norm[ki] < best.0 {
                best = (outcome.min_norm[ki], trial);
            }
        }
        per_k.push(KSummary {
            k,
            min_coeff: best.0,
            argmin_trial: best.1,
            argmin_digest: outcomes[best.1].digest.clone(),
        });
    }

    let mut violations = Vec::new();
    let mut escalations_resolved = 0;
    for (trial, outcome) in outcomes.iter().enumerate() {
        if outcome.candidates.is_empty() {
            continue;
        }
        let (a, b) = outcome.pair.as_ref().expect("pair kept with candidates");
        let (resolved, mut vs) = escalate_trial(a, b, config.m, trial, &outcome.candidates)?;
        escalations_resolved += resolved;
        violations.append(&mut vs);
    }

    Ok(ScanReport {
        config: config.clone(),
        per_k,
        violations,
        escalations_resolved,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs the scan described by `config`. Deterministic for a fixed seed
/// at any thread count; see the module documentation.
pub fn scan(config: &ScanConfig) -> Result<ScanReport, Error> {
    config.validate()?;
    match config.ring {
        ScanRing::FloatSymmetric => scan_generic::<f64>(config),
        ScanRing::FloatHermitian => scan_generic::<Complex64>(config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> ScanConfig {
        ScanConfig {
            r: 3,
            m: 3,
            k_values: vec![1, 2, 3],
            trials: 6,
            seed: 11,
            tolerance: 1e-9,
            ring: ScanRing::FloatSymmetric,
        }
    }

    #[test]
    fn gram_matrix_is_bitwise_symmetric() {
        let mut rng = trial_rng(1, 0);
        let x = psd_random(5, &mut rng);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(x[(i, j)].to_bits(), x[(j, i)].to_bits());
            }
            assert!(x[(i, i)] >= 0.0);
        }
    }

    #[test]
    fn gram_quadratic_form_is_nonnegative() {
        let mut rng = trial_rng(2, 0);
        let x = psd_random(4, &mut rng);
        for _ in 0..100 {
            let v: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..=1.0)).collect();
            let mut q = 0.0;
            for i in 0..4 {
                for j in 0..4 {
                    q += v[i] * x[(i, j)] * v[j];
                }
            }
            assert!(q >= -1e-12, "quadratic form {}", q);
        }
    }

    #[test]
    fn hermitian_gram_matrix_is_bitwise_hermitian() {
        let mut rng = trial_rng(3, 0);
        let x = psd_random_hermitian(4, &mut rng);
        for i in 0..4 {
            for j in 0..4 {
                let ij = x[(i, j)];
                let ji = x[(j, i)];
                assert_eq!(ij.re.to_bits(), ji.re.to_bits());
                // Numeric equality: the diagonal imaginary part is a
                // signed zero, where bit patterns legitimately differ.
                assert_eq!(ij.im, -ji.im);
            }
            assert_eq!(x[(i, i)].im, 0.0);
            assert!(x[(i, i)].re >= 0.0);
        }
    }

    #[test]
    fn hermitian_quadratic_form_is_nonnegative() {
        let mut rng = trial_rng(4, 0);
        let x = psd_random_hermitian(3, &mut rng);
        for _ in 0..100 {
            let v: Vec<Complex64> = (0..3)
                .map(|_| Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
                .collect();
            let mut q = Complex64::zero();
            for i in 0..3 {
                for j in 0..3 {
                    q += v[i].conj() * x[(i, j)] * v[j];
                }
            }
            assert!(q.re >= -1e-12, "quadratic form {}", q.re);
            assert!(q.im.abs() < 1e-12);
        }
    }

    #[test]
    fn scalar_scan_has_nonnegative_pair() {
        // r = 1: PSD means a nonnegative number, so both coefficients
        // of (a + t b)^1 are nonnegative.
        let config = ScanConfig {
            r: 1,
            m: 1,
            k_values: vec![1],
            trials: 1,
            seed: 5,
            tolerance: 1e-9,
            ring: ScanRing::FloatSymmetric,
        };
        let report = scan(&config).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.per_k[0].min_coeff >= 0.0);
    }

    #[test]
    fn small_scan_is_clean_for_both_rings() {
        for ring in [ScanRing::FloatSymmetric, ScanRing::FloatHermitian] {
            let config = ScanConfig {
                ring,
                trials: 4,
                ..base_config()
            };
            let report = scan(&config).unwrap();
            assert!(report.violations.is_empty(), "{:?}", report.violations);
            assert_eq!(report.per_k.len(), 3);
            for summary in &report.per_k {
                assert!(summary.min_coeff >= 0.0);
                assert!(summary.argmin_trial < 4);
            }
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let config = base_config();
        let r1 = scan(&config).unwrap();
        let r2 = scan(&config).unwrap();
        assert_eq!(r1.per_k, r2.per_k);
        assert_eq!(r1.violations, r2.violations);
    }

    #[test]
    fn reports_do_not_depend_on_thread_count() {
        let config = base_config();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| scan(&config))
            .unwrap();
        let quad = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| scan(&config))
            .unwrap();
        assert_eq!(single.per_k, quad.per_k);
        assert_eq!(single.violations, quad.violations);
        assert_eq!(single.escalations_resolved, quad.escalations_resolved);
    }

    #[test]
    fn different_seeds_sample_different_pairs() {
        let mut c1 = base_config();
        c1.trials = 1;
        let mut c2 = c1.clone();
        c2.seed = 12;
        let d1 = scan(&c1).unwrap().per_k[0].argmin_digest.clone();
        let d2 = scan(&c2).unwrap().per_k[0].argmin_digest.clone();
        assert_ne!(d1, d2);
    }

    #[test]
    fn escalation_confirms_true_negative() {
        // Non-PSD pair engineered so a coefficient is exactly -1:
        // Tr((diag(1,0) + t diag(0,-1))^1) = 1 - t.
        let a = Matrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let b = Matrix::from_rows(vec![vec![0.0, 0.0], vec![0.0, -1.0]]).unwrap();
        let cand = [Candidate {
            k: 1,
            coeff_index: 1,
            value: -1.0,
        }];
        let (resolved, vs) = escalate_trial::<f64>(&a, &b, 1, 0, &cand).unwrap();
        assert_eq!(resolved, 0);
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].exact_value, "-1");
        assert_eq!(vs[0].coeff_index, 1);
    }

    #[test]
    fn escalation_clears_nonnegative_value() {
        let i2 = Matrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let cand = [Candidate {
            k: 1,
            coeff_index: 1,
            value: -1e-18,
        }];
        let (resolved, vs) = escalate_trial::<f64>(&i2, &i2, 2, 0, &cand).unwrap();
        assert_eq!(resolved, 1);
        assert!(vs.is_empty());
    }

    #[test]
    fn escalation_undoes_integer_scaling() {
        // Entries with denominators 4 and 2: integerization scales A by
        // 2^2 and B by 2^2, and the reported value must match the
        // unscaled coefficient. Tr((A + tB)^1) has t-coefficient -1/4.
        let a = Matrix::from_rows(vec![vec![0.75, 0.0], vec![0.0, 0.5]]).unwrap();
        let b = Matrix::from_rows(vec![vec![-0.25, 0.0], vec![0.0, 0.0]]).unwrap();
        let cand = [Candidate {
            k: 1,
            coeff_index: 1,
            value: -0.25,
        }];
        let (resolved, vs) = escalate_trial::<f64>(&a, &b, 1, 0, &cand).unwrap();
        assert_eq!(resolved, 0);
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].exact_value, "-1/4");
    }

    #[test]
    fn rationalization_is_bit_exact() {
        use num_traits::ToPrimitive;
        let mut rng = trial_rng(6, 0);
        let x = psd_random(3, &mut rng);
        let exact = <f64 as ScanScalar>::rationalize(&x);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(exact[(i, j)].to_f64().unwrap(), x[(i, j)]);
            }
        }
    }

    #[test]
    fn config_validation_rejects_bad_inputs() {
        let mut c = base_config();
        c.k_values = vec![4];
        assert!(c.validate().is_err());
        c = base_config();
        c.trials = 0;
        assert!(c.validate().is_err());
        c = base_config();
        c.tolerance = -1.0;
        assert!(c.validate().is_err());
        c = base_config();
        c.r = 32;
        c.m = 16;
        assert!(matches!(c.validate(), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn report_serializes_with_expected_shape() {
        let mut config = base_config();
        config.trials = 2;
        let report = scan(&config).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["config"]["ring"], "float-symmetric");
        assert_eq!(json["config"]["seed"], 11);
        assert!(json["per_k"][0]["min_coeff"].is_number());
        assert!(json["per_k"][0]["argmin_digest"].is_string());
        assert!(json["violations"].as_array().unwrap().is_empty());
        assert!(json["elapsed_seconds"].is_number());
        let back: ScanReport = serde_json::from_value(json).unwrap();
        assert_eq!(back.per_k, report.per_k);
    }
}
