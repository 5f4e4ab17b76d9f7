//! Command-line driver for the symmsum library: symmetric-function
//! queries on matrix files, identity verification on random exact
//! matrices, and numeric conjecture scans.
//!
//! Exit codes: 0 success, 1 mathematical failure (nonzero residual or
//! a violation that survived exact recomputation), 2 usage or IO error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use symmsum::{
    alternating_det_residual, bmv_coeffs, charpoly_coeffs, exact_matrix_to_json, index_subsets,
    optimality_witness, parse_matrix_str, parse_rational, reconstruct_symm, s2_of_sum, s3_of_sum,
    s3_of_sum3, s4_of_sum, scan, submatrix_residual, symm_all, symm_residual, trial_rng, Matrix,
    MatrixFile, MatrixTuple, Rational, Ring, ScanConfig, ScanRing, DEFAULT_SUBSET_CAP,
};

type CliResult<T> = Result<T, String>;

/// Exact identities for determinants and symmetric functions of matrix
/// sums, plus seeded numeric scans of trace and S_k coefficient
/// positivity for PSD pencils.
#[derive(Parser)]
#[command(name = "symmsum", version)]
struct Cli {
    /// Worker threads for parallel sections (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print elementary symmetric functions of a matrix's eigenvalues.
    Symm(SymmArgs),
    /// Print characteristic polynomial coefficients, constant term first.
    Charpoly(CharpolyArgs),
    /// Check an identity on seeded random integer matrices.
    Verify(VerifyArgs),
    /// Rebuild S_tau of a tuple's sum from subset sums alone.
    Reconstruct(ReconstructArgs),
    /// Evaluate the expanded formula for S_k of a sum of matrices.
    ClosedForm(ClosedFormArgs),
    /// Print the diagonal tuple whose residual stays (-1)^n at N = n.
    Witness(WitnessArgs),
    /// Print the coefficients of Tr((A + tB)^m), constant term first.
    Bmv(BmvArgs),
    /// Sample PSD pairs and test coefficients of S_k((A + tB)^m) for
    /// negativity; suspects are recomputed exactly before being reported.
    PositivityScan(ScanArgs),
}

#[derive(Args)]
struct SymmArgs {
    /// Matrix file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Print only S_k; default prints S_0 through S_n.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct CharpolyArgs {
    /// Matrix file (JSON).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check.
    #[arg(value_enum)]
    target: VerifyTarget,
    /// Matrix dimension.
    #[arg(long)]
    n: Option<usize>,
    /// Tuple length.
    #[arg(long = "N")]
    members: Option<usize>,
    /// Symmetric-function order / block size.
    #[arg(long)]
    tau: Option<usize>,
    /// Scalar for the optimality witness (rational, e.g. 7/3).
    #[arg(long)]
    x: Option<String>,
    /// Random draws per configuration.
    #[arg(long)]
    trials: Option<usize>,
    /// RNG seed, echoed in every output line.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Shrink `verify all` to small sizes and 25 trials per identity.
    #[arg(long)]
    quick: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    /// Alternating determinant residual vanishes for N >= n+1.
    #[value(name = "theorem1")]
    Theorem1,
    /// Same residual for every tau x tau submatrix, N >= tau+1.
    #[value(name = "corollary-sub")]
    CorollarySub,
    /// Same residual for S_tau of the summed matrices.
    #[value(name = "corollary-symm")]
    CorollarySymm,
    /// S_tau of a sum rebuilt from subset sums.
    #[value(name = "aux19")]
    Aux19,
    /// Expanded formula for S_2(A + B).
    #[value(name = "s2")]
    S2,
    /// Expanded formula for S_3(A + B).
    #[value(name = "s3")]
    S3,
    /// Expanded formula for S_3(A + B + C).
    #[value(name = "s3x3")]
    S3x3,
    /// Expanded formula for S_4(A + B).
    #[value(name = "s4")]
    S4,
    /// Witness residual equals (-1)^n at the sharp tuple length N = n.
    #[value(name = "optimality")]
    Optimality,
    /// Every identity above on a grid of sizes.
    #[value(name = "all")]
    All,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Matrix file; repeat the flag once per tuple member.
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    /// Order of the symmetric function to rebuild.
    #[arg(long)]
    tau: usize,
}

#[derive(Args)]
struct ClosedFormArgs {
    /// Order of the symmetric function (2, 3, or 4).
    #[arg(long)]
    k: usize,
    /// First matrix file.
    #[arg(long = "a")]
    a: PathBuf,
    /// Second matrix file.
    #[arg(long = "b")]
    b: PathBuf,
    /// Third matrix file (k = 3 only).
    #[arg(long = "c")]
    c: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    /// Matrix dimension (and tuple length).
    #[arg(long)]
    n: usize,
    /// Scalar multiplying the base matrix (rational, e.g. 7/3).
    #[arg(long, default_value = "1")]
    x: String,
    /// Also write the witness description to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BmvArgs {
    /// Matrix file for A.
    #[arg(long = "a")]
    a: PathBuf,
    /// Matrix file for B.
    #[arg(long = "b")]
    b: PathBuf,
    /// Power of the pencil.
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
struct ScanArgs {
    /// Matrix dimension.
    #[arg(long)]
    r: usize,
    /// Power of the pencil.
    #[arg(long)]
    m: usize,
    /// Comma-separated orders to test (default: 1 through r).
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<usize>>,
    /// Number of PSD pairs to sample.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Base RNG seed; trial i uses stream i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the full JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Relative negativity threshold.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Ground ring for the sampled pairs.
    #[arg(long, value_enum, default_value_t = RingChoice::FloatSymmetric)]
    ring: RingChoice,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RingChoice {
    FloatSymmetric,
    FloatHermitian,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    let outcome = match threads {
        Some(t) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
                Ok(pool) => pool,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            pool.install(|| execute(cli.command))
        }
        None => execute(cli.command),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> CliResult<u8> {
    match command {
        Command::Symm(args) => cmd_symm(args),
        Command::Charpoly(args) => cmd_charpoly(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Reconstruct(args) => cmd_reconstruct(args),
        Command::ClosedForm(args) => cmd_closed_form(args),
        Command::Witness(args) => cmd_witness(args),
        Command::Bmv(args) => cmd_bmv(args),
        Command::PositivityScan(args) => cmd_scan(args),
    }
}

fn estr<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn load(path: &Path) -> CliResult<MatrixFile> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    parse_matrix_str(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

/// Subset-enumeration cap: 20 by default, raisable through the
/// SYMMSUM_MAX_N environment variable (2^N terms, so mind the cost).
fn subset_cap() -> usize {
    std::env::var("SYMMSUM_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(DEFAULT_SUBSET_CAP)
}

fn join<T: ToString>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_symm(args: SymmArgs) -> CliResult<u8> {
    match load(&args.input)? {
        MatrixFile::Exact(m) => {
            let s = symm_all(&m).map_err(estr)?;
            match args.k {
                Some(k) => println!("{}", s.get(k)),
                None => println!("{}", join(s.values(), " ")),
            }
        }
        MatrixFile::Float(m) => {
            let s = symm_all(&m).map_err(estr)?;
            match args.k {
                Some(k) => println!("{}", s.get(k)),
                None => println!("{}", join(s.values(), " ")),
            }
        }
    }
    Ok(0)
}

fn cmd_charpoly(args: CharpolyArgs) -> CliResult<u8> {
    match load(&args.input)? {
        MatrixFile::Exact(m) => {
            println!("{}", join(&charpoly_coeffs(&m).map_err(estr)?, " "));
        }
        MatrixFile::Float(m) => {
            println!("{}", join(&charpoly_coeffs(&m).map_err(estr)?, " "));
        }
    }
    Ok(0)
}

fn cmd_reconstruct(args: ReconstructArgs) -> CliResult<u8> {
    let files: Vec<MatrixFile> = args
        .inputs
        .iter()
        .map(|p| load(p))
        .collect::<CliResult<_>>()?;
    let cap = subset_cap();
    if files.iter().all(MatrixFile::is_exact) {
        let members: Vec<Matrix<Rational>> = files
            .into_iter()
            .map(|f| f.into_exact().map_err(estr))
            .collect::<CliResult<_>>()?;
        let tuple = MatrixTuple::with_cap(members, cap).map_err(estr)?;
        println!("{}", reconstruct_symm(&tuple, args.tau).map_err(estr)?);
    } else {
        let members: Vec<Matrix<f64>> = files.into_iter().map(MatrixFile::into_float).collect();
        let tuple = MatrixTuple::with_cap(members, cap).map_err(estr)?;
        println!("{}", reconstruct_symm(&tuple, args.tau).map_err(estr)?);
    }
    Ok(0)
}

fn cmd_closed_form(args: ClosedFormArgs) -> CliResult<u8> {
    if args.c.is_some() && args.k != 3 {
        return Err("a third matrix is only accepted for k=3".to_string());
    }
    let a = load(&args.a)?;
    let b = load(&args.b)?;
    let c = args.c.as_deref().map(load).transpose()?;
    let exact = a.is_exact() && b.is_exact() && c.as_ref().is_none_or(MatrixFile::is_exact);
    if exact {
        let a = a.into_exact().map_err(estr)?;
        let b = b.into_exact().map_err(estr)?;
        let value = match (args.k, c) {
            (2, None) => s2_of_sum(&a, &b),
            (3, None) => s3_of_sum(&a, &b),
            (3, Some(c)) => s3_of_sum3(&a, &b, &c.into_exact().map_err(estr)?),
            (4, None) => s4_of_sum(&a, &b),
            _ => return Err("supported orders are k=2, k=3, k=4".to_string()),
        };
        println!("{}", value.map_err(estr)?);
    } else {
        let a = a.into_float();
        let b = b.into_float();
        let value = match (args.k, c) {
            (2, None) => s2_of_sum(&a, &b),
            (3, None) => s3_of_sum(&a, &b),
            (3, Some(c)) => s3_of_sum3(&a, &b, &c.into_float()),
            (4, None) => s4_of_sum(&a, &b),
            _ => return Err("supported orders are k=2, k=3, k=4".to_string()),
        };
        println!("{}", value.map_err(estr)?);
    }
    Ok(0)
}

fn cmd_witness(args: WitnessArgs) -> CliResult<u8> {
    if args.n == 0 {
        return Err("dimension n must be at least 1".to_string());
    }
    let x = parse_rational(&args.x).map_err(estr)?;
    let (base, tuple, residual) = optimality_witness(args.n, &x);
    let doc = serde_json::json!({
        "n": args.n,
        "x": args.x,
        "base": exact_matrix_to_json(&base),
        "members": tuple
            .members()
            .iter()
            .map(exact_matrix_to_json)
            .collect::<Vec<_>>(),
        "residual": residual.value.to_string(),
    });
    let text = format!("{:#}", doc);
    println!("{}", text);
    if let Some(path) = &args.out {
        std::fs::write(path, text + "\n").map_err(|e| format!("{}: {}", path.display(), e))?;
    }
    Ok(0)
}

fn cmd_bmv(args: BmvArgs) -> CliResult<u8> {
    let a = load(&args.a)?;
    let b = load(&args.b)?;
    if a.is_exact() && b.is_exact() {
        let coeffs = bmv_coeffs(
            &a.into_exact().map_err(estr)?,
            &b.into_exact().map_err(estr)?,
            args.m,
        )
        .map_err(estr)?;
        println!("{}", join(&coeffs, " "));
    } else {
        let coeffs = bmv_coeffs(&a.into_float(), &b.into_float(), args.m).map_err(estr)?;
        println!("{}", join(&coeffs, " "));
    }
    Ok(0)
}

fn cmd_scan(args: ScanArgs) -> CliResult<u8> {
    let k_values = args.k.clone().unwrap_or_else(|| (1..=args.r).collect());
    let ring = match args.ring {
        RingChoice::FloatSymmetric => ScanRing::FloatSymmetric,
        RingChoice::FloatHermitian => ScanRing::FloatHermitian,
    };
    let config = ScanConfig {
        r: args.r,
        m: args.m,
        k_values,
        trials: args.trials,
        seed: args.seed,
        tolerance: args.tolerance,
        ring,
    };
    let report = scan(&config).map_err(estr)?;
    let ring_name = match args.ring {
        RingChoice::FloatSymmetric => "float-symmetric",
        RingChoice::FloatHermitian => "float-hermitian",
    };
    println!(
        "scan: r={} m={} k={} trials={} seed={} tolerance={} ring={}",
        config.r,
        config.m,
        join(&config.k_values, ","),
        config.trials,
        config.seed,
        config.tolerance,
        ring_name
    );
    for s in &report.per_k {
        println!(
            "k={} min_coeff={} trial={} digest={}",
            s.k, s.min_coeff, s.argmin_trial, s.argmin_digest
        );
    }
    for v in &report.violations {
        println!(
            "violation: trial={} k={} coeff={} float={} exact={}",
            v.trial, v.k, v.coeff_index, v.value, v.exact_value
        );
    }
    println!(
        "violations={} escalations_resolved={}",
        report.violations.len(),
        report.escalations_resolved
    );
    if let Some(path) = &args.out {
        let text = serde_json::to_string_pretty(&report).map_err(estr)?;
        std::fs::write(path, text + "\n").map_err(|e| format!("{}: {}", path.display(), e))?;
    }
    Ok(if report.violations.is_empty() { 0 } else { 1 })
}

// Identity drivers. Each core runner returns (residuals checked,
// nonzero count) so the same code serves single runs and `verify all`.

/// Random integer matrix, entries uniform in [-9, 9]: small enough to
/// keep big-rational growth manageable through 2^N subset sums.
fn rand_mat(n: usize, rng: &mut impl Rng) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| Rational::from_i64(rng.random_range(-9..=9)))
}

fn rand_tuple(
    n: usize,
    count: usize,
    cap: usize,
    rng: &mut impl Rng,
) -> CliResult<MatrixTuple<Rational>> {
    MatrixTuple::with_cap((0..count).map(|_| rand_mat(n, rng)).collect(), cap).map_err(estr)
}

const STREAM_THEOREM1: usize = 1;
const STREAM_SUB: usize = 2;
const STREAM_SYMM: usize = 3;
const STREAM_AUX19: usize = 4;
const STREAM_S2: usize = 5;
const STREAM_S3: usize = 6;
const STREAM_S3X3: usize = 7;
const STREAM_S4: usize = 8;

/// Cap on (alpha, beta) block pairs checked per trial; beyond it a
/// random sample of pairs is used instead of full enumeration.
const MAX_BLOCK_PAIRS: usize = 400;

fn run_theorem1(
    n: usize,
    members: usize,
    trials: usize,
    cap: usize,
    rng: &mut impl Rng,
) -> CliResult<(usize, usize)> {
    let mut nonzero = 0;
    for _ in 0..trials {
        let base = rand_mat(n, rng);
        let s = rand_tuple(n, members, cap, rng)?;
        if !alternating_det_residual(&base, &s).map_err(estr)?.is_zero() {
            nonzero += 1;
        }
    }
    Ok((trials, nonzero))
}

fn run_sub(
    n: usize,
    tau: usize,
    members: usize,
    trials: usize,
    cap: usize,
    rng: &mut impl Rng,
) -> CliResult<(usize, usize)> {
    let subsets = index_subsets(n, tau).map_err(estr)?;
    let mut checked = 0;
    let mut nonzero = 0;
    for _ in 0..trials {
        let base = rand_mat(n, rng);
        let s = rand_tuple(n, members, cap, rng)?;
        if subsets.len() * subsets.len() <= MAX_BLOCK_PAIRS {
            for alpha in &subsets {
                for beta in &subsets {
                    checked += 1;
                    if !submatrix_residual(&base, &s, alpha, beta)
                        .map_err(estr)?
                        .is_zero()
                    {
                        nonzero += 1;
                    }
                }
            }
        } else {
            for _ in 0..MAX_BLOCK_PAIRS {
                let alpha = &subsets[rng.random_range(0..subsets.len())];
                let beta = &subsets[rng.random_range(0..subsets.len())];
                checked += 1;
                if !submatrix_residual(&base, &s, alpha, beta)
                    .map_err(estr)?
                    .is_zero()
                {
                    nonzero += 1;
                }
            }
        }
    }
    Ok((checked, nonzero))
}

fn run_symm(
    n: usize,
    tau: usize,
    members: usize,
    trials: usize,
    cap: usize,
    rng: &mut impl Rng,
) -> CliResult<(usize, usize)> {
    let mut nonzero = 0;
    for _ in 0..trials {
        let base = rand_mat(n, rng);
        let s = rand_tuple(n, members, cap, rng)?;
        if !symm_residual(&base, &s, tau).map_err(estr)?.is_zero() {
            nonzero += 1;
        }
    }
    Ok((trials, nonzero))
}

fn run_aux19(
    n: usize,
    tau: usize,
    members: usize,
    trials: usize,
    cap: usize,
    rng: &mut impl Rng,
) -> CliResult<(usize, usize)> {
    let mut mismatches = 0;
    for _ in 0..trials {
        let s = rand_tuple(n, members, cap, rng)?;
        let direct = symm_all(&s.total()).map_err(estr)?.get(tau);
        if reconstruct_symm(&s, tau).map_err(estr)? != direct {
            mismatches += 1;
        }
    }
    Ok((trials, mismatches))
}

fn run_closed_form(
    k: usize,
    n: usize,
    trials: usize,
    rng: &mut impl Rng,
) -> CliResult<(usize, usize)> {
    let mut mismatches = 0;
    for _ in 0..trials {
        let a = rand_mat(n, rng);
        let b = rand_mat(n, rng);
        let direct = symm_all(&(&a + &b)).map_err(estr)?.get(k);
        let formula = match k {
            2 => s2_of_sum(&a, &b),
            3 => s3_of_sum(&a, &b),
            4 => s4_of_sum(&a, &b),
            _ => return Err("supported orders are k=2, k=3, k=4".to_string()),
        };
        if formula.map_err(estr)? != direct {
            mismatches += 1;
        }
    }
    Ok((trials, mismatches))
}

fn run_triple_closed_form(n: usize, trials: usize, rng: &mut impl Rng) -> CliResult<(usize, usize)> {
    let mut mismatches = 0;
    for _ in 0..trials {
        let a = rand_mat(n, rng);
        let b = rand_mat(n, rng);
        let c = rand_mat(n, rng);
        let direct = symm_all(&(&(&a + &b) + &c)).map_err(estr)?.get(3);
        if s3_of_sum3(&a, &b, &c).map_err(estr)? != direct {
            mismatches += 1;
        }
    }
    Ok((trials, mismatches))
}

fn expected_sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::from_i64(1)
    } else {
        Rational::from_i64(-1)
    }
}

/// Sweep the witness over n in 1..=n_max and a spread of scalars.
fn run_optimality(n_max: usize) -> (usize, usize) {
    let xs = ["0", "1", "-5", "7/3", "1000000"];
    let mut checked = 0;
    let mut mismatches = 0;
    for n in 1..=n_max {
        for x in xs {
            let x = parse_rational(x).expect("literal scalar");
            let (_, _, r) = optimality_witness(n, &x);
            checked += 1;
            if r.value != expected_sign(n) {
                mismatches += 1;
            }
        }
    }
    (checked, mismatches)
}

fn verdict(failures: usize) -> &'static str {
    if failures == 0 {
        "ok"
    } else {
        "FAIL"
    }
}

fn exit_for(failures: usize) -> u8 {
    if failures == 0 {
        0
    } else {
        1
    }
}

fn cmd_verify(args: VerifyArgs) -> CliResult<u8> {
    let cap = subset_cap();
    let trials = args.trials.unwrap_or(if args.quick { 25 } else { 50 });
    let seed = args.seed;
    match args.target {
        VerifyTarget::Theorem1 => {
            let n = args.n.unwrap_or(3);
            let members = args.members.unwrap_or(n + 1);
            let mut rng = trial_rng(seed, STREAM_THEOREM1);
            let (checked, nonzero) = run_theorem1(n, members, trials, cap, &mut rng)?;
            println!(
                "theorem1: n={} N={} trials={} seed={} checked={} nonzero={} {}",
                n,
                members,
                trials,
                seed,
                checked,
                nonzero,
                verdict(nonzero)
            );
            Ok(exit_for(nonzero))
        }
        VerifyTarget::CorollarySub => {
            let n = args.n.unwrap_or(3);
            let tau = args.tau.unwrap_or(2.min(n));
            let members = args.members.unwrap_or(tau + 1);
            let mut rng = trial_rng(seed, STREAM_SUB);
            let (checked, nonzero) = run_sub(n, tau, members, trials, cap, &mut rng)?;
            println!(
                "corollary-sub: n={} tau={} N={} trials={} seed={} checked={} nonzero={} {}",
                n,
                tau,
                members,
                trials,
                seed,
                checked,
                nonzero,
                verdict(nonzero)
            );
            Ok(exit_for(nonzero))
        }
        VerifyTarget::CorollarySymm => {
            let n = args.n.unwrap_or(3);
            let tau = args.tau.unwrap_or(2.min(n));
            let members = args.members.unwrap_or(tau + 1);
            let mut rng = trial_rng(seed, STREAM_SYMM);
            let (checked, nonzero) = run_symm(n, tau, members, trials, cap, &mut rng)?;
            println!(
                "corollary-symm: n={} tau={} N={} trials={} seed={} checked={} nonzero={} {}",
                n,
                tau,
                members,
                trials,
                seed,
                checked,
                nonzero,
                verdict(nonzero)
            );
            Ok(exit_for(nonzero))
        }
        VerifyTarget::Aux19 => {
            let n = args.n.unwrap_or(4);
            let tau = args.tau.unwrap_or(2.min(n));
            let members = args.members.unwrap_or(tau + 1);
            if tau > n {
                return Err(format!("tau={} exceeds dimension n={}", tau, n));
            }
            let mut rng = trial_rng(seed, STREAM_AUX19);
            let (checked, mismatches) = run_aux19(n, tau, members, trials, cap, &mut rng)?;
            println!(
                "aux19: n={} tau={} N={} trials={} seed={} checked={} mismatches={} {}",
                n,
                tau,
                members,
                trials,
                seed,
                checked,
                mismatches,
                verdict(mismatches)
            );
            Ok(exit_for(mismatches))
        }
        VerifyTarget::S2 | VerifyTarget::S3 | VerifyTarget::S4 => {
            let (k, stream) = match args.target {
                VerifyTarget::S2 => (2, STREAM_S2),
                VerifyTarget::S3 => (3, STREAM_S3),
                _ => (4, STREAM_S4),
            };
            let n = args.n.unwrap_or(k);
            let mut rng = trial_rng(seed, stream);
            let (checked, mismatches) = run_closed_form(k, n, trials, &mut rng)?;
            println!(
                "s{}: n={} trials={} seed={} checked={} mismatches={} {}",
                k,
                n,
                trials,
                seed,
                checked,
                mismatches,
                verdict(mismatches)
            );
            Ok(exit_for(mismatches))
        }
        VerifyTarget::S3x3 => {
            let n = args.n.unwrap_or(3);
            let mut rng = trial_rng(seed, STREAM_S3X3);
            let (checked, mismatches) = run_triple_closed_form(n, trials, &mut rng)?;
            println!(
                "s3x3: n={} trials={} seed={} checked={} mismatches={} {}",
                n,
                trials,
                seed,
                checked,
                mismatches,
                verdict(mismatches)
            );
            Ok(exit_for(mismatches))
        }
        VerifyTarget::Optimality => {
            let n = args.n.unwrap_or(3);
            if n == 0 {
                return Err("dimension n must be at least 1".to_string());
            }
            let x = parse_rational(args.x.as_deref().unwrap_or("1")).map_err(estr)?;
            let (_, _, r) = optimality_witness(n, &x);
            println!("{}", r.value);
            Ok(if r.value == expected_sign(n) { 0 } else { 1 })
        }
        VerifyTarget::All => cmd_verify_all(trials, seed, cap, args.quick),
    }
}

fn cmd_verify_all(trials: usize, seed: u64, cap: usize, quick: bool) -> CliResult<u8> {
    let mut failures = 0;

    let mut rng = trial_rng(seed, STREAM_THEOREM1);
    let mut checked = 0;
    let mut nonzero = 0;
    for n in 1..=4 {
        for members in [n + 1, n + 2] {
            let (c, z) = run_theorem1(n, members, trials, cap, &mut rng)?;
            checked += c;
            nonzero += z;
        }
    }
    println!(
        "theorem1: n=1..4 N=n+1,n+2 trials={} seed={} checked={} nonzero={} {}",
        trials,
        seed,
        checked,
        nonzero,
        verdict(nonzero)
    );
    failures += nonzero;

    let mut rng = trial_rng(seed, STREAM_SUB);
    let mut checked = 0;
    let mut nonzero = 0;
    for n in 1..=4 {
        for tau in 0..=n {
            let (c, z) = run_sub(n, tau, tau + 1, trials, cap, &mut rng)?;
            checked += c;
            nonzero += z;
        }
    }
    println!(
        "corollary-sub: n=1..4 tau=0..n N=tau+1 trials={} seed={} checked={} nonzero={} {}",
        trials,
        seed,
        checked,
        nonzero,
        verdict(nonzero)
    );
    failures += nonzero;

    let mut rng = trial_rng(seed, STREAM_SYMM);
    let mut checked = 0;
    let mut nonzero = 0;
    for n in 1..=4 {
        for tau in 0..=n {
            let (c, z) = run_symm(n, tau, tau + 1, trials, cap, &mut rng)?;
            checked += c;
            nonzero += z;
        }
    }
    println!(
        "corollary-symm: n=1..4 tau=0..n N=tau+1 trials={} seed={} checked={} nonzero={} {}",
        trials,
        seed,
        checked,
        nonzero,
        verdict(nonzero)
    );
    failures += nonzero;

    let mut rng = trial_rng(seed, STREAM_AUX19);
    let mut checked = 0;
    let mut mismatches = 0;
    for (tau, members) in [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5)] {
        let (c, z) = run_aux19(4, tau, members, trials, cap, &mut rng)?;
        checked += c;
        mismatches += z;
    }
    println!(
        "aux19: n=4 (tau,N) in {{(1,2),(2,3),(2,4),(3,4),(3,5)}} trials={} seed={} checked={} mismatches={} {}",
        trials,
        seed,
        checked,
        mismatches,
        verdict(mismatches)
    );
    failures += mismatches;

    for (k, stream) in [(2, STREAM_S2), (3, STREAM_S3), (4, STREAM_S4)] {
        let mut rng = trial_rng(seed, stream);
        let dims: Vec<usize> = if quick { vec![k] } else { (k..=k + 2).collect() };
        let mut checked = 0;
        let mut mismatches = 0;
        for &n in &dims {
            let (c, z) = run_closed_form(k, n, trials, &mut rng)?;
            checked += c;
            mismatches += z;
        }
        println!(
            "s{}: n={}..{} trials={} seed={} checked={} mismatches={} {}",
            k,
            dims[0],
            dims[dims.len() - 1],
            trials,
            seed,
            checked,
            mismatches,
            verdict(mismatches)
        );
        failures += mismatches;
    }

    let mut rng = trial_rng(seed, STREAM_S3X3);
    let dims: Vec<usize> = if quick { vec![3] } else { vec![3, 4, 5] };
    let mut checked = 0;
    let mut mismatches = 0;
    for &n in &dims {
        let (c, z) = run_triple_closed_form(n, trials, &mut rng)?;
        checked += c;
        mismatches += z;
    }
    println!(
        "s3x3: n={}..{} trials={} seed={} checked={} mismatches={} {}",
        dims[0],
        dims[dims.len() - 1],
        trials,
        seed,
        checked,
        mismatches,
        verdict(mismatches)
    );
    failures += mismatches;

    let n_max = if quick { 4 } else { 6 };
    let (checked, mismatches) = run_optimality(n_max);
    println!(
        "optimality: n=1..{} x={{0,1,-5,7/3,1000000}} checked={} mismatches={} {}",
        n_max,
        checked,
        mismatches,
        verdict(mismatches)
    );
    failures += mismatches;

    println!("verify all: {}", verdict(failures));
    Ok(exit_for(failures))
}
