//! `springer`: exact computations around the Springer morphism restricted
//! to the maximal torus of a simple, simply connected complex group.
//!
//! Every subcommand prints either a human-readable table (default) or a
//! schema-versioned JSON document (`--format json`). All library-level
//! arithmetic is exact; floating point enters only when evaluating at an
//! explicit torus point.

mod cache;
mod output;
mod parse;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use springer_core::{
    coefficients, evaluate, freudenthal, torus_from_symplectic_eigenvalues, x_long, Error,
    Family, RootSystemData, TorusPoint, Weight, WeightMultiset,
};

use output::{
    combo_value, complex_value, document, emit, format_complex, integer_matrix_value,
    matrix_value, rational_value, weight_value,
};
use verify::{grid_types, run_checks, CheckRow, WeightSelection};

#[derive(Parser)]
#[command(
    name = "springer",
    version,
    about = "Exact Springer morphism data on the maximal torus of a simple group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root-system data: Cartan matrix, D, S, the inverse of S, and more
    Info {
        #[command(flatten)]
        target: TypeArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Weight system of the irreducible representation with highest weight lambda
    Weights {
        #[command(flatten)]
        target: TypeArgs,
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Also list every weight of the full Weyl-orbit expansion
        #[arg(long)]
        expand: bool,
    },
    /// The matrix S(lambda): brute force, closed form, and the scalar x
    Smatrix {
        #[command(flatten)]
        target: TypeArgs,
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Symbolic coroot coefficients c_i as formal character sums
    Coeffs {
        #[command(flatten)]
        target: TypeArgs,
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Evaluate the coroot coefficients at a torus point
    Eval {
        #[command(flatten)]
        target: TypeArgs,
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Torus coordinates: comma-separated complex numbers (a, bi, a+bi, a-bi)
        #[arg(long, allow_hyphen_values = true)]
        torus: String,
        /// Interpret --torus as symplectic eigenvalues t_1,...,t_n (type C only)
        #[arg(long)]
        symplectic_eigenvalues: bool,
    },
    /// Run the identity suite and report every check
    Verify {
        /// Check every valid type up to --max-rank
        #[arg(long, conflicts_with_all = ["family", "rank"])]
        all: bool,
        /// Simple type family: A, B, C, D, E, F or G
        #[arg(long = "type", requires = "rank")]
        family: Option<String>,
        #[arg(long, requires = "family")]
        rank: Option<usize>,
        /// Largest rank per family with --all
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Highest-weight sets: comma-separated subset of {fundamental, rho}
        #[arg(long, default_value = "fundamental,rho")]
        weights: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct TypeArgs {
    /// Simple type family: A, B, C, D, E, F or G
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct RepArgs {
    /// Highest weight in fundamental-weight coordinates, comma separated
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Weight-system cache directory (SPRINGER_CACHE_DIR is the fallback)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::NotAlmostFaithful) => 3,
            CliError::Core(Error::Internal(_)) => 1,
            CliError::Core(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::Core(err) => err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

/// Die quietly on a closed pipe (`springer ... | head`) instead of
/// panicking mid-print; Rust ignores SIGPIPE by default.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Info { target, common } => cmd_info(&target, &common),
        Command::Weights {
            target,
            rep,
            common,
            expand,
        } => cmd_weights(&target, &rep, &common, expand),
        Command::Smatrix {
            target,
            rep,
            common,
        } => cmd_smatrix(&target, &rep, &common),
        Command::Coeffs {
            target,
            rep,
            common,
        } => cmd_coeffs(&target, &rep, &common),
        Command::Eval {
            target,
            rep,
            common,
            torus,
            symplectic_eigenvalues,
        } => cmd_eval(&target, &rep, &common, &torus, symplectic_eigenvalues),
        Command::Verify {
            all,
            family,
            rank,
            max_rank,
            weights,
            common,
        } => cmd_verify(all, family.as_deref(), rank, max_rank, &weights, &common),
    }
}

fn build_root_system(target: &TypeArgs) -> Result<RootSystemData, CliError> {
    let family: Family = target.family.parse()?;
    Ok(RootSystemData::new(family, target.rank)?)
}

fn parse_lambda(rep: &RepArgs) -> Result<Weight, CliError> {
    Ok(Weight::new(
        parse::weight_coords(&rep.weight).map_err(CliError::Usage)?,
    ))
}

fn cache_dir(common: &CommonArgs) -> Option<PathBuf> {
    common
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SPRINGER_CACHE_DIR").map(PathBuf::from))
}

/// Weight system with an optional cache in front of Freudenthal.
fn weight_system(
    rs: &RootSystemData,
    lambda: &Weight,
    common: &CommonArgs,
) -> Result<WeightMultiset, CliError> {
    let dir = cache_dir(common);
    if let Some(dir) = &dir {
        if let Some(wm) = cache::load(dir, rs, lambda) {
            return Ok(wm);
        }
    }
    let wm = freudenthal(rs, lambda)?;
    if let Some(dir) = &dir {
        cache::store(dir, rs, &wm);
    }
    Ok(wm)
}

fn require_almost_faithful(lambda: &Weight) -> Result<(), CliError> {
    if lambda.is_zero() {
        Err(CliError::Core(Error::NotAlmostFaithful))
    } else {
        Ok(())
    }
}

fn cmd_info(target: &TypeArgs, common: &CommonArgs) -> Result<ExitCode, CliError> {
    let rs = build_root_system(target)?;
    let long_roots: Vec<usize> = rs.long_indices.iter().map(|&i| i + 1).collect();
    match common.format {
        Format::Json => {
            let payload = json!({
                "cartan": integer_matrix_value(&rs.cartan),
                "d": rs.d_diag.iter().map(rational_value).collect::<Vec<_>>(),
                "s": matrix_value(&rs.s_matrix),
                "s_inverse": matrix_value(&rs.gram),
                "positive_root_count": rs.positive_roots.len(),
                "long_root_indices": long_roots,
            });
            emit(&document("info", Some(rs.lie_type), None, payload));
        }
        Format::Table => {
            println!("type: {}", rs.lie_type);
            println!("positive roots: {}", rs.positive_roots.len());
            println!(
                "long simple roots: {}",
                long_roots
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!(
                "d: ({})",
                rs.d_diag
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("Cartan matrix:\n{}", rs.cartan);
            println!("S:\n{}", rs.s_matrix);
            println!("inverse of S:\n{}", rs.gram);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_weights(
    target: &TypeArgs,
    rep: &RepArgs,
    common: &CommonArgs,
    expand: bool,
) -> Result<ExitCode, CliError> {
    let rs = build_root_system(target)?;
    let lambda = parse_lambda(rep)?;
    let wm = weight_system(&rs, &lambda, common)?;
    let expansion = expand.then(|| springer_core::expand(&rs, &wm));
    match common.format {
        Format::Json => {
            let dominant: Vec<Value> = wm
                .dominant_mults
                .iter()
                .map(|(w, m)| json!({ "weight": w.coords(), "multiplicity": m.to_string() }))
                .collect();
            let mut payload = json!({
                "dominant": dominant,
                "total_dimension": wm.total_dim.to_string(),
            });
            if let Some(expansion) = &expansion {
                payload["expansion"] = Value::Array(
                    expansion
                        .iter()
                        .map(|(w, m)| {
                            json!({ "weight": w.coords(), "multiplicity": m.to_string() })
                        })
                        .collect(),
                );
            }
            emit(&document("weights", Some(rs.lie_type), Some(&lambda), payload));
        }
        Format::Table => {
            println!("type: {}  highest weight: {}", rs.lie_type, lambda);
            println!("dimension: {}", wm.total_dim);
            println!("dominant weights:");
            for (w, m) in &wm.dominant_mults {
                println!("  {w}  x{m}");
            }
            if let Some(expansion) = &expansion {
                println!("all weights:");
                for (w, m) in expansion {
                    println!("  {w}  x{m}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_smatrix(
    target: &TypeArgs,
    rep: &RepArgs,
    common: &CommonArgs,
) -> Result<ExitCode, CliError> {
    let rs = build_root_system(target)?;
    let lambda = parse_lambda(rep)?;
    require_almost_faithful(&lambda)?;
    let wm = weight_system(&rs, &lambda, common)?;
    let brute = springer_core::s_matrix_bruteforce(&rs, &wm);
    let closed = springer_core::s_matrix_closed(&rs, &wm)?;
    let x = x_long(&rs, &wm)?;
    let agree = brute == closed;
    match common.format {
        Format::Json => {
            let payload = json!({
                "bruteforce": matrix_value(&brute),
                "closed_form": matrix_value(&closed),
                "x": rational_value(&x),
                "agree": agree,
            });
            emit(&document("smatrix", Some(rs.lie_type), Some(&lambda), payload));
        }
        Format::Table => {
            println!("type: {}  highest weight: {}", rs.lie_type, lambda);
            println!("x = {x}");
            println!("agree: {agree}");
            println!("S(lambda), brute force:\n{brute}");
            println!("S(lambda), closed form (x/2)S:\n{closed}");
        }
    }
    if agree {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_coeffs(
    target: &TypeArgs,
    rep: &RepArgs,
    common: &CommonArgs,
) -> Result<ExitCode, CliError> {
    let rs = build_root_system(target)?;
    let lambda = parse_lambda(rep)?;
    require_almost_faithful(&lambda)?;
    let wm = weight_system(&rs, &lambda, common)?;
    let combos = coefficients(&rs, &wm)?;
    match common.format {
        Format::Json => {
            let payload = json!({
                "coefficients": combos.iter().map(combo_value).collect::<Vec<_>>(),
            });
            emit(&document("coeffs", Some(rs.lie_type), Some(&lambda), payload));
        }
        Format::Table => {
            println!("type: {}  highest weight: {}", rs.lie_type, lambda);
            for (i, combo) in combos.iter().enumerate() {
                println!("c_{} = {}", i + 1, combo);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(
    target: &TypeArgs,
    rep: &RepArgs,
    common: &CommonArgs,
    torus: &str,
    symplectic: bool,
) -> Result<ExitCode, CliError> {
    let rs = build_root_system(target)?;
    let lambda = parse_lambda(rep)?;
    require_almost_faithful(&lambda)?;
    let values = parse::complex_list(torus).map_err(CliError::Usage)?;
    let point = if symplectic {
        if rs.lie_type.family() != Family::C {
            return Err(CliError::Usage(
                "--symplectic-eigenvalues requires type C".to_string(),
            ));
        }
        torus_from_symplectic_eigenvalues(&values)?
    } else {
        TorusPoint::new(values)?
    };
    if point.rank() != rs.rank() {
        return Err(CliError::Core(Error::RankMismatch {
            expected: rs.rank(),
            found: point.rank(),
        }));
    }
    let wm = weight_system(&rs, &lambda, common)?;
    let combos = coefficients(&rs, &wm)?;
    let mut coeffs = Vec::with_capacity(combos.len());
    for combo in &combos {
        coeffs.push(evaluate(combo, &point)?);
    }
    match common.format {
        Format::Json => {
            let payload = json!({
                "torus": point.values().iter().map(complex_value).collect::<Vec<_>>(),
                "coefficients": coeffs.iter().map(complex_value).collect::<Vec<_>>(),
            });
            emit(&document("eval", Some(rs.lie_type), Some(&lambda), payload));
        }
        Format::Table => {
            println!("type: {}  highest weight: {}", rs.lie_type, lambda);
            println!(
                "torus point: ({})",
                point
                    .values()
                    .iter()
                    .map(format_complex)
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            for (i, c) in coeffs.iter().enumerate() {
                println!("c_{} = {}", i + 1, format_complex(c));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    all: bool,
    family: Option<&str>,
    rank: Option<usize>,
    max_rank: usize,
    weights: &str,
    common: &CommonArgs,
) -> Result<ExitCode, CliError> {
    let selection = WeightSelection::parse(weights).map_err(CliError::Usage)?;
    let types = if all {
        grid_types(max_rank)
    } else {
        let family: Family = family
            .ok_or_else(|| CliError::Usage("pass --all or --type with --rank".to_string()))?
            .parse()?;
        let rank = rank.ok_or_else(|| CliError::Usage("--type requires --rank".to_string()))?;
        vec![springer_core::LieType::new(family, rank)?]
    };

    let rows = run_checks(&types, selection);
    let failed = rows.iter().filter(|r| !r.pass).count();
    match common.format {
        Format::Json => {
            let checks: Vec<Value> = rows.iter().map(check_value).collect();
            let payload = json!({
                "checks": checks,
                "total": rows.len(),
                "passed": rows.len() - failed,
                "failed": failed,
            });
            let lie_type = if types.len() == 1 { Some(types[0]) } else { None };
            emit(&document("verify", lie_type, None, payload));
        }
        Format::Table => {
            for r in &rows {
                let status = if r.pass { "pass" } else { "FAIL" };
                match &r.lambda {
                    Some(lambda) => {
                        println!("[{status}] {} lambda={}: {}", r.lie_type, lambda, r.identity)
                    }
                    None => println!("[{status}] {}: {}", r.lie_type, r.identity),
                }
            }
            println!(
                "checks: {} total, {} passed, {} failed",
                rows.len(),
                rows.len() - failed,
                failed
            );
        }
    }
    if failed == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn check_value(row: &CheckRow) -> Value {
    json!({
        "type": row.lie_type.to_string(),
        "lambda": row.lambda.as_ref().map_or(Value::Null, weight_value),
        "identity": row.identity,
        "status": if row.pass { "pass" } else { "fail" },
    })
}
