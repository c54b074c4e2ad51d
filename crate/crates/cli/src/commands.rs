use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use funident::exactalg::{is_prime, DivisionRing, MAX_EXTENSION_DEGREE};
use funident::identsolver::{
    dimension_sweep, example_regime, solve, Algebra, AlgebraSpec, Family, SolutionSpace, SolverError,
    SolverInstance, SweepConfig, DEFAULT_UNIT_CAP,
};
use funident::matring::{hua_check, HuaOutcome, SquareMatrix};
use funident::sample;
use funident::vbmap::{eval_f, run_suite, FaultyMap, SuiteConfig, VbParams};
use funident::Execution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::expr::{eval_str, render_expr};
use crate::report::{BasisPair, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Property(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Property(_) => 1,
            Self::Usage(_) => 2,
            Self::Resource(_) => 3,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::UnitCapExceeded { .. } | SolverError::TooLarge => Self::Resource(e.to_string()),
            SolverError::VerificationFailed { .. } => Self::Property(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "funident", version, about = "Exact checks of the identity x^-n f(x) + g(x^-1) = 0")]
pub struct Cli {
    /// Run on a single thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the explicit map f_{A,B} at x over GF(2)(t).
    Eval(EvalArgs),
    /// Run the property suite for f_{A,B} on random inputs.
    Verify(VerifyArgs),
    /// Compute every additive solution pair over a finite algebra.
    Solve(SolveArgs),
    /// Tabulate solution-space dimensions over GF(p^k).
    Sweep(SweepArgs),
    /// Sample Hua's identity over Q or the rational quaternions.
    Hua(HuaArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 8)]
    pub max_deg: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Replace A by A+1 in one branch of the closed form.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pair,
    Single,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Pair => Family::Pair,
            FamilyArg::Single => Family::Single,
        }
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("algebra").required(true).args(["field", "matrix"])))]
pub struct SolveArgs {
    /// GF(p) or GF(p^k), written `p` or `p^k`.
    #[arg(long, value_parser = parse_field)]
    pub field: Option<(u64, usize)>,
    /// M_m(GF(p^k)), written `m,p` or `m,p^k`.
    #[arg(long, value_parser = parse_matrix)]
    pub matrix: Option<(usize, u64, usize)>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = FamilyArg::Pair)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = DEFAULT_UNIT_CAP)]
    pub unit_cap: u128,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub p_max: u64,
    #[arg(long, default_value_t = 1, value_parser = parse_degree)]
    pub k_max: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    #[arg(long, value_enum, default_value_t = FamilyArg::Pair)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = DEFAULT_UNIT_CAP)]
    pub unit_cap: u128,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Rational,
    Quaternion,
}

#[derive(Debug, Args)]
pub struct HuaArgs {
    #[arg(long, value_enum)]
    pub ring: RingArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=8))]
    pub dim: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_degree(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_EXTENSION_DEGREE).contains(&k) {
        Ok(k)
    } else {
        Err(format!("extension degree must be in 1..={MAX_EXTENSION_DEGREE}"))
    }
}

fn parse_field(s: &str) -> Result<(u64, usize), String> {
    let (p, k) = match s.split_once('^') {
        Some((p, k)) => (p, parse_degree(k.trim())?),
        None => (s, 1),
    };
    let p: u64 = p.trim().parse().map_err(|e| format!("{e}"))?;
    if !is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    Ok((p, k))
}

fn parse_matrix(s: &str) -> Result<(usize, u64, usize), String> {
    let (m, field) = s.split_once(',').ok_or("expected `m,p` or `m,p^k`")?;
    let m: usize = m.trim().parse().map_err(|e| format!("{e}"))?;
    if m == 0 {
        return Err("matrix size must be positive".into());
    }
    let (p, k) = parse_field(field)?;
    Ok((m, p, k))
}

fn expr(flag: &str, text: &str) -> Result<funident::gf2fun::Gf2Rat, CliError> {
    eval_str(text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn finish(mut report: Report, start: Instant, out: Option<&Path>) -> Result<(), CliError> {
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    if let Some(path) = out {
        fs::write(path, report.to_json() + "\n")
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn execution(cli: &Cli) -> Execution {
    if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

pub fn dispatch(cli: &Cli) -> Result<(), CliError> {
    let exec = execution(cli);
    match &cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args, exec),
        Command::Solve(args) => cmd_solve(args, exec),
        Command::Sweep(args) => cmd_sweep(args, exec),
        Command::Hua(args) => cmd_hua(args),
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<(), CliError> {
    let params = VbParams::new(expr("A", &args.a)?, expr("B", &args.b)?);
    println!("{}", render_expr(&eval_f(&params, &expr("x", &args.x)?)));
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, execution: Execution) -> Result<(), CliError> {
    let start = Instant::now();
    let params = VbParams::new(expr("A", &args.a)?, expr("B", &args.b)?);
    let config = SuiteConfig { samples: args.samples, max_deg: args.max_deg, execution, ..SuiteConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let suite = if args.inject_fault {
        run_suite(&FaultyMap(params.clone()), &params, &config, &mut rng)
    } else {
        run_suite(&params, &params, &config, &mut rng)
    };
    for t in &suite.tallies {
        let status = if t.failed == 0 { "ok" } else { "FAILED" };
        let name = serde_json::to_value(t.property).expect("serializes");
        println!("{:<22} {:>6} checked {:>6} failed  {status}", name.as_str().unwrap_or_default(), t.checked, t.failed);
    }
    let mut report = Report::new(
        "verify",
        json!({
            "A": render_expr(&params.a),
            "B": render_expr(&params.b),
            "samples": args.samples,
            "max_deg": args.max_deg,
            "factor_deg": config.factor_deg,
            "anchor_range": config.anchor_range,
            "inject_fault": args.inject_fault,
        }),
        args.seed,
    );
    report.residuals_checked = Some(suite.total_checked());
    report.details = Some(json!({ "tallies": suite.tallies }));
    report.failures = suite.counterexamples.iter().map(|c| serde_json::to_value(c).expect("serializes")).collect();
    finish(report, start, args.out.as_deref())?;
    match suite.counterexamples.first() {
        None => Ok(()),
        Some(c) => {
            let name = serde_json::to_value(c.property).expect("serializes");
            Err(CliError::Property(format!(
                "counterexample for {}: inputs [{}], expected {}, got {}",
                name.as_str().unwrap_or_default(),
                c.inputs.join(", "),
                c.expected,
                c.got
            )))
        }
    }
}

fn basis_rows(space: &SolutionSpace) -> Vec<BasisPair> {
    let rows = |m: &funident::identsolver::AdditiveMapRep| m.entries.chunks(m.dim.max(1)).map(<[u64]>::to_vec).collect();
    space.basis.iter().map(|pair| BasisPair { f: rows(&pair.f), g: rows(&pair.g) }).collect()
}

fn cmd_solve(args: &SolveArgs, exec: Execution) -> Result<(), CliError> {
    let start = Instant::now();
    let algebra = match (args.field, args.matrix) {
        (Some((p, k)), _) => Algebra::field(p, k)?,
        (None, Some((m, p, k))) => Algebra::matrix(m, p, k)?,
        (None, None) => unreachable!("clap requires one of --field and --matrix"),
    };
    let spec = algebra.spec();
    let family: Family = args.family.into();
    let instance = SolverInstance::new(algebra, args.n, family)?.with_unit_cap(args.unit_cap);
    let space = solve(&instance, exec)?;
    let flagged = match spec {
        AlgebraSpec::Field { p, k: 1 } => Some(example_regime(p, args.n)),
        _ => None,
    };
    println!(
        "{spec}, n={}, {}: dimension {} ({} units checked){}",
        args.n,
        family_name(family),
        space.dimension,
        space.units_checked,
        if flagged == Some(true) { ", example regime" } else { "" }
    );
    let mut report = Report::new(
        "solve",
        json!({ "algebra": spec, "n": args.n, "family": family, "unit_cap": args.unit_cap.to_string() }),
        0,
    );
    report.dimension = Some(space.dimension);
    report.basis = Some(basis_rows(&space));
    report.flagged_example_regime = flagged;
    report.residuals_checked = Some(space.dimension * space.units_checked);
    finish(report, start, args.out.as_deref())
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Pair => "pair",
        Family::Single => "single",
    }
}

fn cmd_sweep(args: &SweepArgs, execution: Execution) -> Result<(), CliError> {
    let start = Instant::now();
    let family: Family = args.family.into();
    let config = SweepConfig {
        primes: 2..=args.p_max,
        degrees: 1..=args.k_max,
        exponents: 1..=args.n_max,
        family,
        unit_cap: args.unit_cap,
        execution,
    };
    let rows = dimension_sweep(&config);
    println!("{:>6} {:>3} {:>4} {:>9} {:>8} {:>8}", "p", "k", "n", "dimension", "flagged", "(x,-x)");
    let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
    for r in &rows {
        let dim = match (&r.dimension, &r.error) {
            (Some(d), _) => d.to_string(),
            (None, _) => "error".into(),
        };
        println!(
            "{:>6} {:>3} {:>4} {:>9} {:>8} {:>8}",
            r.p,
            r.k,
            r.n,
            dim,
            r.flagged_example_regime,
            opt(r.contains_example_pair.map(|b| b.to_string()))
        );
    }
    let mut report = Report::new(
        "sweep",
        json!({
            "p_max": args.p_max,
            "k_max": args.k_max,
            "n_max": args.n_max,
            "family": family,
            "unit_cap": args.unit_cap.to_string(),
        }),
        0,
    );
    report.failures = rows
        .iter()
        .filter(|r| r.error.is_some())
        .map(|r| json!({ "p": r.p, "k": r.k, "n": r.n, "error": r.error }))
        .collect();
    report.details = Some(json!({ "rows": rows }));
    finish(report, start, args.out.as_deref())
}

fn cmd_hua(args: &HuaArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let (ring, name) = match args.ring {
        RingArg::Rational => (DivisionRing::Rational, "rational"),
        RingArg::Quaternion => (DivisionRing::Quaternion, "quaternion"),
    };
    let m = args.dim as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let entries = (0..m * m).map(|_| sample::ring_elem(rng, &ring)).collect();
        SquareMatrix::new(m, ring.clone(), entries).expect("well-formed")
    };
    let (mut checked, mut skipped) = (0usize, 0usize);
    let mut failures = Vec::new();
    for i in 0..args.samples {
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        match hua_check(&a, &b).map_err(|e| CliError::Usage(e.to_string()))? {
            HuaOutcome::Residual(r) => {
                checked += 1;
                if !r.is_zero() {
                    failures.push(json!({ "sample": i, "a": format!("{a:?}"), "b": format!("{b:?}") }));
                }
            }
            HuaOutcome::PreconditionFailed(_) => skipped += 1,
        }
    }
    println!("{name} M{m}: {checked} residuals checked, {} nonzero, {skipped} skipped (singular)", failures.len());
    let mut report = Report::new("hua", json!({ "ring": name, "dim": m, "samples": args.samples }), args.seed);
    report.residuals_checked = Some(checked);
    report.details = Some(json!({ "skipped": skipped }));
    report.failures = failures;
    let failed = report.failures.len();
    finish(report, start, args.out.as_deref())?;
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Property(format!("{failed} nonzero Hua residuals")))
    }
}
