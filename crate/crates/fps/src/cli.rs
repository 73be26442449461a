//! Command-line front end.
//!
//! Verbs: eval, compose, revert, leftinv, bracket, conjugate, matrix,
//! probe-derivative, metric, gct. Series travel as JSON files in the shared
//! schema; results go to stdout or `--out`. Exit codes: 0 success, 1 I/O or
//! malformed JSON, 2 precondition or domain error, 3 existence-check
//! failure. `FPS_DEFAULT_ORDER` supplies the truncation order when `--order`
//! is omitted.

use crate::analytic::AnalyticSeries;
use crate::calculus;
use crate::coeff::{Complex64, GaussRational, DEFAULT_TOLERANCE};
use crate::compose::{self, GctOutcome, ProbeSettings, TailSumOptions};
use crate::error::{Error, Result};
use crate::invert;
use crate::json::{
    comp_matrix_to_json, comp_matrix_to_json_float, left_inverse_report_to_json,
    left_inverse_report_to_json_float, DynSeries, Mode,
};
use crate::lie::{self, AlgebraElement, GroupElement};
use crate::matrix::comp_matrix;
use crate::parse::parse_series_expr;
use crate::registry;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use num::Complex;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::str::FromStr;

const FALLBACK_ORDER: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "fps", version, about = "Truncated formal power series toolkit")]
pub struct Cli {
    /// Seed for any randomized subroutine; the built-in verbs are
    /// deterministic and accept it for interface stability.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Float-mode zero-test tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse an exact series expression and emit it.
    Eval(EvalArgs),
    /// Compose an outer series with an inner series file.
    Compose(ComposeArgs),
    /// Compositional inverse of a nonunit series.
    Revert(RevertArgs),
    /// Left composition inverse of a (possibly unit) series, with report.
    Leftinv(LeftinvArgs),
    /// Lie bracket [f, g] = f g' - f' g of two nonunit series.
    Bracket(BracketArgs),
    /// Similarity transformation g o f o g^[-1].
    Conjugate(ConjugateArgs),
    /// Truncated composition matrix of a series.
    Matrix(MatrixArgs),
    /// Finite-difference check of the superposition derivative.
    ProbeDerivative(ProbeDerivativeArgs),
    /// Metric of pointwise convergence between two series files.
    Metric(MetricArgs),
    /// Existence check for composition with a given inner constant term.
    Gct(GctArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Yes,
    No,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Expression, e.g. "z + z^2 @4" or "(1-z)^2".
    #[arg(long)]
    pub expr: String,
    /// Resize the result to this order (overrides any @N directive).
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct ComposeArgs {
    /// Registry outer series: geometric, exp, invpow:p, factorial.
    #[arg(long, conflicts_with = "outer_file")]
    pub outer: Option<String>,
    /// Outer series from a JSON file (treated as polynomial data).
    #[arg(long)]
    pub outer_file: Option<PathBuf>,
    /// Inner series file.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub order: Option<usize>,
    /// Coefficient mode for a registry outer series; defaults to the inner
    /// series' mode.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Boundary summability override for the registry outer series.
    #[arg(long, value_enum)]
    pub boundary_summable: Option<BoundaryArg>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct RevertArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct LeftinvArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub order: Option<usize>,
    /// Where to write the JSON report (candidate, existence flag, radius
    /// estimate, detail).
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BracketArgs {
    #[arg(long)]
    pub f: PathBuf,
    #[arg(long)]
    pub g: PathBuf,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct ConjugateArgs {
    /// The conjugating element g.
    #[arg(long)]
    pub g: PathBuf,
    /// The element f to conjugate.
    #[arg(long)]
    pub f: PathBuf,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Number of power rows (rows 0..=K).
    #[arg(long)]
    pub rows: usize,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ProbeDerivativeArgs {
    /// Registry outer series name.
    #[arg(long)]
    pub outer: String,
    /// Base point series file.
    #[arg(long)]
    pub base: PathBuf,
    /// Direction series file.
    #[arg(long)]
    pub dir: PathBuf,
    /// Comma-separated decreasing step sizes, e.g. 1e-2,1e-3,1e-4.
    #[arg(long)]
    pub t: String,
    #[arg(long)]
    pub order: Option<usize>,
    /// Coefficient window for the sup-norm and slope fit.
    #[arg(long, default_value_t = 8)]
    pub window: usize,
    /// Boundary summability override for the outer series.
    #[arg(long, value_enum)]
    pub boundary_summable: Option<BoundaryArg>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MetricArgs {
    #[arg(long)]
    pub f: PathBuf,
    #[arg(long)]
    pub g: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GctArgs {
    /// Registry outer series name.
    #[arg(long)]
    pub outer: String,
    /// Inner constant term: decimal "re" or "re,im" in float mode,
    /// rational "p/q" or "p/q,p/q" in exact mode.
    #[arg(long)]
    pub a0: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Float)]
    pub mode: ModeArg,
    /// Boundary summability override.
    #[arg(long, value_enum)]
    pub boundary_summable: Option<BoundaryArg>,
}

/// Parses arguments and runs; returns the process exit code.
pub fn run_from_args() -> i32 {
    let cli = Cli::parse();
    run(cli)
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fps: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Json(_) => 1,
        Error::CompositionDoesNotExist { .. } | Error::GctInconclusive => 3,
        _ => 2,
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Compose(args) => cmd_compose(args, cli.tol),
        Command::Revert(args) => cmd_revert(args, cli.tol),
        Command::Leftinv(args) => cmd_leftinv(args, cli.tol),
        Command::Bracket(args) => cmd_bracket(args),
        Command::Conjugate(args) => cmd_conjugate(args, cli.tol),
        Command::Matrix(args) => cmd_matrix(args),
        Command::ProbeDerivative(args) => cmd_probe(args, cli.tol),
        Command::Metric(args) => cmd_metric(args),
        Command::Gct(args) => cmd_gct(args, cli.tol),
    }
}

fn requested_order(explicit: Option<usize>) -> Result<usize> {
    let order = match explicit {
        Some(n) => n,
        None => match std::env::var("FPS_DEFAULT_ORDER") {
            Ok(text) => text.parse().map_err(|_| {
                Error::PreconditionFailed(format!(
                    "FPS_DEFAULT_ORDER must be a positive integer, found {text:?}"
                ))
            })?,
            Err(_) => FALLBACK_ORDER,
        },
    };
    if order < 1 {
        return Err(Error::PreconditionFailed("order must be at least 1".into()));
    }
    Ok(order)
}

fn read_series(path: &Path) -> Result<DynSeries> {
    let text = std::fs::read_to_string(path)?;
    DynSeries::from_json_str(&text)
}

fn write_text(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_series(series: &DynSeries, out: Option<&PathBuf>, format: FormatArg) -> Result<()> {
    let text = match format {
        FormatArg::Json => format!("{}\n", series.to_json()),
        FormatArg::Csv => series.to_csv(),
    };
    write_text(out, &text)
}

fn emit_value(value: &Value, out: Option<&PathBuf>) -> Result<()> {
    write_text(out, &format!("{value}\n"))
}

fn cmd_eval(args: &EvalArgs) -> Result<i32> {
    let mut series = parse_series_expr(&args.expr)?;
    if let Some(order) = args.order {
        series = series.resized(order);
    }
    emit_series(&DynSeries::Exact(series), args.out.as_ref(), args.format)?;
    Ok(0)
}

fn boundary_flag(arg: Option<BoundaryArg>) -> Option<bool> {
    arg.map(|b| matches!(b, BoundaryArg::Yes))
}

fn probe_settings(tol: f64) -> ProbeSettings {
    ProbeSettings { tol, ..ProbeSettings::default() }
}

fn tail_options(tol: f64) -> TailSumOptions {
    TailSumOptions { tolerance: tol, ..TailSumOptions::default() }
}

fn cmd_compose(args: &ComposeArgs, tol: f64) -> Result<i32> {
    let order = requested_order(args.order)?;
    let inner = read_series(&args.input)?.resized(order);

    let result = if let Some(path) = &args.outer_file {
        let outer = read_series(path)?.resized(order);
        match (&outer, &inner) {
            (DynSeries::Exact(g), DynSeries::Exact(f)) => {
                DynSeries::Exact(compose::compose_general_series_with_tol(g, f, tol)?)
            }
            (DynSeries::Float(g), DynSeries::Float(f)) => {
                DynSeries::Float(compose::compose_general_series_with_tol(g, f, tol)?)
            }
            _ => return Err(Error::ModeMismatch),
        }
    } else if let Some(name) = &args.outer {
        let mode = match args.mode {
            Some(ModeArg::Exact) => Mode::Exact,
            Some(ModeArg::Float) => Mode::Float,
            None => inner.mode(),
        };
        let probe = probe_settings(tol);
        let sum = tail_options(tol);
        match mode {
            Mode::Exact => {
                let g: AnalyticSeries<GaussRational> = registry::lookup(name)?
                    .with_boundary_summable(boundary_flag(args.boundary_summable));
                let f = inner.as_exact()?;
                DynSeries::Exact(compose::compose_general_with(&g, f, order, &probe, &sum)?)
            }
            Mode::Float => {
                let g: AnalyticSeries<Complex64> = registry::lookup(name)?
                    .with_boundary_summable(boundary_flag(args.boundary_summable));
                let f = inner.to_float();
                DynSeries::Float(compose::compose_general_with(&g, &f, order, &probe, &sum)?)
            }
        }
    } else {
        return Err(Error::PreconditionFailed(
            "compose needs --outer NAME or --outer-file PATH".into(),
        ));
    };
    emit_series(&result, args.out.as_ref(), args.format)?;
    Ok(0)
}

fn cmd_revert(args: &RevertArgs, tol: f64) -> Result<i32> {
    let order = requested_order(args.order)?;
    let series = read_series(&args.input)?.resized(order);
    let result = match &series {
        DynSeries::Exact(f) => DynSeries::Exact(invert::reversion_with_tol(f, tol)?),
        DynSeries::Float(f) => DynSeries::Float(invert::reversion_with_tol(f, tol)?),
    };
    emit_series(&result, args.out.as_ref(), args.format)?;
    Ok(0)
}

fn cmd_leftinv(args: &LeftinvArgs, tol: f64) -> Result<i32> {
    let order = requested_order(args.order)?;
    let series = read_series(&args.input)?.resized(order);
    let (candidate, report_json) = match &series {
        DynSeries::Exact(f) => {
            let report = invert::left_inverse_with_tol(f, tol)?;
            (
                DynSeries::Exact(report.candidate.clone()),
                left_inverse_report_to_json(&report),
            )
        }
        DynSeries::Float(f) => {
            let report = invert::left_inverse_with_tol(f, tol)?;
            (
                DynSeries::Float(report.candidate.clone()),
                left_inverse_report_to_json_float(&report),
            )
        }
    };
    if let Some(path) = &args.report {
        std::fs::write(path, format!("{report_json}\n"))?;
    }
    emit_series(&candidate, args.out.as_ref(), FormatArg::Json)?;
    Ok(0)
}

fn cmd_bracket(args: &BracketArgs) -> Result<i32> {
    let order = requested_order(args.order)?;
    let f = read_series(&args.f)?.resized(order);
    let g = read_series(&args.g)?.resized(order);
    let result = match (&f, &g) {
        (DynSeries::Exact(f), DynSeries::Exact(g)) => {
            let bracket = lie::lie_bracket(&AlgebraElement::new(f.clone())?, &AlgebraElement::new(g.clone())?);
            DynSeries::Exact(bracket.series().clone())
        }
        (DynSeries::Float(f), DynSeries::Float(g)) => {
            let bracket = lie::lie_bracket(&AlgebraElement::new(f.clone())?, &AlgebraElement::new(g.clone())?);
            DynSeries::Float(bracket.series().clone())
        }
        _ => return Err(Error::ModeMismatch),
    };
    emit_series(&result, args.out.as_ref(), args.format)?;
    Ok(0)
}

fn cmd_conjugate(args: &ConjugateArgs, tol: f64) -> Result<i32> {
    let order = requested_order(args.order)?;
    let g = read_series(&args.g)?.resized(order);
    let f = read_series(&args.f)?.resized(order);
    let result = match (&g, &f) {
        (DynSeries::Exact(g), DynSeries::Exact(f)) => {
            let conjugated = lie::similarity(
                &GroupElement::with_tol(g.clone(), tol)?,
                &GroupElement::with_tol(f.clone(), tol)?,
            );
            DynSeries::Exact(conjugated.into_series())
        }
        (DynSeries::Float(g), DynSeries::Float(f)) => {
            let conjugated = lie::similarity(
                &GroupElement::with_tol(g.clone(), tol)?,
                &GroupElement::with_tol(f.clone(), tol)?,
            );
            DynSeries::Float(conjugated.into_series())
        }
        _ => return Err(Error::ModeMismatch),
    };
    emit_series(&result, args.out.as_ref(), args.format)?;
    Ok(0)
}

fn cmd_matrix(args: &MatrixArgs) -> Result<i32> {
    let order = requested_order(args.order)?;
    let series = read_series(&args.input)?.resized(order);
    let value = match &series {
        DynSeries::Exact(f) => comp_matrix_to_json(&comp_matrix(f, args.rows)),
        DynSeries::Float(f) => comp_matrix_to_json_float(&comp_matrix(f, args.rows)),
    };
    emit_value(&value, args.out.as_ref())?;
    Ok(0)
}

fn cmd_probe(args: &ProbeDerivativeArgs, tol: f64) -> Result<i32> {
    let order = requested_order(args.order)?;
    let t_values: Vec<Complex64> = args
        .t
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map(|t| Complex64::new(t, 0.0))
                .map_err(|_| Error::PreconditionFailed(format!("bad step size {part:?}")))
        })
        .collect::<Result<_>>()?;
    let g: AnalyticSeries<Complex64> = registry::lookup(&args.outer)?
        .with_boundary_summable(boundary_flag(args.boundary_summable));
    let base = read_series(&args.base)?.resized(order).to_float();
    let dir = read_series(&args.dir)?.resized(order).to_float();
    let probe = calculus::finite_difference_probe_with(
        &g,
        &base,
        &dir,
        &t_values,
        order,
        &probe_settings(tol),
        &tail_options(tol),
    )?;
    let window = args.window.max(1);
    let sup_norms: Vec<f64> = (0..probe.t_values.len()).map(|i| probe.sup_norm(i, window)).collect();
    let report = json!({
        "outer": args.outer,
        "order": order,
        "coeff_window": window,
        "t_values": probe.t_values.iter().map(|t| t.re).collect::<Vec<_>>(),
        "remainder_sup_norms": sup_norms,
        "fitted_slope": probe.fitted_slope(window),
    });
    emit_value(&report, args.out.as_ref())?;
    Ok(0)
}

fn cmd_metric(args: &MetricArgs) -> Result<i32> {
    let f = read_series(&args.f)?;
    let g = read_series(&args.g)?;
    let value = match (&f, &g) {
        (DynSeries::Exact(f), DynSeries::Exact(g)) => calculus::metric(f, g),
        (DynSeries::Float(f), DynSeries::Float(g)) => calculus::metric(f, g),
        _ => return Err(Error::ModeMismatch),
    };
    let report = json!({ "value": value.value, "tail_bound": value.tail_bound });
    emit_value(&report, args.out.as_ref())?;
    Ok(0)
}

fn parse_exact_scalar(text: &str) -> Result<GaussRational> {
    let mut parts = text.split(',');
    let re = parts.next().unwrap_or("0").trim();
    let im = parts.next().unwrap_or("0").trim();
    if parts.next().is_some() {
        return Err(Error::PreconditionFailed(format!("bad scalar {text:?}")));
    }
    let re = BigRational::from_str(re)
        .map_err(|e| Error::PreconditionFailed(format!("bad rational {re:?}: {e}")))?;
    let im = BigRational::from_str(im)
        .map_err(|e| Error::PreconditionFailed(format!("bad rational {im:?}: {e}")))?;
    Ok(Complex::new(re, im))
}

fn parse_float_scalar(text: &str) -> Result<Complex64> {
    let mut parts = text.split(',');
    let re = parts.next().unwrap_or("0").trim();
    let im = parts.next().unwrap_or("0").trim();
    if parts.next().is_some() {
        return Err(Error::PreconditionFailed(format!("bad scalar {text:?}")));
    }
    let re: f64 = re
        .parse()
        .map_err(|_| Error::PreconditionFailed(format!("bad number {re:?}")))?;
    let im: f64 = im
        .parse()
        .map_err(|_| Error::PreconditionFailed(format!("bad number {im:?}")))?;
    Ok(Complex::new(re, im))
}

fn cmd_gct(args: &GctArgs, tol: f64) -> Result<i32> {
    let settings = probe_settings(tol);
    let outcome = match args.mode {
        ModeArg::Exact => {
            let g: AnalyticSeries<GaussRational> = registry::lookup(&args.outer)?
                .with_boundary_summable(boundary_flag(args.boundary_summable));
            compose::gct_check_with(&g, &parse_exact_scalar(&args.a0)?, &settings)
        }
        ModeArg::Float => {
            let g: AnalyticSeries<Complex64> = registry::lookup(&args.outer)?
                .with_boundary_summable(boundary_flag(args.boundary_summable));
            compose::gct_check_with(&g, &parse_float_scalar(&args.a0)?, &settings)
        }
    };
    match outcome {
        GctOutcome::Exists => {
            println!("exists");
            Ok(0)
        }
        GctOutcome::Fails { at_k: Some(k) } => {
            println!("fails_at_k={k}");
            Ok(3)
        }
        GctOutcome::Fails { at_k: None } => {
            println!("fails (divergence order not located within probe depth)");
            Ok(3)
        }
        GctOutcome::Inconclusive => {
            println!("inconclusive");
            Ok(3)
        }
    }
}
