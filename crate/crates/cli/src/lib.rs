//! Command-line front end for `tripartite-discord`.
//!
//! ```text
//! tridiscord compute   -i state.json [--method auto|closed|numeric] [--case T2.1] [--grid N]
//! tridiscord verify    -i state.json [--grid N] [--oracle-grid N] [--conditional-b]
//! tridiscord werner    --c-min 0 --c-max 1 --steps 11 [-o curve.csv]
//! tridiscord landscape -i state.json --which G|F [--zA x,y,z] --samples N [-o sphere.csv]
//! ```
//!
//! Exit codes: 0 success, 1 usage or input error, 2 unphysical state,
//! 3 no closed form applies.

mod format;
pub mod params;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tripartite_discord::discord::{premises_hold, structure_matches};
use tripartite_discord::measure::branch_params;
use tripartite_discord::sphere::fibonacci_sphere;
use tripartite_discord::states::build_valid_state;
use tripartite_discord::{
    build_werner_ghz, classify_case, closed_form_for_case, discord_numeric, discord_werner_ghz, oracle_discord,
    BlochVector, CaseId, DiscordResult, Error, Method, OptimizerOptions, OracleOptions, ParamSet, Weighting,
};

use format::{fmt_sig, sig, sig3};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_STATE: i32 = 2;
pub const EXIT_NO_CASE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tridiscord", version, about = "Generalized quantum discord of three-qubit states")]
struct Cli {
    /// Significant digits in printed numbers.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Discord of the state in a parameter file.
    Compute(ComputeArgs),
    /// Closed form, optimizer and brute-force oracle side by side.
    Verify(VerifyArgs),
    /// Werner-GHZ discord curve as CSV.
    Werner(WernerArgs),
    /// G or F sampled over the unit sphere as CSV.
    Landscape(LandscapeArgs),
}

#[derive(Args, Debug)]
struct StateArgs {
    /// Parameter file (JSON object with optional keys a, b, c, r, s, v, T).
    #[arg(short = 'i', long = "input")]
    input: PathBuf,

    /// How the conditional entropy of C combines the outcomes of A.
    #[arg(long, default_value = "per-outcome", value_parser = parse_weighting)]
    weighting: Weighting,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    state: StateArgs,

    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,

    /// Use this closed-form case instead of classifying (its structure must still match).
    #[arg(long, value_parser = parse_case)]
    case: Option<CaseId>,

    /// Polar grid steps per hemisphere for the optimizer.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..=4096))]
    grid: u32,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    state: StateArgs,

    #[arg(long, value_parser = parse_case)]
    case: Option<CaseId>,

    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..=4096))]
    grid: u32,

    /// Polar grid steps for the oracle.
    #[arg(long, default_value_t = 48, value_parser = clap::value_parser!(u32).range(1..=1024))]
    oracle_grid: u32,

    /// Let the oracle choose the B axis separately for each outcome on A.
    #[arg(long)]
    conditional_b: bool,
}

#[derive(Args, Debug)]
struct WernerArgs {
    #[arg(long, default_value_t = 0.0)]
    c_min: f64,

    #[arg(long, default_value_t = 1.0)]
    c_max: f64,

    /// Number of points, endpoints included.
    #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u32).range(1..=100_000))]
    steps: u32,

    /// Polar grid steps for the oracle.
    #[arg(long, default_value_t = 48, value_parser = clap::value_parser!(u32).range(1..=1024))]
    grid: u32,

    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LandscapeArgs {
    #[command(flatten)]
    state: StateArgs,

    #[arg(long, value_enum)]
    which: Which,

    /// Axis on A at which F is sampled, as x,y,z (normalized).
    #[arg(long = "zA", value_delimiter = ',', allow_negative_numbers = true)]
    za: Option<Vec<f64>>,

    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..=10_000_000))]
    samples: u32,

    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "F", alias = "f")]
    F,
}

fn parse_weighting(s: &str) -> Result<Weighting, String> {
    Weighting::parse(s).ok_or_else(|| format!("unknown weighting `{s}` (expected joint or per-outcome)"))
}

fn parse_case(s: &str) -> Result<CaseId, String> {
    CaseId::parse(s).ok_or_else(|| {
        let names: Vec<&str> = CaseId::ALL.iter().map(|c| c.name()).collect();
        format!("unknown case `{s}` (expected one of {})", names.join(", "))
    })
}

/// `--method closed` found no applicable case.
#[derive(Debug)]
struct NoCase;

impl std::fmt::Display for NoCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("no closed-form case matches these parameters")
    }
}

impl std::error::Error for NoCase {}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> i32 {
    if e.chain().any(|c| c.is::<NoCase>()) {
        return EXIT_NO_CASE;
    }
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::InvalidState { .. } | Error::ParameterOutOfRange { .. }) => EXIT_INVALID_STATE,
        Some(Error::CaseNotApplicable(_)) => EXIT_NO_CASE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cli: &Cli) -> Result<()> {
    let digits = cli.precision as usize;
    match &cli.command {
        Command::Compute(args) => compute(args, digits),
        Command::Verify(args) => verify(args, digits),
        Command::Werner(args) => werner(args, digits),
        Command::Landscape(args) => landscape(args, digits),
    }
}

fn load_valid(args: &StateArgs) -> Result<ParamSet> {
    let p = params::load(&args.input)?;
    build_valid_state(&p).with_context(|| format!("state in {}", args.input.display()))?;
    Ok(p)
}

fn optimizer(grid: u32, weighting: Weighting) -> OptimizerOptions {
    OptimizerOptions::with_grid(grid as usize).weighting(weighting)
}

fn emit_json(value: &impl Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct ComputeReport {
    discord: f64,
    method: &'static str,
    case: Option<&'static str>,
    /// Whether the case's inequalities hold, not only its structure.
    premises_hold: Option<bool>,
    weighting: &'static str,
    #[serde(rename = "zA")]
    za: [f64; 3],
    #[serde(rename = "zB")]
    zb: [f64; 3],
    #[serde(rename = "G_max")]
    g_max: f64,
    #[serde(rename = "F_max")]
    f_max: f64,
    #[serde(rename = "S_ABC")]
    s_abc: f64,
    #[serde(rename = "S_A")]
    s_a: f64,
    verify_delta: Option<f64>,
    printed_formula: Option<f64>,
}

impl ComputeReport {
    fn new(p: &ParamSet, r: &DiscordResult, digits: usize) -> Self {
        let case = match r.method {
            Method::ClosedForm(case) => Some(case),
            _ => None,
        };
        Self {
            discord: sig(r.q, digits),
            method: match r.method {
                Method::ClosedForm(_) => "closed-form",
                Method::Numeric => "numeric",
                Method::WernerGhz => "werner-ghz",
                Method::Oracle => "oracle",
            },
            case: case.map(CaseId::name),
            premises_hold: case.map(|c| premises_hold(p, c)),
            weighting: r.weighting.name(),
            za: sig3(r.za.z, digits),
            zb: sig3(r.zb.z, digits),
            g_max: sig(r.g_max, digits),
            f_max: sig(r.f_max, digits),
            s_abc: sig(r.s_abc, digits),
            s_a: sig(r.s_a, digits),
            verify_delta: r.verify_delta.map(|d| sig(d, digits)),
            printed_formula: r.printed_q.map(|q| sig(q, digits)),
        }
    }
}

fn compute(args: &ComputeArgs, digits: usize) -> Result<()> {
    let p = load_valid(&args.state)?;
    let w = args.state.weighting;
    let opts = optimizer(args.grid, w);
    let case = args.case.or_else(|| classify_case(&p));
    let result = match args.method {
        MethodArg::Numeric => {
            if args.case.is_some() {
                bail!("--case cannot be combined with --method numeric");
            }
            discord_numeric(&p, &opts)?
        }
        MethodArg::Closed => closed_form_for_case(&p, case.ok_or(NoCase)?, w, None)?,
        MethodArg::Auto => match case {
            Some(case) => closed_form_for_case(&p, case, w, Some(&opts))?,
            None => discord_numeric(&p, &opts)?,
        },
    };
    emit_json(&ComputeReport::new(&p, &result, digits))
}

#[derive(Serialize)]
struct VerifyReport {
    case: Option<&'static str>,
    weighting: &'static str,
    conditional_b: bool,
    closed: Option<f64>,
    printed_formula: Option<f64>,
    numeric: f64,
    oracle: f64,
    delta_closed_numeric: Option<f64>,
    delta_closed_oracle: Option<f64>,
    delta_numeric_oracle: f64,
}

fn verify(args: &VerifyArgs, digits: usize) -> Result<()> {
    let p = load_valid(&args.state)?;
    let w = args.state.weighting;
    let case = match args.case {
        Some(case) if !structure_matches(&p, case) => return Err(Error::CaseNotApplicable(case.name()).into()),
        Some(case) => Some(case),
        None => classify_case(&p),
    };
    let closed = case.map(|c| closed_form_for_case(&p, c, w, None)).transpose()?;
    let numeric = discord_numeric(&p, &optimizer(args.grid, w))?.q;
    let oracle_opts = OracleOptions {
        grid_theta: args.oracle_grid as usize,
        grid_phi: (args.oracle_grid as usize / 2).max(1),
        conditional_b: args.conditional_b,
        weighting: w,
        ..OracleOptions::default()
    };
    let oracle = oracle_discord(&tripartite_discord::build_state(&p), &oracle_opts)?.q;
    let closed_q = closed.map(|r| r.q);
    let s = |x: f64| sig(x, digits);
    emit_json(&VerifyReport {
        case: case.map(CaseId::name),
        weighting: w.name(),
        conditional_b: args.conditional_b,
        closed: closed_q.map(s),
        printed_formula: closed.and_then(|r| r.printed_q).map(s),
        numeric: s(numeric),
        oracle: s(oracle),
        delta_closed_numeric: closed_q.map(|c| s((c - numeric).abs())),
        delta_closed_oracle: closed_q.map(|c| s((c - oracle).abs())),
        delta_numeric_oracle: s((numeric - oracle).abs()),
    })
}

fn csv_writer(output: Option<&Path>) -> Result<csv::Writer<Box<dyn Write>>> {
    let sink: Box<dyn Write> = match output {
        Some(path) => Box::new(File::create(path).with_context(|| format!("creating {}", path.display()))?),
        None => Box::new(io::stdout()),
    };
    Ok(csv::Writer::from_writer(sink))
}

/// `steps` evenly spaced points from `lo` to `hi`, endpoints exact.
fn linspace(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    (0..steps).map(
        move |i| {
            if i + 1 == steps && steps > 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (steps.max(2) - 1) as f64
            }
        },
    )
}

fn werner(args: &WernerArgs, digits: usize) -> Result<()> {
    let range = 0.0..=1.0;
    if !range.contains(&args.c_min) || !range.contains(&args.c_max) || args.c_min > args.c_max {
        bail!("need 0 <= c-min <= c-max <= 1, got {} and {}", args.c_min, args.c_max);
    }
    let opts = OracleOptions {
        grid_theta: args.grid as usize,
        grid_phi: (args.grid as usize / 2).max(1),
        ..OracleOptions::default()
    };
    let mut out = csv_writer(args.output.as_deref())?;
    out.write_record(["c", "discord_closed", "discord_numeric"])?;
    for c in linspace(args.c_min, args.c_max, args.steps as usize) {
        let closed = discord_werner_ghz(c)?;
        let numeric = oracle_discord(&build_werner_ghz(c)?, &opts)?.q;
        out.write_record([fmt_sig(c, digits), fmt_sig(closed, digits), fmt_sig(numeric, digits)])?;
    }
    out.flush()?;
    Ok(())
}

fn landscape(args: &LandscapeArgs, digits: usize) -> Result<()> {
    let p = load_valid(&args.state)?;
    let w = args.state.weighting;
    let za = match (&args.za, args.which) {
        (Some(z), _) => {
            let &[x, y, zz] = z.as_slice() else { bail!("--zA takes three comma-separated numbers") };
            Some(BlochVector::normalize([x, y, zz]).context("--zA must be a nonzero vector")?)
        }
        (None, Which::F) => bail!("--which F requires --zA"),
        (None, Which::G) => None,
    };
    let mut out = csv_writer(args.output.as_deref())?;
    out.write_record(["z1", "z2", "z3", "value"])?;
    for z in fibonacci_sphere(args.samples as usize) {
        let value = match za {
            Some(za) if args.which == Which::F => branch_params(&p, &za, &z).f(w)?,
            _ => branch_params(&p, &z, &BlochVector::Z).g()?,
        };
        let [x, y, zz] = z.z;
        out.write_record([x, y, zz, value].map(|v| fmt_sig(v, digits)))?;
    }
    out.flush()?;
    Ok(())
}
