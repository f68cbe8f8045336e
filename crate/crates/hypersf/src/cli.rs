//! The `hypersf` command line: area, volume, eval, classify and sweep
//! subcommands with machine-readable, byte-deterministic output.
//!
//! Exit codes: 0 success, 2 usage or validation, 3 domain/region error,
//! 4 numerical non-convergence. The env var `HYPERSF_TOL` overrides the
//! default tolerance 1e-10; an explicit `--tol` flag wins over both.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geometry::{self, volume_decomposition, GeometryParams};
use crate::hypergeometric::{pfq_series, PFQParams, SeriesValue, DEFAULT_MAX_TERMS};
use crate::meijer::{g_decompose_eval, GSpec};
use crate::mellin::{choose_contour, mb_meijer_g, mb_pfq, ContourSpec};
use crate::quadrature::{integrate_1d, surface_integral_oracle};
use crate::srivastava_daoust::{sd_classify, sd_eval, SDSpec};
use crate::theorems::{theorem1_closed, theorem2_closed, theorem3_closed};

/// One machine-readable invocation record. Identical inputs serialize to
/// byte-identical JSON: maps are ordered and numbers render through a fixed
/// 15-significant-digit formatter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<BTreeMap<String, String>>,
    /// Worst pairwise relative disagreement between the reported paths.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<String>,
}

/// Decimal text with 15 significant digits.
pub fn fmt_sig(x: f64) -> String {
    format!("{x:.14e}")
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

#[derive(Parser)]
#[command(
    name = "hypersf",
    version,
    about = "Hyperboloid-of-one-sheet cap: exact lateral surface area, volume, \
             and the special functions behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lateral surface area by closed form, triple sum and/or quadrature
    Area(AreaArgs),
    /// Volume with its cylinder-minus-shell decomposition
    Volume(VolumeArgs),
    /// Evaluate a special-function building block along one or all paths
    Eval(EvalArgs),
    /// Convergence classification of a Srivastava-Daoust tableau file
    Classify(ClassifyArgs),
    /// Sweep one geometry parameter; emits CSV or JSON rows
    Sweep(SweepArgs),
}

#[derive(Args)]
struct GeometryFlags {
    /// Semi-major axis of the waist ellipse
    #[arg(short = 'a', long)]
    a: f64,
    /// Semi-minor axis of the waist ellipse
    #[arg(short = 'b', long)]
    b: f64,
    /// Axial scale of the hyperboloid
    #[arg(short = 'c', long)]
    c: f64,
    /// Cap height
    #[arg(short = 'H', long = "height")]
    height: f64,
}

impl GeometryFlags {
    fn build(&self, allow_circular: bool) -> Result<GeometryParams, String> {
        let r = if allow_circular {
            GeometryParams::with_circular(self.a, self.b, self.c, self.height)
        } else {
            GeometryParams::new(self.a, self.b, self.c, self.height)
        };
        r.map_err(|e| e.to_string())
    }

    fn record_inputs(&self, inputs: &mut BTreeMap<String, String>) {
        inputs.insert("a".into(), fmt_sig(self.a));
        inputs.insert("b".into(), fmt_sig(self.b));
        inputs.insert("c".into(), fmt_sig(self.c));
        inputs.insert("H".into(), fmt_sig(self.height));
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodFlag {
    Closed,
    Triple,
    Oracle,
    All,
}

#[derive(Args)]
struct AreaArgs {
    #[command(flatten)]
    geometry: GeometryFlags,
    #[arg(long, value_enum, default_value = "all")]
    method: MethodFlag,
    /// Relative tolerance (default: HYPERSF_TOL or 1e-10)
    #[arg(long)]
    tol: Option<f64>,
    /// Emit the RunRecord as JSON instead of text
    #[arg(long)]
    json: bool,
    /// Fail (exit 3) instead of falling back to quadrature out of region
    #[arg(long)]
    strict: bool,
    /// Admit the circular cross-section a = b
    #[arg(long)]
    allow_circular: bool,
}

#[derive(Args)]
struct VolumeArgs {
    #[command(flatten)]
    geometry: GeometryFlags,
    #[arg(long)]
    json: bool,
    /// Admit the circular cross-section a = b
    #[arg(long)]
    allow_circular: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// 2f1 | pfq | meijer_g | sd | theorem1 | theorem2 | theorem3
    function: String,
    /// series | mb | closed | quad | decompose | all (default depends on
    /// the function)
    #[arg(long)]
    path: Option<String>,
    #[arg(short = 'a', long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(short = 'b', long, allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(short = 'c', long, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(short = 'z', long, allow_hyphen_values = true)]
    z: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<f64>,
    /// Comma-separated upper parameters (pfq, meijer_g)
    #[arg(long, allow_hyphen_values = true)]
    upper: Option<String>,
    /// Comma-separated lower parameters (pfq, meijer_g)
    #[arg(long, allow_hyphen_values = true)]
    lower: Option<String>,
    /// Meijer G index m
    #[arg(long)]
    gm: Option<usize>,
    /// Meijer G index n
    #[arg(long)]
    gn: Option<usize>,
    /// Srivastava-Daoust tableau JSON file
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Comma-separated argument vector for the tableau
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Srivastava-Daoust tableau JSON file
    #[arg(long)]
    spec: PathBuf,
    /// Comma-separated argument vector (defaults to the origin)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SweepArgs {
    /// Which parameter to sweep: a | b | c | H
    #[arg(long)]
    param: String,
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    #[arg(long)]
    steps: usize,
    #[command(flatten)]
    geometry: GeometryFlags,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    out: SweepFormat,
    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

fn default_tol(flag: Option<f64>) -> f64 {
    flag.or_else(|| {
        std::env::var("HYPERSF_TOL")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(1e-10)
}

fn parse_list(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Failure::usage(format!("cannot parse `{t}` as a number")))
        })
        .collect()
}

fn emit(record: &RunRecord, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(record).expect("record serializes")
        );
    } else {
        for (k, v) in &record.outputs {
            println!("{k} = {v}");
        }
        if let Some(oracle) = &record.oracle {
            for (k, v) in oracle {
                println!("oracle.{k} = {v}");
            }
        }
        if let Some(a) = &record.agreement {
            println!("agreement = {a}");
        }
    }
}

/// Entry point used by the `hypersf` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            // clap uses 2 for usage errors and 0 for --help/--version
            return if code == 0 { 0 } else { 2 };
        }
    };
    let result = match cli.command {
        Command::Area(args) => cmd_area(&args),
        Command::Volume(args) => cmd_volume(&args),
        Command::Eval(args) => cmd_eval(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Sweep(args) => cmd_sweep(&args),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("hypersf: {}", f.message);
            f.code
        }
    }
}

fn cmd_area(args: &AreaArgs) -> Result<(), Failure> {
    let params = args
        .geometry
        .build(args.allow_circular)
        .map_err(Failure::usage)?;
    let tol = default_tol(args.tol);

    let mut inputs = BTreeMap::new();
    args.geometry.record_inputs(&mut inputs);
    inputs.insert("tol".into(), fmt_sig(tol));
    inputs.insert(
        "method".into(),
        match args.method {
            MethodFlag::Closed => "closed",
            MethodFlag::Triple => "triple",
            MethodFlag::Oracle => "oracle",
            MethodFlag::All => "all",
        }
        .into(),
    );

    let region = geometry::area_region_check(&params);
    let mut outputs = BTreeMap::new();
    for (i, (x, ok)) in region.x.iter().zip(region.inside.iter()).enumerate() {
        outputs.insert(format!("x{}", i + 1), fmt_sig(*x));
        outputs.insert(format!("x{}_inside", i + 1), ok.to_string());
    }

    let closed = |outs: &mut BTreeMap<String, String>| -> Result<f64, Failure> {
        match geometry::surface_area_closed(&params, tol) {
            Ok(r) => {
                outs.insert("area_closed".into(), fmt_sig(r.area));
                outs.insert("region_ok".into(), "true".into());
                Ok(r.area)
            }
            // out of region, or a summation order that diverges inside it:
            // fall back to quadrature unless --strict
            Err(Error::OutOfRegion(msg)) | Err(Error::NoConvergence(msg)) if !args.strict => {
                let q = surface_integral_oracle(&params, tol)?;
                outs.insert("area_closed".into(), fmt_sig(q.value));
                outs.insert("region_ok".into(), region.all_inside().to_string());
                outs.insert("fallback".into(), format!("quadrature oracle ({msg})"));
                Ok(q.value)
            }
            Err(e) => Err(e.into()),
        }
    };

    let mut paths: Vec<(&str, f64)> = Vec::new();
    let mut oracle_map: Option<BTreeMap<String, String>> = None;
    match args.method {
        MethodFlag::Closed => {
            let v = closed(&mut outputs)?;
            paths.push(("closed", v));
        }
        MethodFlag::Triple => {
            let r = geometry::surface_area_triple_sum(&params, tol).map_err(Failure::from)?;
            outputs.insert("area_triple".into(), fmt_sig(r.area));
            paths.push(("triple", r.area));
        }
        MethodFlag::Oracle => {
            let q = surface_integral_oracle(&params, tol)?;
            outputs.insert("area_oracle".into(), fmt_sig(q.value));
            outputs.insert("oracle_est_error".into(), fmt_sig(q.est_error));
            paths.push(("oracle", q.value));
        }
        MethodFlag::All => {
            let v = closed(&mut outputs)?;
            paths.push(("closed", v));
            if region.all_inside() && !outputs.contains_key("fallback") {
                let r = geometry::surface_area_triple_sum(&params, tol).map_err(Failure::from)?;
                outputs.insert("area_triple".into(), fmt_sig(r.area));
                paths.push(("triple", r.area));
            }
            let q = surface_integral_oracle(&params, tol.max(1e-11))?;
            let mut om = BTreeMap::new();
            om.insert("area_oracle".into(), fmt_sig(q.value));
            om.insert("est_error".into(), fmt_sig(q.est_error));
            oracle_map = Some(om);
            paths.push(("oracle", q.value));
            for (i, &(n1, v1)) in paths.iter().enumerate() {
                for &(n2, v2) in paths.iter().skip(i + 1) {
                    outputs.insert(format!("rel_err_{n1}_{n2}"), fmt_sig(rel_err(v1, v2)));
                }
            }
        }
    }

    let agreement = if paths.len() > 1 {
        let worst = paths
            .iter()
            .enumerate()
            .flat_map(|(i, &(_, v1))| {
                paths
                    .iter()
                    .skip(i + 1)
                    .map(move |&(_, v2)| rel_err(v1, v2))
            })
            .fold(0.0f64, f64::max);
        Some(fmt_sig(worst))
    } else {
        None
    };

    let record = RunRecord {
        command: "area".into(),
        inputs,
        outputs,
        oracle: oracle_map,
        agreement,
    };
    emit(&record, args.json);
    Ok(())
}

fn cmd_volume(args: &VolumeArgs) -> Result<(), Failure> {
    let params = args
        .geometry
        .build(args.allow_circular)
        .map_err(Failure::usage)?;
    if params.h == 0.0 {
        eprintln!("hypersf: warning: degenerate cap (H = 0), all volumes are zero");
    }
    let d = volume_decomposition(&params);
    let v = geometry::volume(&params);

    let mut inputs = BTreeMap::new();
    args.geometry.record_inputs(&mut inputs);
    let mut outputs = BTreeMap::new();
    outputs.insert("volume".into(), fmt_sig(v));
    outputs.insert("v_cylinder".into(), fmt_sig(d.cylinder));
    outputs.insert("v_shell".into(), fmt_sig(d.shell));
    outputs.insert("lambda".into(), fmt_sig(params.lambda()));

    let record = RunRecord {
        command: "volume".into(),
        inputs,
        outputs,
        oracle: None,
        agreement: Some(fmt_sig(rel_err(d.total, v))),
    };
    emit(&record, args.json);
    Ok(())
}

fn series_outputs(prefix: &str, sv: &SeriesValue, outs: &mut BTreeMap<String, String>) {
    outs.insert(format!("{prefix}value"), fmt_sig(sv.value.re));
    if sv.value.im != 0.0 {
        outs.insert(format!("{prefix}value_im"), fmt_sig(sv.value.im));
    }
    outs.insert(format!("{prefix}terms"), sv.terms_used.to_string());
    outs.insert(format!("{prefix}est_error"), fmt_sig(sv.est_error));
    outs.insert(format!("{prefix}converged"), sv.converged.to_string());
}

fn require(flag: Option<f64>, name: &str) -> Result<f64, Failure> {
    flag.ok_or_else(|| Failure::usage(format!("missing required flag --{name}")))
}

fn cmd_eval(args: &EvalArgs) -> Result<(), Failure> {
    let tol = default_tol(args.tol);
    let mut inputs = BTreeMap::new();
    inputs.insert("function".into(), args.function.clone());
    inputs.insert("tol".into(), fmt_sig(tol));
    let mut outputs = BTreeMap::new();
    let mut values: Vec<(String, f64)> = Vec::new();

    let default_path = match args.function.as_str() {
        "2f1" | "pfq" | "sd" => "series",
        "meijer_g" => "mb",
        "theorem1" | "theorem2" | "theorem3" => "closed",
        other => {
            return Err(Failure::usage(format!(
            "unknown function `{other}` (expected 2f1|pfq|meijer_g|sd|theorem1|theorem2|theorem3)"
        )))
        }
    };
    let path = args.path.clone().unwrap_or_else(|| default_path.into());
    inputs.insert("path".into(), path.clone());
    let wants = |p: &str| path == p || path == "all";

    match args.function.as_str() {
        "2f1" | "pfq" => {
            let params = if args.function == "2f1" {
                let a = require(args.a, "a")?;
                let b = require(args.b, "b")?;
                let c = require(args.c, "c")?;
                let z = require(args.z, "z")?;
                inputs.insert("a".into(), fmt_sig(a));
                inputs.insert("b".into(), fmt_sig(b));
                inputs.insert("c".into(), fmt_sig(c));
                inputs.insert("z".into(), fmt_sig(z));
                PFQParams::real(&[a, b], &[c], z)
            } else {
                let upper = parse_list(
                    args.upper
                        .as_deref()
                        .ok_or_else(|| Failure::usage("missing --upper"))?,
                )?;
                let lower = parse_list(args.lower.as_deref().unwrap_or(""))?;
                let z = require(args.z, "z")?;
                inputs.insert("upper".into(), format!("{upper:?}"));
                inputs.insert("lower".into(), format!("{lower:?}"));
                inputs.insert("z".into(), fmt_sig(z));
                PFQParams::real(&upper, &lower, z)
            };
            if wants("series") {
                let sv = pfq_series(&params, tol, DEFAULT_MAX_TERMS).map_err(Failure::from)?;
                series_outputs("series_", &sv, &mut outputs);
                values.push(("series".into(), sv.value.re));
            }
            if wants("mb") {
                let left: Vec<Complex64> = params.upper.iter().map(|a| -a).collect();
                let ct =
                    choose_contour(&left, &[Complex64::new(0.0, 0.0)]).map_err(Failure::from)?;
                let sv = mb_pfq(&params, &ct, tol).map_err(Failure::from)?;
                series_outputs("mb_", &sv, &mut outputs);
                values.push(("mb".into(), sv.value.re));
            }
        }
        "meijer_g" => {
            let a = parse_list(args.upper.as_deref().unwrap_or(""))?;
            let b = parse_list(
                args.lower
                    .as_deref()
                    .ok_or_else(|| Failure::usage("missing --lower"))?,
            )?;
            let m = args.gm.ok_or_else(|| Failure::usage("missing --gm"))?;
            let n = args.gn.ok_or_else(|| Failure::usage("missing --gn"))?;
            let z = require(args.z, "z")?;
            inputs.insert("upper".into(), format!("{a:?}"));
            inputs.insert("lower".into(), format!("{b:?}"));
            inputs.insert("m".into(), m.to_string());
            inputs.insert("n".into(), n.to_string());
            inputs.insert("z".into(), fmt_sig(z));
            let ac: Vec<Complex64> = a.iter().map(|&x| Complex64::new(x, 0.0)).collect();
            let bc: Vec<Complex64> = b.iter().map(|&x| Complex64::new(x, 0.0)).collect();
            if wants("mb") {
                let left: Vec<Complex64> = ac.iter().take(n).map(|&x| x - 1.0).collect();
                let right: Vec<Complex64> = bc.iter().take(m).copied().collect();
                let ct = choose_contour(&left, &right)
                    .unwrap_or_else(|_| ContourSpec::new(0.0, 30.0, 512));
                let sv = mb_meijer_g(&ac, &bc, m, n, Complex64::new(z, 0.0), &ct, tol)
                    .map_err(Failure::from)?;
                series_outputs("mb_", &sv, &mut outputs);
                values.push(("mb".into(), sv.value.re));
            }
            if wants("decompose") {
                let spec = GSpec::new(ac.clone(), bc.clone(), m, n, Complex64::new(z, 0.0))
                    .map_err(Failure::from)?;
                let sv = g_decompose_eval(&spec, tol).map_err(Failure::from)?;
                series_outputs("decompose_", &sv, &mut outputs);
                values.push(("decompose".into(), sv.value.re));
            }
        }
        "sd" => {
            let spec_path = args
                .spec
                .as_ref()
                .ok_or_else(|| Failure::usage("missing --spec"))?;
            let spec = load_sd_spec(spec_path)?;
            let x = parse_list(args.x.as_deref().unwrap_or("0"))?;
            inputs.insert("spec".into(), spec_path.display().to_string());
            inputs.insert("x".into(), format!("{x:?}"));
            let sv = sd_eval(&spec, &x, tol, 2_000).map_err(Failure::from)?;
            series_outputs("", &sv, &mut outputs);
            values.push(("series".into(), sv.value.re));
        }
        "theorem1" | "theorem2" => {
            let sigma = require(args.sigma, "sigma")?;
            let lambda = require(args.lambda, "lambda")?;
            let s = require(args.s, "s")?;
            inputs.insert("sigma".into(), fmt_sig(sigma));
            inputs.insert("lambda".into(), fmt_sig(lambda));
            inputs.insert("s".into(), fmt_sig(s));
            if wants("closed") {
                let v = if args.function == "theorem1" {
                    theorem1_closed(sigma, lambda, s)
                } else {
                    theorem2_closed(sigma, lambda, s)
                }
                .map_err(Failure::from)?;
                outputs.insert("closed_value".into(), fmt_sig(v));
                values.push(("closed".into(), v));
            }
            if wants("quad") {
                let q = integrate_1d(
                    |t| ((t.cos() / sigma).powi(2) + (t.sin() / lambda).powi(2)).powf(s),
                    -std::f64::consts::PI,
                    std::f64::consts::PI,
                    tol.max(1e-12),
                )
                .map_err(Failure::from)?;
                outputs.insert("quad_value".into(), fmt_sig(q.value));
                outputs.insert("quad_est_error".into(), fmt_sig(q.est_error));
                values.push(("quad".into(), q.value));
            }
        }
        "theorem3" => {
            let lambda = require(args.lambda, "lambda")?;
            let s = require(args.s, "s")?;
            inputs.insert("lambda".into(), fmt_sig(lambda));
            inputs.insert("s".into(), fmt_sig(s));
            if wants("closed") {
                let v = theorem3_closed(lambda, s).map_err(Failure::from)?;
                outputs.insert("closed_value".into(), fmt_sig(v.re));
                outputs.insert("closed_value_im".into(), fmt_sig(v.im));
                values.push(("closed".into(), v.re));
            }
            if wants("quad") {
                let quad_part = |imag: bool| {
                    integrate_1d(
                        |r| {
                            let v = Complex64::new(1.0 - r * r, 0.0).powc(Complex64::new(-s, 0.0));
                            r.powf(2.0 * s + 1.0) * if imag { v.im } else { v.re }
                        },
                        1.0,
                        lambda,
                        tol.max(1e-11),
                    )
                };
                let re = quad_part(false).map_err(Failure::from)?;
                let im = quad_part(true).map_err(Failure::from)?;
                outputs.insert("quad_value".into(), fmt_sig(re.value));
                outputs.insert("quad_value_im".into(), fmt_sig(im.value));
                values.push(("quad".into(), re.value));
            }
        }
        _ => unreachable!("validated above"),
    }

    if values.is_empty() {
        return Err(Failure::usage(format!(
            "path `{path}` is not available for function `{}`",
            args.function
        )));
    }

    let agreement = if values.len() > 1 {
        let worst = values
            .iter()
            .enumerate()
            .flat_map(|(i, (_, v1))| {
                values
                    .iter()
                    .skip(i + 1)
                    .map(move |(_, v2)| rel_err(*v1, *v2))
            })
            .fold(0.0f64, f64::max);
        Some(fmt_sig(worst))
    } else {
        None
    };

    let record = RunRecord {
        command: "eval".into(),
        inputs,
        outputs,
        oracle: None,
        agreement,
    };
    emit(&record, args.json);
    Ok(())
}

fn load_sd_spec(path: &PathBuf) -> Result<SDSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let spec: SDSpec = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))?;
    spec.validate().map_err(Failure::from)?;
    Ok(spec)
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), Failure> {
    let spec = load_sd_spec(&args.spec)?;
    let x = match &args.x {
        Some(text) => parse_list(text)?,
        None => vec![0.0; spec.variables],
    };
    if x.len() != spec.variables {
        return Err(Failure::usage(format!(
            "--x has {} entries, tableau has {} variables",
            x.len(),
            spec.variables
        )));
    }
    let report = sd_classify(&spec, &x);

    let mut inputs = BTreeMap::new();
    inputs.insert("spec".into(), args.spec.display().to_string());
    inputs.insert("x".into(), format!("{x:?}"));
    let mut outputs = BTreeMap::new();
    outputs.insert("case".into(), format!("{:?}", report.case_label));
    outputs.insert("deltas".into(), format!("{:?}", report.deltas));
    outputs.insert("region_ok".into(), format!("{:?}", report.region_ok));
    outputs.insert("diagnostics".into(), report.diagnostics.clone());

    let record = RunRecord {
        command: "classify".into(),
        inputs,
        outputs,
        oracle: None,
        agreement: None,
    };
    emit(&record, args.json);
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Failure> {
    if args.steps == 0 {
        return Err(Failure::usage("--steps must be at least 1"));
    }
    if args.steps > 1 && !(args.to > args.from) {
        return Err(Failure::usage(
            "--to must exceed --from for a multi-step sweep",
        ));
    }
    if !matches!(args.param.as_str(), "a" | "b" | "c" | "H") {
        return Err(Failure::usage(format!(
            "unknown sweep parameter `{}` (expected a|b|c|H)",
            args.param
        )));
    }
    let tol = default_tol(args.tol);

    let mut rows: Vec<BTreeMap<String, String>> = Vec::new();
    let mut csv = String::from("param,value,area_closed,area_oracle,rel_err,volume\n");
    for i in 0..args.steps {
        let value = if args.steps == 1 {
            args.from
        } else {
            args.from + (args.to - args.from) * i as f64 / (args.steps - 1) as f64
        };
        let mut g = GeometryFlags {
            a: args.geometry.a,
            b: args.geometry.b,
            c: args.geometry.c,
            height: args.geometry.height,
        };
        match args.param.as_str() {
            "a" => g.a = value,
            "b" => g.b = value,
            "c" => g.c = value,
            _ => g.height = value,
        }
        let params = g.build(false).map_err(Failure::usage)?;
        let closed = geometry::surface_area_closed(&params, tol).map_err(Failure::from)?;
        let oracle = surface_integral_oracle(&params, tol.max(1e-11)).map_err(Failure::from)?;
        let vol = geometry::volume(&params);
        let re = rel_err(closed.area, oracle.value);

        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            args.param,
            fmt_sig(value),
            fmt_sig(closed.area),
            fmt_sig(oracle.value),
            fmt_sig(re),
            fmt_sig(vol)
        ));
        let mut row = BTreeMap::new();
        row.insert("param".into(), args.param.clone());
        row.insert("value".into(), fmt_sig(value));
        row.insert("area_closed".into(), fmt_sig(closed.area));
        row.insert("area_oracle".into(), fmt_sig(oracle.value));
        row.insert("rel_err".into(), fmt_sig(re));
        row.insert("volume".into(), fmt_sig(vol));
        rows.push(row);
    }

    let text = match args.out {
        SweepFormat::Csv => csv,
        SweepFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
    };
    match &args.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Failure::usage(format!("cannot create {}: {e}", path.display())))?;
            f.write_all(text.as_bytes())
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_sig_is_fifteen_digits() {
        assert_eq!(fmt_sig(std::f64::consts::PI), "3.14159265358979e0");
        assert_eq!(fmt_sig(0.1), "1.00000000000000e-1");
        assert_eq!(fmt_sig(-12345.678), "-1.23456780000000e4");
    }

    #[test]
    fn record_round_trips() {
        let mut inputs = BTreeMap::new();
        inputs.insert("a".into(), fmt_sig(1.2));
        let mut outputs = BTreeMap::new();
        outputs.insert("v".into(), fmt_sig(3.5));
        let r = RunRecord {
            command: "area".into(),
            inputs,
            outputs,
            oracle: None,
            agreement: Some(fmt_sig(1e-9)),
        };
        let json = serde_json::to_string(&r).unwrap();
        let back: RunRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("0.5, 1, 2").unwrap(), vec![0.5, 1.0, 2.0]);
        assert!(parse_list("0.5, x").is_err());
        assert_eq!(parse_list("").unwrap(), Vec::<f64>::new());
    }
}
