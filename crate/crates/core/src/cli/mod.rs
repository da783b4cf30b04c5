//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for argument and parameter errors, 2 for
//! numerical and I/O failures.

mod csv_out;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{ChiForm, OscIntSpec};
use crate::error::{Error, Result};
use crate::experiments::{
    constant_density_sums, dual_scan, knapp_scan, l2_endpoint_scan, pitt_sweep, ConstantKind, ScanResult,
    WeightKind, GIT_DESCRIBE,
};
use crate::exponents::{
    classify_radial, classify_separable, riesz_diagram, DiagramKind, ExtScalar, RadialParams, SeparableParams,
    Verdict,
};
use crate::feasibility::{solve_one, solve_two, verify_one, verify_two};

pub use csv_out::{diagram_table, fmt_f64, scan_table, write_csv, CsvTable, DIAGRAM_HEADER, SCAN_HEADER};

/// Environment fallback for `--threads`.
pub const THREADS_ENV: &str = "RESTRICTION_LAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "restriction-lab", version, about = "Weighted Fourier extension estimates on the unit circle")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads [INT]; falls back to RESTRICTION_LAB_THREADS.
    #[arg(long, global = true, value_name = "INT")]
    threads: Option<usize>,
    /// File of key=value lines supplying default flags.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Separable,
    Radial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Prop {
    One,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Chi {
    Constant,
    ShiftedPower,
}

fn exact(text: &str) -> std::result::Result<ExtScalar, String> {
    text.parse::<ExtScalar>().map_err(|e| e.to_string())
}

/// Integer exponents given as `a..b` (inclusive) or a comma list.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntList(Vec<i32>);

#[derive(Clone, Debug, PartialEq, Eq)]
struct ExpList(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq)]
struct CountList(Vec<u64>);

fn int_list(text: &str) -> std::result::Result<IntList, String> {
    int_range(text).map(IntList)
}

fn exp_list(text: &str) -> std::result::Result<ExpList, String> {
    positive_range(text).map(ExpList)
}

fn counts(text: &str) -> std::result::Result<CountList, String> {
    count_list(text).map(CountList)
}

fn int_range(text: &str) -> std::result::Result<Vec<i32>, String> {
    let bad = || format!("expected a..b or a comma list of integers, got {text:?}");
    let values: Vec<i32> = if let Some((a, b)) = text.split_once("..") {
        let a: i32 = a.trim().parse().map_err(|_| bad())?;
        let b: i32 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        text.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<std::result::Result<_, _>>()?
    };
    if values.is_empty() {
        return Err(bad());
    }
    Ok(values)
}

fn positive_range(text: &str) -> std::result::Result<Vec<u32>, String> {
    int_range(text)?
        .into_iter()
        .map(|k| u32::try_from(k).map_err(|_| format!("exponents must be nonnegative, got {k}")))
        .collect()
}

fn count_list(text: &str) -> std::result::Result<Vec<u64>, String> {
    text.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| format!("expected a comma list of counts, got {text:?}")))
        .collect()
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// Weight family.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Separable weight exponent on x [RATIONAL].
    #[arg(long, value_name = "RATIONAL", value_parser = exact)]
    alpha: Option<ExtScalar>,
    /// Separable weight exponent on y [RATIONAL].
    #[arg(long, value_name = "RATIONAL", value_parser = exact)]
    beta: Option<ExtScalar>,
    /// Radial weight exponent [RATIONAL].
    #[arg(long, value_name = "RATIONAL", value_parser = exact)]
    gamma: Option<ExtScalar>,
    /// Data exponent r in [1, inf] [RATIONAL].
    #[arg(long, value_name = "RATIONAL", value_parser = exact)]
    r: ExtScalar,
    /// Target exponent q in (0, inf] [RATIONAL].
    #[arg(long, value_name = "RATIONAL", value_parser = exact)]
    q: ExtScalar,
}

fn need(x: &Option<ExtScalar>, flag: &str, kind: &str) -> Result<ExtScalar> {
    x.clone().ok_or_else(|| Error::Config(format!("--kind {kind} needs --{flag}")))
}

impl WeightArgs {
    fn weight_kind(&self) -> Result<WeightKind> {
        match self.kind {
            Kind::Separable => Ok(WeightKind::Separable(SeparableParams::new(
                need(&self.alpha, "alpha", "separable")?,
                need(&self.beta, "beta", "separable")?,
                self.r.clone(),
                self.q.clone(),
            )?)),
            Kind::Radial => Ok(WeightKind::Radial(RadialParams::new(
                need(&self.gamma, "gamma", "radial")?,
                self.r.clone(),
                self.q.clone(),
            )?)),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide boundedness of a weighted extension estimate.
    Classify(WeightArgs),
    /// Classify a (1/r, 1/q) lattice.
    Diagram {
        /// Weight family.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Separable weight exponent on x [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        alpha: Option<ExtScalar>,
        /// Separable weight exponent on y [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        beta: Option<ExtScalar>,
        /// Radial weight exponent [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        gamma: Option<ExtScalar>,
        /// Lattice resolution n: 1/r = i/n, 1/q = j/(2n) [INT].
        #[arg(long, value_name = "INT", default_value_t = 8)]
        grid: u32,
    },
    /// Construct and verify an interpolation-exponent certificate.
    Feasibility {
        /// Which interpolation step: one (separable) or two (radial).
        #[arg(long, value_enum)]
        prop: Prop,
        /// Separable weight exponent on x [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        alpha: Option<ExtScalar>,
        /// Separable weight exponent on y [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        beta: Option<ExtScalar>,
        /// Radial weight exponent [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        gamma: Option<ExtScalar>,
        /// Data exponent r [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        r: ExtScalar,
        /// Target exponent q [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        q: ExtScalar,
    },
    /// Knapp cap scan over delta = 2^-k.
    Knapp {
        #[command(flatten)]
        weight: WeightArgs,
        /// Cap exponents k [RANGE a..b or list].
        #[arg(long, value_name = "RANGE", value_parser = exp_list, default_value = "2..5")]
        delta_exps: ExpList,
    },
    /// Partial sums of the constant-density lower bound.
    Constant {
        /// Weight family.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Separable weight exponent on x [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        alpha: Option<ExtScalar>,
        /// Separable weight exponent on y [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        beta: Option<ExtScalar>,
        /// Radial weight exponent [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        gamma: Option<ExtScalar>,
        /// Target exponent q [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        q: ExtScalar,
        /// Partial-sum indices N [LIST of INT].
        #[arg(long, value_name = "LIST", value_parser = counts, default_value = "10000,100000")]
        n: CountList,
    },
    /// Blow-up of the singular endpoint density as mu -> 1/r.
    L2Endpoint {
        /// Weight exponent on x [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        alpha: ExtScalar,
        /// Weight exponent on y [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        beta: ExtScalar,
        /// Data exponent r [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        r: ExtScalar,
        /// Support of the singular density [REAL].
        #[arg(long, value_name = "REAL", default_value_t = 0.25)]
        delta: f64,
        /// Exponents k of eps = 2^-k [RANGE a..b or list].
        #[arg(long, value_name = "RANGE", value_parser = exp_list, default_value = "3..7")]
        eps_exps: ExpList,
    },
    /// Weak-type Pitt ratios over a dilation family.
    Pitt {
        /// Frequency weight exponent [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        beta: ExtScalar,
        /// Data exponent p in [1, 2] [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        p: ExtScalar,
        /// Weak target exponent q [RATIONAL].
        #[arg(long, value_name = "RATIONAL", value_parser = exact)]
        q: ExtScalar,
        /// Exponents k of the scales s = 2^k [RANGE a..b or list].
        #[arg(long, value_name = "RANGE", value_parser = int_list, default_value = "-6..6", allow_hyphen_values = true)]
        scales: IntList,
    },
    /// Growth of the modulated dual functions as eps -> 0.
    Dual {
        #[command(flatten)]
        weight: WeightArgs,
        /// Exponents k of eps = 2^-k [RANGE a..b or list].
        #[arg(long, value_name = "RANGE", value_parser = exp_list, default_value = "3..7")]
        eps_exps: ExpList,
    },
    /// Small-frequency limit of a decaying-cosine integral.
    Oscint {
        /// Power kappa in (0, 1) [REAL].
        #[arg(long, value_name = "REAL")]
        kappa: f64,
        /// Frequency lambda > 0 [REAL].
        #[arg(long, value_name = "REAL")]
        lambda: f64,
        /// Amplitude shape.
        #[arg(long, value_enum, default_value_t = Chi::ShiftedPower)]
        chi: Chi,
        /// Amplitude limit at infinity [REAL].
        #[arg(long, value_name = "REAL", default_value_t = 1.0)]
        chi_inf: f64,
    },
}

/// Rendered output of a subcommand.
enum Output {
    Text(String),
    Table(CsvTable),
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Parse { .. } | Error::Config(_) => 1,
        Error::Numerical { .. } | Error::Io { .. } | Error::Internal(_) => 2,
    }
}

/// Runs the CLI on `argv` (program name first) with the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let argv = match merge_config(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let parsed = std::panic::catch_unwind(|| Cli::try_parse_from(argv));
    let cli = match parsed {
        Err(_) => {
            let _ = writeln!(err, "error: internal error while parsing arguments");
            return 2;
        }
        Ok(Ok(cli)) => cli,
        Ok(Err(e)) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    1
                }
            };
        }
    };
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(&cli)))
        .unwrap_or_else(|_| Err(Error::Internal("panic during evaluation".into())));
    match result.and_then(|o| emit(o, cli.out.as_deref(), out)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Appends `--key value` for each config line whose flag is not already on
/// the command line, so flags override the file.
fn merge_config(mut argv: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut path = None;
    for (i, a) in argv.iter().enumerate() {
        let a = a.to_string_lossy();
        if a == "--config" {
            path = argv.get(i + 1).map(PathBuf::from);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(PathBuf::from(p));
        }
    }
    let Some(path) = path else { return Ok(argv) };
    let text = std::fs::read_to_string(&path).map_err(|source| Error::Io { path: path.clone(), source })?;
    let present: Vec<String> = argv
        .iter()
        .filter_map(|a| a.to_str())
        .filter_map(|a| a.strip_prefix("--"))
        .map(|a| a.split('=').next().unwrap_or(a).to_owned())
        .collect();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("{}:{}: expected key=value", path.display(), n + 1)))?;
        let key = k.trim().replace('_', "-");
        if key == "config" || present.contains(&key) {
            continue;
        }
        argv.push(format!("--{key}").into());
        argv.push(v.trim().into());
    }
    Ok(argv)
}

fn thread_count(cli: &Cli) -> Result<Option<usize>> {
    if let Some(n) = cli.threads {
        return Ok(Some(n));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::Config(format!("{THREADS_ENV} must be a count, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let threads = thread_count(cli)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return Err(Error::Config("--threads must be positive".into()));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    pool.install(|| execute(&cli.command, cli.format))
}

fn verdict_json(v: &Verdict, params: Value) -> Value {
    let mut obj = params;
    obj["decision"] = json!(v.decision().name());
    match v {
        Verdict::Bounded(tag) => obj["case"] = json!(tag.name()),
        Verdict::Unbounded(viol) => obj["violated"] = json!(viol.name()),
    }
    obj
}

fn scan_output(res: &ScanResult, format: Format) -> Output {
    match format {
        Format::Csv => Output::Table(scan_table(res)),
        Format::Json => {
            let samples: Vec<Value> = res
                .samples
                .iter()
                .map(|s| json!({"param": s.param, "lhs": s.lhs, "rhs": s.rhs, "ratio": s.ratio}))
                .collect();
            Output::Text(
                json!({
                    "metadata": res.metadata,
                    "samples": samples,
                    "fitted": res.fitted,
                    "predicted_slope": res.predicted.as_ref().map(|p| p.slope.to_string()),
                    "log_flag": res.predicted.as_ref().map(|p| p.log_flag.name()),
                })
                .to_string()
                    + "\n",
            )
        }
        Format::Text => {
            let mut s = String::new();
            for sample in &res.samples {
                s += &format!(
                    "param={} lhs={} rhs={} ratio={}\n",
                    fmt_f64(sample.param),
                    fmt_f64(sample.lhs),
                    fmt_f64(sample.rhs),
                    fmt_f64(sample.ratio)
                );
            }
            if let Some(f) = &res.fitted {
                s += &format!("fitted_slope={} stderr={} r_squared={}\n", fmt_f64(f.slope), fmt_f64(f.stderr), fmt_f64(f.r_squared));
            }
            if let Some(p) = &res.predicted {
                s += &format!("predicted_slope={} log_flag={}\n", p.slope, p.log_flag);
            }
            Output::Text(s)
        }
    }
}

fn execute(command: &Command, format: Format) -> Result<Output> {
    match command {
        Command::Classify(w) => {
            let (verdict, params) = match w.weight_kind()? {
                WeightKind::Separable(p) => (
                    classify_separable(&p)?,
                    json!({"kind": "separable", "alpha": p.alpha, "beta": p.beta, "r": p.r, "q": p.q}),
                ),
                WeightKind::Radial(p) => {
                    (classify_radial(&p)?, json!({"kind": "radial", "gamma": p.gamma, "r": p.r, "q": p.q}))
                }
            };
            Ok(match format {
                Format::Text => Output::Text(format!("{verdict}\n")),
                Format::Json => Output::Text(verdict_json(&verdict, params).to_string() + "\n"),
                Format::Csv => {
                    let mut meta: BTreeMap<String, String> = params
                        .as_object()
                        .into_iter()
                        .flatten()
                        .map(|(k, v)| (k.clone(), v.as_str().unwrap_or_default().to_owned()))
                        .collect();
                    meta.insert("git_describe".into(), GIT_DESCRIBE.into());
                    let mut t = CsvTable::new(meta, &["decision", "case"]);
                    t.rows.push(vec![verdict.decision().name().into(), verdict.detail().into()]);
                    Output::Table(t)
                }
            })
        }
        Command::Diagram { kind, alpha, beta, gamma, grid } => {
            let kind = match kind {
                Kind::Separable => DiagramKind::Separable {
                    alpha: need(alpha, "alpha", "separable")?,
                    beta: need(beta, "beta", "separable")?,
                },
                Kind::Radial => DiagramKind::Radial { gamma: need(gamma, "gamma", "radial")? },
            };
            let d = riesz_diagram(kind, *grid)?;
            Ok(match format {
                Format::Csv => Output::Table(diagram_table(&d)),
                Format::Json => {
                    let rows: Vec<Value> = d
                        .rows
                        .iter()
                        .map(|r| {
                            json!({"inv_r": r.inv_r, "inv_q": r.inv_q, "decision": r.verdict.decision().name(), "case": r.verdict.detail()})
                        })
                        .collect();
                    Output::Text(json!({"metadata": d.metadata(), "rows": rows}).to_string() + "\n")
                }
                Format::Text => Output::Text(
                    d.rows
                        .iter()
                        .map(|r| format!("inv_r={} inv_q={} {}\n", r.inv_r, r.inv_q, r.verdict))
                        .collect(),
                ),
            })
        }
        Command::Feasibility { prop, alpha, beta, gamma, r, q } => {
            let (line, value) = match prop {
                Prop::One => {
                    let (a, b) = (need(alpha, "alpha", "one")?, need(beta, "beta", "one")?);
                    match solve_one(&a, &b, r, q)? {
                        None => ("INFEASIBLE".to_owned(), json!({"feasible": false})),
                        Some(cert) => {
                            let report = verify_one(&cert, &a, &b, r, q);
                            if !report.passed() {
                                return Err(Error::Internal(format!("certificate failed {:?}", report.failed)));
                            }
                            (format!("FEASIBLE {cert}"), json!({"feasible": true, "certificate": cert}))
                        }
                    }
                }
                Prop::Two => {
                    let g = need(gamma, "gamma", "two")?;
                    match solve_two(&g, r, q)? {
                        None => ("INFEASIBLE".to_owned(), json!({"feasible": false})),
                        Some(cert) => {
                            let report = verify_two(&cert, &g, r, q);
                            if !report.passed() {
                                return Err(Error::Internal(format!("certificate failed {:?}", report.failed)));
                            }
                            (format!("FEASIBLE {cert}"), json!({"feasible": true, "certificate": cert}))
                        }
                    }
                }
            };
            Ok(match format {
                Format::Json => Output::Text(value.to_string() + "\n"),
                _ => Output::Text(line + "\n"),
            })
        }
        Command::Knapp { weight, delta_exps } => Ok(scan_output(&knapp_scan(&weight.weight_kind()?, &delta_exps.0)?, format)),
        Command::Dual { weight, eps_exps } => Ok(scan_output(&dual_scan(&weight.weight_kind()?, &eps_exps.0)?, format)),
        Command::L2Endpoint { alpha, beta, r, delta, eps_exps } => {
            Ok(scan_output(&l2_endpoint_scan(alpha, beta, r, *delta, &eps_exps.0)?, format))
        }
        Command::Constant { kind, alpha, beta, gamma, q, n } => {
            let ck = match kind {
                Kind::Separable => ConstantKind::Separable {
                    alpha: need(alpha, "alpha", "separable")?,
                    beta: need(beta, "beta", "separable")?,
                    q: q.clone(),
                },
                Kind::Radial => ConstantKind::Radial { gamma: need(gamma, "gamma", "radial")?, q: q.clone() },
            };
            let sums = constant_density_sums(&ck, &n.0)?;
            Ok(match format {
                Format::Csv => {
                    let meta = BTreeMap::from([
                        ("exponent".to_owned(), sums.exponent.to_string()),
                        ("verdict".to_owned(), sums.verdict.name().to_owned()),
                        ("git_describe".to_owned(), GIT_DESCRIBE.to_owned()),
                    ]);
                    let mut t = CsvTable::new(meta, &["n", "partial_sum"]);
                    t.rows = sums.partial.iter().map(|(n, s)| vec![n.to_string(), fmt_f64(*s)]).collect();
                    Output::Table(t)
                }
                Format::Json => Output::Text(
                    json!({
                        "exponent": sums.exponent.to_string(),
                        "verdict": sums.verdict.name(),
                        "partial": sums.partial,
                    })
                    .to_string()
                        + "\n",
                ),
                Format::Text => {
                    let mut s = format!("{} s={}\n", sums.verdict.name().to_uppercase(), sums.exponent);
                    for (n, v) in &sums.partial {
                        s += &format!("N={n} S_N={}\n", fmt_f64(*v));
                    }
                    Output::Text(s)
                }
            })
        }
        Command::Pitt { beta, p, q, scales } => {
            let sc: Vec<f64> = scales.0.iter().map(|k| 2f64.powi(*k)).collect();
            let sweep = pitt_sweep(beta, p, q, &sc)?;
            Ok(match format {
                Format::Csv => {
                    let meta = BTreeMap::from([
                        ("beta".to_owned(), beta.to_string()),
                        ("p".to_owned(), p.to_string()),
                        ("q".to_owned(), q.to_string()),
                        ("max_ratio".to_owned(), fmt_f64(sweep.max_ratio)),
                        ("min_ratio".to_owned(), fmt_f64(sweep.min_ratio)),
                        ("git_describe".to_owned(), GIT_DESCRIBE.to_owned()),
                    ]);
                    let mut t = CsvTable::new(meta, &["scale", "family", "ratio"]);
                    t.rows = sweep
                        .samples
                        .iter()
                        .map(|s| vec![fmt_f64(s.scale), s.family.name().to_owned(), fmt_f64(s.ratio)])
                        .collect();
                    Output::Table(t)
                }
                Format::Json => {
                    let rows: Vec<Value> = sweep
                        .samples
                        .iter()
                        .map(|s| json!({"scale": s.scale, "family": s.family.name(), "ratio": s.ratio}))
                        .collect();
                    Output::Text(
                        json!({"max_ratio": sweep.max_ratio, "min_ratio": sweep.min_ratio, "samples": rows}).to_string()
                            + "\n",
                    )
                }
                Format::Text => {
                    let mut s = String::new();
                    for x in &sweep.samples {
                        s += &format!("scale={} family={} ratio={}\n", fmt_f64(x.scale), x.family.name(), fmt_f64(x.ratio));
                    }
                    s += &format!("max_ratio={} min_ratio={}\n", fmt_f64(sweep.max_ratio), fmt_f64(sweep.min_ratio));
                    Output::Text(s)
                }
            })
        }
        Command::Oscint { kappa, lambda, chi, chi_inf } => {
            let form = match chi {
                Chi::Constant => ChiForm::Constant,
                Chi::ShiftedPower => ChiForm::ShiftedPower,
            };
            let spec = OscIntSpec::new(*kappa, *lambda, form, *chi_inf)?;
            let (integral, limit, ratio) = (spec.integral()?, spec.limit()?, spec.limit_ratio()?);
            Ok(match format {
                Format::Json => {
                    Output::Text(json!({"integral": integral, "limit": limit, "limit_ratio": ratio}).to_string() + "\n")
                }
                _ => Output::Text(format!(
                    "integral={} limit={} limit_ratio={}\n",
                    fmt_f64(integral),
                    fmt_f64(limit),
                    fmt_f64(ratio)
                )),
            })
        }
    }
}

fn emit(output: Output, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match (output, path) {
        (Output::Table(t), Some(p)) => write_csv(&t, p),
        (Output::Table(t), None) => t.write(out).map_err(|source| Error::Io { path: "<stdout>".into(), source }),
        (Output::Text(s), Some(p)) => {
            std::fs::write(p, s).map_err(|source| Error::Io { path: p.to_owned(), source })
        }
        (Output::Text(s), None) => {
            out.write_all(s.as_bytes()).map_err(|source| Error::Io { path: "<stdout>".into(), source })
        }
    }
}
