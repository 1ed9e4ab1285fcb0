//! The `hypcm` command: `eval`, `verify` and `table`.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use hypcm_core::eigen::{self, EigenfunctionRequest, Representation};
use hypcm_core::hypgamma::{e_entire, g_mero};
use hypcm_core::kernels::{c_fn, kernel, mu_eigenvalue, phase_phi, u_fn, weight_w2, KernelKind};
use hypcm_core::params::make_params;
use hypcm_core::{CheckTolerance, Coupling, HyperbolicParams, MeroKind, MeroValue, C64};

use crate::config::{CliConfig, OutputFormat};
use crate::error::{Error, Result};
use crate::verify::{self, CheckId, Plan, Suite};
use crate::wire::{fmt_complex, fmt_real, parse_complex, parse_reals, parse_vector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_POLE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "hypcm", version, about = "Hyperbolic gamma function and Calogero-Moser eigenfunctions")]
pub struct Cli {
    /// `key = value` file; flags given on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Periods as `a_plus,a_minus`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Coupling, e.g. `0.8` or `0.8+0.1i`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// json, csv or pretty.
    #[arg(long, global = true)]
    pub format: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Relative tolerance: quadrature target for `eval`, pass threshold for `verify`.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// defining, com, dual, auto or residue:<shift>.
    #[arg(long, global = true)]
    pub rep: Option<String>,
    /// Worker threads.
    #[arg(long, global = true, env = "HYPCM_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Point {
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        function: String,
        #[command(flatten)]
        point: Point,
    },
    /// Run checks from the identity registry.
    Verify {
        /// fast, slow or all.
        #[arg(long)]
        suite: Option<String>,
        /// A single check id; may be repeated.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Samples per check.
        #[arg(long)]
        samples: Option<usize>,
        /// Where to write the JSON report.
        #[arg(long, default_value = "hypcm-report.json")]
        json: PathBuf,
        /// Where to write the CSV report.
        #[arg(long, default_value = "hypcm-report.csv")]
        csv: PathBuf,
    },
    /// Evaluate a function over a one- or two-axis sweep and print CSV.
    Table {
        function: String,
        #[command(flatten)]
        point: Point,
        /// `axis:from:to:steps`, given once or twice. Axes are `b`, `z`, `w`,
        /// components like `x1` or `y2`, differences like `y1-y2`, each with
        /// an optional `.im` suffix.
        #[arg(long = "sweep", required = true, allow_hyphen_values = true)]
        sweeps: Vec<String>,
    },
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("hypcm: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    use hypcm_core::Error as C;
    match e {
        Error::Usage(_) | Error::UnknownCheck(_) => EXIT_USAGE,
        Error::Core(C::NonPositivePeriod { .. } | C::DimensionMismatch { .. } | C::InvalidArgument(_)) => EXIT_USAGE,
        Error::Core(C::DomainViolation { .. } | C::CouplingOutOfStrip { .. } | C::OutOfHalfPlane { .. }) => EXIT_DOMAIN,
        Error::Core(C::PoleOfGamma { .. }) => EXIT_POLE,
        _ => EXIT_FAIL,
    }
}

fn load_config(cli: &Cli) -> Result<CliConfig> {
    let mut cfg = CliConfig::default();
    if let Some(path) = &cli.config {
        cfg.merge(&fs::read_to_string(path)?)?;
    }
    let pairs = [
        ("a", cli.a.clone()),
        ("b", cli.b.clone()),
        ("format", cli.format.clone()),
        ("seed", cli.seed.map(|s| s.to_string())),
        ("tol", cli.tol.map(|t| t.to_string())),
        ("rep", cli.rep.clone()),
        ("threads", cli.threads.map(|t| t.to_string())),
    ];
    for (k, v) in pairs {
        if let Some(v) = v {
            cfg.set(k, &v)?;
        }
    }
    Ok(cfg)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = load_config(cli)?;
    // validate before any computation
    let p = make_params(cfg.a_plus, cfg.a_minus)?;
    if let Some(b) = cfg.b {
        Coupling::new(&p, b)?;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        if n == 0 {
            return Err(Error::Usage("thread count must be positive".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    let mut buf = Vec::new();
    let res = pool.install(|| {
        let out: &mut dyn Write = &mut buf;
        match &cli.command {
        Command::Eval { function, point } => cmd_eval(&cfg, &p, function, point, out),
        Command::Verify { suite, checks, samples, json, csv } => {
            cmd_verify(&cfg, suite.as_deref(), checks, *samples, json, csv, out)
        }
        Command::Table { function, point, sweeps } => cmd_table(&cfg, &p, function, point, sweeps, out),
        }
    });
    out.write_all(&buf)?;
    out.flush()?;
    res
}

/// Result of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outcome {
    pub value: MeroValue,
    pub abs_err: Option<f64>,
    pub rep: Option<Representation>,
}

impl Outcome {
    fn plain(value: MeroValue) -> Self {
        Outcome { value, abs_err: None, rep: None }
    }

    fn number(v: C64) -> Self {
        Outcome::plain(MeroValue::finite(v))
    }

    fn with_err(v: C64, err: f64) -> Self {
        Outcome { value: MeroValue::finite(v), abs_err: Some(err), rep: None }
    }

    fn eval(e: eigen::Evaluation) -> Self {
        Outcome { value: e.value, abs_err: Some(e.abs_error), rep: Some(e.rep) }
    }
}

/// Parsed arguments of one evaluation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Args0 {
    pub b: Option<C64>,
    pub z: Option<C64>,
    pub w: Option<C64>,
    pub x: Option<Vec<C64>>,
    pub y: Option<Vec<C64>>,
    pub q: Option<Vec<C64>>,
}

impl Args0 {
    fn parse(cfg: &CliConfig, pt: &Point) -> Result<Self> {
        let c = |s: &Option<String>| s.as_deref().map(parse_complex).transpose();
        let v = |s: &Option<String>| s.as_deref().map(parse_vector).transpose();
        Ok(Args0 { b: cfg.b, z: c(&pt.z)?, w: c(&pt.w)?, x: v(&pt.x)?, y: v(&pt.y)?, q: v(&pt.q)? })
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str, function: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Usage(format!("`{function}` needs --{flag}")))
}

pub fn evaluate(cfg: &CliConfig, p: &HyperbolicParams, function: &str, a: &Args0) -> Result<Outcome> {
    let f = function;
    let b = || need(&a.b, "b", f);
    let z = || need(&a.z, "z", f);
    let x = || need(&a.x, "x", f);
    let y = || need(&a.y, "y", f);
    let tol = CheckTolerance::rel(cfg.tol.unwrap_or(1e-6));
    let req = || -> Result<EigenfunctionRequest> {
        let rep = cfg.representation.unwrap_or(Representation::Auto);
        Ok(EigenfunctionRequest::new(Coupling::new(p, b()?)?, &x()?, &y()?).with_rep(rep).with_tol(tol))
    };
    if let Some(kind) = f.strip_prefix("kernel:") {
        let k = KernelKind::from_name(kind).ok_or_else(|| Error::Usage(format!("unknown kernel `{kind}`")))?;
        // F2 takes the spectral variable, the others the integration variable
        let (flag, second) = match k {
            KernelKind::F2 => ("y", a.y.clone()),
            _ => ("q", a.q.clone().or_else(|| a.z.map(|z| vec![z]))),
        };
        let second = need(&second, flag, f)?;
        return Ok(Outcome::plain(kernel(k, p, b()?, &x()?, &second)?));
    }
    let o = match f {
        "gamma_g" => Outcome::plain(g_mero(p, z()?)?),
        "e_fn" => Outcome::plain(e_entire(p, z()?)?),
        "c" => Outcome::plain(c_fn(p, Coupling::new(p, b()?)?.b, z()?)?),
        "u" => Outcome::plain(u_fn(p, Coupling::new(p, b()?)?.b, z()?)?),
        "phi" => Outcome::number(phase_phi(p, b()?)),
        "w2" => {
            let pts = a.x.clone().or_else(|| a.z.map(|s| vec![s, C64::new(0.0, 0.0)]));
            Outcome::plain(weight_w2(p, b()?, &need(&pts, "x", f)?)?)
        }
        "j1" => Outcome::number(eigen::j1(p, z()?, need(&a.w, "w", f)?)),
        "j2" => Outcome::eval(eigen::j2(p, &req()?)?),
        "e2" => Outcome::eval(eigen::e2(p, &req()?)?),
        "j3" => Outcome::eval(eigen::j3(p, &req()?)?),
        "e3" => Outcome::eval(eigen::e3(p, &req()?)?),
        "e2_minus_as" => {
            let (d, err) = eigen::e2_minus_as(p, &req()?)?;
            Outcome::with_err(d, err)
        }
        "e3_minus_as" => {
            let (d, err) = eigen::e3_minus_as(p, &req()?)?;
            Outcome::with_err(d, err)
        }
        "e2_as" | "e3_as" | "p2" | "p3" => {
            let (b, x, y) = (Coupling::new(p, b()?)?.b, x()?, y()?);
            let n = if f.ends_with('2') || f.starts_with("e2") { 2 } else { 3 };
            for v in [&x, &y] {
                if v.len() != n {
                    return Err(hypcm_core::Error::DimensionMismatch { expected: n, got: v.len() }.into());
                }
            }
            match f {
                "e2_as" => Outcome::number(eigen::e2_as(p, b, &x, &y)),
                "e3_as" => Outcome::number(eigen::e3_as(p, b, &x, &y)),
                "p2" => Outcome::plain(eigen::p2(p, b, &x, &y)?),
                _ => Outcome::plain(eigen::p3(p, b, &x, &y)?),
            }
        }
        "mu" => {
            let q = a.q.clone().or(a.y.clone());
            Outcome::number(mu_eigenvalue(p, Coupling::new(p, b()?)?.b, &need(&q, "q", f)?)?)
        }
        _ => return Err(Error::Usage(format!("unknown function `{f}`"))),
    };
    Ok(o)
}

fn exit_for(o: &Outcome) -> i32 {
    if o.value.is_pole() {
        EXIT_POLE
    } else {
        EXIT_OK
    }
}

fn rep_name(o: &Outcome) -> String {
    match o.rep {
        Some(Representation::ResidueAugmented(r)) => format!("residue:{}", fmt_real(r)),
        Some(r) => r.name().to_string(),
        None => "-".to_string(),
    }
}

fn kind_name(k: MeroKind) -> String {
    match k {
        MeroKind::Finite => "finite".into(),
        _ => format!("{}({})", k.label(), k.order()),
    }
}

fn json_num(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(x).map(serde_json::Value::Number).unwrap_or(serde_json::Value::Null)
}

fn cmd_eval(cfg: &CliConfig, p: &HyperbolicParams, function: &str, pt: &Point, out: &mut dyn Write) -> Result<i32> {
    let args = Args0::parse(cfg, pt)?;
    let o = evaluate(cfg, p, function, &args)?;
    let err = o.abs_err.map(fmt_real).unwrap_or_else(|| "-".into());
    match cfg.output_format {
        OutputFormat::Pretty => {
            writeln!(out, "{function} = {}", fmt_complex(o.value.value))?;
            writeln!(out, "abs_err = {err}")?;
            writeln!(out, "kind = {}", kind_name(o.value.kind))?;
            writeln!(out, "rep = {}", rep_name(&o))?;
        }
        OutputFormat::Json => {
            let v = serde_json::json!({
                "function": function,
                "value": fmt_complex(o.value.value),
                "re": json_num(o.value.value.re),
                "im": json_num(o.value.value.im),
                "abs_err": o.abs_err.map(json_num),
                "kind": o.value.kind.label(),
                "order": o.value.kind.order(),
                "rep": rep_name(&o),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        OutputFormat::Csv => {
            writeln!(out, "function,value_re,value_im,abs_err,kind,rep")?;
            writeln!(
                out,
                "{function},{},{},{},{},{}",
                fmt_real(o.value.value.re),
                fmt_real(o.value.value.im),
                o.abs_err.map(fmt_real).unwrap_or_default(),
                kind_name(o.value.kind),
                rep_name(&o)
            )?;
        }
    }
    Ok(exit_for(&o))
}

fn cmd_verify(
    cfg: &CliConfig,
    suite: Option<&str>,
    checks: &[String],
    samples: Option<usize>,
    json: &PathBuf,
    csv: &PathBuf,
    out: &mut dyn Write,
) -> Result<i32> {
    let ids: Vec<CheckId> = if checks.is_empty() {
        let s = match suite {
            Some(s) => Suite::from_name(s).ok_or_else(|| Error::Usage(format!("unknown suite `{s}`")))?,
            None => cfg.suite,
        };
        s.ids()
    } else {
        checks.iter().map(|c| CheckId::from_name(c).ok_or_else(|| Error::UnknownCheck(c.clone()))).collect::<Result<_>>()?
    };
    if samples == Some(0) {
        return Err(Error::Usage("--samples must be positive".into()));
    }
    let b = match cfg.b {
        Some(b) if b.im != 0.0 => return Err(Error::Usage("verify takes a real coupling".into())),
        b => b.map(|b| b.re),
    };
    let plan = Plan {
        seed: cfg.seed,
        samples,
        b,
        tol: cfg.tol,
        tol_overrides: cfg.tol_overrides.clone(),
        ..Plan::default()
    };
    let summary = verify::run_checks(&ids, &plan);
    verify::write_json(&summary.reports, fs::File::create(json)?)?;
    verify::write_csv(&summary.reports, fs::File::create(csv)?)?;
    match cfg.output_format {
        OutputFormat::Pretty => {
            for r in &summary.reports {
                let status = match (r.pass, r.probe) {
                    (true, false) => "PASS",
                    (false, false) => "FAIL",
                    (true, true) => "PROBE",
                    (false, true) => "PROBE!",
                };
                writeln!(
                    out,
                    "{status:6} {:20} samples={:<4} max={:<10.3e} tol={:<8.1e} {:.2}s  {}",
                    r.id.name(),
                    r.samples,
                    r.max_rel_residual,
                    r.tolerance.rel_tol,
                    r.wall_time,
                    r.worst_case_point
                )?;
            }
            writeln!(
                out,
                "{} in {:.1}s; reports at {} and {}",
                if summary.pass { "all gating checks passed" } else { "some checks failed" },
                summary.wall_time,
                json.display(),
                csv.display()
            )?;
        }
        OutputFormat::Json => verify::write_json(&summary.reports, &mut *out)?,
        OutputFormat::Csv => verify::write_csv(&summary.reports, &mut *out)?,
    }
    Ok(if summary.pass { EXIT_OK } else { EXIT_FAIL })
}

/// One sweep axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub axis: String,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl Sweep {
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Usage(format!("sweep `{s}` is not axis:from:to:steps")));
        }
        let nums = parse_reals(&parts[1..3].join(","))?;
        let steps: usize = parts[3].trim().parse().map_err(|_| Error::Usage(format!("bad step count `{}`", parts[3])))?;
        if steps == 0 {
            return Err(Error::Usage("a sweep needs at least one step".into()));
        }
        Ok(Sweep { axis: parts[0].trim().to_string(), from: nums[0], to: nums[1], steps })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.from];
        }
        let n = (self.steps - 1) as f64;
        (0..self.steps).map(|k| (self.from * (n - k as f64) + self.to * k as f64) / n).collect()
    }
}

fn set_part(z: &mut C64, im: bool, v: f64) {
    if im {
        z.im = v;
    } else {
        z.re = v;
    }
}

fn component(a: &mut Args0, var: char) -> Result<&mut Vec<C64>> {
    let slot = match var {
        'x' => &mut a.x,
        'y' => &mut a.y,
        'q' => &mut a.q,
        _ => return Err(Error::Usage(format!("unknown sweep variable `{var}`"))),
    };
    slot.as_mut().ok_or_else(|| Error::Usage(format!("sweeping `{var}` needs a base --{var}")))
}

fn index(var: char, s: &str, len: usize) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(k) if k >= 1 && k <= len => Ok(k - 1),
        _ => Err(Error::Usage(format!("bad component `{var}{s}`"))),
    }
}

/// Sets the swept coordinate to `v`.
pub fn apply_axis(a: &mut Args0, axis: &str, v: f64) -> Result<()> {
    let (name, im) = match axis.strip_suffix(".im") {
        Some(n) => (n, true),
        None => (axis.strip_suffix(".re").unwrap_or(axis), false),
    };
    match name {
        "b" => set_part(a.b.get_or_insert(C64::new(0.0, 0.0)), im, v),
        "z" => set_part(a.z.get_or_insert(C64::new(0.0, 0.0)), im, v),
        "w" => set_part(a.w.get_or_insert(C64::new(0.0, 0.0)), im, v),
        _ => {
            let bad = || Error::Usage(format!("unknown sweep axis `{axis}`"));
            let var = name.chars().next().ok_or_else(bad)?;
            let rest = &name[1..];
            if let Some((j, k)) = rest.split_once('-') {
                // `x1-x2`: move x1 so that the difference takes the value
                let k = k.strip_prefix(var).ok_or_else(bad)?;
                let comps = component(a, var)?;
                let (j, k) = (index(var, j, comps.len())?, index(var, k, comps.len())?);
                let base = comps[k];
                set_part(&mut comps[j], im, v + if im { base.im } else { base.re });
            } else {
                let comps = component(a, var)?;
                let j = index(var, rest, comps.len())?;
                set_part(&mut comps[j], im, v);
            }
        }
    }
    Ok(())
}

fn cmd_table(
    cfg: &CliConfig,
    p: &HyperbolicParams,
    function: &str,
    pt: &Point,
    sweeps: &[String],
    out: &mut dyn Write,
) -> Result<i32> {
    if sweeps.is_empty() || sweeps.len() > 2 {
        return Err(Error::Usage("give one or two --sweep axes".into()));
    }
    let sweeps: Vec<Sweep> = sweeps.iter().map(|s| Sweep::parse(s)).collect::<Result<_>>()?;
    let base = Args0::parse(cfg, pt)?;
    let mut grid: Vec<Vec<f64>> = vec![Vec::new()];
    for s in &sweeps {
        grid = grid.into_iter().flat_map(|row| s.values().into_iter().map(move |v| [row.clone(), vec![v]].concat())).collect();
    }
    // check the axes once before any work
    for (s, &v) in sweeps.iter().zip(&grid[0]) {
        apply_axis(&mut base.clone(), &s.axis, v)?;
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = sweeps.iter().map(|s| s.axis.clone()).collect();
    header.extend(["value_re", "value_im", "abs", "abs_err", "kind", "rep"].map(String::from));
    w.write_record(&header)?;
    use rayon::prelude::*;
    let rows: Vec<Result<Vec<String>>> = grid
        .par_iter()
        .map(|vals| {
            let mut a = base.clone();
            for (s, &v) in sweeps.iter().zip(vals) {
                apply_axis(&mut a, &s.axis, v)?;
            }
            let mut row: Vec<String> = vals.iter().map(|v| fmt_real(*v)).collect();
            match evaluate(cfg, p, function, &a) {
                Ok(o) => row.extend([
                    fmt_real(o.value.value.re),
                    fmt_real(o.value.value.im),
                    fmt_real(o.value.value.norm()),
                    o.abs_err.map(fmt_real).unwrap_or_default(),
                    kind_name(o.value.kind),
                    rep_name(&o),
                ]),
                Err(e @ (Error::Usage(_) | Error::UnknownCheck(_))) => return Err(e),
                Err(e) => row.extend([String::new(), String::new(), String::new(), String::new(), format!("error: {e}"), String::new()]),
            }
            Ok(row)
        })
        .collect();
    for r in rows {
        w.write_record(&r?)?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        let s = Sweep::parse("y1-y2:2:6:9").unwrap();
        assert_eq!(s.values().len(), 9);
        assert_eq!(s.values()[8], 6.0);
        assert!(matches!(Sweep::parse("b:0:1:0"), Err(Error::Usage(_))));
        assert!(matches!(Sweep::parse("b:0:1"), Err(Error::Usage(_))));
        assert_eq!(Sweep::parse("z.im:-1:1:1").unwrap().values(), vec![-1.0]);
    }

    #[test]
    fn axes() {
        let mut a = Args0 { y: Some(vec![C64::new(0.0, 0.0), C64::new(0.5, 0.0)]), ..Args0::default() };
        apply_axis(&mut a, "y1-y2", 2.0).unwrap();
        assert_eq!(a.y.as_ref().unwrap()[0], C64::new(2.5, 0.0));
        apply_axis(&mut a, "y2.im", 0.1).unwrap();
        assert_eq!(a.y.as_ref().unwrap()[1], C64::new(0.5, 0.1));
        apply_axis(&mut a, "b", 0.7).unwrap();
        assert_eq!(a.b, Some(C64::new(0.7, 0.0)));
        assert!(apply_axis(&mut a, "x1", 1.0).is_err());
        assert!(apply_axis(&mut a, "y4", 1.0).is_err());
        assert!(apply_axis(&mut a, "k", 1.0).is_err());
    }

    #[test]
    fn special_values() {
        let cfg = CliConfig::default();
        let p = make_params(1.0, 1.0).unwrap();
        let a = Args0 { z: Some(C64::new(0.0, 0.0)), b: Some(C64::new(0.8, 0.0)), ..Args0::default() };
        let g = evaluate(&cfg, &p, "gamma_g", &a).unwrap();
        assert!((g.value.value - 1.0).norm() < 1e-15);
        let u = evaluate(&cfg, &p, "u", &a).unwrap();
        assert!((u.value.value - 1.0).norm() < 1e-12);
        assert!(matches!(evaluate(&cfg, &p, "nope", &a), Err(Error::Usage(_))));
        assert!(matches!(evaluate(&cfg, &p, "j2", &a), Err(Error::Usage(_))));
    }

    #[test]
    fn exit_codes() {
        let dom = hypcm_core::Error::DomainViolation { domain: hypcm_core::domain::DomainId::D2, detail: "" };
        assert_eq!(exit_code(&Error::Core(dom)), EXIT_DOMAIN);
        assert_eq!(exit_code(&Error::UnknownCheck("x".into())), EXIT_USAGE);
        assert_eq!(exit_code(&Error::Core(hypcm_core::Error::DegenerateFit)), EXIT_FAIL);
    }
}
