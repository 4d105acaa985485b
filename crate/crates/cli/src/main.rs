mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rug::Float;
use serde_json::{json, Value};
use trig_enclose::arith::to_decimal;
use trig_enclose::best_constants::{constants_for, SharpConstant, SharpConstantPair, CONSTANT_FAMILIES};
use trig_enclose::inequality_verifier::{
    compare_bounds, endpoint_limit, verify_with, Endpoint, Verdict, VerifyOptions, REGISTRY,
};
use trig_enclose::remainder_series::{eval_with_enclosure, RemainderFunction};
use trig_enclose::zeta_sums::{brute_sum, registry_constant, registry_entry, SumId, TermRule};
use trig_enclose::Error;

use render::{enclosure, render, Format};

const EXIT_VIOLATED: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 4;

/// Certified evaluation of trigonometric remainder series, sharp constants
/// and inequality checks.
#[derive(Debug, Parser)]
#[command(name = "trig-enclose", version)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RunConfig {
    /// Working precision in bits.
    #[arg(long, global = true, env = "TRIG_ENCLOSE_PRECISION", default_value_t = 256)]
    precision: u32,
    /// Number of grid points for verification and comparison.
    #[arg(long, global = true, default_value_t = 2001)]
    grid: usize,
    /// Largest accepted bound on a truncated series tail.
    #[arg(long, global = true, default_value_t = 2f64.powi(-128))]
    tolerance: f64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Partial sum, remainder and function value at a point.
    Eval(PointArgs),
    /// Remainder enclosure only.
    Remainder(PointArgs),
    /// Best constants of an inequality family.
    Constants {
        family: String,
        #[arg(long, default_value_t = 1)]
        order: u32,
    },
    /// Certify one registered inequality, or `all`.
    Verify {
        id: String,
        /// Restrict an order-indexed family to a single order.
        #[arg(long)]
        order: Option<u32>,
    },
    /// Closed form and series value of a registered sum (S1..S15, or `all`).
    Sums { id: String },
    /// Tabulate best constants, e.g. `wilker-constants --orders 1..6`.
    Table {
        name: String,
        #[arg(long, default_value = "1..6")]
        orders: String,
    },
    /// Extrapolated endpoint limit of a best-constant ratio.
    Limit {
        id: String,
        /// `0+` or `pi/2-`.
        #[arg(long, default_value = "0+")]
        at: String,
    },
    /// Pointwise comparison of two bounds on the same side of the same target.
    Compare { a: String, b: String },
}

#[derive(Debug, Args)]
struct PointArgs {
    /// tan, tanh, sec, cot, csc or sec2tan.
    function: String,
    /// Truncation order; defaults to 2 for sec2tan and 1 otherwise.
    #[arg(long)]
    order: Option<u32>,
    /// Evaluation point, as a decimal literal.
    #[arg(long, allow_hyphen_values = true)]
    at: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) => EXIT_DOMAIN,
            Error::Budget { .. } => EXIT_BUDGET,
            Error::RejectedInput(_) | Error::IndexTooLarge { .. } => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Command output plus the exit code it implies.
struct Outcome {
    value: Value,
    code: u8,
    default_format: Format,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            code: 0,
            default_format: Format::Json,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("trig-enclose: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let cfg = &cli.config;
    if cfg.precision < 64 {
        return Err(Failure::usage("--precision must be at least 64"));
    }
    if cfg.grid < 3 {
        return Err(Failure::usage("--grid must be at least 3"));
    }
    if cfg.tolerance.is_nan() || cfg.tolerance <= 0.0 {
        return Err(Failure::usage("--tolerance must be positive"));
    }
    let outcome = match &cli.command {
        Command::Eval(p) => eval(p, cfg, true)?,
        Command::Remainder(p) => eval(p, cfg, false)?,
        Command::Constants { family, order } => Outcome::ok(pair_json(&constants_for(family, *order, cfg.precision)?)),
        Command::Verify { id, order } => verify(id, *order, cfg)?,
        Command::Sums { id } => sums(id, cfg)?,
        Command::Table { name, orders } => table(name, orders, cfg)?,
        Command::Limit { id, at } => {
            let endpoint: Endpoint = at.parse()?;
            let check = endpoint_limit(id, endpoint, cfg.precision)?;
            let code = if check.passed { 0 } else { EXIT_VIOLATED };
            Outcome {
                value: serialize(&check)?,
                code,
                default_format: Format::Json,
            }
        }
        Command::Compare { a, b } => Outcome::ok(serialize(&compare_bounds(a, b, cfg.grid, cfg.precision)?)?),
    };
    let text = render(&outcome.value, cfg.format.unwrap_or(outcome.default_format)).map_err(Failure::usage)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(outcome.code)
}

fn serialize<T: serde::Serialize>(x: &T) -> Result<Value, Failure> {
    serde_json::to_value(x).map_err(|e| Failure::usage(e.to_string()))
}

/// Series tails are truncated near 2^-(prec+16); widen the working
/// precision until that clears the tolerance.
fn working_precision(cfg: &RunConfig) -> u32 {
    let needed = (-cfg.tolerance.log2()).ceil().max(0.0) as u32;
    cfg.precision.max(needed.saturating_sub(16))
}

fn eval(p: &PointArgs, cfg: &RunConfig, full: bool) -> Result<Outcome, Failure> {
    let func: RemainderFunction = p.function.parse()?;
    let order = p.order.unwrap_or(if func == RemainderFunction::Sec2tan { 2 } else { 1 });
    let t = Float::parse(&p.at)
        .map(|x| Float::with_val(cfg.precision, x))
        .map_err(|_| Failure::usage(format!("cannot parse `{}` as a number", p.at)))?;
    let wp = working_precision(cfg);
    let ev = eval_with_enclosure(func, order, &t, wp)?;
    if ev.tail.bound > cfg.tolerance {
        return Err(Error::Budget {
            terms: ev.tail.terms,
            achieved: ev.tail.bound.to_f64(),
        }
        .into());
    }
    let prec = cfg.precision;
    let mut v = json!({
        "function_id": func.name(),
        "order": order,
        "t": to_decimal(&t),
        "precision_bits": prec,
    });
    let m = v.as_object_mut().expect("object");
    if full {
        m.insert("partial_sum".into(), Value::String(to_decimal(&Float::with_val(prec, &ev.partial_sum))));
    }
    m.insert("remainder".into(), enclosure(&ev.remainder.with_prec(prec)));
    if full {
        m.insert("value".into(), enclosure(&ev.value.with_prec(prec)));
    }
    m.insert("terms_used".into(), json!(ev.terms_used));
    m.insert("tail_bound".into(), Value::String(to_decimal(&ev.tail.bound)));
    Ok(Outcome::ok(v))
}

fn constant_json(c: &SharpConstant) -> Value {
    json!({
        "form": c.form.as_ref().map(|f| f.to_string()),
        "exactness": c.exactness.to_string(),
        "decimal": to_decimal(&c.numeric()),
        "value": enclosure(&c.value),
        "tail_bound": c.tail.as_ref().map(|t| to_decimal(&t.bound)),
    })
}

fn pair_json(p: &SharpConstantPair) -> Value {
    json!({
        "inequality_id": p.inequality_id,
        "order": p.order,
        "exactness": p.exactness().to_string(),
        "lower": constant_json(&p.lower),
        "upper": constant_json(&p.upper),
    })
}

fn verify(id: &str, order: Option<u32>, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let ids: Vec<&str> = if id == "all" { REGISTRY.to_vec() } else { vec![id] };
    let mut opts = VerifyOptions::new(cfg.grid, cfg.precision);
    opts.orders = order.map(|n| vec![n]);
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        reports.push(verify_with(id, &opts)?);
    }
    let worst = reports.iter().map(|r| r.verdict).max().unwrap_or(Verdict::Certified);
    let code = match worst {
        Verdict::Certified => 0,
        Verdict::Inconclusive => EXIT_BUDGET,
        Verdict::Violated => EXIT_VIOLATED,
    };
    Ok(Outcome {
        value: serialize(&reports)?,
        code,
        default_format: Format::Json,
    })
}

fn sums(id: &str, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let ids: Vec<SumId> = if id == "all" {
        SumId::all().collect()
    } else {
        vec![id.parse()?]
    };
    let mut rows = Vec::with_capacity(ids.len());
    let mut code = 0;
    for sid in ids {
        let exact = registry_constant(sid, cfg.precision);
        let (rule, start, _) = registry_entry(sid);
        let series = brute_sum(&TermRule::Rational(rule), start, working_precision(cfg), cfg.tolerance)?;
        let agree = exact.value.overlaps(&series.value);
        if !agree {
            code = EXIT_VIOLATED;
        }
        rows.push(json!({
            "expression_id": sid.to_string(),
            "closed_form": exact.form.to_string(),
            "decimal": to_decimal(&exact.numeric()),
            "value": enclosure(&exact.value),
            "series": enclosure(&series.value.with_prec(cfg.precision)),
            "series_terms": series.tail.terms,
            "series_tail_bound": to_decimal(&series.tail.bound),
            "agree": agree,
        }));
    }
    let value = if rows.len() == 1 { rows.pop().expect("one row") } else { Value::Array(rows) };
    Ok(Outcome {
        value,
        code,
        default_format: Format::Json,
    })
}

fn parse_orders(s: &str) -> Result<Vec<u32>, Failure> {
    let bad = || Failure::usage(format!("cannot parse orders `{s}`; use `a..b` or `a,b,c`"));
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn table(name: &str, orders: &str, cfg: &RunConfig) -> Result<Outcome, Failure> {
    let family = name
        .strip_suffix("-constants")
        .filter(|f| CONSTANT_FAMILIES.contains(f))
        .ok_or_else(|| {
            Failure::usage(format!(
                "unknown table `{name}`; expected one of {}",
                CONSTANT_FAMILIES.map(|f| format!("{f}-constants")).join(", ")
            ))
        })?;
    let mut rows = Vec::new();
    for n in parse_orders(orders)? {
        let p = constants_for(family, n, cfg.precision)?;
        rows.push(json!({
            "order": n,
            "lower_form": p.lower.form.as_ref().map(|f| f.to_string()),
            "lower": to_decimal(&p.lower.numeric()),
            "upper_form": p.upper.form.as_ref().map(|f| f.to_string()),
            "upper": to_decimal(&p.upper.numeric()),
            "exactness": p.exactness().to_string(),
        }));
    }
    Ok(Outcome {
        value: Value::Array(rows),
        code: 0,
        default_format: Format::Csv,
    })
}
