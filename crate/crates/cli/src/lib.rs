//! Command-line front end: the claim registry, batch reports, parameter
//! search and ad hoc closures.

pub mod claims;
pub mod report;
pub mod suites;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twothree_core::engine::{closure_with, ClosureOptions, DEFAULT_CAP};
use twothree_core::paperlib::{build, search_params, Target};
use twothree_core::{Error, Field, FieldPoly, Matrix};

use claims::{is_cap_failure, registry, select, RunOptions};
use report::RunReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "twothree", version, about = "Verify (2,3)-generation claims for SL_n(q) and SU_n(q^2), n = 3, 5")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Field as p^m, optionally with a modulus c0,...,cm: 3^2/2,2,1
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Maximum closure size
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Recorded in reports; every computation is deterministic
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Include the slow claims in `verify all`
    #[arg(long, global = true)]
    pub slow: bool,
    /// Write the JSON output here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write a markdown report here
    #[arg(long, global = true, value_name = "PATH")]
    pub md: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run claims by id, or `all`
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
    },
    /// Search for a generating parameter
    Search {
        #[arg(long)]
        target: TargetArg,
        /// q for SL, or the q with field GF(q^2) for SU
        #[arg(long)]
        q: u64,
        /// Restrict to parameters of this multiplicative order
        #[arg(long)]
        order: Option<u64>,
    },
    /// Enumerate the group generated by matrices read from JSON files
    Closure {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// List the registered claims
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TargetArg {
    Sl3,
    Su3,
    Sl5,
    Su5,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Sl3 => Target::Sl3,
            TargetArg::Su3 => Target::Su3,
            TargetArg::Sl5 => Target::Sl5,
            TargetArg::Su5 => Target::Su5,
        }
    }
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::ClosureCapExceeded { .. } | Error::CapExceeded(_) => EXIT_CAP,
            Error::Parse(_)
            | Error::FieldMismatch(_)
            | Error::DimensionMismatch(_)
            | Error::BadModulus(_)
            | Error::NotPrime(_)
            | Error::NotPrimePower(_)
            | Error::NotSquareField { .. }
            | Error::FieldTooLarge { .. }
            | Error::EncodingOverflow { .. }
            | Error::Precondition(_) => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(cli: &Cli) -> Result<i32, Failure> {
    let g = &cli.global;
    if g.threads > 0 {
        // a second call in one process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(g.threads).build_global();
    }
    match &cli.command {
        Command::Verify { ids } => verify(g, ids),
        Command::Search { target, q, order } => search(g, (*target).into(), *q, *order),
        Command::Closure { files } => closure_cmd(g, files),
        Command::List => {
            let mut out = String::new();
            for c in registry() {
                let slow = if c.slow { " (slow)" } else { "" };
                out.push_str(&format!("{:<20} {}{slow}\n", c.id, c.description));
            }
            emit_text(&out);
            Ok(EXIT_OK)
        }
    }
}

fn options(g: &Global) -> RunOptions {
    RunOptions { cap: g.cap, seed: g.seed, threads: rayon::current_num_threads(), slow: g.slow }
}

fn verify(g: &Global, ids: &[String]) -> Result<i32, Failure> {
    let reg = registry();
    let chosen = select(&reg, ids, g.slow).map_err(Failure::usage)?;
    let opts = options(g);
    let mut report = RunReport::new(opts);
    let mut cap_only = true;
    for claim in chosen {
        let r = claim.run(&opts);
        eprintln!("{:<20} {} ({:.1} s)", claim.id, if r.passed { "pass" } else { "FAIL" }, r.elapsed_ms / 1e3);
        if !r.passed && !is_cap_failure(&r) {
            cap_only = false;
        }
        report.push(claim, r);
    }
    write_json(g, &report.to_json())?;
    if let Some(path) = &g.md {
        write_file(path, &report.to_markdown())?;
    }
    Ok(match (report.passed, cap_only) {
        (true, _) => EXIT_OK,
        (false, true) => EXIT_CAP,
        (false, false) => EXIT_FAILED,
    })
}

fn parameter_field(g: &Global, target: Target, q: u64) -> Result<Field, Failure> {
    let natural = target.parameter_field(q)?;
    match &g.field {
        None => Ok(natural),
        Some(s) => {
            let f = Field::parse(s)?;
            if f.q() != natural.q() {
                return Err(Failure::usage(format!("--field {s} has order {}, expected {}", f.q(), natural.q())));
            }
            Ok(f)
        }
    }
}

/// Minimal polynomial of `a` over the prime field.
fn minimal_polynomial(f: &Field, a: twothree_core::Elem) -> Result<FieldPoly, Failure> {
    let mut conj = vec![a];
    loop {
        let next = f.pow(*conj.last().expect("nonempty"), f.p());
        if next == a {
            break;
        }
        conj.push(next);
    }
    let prime = Field::prime(f.p())?;
    let poly = FieldPoly::from_roots(f, &conj);
    Ok(poly.map_coeffs(&prime, |c| prime.elem(c.index()).expect("coefficient in the prime field")))
}

fn search(g: &Global, target: Target, q: u64, order: Option<u64>) -> Result<i32, Failure> {
    let f = parameter_field(g, target, q)?;
    let hit = search_params(target, &f, order)?;
    let out = match hit {
        None => json!({ "target": format!("{target:?}"), "q": q, "field": f.to_string(), "result": "none" }),
        Some(hit) => {
            let pair = build(&f, hit.params)?;
            let (param, minpoly) = match hit.parameter {
                Some(v) => (Value::String(f.format_elem(v)), Value::String(minimal_polynomial(&f, v)?.to_string())),
                None => (Value::Null, Value::Null),
            };
            json!({
                "target": format!("{target:?}"),
                "q": q,
                "field": f.to_string(),
                "result": "found",
                "parameter": param,
                "minimal_polynomial": minpoly,
                "params": hit.params.to_json(&f),
                "x": pair.gens()[0].to_json(),
                "y": pair.gens()[1].to_json(),
                "conditions": hit.report,
            })
        }
    };
    write_json(g, &serde_json::to_string_pretty(&out).expect("json"))?;
    Ok(EXIT_OK)
}

/// Matrices from one JSON document: a matrix, an array of matrices, or an
/// object with `x` and `y` members.
fn matrices_in(v: &Value, field: Option<&Field>) -> Result<Vec<Matrix>, Failure> {
    let one = |m: &Value| -> Result<Matrix, Failure> {
        Ok(match field {
            Some(f) => Matrix::from_json_in(f, m)?,
            None => Matrix::from_json(m)?,
        })
    };
    match v {
        Value::Array(items) => items.iter().map(one).collect(),
        Value::Object(o) if o.contains_key("rows") => Ok(vec![one(v)?]),
        Value::Object(o) if o.contains_key("x") && o.contains_key("y") => Ok(vec![one(&o["x"])?, one(&o["y"])?]),
        _ => Err(Failure::usage("expected a matrix, an array of matrices, or {\"x\", \"y\"}")),
    }
}

fn closure_cmd(g: &Global, files: &[PathBuf]) -> Result<i32, Failure> {
    let field = g.field.as_deref().map(Field::parse).transpose()?;
    let mut gens = Vec::new();
    for path in files {
        let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let v: Value =
            serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        gens.extend(matrices_in(&v, field.as_ref())?);
    }
    let res = closure_with(&gens, ClosureOptions::with_cap(g.cap))?;
    let out = json!({
        "generators": gens.len(),
        "field": gens[0].field().to_string(),
        "n": gens[0].n(),
        "order": res.order,
        "scalar_subgroup_order": res.scalar_subgroup_order,
        "projective_order": res.projective_order(),
        "truncated": res.truncated,
        "cap": g.cap,
    });
    write_json(g, &serde_json::to_string_pretty(&out).expect("json"))?;
    Ok(if res.truncated { EXIT_CAP } else { EXIT_OK })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_json(g: &Global, text: &str) -> Result<(), Failure> {
    match &g.json {
        Some(path) => write_file(path, text),
        None => {
            emit_text(text);
            emit_text("\n");
            Ok(())
        }
    }
}

fn emit_text(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}
