//! `hyperirr`: command-line front end.
//!
//! Exit codes: 0 success or affirmative verdict, 1 usage or input error,
//! 2 internal error, 3 negative verdict, 4 cross-check disagreement.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use hyperirr::engine::{EngineRegistry, Provenance, FORMULA};
use hyperirr::hyper::{count_almost, exists_factor, CountReport, ExistenceReport};
use hyperirr::numtheory::mult_order;
use hyperirr::oracle::{qualifying_polynomials, run_sweep, verify_prop_block, GridSpec, SweepCell};
use hyperirr::{Error, Limits};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;
const EXIT_DISAGREE: u8 = 4;

#[derive(Parser)]
#[command(name = "hyperirr", version, about = "Irreducible f over F_q whose f(x^t) has a large irreducible factor")]
struct Cli {
    /// Print a JSON envelope instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether some f of degree m has f(x^t) with a factor of degree e
    Exists {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
        /// Defaults to m*t
        #[arg(long)]
        e: Option<u64>,
    },
    /// Count such f, with bounds and the data behind the formula
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// Defaults to m*t
        #[arg(long)]
        e: Option<u64>,
        /// Also run every brute-force engine and compare
        #[arg(long)]
        brute: bool,
        /// Count with this engine only
        #[arg(long, conflicts_with = "brute")]
        engine: Option<String>,
    },
    /// List the qualifying polynomials, constant term first
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// Defaults to m*t
        #[arg(long)]
        e: Option<u64>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Multiplicative order of a modulo r
    Order {
        #[arg(long)]
        a: String,
        #[arg(long)]
        r: String,
    },
    /// Run the cross-check sweep and write sweep.csv and sweep.json
    Verify {
        /// Grid file, or an inline spec such as "q=2,3 m=1..3 t=1..6"
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check the block matrix characteristic polynomial identity on random matrices
    Blockmat {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: u64,
    },
}

struct Outcome {
    command: &'static str,
    inputs: Value,
    result: Value,
    provenance: &'static str,
    text: String,
    code: u8,
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

fn run(args: impl IntoIterator<Item = OsString>) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let outcome = Limits::from_env().and_then(|limits| dispatch(cli.command, &limits));
    match outcome {
        Ok(out) => {
            let rendered = if cli.json {
                let envelope = json!({
                    "command": out.command,
                    "inputs": out.inputs,
                    "result": out.result,
                    "provenance": out.provenance,
                    "version": env!("CARGO_PKG_VERSION"),
                });
                serde_json::to_string_pretty(&envelope).expect("json values serialize") + "\n"
            } else {
                out.text
            };
            let mut stdout = io::stdout().lock();
            if stdout.write_all(rendered.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return EXIT_INTERNAL;
            }
            out.code
        }
        Err(err) => {
            eprintln!("error: {err}");
            error_code(&err)
        }
    }
}

fn error_code(err: &Error) -> u8 {
    match err {
        Error::InvalidArgument(_)
        | Error::NotPrime(_)
        | Error::NotPrimePower(_)
        | Error::SizeExceeded { .. }
        | Error::NotCoprime { .. }
        | Error::DivisionByZero
        | Error::HypothesisViolated { .. }
        | Error::GridParse(_)
        | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn opt_s<T: ToString>(v: &Option<T>) -> Value {
    v.as_ref().map_or(Value::Null, |v| s(v.to_string()))
}

fn qmte(q: u64, m: u64, t: u64, e: u64) -> Value {
    json!({"q": s(q), "m": s(m), "t": s(t), "e": s(e)})
}

fn dispatch(command: Command, limits: &Limits) -> Result<Outcome, Error> {
    match command {
        Command::Exists { q, m, t, e } => cmd_exists(q, m, t, e),
        Command::Count { q, m, t, e, brute, engine } => cmd_count(q, m, t, e, brute, engine, limits),
        Command::Enumerate { q, m, t, e, limit } => cmd_enumerate(q, m, t, e, limit, limits),
        Command::Order { a, r } => cmd_order(&a, &r),
        Command::Verify { grid, out, jobs } => cmd_verify(grid, out, jobs, limits),
        Command::Blockmat { q, m, t, seed, trials } => cmd_blockmat(q, m, t, seed, trials, limits),
    }
}

fn default_e(m: u64, t: u64, e: Option<u64>) -> Result<u64, Error> {
    match e {
        Some(e) => Ok(e),
        None => m
            .checked_mul(t)
            .ok_or_else(|| Error::InvalidArgument("m*t overflows".into())),
    }
}

fn existence_json(r: &ExistenceReport) -> Value {
    json!({
        "exists": r.exists,
        "gcd_tq": s(r.gcd_tq),
        "order": opt_s(&r.order_value),
        "divisibility": r.divisibility_witness.as_ref().map(|w| json!({
            "divisor": s(w.value),
            "divides_q_pow_m_minus_1": w.divides,
        })),
    })
}

fn cmd_exists(q: u64, m: u64, t: u64, e: Option<u64>) -> Result<Outcome, Error> {
    let e = default_e(m, t, e)?;
    let r = exists_factor(q, m, t, e)?;
    let mut text = format!("q={q} m={m} t={t} e={e}\n");
    text += &format!("gcd(t, q) = {}\n", r.gcd_tq);
    match &r.order_value {
        Some(o) => text += &format!("order of q modulo (q^m-1)t = {o}\n"),
        None => text += "order of q modulo (q^m-1)t undefined (t and q not coprime)\n",
    }
    if let Some(w) = &r.divisibility_witness {
        let verb = if w.divides { "divides" } else { "does not divide" };
        text += &format!("{} {verb} q^m-1\n", w.value);
    }
    text += if r.exists { "exists\n" } else { "does not exist\n" };
    Ok(Outcome {
        command: "exists",
        inputs: qmte(q, m, t, e),
        result: existence_json(&r),
        provenance: "formula",
        text,
        code: if r.exists { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn count_json(r: &CountReport) -> Value {
    json!({
        "count": s(&r.count),
        "lower_bound": opt_s(&r.lower_bound),
        "upper_bound": opt_s(&r.upper_bound),
        "j_set": r.j_set.iter().map(s).collect::<Vec<_>>(),
        "reduction": r.reduction.map(|red| json!({"s": s(red.s), "t_reduced": s(red.t_reduced)})),
    })
}

fn count_text(r: &CountReport) -> String {
    let mut text = format!("count: {}\n", r.count);
    if let (Some(lo), Some(hi)) = (&r.lower_bound, &r.upper_bound) {
        text += &format!("bounds: {lo} <= count <= {hi}\n");
    }
    let js: Vec<String> = r.j_set.iter().map(u64::to_string).collect();
    text += &format!("J: {{{}}}\n", js.join(","));
    if let Some(red) = r.reduction {
        text += &format!("reduction: s={}, t reduced to {}\n", red.s, red.t_reduced);
    }
    text
}

fn cmd_count(
    q: u64,
    m: u64,
    t: u64,
    e: Option<u64>,
    brute: bool,
    engine: Option<String>,
    limits: &Limits,
) -> Result<Outcome, Error> {
    let e = default_e(m, t, e)?;
    let registry = EngineRegistry::standard(*limits);
    let inputs = qmte(q, m, t, e);
    if let Some(name) = engine {
        let engine = registry.require(&name)?;
        let count = engine.count(q, m, t, e)?;
        return Ok(Outcome {
            command: "count",
            inputs,
            result: json!({"engine": engine.name(), "count": s(&count)}),
            provenance: match engine.provenance() {
                Provenance::Formula => "formula",
                Provenance::BruteForce => "brute-force",
            },
            text: format!("count ({}): {count}\n", engine.name()),
            code: EXIT_OK,
        });
    }
    let report = count_almost(q, m, t, e)?;
    let mut result = count_json(&report);
    let mut text = count_text(&report);
    let mut code = EXIT_OK;
    let mut provenance = "formula";
    if brute {
        provenance = "both";
        let mut engines = Map::new();
        let mut agree = true;
        for engine in registry.iter().filter(|en| en.name() != FORMULA) {
            let count = engine.count(q, m, t, e)?;
            agree &= count == report.count;
            text += &format!("{}: {count}\n", engine.name());
            engines.insert(engine.name().to_string(), s(&count));
        }
        text += if agree { "all engines agree\n" } else { "ENGINES DISAGREE\n" };
        result["brute"] = Value::Object(engines);
        result["agree"] = Value::Bool(agree);
        if !agree {
            code = EXIT_DISAGREE;
        }
    }
    Ok(Outcome { command: "count", inputs, result, provenance, text, code })
}

fn cmd_enumerate(
    q: u64,
    m: u64,
    t: u64,
    e: Option<u64>,
    limit: Option<usize>,
    limits: &Limits,
) -> Result<Outcome, Error> {
    let e = default_e(m, t, e)?;
    // one extra tells whether the limit cut the listing short
    let mut polys = qualifying_polynomials(q, m, t, e, limits, limit.map(|l| l.saturating_add(1)))?;
    let truncated = limit.is_some_and(|l| polys.len() > l);
    if let Some(l) = limit {
        polys.truncate(l);
    }
    let listed: Vec<String> = polys.iter().map(|f| f.to_string()).collect();
    let mut text: String = listed.iter().map(|p| format!("{p}\n")).collect();
    text += &format!("{} listed{}\n", listed.len(), if truncated { " (limit reached)" } else { "" });
    let mut inputs = qmte(q, m, t, e);
    inputs["limit"] = opt_s(&limit);
    Ok(Outcome {
        command: "enumerate",
        inputs,
        result: json!({"polynomials": listed, "listed": s(listed.len()), "truncated": truncated}),
        provenance: "brute-force",
        text,
        code: EXIT_OK,
    })
}

fn parse_big(name: &str, v: &str) -> Result<BigUint, Error> {
    v.trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("--{name} must be a non-negative integer, got {v:?}")))
}

fn cmd_order(a: &str, r: &str) -> Result<Outcome, Error> {
    let (a, r) = (parse_big("a", a)?, parse_big("r", r)?);
    let order = mult_order(&a, &r)?.value;
    Ok(Outcome {
        command: "order",
        inputs: json!({"a": s(&a), "r": s(&r)}),
        result: json!({"order": s(&order)}),
        provenance: "formula",
        text: format!("{order}\n"),
        code: EXIT_OK,
    })
}

fn cell_json(c: &SweepCell) -> Value {
    c.to_json(false)
}

fn cmd_verify(grid: Option<String>, out: PathBuf, jobs: Option<usize>, limits: &Limits) -> Result<Outcome, Error> {
    let grid = match grid {
        None => GridSpec::default_grid(),
        Some(g) if std::path::Path::new(&g).is_file() => fs::read_to_string(&g)?.parse()?,
        Some(g) => g.parse()?,
    };
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let registry = EngineRegistry::standard(*limits);
    let report = run_sweep(&grid, &registry, jobs)?;
    fs::create_dir_all(&out)?;
    report.write_csv(fs::File::create(out.join("sweep.csv"))?)?;
    report.write_json(fs::File::create(out.join("sweep.json"))?)?;

    let disagreements = report.disagreements();
    let errors = report.errors();
    let mut text = format!(
        "{} cells, {} agree, {} disagree, {} errors\n",
        report.cells.len(),
        report.agreed(),
        disagreements.len(),
        errors.len()
    );
    for c in &disagreements {
        text += &format!(
            "disagreement q={} m={} t={} e={}: formula {} brute-factor {} brute-order {}\n",
            c.q,
            c.m,
            c.t,
            c.e,
            c.formula.as_ref().map_or("-".into(), |v| v.to_string()),
            c.brute_factor.as_ref().map_or("-".into(), |v| v.to_string()),
            c.brute_order.as_ref().map_or("-".into(), |v| v.to_string()),
        );
    }
    for c in &errors {
        text += &format!("error q={} m={} t={} e={}: {}\n", c.q, c.m, c.t, c.e, c.error.as_deref().unwrap_or(""));
    }
    text += &format!("reports written to {}\n", out.display());
    let code = if !disagreements.is_empty() {
        EXIT_DISAGREE
    } else if !errors.is_empty() {
        EXIT_INTERNAL
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        command: "verify",
        // the output directory and job count do not affect the result
        inputs: json!({"grid": grid.to_string()}),
        result: json!({
            "cells": s(report.cells.len()),
            "agree": s(report.agreed()),
            "disagreements": disagreements.iter().map(|c| cell_json(c)).collect::<Vec<_>>(),
            "errors": errors.iter().map(|c| cell_json(c)).collect::<Vec<_>>(),
        }),
        provenance: "both",
        text,
        code,
    })
}

fn cmd_blockmat(q: u64, m: u64, t: u64, seed: u64, trials: u64, limits: &Limits) -> Result<Outcome, Error> {
    let mut failed = Vec::new();
    for i in 0..trials {
        let s_i = seed.wrapping_add(i);
        if !verify_prop_block(q, m, t, s_i, limits)? {
            failed.push(s_i);
        }
    }
    let mut text = String::new();
    for f in &failed {
        text += &format!("seed {f}: characteristic polynomial mismatch\n");
    }
    text += &format!("{}/{trials} trials passed\n", trials - failed.len() as u64);
    let mut inputs = json!({"q": s(q), "m": s(m), "t": s(t)});
    inputs["seed"] = s(seed);
    inputs["trials"] = s(trials);
    Ok(Outcome {
        command: "blockmat",
        inputs,
        result: json!({
            "passed": s(trials - failed.len() as u64),
            "failed_seeds": failed.iter().map(s).collect::<Vec<_>>(),
        }),
        provenance: "brute-force",
        text,
        code: if failed.is_empty() { EXIT_OK } else { EXIT_DISAGREE },
    })
}
