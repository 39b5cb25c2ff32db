use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::engine::{CountEngine, EngineRegistry, BRUTE_FACTOR, BRUTE_ORDER, FORMULA};
use crate::error::{Error, Result};
use crate::numtheory::is_prime_power;

/// One grid line: `q=<list> m=<list> t=<list>`, each list a comma-separated mix
/// of values and `a..b` ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRow {
    pub qs: Vec<u64>,
    pub ms: Vec<u64>,
    pub ts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub rows: Vec<GridRow>,
}

fn parse_list(key: &str, text: &str, prime_powers: bool) -> Result<Vec<u64>> {
    let bad = |msg: String| Error::GridParse(format!("{key}={text}: {msg}"));
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad(format!("{s:?} is not an integer")));
    let mut out = BTreeSet::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        if let Some((a, b)) = item.split_once("..") {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(bad(format!("empty range {a}..{b}")));
            }
            if b - a > 1_000_000 {
                return Err(bad("range too long".into()));
            }
            // a range of q silently skips non prime powers
            out.extend((a..=b).filter(|v| !prime_powers || is_prime_power(*v).is_some()));
        } else {
            let v = num(item)?;
            if prime_powers && is_prime_power(v).is_none() {
                return Err(bad(format!("{v} is not a prime power")));
            }
            out.insert(v);
        }
    }
    if out.contains(&0) {
        return Err(bad("values must be positive".into()));
    }
    if out.is_empty() {
        return Err(bad("no values".into()));
    }
    Ok(out.into_iter().collect())
}

impl FromStr for GridRow {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let (mut qs, mut ms, mut ts) = (None, None, None);
        for token in line.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::GridParse(format!("expected key=value, got {token:?}")))?;
            let slot = match key {
                "q" => &mut qs,
                "m" => &mut ms,
                "t" => &mut ts,
                _ => return Err(Error::GridParse(format!("unknown key {key:?}"))),
            };
            if slot.is_some() {
                return Err(Error::GridParse(format!("duplicate key {key:?}")));
            }
            *slot = Some(parse_list(key, value, key == "q")?);
        }
        let missing = |k: &str| Error::GridParse(format!("line {line:?} is missing {k}="));
        Ok(GridRow {
            qs: qs.ok_or_else(|| missing("q"))?,
            ms: ms.ok_or_else(|| missing("m"))?,
            ts: ts.ok_or_else(|| missing("t"))?,
        })
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    /// Lines (or `;`-separated segments); `#` starts a comment.
    fn from_str(text: &str) -> Result<Self> {
        let rows = text
            .split(['\n', ';'])
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<GridRow>>>()?;
        if rows.is_empty() {
            return Err(Error::GridParse("empty grid".into()));
        }
        Ok(GridSpec { rows })
    }
}

impl GridSpec {
    /// Prime powers q ≤ 9, m ≤ 4, t ≤ 10.
    pub fn default_grid() -> Self {
        "q=2..9 m=1..4 t=1..10".parse().expect("default grid parses")
    }

    /// Distinct `(q, m, t)` triples in ascending order.
    pub fn triples(&self) -> Vec<(u64, u64, u64)> {
        let mut set = BTreeSet::new();
        for row in &self.rows {
            for &q in &row.qs {
                for &m in &row.ms {
                    for &t in &row.ts {
                        set.insert((q, m, t));
                    }
                }
            }
        }
        set.into_iter().collect()
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "q={} m={} t={}", join(&row.qs), join(&row.ms), join(&row.ts))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCell {
    pub q: u64,
    pub m: u64,
    pub t: u64,
    pub e: u64,
    pub formula: Option<BigUint>,
    pub brute_factor: Option<BigUint>,
    pub brute_order: Option<BigUint>,
    /// All three counts present and equal.
    pub agree: bool,
    /// This cell's share of the wall time spent on its `(q, m, t)` group.
    pub elapsed: Duration,
    pub error: Option<String>,
}

impl SweepCell {
    pub fn is_disagreement(&self) -> bool {
        self.error.is_none() && !self.agree
    }

    fn count_str(c: &Option<BigUint>) -> String {
        c.as_ref().map(BigUint::to_string).unwrap_or_default()
    }

    fn ms(&self) -> String {
        format!("{:.3}", self.elapsed.as_secs_f64() * 1e3)
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        let count = |c: &Option<BigUint>| c.as_ref().map_or(Value::Null, |v| Value::String(v.to_string()));
        let mut v = json!({
            "q": self.q.to_string(),
            "m": self.m.to_string(),
            "t": self.t.to_string(),
            "e": self.e.to_string(),
            "formula": count(&self.formula),
            "brute_factor": count(&self.brute_factor),
            "brute_order": count(&self.brute_order),
            "agree": self.agree,
            "error": self.error,
        });
        if with_timing {
            v["ms"] = Value::String(self.ms());
        }
        v
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub cells: Vec<SweepCell>,
}

impl SweepReport {
    pub fn agreed(&self) -> usize {
        self.cells.iter().filter(|c| c.agree).count()
    }

    pub fn disagreements(&self) -> Vec<&SweepCell> {
        self.cells.iter().filter(|c| c.is_disagreement()).collect()
    }

    pub fn errors(&self) -> Vec<&SweepCell> {
        self.cells.iter().filter(|c| c.error.is_some()).collect()
    }

    pub fn all_agree(&self) -> bool {
        self.cells.iter().all(|c| c.agree)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["q", "m", "t", "e", "formula", "brute_factor", "brute_order", "agree", "ms"])?;
        for c in &self.cells {
            w.write_record([
                c.q.to_string(),
                c.m.to_string(),
                c.t.to_string(),
                c.e.to_string(),
                SweepCell::count_str(&c.formula),
                SweepCell::count_str(&c.brute_factor),
                SweepCell::count_str(&c.brute_order),
                c.agree.to_string(),
                c.ms(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        Value::Array(self.cells.iter().map(|c| c.to_json(with_timing)).collect())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json(true))?;
        writeln!(out)?;
        Ok(())
    }
}

fn run_group(q: u64, m: u64, t: u64, engines: &[&dyn CountEngine; 3]) -> Vec<SweepCell> {
    let es: Vec<u64> = (m * t / 2 + 1..=m * t).collect();
    let start = Instant::now();
    let mut results: Vec<Option<Vec<BigUint>>> = Vec::with_capacity(3);
    let mut errors = Vec::new();
    for engine in engines {
        match engine.count_many(q, m, t, &es) {
            Ok(v) => results.push(Some(v)),
            Err(err) => {
                errors.push(format!("{}: {err}", engine.name()));
                results.push(None);
            }
        }
    }
    let share = start.elapsed() / es.len().max(1) as u32;
    let error = (!errors.is_empty()).then(|| errors.join("; "));
    es.iter()
        .enumerate()
        .map(|(i, &e)| {
            let pick = |r: &Option<Vec<BigUint>>| r.as_ref().map(|v| v[i].clone());
            let (formula, brute_factor, brute_order) = (pick(&results[0]), pick(&results[1]), pick(&results[2]));
            let agree = matches!((&formula, &brute_factor, &brute_order),
                (Some(a), Some(b), Some(c)) if a == b && b == c);
            SweepCell { q, m, t, e, formula, brute_factor, brute_order, agree, elapsed: share, error: error.clone() }
        })
        .collect()
}

/// Evaluates every `(q, m, t)` of the grid and every `e` with `mt/2 < e ≤ mt`
/// on the formula and both brute-force engines. Engine failures are recorded on
/// the affected cells; the sweep itself only fails if the registry lacks an
/// engine or the worker pool cannot start. Output order is the grid order
/// regardless of `jobs`.
pub fn run_sweep(grid: &GridSpec, registry: &EngineRegistry, jobs: usize) -> Result<SweepReport> {
    let engines = [registry.require(FORMULA)?, registry.require(BRUTE_FACTOR)?, registry.require(BRUTE_ORDER)?];
    let triples = grid.triples();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InternalInconsistency(format!("worker pool: {e}")))?;
    let groups: Vec<Vec<SweepCell>> = pool.install(|| {
        triples
            .par_iter()
            .map(|&(q, m, t)| run_group(q, m, t, &engines))
            .collect()
    });
    Ok(SweepReport { cells: groups.into_iter().flatten().collect() })
}
