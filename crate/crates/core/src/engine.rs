//! Interchangeable counting engines behind one trait, looked up by name.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::count_almost;
use crate::limits::Limits;
use crate::oracle::{brute_factor_counts, brute_order_counts};

pub const FORMULA: &str = "formula";
pub const BRUTE_FACTOR: &str = "brute-factor";
pub const BRUTE_ORDER: &str = "brute-order";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Formula,
    BruteForce,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Formula => "formula",
            Provenance::BruteForce => "brute-force",
        })
    }
}

/// Counts monic irreducible `f ≠ x` of degree `m` over `F_q` such that
/// `f(x^t)` has an irreducible factor of degree `e`, for `mt/2 < e ≤ mt`.
pub trait CountEngine: Send + Sync {
    fn name(&self) -> &'static str;
    fn provenance(&self) -> Provenance;
    fn description(&self) -> &'static str;

    fn count_many(&self, q: u64, m: u64, t: u64, es: &[u64]) -> Result<Vec<BigUint>>;

    fn count(&self, q: u64, m: u64, t: u64, e: u64) -> Result<BigUint> {
        Ok(self.count_many(q, m, t, &[e])?.swap_remove(0))
    }
}

pub struct FormulaEngine;

impl CountEngine for FormulaEngine {
    fn name(&self) -> &'static str {
        FORMULA
    }
    fn provenance(&self) -> Provenance {
        Provenance::Formula
    }
    fn description(&self) -> &'static str {
        "closed Moebius-sum formula with the almost-case reduction"
    }
    fn count_many(&self, q: u64, m: u64, t: u64, es: &[u64]) -> Result<Vec<BigUint>> {
        es.iter().map(|&e| Ok(count_almost(q, m, t, e)?.count)).collect()
    }
}

pub struct BruteFactorEngine {
    pub limits: Limits,
}

impl CountEngine for BruteFactorEngine {
    fn name(&self) -> &'static str {
        BRUTE_FACTOR
    }
    fn provenance(&self) -> Provenance {
        Provenance::BruteForce
    }
    fn description(&self) -> &'static str {
        "enumerate irreducibles, factor f(x^t) by distinct degrees"
    }
    fn count_many(&self, q: u64, m: u64, t: u64, es: &[u64]) -> Result<Vec<BigUint>> {
        if let Some(&e) = es.iter().find(|e| 2 * **e as u128 <= m as u128 * t as u128) {
            return Err(Error::HypothesisViolated { m, t, e });
        }
        Ok(brute_factor_counts(q, m, t, es, &self.limits)?.into_iter().map(BigUint::from).collect())
    }
}

pub struct BruteOrderEngine {
    pub limits: Limits,
}

impl CountEngine for BruteOrderEngine {
    fn name(&self) -> &'static str {
        BRUTE_ORDER
    }
    fn provenance(&self) -> Provenance {
        Provenance::BruteForce
    }
    fn description(&self) -> &'static str {
        "enumerate irreducibles, compare ord_q(root order * t) with e"
    }
    fn count_many(&self, q: u64, m: u64, t: u64, es: &[u64]) -> Result<Vec<BigUint>> {
        Ok(brute_order_counts(q, m, t, es, &self.limits)?.into_iter().map(BigUint::from).collect())
    }
}

/// Engines in registration order.
#[derive(Default)]
pub struct EngineRegistry {
    engines: Vec<Box<dyn CountEngine>>,
}

impl EngineRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The three built-in engines.
    pub fn standard(limits: Limits) -> Self {
        let mut reg = Self::new();
        reg.register(Box::new(FormulaEngine)).unwrap();
        reg.register(Box::new(BruteFactorEngine { limits })).unwrap();
        reg.register(Box::new(BruteOrderEngine { limits })).unwrap();
        reg
    }

    pub fn register(&mut self, engine: Box<dyn CountEngine>) -> Result<()> {
        if self.get(engine.name()).is_some() {
            return Err(Error::InvalidArgument(format!(
                "engine {:?} already registered",
                engine.name()
            )));
        }
        self.engines.push(engine);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn CountEngine> {
        self.engines.iter().find(|e| e.name() == name).map(|e| e.as_ref())
    }

    pub fn require(&self, name: &str) -> Result<&dyn CountEngine> {
        self.get(name).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "unknown engine {name:?}; available: {}",
                self.names().join(", ")
            ))
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.engines.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn CountEngine> {
        self.engines.iter().map(|e| e.as_ref())
    }
}
