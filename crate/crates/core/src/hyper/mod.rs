//! Closed-form existence and counting for almost `t`-hyper-irreducible
//! polynomials.
//!
//! A monic irreducible `f ≠ x` of degree `m` over `F_q` is *almost
//! `t`-hyper-irreducible* for `e` when `f(x^t)` has an irreducible factor of
//! degree `e > mt/2`, and *`t`-hyper-irreducible* when that factor is all of
//! `f(x^t)` (`e = mt`).

mod count;
mod existence;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{divisors_u64, is_prime_power, moebius, pow_u64};

pub use count::{compute_j, count_almost, count_hyper, CountReport, Reduction};
pub use existence::{
    exists_factor, exists_hyper, hyper_divisor, DivisibilityWitness, ExistenceReport,
};

/// Rejects `q` unless it is a prime power; returns `(p, k)` with `q = p^k`.
pub fn validate_q(q: u64) -> Result<(u64, u32)> {
    is_prime_power(q).ok_or_else(|| Error::NotPrimePower(q.to_string()))
}

pub(crate) fn validate_positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be >= 1")));
    }
    if v > u32::MAX as u64 {
        return Err(Error::InvalidArgument(format!("{name} = {v} is too large")));
    }
    Ok(())
}

/// `q^n - 1`.
pub(crate) fn q_pow_minus_one(q: u64, n: u64) -> BigUint {
    pow_u64(q, n) - 1u32
}

/// `Σ_{j ∈ js} μ(j) (q^{m/j} - 1)`.
pub(crate) fn moebius_sum(q: u64, m: u64, js: &[u64]) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for &j in js {
        let mu = moebius(j)?;
        if mu != 0 {
            sum += BigInt::from(mu) * BigInt::from(q_pow_minus_one(q, m / j));
        }
    }
    Ok(sum)
}

/// Number of monic irreducible polynomials `f ≠ x` of degree `m` over `F_q`:
/// `(1/m) Σ_{d | m} μ(d) (q^{m/d} - 1)`.
pub fn gauss_count(q: u64, m: u64) -> Result<BigUint> {
    validate_q(q)?;
    validate_positive("m", m)?;
    let sum = moebius_sum(q, m, &divisors_u64(m)?)?;
    let (quot, rem) = sum.div_rem(&BigInt::from(m));
    if !rem.is_zero() {
        return Err(Error::NonIntegralFormula(format!(
            "Σ μ(d)(q^(m/d) - 1) = {sum} is not divisible by m = {m}"
        )));
    }
    quot.to_biguint()
        .ok_or_else(|| Error::InternalInconsistency(format!("negative count {quot}")))
}
