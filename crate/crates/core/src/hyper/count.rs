use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::existence::{exists_factor, exists_hyper};
use super::{moebius_sum, q_pow_minus_one, validate_positive, validate_q};
use crate::error::{Error, Result};
use crate::numtheory::{divisors_u64, euler_phi, is_prime_u64, s_coprime_part};

/// Reduction of the almost case `mt/2 < e < mt` to a hyper count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    /// The odd prime `t / gcd(e/m, t)`.
    pub s: u64,
    /// `(t)_{s'}`, the hyper parameter actually counted.
    pub t_reduced: u64,
}

/// Exact count with its bounds.
///
/// `j_set`, `lower_bound` and `upper_bound` belong to the hyper count that was
/// evaluated: for `t` itself when `e = mt`, for `reduction.t_reduced` in the
/// almost case. The bounds are absent when the count is zero by non-existence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub q: u64,
    pub m: u64,
    pub t: u64,
    pub e: u64,
    pub count: BigUint,
    pub lower_bound: Option<BigRational>,
    pub upper_bound: Option<BigRational>,
    pub j_set: Vec<u64>,
    pub reduction: Option<Reduction>,
}

/// `J = { j | m : gcd((q^m - 1)/(q^{m/j} - 1), t) = 1 }`, sorted.
pub fn compute_j(q: u64, m: u64, t: u64) -> Result<Vec<u64>> {
    validate_q(q)?;
    validate_positive("m", m)?;
    validate_positive("t", t)?;
    let qm1 = q_pow_minus_one(q, m);
    let t_big = BigUint::from(t);
    let mut js = Vec::new();
    for j in divisors_u64(m)? {
        let quotient = &qm1 / q_pow_minus_one(q, m / j);
        if quotient.gcd(&t_big) == BigUint::from(1u32) {
            js.push(j);
        }
    }
    Ok(js)
}

/// Number of monic `t`-hyper-irreducible `f ≠ x` of degree `m` over `F_q`:
/// `φ(t)/(mt) · Σ_{j ∈ J} μ(j)(q^{m/j} - 1)`.
///
/// Only defined when such polynomials exist; otherwise returns
/// [`Error::NonExistence`]. Use [`count_almost`] for a total function.
pub fn count_hyper(q: u64, m: u64, t: u64) -> Result<CountReport> {
    if !exists_hyper(q, m, t)?.exists {
        return Err(Error::NonExistence { q, m, t });
    }
    let j_set = compute_j(q, m, t)?;
    let phi_t = BigInt::from(euler_phi(&BigUint::from(t))?);
    let numerator = &phi_t * moebius_sum(q, m, &j_set)?;
    let denominator = BigInt::from(m) * BigInt::from(t);
    let (count, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() {
        return Err(Error::NonIntegralFormula(format!(
            "φ(t)·Σ = {numerator} is not divisible by mt = {denominator}"
        )));
    }
    if !count.is_positive() {
        return Err(Error::InternalInconsistency(format!(
            "existence holds but the formula gives {count} (q={q}, m={m}, t={t})"
        )));
    }
    let span = &phi_t * BigInt::from(q_pow_minus_one(q, m));
    let lower = BigRational::new(span.clone(), BigInt::from(t) * BigInt::from(m + 1));
    let upper = BigRational::new(span, denominator);
    let exact = BigRational::from_integer(count.clone());
    if exact < lower || exact > upper {
        return Err(Error::InternalInconsistency(format!(
            "count {count} outside [{lower}, {upper}] (q={q}, m={m}, t={t})"
        )));
    }
    Ok(CountReport {
        q,
        m,
        t,
        e: m * t,
        count: count.to_biguint().expect("positive"),
        lower_bound: Some(lower),
        upper_bound: Some(upper),
        j_set,
        reduction: None,
    })
}

/// Number of monic irreducible `f ≠ x` of degree `m` over `F_q` such that
/// `f(x^t)` has an irreducible factor of degree `e`, for any `e > mt/2`.
///
/// Zero when the existence criterion fails; the hyper count for `e = mt`;
/// otherwise the hyper count for `(t)_{s'}` with `s = t / gcd(e/m, t)`.
pub fn count_almost(q: u64, m: u64, t: u64, e: u64) -> Result<CountReport> {
    let existence = exists_factor(q, m, t, e)?;
    if !existence.exists {
        return Ok(CountReport {
            q,
            m,
            t,
            e,
            count: BigUint::zero(),
            lower_bound: None,
            upper_bound: None,
            j_set: compute_j(q, m, t)?,
            reduction: None,
        });
    }
    if e == m * t {
        return count_hyper(q, m, t);
    }
    let inconsistent =
        |what: String| Error::InternalInconsistency(format!("{what} (q={q}, m={m}, t={t}, e={e})"));
    if e % m != 0 {
        return Err(inconsistent("m does not divide e".to_string()));
    }
    let s = t / (e / m).gcd(&t);
    if s == 2 || !is_prime_u64(s) {
        return Err(inconsistent(format!("s = {s} is not an odd prime")));
    }
    if (q_pow_minus_one(q, m) % s).is_zero() {
        return Err(inconsistent(format!("s = {s} divides q^m - 1")));
    }
    let t_reduced = s_coprime_part(t, s)?;
    let mut report = count_hyper(q, m, t_reduced).map_err(|err| match err {
        Error::NonExistence { .. } => inconsistent(format!("no {t_reduced}-hyper-irreducibles")),
        other => other,
    })?;
    report.t = t;
    report.e = e;
    report.reduction = Some(Reduction { s, t_reduced });
    Ok(report)
}
