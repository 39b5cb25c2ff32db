use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{q_pow_minus_one, validate_positive, validate_q};
use crate::error::{Error, Result};
use crate::numtheory::{factor_u64, mult_order};

/// The divisibility form of the hyper case: whether `gcd(t, 4) · ∏ t_i`
/// (the `t_i` being the distinct odd primes of `t`) divides `q^m - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityWitness {
    pub value: u64,
    pub divides: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceReport {
    pub q: u64,
    pub m: u64,
    pub t: u64,
    pub e: u64,
    pub gcd_tq: u64,
    /// `ord_q((q^m - 1) t)`, present when `gcd(t, q) = 1`.
    pub order_value: Option<BigUint>,
    pub exists: bool,
    /// Present only in the hyper case `e = mt`.
    pub divisibility_witness: Option<DivisibilityWitness>,
}

/// `gcd(t, 4)` times the product of the distinct odd primes dividing `t`.
pub fn hyper_divisor(t: u64) -> Result<u64> {
    let odd_radical: u64 = factor_u64(t)?
        .primes()
        .map(|p| p.to_u64().expect("prime factor of a u64"))
        .filter(|p| *p != 2)
        .product();
    Ok(t.gcd(&4) * odd_radical)
}

/// Whether some irreducible `f` of degree `m` over `F_q` has `f(x^t)` with an
/// irreducible factor of degree `e`, decided by `gcd(t, q) = 1` and
/// `ord_q((q^m - 1) t) = e`. Requires `e > mt/2`.
pub fn exists_factor(q: u64, m: u64, t: u64, e: u64) -> Result<ExistenceReport> {
    validate_q(q)?;
    validate_positive("m", m)?;
    validate_positive("t", t)?;
    validate_positive("e", e)?;
    if 2 * e as u128 <= m as u128 * t as u128 {
        return Err(Error::HypothesisViolated { m, t, e });
    }
    let gcd_tq = t.gcd(&q);
    let qm1 = q_pow_minus_one(q, m);
    let order_value = if gcd_tq == 1 {
        Some(mult_order(&BigUint::from(q), &(&qm1 * t))?.value)
    } else {
        None
    };
    let exists = order_value.as_ref() == Some(&BigUint::from(e));
    let divisibility_witness = if e as u128 == m as u128 * t as u128 {
        let value = hyper_divisor(t)?;
        let divides = (&qm1 % value).is_zero();
        if divides != exists {
            return Err(Error::InternalInconsistency(format!(
                "order form says {exists} but {value} | q^m - 1 is {divides} (q={q}, m={m}, t={t})"
            )));
        }
        Some(DivisibilityWitness { value, divides })
    } else {
        None
    };
    Ok(ExistenceReport {
        q,
        m,
        t,
        e,
        gcd_tq,
        order_value,
        exists,
        divisibility_witness,
    })
}

/// Whether a `t`-hyper-irreducible polynomial of degree `m` exists over `F_q`.
/// Both the order form and the divisibility form are evaluated and must agree.
pub fn exists_hyper(q: u64, m: u64, t: u64) -> Result<ExistenceReport> {
    validate_positive("m", m)?;
    validate_positive("t", t)?;
    let e = m
        .checked_mul(t)
        .ok_or_else(|| Error::InvalidArgument("m*t overflows".into()))?;
    exists_factor(q, m, t, e)
}
