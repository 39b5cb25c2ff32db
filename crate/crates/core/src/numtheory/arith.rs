use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::factor::{factor, factor_u64};
use super::prime::is_prime_u64;
use crate::error::{Error, Result};

pub fn moebius(n: u64) -> Result<i8> {
    let f = factor_u64(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.pairs().len() % 2 == 0 { 1 } else { -1 })
}

pub fn euler_phi(n: &BigUint) -> Result<BigUint> {
    Ok(factor(n)?.euler_phi())
}

pub fn carmichael(n: &BigUint) -> Result<BigUint> {
    Ok(factor(n)?.carmichael())
}

/// `(t)_s`: the largest power of the prime `s` dividing `t`.
pub fn s_part(t: u64, s: u64) -> Result<u64> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    if !is_prime_u64(s) {
        return Err(Error::NotPrime(s.to_string()));
    }
    let mut part = 1;
    let mut rest = t;
    while rest % s == 0 {
        rest /= s;
        part *= s;
    }
    Ok(part)
}

/// `(t)_{s'} = t / (t)_s`.
pub fn s_coprime_part(t: u64, s: u64) -> Result<u64> {
    Ok(t / s_part(t, s)?)
}

pub fn divisors_u64(n: u64) -> Result<Vec<u64>> {
    Ok(factor_u64(n)?
        .divisors()
        .iter()
        .map(|d| d.to_u64().expect("divisor of a u64 fits in u64"))
        .collect())
}

pub fn pow_u64(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp.try_into().expect("exponent fits in u32"))
}
