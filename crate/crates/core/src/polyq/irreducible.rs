use std::sync::Arc;

use num_bigint::BigUint;

use super::{raw, Poly};
use crate::error::{Error, Result};
use crate::gfq::Field;
use crate::numtheory::{factor, order_by_stripping};

/// Order of any root of the irreducible `f`, i.e. the order of the class of
/// `x` in `F_q[x]/(f)`, found by stripping primes from `q^m - 1`.
pub fn root_order(f: &Poly) -> Result<BigUint> {
    let Some(m) = f.degree().filter(|d| *d >= 1) else {
        return Err(Error::InvalidArgument("root order needs deg >= 1".into()));
    };
    if f.constant_term() == 0 {
        return Err(Error::ZeroRoot);
    }
    if !f.is_irreducible() {
        return Err(Error::Reducible);
    }
    let field = f.field();
    let g = raw::monic(field, f.coeffs());
    let n = field.q_big().pow(m as u32) - 1u32;
    let n_fac = factor(&n)?;
    let x = raw::x();
    Ok(order_by_stripping(&n, &n_fac, |e| {
        raw::is_one(&raw::powmod(field, &x, e, &g))
    }))
}

/// Every monic irreducible polynomial of degree `m` over `field` (including
/// `x` when `m = 1`), in index order with the constant term varying fastest.
pub fn enumerate_monic_irreducible(
    field: &Arc<Field>,
    m: usize,
    bound: u64,
) -> Result<impl Iterator<Item = Poly>> {
    if m == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    let count = (field.q() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if count > bound as u128 {
        return Err(Error::SizeExceeded {
            what: "enumeration size q^m",
            value: count.to_string(),
            bound: bound.to_string(),
        });
    }
    let field = field.clone();
    Ok((0..count as u64).filter_map(move |index| {
        let f = raw::monic_from_index(&field, index, m);
        raw::is_irreducible(&field, &f).then(|| Poly::from_raw(&field, f))
    }))
}
