use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gfq::build_field;
use crate::hyper::validate_q;
use crate::limits::Limits;
use crate::numtheory::mult_order;
use crate::polyq::{distinct_degree_profile, enumerate_monic_irreducible, root_order, Poly};

fn check_es(m: u64, t: u64, es: &[u64]) -> Result<()> {
    match es.iter().find(|e| 2 * **e as u128 <= m as u128 * t as u128) {
        Some(&e) => Err(Error::HypothesisViolated { m, t, e }),
        None => Ok(()),
    }
}

// Monic irreducible f != x of degree m, after the size checks for composing
// with x^t.
fn composable_candidates(q: u64, m: u64, t: u64, limits: &Limits) -> Result<impl Iterator<Item = Poly>> {
    let (p, k) = validate_q(q)?;
    if m == 0 || t == 0 {
        return Err(Error::InvalidArgument("m and t must be >= 1".into()));
    }
    limits.check_enum("enumeration size q^m", (q as u128).saturating_pow(m as u32))?;
    limits.check_degree(m.saturating_mul(t))?;
    let field = build_field(p, k)?;
    Ok(enumerate_monic_irreducible(&field, m as usize, limits.max_enum)?.filter(|f| f.constant_term() != 0))
}

/// For each `e` in `es`: how many monic irreducible `f ≠ x` of degree `m` over
/// `F_q` have an irreducible factor of degree `e` in `f(x^t)`, found by
/// composing and factoring every candidate.
pub fn brute_factor_counts(q: u64, m: u64, t: u64, es: &[u64], limits: &Limits) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; es.len()];
    for f in composable_candidates(q, m, t, limits)? {
        let profile = distinct_degree_profile(&f.compose_xt(t as usize))?;
        for (slot, e) in counts.iter_mut().zip(es) {
            if profile.has_degree(*e) {
                *slot += 1;
            }
        }
    }
    Ok(counts)
}

/// The polynomials counted by [`brute_count_factor`], in enumeration order,
/// stopping after `limit` of them.
pub fn qualifying_polynomials(
    q: u64,
    m: u64,
    t: u64,
    e: u64,
    limits: &Limits,
    limit: Option<usize>,
) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for f in composable_candidates(q, m, t, limits)? {
        if limit.is_some_and(|l| out.len() >= l) {
            break;
        }
        if distinct_degree_profile(&f.compose_xt(t as usize))?.has_degree(e) {
            out.push(f);
        }
    }
    Ok(out)
}

pub fn brute_count_factor(q: u64, m: u64, t: u64, e: u64, limits: &Limits) -> Result<u64> {
    Ok(brute_factor_counts(q, m, t, &[e], limits)?[0])
}

/// For each `e > mt/2` in `es`: how many monic irreducible `f ≠ x` of degree
/// `m` satisfy `gcd(q, t) = 1` and `ord_q(|ω| t) = e`, with `|ω|` the order of
/// a root of `f`.
pub fn brute_order_counts(q: u64, m: u64, t: u64, es: &[u64], limits: &Limits) -> Result<Vec<u64>> {
    let (p, k) = validate_q(q)?;
    if m == 0 || t == 0 {
        return Err(Error::InvalidArgument("m and t must be >= 1".into()));
    }
    check_es(m, t, es)?;
    limits.check_enum("enumeration size q^m", (q as u128).saturating_pow(m as u32))?;
    let mut counts = vec![0u64; es.len()];
    if q.gcd(&t) != 1 {
        return Ok(counts);
    }
    let field = build_field(p, k)?;
    let q_big = field.q_big();
    for f in enumerate_monic_irreducible(&field, m as usize, limits.max_enum)? {
        if f.constant_term() == 0 {
            continue;
        }
        let order = mult_order(&q_big, &(root_order(&f)? * t))?.value;
        if let Some(order) = order.to_u64() {
            for (slot, e) in counts.iter_mut().zip(es) {
                if order == *e {
                    *slot += 1;
                }
            }
        }
    }
    Ok(counts)
}

pub fn brute_count_order(q: u64, m: u64, t: u64, e: u64, limits: &Limits) -> Result<u64> {
    Ok(brute_order_counts(q, m, t, &[e], limits)?[0])
}
