use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::prime::{is_prime, is_prime_u64, mul_mod};
use crate::error::{Error, Result};

const TRIAL_BOUND: u32 = 1_000_000;

static SMALL_PRIMES: Lazy<Vec<u32>> = Lazy::new(|| {
    let n = TRIAL_BOUND as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
});

// Only inputs past 64 bits are worth remembering; everything smaller factors
// in microseconds.
static CACHE: Lazy<Mutex<HashMap<BigUint, Factorization>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Prime decomposition as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pairs: Vec<(BigUint, u32)>,
}

impl Factorization {
    fn from_primes(mut primes: Vec<BigUint>) -> Self {
        primes.sort();
        let mut pairs: Vec<(BigUint, u32)> = Vec::new();
        for p in primes {
            match pairs.last_mut() {
                Some((last, k)) if *last == p => *k += 1,
                _ => pairs.push((p, 1)),
            }
        }
        Factorization { pairs }
    }

    pub fn pairs(&self) -> &[(BigUint, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.pairs.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The factored value, rebuilt from the pairs.
    pub fn value(&self) -> BigUint {
        self.pairs
            .iter()
            .fold(BigUint::one(), |acc, (p, k)| acc * p.pow(*k))
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|(_, k)| *k == 1)
    }

    pub fn euler_phi(&self) -> BigUint {
        self.pairs.iter().fold(BigUint::one(), |acc, (p, k)| {
            acc * p.pow(k - 1) * (p - 1u32)
        })
    }

    /// Exponent of the unit group, with `λ(2^k) = 2^(k-2)` for `k >= 3`.
    pub fn carmichael(&self) -> BigUint {
        self.pairs.iter().fold(BigUint::one(), |acc, (p, k)| {
            let part = if *p == BigUint::from(2u32) && *k >= 3 {
                BigUint::one() << (k - 2)
            } else {
                p.pow(k - 1) * (p - 1u32)
            };
            acc.lcm(&part)
        })
    }

    /// All positive divisors, sorted ascending.
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut divs = vec![BigUint::one()];
        for (p, k) in &self.pairs {
            let mut next = Vec::with_capacity(divs.len() * (*k as usize + 1));
            for d in &divs {
                let mut pk = d.clone();
                next.push(pk.clone());
                for _ in 0..*k {
                    pk *= p;
                    next.push(pk.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

/// Factors `n >= 1`: trial division up to `10^6`, then Brent's rho with a fixed
/// seed schedule.
pub fn factor(n: &BigUint) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    if let Some(small) = n.to_u64() {
        return Ok(Factorization::from_primes(
            factor_small(small).into_iter().map(BigUint::from).collect(),
        ));
    }
    if let Some(hit) = CACHE.lock().expect("factor cache poisoned").get(n) {
        return Ok(hit.clone());
    }
    let mut primes = Vec::new();
    let mut rest = n.clone();
    for &p in SMALL_PRIMES.iter() {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            primes.push(pb.clone());
        }
        if rest.to_u64().is_some() {
            break;
        }
    }
    split_big(rest, &mut primes);
    let fac = Factorization::from_primes(primes);
    CACHE
        .lock()
        .expect("factor cache poisoned")
        .insert(n.clone(), fac.clone());
    Ok(fac)
}

pub fn factor_u64(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    Ok(Factorization::from_primes(
        factor_small(n).into_iter().map(BigUint::from).collect(),
    ))
}

fn split_big(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if let Some(small) = n.to_u64() {
        out.extend(factor_small(small).into_iter().map(BigUint::from));
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = rho_big(&n);
    let other = &n / &d;
    split_big(d, out);
    split_big(other, out);
}

/// Prime factors of `n` with multiplicity, unsorted.
fn factor_small(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n < 1 << 24 {
        // at most ~2000 odd trial divisors; not worth building the sieve
        let mut d = 2;
        while d * d <= n {
            while n % d == 0 {
                n /= d;
                out.push(d);
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if n > 1 {
            out.push(n);
        }
        return out;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        while n % p == 0 {
            n /= p;
            out.push(p);
        }
    }
    split_small(n, &mut out);
    out
}

fn split_small(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = rho_u64(n);
    split_small(d, out);
    split_small(n / d, out);
}

fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let step = |x: u64, c: u64| (mul_mod(x, x, n) + c) % n;
    for c in 1..n {
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        let batch = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..batch.min(r - k) {
                    y = step(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += batch;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys, c);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho failed on composite {n}")
}

fn rho_big(n: &BigUint) -> BigUint {
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut c = BigUint::one();
    loop {
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = BigUint::zero();
        let mut ys = BigUint::zero();
        let batch = 128u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    y = step(&y);
                    q = (q * diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                g = diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}
