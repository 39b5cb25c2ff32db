//! Slice-level polynomial arithmetic over a [`Field`].
//!
//! Coefficients are packed field elements, constant term first, with no
//! trailing zeros. These routines skip field and divisor checks; [`super::Poly`]
//! performs them.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::gfq::Field;
use crate::numtheory::factor_u64;

pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn is_one(a: &[u64]) -> bool {
    a == [1]
}

pub fn x() -> Vec<u64> {
    vec![0, 1]
}

pub fn add(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = f.add(*o, *s);
    }
    trim(&mut out);
    out
}

pub fn sub(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = a.to_vec();
    if b.len() > out.len() {
        out.resize(b.len(), 0);
    }
    for (o, s) in out.iter_mut().zip(b) {
        *o = f.sub(*o, *s);
    }
    trim(&mut out);
    out
}

pub fn scale(f: &Field, a: &[u64], c: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|x| f.mul(*x, c)).collect();
    trim(&mut out);
    out
}

pub fn mul(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(*x, *y));
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn div_rem(f: &Field, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lc_inv = f.inv(b[db]).expect("divisor has nonzero leading coefficient");
    let mut r = a.to_vec();
    let mut quot = vec![0u64; a.len() - db];
    for i in (db..r.len()).rev() {
        let c = f.mul(r[i], lc_inv);
        if c == 0 {
            continue;
        }
        quot[i - db] = c;
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] = f.sub(r[i - db + j], f.mul(c, *bj));
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut quot);
    (quot, r)
}

pub fn rem(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    rem_in_place(f, &mut r, b);
    r
}

pub fn rem_in_place(f: &Field, r: &mut Vec<u64>, b: &[u64]) {
    let db = b.len() - 1;
    if r.len() > db {
        let lc_inv = f.inv(b[db]).expect("divisor has nonzero leading coefficient");
        for i in (db..r.len()).rev() {
            let c = f.mul(r[i], lc_inv);
            if c == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                r[i - db + j] = f.sub(r[i - db + j], f.mul(c, *bj));
            }
        }
        r.truncate(db);
    }
    trim(r);
}

pub fn monic(f: &Field, a: &[u64]) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(1) => a.to_vec(),
        Some(lc) => scale(f, a, f.inv(*lc).expect("nonzero leading coefficient")),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(f: &Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        rem_in_place(f, &mut a, &b);
        std::mem::swap(&mut a, &mut b);
    }
    monic(f, &a)
}

pub fn mulmod(f: &Field, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut p = mul(f, a, b);
    rem_in_place(f, &mut p, m);
    p
}

pub fn powmod(f: &Field, base: &[u64], e: &BigUint, m: &[u64]) -> Vec<u64> {
    if let Some(small) = e.to_u64() {
        return powmod_u64(f, base, small, m);
    }
    let base = rem(f, base, m);
    let mut acc = rem(f, &[1], m);
    for i in (0..e.bits()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, &base, m);
        }
    }
    acc
}

pub fn powmod_u64(f: &Field, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut base = rem(f, base, m);
    let mut acc = rem(f, &[1], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

pub fn derivative(f: &Field, a: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(f.from_int(i as u64), *c))
        .collect();
    trim(&mut out);
    out
}

/// `a(x^t)`.
pub fn compose_xt(a: &[u64], t: usize) -> Vec<u64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; (a.len() - 1) * t + 1];
    for (i, c) in a.iter().enumerate() {
        out[i * t] = *c;
    }
    out
}

pub fn eval(f: &Field, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, c| f.add(f.mul(acc, x), *c))
}

/// Rabin's test: `x^(q^n) = x mod g` and `gcd(x^(q^(n/s)) - x, g) = 1` for
/// every prime `s | n`.
pub fn is_irreducible(f: &Field, g: &[u64]) -> bool {
    let Some(n) = degree(g) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if g[0] == 0 {
        return false;
    }
    let g = monic(f, g);
    let maximal: Vec<usize> = factor_u64(n as u64)
        .expect("n >= 2")
        .primes()
        .map(|s| n / s.to_usize().expect("prime factor of a degree"))
        .collect();
    let mut h = x();
    for i in 1..=n {
        h = powmod_u64(f, &h, f.q(), &g);
        if maximal.contains(&i) && !is_one(&gcd(f, &sub(f, &h, &x()), &g)) {
            return false;
        }
    }
    h == x()
}

/// Lowest-degree index order: the monic degree-`m` polynomial whose lower
/// coefficients are the base-`q` digits of `index`, constant term first.
pub fn monic_from_index(f: &Field, mut index: u64, m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(m + 1);
    for _ in 0..m {
        out.push(index % f.q());
        index /= f.q();
    }
    out.push(1);
    out
}
