use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::numtheory::{factor_u64, is_prime_u64, order_by_stripping};
use crate::polyq::raw;

/// Largest supported field order; packed products stay inside `u64`.
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

const TABLE_MAX: u64 = 1 << 16;
const ADD_TABLE_MAX: u64 = 256;

enum Arith {
    Prime,
    Tables {
        // exp has length 2(q-1) so log[a] + log[b] never needs a reduction
        exp: Vec<u32>,
        log: Vec<u32>,
        add: Option<Vec<u16>>,
    },
    Digits,
}

/// `F_q` as `F_p[y]/(modulus)`, with `modulus` the least monic irreducible
/// polynomial of degree `k` in the packed order (constant term least significant).
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    arith: Arith,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Builds `F_{p^k}`.
pub fn build_field(p: u64, k: u32) -> Result<Arc<Field>> {
    Field::new(p, k).map(Arc::new)
}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
        }
        let q = (p as u128).checked_pow(k).filter(|q| *q <= MAX_FIELD_ORDER as u128);
        let Some(q) = q else {
            return Err(Error::SizeExceeded {
                what: "field order p^k",
                value: format!("{p}^{k}"),
                bound: MAX_FIELD_ORDER.to_string(),
            });
        };
        let q = q as u64;
        let prime = Field {
            p,
            k: 1,
            q: p,
            modulus: vec![0, 1],
            arith: Arith::Prime,
        };
        if k == 1 {
            return Ok(prime);
        }
        let modulus = least_irreducible(&prime, k as usize);
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            arith: Arith::Digits,
        };
        if q <= TABLE_MAX {
            field.arith = field.build_tables();
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_big(&self) -> BigUint {
        BigUint::from(self.q)
    }

    /// Coefficients of the defining polynomial over `F_p`, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// Image of the integer `n` under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: u64) -> u64 {
        n % self.p
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.q
    }

    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<u64> {
        if digits.len() != self.k as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                self.k,
                digits.len()
            )));
        }
        if let Some(bad) = digits.iter().find(|d| **d >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "coefficient {bad} is not a residue mod {}",
                self.p
            )));
        }
        Ok(self.pack(digits))
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.arith {
            Arith::Prime => {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            Arith::Tables { add: Some(t), .. } => t[(a * self.q + b) as usize] as u64,
            _ => self.digitwise(a, b, |x, y| (x + y) % self.p),
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        match self.arith {
            Arith::Prime => {
                if a == 0 {
                    0
                } else {
                    self.p - a
                }
            }
            _ => self.digitwise(a, 0, |x, _| (self.p - x) % self.p),
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        match self.arith {
            Arith::Prime => {
                if a >= b {
                    a - b
                } else {
                    a + self.p - b
                }
            }
            _ => self.add(a, self.neg(b)),
        }
    }

    fn digitwise(&self, mut a: u64, mut b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += op(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.arith {
            Arith::Prime => a * b % self.p,
            Arith::Tables { exp, log, .. } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize] as u64
                }
            }
            Arith::Digits => self.mul_schoolbook(a, b),
        }
    }

    fn mul_schoolbook(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let k = self.k as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in da.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let t = c * self.modulus[j] % p;
                prod[i - k + j] = (prod[i - k + j] + p - t) % p;
            }
        }
        self.pack(&prod[..k])
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.arith {
            Arith::Tables { exp, log, .. } => {
                let n = self.q - 1;
                exp[((n - log[a as usize] as u64) % n) as usize] as u64
            }
            _ => self.pow_u64(a, self.q - 2),
        })
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow_u64(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: u64, e: &BigUint) -> u64 {
        if let Some(small) = e.to_u64() {
            return self.pow_u64(a, small);
        }
        let mut acc = 1;
        for i in (0..e.bits()).rev() {
            acc = self.mul(acc, acc);
            if e.bit(i) {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: u64) -> u64 {
        self.pow_u64(a, self.q / self.p)
    }

    fn build_tables(&self) -> Arith {
        let n = self.q - 1;
        let n_big = BigUint::from(n);
        let n_fac = factor_u64(n).expect("q - 1 >= 1");
        let generator = (2..self.q)
            .find(|&g| {
                order_by_stripping(&n_big, &n_fac, |e| {
                    self.pow_u64(g, e.to_u64().expect("exponent below q")).is_one()
                }) == n_big
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u64;
        for i in 0..n as usize {
            exp[i] = x as u32;
            exp[i + n as usize] = x as u32;
            log[x as usize] = i as u32;
            x = self.mul_schoolbook(x, generator);
        }
        let add = (self.q <= ADD_TABLE_MAX).then(|| {
            let mut t = Vec::with_capacity((self.q * self.q) as usize);
            for a in 0..self.q {
                for b in 0..self.q {
                    t.push(self.digitwise(a, b, |x, y| (x + y) % self.p) as u16);
                }
            }
            t
        });
        Arith::Tables { exp, log, add }
    }
}

fn least_irreducible(prime: &Field, k: usize) -> Vec<u64> {
    let p = prime.p();
    let count = p.pow(k as u32);
    (0..count)
        .map(|index| {
            let mut coeffs = prime.digits_of_index(index, k);
            coeffs.push(1);
            coeffs
        })
        .find(|candidate| raw::is_irreducible(prime, candidate))
        .expect("irreducible polynomials exist in every degree")
}

impl Field {
    fn digits_of_index(&self, mut index: u64, len: usize) -> Vec<u64> {
        (0..len)
            .map(|_| {
                let d = index % self.q;
                index /= self.q;
                d
            })
            .collect()
    }
}
