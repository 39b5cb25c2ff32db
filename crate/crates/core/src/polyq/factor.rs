use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{raw, Poly};
use crate::error::{Error, Result};
use crate::gfq::Field;

/// Degrees of the irreducible factors of a polynomial, counted with multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeProfile {
    counts: BTreeMap<u64, u64>,
}

impl DegreeProfile {
    fn bump(&mut self, degree: u64, count: u64) {
        *self.counts.entry(degree).or_insert(0) += count;
    }

    /// `(degree, count)` pairs in increasing degree.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(d, c)| (*d, *c))
    }

    pub fn count(&self, degree: u64) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn has_degree(&self, degree: u64) -> bool {
        self.count(degree) > 0
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn total_degree(&self) -> u64 {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }
}

/// If `f = g^p` (all exponents divisible by the characteristic), returns `g`.
pub fn pth_root(f: &Poly) -> Option<Poly> {
    raw_pth_root(f.field(), f.coeffs()).map(|g| Poly::from_raw(f.field(), g))
}

fn raw_pth_root(field: &Field, f: &[u64]) -> Option<Vec<u64>> {
    let p = field.p() as usize;
    if f.iter().enumerate().any(|(i, c)| i % p != 0 && *c != 0) {
        return None;
    }
    Some(f.iter().step_by(p).map(|c| field.pth_root(*c)).collect())
}

/// Square-free decomposition: monic, pairwise coprime square-free `g_i` with
/// `monic(f) = ∏ g_i^(m_i)`. Constants give an empty list.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u64)>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial has no factorization".into()));
    }
    let field = f.field();
    let mut parts = raw_sqf(field, &raw::monic(field, f.coeffs()));
    parts.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(parts
        .into_iter()
        .map(|(g, m)| (Poly::from_raw(field, g), m))
        .collect())
}

fn raw_sqf(field: &Field, f: &[u64]) -> Vec<(Vec<u64>, u64)> {
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let p = field.p();
    let d = raw::derivative(field, f);
    if d.is_empty() {
        let g = raw_pth_root(field, f).expect("zero derivative means a p-th power");
        return raw_sqf(field, &g)
            .into_iter()
            .map(|(h, m)| (h, m * p))
            .collect();
    }
    let mut c = raw::gcd(field, f, &d);
    let mut w = raw::div_rem(field, f, &c).0;
    let mut i = 1;
    while !raw::is_one(&w) {
        let y = raw::gcd(field, &w, &c);
        let z = raw::div_rem(field, &w, &y).0;
        if !raw::is_one(&z) {
            out.push((z, i));
        }
        i += 1;
        c = raw::div_rem(field, &c, &y).0;
        w = y;
    }
    if !raw::is_one(&c) {
        let g = raw_pth_root(field, &c).expect("remaining cofactor is a p-th power");
        out.extend(raw_sqf(field, &g).into_iter().map(|(h, m)| (h, m * p)));
    }
    out
}

/// Product of the distinct monic irreducible factors of `f`.
pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    let field = f.field();
    let mut acc = vec![1];
    for (g, _) in squarefree_decomposition(f)? {
        acc = raw::mul(field, &acc, g.coeffs());
    }
    Ok(Poly::from_raw(field, acc))
}

/// Splits a square-free `f` into `(d, product of its irreducible factors of degree d)`.
pub fn distinct_degree_factorization(f: &Poly) -> Result<Vec<(usize, Poly)>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument("distinct-degree factorization needs deg >= 1".into()));
    }
    let field = f.field();
    Ok(raw_ddf(field, &raw::monic(field, f.coeffs()))
        .into_iter()
        .map(|(d, g)| (d, Poly::from_raw(field, g)))
        .collect())
}

pub(crate) fn raw_ddf(field: &Field, f: &[u64]) -> Vec<(usize, Vec<u64>)> {
    let mut out = Vec::new();
    let mut g = f.to_vec();
    let mut h = raw::rem(field, &raw::x(), &g);
    let mut d = 0;
    while g.len() > 2 * (d + 1) {
        d += 1;
        h = raw::powmod_u64(field, &h, field.q(), &g);
        let common = raw::gcd(field, &g, &raw::sub(field, &h, &raw::x()));
        if !raw::is_one(&common) {
            g = raw::div_rem(field, &g, &common).0;
            h = raw::rem(field, &h, &g);
            out.push((d, common));
        }
    }
    if g.len() > 1 {
        out.push((g.len() - 1, g));
    }
    out
}

/// Degree profile of `f`'s irreducible factors, multiplicities folded into the counts.
pub fn distinct_degree_profile(f: &Poly) -> Result<DegreeProfile> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument("degree profile needs deg >= 1".into()));
    }
    let field = f.field();
    let mut profile = DegreeProfile::default();
    for (g, mult) in squarefree_decomposition(f)? {
        for (d, part) in raw_ddf(field, g.coeffs()) {
            let count = ((part.len() - 1) / d) as u64;
            profile.bump(d as u64, count * mult);
        }
    }
    Ok(profile)
}

/// Cantor-Zassenhaus: splits a monic `f` whose irreducible factors all have
/// degree `d` into those factors, sorted.
pub fn equal_degree_split(f: &Poly, d: usize, rng: &mut impl Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if d == 0 || n == 0 || n % d != 0 {
        return Err(Error::InvalidArgument(format!(
            "degree {n} is not a positive multiple of {d}"
        )));
    }
    let field = f.field();
    let mut out = Vec::new();
    raw_edf(field, &raw::monic(field, f.coeffs()), d, rng, &mut out);
    out.sort();
    Ok(out.into_iter().map(|g| Poly::from_raw(field, g)).collect())
}

fn raw_edf(field: &Field, f: &[u64], d: usize, rng: &mut impl Rng, out: &mut Vec<Vec<u64>>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.to_vec());
        return;
    }
    let q = field.q();
    loop {
        let mut a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        raw::trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let b = if q % 2 == 1 {
            let e = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            raw::sub(field, &raw::powmod(field, &a, &e, f), &[1])
        } else {
            // absolute trace to F_2: a + a^2 + ... + a^(2^(kd-1))
            let steps = field.k() as usize * d;
            let mut term = raw::rem(field, &a, f);
            let mut acc = term.clone();
            for _ in 1..steps {
                term = raw::mulmod(field, &term, &term, f);
                acc = raw::add(field, &acc, &term);
            }
            acc
        };
        let u = raw::gcd(field, f, &b);
        let du = u.len().saturating_sub(1);
        if du > 0 && du < n {
            let v = raw::div_rem(field, f, &u).0;
            raw_edf(field, &u, d, rng, out);
            raw_edf(field, &v, d, rng, out);
            return;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities, sorted
/// by multiplicity and then coefficients. The splitting randomness is seeded.
pub fn factor(f: &Poly, seed: u64) -> Result<Vec<(Poly, u64)>> {
    let field = f.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(f)? {
        for (d, part) in raw_ddf(field, g.coeffs()) {
            let mut pieces = Vec::new();
            raw_edf(field, &part, d, &mut rng, &mut pieces);
            out.extend(pieces.into_iter().map(|h| (Poly::from_raw(field, h), mult)));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), a.1, a.0.coeffs()).cmp(&(b.0.degree(), b.1, b.0.coeffs())));
    Ok(out)
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}
