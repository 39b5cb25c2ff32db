use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gfq::{build_field, Field, GFElement};
use crate::hyper::validate_q;
use crate::limits::Limits;
use crate::polyq::Poly;

/// Square matrix over a finite field, row-major, entries packed as in
/// [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: Arc<Field>,
    n: usize,
    entries: Vec<u64>,
}

impl MatrixGF {
    pub fn new(field: &Arc<Field>, n: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|v| !field.contains(**v)) {
            return Err(Error::InvalidArgument(format!(
                "entry {bad} is not an element of F_{}",
                field.q()
            )));
        }
        Ok(MatrixGF { field: field.clone(), n, entries })
    }

    pub fn from_elements(field: &Arc<Field>, rows: &[Vec<GFElement>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::ShapeMismatch("matrix is not square".into()));
            }
            for e in row {
                if **e.field() != **field {
                    return Err(Error::FieldMismatch);
                }
                entries.push(e.packed());
            }
        }
        Ok(MatrixGF { field: field.clone(), n, entries })
    }

    pub fn zero(field: &Arc<Field>, n: usize) -> Self {
        MatrixGF { field: field.clone(), n, entries: vec![0; n * n] }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Companion matrix of a monic `f` of degree n: ones on the subdiagonal,
    /// last column `-f_0, …, -f_{n-1}`.
    pub fn companion(f: &Poly) -> Result<Self> {
        let n = match f.degree() {
            Some(d) if d >= 1 && f.is_monic() => d,
            _ => return Err(Error::InvalidArgument("companion needs a monic polynomial of degree >= 1".into())),
        };
        let field = f.field();
        let mut m = Self::zero(field, n);
        for i in 1..n {
            m.entries[i * n + i - 1] = field.one();
        }
        for (i, c) in f.coeffs()[..n].iter().enumerate() {
            m.entries[i * n + n - 1] = field.neg(*c);
        }
        Ok(m)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn element(&self, i: usize, j: usize) -> GFElement {
        GFElement::from_raw(&self.field, self.get(i, j))
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!("{}x{} times {}x{}", self.n, self.n, other.n, other.n)));
        }
        let (n, f) = (self.n, &self.field);
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut out[i * n + j];
                    *cell = f.add(*cell, f.mul(a, other.entries[k * n + j]));
                }
            }
        }
        Ok(MatrixGF { field: f.clone(), n, entries: out })
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> u64 {
        let (n, f) = (self.n, &self.field);
        let mut a = self.entries.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let p = a[col * n + col];
            det = f.mul(det, p);
            let p_inv = f.inv(p).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], p_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant() != 0
    }
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixGF(F_{}, {})", self.field.q(), self)
    }
}

impl fmt::Display for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.element(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Block monomial matrix of size `mt`: `g_1, …, g_{t-1}` on the block
/// superdiagonal, `g_t` in the bottom-left corner, zero blocks elsewhere.
pub fn block_matrix(gs: &[MatrixGF]) -> Result<MatrixGF> {
    let first = gs
        .first()
        .ok_or_else(|| Error::ShapeMismatch("block_matrix needs at least one block".into()))?;
    let (field, m, t) = (&first.field, first.n, gs.len());
    for g in gs {
        if *g.field != **field {
            return Err(Error::FieldMismatch);
        }
        if g.n != m {
            return Err(Error::ShapeMismatch(format!("blocks of size {m} and {}", g.n)));
        }
        if !g.is_invertible() {
            return Err(Error::Singular);
        }
    }
    let n = m * t;
    let mut out = MatrixGF::zero(field, n);
    for (b, g) in gs.iter().enumerate() {
        let (row0, col0) = if b + 1 < t { (b * m, (b + 1) * m) } else { ((t - 1) * m, 0) };
        for i in 0..m {
            for j in 0..m {
                out.entries[(row0 + i) * n + col0 + j] = g.get(i, j);
            }
        }
    }
    Ok(out)
}

/// `det(xI - A)` by Berkowitz's division-free recursion.
pub fn char_poly(a: &MatrixGF) -> Poly {
    let (n, f) = (a.n, &a.field);
    // coefficients of the leading r×r block's char poly, highest degree first
    let mut v = vec![f.one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(f.one());
        toeplitz.push(f.neg(a.get(r, r)));
        let mut w: Vec<u64> = (0..r).map(|i| a.get(i, r)).collect();
        for _ in 0..r {
            let dot = (0..r).fold(0, |acc, j| f.add(acc, f.mul(a.get(r, j), w[j])));
            toeplitz.push(f.neg(dot));
            w = (0..r)
                .map(|i| (0..r).fold(0, |acc, j| f.add(acc, f.mul(a.get(i, j), w[j]))))
                .collect();
        }
        v = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(0, |acc, j| f.add(acc, f.mul(toeplitz[i - j], v[j])))
            })
            .collect();
    }
    v.reverse();
    Poly::from_raw(f, v)
}

/// Uniformly random invertible `m × m` matrix, redrawn until the determinant is
/// nonzero.
pub fn random_invertible_with<R: Rng + ?Sized>(field: &Arc<Field>, m: usize, rng: &mut R) -> MatrixGF {
    let q = field.q();
    loop {
        let entries = (0..m * m).map(|_| rng.gen_range(0..q)).collect();
        let g = MatrixGF { field: field.clone(), n: m, entries };
        if g.is_invertible() {
            return g;
        }
    }
}

pub fn random_invertible(field: &Arc<Field>, m: usize, seed: u64) -> MatrixGF {
    random_invertible_with(field, m, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Draws `t` invertible `m × m` matrices from `seed` and checks that the block
/// matrix built from them has characteristic polynomial `f(x^t)`, where `f`
/// is the characteristic polynomial of their product.
pub fn verify_prop_block(q: u64, m: u64, t: u64, seed: u64, limits: &Limits) -> Result<bool> {
    let (p, k) = validate_q(q)?;
    if m == 0 || t == 0 {
        return Err(Error::InvalidArgument("m and t must be >= 1".into()));
    }
    let n = m.saturating_mul(t);
    if n > limits.max_matrix_dim as u64 {
        return Err(Error::SizeExceeded {
            what: "matrix dimension m*t",
            value: n.to_string(),
            bound: limits.max_matrix_dim.to_string(),
        });
    }
    let field = build_field(p, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gs: Vec<MatrixGF> = (0..t).map(|_| random_invertible_with(&field, m as usize, &mut rng)).collect();
    let mut product = MatrixGF::identity(&field, m as usize);
    for g in &gs {
        product = product.mul(g)?;
    }
    let f = char_poly(&product);
    Ok(char_poly(&block_matrix(&gs)?) == f.compose_xt(t as usize))
}
