//! Univariate polynomials over `F_q`: arithmetic, composition with `x^t`,
//! irreducibility, square-free and distinct-degree factorization, root
//! orders and enumeration of monic irreducibles.

mod factor;
mod irreducible;
pub(crate) mod raw;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gfq::{Field, GFElement};

pub use factor::{
    distinct_degree_factorization, distinct_degree_profile, equal_degree_split, factor,
    pth_root, squarefree_decomposition, squarefree_part, DegreeProfile,
};
pub use irreducible::{enumerate_monic_irreducible, root_order};

/// A polynomial over a [`Field`], coefficients constant term first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Arc<Field>,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Polynomial from packed field elements (see [`crate::gfq`]).
    pub fn new(field: &Arc<Field>, mut coeffs: Vec<u64>) -> Result<Poly> {
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(**c)) {
            return Err(Error::InvalidArgument(format!(
                "{bad} is not an element of F_{}",
                field.q()
            )));
        }
        raw::trim(&mut coeffs);
        Ok(Poly::from_raw(field, coeffs))
    }

    pub fn from_elements(field: &Arc<Field>, coeffs: &[GFElement]) -> Result<Poly> {
        if coeffs.iter().any(|c| **c.field() != **field) {
            return Err(Error::FieldMismatch);
        }
        Poly::new(field, coeffs.iter().map(GFElement::packed).collect())
    }

    /// Integer coefficients mapped into the prime subfield.
    pub fn from_residues(field: &Arc<Field>, coeffs: &[i64]) -> Poly {
        let p = field.p() as i64;
        let mut v: Vec<u64> = coeffs
            .iter()
            .map(|c| field.from_int(c.rem_euclid(p) as u64))
            .collect();
        raw::trim(&mut v);
        Poly::from_raw(field, v)
    }

    pub(crate) fn from_raw(field: &Arc<Field>, coeffs: Vec<u64>) -> Poly {
        debug_assert!(coeffs.last() != Some(&0));
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<Field>) -> Poly {
        Poly::from_raw(field, Vec::new())
    }

    pub fn one(field: &Arc<Field>) -> Poly {
        Poly::from_raw(field, vec![1])
    }

    pub fn x(field: &Arc<Field>) -> Poly {
        Poly::from_raw(field, raw::x())
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// Packed coefficients, constant term first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficients(&self) -> Vec<GFElement> {
        self.coeffs
            .iter()
            .map(|c| GFElement::from_raw(&self.field, *c))
            .collect()
    }

    pub fn degree(&self) -> Option<usize> {
        raw::degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        raw::is_one(&self.coeffs)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, coeffs: Vec<u64>) -> Poly {
        Poly::from_raw(&self.field, coeffs)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(raw::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(raw::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(raw::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = raw::div_rem(&self.field, &self.coeffs, &divisor.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.wrap(raw::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, e: &BigUint, modulus: &Poly) -> Result<Poly> {
        self.check(modulus)?;
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(raw::powmod(&self.field, &self.coeffs, e, &modulus.coeffs)))
    }

    pub fn monic(&self) -> Poly {
        self.wrap(raw::monic(&self.field, &self.coeffs))
    }

    pub fn derivative(&self) -> Poly {
        self.wrap(raw::derivative(&self.field, &self.coeffs))
    }

    pub fn eval(&self, x: &GFElement) -> Result<GFElement> {
        if **x.field() != *self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(GFElement::from_raw(
            &self.field,
            raw::eval(&self.field, &self.coeffs, x.packed()),
        ))
    }

    /// `f(x^t)`. Monic input gives monic output of degree `deg(f) * t`.
    ///
    /// # Panics
    ///
    /// If `t == 0`.
    pub fn compose_xt(&self, t: usize) -> Poly {
        assert!(t >= 1, "compose_xt needs t >= 1");
        self.wrap(raw::compose_xt(&self.coeffs, t))
    }

    /// Rabin irreducibility test; constants (including zero) are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        raw::is_irreducible(&self.field, &self.coeffs)
    }
}

/// Canonical notation: the coefficient list, constant term first. Over a prime
/// field each coefficient is an integer, otherwise its own vector over `F_p`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly(F_{}: {self})", self.field.q())
    }
}
