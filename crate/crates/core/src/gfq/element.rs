use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::field::Field;
use crate::error::{Error, Result};
use crate::numtheory::{factor, order_by_stripping};

/// An element of a [`Field`], carried with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct GFElement {
    field: Arc<Field>,
    value: u64,
}

impl fmt::Debug for GFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.value)
        } else {
            let digits: Vec<String> = self.coefficients().iter().map(u64::to_string).collect();
            write!(f, "[{}]", digits.join(","))
        }
    }
}

impl GFElement {
    /// Element with the given coefficient vector over `F_p`, constant term first.
    pub fn new(field: &Arc<Field>, coefficients: &[u64]) -> Result<Self> {
        Ok(GFElement {
            value: field.from_digits(coefficients)?,
            field: field.clone(),
        })
    }

    pub fn from_packed(field: &Arc<Field>, value: u64) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::InvalidArgument(format!(
                "{value} is not an element of F_{}",
                field.q()
            )));
        }
        Ok(GFElement {
            field: field.clone(),
            value,
        })
    }

    pub(crate) fn from_raw(field: &Arc<Field>, value: u64) -> Self {
        GFElement {
            field: field.clone(),
            value,
        }
    }

    pub fn zero(field: &Arc<Field>) -> Self {
        Self::from_raw(field, 0)
    }

    pub fn one(field: &Arc<Field>) -> Self {
        Self::from_raw(field, 1)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn packed(&self) -> u64 {
        self.value
    }

    pub fn coefficients(&self) -> Vec<u64> {
        self.field.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn same_field(&self, other: &GFElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &GFElement) -> Result<GFElement> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &GFElement) -> Result<GFElement> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &GFElement) -> Result<GFElement> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &GFElement) -> Result<GFElement> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> GFElement {
        Self::from_raw(&self.field, self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<GFElement> {
        Ok(Self::from_raw(&self.field, self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: &BigUint) -> GFElement {
        Self::from_raw(&self.field, self.field.pow(self.value, e))
    }
}

/// Order of `g` in the cyclic group `F_q^*`, found by stripping primes from `q - 1`.
pub fn element_order(g: &GFElement) -> Result<BigUint> {
    if g.is_zero() {
        return Err(Error::ZeroElement);
    }
    let field = g.field();
    let n = BigUint::from(field.q() - 1);
    let n_fac = factor(&n)?;
    Ok(order_by_stripping(&n, &n_fac, |e| field.pow(g.packed(), e) == 1))
}

/// All `q - 1` units of `field`, in packed order.
pub fn enumerate_units(
    field: &Arc<Field>,
    bound: u64,
) -> Result<impl Iterator<Item = GFElement>> {
    if field.q() > bound {
        return Err(Error::SizeExceeded {
            what: "field order q",
            value: field.q().to_string(),
            bound: bound.to_string(),
        });
    }
    let field = field.clone();
    Ok((1..field.q()).map(move |v| GFElement::from_raw(&field, v)))
}
