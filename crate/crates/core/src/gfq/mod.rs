//! Finite fields `F_q`, `q = p^k`, and arithmetic on their elements.
//!
//! Elements are packed as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of their coefficient vector over `F_p` (constant coefficient first), so
//! `0` and `1` are the field's zero and one and `0..q` enumerates the field in
//! the canonical order. [`Field`] does raw arithmetic on packed values;
//! [`GFElement`] pairs a value with its field for checked use.

mod element;
mod field;

pub use element::{element_order, enumerate_units, GFElement};
pub use field::{build_field, Field, MAX_FIELD_ORDER};
