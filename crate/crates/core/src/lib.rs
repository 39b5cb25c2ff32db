//! Existence, exact counts and bounds for monic irreducible polynomials `f`
//! of degree `m` over `F_q` such that `f(x^t)` has an irreducible factor of
//! degree `e > mt/2`, together with brute-force oracles that check every
//! closed form against enumeration over small fields.
//!
//! The crate is layered bottom-up:
//!
//! - [`numtheory`]: factorization, arithmetic functions and multiplicative orders
//! - [`gfq`]: finite fields `F_q` and their elements
//! - [`polyq`]: polynomials over `F_q`, irreducibility and factorization
//! - [`hyper`]: the closed-form existence and counting results
//! - [`oracle`]: enumeration oracles, block matrices and the verification sweep
//! - [`engine`]: counting strategies behind a common trait, looked up by name

pub mod engine;
pub mod error;
pub mod gfq;
pub mod hyper;
pub mod limits;
pub mod numtheory;
pub mod oracle;
pub mod polyq;

pub use error::{Error, Result};
pub use limits::Limits;
