//! Exact integer arithmetic: factorization, the arithmetic functions
//! `μ`, `φ`, `λ`, multiplicative orders and `s`-parts.

mod arith;
mod factor;
mod order;
mod prime;

pub use arith::{
    carmichael, divisors_u64, euler_phi, moebius, pow_u64, s_coprime_part, s_part,
};
pub use factor::{factor, factor_u64, Factorization};
pub use order::{mult_order, mult_order_u64, order_by_stripping, OrderValue};
pub use prime::{is_prime, is_prime_power, is_prime_u64};
