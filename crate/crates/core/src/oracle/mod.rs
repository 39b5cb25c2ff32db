//! Independent verification: brute-force counting by enumeration, the block
//! monomial matrix identity, and the sweep harness comparing every counting
//! engine on a parameter grid.

mod brute;
mod matrix;
mod sweep;

pub use brute::{
    brute_count_factor, brute_count_order, brute_factor_counts, brute_order_counts,
    qualifying_polynomials,
};
pub use matrix::{
    block_matrix, char_poly, random_invertible, random_invertible_with, verify_prop_block,
    MatrixGF,
};
pub use sweep::{run_sweep, GridRow, GridSpec, SweepCell, SweepReport};
