//! Exact arithmetic inputs to the partition functions: Hurwitz class numbers,
//! divisor counts, powers of the Dedekind eta function, cyclotomic numbers and
//! the `A_n` theta blocks built from them.

mod cyclotomic;
mod eta;
mod hurwitz;
mod theta;

pub use cyclotomic::{cyclotomic_polynomial, CycNumber};
pub use eta::{eta_power, euler_product};
pub use hurwitz::{divisor_count, hurwitz, hurwitz_table};
pub use theta::{theta_block, theta_lattice_counts};

use thiserror::Error;

use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("theta block Theta_{n} has an irrational coefficient at q^{exponent}")]
    Irrational { n: usize, exponent: u64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
