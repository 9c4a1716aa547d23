//! Exact q-series engine for Vafa-Witten partition functions.
//!
//! - [`series`]: truncated Laurent series with rational exponents
//! - [`number_theory`]: Hurwitz class numbers, eta powers, cyclotomic theta blocks
//! - [`tautological`]: localization integrals on Hilbert schemes of points of a gerby curve
//! - [`partition`]: partition functions of `P^2`, `P(1,2,2)`, `P(2,2,2)` and ADE surfaces
//! - [`mock_modular`]: Zagier's completed functions and numerical transformation checks
//! - [`format`]: canonical JSON / CSV / text forms of a series

pub mod format;
pub mod mock_modular;
pub mod number_theory;
pub mod partition;
pub mod series;
pub mod tautological;

pub use series::{int, rat, FracExpSeries, Rational, SeriesError};
