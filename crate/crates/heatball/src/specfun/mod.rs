//! Special functions: Bessel J/I of real order, their zeros, and the exact
//! rational log-series coefficient algebra.

pub mod bessel;
pub mod series;
pub mod zeros;

pub use bessel::{bessel_i, bessel_j, bessel_j_pair};
pub use series::{
    formal_exp, formal_log_one_plus, log_i_large_k_coeffs, log_j_small_k_coeffs, rational_to_f64,
    RationalSeries, SeriesKind,
};
pub use zeros::{bessel_j_zeros, mcmahon_guess, ZeroList};
