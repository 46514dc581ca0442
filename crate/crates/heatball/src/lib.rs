//! Heat content of the Dirac Laplacian on the unit ball with spectral (APS)
//! boundary conditions, computed two independent ways and cross-validated:
//!
//! * **spectral sums** — eigenvalues are squared Bessel zeros, mode weights
//!   come in closed form; `beta(t) = sum w_k exp(-t lambda_k)` is evaluated
//!   with certified truncation bounds and the small-t coefficients of
//!   `beta(t) ~ sum beta_n t^{n/2}` are extracted by sliding-window fits;
//! * **zeta special values** — the same coefficients obtained from special
//!   values and residues of the associated zeta function, built from exact
//!   rational log-series coefficients of the Bessel functions.
//!
//! Closed-form coefficient evaluators for Dirichlet and Robin boundary
//! conditions and model interval spectra serve as ground truth for the
//! fitting machinery.
//!
//! Floating-point kernels are generic over the scalar via [`real::Real`];
//! concrete `f64` aliases for the main data types sit at the crate root.
//! Exact series algebra uses arbitrary-size rationals throughout.

pub mod ball;
pub mod dd;
pub mod error;
pub mod fit;
pub mod gamma;
pub mod heat;
pub mod oracles;
pub mod order;
pub mod real;
pub mod specfun;
pub mod spectrum;
pub mod suites;
pub mod sum;
pub mod tail;
pub mod zeta;

pub use error::{Error, Result};
pub use order::BesselOrder;
pub use real::Real;

/// Concrete `f64` instantiations of the core data types.
// pub type SpectralData64 = spectrum::SpectralData<f64>;
// pub type HeatCurve64 = heat::HeatCurve<f64>;
// pub type AsymptoticFit64 = fit::AsymptoticFit<f64>;
pub type ZeroList64 = specfun::ZeroList<f64>;
// pub type ZetaSpecialValues64 = zeta::ZetaSpecialValues;
