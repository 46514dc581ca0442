//! Positive zeros of J_nu.
//!
//! Brackets come from the McMahon expansion
//! `mu_k ~ b - (4 nu^2 - 1)/(8 b)`, `b = pi (k + nu/2 - 1/4)`, taken at
//! plus/minus pi/2. When the McMahon correction is too large to trust the
//! guess (small k at large order), the locator falls back to a sign-change
//! walk from the previous zero in steps of pi/2, which is below the minimal
//! zero spacing for every order. Each bracket is bisected to width 1e-3 and
//! polished by Newton steps safeguarded against leaving the bracket, using
//! J'_nu = (nu/x) J_nu - J_{nu+1}.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::BesselOrder;
use crate::real::Real;
use crate::specfun::bessel::{bessel_j, bessel_j_pair};

/// Bisect until the bracket is this wide, then hand over to Newton.
const BISECT_WIDTH: f64 = 1e-3;

/// The first `count` positive zeros of J_nu, strictly increasing.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroList<T> {
    pub order: BesselOrder,
    pub zeros: Vec<T>,
    /// max |J_nu(mu_k)| over the returned zeros.
    pub residual_bound: T,
}

impl<T: Real> ZeroList<T> {
    fn new(order: BesselOrder, zeros: Vec<T>, residual_bound: T) -> Result<Self> {
        for pair in zeros.windows(2) {
            if pair[1] <= pair[0] {
                return Err(Error::Domain(format!(
                    "zeros of J_{} not strictly increasing: {:?} then {:?}",
                    order,
                    pair[0].to_f64(),
                    pair[1].to_f64()
                )));
            }
        }
        Ok(ZeroList {
            order,
            zeros,
            residual_bound,
        })
    }
}

/// Residual tolerance the polished zeros must meet.
pub fn residual_tolerance<T: Real>() -> T {
    // 1e-12 at f64; scaled up for narrower scalars
    T::of(1e-12).max(T::epsilon() * T::of(100.0))
}

/// McMahon asymptotic guess for the k-th zero (1-based).
pub fn mcmahon_guess<T: Real>(order: BesselOrder, k: usize) -> T {
    let nu = T::of(order.as_f64());
    let b = T::PI() * (T::of_usize(k) + nu / T::of(2.0) - T::of(0.25));
    let m = T::of(4.0) * nu * nu;
    b - (m - T::one()) / (T::of(8.0) * b)
}

pub fn bessel_j_zeros<T: Real>(order: BesselOrder, count: usize) -> Result<ZeroList<T>> {
    if count == 0 {
        return Err(Error::Domain("zero count must be >= 1".into()));
    }
    let tol = residual_tolerance::<T>();
    let mut zeros = Vec::with_capacity(count);
    let mut worst = T::zero();
    let mut prev = T::zero();
    for k in 1..=count {
        let bracket = bracket_zero(order, k, prev)?;
        let root = refine(order, k, bracket)?;
        let residual: T = bessel_j(order, root)?.abs();
        if residual > tol {
            return Err(Error::BracketFailure {
                index: k,
                detail: format!(
                    "residual {:e} above tolerance {:e}",
                    residual.to_f64().unwrap_or(f64::NAN),
                    tol.to_f64().unwrap_or(f64::NAN)
                ),
            });
        }
        worst = worst.max(residual);
        prev = root;
        zeros.push(root);
    }
    ZeroList::new(order, zeros, worst)
}

/// An interval with a sign change containing the k-th zero and no earlier one.
fn bracket_zero<T: Real>(order: BesselOrder, k: usize, prev: T) -> Result<(T, T)> {
    let nu = T::of(order.as_f64());
    let half_pi = T::PI() / T::of(2.0);
    let guess: T = mcmahon_guess(order, k);
    let correction = T::of((4.0 * order.as_f64().powi(2) - 1.0).abs())
        / (T::of(8.0) * T::PI() * (T::of_usize(k) + nu / T::of(2.0) - T::of(0.25)));
    // Trust McMahon only when its own first correction is small and the
    // bracket cannot reach back before the previous zero.
    if correction < T::PI() / T::of(4.0) && guess - half_pi > prev + T::of(0.25) {
        let lo = guess - half_pi;
        let hi = guess + half_pi;
        let f_lo: T = bessel_j(order, lo)?;
        let f_hi: T = bessel_j(order, hi)?;
        if f_lo * f_hi < T::zero() {
            return Ok((lo, hi));
        }
    }
    // Walk from the previous zero (or from below the first one). J_nu has no
    // zero in (0, nu], so the first walk may start at nu.
    let mut lo = if k == 1 {
        nu.max(T::of(1e-3))
    } else {
        prev + T::of(1e-6).max(prev * T::epsilon() * T::of(8.0))
    };
    let mut f_lo: T = bessel_j(order, lo)?;
    if f_lo == T::zero() {
        lo = lo + T::of(1e-3);
        f_lo = bessel_j(order, lo)?;
    }
    for _ in 0..10_000 {
        let hi = lo + half_pi;
        let f_hi: T = bessel_j(order, hi)?;
        if f_lo * f_hi < T::zero() {
            return Ok((lo, hi));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Err(Error::BracketFailure {
        index: k,
        detail: format!("no sign change found walking from {:?}", prev.to_f64()),
    })
}

/// Bisection to width `BISECT_WIDTH`, then safeguarded Newton.
fn refine<T: Real>(order: BesselOrder, k: usize, (mut lo, mut hi): (T, T)) -> Result<T> {
    let nu = T::of(order.as_f64());
    let mut f_lo: T = bessel_j(order, lo)?;
    while hi - lo > T::of(BISECT_WIDTH) {
        let mid = (lo + hi) / T::of(2.0);
        let f_mid: T = bessel_j(order, mid)?;
        if f_lo * f_mid <= T::zero() {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    let mut x = (lo + hi) / T::of(2.0);
    let mut best = x;
    let mut best_abs = T::max_value();
    for _ in 0..60 {
        let (j, j_next) = bessel_j_pair(order, x)?;
        let abs = j.abs();
        if abs < best_abs {
            best_abs = abs;
            best = x;
        }
        // narrow the safeguard bracket as we learn signs
        if j * f_lo > T::zero() {
            lo = x;
        } else {
            hi = x;
        }
        let deriv = (nu / x) * j - j_next;
        if deriv == T::zero() {
            break;
        }
        let step = j / deriv;
        let mut next = x - step;
        if next <= lo || next >= hi {
            next = (lo + hi) / T::of(2.0); // Newton left the bracket; bisect
        }
        if (next - x).abs() <= x.abs() * T::epsilon() {
            x = next;
            let residual: T = bessel_j(order, x)?.abs();
            if residual < best_abs {
                best = x;
                best_abs = residual;
            }
            break;
        }
        x = next;
    }
    if !best.is_finite() {
        return Err(Error::BracketFailure {
            index: k,
            detail: "refinement did not converge".into(),
        });
    }
    Ok(best)
}
