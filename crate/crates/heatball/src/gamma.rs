//! Gamma-function helpers.
//!
//! Three distinct needs, three routes:
//! * `ln_gamma` — Lanczos approximation for generic positive arguments
//!   (series normalization at non-half-integral orders).
//! * `gamma_plus_one` — exact product recursion for integer and
//!   half-integer orders, where Gamma is a rational multiple of sqrt(pi);
//!   this keeps the ball-critical paths at a couple of ulps.
//! * `gamma_negative_half_integer` — Gamma(-k - 1/2) as an exact rational
//!   coefficient of sqrt(pi), via the recursion Gamma(z-1) = Gamma(z)/(z-1)
//!   seeded at Gamma(1/2). Gamma is never evaluated in floating point near
//!   its poles.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::order::BesselOrder;
use crate::real::Real;

/// Lanczos coefficients (g = 7, n = 9); ~1e-15 relative over x > 0.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of Gamma(x) for x > 0.
pub fn ln_gamma<T: Real>(x: T) -> T {
    debug_assert!(x > T::zero());
    let g = T::of(LANCZOS_G);
    let half = T::of(0.5);
    let z = x - T::one();
    let mut acc = T::of(LANCZOS_COEFF[0]);
    for (i, &c) in LANCZOS_COEFF.iter().enumerate().skip(1) {
        acc = acc + T::of(c) / (z + T::of_usize(i));
    }
    let t = z + g + half;
    let ln_sqrt_2pi = T::of(0.918_938_533_204_672_78); // ln(2 pi)/2
    ln_sqrt_2pi + (z + half) * t.ln() - t + acc.ln()
}

/// Gamma(nu + 1) for a rational order nu >= 0.
///
/// Half-integral orders go through the exact product; everything else falls
/// back to `exp(ln_gamma)`.
pub fn gamma_plus_one<T: Real>(order: BesselOrder) -> Result<T> {
    let value = if order.is_half_integral() {
        if order.denom() == 1 {
            // Gamma(n + 1) = n!
            let n = order.numer();
            let mut acc = T::one();
            for j in 2..=n {
                acc = acc * T::of_i64(j);
            }
            acc
        } else {
            // nu = (2k + 1)/2: Gamma(nu + 1) = sqrt(pi) * prod_{j=1}^{k+1} (2j - 1)/2
            let k = (order.numer() - 1) / 2;
            let mut acc = T::PI().sqrt();
            for j in 1..=(k + 1) {
                acc = acc * T::of_i64(2 * j - 1) / T::of(2.0);
            }
            acc
        }
    } else {
        ln_gamma(T::of(order.as_f64()) + T::one()).exp()
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(format!("Gamma({} + 1) overflows", order)))
    }
}

/// Gamma(-k - 1/2) = r * sqrt(pi) with r rational; returns r.
pub fn gamma_negative_half_integer(k: u32) -> BigRational {
    // Gamma(-1/2) = -2 sqrt(pi); Gamma(-k-1/2) = Gamma(-k+1/2) / (-k-1/2)
    let mut r = BigRational::new(BigInt::from(-2), BigInt::from(1));
    for j in 1..=k {
        r *= BigRational::new(BigInt::from(-2), BigInt::from(2 * j + 1));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn ln_gamma_matches_factorials() {
        for n in 1..15u32 {
            let expect: f64 = (1..n).map(|k| (k as f64).ln()).sum();
            let got = ln_gamma(n as f64);
            assert!((got - expect).abs() < 1e-13 * (1.0 + expect.abs()), "n={n}");
        }
    }

    #[test]
    fn ln_gamma_half() {
        // Gamma(1/2) = sqrt(pi)
        let got = ln_gamma(0.5f64);
        let expect = std::f64::consts::PI.sqrt().ln();
        assert!((got - expect).abs() < 1e-14);
    }

    #[test]
    fn exact_half_integer_gamma() {
        // Gamma(1/2 + 1) = sqrt(pi)/2
        let g: f64 = gamma_plus_one(BesselOrder::half(1).unwrap()).unwrap();
        assert!((g - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-15);
        // Gamma(5/2 + 1) = 15 sqrt(pi) / 8
        let g: f64 = gamma_plus_one(BesselOrder::half(5).unwrap()).unwrap();
        assert!((g - 15.0 * std::f64::consts::PI.sqrt() / 8.0).abs() < 1e-14);
        // Gamma(4) = 6
        let g: f64 = gamma_plus_one(BesselOrder::from_integer(3).unwrap()).unwrap();
        assert_eq!(g, 6.0);
    }

    #[test]
    fn negative_half_integer_chain() {
        // Gamma(-1/2) = -2 sqrt(pi), Gamma(-3/2) = 4/3 sqrt(pi), Gamma(-5/2) = -8/15 sqrt(pi)
        assert_eq!(gamma_negative_half_integer(0).to_f64().unwrap(), -2.0);
        assert!((gamma_negative_half_integer(1).to_f64().unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((gamma_negative_half_integer(2).to_f64().unwrap() + 8.0 / 15.0).abs() < 1e-15);
    }
}
