//! Exact rational log-series coefficients.
//!
//! Two families, both obtained by a formal logarithm over arbitrary-size
//! rationals (no floating point anywhere):
//!
//! * small-argument: `ln J_nu(k) = nu ln k - ln(2^nu Gamma(nu+1)) + sum g_l k^{2l}`,
//!   from the ascending power series of J_nu;
//! * large-argument: `ln I_nu(k) ~ k - ln(2 pi k)/2 + sum_{j>=1} h_j k^{-j}`,
//!   from the asymptotic series of I_nu, whose gamma-function ratio
//!   `Gamma(nu+1/2+l)/Gamma(nu+1/2-l)` is expanded as the finite product
//!   `(nu+1/2-l)(nu+1/2-l+1)...(nu-1/2+l)`. The product form stays finite at
//!   half-integral orders where the denominator gamma alone is singular, and
//!   makes every h_j an exact rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use crate::error::{Error, Result};
use crate::order::BesselOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// g_l coefficients of the small-argument log-series of J.
    LogJSmallK,
    /// h_j coefficients of the large-argument log-asymptotics of I.
    LogILargeK,
}

/// Exact rational coefficients g_1..g_L or h_1..h_J, 1-indexed.
#[derive(Debug, Clone)]
pub struct RationalSeries {
    pub order: BesselOrder,
    pub kind: SeriesKind,
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// Coefficient at 1-based index.
    pub fn coeff(&self, index: usize) -> &BigRational {
        &self.coeffs[index - 1]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::{ToPrimitive, Zero};
    r.to_f64().unwrap_or_else(|| {
        // fall back through a reduced convergent when numerator/denominator
        // individually overflow f64
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn order_as_big(order: BesselOrder) -> BigRational {
    BigRational::new(BigInt::from(order.numer()), BigInt::from(order.denom()))
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// d with 1 + sum d_n x^n = log-series of 1 + sum c_n x^n:
/// n d_n = n c_n - sum_{j=1}^{n-1} j d_j c_{n-j}.
pub fn formal_log_one_plus(c: &[BigRational]) -> Vec<BigRational> {
    let n = c.len();
    let mut d: Vec<BigRational> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc = big(m as i64) * &c[m - 1];
        for j in 1..m {
            acc -= big(j as i64) * &d[j - 1] * &c[m - j - 1];
        }
        d.push(acc / big(m as i64));
    }
    d
}

/// Inverse of `formal_log_one_plus`: n c_n = sum_{j=1}^{n} j d_j c_{n-j}.
pub fn formal_exp(d: &[BigRational]) -> Vec<BigRational> {
    let n = d.len();
    let mut c: Vec<BigRational> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc = big(m as i64) * &d[m - 1]; // j = m term, c_0 = 1
        for j in 1..m {
            acc += big(j as i64) * &d[j - 1] * &c[m - j - 1];
        }
        c.push(acc / big(m as i64));
    }
    c
}

/// g_1..g_L: formal log of the ascending series of J_nu in the variable k^2.
///
/// The series c_l of (2/k)^nu Gamma(nu+1) J_nu(k) in y = (k/2)^2 obeys
/// c_l = -c_{l-1} / (l (nu + l)); the log coefficients in y convert to the
/// k^{2l} normalization by 4^{-l}.
pub fn log_j_small_k_coeffs(order: BesselOrder, max_order: usize) -> Result<RationalSeries> {
    if max_order == 0 {
        return Err(Error::Domain("series order must be >= 1".into()));
    }
    let nu = order_as_big(order);
    let mut c: Vec<BigRational> = Vec::with_capacity(max_order);
    let mut cur = BigRational::one();
    for l in 1..=max_order {
        cur = -cur / (big(l as i64) * (&nu + big(l as i64)));
        c.push(cur.clone());
    }
    let d = formal_log_one_plus(&c);
    let mut scale = BigRational::one();
    let four = big(4);
    let coeffs = d
        .into_iter()
        .map(|g| {
            scale *= &four;
            g / &scale
        })
        .collect();
    Ok(RationalSeries {
        order,
        kind: SeriesKind::LogJSmallK,
        coeffs,
    })
}

/// h_1..h_J: formal log of the large-argument asymptotic series of I_nu in
/// the variable 1/k.
pub fn log_i_large_k_coeffs(order: BesselOrder, max_order: usize) -> Result<RationalSeries> {
    if max_order == 0 {
        return Err(Error::Domain("series order must be >= 1".into()));
    }
    let z = order_as_big(order) + BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut a: Vec<BigRational> = Vec::with_capacity(max_order);
    let mut cur = BigRational::one();
    for l in 1..=max_order {
        let l_big = big(l as i64);
        // a_l = -a_{l-1} (z - l)(z + l - 1) / (2 l)
        cur = -cur * (&z - &l_big) * (&z + &l_big - BigRational::one()) / (big(2) * &l_big);
        a.push(cur.clone());
    }
    let coeffs = formal_log_one_plus(&a);
    Ok(RationalSeries {
        order,
        kind: SeriesKind::LogILargeK,
        coeffs,
    })
}
