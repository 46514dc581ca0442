//! Minimal double-word ("double-double") arithmetic.
//!
//! A value is an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`, giving
//! roughly twice the working precision of the base scalar. Only the handful
//! of operations the Bessel power series and phase reduction need are
//! provided. Products rely on `mul_add` for the exact low part.

use crate::real::Real;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd<T> {
    pub hi: T,
    pub lo: T,
}

impl<T: Real> Dd<T> {
    pub fn zero() -> Self {
        Dd {
            hi: T::zero(),
            lo: T::zero(),
        }
    }

    pub fn from(x: T) -> Self {
        Dd { hi: x, lo: T::zero() }
    }

    pub fn value(self) -> T {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd<T>) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        renorm(s, e)
    }

    pub fn add_scalar(self, x: T) -> Self {
        let (s, e) = two_sum(self.hi, x);
        renorm(s, e + self.lo)
    }

    /// n/d to roughly twice working precision.
    pub fn from_ratio(n: T, d: T) -> Self {
        let q1 = n / d;
        let (p, e) = two_prod(q1, d);
        let q2 = ((n - p) - e) / d;
        renorm(q1, q2)
    }

    pub fn mul_dd(self, o: Dd<T>) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        renorm(p, e + self.hi * o.lo + self.lo * o.hi)
    }

    pub fn div_dd(self, o: Dd<T>) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul_scalar(q1).neg());
        let q2 = r.hi / o.hi;
        let r2 = r.add(o.mul_scalar(q2).neg());
        let q3 = r2.hi / o.hi;
        renorm(q1, q2 + q3)
    }

    pub fn mul_scalar(self, x: T) -> Self {
        let (p, e) = two_prod(self.hi, x);
        renorm(p, e + self.lo * x)
    }

    pub fn div_scalar(self, x: T) -> Self {
        let q1 = self.hi / x;
        // remainder of the first quotient digit, via an exact product
        let (p, e) = two_prod(q1, x);
        let r = ((self.hi - p) - e) + self.lo;
        let q2 = r / x;
        renorm(q1, q2)
    }

    pub fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

#[inline]
fn renorm<T: Real>(hi: T, lo: T) -> Dd<T> {
    let (s, e) = quick_two_sum(hi, lo);
    Dd { hi: s, lo: e }
}

/// Error-free sum: `a + b = s + e` exactly.
#[inline]
pub(crate) fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| >= |b|`.
#[inline]
pub(crate) fn quick_two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add: `a * b = p + e` exactly.
#[inline]
pub(crate) fn two_prod<T: Real>(a: T, b: T) -> (T, T) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sum_recovers_lost_bits() {
        let (s, e) = two_sum(1.0f64, 1e-20);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-20);
    }

    #[test]
    fn two_prod_is_exact() {
        let a = 1.0 + 2f64.powi(-30);
        let b = 1.0 - 2f64.powi(-29);
        let (p, e) = two_prod(a, b);
        // reconstruct in higher precision via integer reasoning on small cases
        let exact = (a as f64) * (b as f64); // rounded
        assert_eq!(p, exact);
        assert!(e.abs() <= f64::EPSILON * p.abs());
    }

    #[test]
    fn dd_series_accumulation_beats_plain_sum() {
        // sum_k (-x)^k / k! at x = 15: cancellation by a factor ~e^{2x},
        // fatal in plain f64, easily absorbed by the doubled precision
        let x = 15.0f64;
        let mut term = Dd::from(1.0f64);
        let mut acc = Dd::from(1.0f64);
        let mut plain_term = 1.0f64;
        let mut plain = 1.0f64;
        for k in 1..200 {
            term = term.mul_scalar(-x).div_scalar(k as f64);
            acc = acc.add(term);
            plain_term *= -x / k as f64;
            plain += plain_term;
        }
        let expect = (-x).exp();
        assert!(((acc.value() - expect) / expect).abs() < 1e-14);
        assert!(((plain - expect) / expect).abs() > 1e-14);
    }
}
