//! Compensated (Neumaier) accumulation.
//!
//! Summation order is whatever the caller feeds in; the accumulator itself is
//! deterministic, so a fixed feed order gives bit-identical results across
//! runs and thread counts.

use crate::real::Real;

/// Neumaier variant of Kahan summation. Unlike plain Kahan it stays accurate
/// when an addend exceeds the running sum.
#[derive(Debug, Clone, Copy)]
pub struct CompensatedSum<T> {
    sum: T,
    compensation: T,
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        CompensatedSum {
            sum: T::zero(),
            compensation: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> T {
        self.sum + self.compensation
    }

    pub fn sum_iter<I: IntoIterator<Item = T>>(iter: I) -> T {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc.value()
    }
}

impl<T: Real> Default for CompensatedSum<T> {
    fn default() -> Self {
        Self::new()
    }
}
