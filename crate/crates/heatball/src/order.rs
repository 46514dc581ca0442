//! Exact rational Bessel order.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order nu of a Bessel function, kept as an exact rational so the series
/// algebra downstream stays exact. Negative orders are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BesselOrder {
    numer: i64,
    denom: i64,
}

impl BesselOrder {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Domain("order denominator is zero".into()));
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::new(0, 1) {
            return Err(Error::Domain(format!("negative order {}/{}", numer, denom)));
        }
        Ok(BesselOrder {
            numer: *r.numer(),
            denom: *r.denom(),
        })
    }

    pub fn from_integer(n: i64) -> Result<Self> {
        Self::new(n, 1)
    }

    /// nu = n/2, the family the ball spectra live on.
    pub fn half(n: i64) -> Result<Self> {
        Self::new(n, 2)
    }

    pub fn ratio(&self) -> Ratio<i64> {
        Ratio::new(self.numer, self.denom)
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn as_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }

    /// True when nu = k or k + 1/2; these orders admit exact gamma values.
    pub fn is_half_integral(&self) -> bool {
        self.denom == 1 || self.denom == 2
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    /// Order raised by an integer, for recurrences.
    pub fn shifted(&self, by: i64) -> Self {
        BesselOrder {
            numer: self.numer + by * self.denom,
            denom: self.denom,
        }
    }
}

impl fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl FromStr for BesselOrder {
    type Err = Error;

    /// Accepts integers (`"2"`), fractions (`"3/2"`), and finite decimals
    /// (`"0.5"`), all parsed exactly.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |detail: &str| Error::Domain(format!("cannot parse order {s:?}: {detail}"));
        if let Some((n, d)) = s.split_once('/') {
            let numer: i64 = n.trim().parse().map_err(|_| bad("bad numerator"))?;
            let denom: i64 = d.trim().parse().map_err(|_| bad("bad denominator"))?;
            return BesselOrder::new(numer, denom);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("bad decimal fraction"));
            }
            if frac.len() > 15 {
                return Err(bad("too many decimal digits for exact representation"));
            }
            let negative = int.starts_with('-');
            let int_part: i64 = if int.is_empty() || int == "-" {
                0
            } else {
                int.parse().map_err(|_| bad("bad integer part"))?
            };
            let scale = 10i64.pow(frac.len() as u32);
            let frac_part: i64 = frac.parse().map_err(|_| bad("bad fraction digits"))?;
            let numer = int_part
                .checked_mul(scale)
                .and_then(|v| {
                    if negative {
                        v.checked_sub(frac_part)
                    } else {
                        v.checked_add(frac_part)
                    }
                })
                .ok_or_else(|| bad("decimal out of range"))?;
            return BesselOrder::new(numer, scale);
        }
        let n: i64 = s.parse().map_err(|_| bad("not a number"))?;
        BesselOrder::from_integer(n)
    }
}
