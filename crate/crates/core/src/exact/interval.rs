//! Closed rational intervals used as certified enclosures.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Interval {
        Interval::new(int(lo), int(hi))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Containment test for a float, with the float taken exactly.
    pub fn contains_f64(&self, x: f64) -> bool {
        BigRational::from_f64(x).is_some_and(|r| self.contains(&r))
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn mid_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    /// Largest float not above `lo`.
    pub fn lo_f64(&self) -> f64 {
        f64_below(&self.lo)
    }

    /// Smallest float not below `hi`.
    pub fn hi_f64(&self) -> f64 {
        f64_above(&self.hi)
    }

    pub fn width_f64(&self) -> f64 {
        to_f64(&self.width())
    }

    /// Interval square, valid when `lo >= 0`.
    pub fn square_nonneg(&self) -> Interval {
        debug_assert!(!self.lo.is_negative());
        Interval::new(&self.lo * &self.lo, &self.hi * &self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{:.12}, {:.12}]", self.lo_f64(), self.hi_f64())
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.lo.to_string(), self.hi.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [lo, hi]: [String; 2] = Deserialize::deserialize(d)?;
        let parse = |s: &str| parse_rational(s).map_err(serde::de::Error::custom);
        Ok(Interval::new(parse(&lo)?, parse(&hi)?))
    }
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `n`, `n/d`, or a plain decimal such as `1e-12` / `0.001`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| format!("bad rational `{s}`"))?;
        let d: BigInt = d.trim().parse().map_err(|_| format!("bad rational `{s}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Ok(n) = t.parse::<BigInt>() {
        return Ok(BigRational::from_integer(n));
    }
    parse_decimal(t).ok_or_else(|| format!("bad number `{s}`"))
}

/// Exact value of a decimal literal such as `-0.125` or `1e-12`.
fn parse_decimal(t: &str) -> Option<BigRational> {
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let negative = int_part.starts_with('-');
    let int_digits = int_part.trim_start_matches(['+', '-']);
    if int_digits.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{int_digits}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().ok()?);
    let shift = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    value *= ten.pow(shift);
    Some(if negative { -value } else { value })
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Largest f64 that is `<= r`.
pub fn f64_below(r: &BigRational) -> f64 {
    let mut x = to_f64(r);
    while BigRational::from_f64(x).is_some_and(|xr| &xr > r) {
        x = x.next_down();
    }
    x
}

/// Smallest f64 that is `>= r`.
pub fn f64_above(r: &BigRational) -> f64 {
    let mut x = to_f64(r);
    while BigRational::from_f64(x).is_some_and(|xr| &xr < r) {
        x = x.next_up();
    }
    x
}

/// Enclosure of `ln` over an interval of positive reals, rounded outward.
pub fn ln_enclosure(iv: &Interval) -> (f64, f64) {
    let lo = f64_below(&iv.lo).ln();
    let hi = f64_above(&iv.hi).ln();
    // ln is correctly rounded to within 1 ulp on all supported platforms.
    (lo.next_down().next_down(), hi.next_up().next_up())
}
