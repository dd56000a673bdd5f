//! Field elements over the rationals or a prime field.
//!
//! A [`Scalar`] always carries its field. The `try_*` methods reject
//! arithmetic across fields; the operator impls assume the caller already
//! checked (all public constructors in this crate do) and panic otherwise.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Prime field of order `p`; `p` must be a prime below 2^63.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Number of points of the projective plane over this field, if finite.
    pub fn plane_size(&self) -> Option<u128> {
        match *self {
            Field::Rationals => None,
            Field::Prime(p) => {
                let p = p as u128;
                Some(p * p + p + 1)
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q` / `Q` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = t.strip_prefix("fp:").or_else(|| t.strip_prefix("FP:")) {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in field tag `{s}`")))?;
            return Field::prime(p);
        }
        Err(Error::Parse(format!("unknown field tag `{s}` (expected q or fp:<p>)")))
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Stored in lowest terms with positive denominator (guaranteed by `BigRational`).
    Rational(BigRational),
    /// `0 <= value < modulus`.
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                value: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(field: Field, v: &BigInt) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Prime { value: r.to_u64().unwrap_or(0), modulus: p }
            }
        }
    }

    pub fn from_rational(field: Field, v: &BigRational) -> Result<Scalar> {
        match field {
            Field::Rationals => Ok(Scalar::Rational(v.clone())),
            Field::Prime(_) => {
                let num = Scalar::from_bigint(field, v.numer());
                let den = Scalar::from_bigint(field, v.denom());
                num.try_div(&den)
            }
        }
    }

    /// Parses a decimal integer, or `a/b` for rationals (also accepted over F_p
    /// when `b` is invertible).
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let bad = || Error::Parse(format!("bad field element `{s}`"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(t).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::from_rational(field, &BigRational::new(num, den))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field().to_string(), other.field().to_string()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                let s = (*a as u128 + *b as u128) % *modulus as u128;
                Scalar::Prime { value: s as u64, modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime { value: mul_mod(*a, *b, *modulus), modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Prime { value, modulus } => inv_mod(*value, *modulus)
                .map(|v| Scalar::Prime { value: v, modulus: *modulus })
                .ok_or(Error::DivisionByZero),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut acc = Scalar::one(self.field());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Prime { .. } => None,
        }
    }

    /// Sign of a rational scalar (prime-field elements report 0 or 1).
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Prime { value, .. } => (*value != 0) as i32,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar arithmetic across fields")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$try(&rhs).expect("scalar arithmetic across fields")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);
forward_op!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_reduces_into_range() {
        let f = Field::prime(7).unwrap();
        assert_eq!(Scalar::from_i64(f, -1), Scalar::Prime { value: 6, modulus: 7 });
        assert_eq!(Scalar::from_i64(f, 15), Scalar::Prime { value: 1, modulus: 7 });
        let three = Scalar::from_i64(f, 3);
        assert!((&three * &three.inv().unwrap()).is_one());
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let a = Scalar::parse(Field::Rationals, "6/-4").unwrap();
        let r = a.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Scalar::one(Field::Rationals);
        let b = Scalar::one(Field::prime(5).unwrap());
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(..))));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn field_tags_parse() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("fp:1009".parse::<Field>().unwrap(), Field::Prime(1009));
        assert!("fp:1001".parse::<Field>().is_err());
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(561));
    }

    #[test]
    fn parse_rational_over_prime_field() {
        let f = Field::prime(7).unwrap();
        let half = Scalar::parse(f, "1/2").unwrap();
        assert_eq!(half, Scalar::from_i64(f, 4));
        assert!(Scalar::parse(f, "1/7").is_err());
    }
}
