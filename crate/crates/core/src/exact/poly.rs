//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients are stored lowest degree first; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntegerPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntegerPolynomial {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients given highest degree first.
    pub fn from_high_to_low(coeffs: &[i64]) -> IntegerPolynomial {
        let mut c: Vec<i64> = coeffs.to_vec();
        c.reverse();
        Self::from_i64s(&c)
    }

    pub fn zero() -> IntegerPolynomial {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntegerPolynomial {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntegerPolynomial {
        Self::new(vec![c])
    }

    /// x^k
    pub fn monomial(k: usize) -> IntegerPolynomial {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntegerPolynomial { coeffs: c }
    }

    /// x - a
    pub fn linear_root(a: i64) -> IntegerPolynomial {
        Self::from_i64s(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Sign of p(x) at a rational point, evaluated without forming fractions.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(deg) = self.degree() else {
            return Ordering::Equal;
        };
        // d^deg p(n/d) = sum c_i n^i d^(deg-i), and d > 0.
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs[..=deg].iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc.cmp(&BigInt::zero())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> IntegerPolynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntegerPolynomial {
        IntegerPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> IntegerPolynomial {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> IntegerPolynomial {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> IntegerPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        IntegerPolynomial { coeffs: c }
    }

    /// gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntegerPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn positive_primitive(&self) -> IntegerPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) · a mod b, computed in ℤ[x].
    pub fn pseudo_rem(&self, b: &IntegerPolynomial) -> IntegerPolynomial {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let lb = b.leading();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return r };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            let t = b.scale(&lr).shift(dr - db);
            r = r.scale(&lb).sub(&t);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&num_traits::pow(lb, steps));
        }
        r
    }

    /// Exact division in ℤ[x]; `None` when `b` does not divide `self` over ℤ.
    pub fn div_exact(&self, b: &IntegerPolynomial) -> Option<IntegerPolynomial> {
        let db = b.degree()?;
        let lb = b.leading();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return Some(Self::zero()) };
        if da < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (t, rem) = r.leading().div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&b.scale(&t).shift(dr - db));
            q[dr - db] = t;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd in ℤ[x] with positive leading coefficient.
    pub fn gcd(&self, other: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// The product of the distinct irreducible factors, primitive.
    pub fn squarefree_part(&self) -> IntegerPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part().div_exact(&g).expect("gcd divides").primitive_part()
    }

    /// x^n p(1/x)
    pub fn reversed(&self) -> IntegerPolynomial {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Palindromic coefficient list (and nonzero constant term).
    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// For a self-reciprocal polynomial of even degree 2d, the trace
    /// polynomial T with p(x) = x^d · T(x + 1/x).
    pub fn trace_polynomial(&self) -> Option<IntegerPolynomial> {
        let n = self.degree()?;
        if n % 2 != 0 || !self.is_self_reciprocal() {
            return None;
        }
        let d = n / 2;
        // x^k + x^-k = V_k(y), V_0 = 2, V_1 = y, V_k = y V_{k-1} - V_{k-2}.
        let mut v_prev = IntegerPolynomial::constant(BigInt::from(2));
        let mut v_cur = IntegerPolynomial::monomial(1);
        let mut t = IntegerPolynomial::constant(self.coeff(d));
        for k in 1..=d {
            if k > 1 {
                let next = v_cur.shift(1).sub(&v_prev);
                v_prev = v_cur;
                v_cur = next;
            }
            t = t.add(&v_cur.scale(&self.coeff(d + k)));
        }
        Some(t)
    }

    /// The n-th cyclotomic polynomial.
    pub fn cyclotomic(n: usize) -> IntegerPolynomial {
        assert!(n >= 1);
        let mut p = IntegerPolynomial::monomial(n).sub(&IntegerPolynomial::one());
        for d in 1..n {
            if n % d == 0 {
                p = p.div_exact(&IntegerPolynomial::cyclotomic(d)).expect("cyclotomic divides");
            }
        }
        p
    }

    /// Number of real roots in [-bound, bound] cannot exceed the degree;
    /// this is the Cauchy bound 1 + max |c_i / c_n|, rounded up.
    pub fn cauchy_bound(&self) -> BigInt {
        let lead = self.leading().abs();
        let m = self.coeffs.iter().rev().skip(1).map(|c| c.abs()).max().unwrap_or_default();
        BigInt::one() + (m + &lead - BigInt::one()) / lead
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(if c.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

impl From<IntegerPolynomial> for Vec<String> {
    fn from(p: IntegerPolynomial) -> Vec<String> {
        p.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for IntegerPolynomial {
    type Error = String;
    fn try_from(v: Vec<String>) -> Result<Self, String> {
        v.iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad coefficient `{s}`: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(IntegerPolynomial::new)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sign_at_matches_exact_evaluation() {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]);
        assert_eq!(p.sign_at(&rat(3, 2)), Ordering::Greater);
        assert_eq!(p.sign_at(&rat(7, 5)), Ordering::Less);
        assert_eq!(p.eval(&rat(3, 2)), rat(1, 4));
        let q = IntegerPolynomial::from_i64s(&[1, -3, 0, 2]);
        for x in [rat(-5, 3), rat(0, 1), rat(1, 2), rat(11, 7)] {
            let v = q.eval(&x);
            assert_eq!(q.sign_at(&x), v.cmp(&BigRational::zero()));
        }
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let p = IntegerPolynomial::linear_root(1).pow(2).mul(&IntegerPolynomial::linear_root(-2));
        let sf = p.squarefree_part();
        assert_eq!(sf, IntegerPolynomial::linear_root(1).mul(&IntegerPolynomial::linear_root(-2)));
        let g = p.gcd(&IntegerPolynomial::from_i64s(&[-1, 0, 1]).scale(&BigInt::from(6)));
        assert_eq!(g, IntegerPolynomial::linear_root(1));
    }

    #[test]
    fn exact_division() {
        let a = IntegerPolynomial::from_i64s(&[-1, 0, 0, 0, 0, 1]);
        let b = IntegerPolynomial::linear_root(1);
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, IntegerPolynomial::from_i64s(&[1, 1, 1, 1, 1]));
        assert!(a.div_exact(&IntegerPolynomial::linear_root(2)).is_none());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(IntegerPolynomial::cyclotomic(1), IntegerPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(IntegerPolynomial::cyclotomic(6), IntegerPolynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(IntegerPolynomial::cyclotomic(12), IntegerPolynomial::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn trace_polynomial_of_quadratic_unit() {
        let p = IntegerPolynomial::from_i64s(&[1, -3, 1]);
        assert_eq!(p.trace_polynomial().unwrap(), IntegerPolynomial::from_i64s(&[-3, 1]));
        // x^4 + 1 = x^2 (y^2 - 2)
        let q = IntegerPolynomial::from_i64s(&[1, 0, 0, 0, 1]);
        assert_eq!(q.trace_polynomial().unwrap(), IntegerPolynomial::from_i64s(&[-2, 0, 1]));
    }

    #[test]
    fn display_is_readable() {
        let lehmer = IntegerPolynomial::from_high_to_low(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(
            lehmer.to_string(),
            "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1"
        );
    }
}
