//! Certificates that a characteristic polynomial is a product of cyclotomic
//! factors and one Salem factor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{int, Interval};
use crate::exact::poly::IntegerPolynomial;
use crate::exact::roots::{largest_real_root, RootEnclosure, SturmSequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SalemCertificate {
    /// The polynomial that was certified.
    pub polynomial: IntegerPolynomial,
    /// The Salem factor left after removing cyclotomic factors.
    pub factor: IntegerPolynomial,
    /// Indices n of the cyclotomic factors Φ_n removed, with repetition.
    pub cyclotomic_factors: Vec<usize>,
    pub reciprocal: bool,
    /// Number of roots of modulus greater than 1 (always 1 when certified).
    pub roots_outside: usize,
    pub salem_root: RootEnclosure,
    /// The factor has degree 2: the root is a quadratic unit, the degenerate
    /// Salem case.
    pub quadratic_unit: bool,
    /// Constant coefficient of the factor (±1 for a unit).
    #[serde(with = "crate::exact::serde_str::bigint")]
    pub constant: BigInt,
}

/// Strips every cyclotomic factor Φ_n with n ≤ `max_n`, with multiplicity.
pub fn strip_cyclotomic(p: &IntegerPolynomial, max_n: usize) -> (IntegerPolynomial, Vec<usize>) {
    let mut rest = p.clone();
    let mut found = Vec::new();
    for n in 1..=max_n {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        if euler_phi(n) > rest.degree().unwrap_or(0) {
            continue;
        }
        let phi = IntegerPolynomial::cyclotomic(n);
        while let Some(q) = rest.div_exact(&phi) {
            rest = q;
            found.push(n);
        }
    }
    (rest, found)
}

pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Certifies `p` as (cyclotomic part) × (Salem factor).
///
/// After the cyclotomic factors are removed, the remainder f of degree 2d
/// must be self-reciprocal; writing f(x) = x^d T(x + 1/x), f is Salem
/// (or a quadratic unit) exactly when T is squarefree with all roots real,
/// exactly one root greater than 2 and none at most −2: each root t of T
/// in (−2, 2) gives a pair of roots of f on the unit circle, and the root
/// t > 2 gives the real pair λ, 1/λ.
pub fn salem_certify(p: &IntegerPolynomial, tol: &BigRational) -> Result<SalemCertificate> {
    if !p.is_self_reciprocal() && !p.reversed().neg().eq(p) {
        return Err(Error::NotReciprocal);
    }
    let degree = p.degree().unwrap_or(0);
    // Any cyclotomic factor Φ_n of p has φ(n) ≤ deg p, which forces n ≤ 2·deg².
    let max_n = (2 * degree * degree).max(30);
    let (factor, cyclotomic_factors) = strip_cyclotomic(p, max_n);
    let factor = if factor.leading() < BigInt::zero() { factor.neg() } else { factor };
    let fd = factor.degree().unwrap_or(0);
    if fd == 0 {
        return Err(Error::NotSalem("all factors are cyclotomic".into()));
    }
    if fd % 2 != 0 || !factor.is_self_reciprocal() {
        return Err(Error::NotSalem(format!("non-cyclotomic factor {factor} is not even self-reciprocal")));
    }
    let t = factor.trace_polynomial().expect("even self-reciprocal");
    if t.squarefree_part().degree() != t.degree() {
        return Err(Error::NotSalem("trace polynomial has a repeated root".into()));
    }
    let sturm = SturmSequence::new(&t);
    let real = sturm.count_real();
    if real != t.degree().unwrap_or(0) {
        return Err(Error::NotSalem(format!("trace polynomial has {} non-real roots", t.degree().unwrap_or(0) - real)));
    }
    let above = sturm.count_above(&int(2));
    if above != 1 {
        return Err(Error::NotSalem(format!("{above} roots of modulus > 1 in the trace polynomial")));
    }
    if sturm.count_below(&int(-2)) > 0 || t.sign_at(&int(-2)).is_eq() {
        return Err(Error::NotSalem("a real root at most −1".into()));
    }
    let bound = BigRational::from_integer(factor.cauchy_bound().max(BigInt::from(2)));
    let salem_root = largest_real_root(&factor, &Interval::new(BigRational::one(), bound), tol)?;
    Ok(SalemCertificate {
        polynomial: p.clone(),
        constant: factor.coeff(0),
        quadratic_unit: fd == 2,
        factor,
        cyclotomic_factors,
        reciprocal: true,
        roots_outside: 1,
        salem_root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::interval::parse_rational;

    fn tol() -> BigRational {
        parse_rational("1e-12").unwrap()
    }

    fn lehmer() -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    }

    #[test]
    fn phi_values() {
        assert_eq!((1..=12).map(euler_phi).collect::<Vec<_>>(), vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn lehmer_times_cyclotomic() {
        let p = lehmer().mul(&IntegerPolynomial::cyclotomic(1)).mul(&IntegerPolynomial::cyclotomic(6));
        let c = salem_certify(&p, &tol()).unwrap();
        assert_eq!(c.factor, lehmer());
        assert_eq!(c.cyclotomic_factors, vec![1, 6]);
        assert!(!c.quadratic_unit);
        assert!((c.salem_root.mid_f64() - 1.176_280_818_259_917).abs() < 1e-11);
    }

    #[test]
    fn golden_square_is_a_quadratic_unit() {
        // x² − 3x + 1, root φ² ≈ 2.618.
        let c = salem_certify(&IntegerPolynomial::from_i64s(&[1, -3, 1]), &tol()).unwrap();
        assert!(c.quadratic_unit);
        assert_eq!(c.constant, BigInt::from(1));
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            salem_certify(&IntegerPolynomial::from_i64s(&[1, 2, 3]), &tol()),
            Err(Error::NotReciprocal)
        ));
        // Two roots outside the unit circle: (x² − 3x + 1)².
        let sq = IntegerPolynomial::from_i64s(&[1, -3, 1]).pow(2);
        assert!(matches!(salem_certify(&sq, &tol()), Err(Error::NotSalem(_))));
        // Purely cyclotomic.
        let cyc = IntegerPolynomial::cyclotomic(5).mul(&IntegerPolynomial::cyclotomic(2));
        assert!(matches!(salem_certify(&cyc, &tol()), Err(Error::NotSalem(_))));
        // x⁴ + 3x² + 1: trace polynomial y² + 1 has no real roots.
        let off = IntegerPolynomial::from_i64s(&[1, 0, 3, 0, 1]);
        assert!(matches!(salem_certify(&off, &tol()), Err(Error::NotSalem(_))));
    }
}
