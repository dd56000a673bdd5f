//! Translation lengths: the tail family m_p, lengths from μ, and the arm
//! length p(ε) needed to come within ε of log 2.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{f64_below, int, ln_enclosure, Interval};
use crate::exact::poly::IntegerPolynomial;
use crate::exact::roots::{largest_real_root, RootEnclosure};

/// q_p(m) = (m^{p+1} − 2m^p + 2m − 1)/(m − 1), whose largest root m_p
/// increases to 2 as p → ∞.
pub fn tail_polynomial(p: usize) -> IntegerPolynomial {
    let num = IntegerPolynomial::monomial(p + 1)
        .sub(&IntegerPolynomial::monomial(p).scale(&BigInt::from(2)))
        .add(&IntegerPolynomial::from_i64s(&[-1, 2]));
    num.div_exact(&IntegerPolynomial::from_i64s(&[-1, 1])).expect("m = 1 is a root of the numerator")
}

/// m_p, the largest root of q_p in [1, 2], for p ≥ 3 (m_3 = 1).
pub fn solve_mp(p: usize, tol: &BigRational) -> Result<RootEnclosure> {
    if p < 3 {
        return Err(Error::OutOfRange(format!("p = {p}: the tail family starts at p = 3")));
    }
    largest_real_root(&tail_polynomial(p), &Interval::from_ints(1, 2), tol)
}

/// Outward-rounded enclosure of a translation length log λ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LengthEnclosure {
    pub lo: f64,
    pub hi: f64,
}

impl LengthEnclosure {
    pub fn from_stretch(iv: &Interval) -> LengthEnclosure {
        if iv.is_point() && iv.lo == int(1) {
            return LengthEnclosure { lo: 0.0, hi: 0.0 };
        }
        let (lo, hi) = ln_enclosure(iv);
        LengthEnclosure { lo: lo.max(0.0), hi: hi.max(0.0) }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// The stretch factor m ≥ 1 with m + 1/m + 2 = μ², on a rational t = μ²:
/// the largest root of d·x² − (n − 2d)·x + d where t = n/d.
fn stretch_at(t: &BigRational, tol: &BigRational) -> Result<RootEnclosure> {
    let s = t - int(2);
    let (n, d) = (s.numer().clone(), s.denom().clone());
    let q = IntegerPolynomial::new(vec![d.clone(), -n, d]);
    let bound = BigRational::from_integer(q.cauchy_bound().max(BigInt::from(2)));
    largest_real_root(&q, &Interval::new(int(1), bound), tol)
}

/// The stretch factor m = λ(μ) and log m, from an enclosure of μ ≥ 2.
/// m is increasing in μ, so the endpoint images bound it.
pub fn length_from_mu(mu: &Interval, tol: &BigRational) -> Result<(Interval, LengthEnclosure)> {
    if mu.hi < int(2) {
        return Err(Error::OutOfRange("mu below 2 has no real stretch factor".into()));
    }
    let four = int(4);
    let t_lo = (&mu.lo * &mu.lo).max(four.clone());
    let t_hi = (&mu.hi * &mu.hi).max(four);
    let lo = stretch_at(&t_lo, tol)?;
    let hi = stretch_at(&t_hi, tol)?;
    let m = Interval::new(lo.interval.lo.clone(), hi.interval.hi.clone());
    let len = LengthEnclosure::from_stretch(&m);
    Ok((m, len))
}

/// ln 2, rounded up.
pub fn log2_upper() -> f64 {
    std::f64::consts::LN_2.next_up()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PEpsilon {
    /// ⌈ln(3/ε) / ln(2 − ε)⌉.
    pub formula: usize,
    /// The least p ≥ 3 with m_p > 2e^{−ε}, certified with outward rounding.
    pub least: usize,
}

/// p(ε) for 0 < ε ≤ 1/2: both the closed-form bound and the least p for
/// which the tail family has log m_p > log 2 − ε.
pub fn p_of_epsilon(eps: f64, tol: &BigRational) -> Result<PEpsilon> {
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::OutOfRange(format!("epsilon = {eps} must lie in (0, 1/2]")));
    }
    let formula = ((3.0 / eps).ln() / (2.0 - eps).ln()).ceil() as usize;
    // Threshold 2e^{−ε} rounded up, so that m_p.lo above it certifies the bound.
    let threshold = (2.0 * (-eps).exp()).next_up().next_up();
    let mut p = 3;
    loop {
        let m = solve_mp(p, tol)?;
        if f64_below(m.lo()) > threshold {
            return Ok(PEpsilon { formula, least: p });
        }
        p += 1;
        if p > 10 * formula.max(3) + 100 {
            return Err(Error::CapExceeded { requested: p, cap: 10 * formula.max(3) + 100 });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::interval::parse_rational;

    fn tol() -> BigRational {
        parse_rational("1e-12").unwrap()
    }

    #[test]
    fn tail_polynomials() {
        // p = 3: (m⁴ − 2m³ + 2m − 1)/(m − 1) = (m − 1)²(m + 1).
        let q3 = tail_polynomial(3);
        assert_eq!(q3, IntegerPolynomial::from_i64s(&[1, -1, -1, 1]));
        assert_eq!(solve_mp(3, &tol()).unwrap().interval, Interval::point(int(1)));
        let m4 = solve_mp(4, &tol()).unwrap().mid_f64();
        assert!(m4 > 1.0 && m4 < 2.0);
        let mut last = 1.0;
        for p in 4..20 {
            let m = solve_mp(p, &tol()).unwrap().mid_f64();
            assert!(m > last && m < 2.0);
            last = m;
        }
        assert!(matches!(solve_mp(2, &tol()), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn length_from_mu_on_affine_and_e10() {
        let (m, l) = length_from_mu(&Interval::point(int(2)), &tol()).unwrap();
        assert_eq!(m, Interval::point(int(1)));
        assert_eq!((l.lo, l.hi), (0.0, 0.0));
        let mu = crate::spectral::mu::mu(2, 3, 7, &tol()).unwrap();
        let (m, l) = length_from_mu(mu.interval(), &tol()).unwrap();
        assert!(m.contains_f64(1.176_280_818_259_917_5));
        assert!(l.contains(1.176_280_818_259_917_5f64.ln()));
        assert!(l.width() < 1e-10);
    }

    #[test]
    fn p_of_epsilon_is_monotone_and_bounded() {
        let mut last = 0;
        for eps in [0.5, 0.25, 0.1, 0.05, 0.01] {
            let p = p_of_epsilon(eps, &parse_rational("1e-15").unwrap()).unwrap();
            assert!(p.least >= last);
            assert!(p.least <= p.formula, "eps = {eps}: {p:?}");
            last = p.least;
        }
        assert!(p_of_epsilon(0.0, &tol()).is_err());
        assert!(p_of_epsilon(0.6, &tol()).is_err());
    }
}
