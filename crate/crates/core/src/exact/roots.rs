//! Real-root counting and isolation with Sturm sequences over ℤ[x].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{int, Interval};
use crate::exact::poly::IntegerPolynomial;

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<IntegerPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntegerPolynomial) -> SturmSequence {
        let p0 = p.squarefree_part();
        let mut chain = vec![p0.clone()];
        if p0.degree().unwrap_or(0) == 0 {
            return SturmSequence { chain };
        }
        let mut a = p0.clone();
        let mut b = p0.derivative().positive_primitive();
        while !b.is_zero() {
            chain.push(b.clone());
            // prem(a, b) = lc(b)^k · (a mod b); negate, then undo the sign of lc(b)^k.
            let k = a.degree().unwrap() - b.degree().unwrap() + 1;
            let mut r = a.pseudo_rem(&b).neg();
            if b.leading().is_negative() && k % 2 == 1 {
                r = r.neg();
            }
            a = b;
            b = r.positive_primitive();
        }
        SturmSequence { chain }
    }

    /// The squarefree polynomial whose roots are counted.
    pub fn base(&self) -> &IntegerPolynomial {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Number of sign changes of the chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|p| {
            let lead = p.leading().cmp(&BigInt::zero());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if positive || !odd {
                lead
            } else {
                lead.reverse()
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in the closed interval [a, b].
    pub fn count_closed(&self, a: &BigRational, b: &BigRational) -> usize {
        let at_a = usize::from(self.base().sign_at(a) == Ordering::Equal);
        self.count_in(a, b) + at_a
    }

    /// Number of distinct real roots above `a` (strictly).
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at_infinity(true))
    }

    /// Number of distinct real roots below `a` (strictly).
    pub fn count_below(&self, a: &BigRational) -> usize {
        let below_or_at = self.variations_at_infinity(false).saturating_sub(self.variations_at(a));
        below_or_at - usize::from(self.base().sign_at(a) == Ordering::Equal)
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false).saturating_sub(self.variations_at_infinity(true))
    }
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// A certified enclosure of one real root: the root lies in `interval`, and
/// the squarefree part of the polynomial has the recorded signs at the two
/// endpoints (so `sign_lo * sign_hi <= 0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEnclosure {
    pub interval: Interval,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl RootEnclosure {
    pub fn lo(&self) -> &BigRational {
        &self.interval.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.interval.hi
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.interval.contains_f64(x)
    }

    pub fn mid_f64(&self) -> f64 {
        self.interval.mid_f64()
    }

    pub fn width_f64(&self) -> f64 {
        self.interval.width_f64()
    }
}

fn sign_i8(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Narrows `(a, b]`, which must contain exactly one root of the chain's base,
/// until its width is at most `tol`. Exact rational roots hit during bisection
/// collapse the enclosure to a point.
fn refine(sturm: &SturmSequence, mut a: BigRational, mut b: BigRational, tol: &BigRational) -> RootEnclosure {
    let p = sturm.base();
    let two = int(2);
    if p.sign_at(&b) == Ordering::Equal {
        return point_enclosure(b);
    }
    let sign_b = p.sign_at(&b);
    while &(&b - &a) > tol {
        let mid = (&a + &b) / &two;
        match p.sign_at(&mid) {
            Ordering::Equal => return point_enclosure(mid),
            s if s == sign_b => b = mid,
            _ => a = mid,
        }
    }
    RootEnclosure {
        sign_lo: sign_i8(p.sign_at(&a)),
        sign_hi: sign_i8(sign_b),
        interval: Interval::new(a, b),
    }
}

fn point_enclosure(x: BigRational) -> RootEnclosure {
    RootEnclosure { interval: Interval::point(x), sign_lo: 0, sign_hi: 0 }
}

/// Encloses the largest real root of `p` in the closed `bracket` to width `tol`.
pub fn largest_real_root(p: &IntegerPolynomial, bracket: &Interval, tol: &BigRational) -> Result<RootEnclosure> {
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial has no isolated roots".into()));
    }
    if !tol.is_positive() {
        return Err(Error::OutOfRange("tolerance must be positive".into()));
    }
    let sturm = SturmSequence::new(p);
    let (lo, hi) = (bracket.lo.clone(), bracket.hi.clone());
    if sturm.count_in(&lo, &hi) == 0 {
        return if sturm.base().sign_at(&lo) == Ordering::Equal {
            Ok(point_enclosure(lo))
        } else {
            Err(Error::NoRootInBracket)
        };
    }
    // Bisect (a, b], always keeping the largest root, until it is isolated.
    let (mut a, mut b) = (lo, hi);
    let two = int(2);
    while sturm.count_in(&a, &b) > 1 {
        let mid = (&a + &b) / &two;
        if sturm.count_in(&mid, &b) >= 1 {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(refine(&sturm, a, b, tol))
}

/// Isolates every distinct real root of `p` in the closed `bracket`,
/// each to width `tol`, in increasing order.
pub fn isolate_real_roots(p: &IntegerPolynomial, bracket: &Interval, tol: &BigRational) -> Vec<RootEnclosure> {
    let sturm = SturmSequence::new(p);
    let mut out = Vec::new();
    if sturm.base().degree().unwrap_or(0) == 0 {
        return out;
    }
    if sturm.base().sign_at(&bracket.lo) == Ordering::Equal {
        out.push(point_enclosure(bracket.lo.clone()));
    }
    let mut stack = vec![(bracket.lo.clone(), bracket.hi.clone())];
    let mut found = Vec::new();
    let two = int(2);
    while let Some((a, b)) = stack.pop() {
        match sturm.count_in(&a, &b) {
            0 => {}
            1 => found.push(refine(&sturm, a, b, tol)),
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    found.sort_by(|x, y| x.interval.lo.cmp(&y.interval.lo));
    out.extend(found);
    out
}

/// The interval [-B, B] containing every real root, from the Cauchy bound.
pub fn root_bound(p: &IntegerPolynomial) -> Interval {
    let b = BigRational::from_integer(p.cauchy_bound());
    Interval::new(-b.clone(), b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::interval::{parse_rational, ratio};

    fn tol(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn lehmer() -> IntegerPolynomial {
        IntegerPolynomial::from_high_to_low(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    }

    #[test]
    fn sqrt_two() {
        let p = IntegerPolynomial::from_i64s(&[-2, 0, 1]);
        let e = largest_real_root(&p, &Interval::from_ints(1, 2), &tol("1e-12")).unwrap();
        assert!(e.width_f64() <= 1e-12);
        assert!(e.contains_f64(std::f64::consts::SQRT_2) || (e.mid_f64() - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(e.sign_lo * e.sign_hi <= 0);
    }

    #[test]
    fn quartic_factor_of_boundary_equation() {
        let p = IntegerPolynomial::from_high_to_low(&[1, -1, -1, -1, 1]);
        let e = largest_real_root(&p, &Interval::from_ints(1, 2), &tol("1e-9")).unwrap();
        assert!((e.mid_f64() - 1.722_083_9).abs() < 1e-6);
        // Substituting back: the enclosure brackets a sign change.
        assert_eq!(p.sign_at(e.lo()), Ordering::Less);
        assert_eq!(p.sign_at(e.hi()), Ordering::Greater);
    }

    #[test]
    fn lehmer_root() {
        let e = largest_real_root(&lehmer(), &Interval::from_ints(1, 2), &tol("1e-9")).unwrap();
        assert!((e.mid_f64() - 1.176_280_818).abs() < 1e-8);
    }

    #[test]
    fn exact_rational_root_collapses() {
        // (x - 3/2)(x + 1)
        let p = IntegerPolynomial::from_i64s(&[-3, -1, 2]);
        let e = largest_real_root(&p, &Interval::from_ints(0, 2), &tol("1e-6")).unwrap();
        assert!(e.interval.is_point());
        assert_eq!(e.interval.lo, ratio(3, 2));
    }

    #[test]
    fn repeated_largest_root() {
        // (x - 1)^2 (x - 1/2)
        let p = IntegerPolynomial::from_i64s(&[-1, 1]).pow(2).mul(&IntegerPolynomial::from_i64s(&[-1, 2]));
        let e = largest_real_root(&p, &Interval::from_ints(0, 3), &tol("1e-9")).unwrap();
        assert!(e.contains_f64(1.0));
    }

    #[test]
    fn no_root_reported() {
        let p = IntegerPolynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(largest_real_root(&p, &Interval::from_ints(-5, 5), &tol("1e-6")), Err(Error::NoRootInBracket));
    }

    #[test]
    fn counts() {
        // (x-1)(x-2)(x+3)
        let p = IntegerPolynomial::from_i64s(&[-1, 1])
            .mul(&IntegerPolynomial::from_i64s(&[-2, 1]))
            .mul(&IntegerPolynomial::from_i64s(&[3, 1]));
        let s = SturmSequence::new(&p);
        assert_eq!(s.count_real(), 3);
        assert_eq!(s.count_in(&int(1), &int(2)), 1);
        assert_eq!(s.count_closed(&int(1), &int(2)), 2);
        assert_eq!(s.count_above(&int(1)), 1);
        assert_eq!(s.count_below(&int(1)), 1);
        let roots = isolate_real_roots(&p, &root_bound(&p), &tol("1e-6"));
        assert_eq!(roots.len(), 3);
        assert!(roots[0].contains_f64(-3.0));
    }
}
