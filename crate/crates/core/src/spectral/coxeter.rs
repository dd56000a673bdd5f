//! Coxeter elements of bipartite diagrams, their spectral radius and order.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::adjacency::AdjacencyData;
use crate::error::{Error, Result};
use crate::exact::interval::{int, Interval};
use crate::exact::matrix::IntegerMatrix;
use crate::exact::poly::IntegerPolynomial;
use crate::exact::roots::{largest_real_root, RootEnclosure, SturmSequence};

/// The product S·A of the two bipartite reflection blocks
/// S = [[−I, ᵀC], [0, I]] and A = [[I, 0], [C, −I]], σ-side first.
pub fn coxeter_element(adj: &AdjacencyData) -> Result<IntegerMatrix> {
    let (s, t) = (adj.sigma_count, adj.alpha_count);
    let id_s = IntegerMatrix::identity(s);
    let id_t = IntegerMatrix::identity(t);
    let sigma = IntegerMatrix::block(&id_s.neg(), &adj.c.transpose(), &IntegerMatrix::zeros(t, s), &id_t)?;
    let alpha = IntegerMatrix::block(&id_s, &IntegerMatrix::zeros(s, t), &adj.c, &id_t.neg())?;
    sigma.mul(&alpha)
}

/// The reflections S and A themselves (each squares to the identity).
pub fn bipartite_reflections(adj: &AdjacencyData) -> Result<(IntegerMatrix, IntegerMatrix)> {
    let (s, t) = (adj.sigma_count, adj.alpha_count);
    let id_s = IntegerMatrix::identity(s);
    let id_t = IntegerMatrix::identity(t);
    Ok((
        IntegerMatrix::block(&id_s.neg(), &adj.c.transpose(), &IntegerMatrix::zeros(t, s), &id_t)?,
        IntegerMatrix::block(&id_s, &IntegerMatrix::zeros(s, t), &adj.c, &id_t.neg())?,
    ))
}

/// Certified spectral radius of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralRadius {
    pub char_poly: IntegerPolynomial,
    /// Enclosure of the largest real root ≥ 1, or the point 1 when no root
    /// exceeds 1.
    pub enclosure: RootEnclosure,
    /// True when no real eigenvalue exceeds 1.
    pub at_most_one: bool,
}

impl SpectralRadius {
    pub fn interval(&self) -> &Interval {
        &self.enclosure.interval
    }
}

/// The largest real eigenvalue of `m` in [1, ∞), enclosed to width `tol`.
///
/// For the isometries met here (Coxeter elements and g_*) the spectral radius
/// is a real eigenvalue λ ≥ 1 whenever it exceeds 1, so this is ρ(m).
pub fn spectral_radius(m: &IntegerMatrix, tol: &BigRational) -> Result<SpectralRadius> {
    let char_poly = m.char_poly()?;
    let bound = BigRational::from_integer(char_poly.cauchy_bound().max(BigInt::from(2)));
    let sturm = SturmSequence::new(&char_poly);
    if sturm.count_above(&int(1)) == 0 {
        let one = RootEnclosure { interval: Interval::point(int(1)), sign_lo: 0, sign_hi: 0 };
        return Ok(SpectralRadius { char_poly, enclosure: one, at_most_one: true });
    }
    let enclosure = largest_real_root(&char_poly, &Interval::new(int(1), bound), tol)?;
    Ok(SpectralRadius { char_poly, enclosure, at_most_one: false })
}

/// Monic squarefree part of a monic polynomial.
fn monic_squarefree(p: &IntegerPolynomial) -> IntegerPolynomial {
    let s = p.squarefree_part();
    if s.leading() < BigInt::zero() {
        s.neg()
    } else {
        s
    }
}

/// The least n ≤ cap with x^n ≡ 1 modulo the squarefree part of the
/// characteristic polynomial, i.e. the lcm of the orders of the eigenvalues
/// if they are all roots of unity.
pub fn eigenvalue_order(char_poly: &IntegerPolynomial, cap: u64) -> Option<u64> {
    let q = monic_squarefree(char_poly);
    if q.degree().unwrap_or(0) == 0 {
        return Some(1);
    }
    let x = IntegerPolynomial::monomial(1).pseudo_rem(&q);
    let one = IntegerPolynomial::one();
    let mut cur = x.clone();
    for n in 1..=cap {
        if cur == one {
            return Some(n);
        }
        cur = cur.mul(&x).pseudo_rem(&q);
    }
    None
}

/// The order of `m` if it is finite and at most `cap`.
///
/// The eigenvalues are tested first: unless they are all roots of unity with
/// lcm L ≤ cap, the matrix has infinite order (or order beyond the cap) and
/// no large power is ever formed. Otherwise m^L = I decides it, since any
/// k with m^k = I is a multiple of L.
pub fn order_if_finite(m: &IntegerMatrix, cap: u64) -> Result<Option<u64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(m.rows(), m.cols()));
    }
    let c = m.char_poly()?;
    let Some(l) = eigenvalue_order(&c, cap) else { return Ok(None) };
    Ok(m.pow(l)?.is_identity().then_some(l))
}

/// Order of `m`, distinguishing "infinite" from "above the cap".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum MatrixOrder {
    Finite(u64),
    Infinite,
    /// Not decided: no power up to the cap is the identity, and no real
    /// eigenvalue lies off the unit circle.
    BeyondCap,
}

pub fn matrix_order(m: &IntegerMatrix, cap: u64) -> Result<MatrixOrder> {
    if let Some(k) = order_if_finite(m, cap)? {
        return Ok(MatrixOrder::Finite(k));
    }
    // An eigenvalue off the unit circle, or a nontrivial Jordan block,
    // forces infinite order.
    let c = m.char_poly()?;
    let sturm = SturmSequence::new(&c);
    if sturm.count_above(&int(1)) > 0 || sturm.count_below(&int(-1)) > 0 {
        return Ok(MatrixOrder::Infinite);
    }
    match eigenvalue_order(&c, cap) {
        Some(_) => Ok(MatrixOrder::Infinite),
        None => Ok(MatrixOrder::BeyondCap),
    }
}

/// The largest root ρ of x⁴ − (μ² − 2)x² + 1: the eigenvalue of S·A on the
/// plane spanned by the Perron–Frobenius vectors, for a rational μ².
pub fn coxeter_plane_radius(mu_squared: &BigRational, tol: &BigRational) -> Result<RootEnclosure> {
    let t = mu_squared - int(2);
    let (n, d) = (t.numer().clone(), t.denom().clone());
    let p = IntegerPolynomial::new(vec![d.clone(), BigInt::zero(), -n, BigInt::zero(), d]);
    let bound = BigRational::from_integer(p.cauchy_bound().max(BigInt::from(2)));
    largest_real_root(&p, &Interval::new(int(1), bound), tol)
}

/// Symbolic check on the Perron–Frobenius plane: with entries polynomial in
/// μ, S·A = [[μ² − 1, −μ], [μ, −1]] equals δ² for δ = [[μ, −1], [1, 0]].
/// Returns the two matrices as coefficient lists of μ.
pub fn plane_square_identity() -> (Vec<Vec<IntegerPolynomial>>, Vec<Vec<IntegerPolynomial>>) {
    let mu = IntegerPolynomial::monomial(1);
    let c = |v: i64| IntegerPolynomial::constant(BigInt::from(v));
    // The bipartite blocks with C = (μ): the restriction of S and A to the
    // plane of the Perron–Frobenius vectors of the two sides.
    let s = vec![vec![c(-1), mu.clone()], vec![c(0), c(1)]];
    let a = vec![vec![c(1), c(0)], vec![mu.clone(), c(-1)]];
    let delta = vec![vec![mu, c(-1)], vec![c(1), c(0)]];
    (poly_mat_mul(&s, &a), poly_mat_mul(&delta, &delta))
}

fn poly_mat_mul(a: &[Vec<IntegerPolynomial>], b: &[Vec<IntegerPolynomial>]) -> Vec<Vec<IntegerPolynomial>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..b.len()).fold(IntegerPolynomial::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))
                })
                .collect()
        })
        .collect()
}

/// True when the interval lies strictly above 1.
pub fn exceeds_one(iv: &Interval) -> bool {
    iv.lo.cmp(&BigRational::one()) == Ordering::Greater
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::adjacency::adjacency;
    use crate::diagram::shape::Diagram;
    use crate::exact::interval::{parse_rational, ratio};

    fn tol() -> BigRational {
        parse_rational("1e-12").unwrap()
    }

    fn cox(p: usize, q: usize, r: usize) -> IntegerMatrix {
        coxeter_element(&adjacency(&Diagram::tree(p, q, r)).unwrap()).unwrap()
    }

    #[test]
    fn reflections_are_involutions() {
        let (s, a) = bipartite_reflections(&adjacency(&Diagram::tree(2, 3, 7)).unwrap()).unwrap();
        assert!(s.mul(&s).unwrap().is_identity());
        assert!(a.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn spherical_coxeter_numbers() {
        // Coxeter numbers: D4 = T222 → 6, E6 = T233 → 12, E7 → 18, E8 → 30,
        // A1 = T111 → 2, A3 = T122 → 4.
        assert_eq!(order_if_finite(&cox(2, 2, 2), 10_000).unwrap(), Some(6));
        assert_eq!(order_if_finite(&cox(2, 3, 3), 10_000).unwrap(), Some(12));
        assert_eq!(order_if_finite(&cox(2, 3, 4), 10_000).unwrap(), Some(18));
        assert_eq!(order_if_finite(&cox(2, 3, 5), 10_000).unwrap(), Some(30));
        assert_eq!(order_if_finite(&cox(1, 1, 1), 10_000).unwrap(), Some(2));
        assert_eq!(order_if_finite(&cox(1, 2, 2), 10_000).unwrap(), Some(4));
    }

    #[test]
    fn affine_and_hyperbolic_have_infinite_order() {
        assert_eq!(matrix_order(&cox(3, 3, 3), 10_000).unwrap(), MatrixOrder::Infinite);
        assert_eq!(matrix_order(&cox(2, 3, 7), 10_000).unwrap(), MatrixOrder::Infinite);
        assert_eq!(order_if_finite(&cox(2, 3, 7), 10_000).unwrap(), None);
    }

    #[test]
    fn e10_radius_is_lehmers_number() {
        let r = spectral_radius(&cox(2, 3, 7), &tol()).unwrap();
        assert!(!r.at_most_one);
        assert!((r.enclosure.mid_f64() - 1.176_280_818_259_917).abs() < 1e-11);
        let lehmer = IntegerPolynomial::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(r.char_poly.div_exact(&lehmer).is_some());
    }

    #[test]
    fn affine_radius_is_one() {
        let r = spectral_radius(&cox(3, 3, 3), &tol()).unwrap();
        assert!(r.at_most_one);
        assert_eq!(r.interval(), &Interval::point(int(1)));
    }

    #[test]
    fn plane_radius_at_nine_halves() {
        let e = coxeter_plane_radius(&ratio(9, 2), &tol()).unwrap();
        assert!((e.mid_f64() - 2f64.sqrt()).abs() < 1e-11);
        let sqrt2 = IntegerPolynomial::from_i64s(&[-2, 0, 1]);
        let sturm = SturmSequence::new(&sqrt2);
        assert_eq!(sturm.count_closed(e.lo(), e.hi()), 1);
    }

    #[test]
    fn plane_block_is_a_square() {
        let (sa, d2) = plane_square_identity();
        assert_eq!(sa, d2);
        let mu = IntegerPolynomial::monomial(1);
        assert_eq!(sa[0][0], mu.mul(&mu).sub(&IntegerPolynomial::one()));
    }
}
