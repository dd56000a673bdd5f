//! μ(p, q, r): the largest eigenvalue of the adjacency matrix of the tree
//! T_{p,q,r}, as a certified enclosure.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{int, Interval};
use crate::exact::poly::IntegerPolynomial;
use crate::exact::roots::{largest_real_root, RootEnclosure};
use crate::spectral::gram::AlgebraicReal;

/// Characteristic polynomial det(xI − A) of the path on `n` vertices.
pub fn path_char_poly(n: usize) -> IntegerPolynomial {
    let x = IntegerPolynomial::monomial(1);
    let (mut prev, mut cur) = (IntegerPolynomial::one(), x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Characteristic polynomial of T_{p,q,r}: a centre joined to the ends of
/// three paths with p−1, q−1, r−1 vertices. Expanding along the centre,
/// χ = x·∏ P_{n_i} − Σ_i P_{n_i−1} ∏_{j≠i} P_{n_j}, with P_{−1} = 0.
pub fn tree_char_poly(p: usize, q: usize, r: usize) -> Result<IntegerPolynomial> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::OutOfRange("arm lengths must be at least 1".into()));
    }
    let n = [p - 1, q - 1, r - 1];
    let full: Vec<IntegerPolynomial> = n.iter().map(|&k| path_char_poly(k)).collect();
    let short: Vec<IntegerPolynomial> =
        n.iter().map(|&k| if k == 0 { IntegerPolynomial::zero() } else { path_char_poly(k - 1) }).collect();
    let mut chi = IntegerPolynomial::monomial(1).mul(&full[0]).mul(&full[1]).mul(&full[2]);
    for i in 0..3 {
        let mut term = short[i].clone();
        for (j, f) in full.iter().enumerate() {
            if j != i {
                term = term.mul(f);
            }
        }
        chi = chi.sub(&term);
    }
    Ok(chi)
}

/// 1/p + 1/q + 1/r compared with 1.
pub fn reciprocal_sum_cmp(p: usize, q: usize, r: usize) -> std::cmp::Ordering {
    let (p, q, r) = (p as u128, q as u128, r as u128);
    (q * r + p * r + p * q).cmp(&(p * q * r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuValue {
    pub arms: [usize; 3],
    pub char_poly: IntegerPolynomial,
    pub enclosure: RootEnclosure,
}

impl MuValue {
    pub fn interval(&self) -> &Interval {
        &self.enclosure.interval
    }

    pub fn algebraic(&self) -> AlgebraicReal {
        AlgebraicReal { poly: self.char_poly.squarefree_part(), interval: self.enclosure.interval.clone() }
    }

    /// μ = 2 exactly (the affine trees).
    pub fn is_two(&self) -> bool {
        self.enclosure.interval.is_point() && self.enclosure.interval.lo == int(2)
    }
}

/// μ(p, q, r) for 1/p + 1/q + 1/r ≤ 1, where 2 ≤ μ < 3, to width `tol`.
pub fn mu(p: usize, q: usize, r: usize, tol: &BigRational) -> Result<MuValue> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::OutOfRange("arm lengths must be at least 1".into()));
    }
    if reciprocal_sum_cmp(p, q, r) == std::cmp::Ordering::Greater {
        return Err(Error::OutOfRange(format!("1/{p} + 1/{q} + 1/{r} > 1: the tree is spherical, mu < 2")));
    }
    let char_poly = tree_char_poly(p, q, r)?;
    let enclosure = largest_real_root(&char_poly, &Interval::from_ints(2, 3), tol)?;
    Ok(MuValue { arms: [p, q, r], char_poly, enclosure })
}

/// All triples 2 ≤ p ≤ q ≤ r ≤ p_max with 1/p + 1/q + 1/r ≤ 1.
pub fn mu_table(p_max: usize, tol: &BigRational) -> Result<Vec<MuValue>> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for q in p..=p_max {
            for r in q..=p_max {
                if reciprocal_sum_cmp(p, q, r) != std::cmp::Ordering::Greater {
                    out.push(mu(p, q, r, tol)?);
                }
            }
        }
    }
    Ok(out)
}

/// True when the value enclosed by `mu` is a root of `q`: the gcd of q with
/// the characteristic polynomial has a root in the enclosure.
pub fn mu_is_root_of(mu: &MuValue, q: &IntegerPolynomial) -> bool {
    mu.algebraic().is_root_of(q)
}

/// The quartic minimal polynomials of μ(4,4,4) and μ(5,5,5).
pub fn closed_form_quartic(n: usize) -> Option<IntegerPolynomial> {
    match n {
        4 => Some(IntegerPolynomial::from_i64s(&[3, 0, -5, 0, 1])),
        5 => Some(IntegerPolynomial::from_i64s(&[7, 0, -6, 0, 1])),
        _ => None,
    }
}

pub fn char_poly_degree(p: usize, q: usize, r: usize) -> usize {
    p + q + r - 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::adjacency::adjacency;
    use crate::diagram::shape::Diagram;
    use crate::exact::interval::parse_rational;

    fn tol() -> BigRational {
        parse_rational("1e-12").unwrap()
    }

    #[test]
    fn recurrence_matches_berkowitz() {
        for (p, q, r) in [(1, 1, 1), (2, 2, 2), (2, 3, 5), (3, 3, 4), (2, 4, 7), (5, 5, 5)] {
            let direct = adjacency(&Diagram::tree(p, q, r)).unwrap().matrix.char_poly().unwrap();
            assert_eq!(tree_char_poly(p, q, r).unwrap(), direct, "T{p}{q}{r}");
        }
    }

    #[test]
    fn affine_trees_have_mu_two() {
        for (p, q, r) in [(3, 3, 3), (2, 4, 4), (2, 3, 6)] {
            let m = mu(p, q, r, &tol()).unwrap();
            assert!(m.is_two(), "T{p}{q}{r}");
        }
    }

    #[test]
    fn spherical_trees_are_rejected() {
        assert!(matches!(mu(2, 3, 5, &tol()), Err(Error::OutOfRange(_))));
        assert!(matches!(mu(1, 7, 7, &tol()), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn closed_forms_at_four_and_five() {
        for n in [4, 5] {
            let m = mu(n, n, n, &tol()).unwrap();
            assert!(mu_is_root_of(&m, &closed_form_quartic(n).unwrap()));
            assert!(!mu_is_root_of(&m, &closed_form_quartic(9 - n).unwrap()));
        }
        let m4 = mu(4, 4, 4, &tol()).unwrap().enclosure.mid_f64();
        assert!((m4 - ((5.0 + 13f64.sqrt()) / 2.0).sqrt()).abs() < 1e-11);
    }

    #[test]
    fn t237_is_just_above_two() {
        let m = mu(2, 3, 7, &tol()).unwrap();
        let x = m.enclosure.mid_f64();
        // μ² = λ + 1/λ + 2 with Lehmer's number λ ≈ 1.17628.
        let lehmer = 1.176_280_818_259_917_5_f64;
        assert!((x * x - (lehmer + 1.0 / lehmer + 2.0)).abs() < 1e-10);
    }

    #[test]
    fn table_sizes() {
        let t = mu_table(8, &parse_rational("1e-9").unwrap()).unwrap();
        assert!(t.iter().all(|m| m.enclosure.mid_f64() >= 2.0 && m.enclosure.mid_f64() < 3.0));
        assert!(t.iter().any(|m| m.arms == [2, 3, 7]));
        assert!(!t.iter().any(|m| m.arms == [2, 3, 5]));
    }
}
