//! Symbolic degree growth of gⁿ = (σα)ⁿ, an oracle independent of the
//! orbit tracer.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::projective::ProjectiveLinearMap;
use crate::orbit::forms::Form;

/// Largest n for which symbolic composition is attempted by default.
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// deg(gⁿ) for n = 1..=n_max, with the default cap.
pub fn degree_growth(alpha: &ProjectiveLinearMap, n_max: usize) -> Result<Vec<usize>> {
    degree_growth_capped(alpha, n_max, DEFAULT_DEGREE_CAP)
}

/// deg(gⁿ) for n = 1..=n_max. Each step substitutes the reduced triple of
/// gⁿ⁻¹ into g and strips the common factor of the three new forms.
///
/// With (U, V, W) = α·(F₁, F₂, F₃) and gcd(U, V, W) = 1, the composite is
/// (VW, UW, UV), whose gcd is gcd(U,V)·gcd(V,W)·gcd(U,W): an irreducible
/// factor missing from U contributes min(e_V, e_W), and so on.
pub fn degree_growth_capped(alpha: &ProjectiveLinearMap, n_max: usize, cap: usize) -> Result<Vec<usize>> {
    if n_max > cap {
        return Err(Error::CapExceeded { requested: n_max, cap });
    }
    let field = alpha.field();
    let rows = alpha.rows();
    let mut triple: [Form; 3] = std::array::from_fn(|i| Form::coordinate(field, i));
    let mut degrees = Vec::with_capacity(n_max);
    for _ in 0..n_max {
        let [u, v, w]: [Form; 3] = std::array::from_fn(|i| Form::combination(&rows[i], &triple));
        let g_uv = u.gcd(&v);
        let g_vw = v.gcd(&w);
        let g_uw = u.gcd(&w);
        let exact = |a: &Form, d: &Form| a.div_exact(d).ok_or_else(|| Error::Indeterminate("inexact division".into()));
        // U carries g_uv and g_uw, V carries g_uv and g_vw, W carries g_uw and
        // g_vw; in each product take the shared factors out of the first form.
        let u_both = exact(&exact(&u, &g_uv)?, &g_uw)?;
        let v_both = exact(&exact(&v, &g_uv)?, &g_vw)?;
        let vw = v_both.mul(&exact(&w, &g_uw)?);
        let uw = u_both.mul(&exact(&w, &g_vw)?);
        let uv = exact(&u, &g_uw)?.mul(&v_both);
        debug_assert!(vw.degree == uw.degree && uw.degree == uv.degree);
        degrees.push(vw.degree);
        triple = [vw, uw, uv];
    }
    Ok(degrees)
}

/// A dynamical-degree estimate from a finite degree sequence: deg(g^N)^{1/N}
/// at the largest computed N. Used only as a cross-check, never certified.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeEstimate {
    pub estimate: f64,
    pub degrees: Vec<usize>,
}

pub fn dynamical_degree_estimate(degrees: &[usize]) -> Result<DegreeEstimate> {
    let n = degrees.len();
    let last = *degrees.last().ok_or_else(|| Error::InvalidInput("empty degree sequence".into()))?;
    Ok(DegreeEstimate { estimate: (last as f64).powf(1.0 / n as f64), degrees: degrees.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Field;

    #[test]
    fn sigma_alone_is_an_involution() {
        let id = ProjectiveLinearMap::identity(Field::Rationals);
        assert_eq!(degree_growth(&id, 4).unwrap(), vec![2, 1, 2, 1]);
    }

    #[test]
    fn swap_cancels_at_second_iterate() {
        let swap = ProjectiveLinearMap::from_i64(Field::Rationals, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        let d = degree_growth(&swap, 2).unwrap();
        assert_eq!(d[0], 2);
        assert!(d[1] < 4);
    }

    #[test]
    fn cap_is_enforced() {
        let id = ProjectiveLinearMap::identity(Field::Rationals);
        assert_eq!(
            degree_growth(&id, 9).unwrap_err(),
            Error::CapExceeded { requested: 9, cap: DEFAULT_DEGREE_CAP }
        );
    }

    #[test]
    fn estimates() {
        assert_eq!(dynamical_degree_estimate(&[2, 4, 8]).unwrap().estimate, 2.0);
        assert_eq!(dynamical_degree_estimate(&[2, 1]).unwrap().estimate, 1.0);
        assert!((dynamical_degree_estimate(&[2, 4, 7]).unwrap().estimate - 1.913).abs() < 1e-3);
    }
}
