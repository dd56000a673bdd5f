//! Gram matrices of diagram lattices with vertex norm −λ, and their exact
//! signature.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::diagram::adjacency::AdjacencyData;
use crate::error::{Error, Result};
use crate::exact::interval::{int, Interval};
use crate::exact::matrix::{Inertia, IntegerMatrix, RationalMatrix};
use crate::exact::poly::IntegerPolynomial;
use crate::exact::roots::SturmSequence;

/// A real algebraic number: the unique root of `poly` in `interval`
/// (half-open (lo, hi], or the point itself when lo = hi).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicReal {
    pub poly: IntegerPolynomial,
    pub interval: Interval,
}

impl AlgebraicReal {
    pub fn rational(x: BigRational) -> AlgebraicReal {
        let poly = IntegerPolynomial::new(vec![-x.numer().clone(), x.denom().clone()]);
        AlgebraicReal { poly, interval: Interval::point(x) }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.interval.is_point().then_some(&self.interval.lo)
    }

    /// Halves the isolating interval, keeping the root.
    pub fn bisect(&mut self) {
        if self.interval.is_point() {
            return;
        }
        let mid = self.interval.midpoint();
        if self.poly.sign_at(&mid) == Ordering::Equal {
            self.interval = Interval::point(mid);
            return;
        }
        let s = SturmSequence::new(&self.poly);
        if s.count_in(&mid, &self.interval.hi) >= 1 {
            self.interval.lo = mid;
        } else {
            self.interval.hi = mid;
        }
    }

    /// True when the number is also a root of `q`.
    pub fn is_root_of(&self, q: &IntegerPolynomial) -> bool {
        if q.is_zero() {
            return true;
        }
        if let Some(x) = self.as_rational() {
            return q.sign_at(x) == Ordering::Equal;
        }
        let g = q.gcd(&self.poly);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        SturmSequence::new(&g).count_in(&self.interval.lo, &self.interval.hi) >= 1
    }
}

/// The value of λ in a Gram matrix: rational, or an algebraic number such
/// as μ(p, q, r).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lambda {
    Rational(#[serde(with = "crate::exact::serde_str::rational")] BigRational),
    Algebraic(AlgebraicReal),
}

/// Gram matrix of a diagram lattice: −λ on the diagonal, the signed
/// adjacency off it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramLattice {
    pub adjacency: IntegerMatrix,
    pub lambda: Lambda,
    pub shape: String,
}

impl GramLattice {
    pub fn dim(&self) -> usize {
        self.adjacency.rows()
    }

    /// The Gram matrix itself, for rational λ.
    pub fn gram(&self) -> Option<RationalMatrix> {
        let Lambda::Rational(l) = &self.lambda else { return None };
        let mut g = self.adjacency.to_rational();
        for i in 0..self.dim() {
            g.set(i, i, g.get(i, i) - l);
        }
        Some(g)
    }
}

pub fn gram_matrix(adj: &AdjacencyData, lambda: Lambda, shape: impl Into<String>) -> Result<GramLattice> {
    let positive = match &lambda {
        Lambda::Rational(l) => l.is_positive(),
        Lambda::Algebraic(a) => a.interval.lo.is_positive(),
    };
    if !positive {
        return Err(Error::OutOfRange("lambda must be positive".into()));
    }
    Ok(GramLattice { adjacency: adj.matrix.clone(), lambda, shape: shape.into() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum SignatureClass {
    NegativeDefinite,
    /// Negative semidefinite with a radical of the given rank.
    Affine { radical_rank: usize },
    /// Exactly one positive direction, nondegenerate.
    Lorentzian,
    /// Any other signature.
    OtherDegenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureReport {
    #[serde(flatten)]
    pub class: SignatureClass,
    pub inertia: Inertia,
    /// Integer basis of the radical (rational λ only; empty otherwise).
    #[serde(with = "crate::exact::serde_str::bigint_rows")]
    pub radical: Vec<Vec<BigInt>>,
}

fn class_of(inertia: Inertia) -> SignatureClass {
    match (inertia.positive, inertia.zero) {
        (0, 0) => SignatureClass::NegativeDefinite,
        (0, z) => SignatureClass::Affine { radical_rank: z },
        (1, 0) => SignatureClass::Lorentzian,
        _ => SignatureClass::OtherDegenerate,
    }
}

/// Exact inertia of A − λI for an algebraic λ. With c₁ = char(A) and
/// c_{j+1} = gcd(c_j, c_j′), the distinct roots of c_j are the eigenvalues of
/// multiplicity at least j, so counting distinct roots above λ (Sturm) over
/// all j counts eigenvalues with multiplicity. The isolating interval of λ is
/// first shrunk until it meets no eigenvalue other than λ itself.
fn inertia_at_algebraic(adj: &IntegerMatrix, lambda: &AlgebraicReal) -> Result<Inertia> {
    let n = adj.rows();
    let mut layers = Vec::new();
    let mut c = adj.char_poly()?;
    while c.degree().unwrap_or(0) > 0 {
        let next = c.gcd(&c.derivative());
        layers.push((SturmSequence::new(&c), lambda.is_root_of(&c)));
        c = next;
    }
    let mut lam = lambda.clone();
    loop {
        let (lo, hi) = (&lam.interval.lo, &lam.interval.hi);
        let isolated = lam.interval.is_point()
            || layers.iter().all(|(s, on)| s.count_in(lo, hi) == usize::from(*on));
        if isolated {
            let positive = layers.iter().map(|(s, _)| s.count_above(hi)).sum::<usize>();
            let zero = layers.iter().filter(|(_, on)| *on).count();
            return Ok(Inertia { positive, negative: n - positive - zero, zero });
        }
        lam.bisect();
    }
}

pub fn classify_signature(g: &GramLattice) -> Result<SignatureReport> {
    match &g.lambda {
        Lambda::Rational(_) => {
            let gram = g.gram().expect("rational lambda");
            let inertia = gram.inertia()?;
            let radical = if inertia.zero > 0 { gram.kernel() } else { Vec::new() };
            Ok(SignatureReport { class: class_of(inertia), inertia, radical })
        }
        Lambda::Algebraic(a) => {
            let inertia = if let Some(x) = a.as_rational() {
                let mut h = g.clone();
                h.lambda = Lambda::Rational(x.clone());
                return classify_signature(&h);
            } else {
                inertia_at_algebraic(&g.adjacency, a)?
            };
            Ok(SignatureReport { class: class_of(inertia), inertia, radical: Vec::new() })
        }
    }
}

/// λ = 2, the lattice of the diagram itself.
pub fn lambda_two() -> Lambda {
    Lambda::Rational(int(2))
}

/// The sign of det(Gram) for rational λ, from the inertia.
pub fn det_sign(g: &GramLattice) -> Result<i8> {
    let r = classify_signature(g)?;
    Ok(if r.inertia.zero > 0 {
        0
    } else if r.inertia.negative % 2 == 0 {
        1
    } else {
        -1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::adjacency::adjacency;
    use crate::diagram::shape::{Arm, Diagram};

    fn tree(p: usize, q: usize, r: usize) -> GramLattice {
        gram_matrix(&adjacency(&Diagram::tree(p, q, r)).unwrap(), lambda_two(), format!("T{p}{q}{r}")).unwrap()
    }

    #[test]
    fn e8_is_negative_definite_cartan() {
        let g = tree(2, 3, 5);
        let m = g.gram().unwrap();
        for i in 0..8 {
            assert_eq!(m.get(i, i), &int(-2));
        }
        assert_eq!(classify_signature(&g).unwrap().class, SignatureClass::NegativeDefinite);
        assert_eq!(g.adjacency.to_rational().rows(), 8);
        // det of the E8 Cartan matrix is 1, so det(−C) = 1 in even dimension.
        assert_eq!(det_sign(&g).unwrap(), 1);
    }

    #[test]
    fn affine_e6_and_e8() {
        for (p, q, r) in [(3, 3, 3), (2, 4, 4), (2, 3, 6)] {
            let rep = classify_signature(&tree(p, q, r)).unwrap();
            assert_eq!(rep.class, SignatureClass::Affine { radical_rank: 1 }, "{p}{q}{r}");
            assert_eq!(rep.radical.len(), 1);
        }
    }

    #[test]
    fn t237_is_lorentzian() {
        assert_eq!(classify_signature(&tree(2, 3, 7)).unwrap().class, SignatureClass::Lorentzian);
    }

    #[test]
    fn short_minus_cycles_are_negative_definite() {
        for n in 2..6 {
            let adj = adjacency(&Diagram::cycle_with_arm(2 * n, Arm::Exact(1))).unwrap();
            let g = gram_matrix(&adj, lambda_two(), "cycle").unwrap();
            assert_eq!(classify_signature(&g).unwrap().class, SignatureClass::NegativeDefinite, "n = {n}");
        }
    }

    #[test]
    fn algebraic_lambda_at_top_eigenvalue_is_affine() {
        // Path on two vertices: eigenvalues ±1; λ = 1 is rational, use the
        // path on three vertices instead, with top eigenvalue √2.
        let adj = IntegerMatrix::from_i64_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        let sqrt2 = AlgebraicReal {
            poly: IntegerPolynomial::from_i64s(&[-2, 0, 1]),
            interval: Interval::from_ints(1, 2),
        };
        let g = GramLattice { adjacency: adj, lambda: Lambda::Algebraic(sqrt2), shape: "A3".into() };
        let rep = classify_signature(&g).unwrap();
        assert_eq!(rep.class, SignatureClass::Affine { radical_rank: 1 });
        assert_eq!(rep.inertia, Inertia { positive: 0, negative: 2, zero: 1 });
    }
}
