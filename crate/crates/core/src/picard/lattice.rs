//! The lattice ℤ⟨ℓ, e_x⟩ spanned by the line class and the exceptional
//! classes of finitely many orbit points, with the actions of σ and α.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::IntegerMatrix;
use crate::exact::projective::{apply_map, ProjectiveLinearMap, ProjectivePoint};
use crate::orbit::trace::{sigma_apply, EventKind, OrbitTrace};

/// A vector in the coordinates ℓ, e_1, ..., e_n with the pairing
/// (ℓ.ℓ) = 1, (e_i.e_i) = −1 and all other pairings zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LorentzianVector {
    #[serde(with = "crate::exact::serde_str::rational_vec")]
    pub coeffs: Vec<BigRational>,
}

impl LorentzianVector {
    pub fn new(coeffs: Vec<BigRational>) -> LorentzianVector {
        LorentzianVector { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> LorentzianVector {
        LorentzianVector { coeffs: coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect() }
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> LorentzianVector {
        LorentzianVector { coeffs: coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// The basis vector ℓ (index 0) or e_i (index i ≥ 1).
    pub fn basis(dim: usize, i: usize) -> LorentzianVector {
        let mut coeffs = vec![BigRational::zero(); dim];
        coeffs[i] = BigRational::one();
        LorentzianVector { coeffs }
    }
}

impl fmt::Display for LorentzianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// (u.v) = u₀v₀ − Σ_{i≥1} u_i v_i.
pub fn inner_product(u: &LorentzianVector, v: &LorentzianVector) -> Result<BigRational> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    let mut acc = BigRational::zero();
    for (i, (a, b)) in u.coeffs.iter().zip(&v.coeffs).enumerate() {
        if i == 0 {
            acc += a * b;
        } else {
            acc -= a * b;
        }
    }
    Ok(acc)
}

/// Integer version of [`inner_product`] for vectors already known to be integral.
pub fn inner_product_int(u: &[BigInt], v: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, (a, b)) in u.iter().zip(v).enumerate() {
        if i == 0 {
            acc += a * b;
        } else {
            acc -= a * b;
        }
    }
    acc
}

/// Labels of the basis: the line class or the exceptional class of a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Line,
    Exceptional(ProjectivePoint),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Line => write!(f, "l"),
            BasisLabel::Exceptional(x) => write!(f, "e{x}"),
        }
    }
}

/// The finite class lattice of an orbit analysis.
///
/// Index 0 is ℓ, indices 1..=3 are e_P, e_Q, e_R, and the remaining indices
/// are the other orbit points in trace order. Action matrices act on column
/// vectors: column j is the image of basis vector j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLattice {
    pub points: Vec<ProjectivePoint>,
    pub gram: IntegerMatrix,
    pub sigma_action: IntegerMatrix,
    pub alpha_action: IntegerMatrix,
}

impl ClassLattice {
    pub fn rank(&self) -> usize {
        self.points.len() + 1
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        std::iter::once(BasisLabel::Line).chain(self.points.iter().cloned().map(BasisLabel::Exceptional)).collect()
    }

    /// Basis index of the exceptional class of `x`, if present.
    pub fn index_of(&self, x: &ProjectivePoint) -> Option<usize> {
        self.points.iter().position(|p| p == x).map(|i| i + 1)
    }

    /// v₀ = ℓ − e_P − e_Q − e_R.
    pub fn v0(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank()];
        v[0] = BigInt::one();
        for x in &mut v[1..4] {
            *x = -BigInt::one();
        }
        v
    }

    /// g_* = σ_* · α_*.
    pub fn g_action(&self) -> IntegerMatrix {
        self.sigma_action.mul(&self.alpha_action).expect("square actions of equal size")
    }

    pub fn inner_product(&self, u: &LorentzianVector, v: &LorentzianVector) -> Result<BigRational> {
        if u.dim() != self.rank() {
            return Err(Error::DimensionMismatch(u.dim(), self.rank()));
        }
        inner_product(u, v)
    }
}

/// Assembles the class lattice from three traces with finite orbit data.
///
/// The basis is ℓ together with the distinct orbit points. α_* fixes ℓ and
/// sends e_x to e_{α(x)}; σ_* is the reflection in v₀ on ℓ, e_P, e_Q, e_R and
/// sends e_x to e_{σ(x)} on every other point. Both images must stay inside
/// the point set, and both actions must preserve the form.
pub fn build_class_lattice(alpha: &ProjectiveLinearMap, traces: &[OrbitTrace; 3]) -> Result<ClassLattice> {
    for t in traces {
        match t.event.kind {
            EventKind::Coincidence | EventKind::Collision { .. } => {}
            other => {
                return Err(Error::Indeterminate(format!("trace of {} ended with {other:?}", t.seed)));
            }
        }
    }
    let field = alpha.field();
    let mut points: Vec<ProjectivePoint> = (0..3).map(|i| ProjectivePoint::vertex(field, i)).collect();
    let mut index: HashMap<ProjectivePoint, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let longest = traces.iter().map(|t| t.points.len()).max().unwrap_or(0);
    for n in 0..longest {
        for t in traces {
            if let Some(x) = t.points.get(n) {
                if !index.contains_key(x) {
                    index.insert(x.clone(), points.len());
                    points.push(x.clone());
                }
            }
        }
    }
    let n = points.len() + 1;
    let lookup = |x: &ProjectivePoint| {
        index.get(x).map(|&i| i + 1).ok_or_else(|| Error::Indeterminate(format!("orbit point set not closed at {x}")))
    };

    let mut alpha_perm = vec![0; n];
    let mut sigma = IntegerMatrix::zeros(n, n);
    let one = BigInt::one;
    // σ_* on ℓ, e_P, e_Q, e_R: s_{v₀}(u) = u + (u.v₀) v₀ since (v₀.v₀) = −2,
    // and (u.v₀) = 1 for each of these four basis vectors.
    let v0 = [1i64, -1, -1, -1];
    for j in 0..4 {
        for (i, &c) in v0.iter().enumerate() {
            sigma.set(i, j, BigInt::from(i64::from(i == j) + c));
        }
    }
    for (k, x) in points.iter().enumerate() {
        let j = k + 1;
        alpha_perm[j] = lookup(&apply_map(alpha, x)?)?;
        if x.vertex_index().is_none() {
            sigma.set(lookup(&sigma_apply(x)?)?, j, one());
        }
    }
    let alpha_action = IntegerMatrix::permutation(&alpha_perm);
    let mut gram = IntegerMatrix::identity(n).neg();
    gram.set(0, 0, one());
    for (name, m) in [("sigma", &sigma), ("alpha", &alpha_action)] {
        if !m.preserves_form(&gram)? {
            return Err(Error::GramNotPreserved(name.into()));
        }
    }
    Ok(ClassLattice { points, gram, sigma_action: sigma, alpha_action })
}
