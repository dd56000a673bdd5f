//! Horoball estimates for isometries fixing a primitive isotropic vector.
//!
//! Coordinates are taken with respect to the filtration ℤv₀ ⊂ v₀^⊥ ⊂ Λ: a
//! vector is [a; y; z] with z = (x.v₀), and the form has Gram matrix
//! [[0, 0, 1], [0, Q′, 0], [1, 0, 0]] where Q′ is negative definite.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{int, Interval};
use crate::exact::matrix::RationalMatrix;
use crate::picard::lattice::{inner_product, LorentzianVector};

fn dot(u: &[BigRational], v: &[BigRational]) -> BigRational {
    u.iter().zip(v).map(|(a, b)| a * b).fold(BigRational::zero(), |s, t| s + t)
}

fn sub(u: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

fn scaled(u: &[BigRational], k: &BigRational) -> Vec<BigRational> {
    u.iter().map(|a| a * k).collect()
}

/// wᵀ Q′ w.
fn norm(q: &RationalMatrix, w: &[BigRational]) -> BigRational {
    dot(w, &q.mul_vec(w).expect("dimensions checked by caller"))
}

/// Parabolic block data and a test point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicSpec {
    /// Gram matrix of v₀^⊥/ℤv₀ (negative definite).
    pub q_prime: RationalMatrix,
    /// An isometry of Q′.
    pub f_tilde: RationalMatrix,
    #[serde(with = "crate::exact::serde_str::rational_vec")]
    pub zeta: Vec<BigRational>,
    /// The point x = [a; y; z].
    #[serde(with = "crate::exact::serde_str::rational_vec")]
    pub x: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicReport {
    pub isometry_ok: bool,
    /// (f(x).x) evaluated from the assembled block matrix.
    #[serde(with = "crate::exact::serde_str::rational")]
    pub product_value: BigRational,
    /// 1 − ½‖zζ − y + f̃y‖².
    #[serde(with = "crate::exact::serde_str::rational")]
    pub identity_value: BigRational,
    #[serde(with = "crate::exact::serde_str::rational")]
    pub residual: BigRational,
    #[serde(with = "crate::exact::serde_str::rational")]
    pub z: BigRational,
    /// min over real q of −‖f̃q + ζ − q‖², the squared displacement of the
    /// affine map q ↦ f̃q + ζ; `None` if it can be made arbitrarily small.
    #[serde(with = "crate::exact::serde_str::option_rational")]
    pub min_displacement: Option<BigRational>,
    /// (f(x).x) ≥ 1 + z²/2; meaningful when the displacement is at least 1.
    pub horoball_bound_ok: bool,
}

impl ParabolicSpec {
    pub fn rank(&self) -> usize {
        self.q_prime.rows() + 2
    }

    /// The full Gram matrix [[0,0,1],[0,Q′,0],[1,0,0]].
    pub fn gram(&self) -> RationalMatrix {
        let k = self.q_prime.rows();
        let n = k + 2;
        let mut g = RationalMatrix::zeros(n, n);
        g.set(0, n - 1, BigRational::one());
        g.set(n - 1, 0, BigRational::one());
        for i in 0..k {
            for j in 0..k {
                g.set(i + 1, j + 1, self.q_prime.get(i, j).clone());
            }
        }
        g
    }

    /// f = [[1, −ᵗζQ′f̃, −½ᵗζQ′ζ], [0, f̃, ζ], [0, 0, 1]].
    pub fn block_matrix(&self) -> RationalMatrix {
        let k = self.q_prime.rows();
        let n = k + 2;
        let mut f = RationalMatrix::zeros(n, n);
        f.set(0, 0, BigRational::one());
        f.set(n - 1, n - 1, BigRational::one());
        let zq = self.q_prime.transpose().mul_vec(&self.zeta).expect("checked");
        for j in 0..k {
            let col: Vec<BigRational> = (0..k).map(|i| self.f_tilde.get(i, j).clone()).collect();
            f.set(0, j + 1, -dot(&zq, &col));
            for i in 0..k {
                f.set(i + 1, j + 1, self.f_tilde.get(i, j).clone());
            }
            f.set(j + 1, n - 1, self.zeta[j].clone());
        }
        f.set(0, n - 1, -norm(&self.q_prime, &self.zeta) / int(2));
        f
    }

    fn split_x(&self) -> (&BigRational, &[BigRational], &BigRational) {
        let n = self.x.len();
        (&self.x[0], &self.x[1..n - 1], &self.x[n - 1])
    }

    fn validate(&self) -> Result<()> {
        let k = self.q_prime.rows();
        if self.q_prime.cols() != k || !self.q_prime.is_symmetric() {
            return Err(Error::InvalidInput("Q' must be square and symmetric".into()));
        }
        let inertia = self.q_prime.inertia()?;
        if inertia.negative != k {
            return Err(Error::InvalidInput("Q' must be negative definite".into()));
        }
        if self.f_tilde.rows() != k || self.f_tilde.cols() != k {
            return Err(Error::DimensionMismatch(self.f_tilde.rows(), k));
        }
        if self.zeta.len() != k {
            return Err(Error::DimensionMismatch(self.zeta.len(), k));
        }
        if self.x.len() != k + 2 {
            return Err(Error::DimensionMismatch(self.x.len(), k + 2));
        }
        Ok(())
    }
}

/// Builds the point [a; y; z] on the unit sheet with the given y and z > 0:
/// a = (1 − ‖y‖²)/(2z).
pub fn point_on_sheet(q_prime: &RationalMatrix, y: &[BigRational], z: &BigRational) -> Result<Vec<BigRational>> {
    if !z.is_positive() {
        return Err(Error::OutOfRange("z = (x.v0) must be positive".into()));
    }
    if y.len() != q_prime.rows() {
        return Err(Error::DimensionMismatch(y.len(), q_prime.rows()));
    }
    let a = (BigRational::one() - norm(q_prime, y)) / (int(2) * z);
    let mut x = vec![a];
    x.extend_from_slice(y);
    x.push(z.clone());
    Ok(x)
}

/// Minimum over real q of −‖Aq + ζ‖² with A = f̃ − I, by exact least squares
/// against the positive definite form −Q′.
fn min_displacement(spec: &ParabolicSpec) -> Result<BigRational> {
    let k = spec.q_prime.rows();
    let a = spec.f_tilde.sub(&RationalMatrix::identity(k))?;
    let neg_q = RationalMatrix::from_rows(
        spec.q_prime.to_rows().into_iter().map(|r| r.into_iter().map(|v| -v).collect()).collect(),
    )?;
    // Normal equations: Aᵀ(−Q′)A q = −Aᵀ(−Q′)ζ, always consistent.
    let at_nq = a.transpose().mul(&neg_q)?;
    let lhs = at_nq.mul(&a)?;
    let rhs: Vec<BigRational> = at_nq.mul_vec(&spec.zeta)?.into_iter().map(|v| -v).collect();
    let q = lhs.solve(&rhs)?.ok_or_else(|| Error::InvalidInput("inconsistent normal equations".into()))?;
    let w: Vec<BigRational> = a.mul_vec(&q)?.iter().zip(&spec.zeta).map(|(u, z)| u + z).collect();
    Ok(-norm(&spec.q_prime, &w))
}

/// Assembles f in block form, checks it is an isometry, and evaluates
/// (f(x).x) directly and through the closed identity 1 − ½‖zζ − y + f̃y‖².
pub fn parabolic_form_check(spec: &ParabolicSpec) -> Result<ParabolicReport> {
    spec.validate()?;
    let q = &spec.q_prime;
    let ft = &spec.f_tilde;
    if &ft.transpose().mul(q)?.mul(ft)? != q {
        return Err(Error::GramNotPreserved("f~ is not orthogonal for Q'".into()));
    }
    let gram = spec.gram();
    let (_, y, z) = spec.split_x();
    if !z.is_positive() {
        return Err(Error::OutOfRange("x must have z = (x.v0) > 0".into()));
    }
    let x = &spec.x;
    let gx = gram.mul_vec(x)?;
    if dot(x, &gx) != BigRational::one() {
        return Err(Error::InvalidInput("x is not on the unit hyperboloid".into()));
    }
    if !x[0].is_positive() {
        return Err(Error::InvalidInput("x is not on the future sheet".into()));
    }

    let f = spec.block_matrix();
    let isometry_ok = f.transpose().mul(&gram)?.mul(&f)? == gram;
    let fx = f.mul_vec(x)?;
    let product_value = dot(&fx, &gx);

    let fy = ft.mul_vec(y)?;
    let w: Vec<BigRational> =
        sub(&scaled(&spec.zeta, z), y).iter().zip(&fy).map(|(a, b)| a + b).collect();
    let identity_value = BigRational::one() - norm(q, &w) / int(2);
    let residual = &product_value - &identity_value;

    let min_disp = min_displacement(spec)?;
    let bound = BigRational::one() + z * z / int(2);
    let horoball_bound_ok = min_disp < BigRational::one() || product_value >= bound;
    Ok(ParabolicReport {
        isometry_ok,
        product_value,
        identity_value,
        residual,
        z: z.clone(),
        min_displacement: Some(min_disp),
        horoball_bound_ok,
    })
}

/// z < 2 sinh(ε/2) with cosh ε = `cosh_eps`, i.e. z² < 2(cosh ε − 1).
pub fn within_horoball(z: &BigRational, cosh_eps: &BigRational) -> bool {
    z * z < int(2) * (cosh_eps - BigRational::one())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub v0_isotropic: bool,
    pub w0_isotropic: bool,
    pub primitive: bool,
    /// ((v₀+w₀).(v₀+w₀)).
    #[serde(with = "crate::exact::serde_str::rational")]
    pub sum_norm: BigRational,
    /// Upper bound on (2(λ^{1/2} − λ^{−1/2}))² = 4(λ − 2 + 1/λ).
    #[serde(with = "crate::exact::serde_str::rational")]
    pub bound_sq_upper: BigRational,
    /// Every unit x has (x.(v₀+w₀)) ≥ √((v₀+w₀)²) > 2(λ^{1/2} − λ^{−1/2}),
    /// so x cannot lie in both horoballs.
    pub contradiction: bool,
}

fn is_primitive(v: &[BigInt]) -> bool {
    use num_integer::Integer;
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).is_one()
}

/// Checks the arithmetic of the uniqueness argument in ℤ^{1,n}: for two
/// distinct future-pointing primitive isotropic vectors with
/// ((v₀+w₀).(v₀+w₀)) ≥ 2, no unit vector can pair with v₀ + w₀ below
/// 2(λ^{1/2} − λ^{−1/2}) for λ in `lambda` (an enclosure with lo > 1).
pub fn uniqueness_check(v0: &[BigInt], w0: &[BigInt], lambda: &Interval) -> Result<UniquenessReport> {
    if v0.len() != w0.len() {
        return Err(Error::DimensionMismatch(v0.len(), w0.len()));
    }
    if lambda.lo <= BigRational::one() {
        return Err(Error::OutOfRange("lambda must exceed 1".into()));
    }
    let lv = |v: &[BigInt]| LorentzianVector::from_bigints(v);
    let sum: Vec<BigInt> = v0.iter().zip(w0).map(|(a, b)| a + b).collect();
    let v0_isotropic = inner_product(&lv(v0), &lv(v0))?.is_zero();
    let w0_isotropic = inner_product(&lv(w0), &lv(w0))?.is_zero();
    let primitive = is_primitive(v0) && is_primitive(w0);
    let sum_norm = inner_product(&lv(&sum), &lv(&sum))?;
    let hi = &lambda.hi;
    let bound_sq_upper = int(4) * (hi - int(2) + BigRational::one() / hi);
    let future = v0[0].is_positive() && w0[0].is_positive();
    let contradiction = v0_isotropic
        && w0_isotropic
        && primitive
        && future
        && v0 != w0
        && sum_norm >= int(2)
        && bound_sq_upper < sum_norm;
    Ok(UniquenessReport { v0_isotropic, w0_isotropic, primitive, sum_norm, bound_sq_upper, contradiction })
}
