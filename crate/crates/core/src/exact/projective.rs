//! Points and linear maps of the projective plane.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::scalar::{Field, Scalar};

/// A point of P² in canonical form: the first nonzero coordinate is 1.
///
/// Equality and hashing act on the canonical representative, so points can
/// be stored in hash sets directly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [Scalar; 3],
}

impl ProjectivePoint {
    pub fn new(coords: [Scalar; 3]) -> Result<ProjectivePoint> {
        let field = coords[0].field();
        for c in &coords[1..] {
            if c.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
        }
        Self::normalized(coords)
    }

    pub fn from_i64(field: Field, coords: [i64; 3]) -> Result<ProjectivePoint> {
        Self::new(coords.map(|c| Scalar::from_i64(field, c)))
    }

    fn normalized(coords: [Scalar; 3]) -> Result<ProjectivePoint> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
        if lead.is_one() {
            return Ok(ProjectivePoint { coords });
        }
        let inv = lead.inv()?;
        Ok(ProjectivePoint { coords: coords.map(|c| &c * &inv) })
    }

    /// The coordinate vertex with a 1 in position `i`: P, Q, R for i = 0, 1, 2.
    pub fn vertex(field: Field, i: usize) -> ProjectivePoint {
        let mut coords = [Scalar::zero(field), Scalar::zero(field), Scalar::zero(field)];
        coords[i] = Scalar::one(field);
        ProjectivePoint { coords }
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    /// True if the point lies on the coordinate triangle xyz = 0.
    pub fn on_triangle(&self) -> bool {
        self.coords.iter().any(Scalar::is_zero)
    }

    /// Index of the coordinate vertex this point equals, if any.
    pub fn vertex_index(&self) -> Option<usize> {
        let zeros = self.coords.iter().filter(|c| c.is_zero()).count();
        if zeros == 2 {
            self.coords.iter().position(|c| !c.is_zero())
        } else {
            None
        }
    }

    /// Re-normalizes the point; a no-op for values built through this API.
    pub fn renormalized(&self) -> ProjectivePoint {
        Self::normalized(self.coords.clone()).expect("canonical point is nonzero")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// An invertible 3×3 matrix up to scalars, stored with its first nonzero
/// entry scaled to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveLinearMap {
    rows: [[Scalar; 3]; 3],
}

impl ProjectiveLinearMap {
    pub fn new(rows: [[Scalar; 3]; 3]) -> Result<ProjectiveLinearMap> {
        let field = rows[0][0].field();
        for row in &rows {
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), e.field().to_string()));
                }
            }
        }
        if det3(&rows).is_zero() {
            return Err(Error::SingularMap);
        }
        let lead = rows.iter().flatten().find(|e| !e.is_zero()).expect("nonsingular").inv()?;
        Ok(ProjectiveLinearMap { rows: rows.map(|r| r.map(|e| &e * &lead)) })
    }

    pub fn from_i64(field: Field, rows: [[i64; 3]; 3]) -> Result<ProjectiveLinearMap> {
        Self::new(rows.map(|r| r.map(|e| Scalar::from_i64(field, e))))
    }

    /// Row-major list of nine entries.
    pub fn from_entries(entries: Vec<Scalar>) -> Result<ProjectiveLinearMap> {
        if entries.len() != 9 {
            return Err(Error::DimensionMismatch(entries.len(), 9));
        }
        let mut it = entries.into_iter();
        let mut next_row = || -> [Scalar; 3] {
            [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
        };
        let rows = [next_row(), next_row(), next_row()];
        Self::new(rows)
    }

    pub fn identity(field: Field) -> ProjectiveLinearMap {
        Self::from_i64(field, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).expect("identity")
    }

    /// The reflection x ↦ ℓ(u)·x − 2ℓ(x)·u fixing the line ℓ = 0 pointwise
    /// and the point u. Outside characteristic 2 every projective
    /// involution of the plane has this form.
    pub fn reflection(line: [Scalar; 3], center: [Scalar; 3]) -> Result<ProjectiveLinearMap> {
        let c = (0..3).fold(Scalar::zero(line[0].field()), |acc, i| &acc + &(&line[i] * &center[i]));
        if c.is_zero() {
            return Err(Error::SingularMap);
        }
        let two = Scalar::from_i64(c.field(), 2);
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let diag = if i == j { c.clone() } else { Scalar::zero(c.field()) };
                &diag - &(&two * &(&center[i] * &line[j]))
            })
        }))
    }

    pub fn rows(&self) -> &[[Scalar; 3]; 3] {
        &self.rows
    }

    pub fn field(&self) -> Field {
        self.rows[0][0].field()
    }

    pub fn compose(&self, inner: &ProjectiveLinearMap) -> Result<ProjectiveLinearMap> {
        if self.field() != inner.field() {
            return Err(Error::FieldMismatch(self.field().to_string(), inner.field().to_string()));
        }
        Self::new(mat_mul(&self.rows, &inner.rows))
    }

    /// m² is a nonzero scalar matrix and m is not itself scalar.
    pub fn is_projective_involution(&self) -> bool {
        self.squares_to_identity() && !self.is_identity()
    }

    /// m² is a scalar matrix, i.e. m is an involution or the identity.
    pub fn squares_to_identity(&self) -> bool {
        is_scalar_matrix(&mat_mul(&self.rows, &self.rows))
    }

    pub fn is_identity(&self) -> bool {
        is_scalar_matrix(&self.rows)
    }

    pub fn apply(&self, x: &ProjectivePoint) -> Result<ProjectivePoint> {
        apply_map(self, x)
    }
}

impl fmt::Display for ProjectiveLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(
            f,
            "[[{}, {}, {}], [{}, {}, {}], [{}, {}, {}]]",
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]
        )
    }
}

/// Canonical form of `m·x`.
pub fn apply_map(m: &ProjectiveLinearMap, x: &ProjectivePoint) -> Result<ProjectivePoint> {
    if m.field() != x.field() {
        return Err(Error::FieldMismatch(m.field().to_string(), x.field().to_string()));
    }
    let image = mat_vec(&m.rows, x.coords());
    ProjectivePoint::normalized(image)
}

pub fn is_projective_involution(m: &ProjectiveLinearMap) -> bool {
    m.is_projective_involution()
}

pub(crate) fn mat_vec(m: &[[Scalar; 3]; 3], v: &[Scalar; 3]) -> [Scalar; 3] {
    std::array::from_fn(|i| {
        let mut acc = &m[i][0] * &v[0];
        acc = &acc + &(&m[i][1] * &v[1]);
        &acc + &(&m[i][2] * &v[2])
    })
}

fn mat_mul(a: &[[Scalar; 3]; 3], b: &[[Scalar; 3]; 3]) -> [[Scalar; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = &a[i][0] * &b[0][j];
            acc = &acc + &(&a[i][1] * &b[1][j]);
            &acc + &(&a[i][2] * &b[2][j])
        })
    })
}

fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

fn is_scalar_matrix(m: &[[Scalar; 3]; 3]) -> bool {
    if m[0][0].is_zero() {
        return false;
    }
    (0..3).all(|i| (0..3).all(|j| if i == j { m[i][j] == m[0][0] } else { m[i][j].is_zero() }))
}
