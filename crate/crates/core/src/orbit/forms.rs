//! Ternary forms over an exact field, stored dehomogenized (z = 1) as
//! polynomials in y with coefficients in k[x], together with their degree.
//!
//! Only what the degree oracle needs: sums, products, exact division and gcd.

use crate::exact::scalar::{Field, Scalar};

/// Dense univariate polynomial over a field, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Uni {
    field: Field,
    c: Vec<Scalar>,
}

impl Uni {
    pub fn zero(field: Field) -> Uni {
        Uni { field, c: Vec::new() }
    }

    pub fn constant(s: Scalar) -> Uni {
        Uni::new(s.field(), vec![s])
    }

    pub fn new(field: Field, mut c: Vec<Scalar>) -> Uni {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        Uni { field, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with −1 for zero.
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lead(&self) -> Scalar {
        self.c.last().cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn add(&self, o: &Uni) -> Uni {
        let n = self.c.len().max(o.c.len());
        let z = Scalar::zero(self.field);
        Uni::new(
            self.field,
            (0..n).map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn sub(&self, o: &Uni) -> Uni {
        self.add(&o.scale(&Scalar::from_i64(self.field, -1)))
    }

    pub fn scale(&self, s: &Scalar) -> Uni {
        if s.is_zero() {
            return Uni::zero(self.field);
        }
        Uni::new(self.field, self.c.iter().map(|a| a * s).collect())
    }

    pub fn mul(&self, o: &Uni) -> Uni {
        if self.is_zero() || o.is_zero() {
            return Uni::zero(self.field);
        }
        let mut out = vec![Scalar::zero(self.field); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Uni::new(self.field, out)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Division with remainder over the field.
    pub fn divrem(&self, d: &Uni) -> (Uni, Uni) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        if r.len() <= dd {
            return (Uni::zero(self.field), self.clone());
        }
        let mut q = vec![Scalar::zero(self.field); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            if !t.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&t * b);
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Uni::new(self.field, q), Uni::new(self.field, r))
    }

    pub fn monic(&self) -> Uni {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().expect("nonzero lead"))
    }

    pub fn gcd(&self, o: &Uni) -> Uni {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Polynomial in (x, y): `c[j]` is the coefficient of y^j, a polynomial in x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bi {
    field: Field,
    c: Vec<Uni>,
}

impl Bi {
    pub fn zero(field: Field) -> Bi {
        Bi { field, c: Vec::new() }
    }

    fn new(field: Field, mut c: Vec<Uni>) -> Bi {
        while c.last().is_some_and(Uni::is_zero) {
            c.pop();
        }
        Bi { field, c }
    }

    pub fn from_uni(u: Uni) -> Bi {
        let f = u.field;
        Bi::new(f, vec![u])
    }

    /// a·x + b·y + c
    pub fn linear(a: &Scalar, b: &Scalar, c: &Scalar) -> Bi {
        let f = a.field();
        Bi::new(f, vec![Uni::new(f, vec![c.clone(), a.clone()]), Uni::constant(b.clone())])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg_y(&self) -> isize {
        self.c.len() as isize - 1
    }

    /// Total degree in x and y, −1 for zero.
    pub fn total_degree(&self) -> isize {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, u)| !u.is_zero())
            .map(|(j, u)| j as isize + u.deg())
            .max()
            .unwrap_or(-1)
    }

    fn lead(&self) -> Uni {
        self.c.last().cloned().unwrap_or_else(|| Uni::zero(self.field))
    }

    pub fn add(&self, o: &Bi) -> Bi {
        let n = self.c.len().max(o.c.len());
        let z = Uni::zero(self.field);
        Bi::new(self.field, (0..n).map(|j| self.c.get(j).unwrap_or(&z).add(o.c.get(j).unwrap_or(&z))).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Bi {
        Bi::new(self.field, self.c.iter().map(|u| u.scale(s)).collect())
    }

    pub fn mul_uni(&self, u: &Uni) -> Bi {
        Bi::new(self.field, self.c.iter().map(|a| a.mul(u)).collect())
    }

    fn shift_y(&self, k: usize) -> Bi {
        let mut c = vec![Uni::zero(self.field); k];
        c.extend(self.c.iter().cloned());
        Bi::new(self.field, c)
    }

    pub fn mul(&self, o: &Bi) -> Bi {
        if self.is_zero() || o.is_zero() {
            return Bi::zero(self.field);
        }
        let mut out = vec![Uni::zero(self.field); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Bi::new(self.field, out)
    }

    /// gcd of the coefficients in k[x], monic.
    pub fn content(&self) -> Uni {
        self.c.iter().fold(Uni::zero(self.field), |g, u| g.gcd(u))
    }

    /// Exact division by a polynomial in x alone.
    fn div_uni(&self, u: &Uni) -> Bi {
        Bi::new(
            self.field,
            self.c
                .iter()
                .map(|a| {
                    let (q, r) = a.divrem(u);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    pub fn primitive_part(&self) -> Bi {
        if self.is_zero() {
            return self.clone();
        }
        self.div_uni(&self.content())
    }

    /// lc(b)^k · self mod b, over k[x][y].
    fn pseudo_rem(&self, b: &Bi) -> Bi {
        let lb = b.lead();
        let db = b.deg_y();
        let mut r = self.clone();
        while !r.is_zero() && r.deg_y() >= db {
            let shift = (r.deg_y() - db) as usize;
            let t = b.mul_uni(&r.lead()).shift_y(shift);
            r = r.mul_uni(&lb).add(&t.scale(&Scalar::from_i64(self.field, -1)));
        }
        r
    }

    /// Exact quotient self / d in k[x][y], or None if d does not divide.
    pub fn div_exact(&self, d: &Bi) -> Option<Bi> {
        if d.is_zero() {
            return None;
        }
        let ld = d.lead();
        let dd = d.deg_y();
        let mut r = self.clone();
        let mut q = Bi::zero(self.field);
        while !r.is_zero() {
            if r.deg_y() < dd {
                return None;
            }
            let (t, rem) = r.lead().divrem(&ld);
            if !rem.is_zero() {
                return None;
            }
            let shift = (r.deg_y() - dd) as usize;
            let term = Bi::from_uni(t).shift_y(shift);
            r = r.add(&d.mul(&term).scale(&Scalar::from_i64(self.field, -1)));
            q = q.add(&term);
        }
        Some(q)
    }

    fn eval_x(&self, x0: &Scalar) -> Uni {
        Uni::new(self.field, self.c.iter().map(|u| u.eval(x0)).collect())
    }

    /// gcd in k[x, y], normalized so that content and primitive part are monic
    /// in their leading coefficients.
    pub fn gcd(&self, o: &Bi) -> Bi {
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        let (ca, cb) = (self.content(), o.content());
        let c = ca.gcd(&cb);
        let (mut a, mut b) = (self.div_uni(&ca), o.div_uni(&cb));
        if a.deg_y() == 0 || b.deg_y() == 0 || trivially_coprime_in_y(&a, &b) {
            return Bi::from_uni(c);
        }
        if a.deg_y() < b.deg_y() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.normalized().mul_uni(&c)
    }

    fn normalized(&self) -> Bi {
        let p = self.primitive_part();
        match p.lead().lead().inv() {
            Ok(inv) => p.scale(&inv),
            Err(_) => p,
        }
    }
}

/// Cheap certificate that two primitive polynomials share no factor
/// involving y: specialize x at a point where both leading coefficients
/// survive and check that the univariate gcd is constant. The y-degree of
/// the true gcd cannot exceed that of the specialized gcd.
fn trivially_coprime_in_y(a: &Bi, b: &Bi) -> bool {
    let field = a.field;
    let tries: u64 = match field {
        Field::Prime(p) => p.min(16),
        Field::Rationals => 16,
    };
    for t in 0..tries {
        let x0 = Scalar::from_i64(field, t as i64 + 1);
        if a.lead().eval(&x0).is_zero() || b.lead().eval(&x0).is_zero() {
            continue;
        }
        return a.eval_x(&x0).gcd(&b.eval_x(&x0)).deg() == 0;
    }
    false
}

/// A ternary form of the given degree, stored as its z = 1 dehomogenization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub poly: Bi,
    pub degree: usize,
}

impl Form {
    pub fn coordinate(field: Field, i: usize) -> Form {
        let one = Scalar::one(field);
        let zero = Scalar::zero(field);
        let poly = match i {
            0 => Bi::linear(&one, &zero, &zero),
            1 => Bi::linear(&zero, &one, &zero),
            _ => Bi::linear(&zero, &zero, &one),
        };
        Form { poly, degree: 1 }
    }

    pub fn mul(&self, o: &Form) -> Form {
        Form { poly: self.poly.mul(&o.poly), degree: self.degree + o.degree }
    }

    /// Σ c_i F_i for forms of a common degree.
    pub fn combination(coeffs: &[Scalar], forms: &[Form]) -> Form {
        let field = coeffs[0].field();
        let degree = forms[0].degree;
        let poly = coeffs
            .iter()
            .zip(forms)
            .fold(Bi::zero(field), |acc, (c, f)| acc.add(&f.poly.scale(c)));
        Form { poly, degree }
    }

    /// Power of z dividing the form.
    fn z_order(&self) -> usize {
        self.degree - self.poly.total_degree().max(0) as usize
    }

    pub fn gcd(&self, o: &Form) -> Form {
        let poly = self.poly.gcd(&o.poly);
        let degree = poly.total_degree().max(0) as usize + self.z_order().min(o.z_order());
        Form { poly, degree }
    }

    pub fn div_exact(&self, d: &Form) -> Option<Form> {
        let poly = self.poly.div_exact(&d.poly)?;
        Some(Form { poly, degree: self.degree.checked_sub(d.degree)? })
    }
}
