//! Dense exact matrices over ℤ and ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::poly::IntegerPolynomial;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<IntegerMatrix> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&e| BigInt::from(e)).collect()).collect())
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<IntegerMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(bad.len(), c));
        }
        Ok(IntegerMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Permutation matrix sending basis vector j to basis vector perm[j].
    pub fn permutation(perm: &[usize]) -> IntegerMatrix {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as i64, when they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect()).collect()
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(self.cols, v.len()));
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn pow(&self, mut k: u64) -> Result<IntegerMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn neg(&self) -> IntegerMatrix {
        IntegerMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| -e).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Stacks `[[a, b], [c, d]]` from four blocks with compatible shapes.
    pub fn block(a: &IntegerMatrix, b: &IntegerMatrix, c: &IntegerMatrix, d: &IntegerMatrix) -> Result<IntegerMatrix> {
        if a.rows != b.rows || c.rows != d.rows {
            return Err(Error::DimensionMismatch(a.rows, b.rows));
        }
        if a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch(a.cols, c.cols));
        }
        let (rows, cols) = (a.rows + c.rows, a.cols + b.cols);
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = match (i < a.rows, j < a.cols) {
                    (true, true) => a.get(i, j),
                    (true, false) => b.get(i, j - a.cols),
                    (false, true) => c.get(i - a.rows, j),
                    (false, false) => d.get(i - a.rows, j - a.cols),
                };
                m.data[i * cols + j] = v.clone();
            }
        }
        Ok(m)
    }

    /// `ᵀself · gram · self == gram`
    pub fn preserves_form(&self, gram: &IntegerMatrix) -> Result<bool> {
        Ok(&self.transpose().mul(gram)?.mul(self)? == gram)
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| BigRational::from_integer(e.clone())).collect(),
        }
    }

    /// det(xI − m), computed division-free with Berkowitz's algorithm.
    pub fn char_poly(&self) -> Result<IntegerPolynomial> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(IntegerPolynomial::one());
        }
        // Coefficients high-to-low of the characteristic polynomial of the
        // leading r×r block, extended one row and column at a time.
        let mut vect: Vec<BigInt> = vec![BigInt::one(), -self.get(0, 0)];
        for r in 1..n {
            // Leading block M (r×r), column S = m[0..r][r], row R = m[r][0..r].
            let s: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let mut t = Vec::with_capacity(r + 2);
            t.push(BigInt::one());
            t.push(-self.get(r, r));
            let mut ms = s;
            for _ in 0..r {
                let rms: BigInt = (0..r).map(|j| self.get(r, j) * &ms[j]).sum();
                t.push(-rms);
                ms = (0..r).map(|i| (0..r).map(|j| self.get(i, j) * &ms[j]).sum()).collect();
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, v) in vect.iter().enumerate().take(i + 1) {
                    if !v.is_zero() && !t[i - j].is_zero() {
                        *slot += &t[i - j] * v;
                    }
                }
            }
            vect = next;
        }
        vect.reverse();
        Ok(IntegerPolynomial::new(vect))
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() })
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| format!("{e:>3}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for IntegerMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntegerMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Deserialize::deserialize(d)?;
        let parsed: std::result::Result<Vec<Vec<BigInt>>, _> =
            rows.iter().map(|r| r.iter().map(|e| e.parse::<BigInt>()).collect()).collect();
        let parsed = parsed.map_err(serde::de::Error::custom)?;
        IntegerMatrix::from_rows(parsed).map_err(serde::de::Error::custom)
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Deserialize::deserialize(d)?;
        let parsed: std::result::Result<Vec<Vec<BigRational>>, _> =
            rows.iter().map(|r| r.iter().map(|e| crate::exact::interval::parse_rational(e)).collect()).collect();
        RationalMatrix::from_rows(parsed.map_err(serde::de::Error::custom)?).map_err(serde::de::Error::custom)
    }
}

/// Signature data of a symmetric form: counts of positive, negative and zero
/// eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<RationalMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(bad.len(), c));
        }
        Ok(RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    /// Inertia of a symmetric matrix by symmetric Gaussian elimination
    /// (congruence transformations only, so signs are preserved exactly).
    pub fn inertia(&self) -> Result<Inertia> {
        if !self.is_symmetric() {
            return Err(Error::InvalidInput("inertia needs a symmetric matrix".into()));
        }
        let mut a = self.to_rows();
        let mut n = a.len();
        let mut inertia = Inertia { positive: 0, negative: 0, zero: 0 };
        while n > 0 {
            let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
                Some(p) => p,
                None => {
                    let Some((i, j)) =
                        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
                    else {
                        inertia.zero += n;
                        break;
                    };
                    // Replace basis vector e_i by e_i + e_j; the new diagonal
                    // entry is 2·a_ij ≠ 0 because a_ii = a_jj = 0.
                    for k in 0..n {
                        let v = &a[i][k] + &a[j][k];
                        a[i][k] = v;
                    }
                    for k in 0..n {
                        let v = &a[k][i] + &a[k][j];
                        a[k][i] = v;
                    }
                    i
                }
            };
            let d = a[pivot][pivot].clone();
            if d.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            // Eliminate the pivot row and column, then drop them.
            let prow = a[pivot].clone();
            for i in 0..n {
                if i == pivot || prow[i].is_zero() {
                    continue;
                }
                let f = &prow[i] / &d;
                for k in 0..n {
                    let v = &a[i][k] - &f * &prow[k];
                    a[i][k] = v;
                }
            }
            a.remove(pivot);
            for row in a.iter_mut() {
                row.remove(pivot);
            }
            n -= 1;
        }
        Ok(inertia)
    }

    /// Basis of the right kernel, from the reduced row echelon form. Each
    /// basis vector is scaled to coprime integers.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let mut a = self.to_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = BigRational::one() / &a[r][c];
            for k in 0..cols {
                let v = &a[r][k] * &inv;
                a[r][k] = v;
            }
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for k in 0..cols {
                        let v = &a[i][k] - &f * &a[r][k];
                        a[i][k] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); cols];
                v[f] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[row][f].clone();
                }
                clear_denominators(&v)
            })
            .collect()
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j) + a * other.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(self.rows * self.cols, other.rows * other.cols));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// One solution of `self · x = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(self.rows, b.len()));
        }
        let cols = self.cols;
        let mut a: Vec<Vec<BigRational>> =
            self.to_rows().into_iter().zip(b).map(|(mut row, bi)| {
                row.push(bi.clone());
                row
            }).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = BigRational::one() / &a[r][c];
            for v in a[r].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..self.rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for k in 0..=cols {
                        let v = &a[i][k] - &f * &a[r][k];
                        a[i][k] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        if a[r..].iter().any(|row| !row[cols].is_zero()) {
            return Ok(None);
        }
        let mut x = vec![BigRational::zero(); cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = a[row][cols].clone();
        }
        Ok(Some(x))
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).fold(BigRational::zero(), |a, b| a + b))
            .collect())
    }
}

/// Scales a rational vector to coprime integers with a positive first nonzero entry.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) { -g } else { g };
    ints.into_iter().map(|x| x / &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn char_poly_small() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).char_poly().unwrap(), IntegerPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(m(&[&[2, -1], &[1, 0]]).char_poly().unwrap(), IntegerPolynomial::from_i64s(&[1, -2, 1]));
        let c = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).char_poly().unwrap();
        // x^3 - 16x^2 - 12x + 3
        assert_eq!(c, IntegerPolynomial::from_i64s(&[3, -12, -16, 1]));
    }

    #[test]
    fn char_poly_of_permutation() {
        // A 3-cycle and a 2-cycle: (x^3 - 1)(x^2 - 1).
        let p = IntegerMatrix::permutation(&[1, 2, 0, 4, 3]);
        let expected = IntegerPolynomial::from_i64s(&[-1, 0, 0, 1]).mul(&IntegerPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(p.char_poly().unwrap(), expected);
    }

    #[test]
    fn determinant_and_powers() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det().unwrap(), BigInt::from(18));
        let p = IntegerMatrix::permutation(&[1, 2, 0]);
        assert!(p.pow(3).unwrap().is_identity());
        assert!(!p.pow(2).unwrap().is_identity());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn inertia_with_zero_diagonal() {
        let hyperbolic_plane = m(&[&[0, 1], &[1, 0]]).to_rational();
        assert_eq!(hyperbolic_plane.inertia().unwrap(), Inertia { positive: 1, negative: 1, zero: 0 });
        let degenerate = m(&[&[1, 1], &[1, 1]]).to_rational();
        assert_eq!(degenerate.inertia().unwrap(), Inertia { positive: 1, negative: 0, zero: 1 });
        assert_eq!(degenerate.kernel(), vec![vec![BigInt::from(1), BigInt::from(-1)]]);
    }
}
