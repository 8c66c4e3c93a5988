use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::rational::to_text;
use crate::exactpoly::resultant::bareiss_det;
use crate::exactpoly::IntPoly;

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: Clone + Num> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + o.get(i, j).clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() - o.get(i, j).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * o.get(k, j).clone();
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// `[[a, b], [c, d]]` assembled from four blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let (r1, c1) = (a.rows, a.cols);
        Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < r1, j < c1) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - c1).clone(),
            (false, true) => c.get(i - r1, j).clone(),
            (false, false) => d.get(i - r1, j - c1).clone(),
        })
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        Self::from_blocks(
            a,
            &Self::zeros(a.rows, b.cols),
            &Self::zeros(b.rows, a.cols),
            b,
        )
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        bareiss_det(self.to_rows())
    }

    /// `det(tI - m)` by Berkowitz's division-free algorithm.
    pub fn charpoly(&self) -> IntPoly {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return IntPoly::one();
        }
        // descending coefficients of the leading principal minors' charpolys
        let mut v: Vec<BigInt> = vec![BigInt::one(), -self.get(0, 0).clone()];
        for r in 1..n {
            // q = [1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C]
            let mut q = Vec::with_capacity(r + 2);
            q.push(BigInt::one());
            q.push(-self.get(r, r).clone());
            let mut col: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let rc: BigInt = (0..r).map(|j| self.get(r, j) * &col[j]).sum();
                q.push(-rc);
                col = (0..r)
                    .map(|i| (0..r).map(|j| self.get(i, j) * &col[j]).sum())
                    .collect();
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for j in 0..=i.min(r) {
                    if i - j < q.len() {
                        *slot += &q[i - j] * &v[j];
                    }
                }
            }
            v = next;
        }
        IntPoly::from_descending(v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().all(|x| *x >= BigInt::zero())
    }

    pub fn is_positive(&self) -> bool {
        self.entries().all(|x| *x > BigInt::zero())
    }
}

impl RatMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_i64(rows).to_rat()
    }

    /// Integer matrix when every entry is an integer.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if self.entries().all(|x| x.is_integer()) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }

    /// Least common denominator of the entries.
    pub fn common_denominator(&self) -> BigInt {
        self.entries().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Characteristic polynomial with rational coefficients, ascending.
    pub fn charpoly_rational(&self) -> Vec<BigRational> {
        let d = self.common_denominator();
        let scaled = self.map(|x| (x * BigRational::from_integer(d.clone())).to_integer());
        let p = scaled.charpoly();
        // det(tI - A) = d^{-n} det(dt I - dA)
        let n = self.rows;
        (0..=n)
            .map(|i| BigRational::new(p.coeff(i) * num_traits::pow(d.clone(), i), num_traits::pow(d.clone(), n)))
            .collect()
    }

    /// Characteristic polynomial scaled to a primitive integer polynomial
    /// with positive leading coefficient.
    pub fn charpoly(&self) -> IntPoly {
        let c = self.charpoly_rational();
        let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        IntPoly::from_ascending(
            c.iter()
                .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }

    pub fn det(&self) -> BigRational {
        let c = self.charpoly_rational();
        let n = self.rows;
        if n % 2 == 0 {
            c[0].clone()
        } else {
            -c[0].clone()
        }
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<RatMatrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = RatMatrix::identity(n).to_rows();
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a[r][c].is_zero())
                .ok_or_else(|| Error::Singular(format!("{self:?}")))?;
            a.swap(c, p);
            inv.swap(c, p);
            let piv = a[c][c].clone();
            for j in 0..n {
                a[c][j] = &a[c][j] / &piv;
                inv[c][j] = &inv[c][j] / &piv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for j in 0..n {
                        let t = &f * &a[c][j];
                        a[r][j] -= t;
                        let t = &f * &inv[c][j];
                        inv[r][j] -= t;
                    }
                }
            }
        }
        RatMatrix::from_rows(inv)
    }
}

fn fmt_rows<T>(m: &Matrix<T>, f: &mut fmt::Formatter<'_>, show: impl Fn(&T) -> String) -> fmt::Result {
    f.write_str("[")?;
    for i in 0..m.rows {
        if i > 0 {
            f.write_str(", ")?;
        }
        f.write_str("[")?;
        for j in 0..m.cols {
            if j > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&show(&m.data[i * m.cols + j]))?;
        }
        f.write_str("]")?;
    }
    f.write_str("]")
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(self, f, |x| x.to_string())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(self, f, to_text)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Symmetric matrix with rational entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymRatMatrix(RatMatrix);

impl SymRatMatrix {
    pub fn new(m: RatMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::InvalidArgument(format!("matrix {m:?} is not symmetric")));
        }
        Ok(SymRatMatrix(m))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(RatMatrix::from_i64(rows))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RatMatrix {
        self.0
    }
}

impl Deref for SymRatMatrix {
    type Target = RatMatrix;

    fn deref(&self) -> &RatMatrix {
        &self.0
    }
}

impl fmt::Debug for SymRatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::poly;
    use crate::exactpoly::rational::rat;

    #[test]
    fn charpoly_examples() {
        assert_eq!(IntMatrix::from_i64(&[&[3, -1], &[1, 0]]).charpoly(), poly(&[1, -3, 1]));
        assert_eq!(IntMatrix::identity(3).charpoly(), poly(&[1, -1]).pow(3));
        let k33 = IntMatrix::from_fn(6, 6, |i, j| BigInt::from(i32::from((i < 3) != (j < 3))));
        assert_eq!(k33.charpoly(), poly(&[1, 0, -9, 0, 0, 0, 0]));
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let m = IntMatrix::from_i64(&[&[2, -1, 0, 3], &[1, 4, -2, 0], &[0, 5, 1, 1], &[-3, 0, 2, -1]]);
        let p = m.charpoly();
        // constant term is det(-m) = det(m) for even n
        assert_eq!(p.constant_term(), m.det());
        assert_eq!(-p.coeff(3), m.trace());
        assert_eq!(m.transpose().charpoly(), p);
    }

    #[test]
    fn rational_charpoly_and_inverse() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 3), rat(2, 1)],
        ])
        .unwrap();
        let c = m.charpoly_rational();
        // t^2 - 5/2 t + (1 - 1/9)
        assert_eq!(c, vec![rat(8, 9), rat(-5, 2), rat(1, 1)]);
        assert_eq!(m.charpoly(), poly(&[18, -45, 16]));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }
}
