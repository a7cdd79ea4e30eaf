use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<Z> {
    rows: usize,
    cols: usize,
    entries: Vec<Z>,
}

impl<Z: Scalar> Matrix<Z> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Z::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Z::one();
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[Z]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Build from row-major entries. Fails if the count is not `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Z>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Build from nested rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Z>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Shorthand for literal matrices in tests and tables.
    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        let entries = rows.iter().flatten().map(|&v| Z::of(v)).collect();
        Matrix { rows: rows.len(), cols: C, entries }
    }

    pub fn column_vector(entries: Vec<Z>) -> Self {
        Matrix { rows: entries.len(), cols: 1, entries }
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

    pub fn row(&self, i: usize) -> &[Z] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Z> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Z>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Z] {
        &self.entries
    }

    pub fn map<W: Scalar>(&self, f: impl Fn(&Z) -> W) -> Matrix<W> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Z::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Entries `(i, i)` for `i < min(rows, cols)`.
    pub fn diagonal_entries(&self) -> Vec<Z> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self[(i, j)].clone())).collect();
        Matrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!("hcat of {} and {} rows", self.rows, other.rows)));
        }
        let entries = (0..self.rows).flat_map(|i| self.row(i).iter().chain(other.row(i)).cloned()).collect();
        Self::from_vec(self.rows, self.cols + other.cols, entries)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Z]) -> Vec<Z> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Z::zero(), |acc, (a, x)| acc + a.clone() * x.clone()))
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Z) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * k.clone();
            self[(dst, j)] = self[(dst, j)].clone() + v;
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Z) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * k.clone();
            self[(i, dst)] = self[(i, dst)].clone() + v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Z> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Z::one());
        }
        let mut m = self.clone();
        let mut sign = Z::one();
        let mut prev = Z::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Z::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * m[(n - 1, n - 1)].clone())
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

impl<Z> Index<(usize, usize)> for Matrix<Z> {
    type Output = Z;

    fn index(&self, (i, j): (usize, usize)) -> &Z {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<Z> IndexMut<(usize, usize)> for Matrix<Z> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Z {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl<Z: Scalar> Mul for &Matrix<Z> {
    type Output = Matrix<Z>;

    fn mul(self, rhs: &Matrix<Z>) -> Matrix<Z> {
        self.try_mul(rhs).expect("incompatible matrix shapes")
    }
}

impl<Z: Scalar> Mul for Matrix<Z> {
    type Output = Matrix<Z>;

    fn mul(self, rhs: Matrix<Z>) -> Matrix<Z> {
        &self * &rhs
    }
}

impl<Z: fmt::Display> fmt::Display for Matrix<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<Z: fmt::Debug> fmt::Debug for Matrix<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[Z]> = self.entries.chunks(self.cols.max(1)).take(self.rows).collect();
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::<i64>::from_i64(&[[2, -1], [1, 0]]);
        let b = Matrix::<i64>::from_i64(&[[3, -1], [1, 0]]);
        assert_eq!(&a * &b, Matrix::from_i64(&[[5, -2], [3, -1]]));
        assert_eq!(a.transpose(), Matrix::from_i64(&[[2, 1], [-1, 0]]));
    }

    #[test]
    fn bareiss_determinant() {
        let m = Matrix::<i64>::from_i64(&[[0, 0, 0, 1], [0, 1, 0, 0], [0, 2, 1, 0], [1, 0, -1, 2]]);
        assert_eq!(m.determinant().unwrap(), -1);
        let singular = Matrix::<i64>::from_i64(&[[1, 2], [2, 4]]);
        assert_eq!(singular.determinant().unwrap(), 0);
        assert_eq!(Matrix::<i64>::from_i64(&[[2, 3], [1, 4]]).determinant().unwrap(), 5);
    }

    #[test]
    fn shape_errors() {
        assert!(Matrix::<i64>::from_vec(2, 2, vec![1, 2, 3]).is_err());
        assert!(Matrix::<i64>::from_rows(vec![vec![1], vec![1, 2]]).is_err());
        let a = Matrix::<i64>::zeros(2, 3);
        assert!(a.try_mul(&a).is_err());
        assert!(a.determinant().is_err());
    }
}
