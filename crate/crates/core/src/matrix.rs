//! Dense integer matrices, generic over the scalar.

use std::fmt::{self, Debug, Display};
use std::ops::{Index, IndexMut};

use num_integer::Integer;
use num_traits::Signed;

/// Exact integer scalar: `i32`, `i64`, `i128` or `BigInt`.
pub trait Scalar: Integer + Signed + Clone + Debug + Display {}

impl<T> Scalar for T where T: Integer + Signed + Clone + Debug + Display {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`Matrix::from_rows`], but keeps the column count for empty row lists.
    pub fn from_rows_with_cols(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] -= factor · row[src]`
    pub fn sub_row_multiple(&mut self, target: usize, src: usize, factor: &T) {
        for j in 0..self.cols {
            let delta = factor.clone() * self[(src, j)].clone();
            let entry = &mut self[(target, j)];
            *entry = entry.clone() - delta;
        }
    }

    /// `col[target] -= factor · col[src]`
    pub fn sub_col_multiple(&mut self, target: usize, src: usize, factor: &T) {
        for i in 0..self.rows {
            let delta = factor.clone() * self[(i, src)].clone();
            let entry = &mut self[(i, target)];
            *entry = entry.clone() - delta;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let entry = &mut self[(i, j)];
            *entry = -entry.clone();
        }
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let sum = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                    out[(i, j)] = sum;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination. Panics unless square.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return T::zero();
            };
            if p != k {
                m.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone())
                        / prev.clone();
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        if n == 0 {
            return T::one();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    /// Entries reduced into `0..n`.
    pub fn reduced_mod(&self, n: &T) -> Matrix<T> {
        self.map(|v| v.mod_floor(n))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Space-separated rows, one per line.
impl<T: Display> Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: Display> Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = Matrix::from_rows(vec![vec![2i64, -3, 1], vec![2, 0, -1], vec![1, 4, 5]]);
        // 2(0+4) + 3(10+1) + 1(8-0)
        assert_eq!(m.determinant(), 49);
        let big = m.map(|&v| BigInt::from(v));
        assert_eq!(big.determinant(), BigInt::from(49));
        assert_eq!(Matrix::<i64>::identity(4).determinant(), 1);
        let singular = Matrix::from_rows(vec![vec![1i64, 2], vec![2, 4]]);
        assert_eq!(singular.determinant(), 0);
    }

    #[test]
    fn product_and_row_ops() {
        let mut a = Matrix::from_rows(vec![vec![1i32, 2], vec![3, 4]]);
        let id = Matrix::identity(2);
        assert_eq!(a.mul(&id), a);
        a.sub_row_multiple(1, 0, &3);
        assert_eq!(a.to_rows(), vec![vec![1, 2], vec![0, -2]]);
        a.sub_col_multiple(1, 0, &2);
        assert_eq!(a.to_rows(), vec![vec![1, 0], vec![0, -2]]);
        a.negate_row(1);
        assert_eq!(a.to_string(), "1 0\n0 2\n");
    }

    #[test]
    fn reduction_is_non_negative() {
        let a = Matrix::from_rows(vec![vec![-1i64, 5, -7]]);
        assert_eq!(a.reduced_mod(&3).to_rows(), vec![vec![2, 2, 2]]);
    }
}
