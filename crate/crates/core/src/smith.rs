//! Smith normal form over the integers.
//!
//! For an `r × c` matrix `A` this finds unimodular `U` (`r × r`) and `V`
//! (`c × c`) with `U·A·V = D`, where `D` is diagonal with non-negative entries
//! `d₁ | d₂ | … | d_k` followed by zeros.
//!
//! Each step moves the smallest nonzero entry of the remaining block to the
//! pivot, clears its row and column by Euclidean division, and restarts
//! whenever a remainder survives (the remainder becomes the next, smaller,
//! pivot). Once the row and column are clear, an entry of the block that the
//! pivot does not divide is pulled into the pivot row and the step repeats.

use crate::matrix::{Matrix, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct SmithForm<T> {
    reduced: Matrix<T>,
    left: Matrix<T>,
    right: Matrix<T>,
    rank: usize,
}

impl<T: Scalar> SmithForm<T> {
    /// The diagonal matrix `D`.
    pub fn reduced(&self) -> &Matrix<T> {
        &self.reduced
    }

    /// `U`, acting on rows.
    pub fn left(&self) -> &Matrix<T> {
        &self.left
    }

    /// `V`, acting on columns.
    pub fn right(&self) -> &Matrix<T> {
        &self.right
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All `min(r, c)` diagonal entries, zeros included.
    pub fn diagonal(&self) -> Vec<T> {
        let len = self.reduced.rows().min(self.reduced.cols());
        (0..len).map(|i| self.reduced[(i, i)].clone()).collect()
    }

    /// The nonzero diagonal entries `d₁ | … | d_k`.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank)
            .map(|i| self.reduced[(i, i)].clone())
            .collect()
    }

    /// Checks `U·A·V = D`, the shape of `D`, and the divisibility chain.
    pub fn verify(&self, a: &Matrix<T>) -> bool {
        if self.left.mul(a).mul(&self.right) != self.reduced {
            return false;
        }
        let d = &self.reduced;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let on_diag = i == j && i < self.rank;
                if !on_diag && !d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let factors = self.invariant_factors();
        factors.iter().all(|f| f.is_positive())
            && factors.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

impl<T: std::fmt::Display> std::fmt::Debug for SmithForm<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SmithForm")
            .field("rank", &self.rank)
            .field("reduced", &self.reduced)
            .field("left", &self.left)
            .field("right", &self.right)
            .finish()
    }
}

pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut left = Matrix::identity(rows);
    let mut right = Matrix::identity(cols);
    let mut rank = 0;

    'steps: for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&d, k) else {
                break 'steps;
            };
            d.swap_rows(k, pi);
            left.swap_rows(k, pi);
            d.swap_cols(k, pj);
            right.swap_cols(k, pj);

            let pivot = d[(k, k)].clone();
            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = d[(i, k)].clone() / pivot.clone();
                d.sub_row_multiple(i, k, &q);
                left.sub_row_multiple(i, k, &q);
                clean &= d[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = d[(k, j)].clone() / pivot.clone();
                d.sub_col_multiple(j, k, &q);
                right.sub_col_multiple(j, k, &q);
                clean &= d[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender =
                (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    // row k += row i
                    let minus_one = -T::one();
                    d.sub_row_multiple(k, i, &minus_one);
                    left.sub_row_multiple(k, i, &minus_one);
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            left.negate_row(k);
        }
        rank = k + 1;
    }

    SmithForm {
        reduced: d,
        left,
        right,
        rank,
    }
}

fn smallest_entry<T: Scalar>(d: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let v = d[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| v < *b) {
                let is_unit = v.is_one();
                best = Some((i, j, v));
                if is_unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn big(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows).map(|&v| BigInt::from(v))
    }

    #[test]
    fn textbook_example() {
        let a = Matrix::from_rows(vec![vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.invariant_factors(), vec![2, 6, 12]);
        assert!(snf.verify(&a));
    }

    #[test]
    fn divisibility_needs_fixing() {
        // diag(2, 3) is diagonal but not in Smith form
        let a = Matrix::from_rows(vec![vec![2i64, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.invariant_factors(), vec![1, 6]);
        assert!(snf.verify(&a));
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let a = big(vec![
            vec![1, -1, 0, 0, 0],
            vec![0, 2, -2, 0, 0],
            vec![1, 1, -2, 0, 0],
        ]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.rank(), 2);
        assert_eq!(
            snf.diagonal(),
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(0)]
        );
        assert!(snf.verify(&a));
        assert_eq!(snf.left().determinant().abs(), BigInt::from(1));
        assert_eq!(snf.right().determinant().abs(), BigInt::from(1));
    }

    #[test]
    fn empty_and_zero_matrices() {
        let empty = Matrix::<i64>::from_rows_with_cols(vec![], 3);
        let snf = smith_normal_form(&empty);
        assert_eq!(snf.rank(), 0);
        assert_eq!(snf.right().rows(), 3);
        assert!(snf.verify(&empty));
        let zero = Matrix::<i64>::zeros(2, 2);
        assert_eq!(smith_normal_form(&zero).rank(), 0);
    }
}
