//! Dense matrices over [`Scalar`] with exact Gaussian elimination.
//!
//! Every fiber dimension in this crate is tiny (a handful at most), so a
//! straightforward dense representation with fraction-free-ish row reduction
//! is both simple and fast enough.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>, // row-major
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect(),
        )
    }

    /// Column vector from a slice.
    pub fn col_vec(v: &[Scalar]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    /// Apply to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self[(i, j)].clone() } else { other[(i - self.rows, j)].clone() }
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Row echelon reduction in place; returns pivot column indices.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else { continue };
            for j in 0..self.cols {
                let a = self[(p, j)].clone();
                let b = self[(r, j)].clone();
                self[(r, j)] = a;
                self[(p, j)] = b;
            }
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        self[(i, j)] = &self[(i, j)] - &(&f * &self[(r, j)]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.row_reduce();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one column vector per free variable.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    vec[col] = -&r[(*row, free)];
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Basis of the column space (a subset of the columns).
    pub fn image_basis(&self) -> Vec<Vec<Scalar>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.col(c)).collect()
    }

    /// Solve self * x = b for one solution, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let aug = self.hcat(&Matrix::col_vec(b));
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug = self.hcat(&Matrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    let a = m[(p, j)].clone();
                    let b = m[(c, j)].clone();
                    m[(c, j)] = a;
                    m[(p, j)] = b;
                }
                det = -det;
            }
            det = det * m[(c, c)].clone();
            let inv = m[(c, c)].recip();
            for i in (c + 1)..n {
                if !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] * &inv;
                    for j in c..n {
                        m[(i, j)] = &m[(i, j)] - &(&f * &m[(c, j)]);
                    }
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }
}

/// Dimension of the sum of the column spaces of the given matrices
/// (all must have the same number of rows).
pub fn dim_column_span(mats: &[&Matrix]) -> usize {
    let rows = mats.first().map_or(0, |m| m.rows);
    let mut all = Matrix::zero(rows, 0);
    for m in mats {
        assert_eq!(m.rows, rows);
        all = all.hcat(m);
    }
    all.rank()
}

/// Dimension of the intersection of the kernels of the given matrices
/// (all must have the same number of columns).
pub fn dim_kernel_intersection(mats: &[&Matrix]) -> usize {
    let cols = mats.first().map_or(0, |m| m.cols);
    let mut stack = Matrix::zero(0, cols);
    for m in mats {
        assert_eq!(m.cols, cols);
        stack = stack.vcat(m);
    }
    cols - stack.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive triple-loop product used as the oracle for `Mul`.
    fn naive_mul(a: &Matrix, b: &Matrix) -> Matrix {
        let mut c = Matrix::zero(a.rows, b.cols);
        for i in 0..a.rows {
            for j in 0..b.cols {
                let mut acc = Scalar::zero();
                for k in 0..a.cols {
                    acc = acc + &a[(i, k)] * &b[(k, j)];
                }
                c[(i, j)] = acc;
            }
        }
        c
    }

    #[test]
    fn product_matches_naive_oracle() {
        let a = Matrix::from_int_rows(&[&[1, 2, -1], &[0, 3, 4]]);
        let b = Matrix::from_int_rows(&[&[2, 0], &[-1, 5], &[3, 1]]);
        assert_eq!(&a * &b, naive_mul(&a, &b));
    }

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let b = vec![Scalar::from_int(3), Scalar::from_int(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[Scalar::from_int(0), Scalar::from_int(1)]).is_none());
    }

    #[test]
    fn determinant() {
        let m = Matrix::from_int_rows(&[&[2, 1, 0], &[1, 1, 1], &[0, 3, 2]]);
        // Cofactor expansion by hand: 2*(2-3) - 1*(2-0) + 0 = -4.
        assert_eq!(m.det(), Scalar::from_int(-4));
        assert_eq!(Matrix::identity(4).det(), Scalar::one());
    }

    #[test]
    fn span_and_kernel_intersection_helpers() {
        let a = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        let b = Matrix::from_int_rows(&[&[0, 0], &[0, 1]]);
        assert_eq!(dim_column_span(&[&a, &b]), 2);
        assert_eq!(dim_kernel_intersection(&[&a, &b]), 0);
        assert_eq!(dim_kernel_intersection(&[&a]), 1);
    }
}
