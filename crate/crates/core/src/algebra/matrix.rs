//! Dense matrices over exact (or numeric) rings with fraction-free
//! elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::rational::Rational;
use super::scalar::{ExactDiv, Ring};
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Exact rational matrix (Brill-Noether systems, evaluated Lax matrices).
pub type QMatrix = Matrix<Rational>;

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
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

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<std::result::Result<_, E>>()?,
        })
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// The matrix with row `skip_r` and column `skip_c` removed.
    pub fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != skip_r) {
            for c in (0..self.cols).filter(|&c| c != skip_c) {
                data.push(self[(r, c)].clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { T::zero() })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self[(r, k)].clone() * rhs[(k, c)].clone()
            })
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() + rhs[(r, c)].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].clone() - rhs[(r, c)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|e| e.clone() * s.clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(T::zero(), |acc, k| acc + self[(r, k)].clone() * v[k].clone())
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, k| acc + self[(k, k)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination. Every division is
    /// exact by Sylvester's identity.
    pub fn det_bareiss(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                    return T::zero();
                };
                m.swap_rows(k, swap);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }

    /// Determinant and classical adjugate (transposed cofactor matrix).
    ///
    /// Cofactors are themselves Bareiss determinants, so the identity
    /// `M * adj(M) = det(M) * I` holds exactly.
    pub fn det_adjugate(&self) -> (T, Matrix<T>) {
        assert!(self.is_square(), "adjugate of a non-square matrix");
        let n = self.rows;
        let det = self.det_bareiss();
        if n == 1 {
            return (det, Matrix::identity(1));
        }
        let adj = Matrix::from_fn(n, n, |r, c| {
            let cof = self.minor(c, r).det_bareiss();
            if (r + c) % 2 == 0 {
                cof
            } else {
                -cof
            }
        });
        (det, adj)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Solves `A x = b` exactly: fraction-free forward elimination on the
    /// augmented matrix followed by back substitution.
    pub fn solve_exact(&self, rhs: &[T]) -> Result<Vec<T>> {
        if !self.is_square() || rhs.len() != self.rows {
            return Err(Error::Validation("solve_exact needs a square system".into()));
        }
        let n = self.rows;
        let mut m = Matrix::from_fn(n, n + 1, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else {
                rhs[r].clone()
            }
        });
        let mut prev = T::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                let swap = (k + 1..n).find(|&r| !m[(r, k)].is_zero()).ok_or(Error::Singular)?;
                m.swap_rows(k, swap);
            }
            for i in k + 1..n {
                for j in k + 1..=n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num.exact_div(&prev).ok_or(Error::Singular)?;
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        let mut x = vec![T::zero(); n];
        for k in (0..n).rev() {
            let mut acc = m[(k, n)].clone();
            for j in k + 1..n {
                acc = acc - m[(k, j)].clone() * x[j].clone();
            }
            x[k] = acc.exact_div(&m[(k, k)]).ok_or(Error::Singular)?;
        }
        Ok(x)
    }

    /// Exact inverse, column by column.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.rows;
        let mut inv = Matrix::zeros(n, n);
        for c in 0..n {
            let e: Vec<T> = (0..n).map(|r| if r == c { T::one() } else { T::zero() }).collect();
            let col = self.solve_exact(&e)?;
            for (r, v) in col.into_iter().enumerate() {
                inv[(r, c)] = v;
            }
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn solve_examples() {
        let id = QMatrix::identity(3);
        let v = vec![rat(1, 2), rat(-3, 1), rat(7, 5)];
        assert_eq!(id.solve_exact(&v).unwrap(), v);

        let a = QMatrix::from_rows(vec![vec![int(1), rat(1, 3)], vec![int(1), rat(4, 3)]]);
        assert_eq!(a.solve_exact(&[int(1), int(2)]).unwrap(), vec![rat(2, 3), int(1)]);

        let s = QMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(1), int(2)]]);
        assert_eq!(s.solve_exact(&[int(1), int(1)]), Err(Error::Singular));
    }

    #[test]
    fn det_adjugate_examples() {
        let (d, adj) = QMatrix::identity(3).det_adjugate();
        assert_eq!(d, int(1));
        assert_eq!(adj, QMatrix::identity(3));

        let m = QMatrix::from_rows(vec![vec![int(2), int(3)], vec![int(5), int(7)]]);
        let (d, adj) = m.det_adjugate();
        assert_eq!(d, int(-1));
        assert_eq!(adj, QMatrix::from_rows(vec![vec![int(7), int(-3)], vec![int(-5), int(2)]]));
    }

    #[test]
    fn pivoting_determinant() {
        let m = QMatrix::from_rows(vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(-3), int(8)],
        ]);
        assert_eq!(m.det_bareiss(), int(-2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(3));
    }
}
