use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::field::Field;

/// Dense row-major matrix. `0 x n` and `n x 0` shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type FpMatrix = Matrix<u32>;

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self>
    where
        T: Default,
    {
        let mut m = Matrix::filled(rows, columns.len(), T::default());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape("column length".into()));
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut data = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for r in r0..r1 {
            data.extend_from_slice(&self.row(r)[c0..c1]);
        }
        Matrix {
            rows: r1 - r0,
            cols: c1 - c0,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)?;
        let rows: Vec<&[T]> = (0..self.rows)
            .map(|r| &self.data[r * self.cols..(r + 1) * self.cols])
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Matrix arithmetic routed through a field object.
pub trait MatrixOps: Field {
    fn zeros(&self, rows: usize, cols: usize) -> Matrix<Self::Elem> {
        Matrix::filled(rows, cols, self.zero())
    }

    fn identity(&self, n: usize) -> Matrix<Self::Elem> {
        let mut m = self.zeros(n, n);
        for i in 0..n {
            m.set(i, i, self.one());
        }
        m
    }

    fn matmul(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        assert_eq!(a.cols(), b.rows(), "matmul shape {:?} * {:?}", a.shape(), b.shape());
        let mut out = self.zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for k in 0..a.cols() {
                let aik = a.get(i, k);
                if self.is_zero(aik) {
                    continue;
                }
                for j in 0..b.cols() {
                    let cur = out.get(i, j).clone();
                    out.set(i, j, self.add(&cur, &self.mul(aik, b.get(k, j))));
                }
            }
        }
        out
    }

    fn mat_vec(&self, a: &Matrix<Self::Elem>, v: &[Self::Elem]) -> Vec<Self::Elem> {
        assert_eq!(a.cols(), v.len());
        (0..a.rows())
            .map(|i| {
                a.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
            })
            .collect()
    }

    fn mat_add(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        assert_eq!(a.shape(), b.shape());
        let data = a
            .entries()
            .iter()
            .zip(b.entries())
            .map(|(x, y)| self.add(x, y))
            .collect();
        Matrix {
            rows: a.rows(),
            cols: a.cols(),
            data,
        }
    }

    fn mat_sub(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        assert_eq!(a.shape(), b.shape());
        let data = a
            .entries()
            .iter()
            .zip(b.entries())
            .map(|(x, y)| self.sub(x, y))
            .collect();
        Matrix {
            rows: a.rows(),
            cols: a.cols(),
            data,
        }
    }

    fn mat_scale(&self, c: &Self::Elem, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        a.map(|x| self.mul(c, x))
    }

    fn is_zero_matrix(&self, a: &Matrix<Self::Elem>) -> bool {
        a.entries().iter().all(|x| self.is_zero(x))
    }

    /// `[[a, 0], [0, b]]`.
    fn block_diag(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        let mut m = self.zeros(a.rows() + b.rows(), a.cols() + b.cols());
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                m.set(r, c, a.get(r, c).clone());
            }
        }
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                m.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
            }
        }
        m
    }

    /// `[[tl, tr], [bl, br]]` with conforming shapes.
    fn block2x2(
        &self,
        tl: &Matrix<Self::Elem>,
        tr: &Matrix<Self::Elem>,
        bl: &Matrix<Self::Elem>,
        br: &Matrix<Self::Elem>,
    ) -> Matrix<Self::Elem> {
        assert_eq!(tl.rows(), tr.rows());
        assert_eq!(bl.rows(), br.rows());
        assert_eq!(tl.cols(), bl.cols());
        assert_eq!(tr.cols(), br.cols());
        let mut m = self.zeros(tl.rows() + bl.rows(), tl.cols() + tr.cols());
        let put = |m: &mut Matrix<Self::Elem>, src: &Matrix<Self::Elem>, r0: usize, c0: usize| {
            for r in 0..src.rows() {
                for c in 0..src.cols() {
                    m.set(r0 + r, c0 + c, src.get(r, c).clone());
                }
            }
        };
        put(&mut m, tl, 0, 0);
        put(&mut m, tr, 0, tl.cols());
        put(&mut m, bl, tl.rows(), 0);
        put(&mut m, br, tl.rows(), tl.cols());
        m
    }

    fn hstack(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        assert_eq!(a.rows(), b.rows());
        let mut m = self.zeros(a.rows(), a.cols() + b.cols());
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                m.set(r, c, a.get(r, c).clone());
            }
            for c in 0..b.cols() {
                m.set(r, a.cols() + c, b.get(r, c).clone());
            }
        }
        m
    }

    fn vstack(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        self.hstack(&a.transpose(), &b.transpose()).transpose()
    }
}

impl<F: Field> MatrixOps for F {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::PrimeField;

    #[test]
    fn degenerate_shapes_are_legal() {
        let f = PrimeField::new(2).unwrap();
        let a = f.zeros(0, 3);
        let b = f.zeros(3, 2);
        let c = f.matmul(&a, &b);
        assert_eq!(c.shape(), (0, 2));
        let d = f.matmul(&f.zeros(2, 0), &f.zeros(0, 2));
        assert_eq!(d, f.zeros(2, 2));
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(Matrix::new(2, 2, vec![1u32, 2, 3]).is_err());
    }

    #[test]
    fn block_helpers() {
        let f = PrimeField::new(5).unwrap();
        let a = Matrix::from_rows(&[vec![1u32, 2]]).unwrap();
        let b = Matrix::from_rows(&[vec![3u32]]).unwrap();
        let d = f.block_diag(&a, &b);
        assert_eq!(d, Matrix::from_rows(&[vec![1, 2, 0], vec![0, 0, 3]]).unwrap());
        assert_eq!(d.block(0, 1, 0, 2), a);
        assert_eq!(f.vstack(&a, &a).rows(), 2);
    }
}
