//! Gaussian elimination over any [`Field`]: rank, kernel, solving, inversion.
//!
//! Pivot choice is always the first nonzero entry in the column, so every
//! returned basis is deterministic.

use crate::exactmath::field::Field;
use crate::exactmath::matrix::{Matrix, MatrixOps};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub reduced: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        let Some(src) = (pr..rows).find(|&r| !field.is_zero(a.get(r, c))) else {
            continue;
        };
        if src != pr {
            for k in 0..cols {
                let x = a.get(src, k).clone();
                let y = a.get(pr, k).clone();
                a.set(src, k, y);
                a.set(pr, k, x);
            }
        }
        let inv = field.inv(a.get(pr, c)).expect("pivot is nonzero");
        for k in c..cols {
            let v = field.mul(&inv, a.get(pr, k));
            a.set(pr, k, v);
        }
        for r in 0..rows {
            if r == pr || field.is_zero(a.get(r, c)) {
                continue;
            }
            let factor = a.get(r, c).clone();
            for k in c..cols {
                let v = field.sub(a.get(r, k), &field.mul(&factor, a.get(pr, k)));
                a.set(r, k, v);
            }
        }
        pivots.push(c);
        pr += 1;
    }
    Echelon { reduced: a, pivots }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).rank()
}

/// Rank together with a basis of the right kernel `{v : m v = 0}`.
///
/// The basis has one vector per free column, with a 1 in that column.
pub fn rank_kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (usize, Vec<Vec<F::Elem>>) {
    let ech = rref(field, m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &p) in ech.pivots.iter().enumerate() {
            v[p] = field.neg(ech.reduced.get(row, free));
        }
        basis.push(v);
    }
    (ech.rank(), basis)
}

/// A solution of `system x = rhs`, if `rhs` lies in the column span.
pub fn solve_linear<F: Field>(field: &F, system: &Matrix<F::Elem>, rhs: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(system.rows(), rhs.len(), "rhs length");
    let rhs_col = Matrix::new(rhs.len(), 1, rhs.to_vec()).expect("column");
    let aug = field.hstack(system, &rhs_col);
    let ech = rref(field, &aug);
    let n = system.cols();
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (row, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.reduced.get(row, n).clone();
    }
    Some(x)
}

/// Solve `a X = b` for a matrix `X`, column by column.
pub fn solve_matrix<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let mut cols = Vec::with_capacity(b.cols());
    for c in 0..b.cols() {
        cols.push(solve_linear(field, a, &b.column(c))?);
    }
    let mut x = field.zeros(a.cols(), b.cols());
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            x.set(r, c, v.clone());
        }
    }
    Some(x)
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = field.hstack(m, &field.identity(n));
    let ech = rref(field, &aug);
    // pivots increase, so the left block is the identity iff pivot n-1 is column n-1
    if n > 0 && (ech.pivots.len() < n || ech.pivots[n - 1] != n - 1) {
        return None;
    }
    Some(ech.reduced.block(0, n, n, 2 * n))
}

pub fn is_invertible<F: Field>(field: &F, m: &Matrix<F::Elem>) -> bool {
    m.is_square() && rank(field, m) == m.rows()
}

/// Indices of a maximal set of linearly independent columns (first pivots).
pub fn pivot_columns<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<usize> {
    rref(field, m).pivots
}

/// Split the ambient space `F^n` along the column span of `m`.
///
/// Returns `(span, coordinates)`: `span` holds independent columns of `m`
/// extended by standard basis vectors to a basis of `F^n`, and the returned
/// `coordinates` matrix is its inverse. The last `n - rank` rows of the
/// inverse give coordinates in a fixed complement of the span.
pub fn adapted_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> AdaptedBasis<F::Elem> {
    let n = m.rows();
    let span_cols = pivot_columns(field, m);
    let span = m.select_columns(&span_cols);
    let ext = field.hstack(&span, &field.identity(n));
    let chosen = pivot_columns(field, &ext);
    let basis = ext.select_columns(&chosen);
    let coords = inverse(field, &basis).expect("adapted basis is invertible");
    let complement: Vec<usize> = chosen[span_cols.len()..].iter().map(|&c| c - span_cols.len()).collect();
    AdaptedBasis {
        rank: span_cols.len(),
        basis,
        coords,
        complement,
    }
}

/// Basis of `F^n` whose first `rank` vectors span a given subspace.
#[derive(Clone, Debug)]
pub struct AdaptedBasis<E> {
    pub rank: usize,
    /// Basis vectors as columns.
    pub basis: Matrix<E>,
    /// Inverse of `basis`.
    pub coords: Matrix<E>,
    /// Standard basis indices spanning the chosen complement.
    pub complement: Vec<usize>,
}

impl<E: Clone> AdaptedBasis<E> {
    /// Linear map onto the complement: kernel is exactly the subspace.
    pub fn quotient_map(&self) -> Matrix<E> {
        let n = self.basis.rows();
        self.coords.block(self.rank, n, 0, n)
    }

    /// Columns spanning the complement, a section of [`Self::quotient_map`].
    pub fn section(&self) -> Matrix<E> {
        let n = self.basis.rows();
        self.basis.block(0, n, self.rank, n)
    }
}
