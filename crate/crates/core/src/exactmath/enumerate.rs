use crate::error::{Error, Result};
use crate::exactmath::field::PrimeField;
use crate::exactmath::matrix::FpMatrix;

/// Cap on the size of any exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1 << 22)
    }
}

impl Budget {
    /// Fail with [`Error::BudgetExceeded`] when `count` is over the cap.
    pub fn check(&self, what: impl Into<String>, count: u128) -> Result<()> {
        if count > u128::from(self.0) {
            Err(Error::BudgetExceeded {
                what: what.into(),
                count,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }

    /// Check `p^k` without overflowing.
    pub fn check_power(&self, what: impl Into<String>, p: u32, k: usize) -> Result<u128> {
        let count = checked_power(p, k);
        self.check(what, count)?;
        Ok(count)
    }
}

/// `p^k`, saturating at `u128::MAX`.
pub fn checked_power(p: u32, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(u128::from(p));
    }
    acc
}

/// Every vector of `F_p^len` in lexicographic order, the last coordinate
/// varying fastest.
#[derive(Clone, Debug)]
pub struct VectorOdometer {
    p: u32,
    current: Vec<u32>,
    done: bool,
}

impl VectorOdometer {
    pub fn new(p: u32, len: usize) -> Self {
        VectorOdometer {
            p,
            current: vec![0; len],
            done: false,
        }
    }
}

impl Iterator for VectorOdometer {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < self.p {
                break;
            }
            self.current[i] = 0;
        }
        Some(out)
    }
}

/// Stream of all `rows x cols` matrices over `F_p`, lexicographic in the
/// row-major entry sequence.
#[derive(Clone, Debug)]
pub struct MatrixEnumerator {
    rows: usize,
    cols: usize,
    inner: VectorOdometer,
}

impl Iterator for MatrixEnumerator {
    type Item = FpMatrix;

    fn next(&mut self) -> Option<FpMatrix> {
        let v = self.inner.next()?;
        Some(FpMatrix::new(self.rows, self.cols, v).expect("odometer length"))
    }
}

pub fn enumerate_matrices(rows: usize, cols: usize, field: &PrimeField, budget: Budget) -> Result<MatrixEnumerator> {
    budget.check_power(
        format!("{rows}x{cols} matrices over F_{}", field.p()),
        field.p(),
        rows * cols,
    )?;
    Ok(MatrixEnumerator {
        rows,
        cols,
        inner: VectorOdometer::new(field.p(), rows * cols),
    })
}

/// Every `k`-dimensional subspace of `F_p^n` exactly once, as an `n x k`
/// matrix whose columns are the rows of its reduced echelon form.
pub fn subspaces(field: &PrimeField, n: usize, k: usize, budget: Budget) -> Result<Vec<FpMatrix>> {
    let p = field.p();
    let pivot_sets = combinations(n, k);
    let free_slots = |pivots: &[usize]| -> Vec<(usize, usize)> {
        let mut slots = Vec::new();
        for (row, &c) in pivots.iter().enumerate() {
            for col in c + 1..n {
                if !pivots.contains(&col) {
                    slots.push((row, col));
                }
            }
        }
        slots
    };
    let total = pivot_sets.iter().fold(0u128, |acc, ps| {
        acc.saturating_add(checked_power(p, free_slots(ps).len()))
    });
    budget.check(format!("{k}-dimensional subspaces of F_{p}^{n}"), total)?;
    let mut out = Vec::with_capacity(total as usize);
    for pivots in &pivot_sets {
        let slots = free_slots(pivots);
        for values in VectorOdometer::new(p, slots.len()) {
            let mut basis = FpMatrix::filled(n, k, 0);
            for (row, &c) in pivots.iter().enumerate() {
                basis.set(c, row, 1);
            }
            for (&(row, col), &v) in slots.iter().zip(&values) {
                basis.set(col, row, v);
            }
            out.push(basis);
        }
    }
    Ok(out)
}

/// Increasing `k`-subsets of `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            extend(i + 1, n, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        extend(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn one_by_one_over_f2() {
        let all: Vec<_> = enumerate_matrices(1, 1, &fp(2), Budget::default()).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].entries(), &[0]);
        assert_eq!(all[1].entries(), &[1]);
    }

    #[test]
    fn counts_are_powers() {
        assert_eq!(enumerate_matrices(2, 1, &fp(2), Budget::default()).unwrap().count(), 4);
        assert_eq!(enumerate_matrices(0, 3, &fp(5), Budget::default()).unwrap().count(), 1);
    }

    #[test]
    fn two_by_two_over_f3_matches_odometer() {
        // Direct odometer oracle: nested loops over the four entries.
        let mut expected = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    for d in 0..3u32 {
                        expected.push(vec![a, b, c, d]);
                    }
                }
            }
        }
        let got: Vec<Vec<u32>> = enumerate_matrices(2, 2, &fp(3), Budget::default())
            .unwrap()
            .map(|m| m.entries().to_vec())
            .collect();
        assert_eq!(got.len(), 81);
        assert_eq!(got, expected);
        assert!(got[0].iter().all(|&x| x == 0));
    }

    #[test]
    fn budget_names_the_count() {
        let err = enumerate_matrices(3, 3, &fp(3), Budget(100)).unwrap_err();
        match err {
            Error::BudgetExceeded { count, budget, .. } => {
                assert_eq!(count, 19683);
                assert_eq!(budget, 100);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        use crate::exactmath::linalg::rank;
        let f = fp(3);
        let counts: Vec<usize> = (0..=4)
            .map(|k| subspaces(&f, 4, k, Budget::default()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 40, 130, 40, 1]);
        let planes = subspaces(&fp(2), 3, 2, Budget::default()).unwrap();
        assert_eq!(planes.len(), 7);
        assert!(planes.iter().all(|b| rank(&fp(2), b) == 2));
        assert_eq!(subspaces(&f, 2, 3, Budget::default()).unwrap().len(), 0);
        assert!(subspaces(&f, 6, 3, Budget(100)).is_err());
    }
}
