//! Dense exact matrices over Q(zeta_m).

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::{CycField, CycNum};
use crate::error::{invariant, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl Matrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: alloc::vec![CycNum::zero(field); rows * cols] }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> Self {
        let mut out = Self::zeros(field, n, n);
        for i in 0..n {
            out.set(i, i, CycNum::one(field));
        }
        out
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(field: &Arc<CycField>, rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(CycNum::zero(&self.field), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns. The pivot in each
    /// column is the first row (top to bottom) with a nonzero entry.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, with that free
    /// variable set to 1 and the other free variables 0.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = alloc::vec![CycNum::zero(&self.field); self.cols];
                v[fc] = CycNum::one(&self.field);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, fc);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(invariant!("inverse of a non-square {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycNum::one(&self.field));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(invariant!("singular {n}x{n} matrix"));
        }
        let mut out = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(z_{})", self.rows, self.cols, self.field.order())?;
        for i in 0..self.rows {
            let row: Vec<_> = self.row(i).iter().map(CycNum::to_text).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(m: u64) -> Arc<CycField> {
        Arc::new(CycField::new(m).unwrap())
    }

    fn int(f: &Arc<CycField>, v: i64) -> CycNum {
        CycNum::from_int(f, v)
    }

    #[test]
    fn rational_inverse() {
        let f = field(1);
        let a = Matrix::from_rows(&f, alloc::vec![
            alloc::vec![int(&f, 2), int(&f, 1)],
            alloc::vec![int(&f, 7), int(&f, 4)],
        ]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(*inv.get(0, 1), int(&f, -1));
    }

    #[test]
    fn dft_matrix_inverse() {
        let f = field(15);
        let n = 15;
        let rows = (0..n)
            .map(|i| (0..n).map(|j| CycNum::zeta_pow(&f, (i * j) as u64)).collect())
            .collect();
        let a = Matrix::from_rows(&f, rows);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
        // inverse DFT is the conjugate transpose over n
        let q = num_rational::BigRational::new(1.into(), 15.into());
        assert_eq!(*inv.get(1, 2), CycNum::zeta_pow(&f, 15 - 2).scale(&q));
    }

    #[test]
    fn singular_is_an_error() {
        let f = field(3);
        let w = CycNum::zeta_pow(&f, 1);
        let a = Matrix::from_rows(&f, alloc::vec![
            alloc::vec![int(&f, 1), w.clone()],
            alloc::vec![w.clone(), &w * &w],
        ]);
        assert!(a.inverse().is_err());
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn nullspace_vectors_are_in_kernel() {
        let f = field(5);
        let z = |k| CycNum::zeta_pow(&f, k);
        let a = Matrix::from_rows(&f, alloc::vec![
            alloc::vec![z(0), z(1), z(2), z(3)],
            alloc::vec![z(0), z(2), z(4), z(1)],
        ]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(CycNum::is_zero));
        }
        assert!(ns[0][2].is_one() && ns[0][3].is_zero());
    }
}
