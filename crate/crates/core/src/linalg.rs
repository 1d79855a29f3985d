//! Small dense row-major matrices and an LU solve with partial pivoting.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Pivots smaller than this, relative to the largest entry of the matrix, are treated as zero.
const PIVOT_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> f64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn linear_solve(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.rows();
    assert_eq!(a.cols(), n, "linear_solve needs a square matrix");
    assert_eq!(b.len(), n, "right-hand side length mismatch");

    let scale = a.max_abs();
    let mut lu = a.clone();
    let mut x = b.to_vec();

    for col in 0..n {
        let (piv, pmax) = (col..n)
            .map(|r| (r, lu[(r, col)].abs()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if !(pmax > PIVOT_TOL * scale) {
            return Err(Error::SingularJacobian { column: col, pivot: pmax });
        }
        if piv != col {
            for j in 0..n {
                lu.data.swap(piv * n + j, col * n + j);
            }
            x.swap(piv, col);
        }
        let p = lu[(col, col)];
        for r in col + 1..n {
            let factor = lu[(r, col)] / p;
            if factor == 0.0 {
                continue;
            }
            lu[(r, col)] = 0.0;
            for j in col + 1..n {
                let v = lu[(col, j)];
                lu[(r, j)] -= factor * v;
            }
            x[r] -= factor * x[col];
        }
    }

    for i in (0..n).rev() {
        let tail: f64 = (i + 1..n).map(|j| lu[(i, j)] * x[j]).sum();
        x[i] = (x[i] - tail) / lu[(i, i)];
    }
    Ok(x)
}
