//! Dense matrices over table fields, linear codes and exact minimum distance.

mod code;
mod distance;
mod extnat;

pub use code::{base_solutions, LinearCode};
pub use distance::{min_distance, support_rank_distance, Strategy, DEFAULT_BUDGET};
pub use extnat::ExtNat;

use crate::error::{Error, Result};
use crate::galois::{Elem, Gf};

/// Row-major dense matrix of field labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form with zero rows dropped.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Elem>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Elem>]) -> Result<Mat> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(Mat {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn from_labels(cols: usize, rows: &[&[u32]]) -> Result<Mat> {
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| Elem(c)).collect())
            .collect();
        Mat::from_rows(cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn push_row(&mut self, row: &[Elem]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Shape(format!(
                "row of length {} into {} columns",
                row.len(),
                self.cols
            )));
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "stacking {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat, f: &Gf) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `M v^T` for a vector of length `cols`.
    pub fn mul_vec(&self, v: &[Elem], f: &Gf) -> Vec<Elem> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn echelon(&self, f: &Gf) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for x in m.row_mut(r) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for (x, &y) in m.row_mut(i).iter_mut().zip(&pivot_row).skip(c) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        Echelon { mat: m, pivots }
    }

    /// Reduced row echelon form, same shape, zero rows last.
    pub fn rref(&self, f: &Gf) -> Mat {
        let e = self.echelon(f);
        let mut m = e.mat;
        m.data.resize(self.rows * self.cols, Elem::ZERO);
        m.rows = self.rows;
        m
    }

    pub fn rank(&self, f: &Gf) -> usize {
        self.echelon(f).pivots.len()
    }

    /// Basis (as rows) of `{v : M v^T = 0}`.
    pub fn right_kernel(&self, f: &Gf) -> Mat {
        let Echelon { mat, pivots } = self.echelon(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(free.len(), self.cols);
        for (t, &c) in free.iter().enumerate() {
            out.set(t, c, Elem::ONE);
            for (i, &p) in pivots.iter().enumerate() {
                out.set(t, p, f.neg(mat.get(i, c)));
            }
        }
        out
    }

    /// Whether both matrices span the same row space.
    pub fn same_row_space(&self, other: &Mat, f: &Gf) -> bool {
        self.cols == other.cols && self.echelon(f).mat == other.echelon(f).mat
    }

    /// Whether `v` lies in the row space.
    pub fn spans(&self, v: &[Elem], f: &Gf) -> bool {
        let mut m = self.clone();
        m.push_row(v).is_ok() && m.rank(f) == self.rank(f)
    }
}
