//! Dense matrices over L.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fields::{QuadExtElem, Tower};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<QuadExtElem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, tower: &Arc<Tower>) -> Matrix {
        Matrix { rows, cols, entries: vec![QuadExtElem::zero(tower); rows * cols] }
    }

    pub fn identity(n: usize, tower: &Arc<Tower>) -> Matrix {
        let mut m = Matrix::zeros(n, n, tower);
        for i in 0..n {
            m.entries[i * n + i] = QuadExtElem::one(tower);
        }
        m
    }

    /// Row-major construction; panics if `entries` has the wrong length.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<QuadExtElem>) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadExtElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: QuadExtElem) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn tower(&self) -> &Arc<Tower> {
        self.entries[0].tower()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols, self.tower());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Entrywise conjugation.
    pub fn conj(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x.conj()).collect() }
    }

    pub fn scale(&self, c: &QuadExtElem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        Matrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// X with self·X = rhs, by Gauss–Jordan elimination.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for c in 0..n {
            // The smallest pivot keeps the intermediate entries small.
            let p = (c..n)
                .filter(|&r| !a.get(r, c).is_zero())
                .min_by_key(|&r| size(a.get(r, c)))
                .ok_or(Error::DivisionByZero)?;
            if p != c {
                a.swap_rows(p, c);
                b.swap_rows(p, c);
            }
            let inv = a.get(c, c).inv().ok_or(Error::DivisionByZero)?;
            a.scale_row(c, &inv);
            b.scale_row(c, &inv);
            for r in 0..n {
                if r != c && !a.get(r, c).is_zero() {
                    let f = a.get(r, c).clone();
                    a.add_row_multiple(r, c, &f);
                    b.add_row_multiple(r, c, &f);
                }
            }
        }
        Ok(b)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve(&Matrix::identity(self.rows, self.tower()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &QuadExtElem) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.entries[idx].is_zero() {
                self.entries[idx] = self.entries[idx].mul(c);
            }
        }
    }

    /// row r += f · row src.
    fn add_row_multiple(&mut self, r: usize, src: usize, f: &QuadExtElem) {
        for j in 0..self.cols {
            let s = &self.entries[src * self.cols + j];
            if !s.is_zero() {
                let v = s.mul(f);
                let idx = r * self.cols + j;
                self.entries[idx] = self.entries[idx].add(&v);
            }
        }
    }

    /// Row-major dump of the nonzero entries, one per line.
    pub fn dump(&self, fmt: impl Fn(&QuadExtElem) -> String) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    let _ = writeln!(out, "[{i},{j}] {}", fmt(x));
                }
            }
        }
        out
    }
}

fn size(x: &QuadExtElem) -> usize {
    x.u().num().len() + x.u().den().len() + x.v().num().len() + x.v().den().len()
}
