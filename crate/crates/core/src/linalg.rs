//! Dense matrices over a prime field `F_p` with exact Gaussian elimination.
//!
//! Matrices act on column vectors. Entries are kept reduced in `0..p`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const MAX_PRIME: u32 = 97;

    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !prime || p > Self::MAX_PRIME {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "zero has no inverse");
        let mut result = 1;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// All field elements `0..p`.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    /// `p^exp`, or `None` if it does not fit in a `u64`.
    pub fn checked_pow(self, exp: usize) -> Option<u64> {
        let exp = u32::try_from(exp).ok()?;
        (self.p as u64).checked_pow(exp)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: 2 }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Row-major entries, reduced into the field.
    pub fn from_row_major(rows: usize, cols: usize, entries: &[i64], f: PrimeField) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidRep(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            data: entries.iter().map(|&e| f.reduce(e)).collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(entry(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Block diagonal matrix `diag(a, b)`.
    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::from_fn(a.rows + b.rows, a.cols + b.cols, |i, j| {
            if i < a.rows && j < a.cols {
                a.get(i, j)
            } else if i >= a.rows && j >= a.cols {
                b.get(i - a.rows, j - a.cols)
            } else {
                0
            }
        })
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

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Matrix, f: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix, f: PrimeField) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sum");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix, f: PrimeField) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in difference");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32, f: PrimeField) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, cols: impl IntoIterator<Item = usize>) -> Matrix {
        let picked: Vec<usize> = cols.into_iter().collect();
        Matrix::from_fn(self.rows, picked.len(), |i, j| self.get(i, picked[j]))
    }

    pub fn rows_range(&self, rows: std::ops::Range<usize>) -> Matrix {
        let start = rows.start;
        Matrix::from_fn(rows.len(), self.cols, |i, j| self.get(start + i, j))
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self, f: PrimeField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, row * m.cols + j);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in 0..m.cols {
                let v = f.mul(m.get(row, j), inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: PrimeField) -> usize {
        self.rref(f).1.len()
    }

    /// Injective as a linear map on column vectors.
    pub fn is_injective(&self, f: PrimeField) -> bool {
        self.cols == 0 || self.rank(f) == self.cols
    }

    pub fn is_invertible(&self, f: PrimeField) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    /// Basis of `{v : self · v = 0}`, one vector per column.
    pub fn nullspace(&self, f: PrimeField) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(r.get(row, fc)));
            }
        }
        basis
    }

    /// Basis of the column space, taken from the original pivot columns.
    pub fn column_space(&self, f: PrimeField) -> Matrix {
        let (_, pivots) = self.rref(f);
        self.columns(pivots)
    }

    /// Solves `self · X = rhs` for `X` when `self` has full column rank and
    /// every column of `rhs` lies in its column space.
    pub fn solve(&self, rhs: &Matrix, f: PrimeField) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref(f);
        if pivots.len() != self.cols || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            // inconsistent, or `self` is rank deficient
            return None;
        }
        Some(Matrix::from_fn(self.cols, rhs.cols, |i, j| {
            r.get(i, self.cols + j)
        }))
    }

    /// Standard basis vectors completing the columns of `self` (assumed
    /// independent) to a basis of the ambient space.
    pub fn complement(&self, f: PrimeField) -> Matrix {
        let aug = self.hstack(&Matrix::identity(self.rows));
        let (_, pivots) = aug.rref(f);
        let extra: Vec<usize> = pivots
            .into_iter()
            .filter(|&c| c >= self.cols)
            .map(|c| c - self.cols)
            .collect();
        Matrix::identity(self.rows).columns(extra)
    }

    pub fn inverse(&self, f: PrimeField) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Matrix::identity(self.rows), f)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}
