use std::fmt;

use super::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
///
/// Entries are always reduced residues. The derived ordering compares field,
/// shape and then entries lexicographically in row-major order, which is the
/// canonical order used for subspaces throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of row reduction: the full-height reduced row echelon form
/// (zero rows at the bottom), its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Rref {
    /// The nonzero rows only.
    pub fn trimmed(&self) -> FpMatrix {
        self.matrix.select_rows(0..self.rank)
    }
}

impl FpMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod p.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        let data = data.into_iter().map(|a| field.reduce(a)).collect();
        Ok(FpMatrix { field, rows, cols, data })
    }

    pub(crate) fn from_residues(field: Field, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&a| a < field.p()));
        FpMatrix { field, rows, cols, data }
    }

    /// Builds a matrix from rows of residues; all rows must have length `cols`.
    pub fn from_rows<R: AsRef<[u8]>>(field: Field, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    cols
                )));
            }
            data.extend(r.iter().map(|&a| a % field.p()));
        }
        Ok(FpMatrix { field, rows: rows.len(), cols, data })
    }

    /// Parses rows written as digit strings, e.g. `["1100", "1010"]`.
    pub fn parse(field: Field, rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let parsed = rows
            .iter()
            .map(|r| parse_digits(field, r))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, cols, &parsed)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u8::from(r == c)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn select_rows(&self, rows: impl IntoIterator<Item = usize>) -> Self {
        let mut data = Vec::new();
        let mut count = 0;
        for r in rows {
            data.extend_from_slice(self.row(r));
            count += 1;
        }
        FpMatrix { field: self.field, rows: count, cols: self.cols, data }
    }

    pub fn select_cols(&self, cols: std::ops::Range<usize>) -> Self {
        let width = cols.len();
        let mut data = Vec::with_capacity(self.rows * width);
        for r in 0..self.rows {
            data.extend_from_slice(&self.row(r)[cols.clone()]);
        }
        FpMatrix { field: self.field, rows: self.rows, cols: width, data }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(FpMatrix { field: self.field, rows: self.rows, cols, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(FpMatrix { field: f, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: u8) -> Self {
        let f = self.field;
        let s = s % f.p();
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.field.p() as u32;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u32; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a as u32 * b as u32;
                }
            }
            for (c, a) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = (a % p) as u8;
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{}",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let p = self.field.p() as u32;
        let mut acc = vec![0u32; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                for (slot, &b) in acc.iter_mut().zip(self.row(k)) {
                    *slot += a as u32 * b as u32;
                }
            }
        }
        Ok(acc.into_iter().map(|a| (a % p) as u8).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u8) {
        let f = self.field;
        for a in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *a = f.mul(*a, s);
        }
    }

    /// row[target] -= factor * row[source]
    fn eliminate(&mut self, target: usize, source: usize, factor: u8) {
        let f = self.field;
        let cols = self.cols;
        for c in 0..cols {
            let s = self.data[source * cols + c];
            if s != 0 {
                let t = &mut self.data[target * cols + c];
                *t = f.sub(*t, f.mul(factor, s));
            }
        }
    }

    /// Reduced row echelon form: pivots equal 1, pivot columns are otherwise
    /// zero and strictly increasing.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let f = m.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if factor != 0 {
                        m.eliminate(i, r, factor);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let aug = self.hstack(&Self::identity(self.field, n))?.rref();
        if aug.pivots.len() < n || aug.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(aug.matrix.select_cols(n..2 * n))
    }

    /// Basis (as rows, in RREF) of the right null space `{x : self * x^T = 0}`.
    pub fn kernel(&self) -> Self {
        let red = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let mut basis = Self::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            basis.data[i * self.cols + fc] = 1;
            for (r, &pc) in red.pivots.iter().enumerate() {
                basis.data[i * self.cols + pc] = f.neg(red.matrix.get(r, fc));
            }
        }
        basis.rref().trimmed()
    }

    /// Solves `x * self = target` for a row vector `x`, if a solution exists.
    pub fn solve_left(&self, target: &[u8]) -> Option<Vec<u8>> {
        if target.len() != self.cols {
            return None;
        }
        // Rows of [self^T | target^T] reduced: solution exists iff no pivot in
        // the last column.
        let t = FpMatrix::from_residues(self.field, 1, self.cols, target.to_vec()).transpose();
        let aug = self.transpose().hstack(&t).ok()?.rref();
        if aug.pivots.last() == Some(&self.rows) {
            return None;
        }
        let mut x = vec![0u8; self.rows];
        for (r, &pc) in aug.pivots.iter().enumerate() {
            x[pc] = aug.matrix.get(r, self.rows);
        }
        Some(x)
    }
}

pub(crate) fn parse_digits(field: Field, s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|ch| {
            ch.to_digit(10)
                .filter(|&d| d < field.p() as u32)
                .map(|d| d as u8)
                .ok_or_else(|| Error::Parse(format!("bad digit {ch:?} for {field}")))
        })
        .collect()
}

pub(crate) fn format_digits(v: &[u8]) -> String {
    v.iter().map(|&d| char::from(b'0' + d)).collect()
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, r) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_digits(r))?;
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", format_digits(r))?;
        }
        Ok(())
    }
}
