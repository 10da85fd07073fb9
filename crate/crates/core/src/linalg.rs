//! Exact linear algebra over `F_p`.
//!
//! `p = 2` matrices keep each row bit-packed in `u64` words and eliminate with
//! XOR; other primes store one residue per entry.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::additive::AdditivePoly;
use crate::arith::{mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::ext::{ExtCtx, ExtElem};

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    /// Row stride in `u64`s: `cols.div_ceil(64)` when packed, else `cols`.
    stride: usize,
    data: Vec<u64>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix over F_{} ({}x{})", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Stable kernel / stable image of a square matrix.
#[derive(Clone, Debug)]
pub struct FittingPair {
    pub w0_basis: Vec<Vec<u64>>,
    pub w1_basis: Vec<Vec<u64>>,
}

impl FittingPair {
    pub fn delta0(&self) -> usize {
        self.w0_basis.len()
    }

    pub fn delta1(&self) -> usize {
        self.w1_basis.len()
    }
}

/// Outcome of solving `M z = v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub consistent: bool,
    /// `dim ker M`; the solution count is `p^kernel_dim` when consistent.
    pub kernel_dim: usize,
    pub particular: Option<Vec<u64>>,
}

impl AffineSolution {
    pub fn count(&self, p: u64) -> BigUint {
        if self.consistent {
            BigUint::from(p).pow(self.kernel_dim as u32)
        } else {
            BigUint::zero()
        }
    }
}

impl FpMatrix {
    fn packed(p: u64) -> bool {
        p == 2
    }

    pub fn zeros(p: u64, rows: usize, cols: usize) -> FpMatrix {
        let stride = if Self::packed(p) { cols.div_ceil(64) } else { cols };
        FpMatrix { p, rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(p: u64, n: usize) -> FpMatrix {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<FpMatrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        Ok(m)
    }

    /// Matrix whose `j`-th column is `columns[j]` (each of length `rows`).
    pub fn from_columns(p: u64, rows: usize, columns: &[Vec<u64>]) -> FpMatrix {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                if v != 0 {
                    m.set(i, j, v % p);
                }
            }
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
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

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if Self::packed(self.p) {
            (self.data[i * self.stride + j / 64] >> (j % 64)) & 1
        } else {
            self.data[i * self.stride + j]
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        if Self::packed(self.p) {
            let w = &mut self.data[i * self.stride + j / 64];
            if v & 1 == 1 {
                *w |= 1 << (j % 64);
            } else {
                *w &= !(1 << (j % 64));
            }
        } else {
            self.data[i * self.stride + j] = v % self.p;
        }
    }

    pub fn row(&self, i: usize) -> Vec<u64> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn row_slice(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.combine(other, true)
    }

    fn combine(&self, other: &FpMatrix, negate: bool) -> Result<FpMatrix> {
        if self.rows != other.rows || self.cols != other.cols || self.p != other.p {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let mut out = self.clone();
        if Self::packed(self.p) {
            for (a, b) in out.data.iter_mut().zip(&other.data) {
                *a ^= b;
            }
        } else {
            let p = self.p;
            for (a, &b) in out.data.iter_mut().zip(&other.data) {
                let b = if negate { (p - b) % p } else { b };
                *a = (*a + b) % p;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        if Self::packed(self.p) {
            let stride = other.stride;
            for i in 0..self.rows {
                let dst = i * stride;
                for (wi, &word) in self.row_slice(i).iter().enumerate() {
                    let mut w = word;
                    while w != 0 {
                        let k = wi * 64 + w.trailing_zeros() as usize;
                        w &= w - 1;
                        let src = k * stride;
                        for t in 0..stride {
                            out.data[dst + t] ^= other.data[src + t];
                        }
                    }
                }
            }
        } else {
            let p = self.p as u128;
            let mut acc = vec![0u128; other.cols];
            for i in 0..self.rows {
                acc.iter_mut().for_each(|a| *a = 0);
                for k in 0..self.cols {
                    let a = self.data[i * self.stride + k];
                    if a == 0 {
                        continue;
                    }
                    let src = &other.data[k * other.stride..(k + 1) * other.stride];
                    for (slot, &b) in acc.iter_mut().zip(src) {
                        *slot += a as u128 * b as u128;
                    }
                }
                for (j, a) in acc.iter().enumerate() {
                    out.data[i * out.stride + j] = (a % p) as u64;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = vec![0u64; self.rows];
        if Self::packed(self.p) {
            let mut packed = vec![0u64; self.stride];
            for (j, &x) in v.iter().enumerate() {
                if x & 1 == 1 {
                    packed[j / 64] |= 1 << (j % 64);
                }
            }
            for (i, o) in out.iter_mut().enumerate() {
                let parity = self
                    .row_slice(i)
                    .iter()
                    .zip(&packed)
                    .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
                *o = (parity & 1) as u64;
            }
        } else {
            let p = self.p as u128;
            for (i, o) in out.iter_mut().enumerate() {
                let s: u128 = self
                    .row_slice(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u128 * b as u128)
                    .sum();
                *o = (s % p) as u64;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut k: u64) -> Result<FpMatrix> {
        let n = self.require_square()?;
        let mut acc = FpMatrix::identity(self.p, n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.cols || self.p != other.p {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, stride: self.stride, data })
    }

    /// Row-reduces in place to reduced row echelon form; returns pivot columns.
    fn rref_in_place(&mut self, col_limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        let p = self.p;
        for col in 0..col_limit {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(pr, row);
            if Self::packed(p) {
                let (before, rest) = self.data.split_at_mut(row * self.stride);
                let (prow, after) = rest.split_at_mut(self.stride);
                let word = col / 64;
                let bit = 1u64 << (col % 64);
                for r in before.chunks_mut(self.stride).chain(after.chunks_mut(self.stride)) {
                    if r[word] & bit != 0 {
                        for (a, b) in r.iter_mut().zip(prow.iter()) {
                            *a ^= b;
                        }
                    }
                }
            } else {
                let inv = pow_mod(self.get(row, col), p - 2, p);
                let start = row * self.stride;
                for v in &mut self.data[start..start + self.stride] {
                    *v = mul_mod(*v, inv, p);
                }
                let prow: Vec<u64> = self.row_slice(row).to_vec();
                for r in 0..self.rows {
                    if r == row {
                        continue;
                    }
                    let f = self.get(r, col);
                    if f == 0 {
                        continue;
                    }
                    let base = r * self.stride;
                    for (j, &pv) in prow.iter().enumerate() {
                        if pv != 0 {
                            let cur = self.data[base + j];
                            self.data[base + j] = (cur + p - mul_mod(f, pv, p)) % p;
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for t in 0..self.stride {
            self.data.swap(a * self.stride + t, b * self.stride + t);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place(self.cols).len()
    }

    /// Rank and a basis of the right kernel `{z : M z = 0}`.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<u64>>) {
        let mut r = self.clone();
        let pivots = r.rref_in_place(self.cols);
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let p = self.p;
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &c) in pivots.iter().enumerate() {
                let x = r.get(row, free);
                v[c] = (p - x) % p;
            }
            basis.push(v);
        }
        (pivots.len(), basis)
    }

    pub fn kernel(&self) -> Vec<Vec<u64>> {
        self.rank_kernel().1
    }

    /// A basis of the column space, taken from the pivot columns.
    pub fn column_space(&self) -> Vec<Vec<u64>> {
        let pivots = self.clone().rref_in_place(self.cols);
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.pow(n as u64)?.is_zero())
    }

    /// `W_0 = ker M^n`, `W_1 = im M^n` with `n` the dimension.
    pub fn fitting(&self) -> Result<FittingPair> {
        let n = self.require_square()?;
        let stable = self.pow(n as u64)?;
        let (_, w0_basis) = stable.rank_kernel();
        let w1_basis = stable.column_space();
        Ok(FittingPair { w0_basis, w1_basis })
    }

    /// Solves `M z = v`.
    pub fn affine_solve(&self, v: &[u64]) -> Result<AffineSolution> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: v.len() });
        }
        let mut aug = FpMatrix::zeros(self.p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if x != 0 {
                    aug.set(i, j, x);
                }
            }
            aug.set(i, self.cols, v[i] % self.p);
        }
        let pivots = aug.rref_in_place(self.cols + 1);
        let rank = pivots.iter().filter(|&&c| c < self.cols).count();
        let kernel_dim = self.cols - rank;
        if pivots.last() == Some(&self.cols) {
            return Ok(AffineSolution { consistent: false, kernel_dim, particular: None });
        }
        let mut z = vec![0u64; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            z[c] = aug.get(row, self.cols);
        }
        Ok(AffineSolution { consistent: true, kernel_dim, particular: Some(z) })
    }
}

/// Span membership test: is `v` in the span of `basis`?
pub fn in_span(p: u64, basis: &[Vec<u64>], v: &[u64]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|&x| x % p == 0);
    }
    let m = FpMatrix::from_columns(p, v.len(), basis);
    m.affine_solve(v).map(|s| s.consistent).unwrap_or(false)
}

/// Matrix over `F_p` of the `F_p`-linear map `z -> A(z)` on `F_{q^s}`, in the
/// power basis of the extension.
///
/// Built as `Σ_i M_{a_i} Φ^i` by Horner's rule, with `Φ` the Frobenius matrix
/// and `M_c` multiplication by the embedded coefficient.
pub fn matrix_of_map(a: &AdditivePoly, ext: &ExtCtx) -> Result<FpMatrix> {
    if a.field() != ext.base() {
        return Err(Error::ContextMismatch);
    }
    let p = ext.p();
    let dim = ext.dim();
    let coeffs = a.coeffs();
    if coeffs.is_empty() {
        return Ok(FpMatrix::zeros(p, dim, dim));
    }
    let frob = ext.frobenius_matrix();
    let mut t = ext.mul_matrix(&ext.embed(*coeffs.last().unwrap()));
    for c in coeffs.iter().rev().skip(1) {
        t = t.mul(frob)?;
        if !c.is_zero() {
            t = t.add(&ext.mul_matrix(&ext.embed(*c)))?;
        }
    }
    Ok(t)
}

/// Same matrix, column by column, by evaluating `A` at each basis element.
pub fn matrix_of_map_by_eval(a: &AdditivePoly, ext: &ExtCtx) -> Result<FpMatrix> {
    if a.field() != ext.base() {
        return Err(Error::ContextMismatch);
    }
    let cols: Vec<Vec<u64>> = (0..ext.dim())
        .map(|j| a.eval_ext(ext, &ext.basis(j)).map(ExtElem::into_coords))
        .collect::<Result<_>>()?;
    Ok(FpMatrix::from_columns(ext.p(), ext.dim(), &cols))
}

/// `p^k` as a big integer.
pub fn p_power(p: u64, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..k {
        acc *= p;
    }
    acc
}
