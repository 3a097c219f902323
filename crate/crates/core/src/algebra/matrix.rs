//! Dense exact matrices over the rationals.
//!
//! Rank and determinant use fraction-free (Bareiss) elimination on the
//! integer matrix obtained by clearing row denominators. Rank first tries a
//! reduction modulo a large prime: a full rank modulo `p` certifies full rank
//! over `Q`, so the exact pass only runs on rank-deficient inputs.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::{common_denominator, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MatrixShape("ragged rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
                .collect(),
        )
        .expect("rectangular input")
    }

    pub fn from_columns(cols: &[Vec<Rat>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows {
            return Err(Error::MatrixShape("hstack row mismatch".into()));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Rows scaled to integers; the product of the scale factors is returned.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let den = common_denominator(self.row(i));
                scale *= &den;
                self.row(i)
                    .iter()
                    .map(|v| (v * Rat::from_integer(den.clone())).to_integer())
                    .collect()
            })
            .collect();
        (rows, scale)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let full = self.rows.min(self.cols);
        if let Some(r) = self.rank_mod_p() {
            if r == full {
                return r;
            }
        }
        let (mut m, _) = self.integer_rows();
        bareiss(&mut m, self.cols).0
    }

    fn rank_mod_p(&self) -> Option<usize> {
        let mut m: Vec<Vec<u64>> = Vec::with_capacity(self.rows);
        let p = BigInt::from(MOD_P);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for v in self.row(i) {
                let num = v.numer().mod_floor(&p).to_u64()?;
                let den = v.denom().mod_floor(&p).to_u64()?;
                if den == 0 {
                    return None;
                }
                row.push(mulmod(num, invmod(den)));
            }
            m.push(row);
        }
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = invmod(m[rank][col]);
            for r in rank + 1..self.rows {
                let f = m[r][col];
                if f == 0 {
                    continue;
                }
                let f = mulmod(f, inv);
                for c in col..self.cols {
                    let sub = mulmod(f, m[rank][c]);
                    m[r][c] = (m[r][c] + MOD_P - sub) % MOD_P;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        Some(rank)
    }

    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::MatrixShape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(Rat::one());
        }
        let (mut m, scale) = self.integer_rows();
        let (rank, sign) = bareiss(&mut m, self.cols);
        if rank < self.rows {
            return Ok(Rat::zero());
        }
        let d = m[self.rows - 1][self.cols - 1].clone() * sign;
        Ok(Rat::new(d, scale))
    }

    /// Reduced row echelon form and pivot columns, by fraction-free
    /// Gauss-Jordan elimination on integer rows.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let (mut m, _) = self.integer_rows();
        let rows = self.rows;
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(piv, r);
            let prow = m[r].clone();
            let pv = prow[c].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                let f = std::mem::take(&mut row[c]);
                for j in 0..self.cols {
                    if j == c {
                        continue;
                    }
                    let mut v = &pv * &row[j];
                    if !f.is_zero() && !prow[j].is_zero() {
                        v -= &f * &prow[j];
                    }
                    if !prev.is_one() && !v.is_zero() {
                        debug_assert!((&v % &prev).is_zero());
                        v /= &prev;
                    }
                    row[j] = v;
                }
            }
            prev = pv;
            pivots.push(c);
            r += 1;
        }
        let mut out = RatMatrix::zeros(rows, self.cols);
        for i in 0..pivots.len() {
            for j in 0..self.cols {
                if !m[i][j].is_zero() {
                    out.set(i, j, Rat::new(m[i][j].clone(), prev.clone()));
                }
            }
        }
        (out, pivots)
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// Solves `M X = B` for every column of `B`; `None` when inconsistent.
    /// Requires full column rank of `M` for a unique answer; returns the
    /// particular solution with free variables set to zero otherwise.
    pub fn solve(&self, rhs: &RatMatrix) -> Result<Option<RatMatrix>> {
        if rhs.rows != self.rows {
            return Err(Error::MatrixShape("solve row mismatch".into()));
        }
        let aug = self.hstack(rhs)?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = RatMatrix::zeros(self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }
}

const MOD_P: u64 = (1u64 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn invmod(a: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut base = a % MOD_P;
    let mut e = MOD_P - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        e >>= 1;
    }
    acc
}

/// In-place Bareiss elimination. Returns the rank and the sign of the row
/// permutation; for a nonsingular square input the last pivot is the
/// determinant up to that sign.
fn bareiss(m: &mut [Vec<BigInt>], cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if piv != rank {
            m.swap(piv, rank);
            sign = -sign;
        }
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col].clone();
        for row in rest.iter_mut() {
            let f = row[col].clone();
            for c in col + 1..cols {
                let v = &pv * &row[c] - &f * &prow[c];
                row[c] = if prev.is_one() { v } else { v / &prev };
            }
            row[col] = BigInt::zero();
        }
        prev = pv;
        rank += 1;
    }
    (rank, sign)
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

pub fn matrix_rank(m: &RatMatrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rat>> {
    m.kernel_basis()
}

pub fn det(m: &RatMatrix) -> Result<Rat> {
    m.det()
}

/// `true` when the vector is zero.
pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Absolute value of the largest entry, used only in diagnostics.
pub fn max_abs(m: &RatMatrix) -> Rat {
    m.data
        .iter()
        .map(|v| v.abs())
        .fold(Rat::zero(), |a, b| if b > a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};

    #[test]
    fn identity_facts() {
        let i3 = RatMatrix::identity(3);
        assert_eq!(i3.rank(), 3);
        assert_eq!(i3.det().unwrap(), rat(1));
        assert!(i3.kernel_basis().is_empty());
    }

    #[test]
    fn ones_row_kernel() {
        let m = RatMatrix::from_i64(&[vec![1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
        assert_eq!(RatMatrix::from_columns(&k, 3).rank(), 2);
    }

    #[test]
    fn determinants() {
        let m = RatMatrix::from_i64(&[vec![0, 2, 1], vec![3, 1, 4], vec![5, 9, 2]]);
        // expanded by hand along the first row
        assert_eq!(m.det().unwrap(), rat(-2 * (6 - 20) + (27 - 5)));
        let mut h = RatMatrix::zeros(2, 2);
        h.set(0, 0, ratio(1, 2));
        h.set(0, 1, ratio(1, 3));
        h.set(1, 0, ratio(1, 3));
        h.set(1, 1, ratio(1, 4));
        assert_eq!(h.det().unwrap(), ratio(1, 8) - ratio(1, 9));
        let sing = RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.det().unwrap(), rat(0));
        assert_eq!(sing.rank(), 1);
        assert!(RatMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn rank_deficient_with_skipped_columns() {
        let m = RatMatrix::from_i64(&[vec![0, 1, 2, 3], vec![0, 2, 4, 7], vec![0, 3, 6, 10]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_basis().len(), 2);
    }

    #[test]
    fn solve_systems() {
        let m = RatMatrix::from_i64(&[vec![1, 1], vec![1, -1], vec![2, 0]]);
        let b = RatMatrix::from_i64(&[vec![3], vec![1], vec![4]]);
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(x.column(0), vec![rat(2), rat(1)]);
        let bad = RatMatrix::from_i64(&[vec![3], vec![1], vec![5]]);
        assert!(m.solve(&bad).unwrap().is_none());
    }
}
