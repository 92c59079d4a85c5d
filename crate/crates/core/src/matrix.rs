//! Dense square matrices over a scalar backend, with the invariant pairing
//! `⟨X,Y⟩ = Im Tr(XY)` and the commutator.
//!
//! Dimensions stay small (N ≤ 64), so storage is dense; the basis matrices
//! of the torus construction are monomial-sparse and the hot paths skip
//! zero entries.  Operations that combine two matrices panic on dimension
//! or backend mismatch — mixing dimensions is a programming error here, not
//! a recoverable condition.

use crate::scalar::Scalar;
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct SquareMatrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Scalar> SquareMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, entries: vec![S::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SquareMatrix { n: self.n, entries: self.entries.iter().map(|a| a.neg()).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        SquareMatrix { n: self.n, entries: self.entries.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b);
                    let cur = out.get(i, j).add(&t);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.n {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// `Tr(XY)` without forming the product.
    pub fn trace_product(&self, rhs: &Self) -> S {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut acc = S::zero();
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(k, i);
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
        }
        acc
    }

    /// `[X, Y] = XY - YX`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// The invariant pairing `Im Tr(XY)`, returned as a real scalar of the
    /// backend.  On the exact backend the value is a real cyclotomic number.
    pub fn pairing(&self, rhs: &Self) -> S {
        self.trace_product(rhs).imag()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|a| a.is_zero())
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.entries.iter().all(|a| a.is_zero_tol(tol))
    }

    /// Largest numerical magnitude over all entries.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|a| a.abs()).fold(0.0, f64::max)
    }

    pub fn eq_tol(&self, rhs: &Self, tol: f64) -> bool {
        self.sub(rhs).is_zero_tol(tol)
    }

    /// `X† = -X` up to `tol`.
    pub fn is_anti_hermitian(&self, tol: f64) -> bool {
        self.dagger().add(self).is_zero_tol(tol)
    }

    /// Upper triangular with a real diagonal, up to `tol`.
    pub fn is_upper_triangular_real_diag(&self, tol: f64) -> bool {
        for i in 0..self.n {
            for j in 0..i {
                if !self.get(i, j).is_zero_tol(tol) {
                    return false;
                }
            }
            if !self.get(i, i).sub(&self.get(i, i).conj()).is_zero_tol(tol) {
                return false;
            }
        }
        true
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn support(&self) -> Vec<(usize, usize, S)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    /// Numerical image, row-major.
    pub fn embed_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).embed()).collect())
            .collect()
    }
}

/// Rank of the row space of `rows` over the backend field, by Gaussian
/// elimination with largest-magnitude pivoting.  `tol` declares when a
/// pivot candidate counts as zero (pass 0.0 on the exact backend).
pub fn row_rank<S: Scalar>(mut rows: Vec<Vec<S>>, tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < ncols {
        let mut best = rank;
        let mut best_abs = rows[rank][col].abs();
        for r in rank + 1..rows.len() {
            let a = rows[r][col].abs();
            if a > best_abs {
                best = r;
                best_abs = a;
            }
        }
        if rows[best][col].is_zero_tol(tol) {
            col += 1;
            continue;
        }
        rows.swap(rank, best);
        let pivot_inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&pivot_inv);
            for c in col..ncols {
                let t = rows[rank][c].mul(&factor);
                rows[r][c] = rows[r][c].sub(&t);
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Dimension over the reals of the span of a family of matrices.  Each
/// matrix is flattened into real and imaginary parts; rank is computed over
/// the backend's real subfield.
pub fn real_span_rank<S: Scalar>(mats: &[SquareMatrix<S>], tol: f64) -> usize {
    let rows: Vec<Vec<S>> = mats
        .iter()
        .map(|m| {
            let mut row = Vec::with_capacity(2 * m.n * m.n);
            for e in &m.entries {
                row.push(e.real());
                row.push(e.imag());
            }
            row
        })
        .collect();
    row_rank(rows, tol)
}

/// Solve `A x = b` for several right-hand sides over the backend field.
/// Returns `None` when `A` is singular (to `tol`).
pub fn solve_many<S: Scalar>(
    a: &[Vec<S>],
    rhs: &[Vec<S>],
    tol: f64,
) -> Option<Vec<Vec<S>>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n));
    let k = rhs.len();
    // Augmented elimination: [A | b_0 … b_{k-1}].
    let mut m: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            for b in rhs {
                row.push(b[i].clone());
            }
            row
        })
        .collect();
    for col in 0..n {
        let mut best = col;
        let mut best_abs = m[col][col].abs();
        for r in col + 1..n {
            let v = m[r][col].abs();
            if v > best_abs {
                best = r;
                best_abs = v;
            }
        }
        if m[best][col].is_zero_tol(tol) {
            return None;
        }
        m.swap(col, best);
        let inv = m[col][col].inv()?;
        for c in col..n + k {
            m[col][c] = m[col][c].mul(&inv);
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..n + k {
                let t = m[col][c].mul(&factor);
                m[r][c] = m[r][c].sub(&t);
            }
        }
    }
    let mut out = vec![vec![S::zero(); n]; k];
    for (bi, sol) in out.iter_mut().enumerate() {
        for i in 0..n {
            sol[i] = m[i][n + bi].clone();
        }
    }
    Some(out)
}
