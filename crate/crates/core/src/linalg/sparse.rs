//! Sparse rational matrices, row major.
//!
//! Generator matrices of the representations handled by the oracle are very
//! sparse (a few entries per row even after tensoring), so products, Kronecker
//! products and matrix-vector evaluation are done on sparse rows; dense
//! matrices appear only for subspace bases and small restricted operators.

use super::{QMat, Q};
use num::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub nrows: usize,
    pub ncols: usize,
    /// Each row: sorted (column, value) pairs with nonzero values.
    pub rows: Vec<Vec<(u32, Q)>>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i as u32, Q::from_integer(1.into()))]).collect();
        SparseMat { nrows: n, ncols: n, rows }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, trips: &[(usize, usize, Q)]) -> Self {
        let mut m = Self::zero(nrows, ncols);
        for (i, j, v) in trips {
            if !v.is_zero() {
                m.rows[*i].push((*j as u32, v.clone()));
            }
        }
        for r in m.rows.iter_mut() {
            r.sort_by_key(|(c, _)| *c);
        }
        m.combine_dups();
        m
    }

    fn combine_dups(&mut self) {
        for r in self.rows.iter_mut() {
            let mut out: Vec<(u32, Q)> = Vec::with_capacity(r.len());
            for (c, v) in r.drain(..) {
                if let Some(last) = out.last_mut() {
                    if last.0 == c {
                        last.1 += v;
                        continue;
                    }
                }
                out.push((c, v));
            }
            out.retain(|(_, v)| !v.is_zero());
            *r = out;
        }
    }

    pub fn from_dense(m: &QMat) -> Self {
        let rows = (0..m.nrows)
            .map(|i| {
                (0..m.ncols)
                    .filter(|&j| !m.at(i, j).is_zero())
                    .map(|j| (j as u32, m.at(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMat { nrows: m.nrows, ncols: m.ncols, rows }
    }

    pub fn to_dense(&self) -> QMat {
        let mut out = QMat::zeros(self.nrows, self.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                *out.at_mut(i, *c as usize) = v.clone();
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn scale(&self, s: &Q) -> SparseMat {
        if s.is_zero() {
            return SparseMat::zero(self.nrows, self.ncols);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, v * s)).collect())
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn neg(&self) -> SparseMat {
        self.scale(&-Q::from_integer(1.into()))
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut rows = Vec::with_capacity(self.nrows);
        for (a, b) in self.rows.iter().zip(&other.rows) {
            let mut r: Vec<(u32, Q)> = Vec::with_capacity(a.len() + b.len());
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                    r.push(a[i].clone());
                    i += 1;
                } else if i == a.len() || b[j].0 < a[i].0 {
                    r.push(b[j].clone());
                    j += 1;
                } else {
                    let v = &a[i].1 + &b[j].1;
                    if !v.is_zero() {
                        r.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            rows.push(r);
        }
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.add(&other.neg())
    }

    pub fn transpose(&self) -> SparseMat {
        let mut rows: Vec<Vec<(u32, Q)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                rows[*c as usize].push((i as u32, v.clone()));
            }
        }
        for r in rows.iter_mut() {
            r.sort_by_key(|(c, _)| *c);
        }
        SparseMat { nrows: self.ncols, ncols: self.nrows, rows }
    }

    /// Matrix product, sparse x sparse.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols, other.nrows);
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            let mut acc: Vec<(u32, Q)> = Vec::new();
            for (k, a) in r {
                for (c, b) in &other.rows[*k as usize] {
                    acc.push((*c, a * b));
                }
            }
            acc.sort_by_key(|(c, _)| *c);
            let mut out: Vec<(u32, Q)> = Vec::with_capacity(acc.len());
            for (c, v) in acc {
                if let Some(last) = out.last_mut() {
                    if last.0 == c {
                        last.1 += v;
                        continue;
                    }
                }
                out.push((c, v));
            }
            out.retain(|(_, v)| !v.is_zero());
            rows.push(out);
        }
        SparseMat { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.ncols, v.len());
        self.rows
            .iter()
            .map(|r| {
                let mut s = Q::zero();
                for (c, a) in r {
                    let x = &v[*c as usize];
                    if !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    /// Kronecker product: (A kron B)[(i1*rB + i2), (j1*cB + j2)] = A[i1,j1] B[i2,j2].
    pub fn kron(a: &SparseMat, b: &SparseMat) -> SparseMat {
        let nrows = a.nrows * b.nrows;
        let ncols = a.ncols * b.ncols;
        let mut rows = Vec::with_capacity(nrows);
        for ra in &a.rows {
            for rb in &b.rows {
                let mut r = Vec::with_capacity(ra.len() * rb.len());
                for (ca, va) in ra {
                    for (cb, vb) in rb {
                        r.push((*ca * b.ncols as u32 + *cb, va * vb));
                    }
                }
                r.sort_by_key(|(c, _)| *c);
                rows.push(r);
            }
        }
        SparseMat { nrows, ncols, rows }
    }

    pub fn block_diag(a: &SparseMat, b: &SparseMat) -> SparseMat {
        let mut rows = a.rows.clone();
        for r in &b.rows {
            rows.push(r.iter().map(|(c, v)| (*c + a.ncols as u32, v.clone())).collect());
        }
        SparseMat { nrows: a.nrows + b.nrows, ncols: a.ncols + b.ncols, rows }
    }

    /// A kron I_n.
    pub fn kron_right_id(&self, n: usize) -> SparseMat {
        SparseMat::kron(self, &SparseMat::identity(n))
    }

    /// I_n kron A.
    pub fn kron_left_id(&self, n: usize) -> SparseMat {
        SparseMat::kron(&SparseMat::identity(n), self)
    }

    /// Apply to the columns of a dense matrix: self (nrows x ncols) * B (ncols x k).
    pub fn mul_dense(&self, b: &QMat) -> QMat {
        assert_eq!(self.ncols, b.nrows);
        let mut out = QMat::zeros(self.nrows, b.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                for j in 0..b.ncols {
                    let x = b.at(*c as usize, j);
                    if !x.is_zero() {
                        let o = out.at_mut(i, j);
                        *o += v * x;
                    }
                }
            }
        }
        out
    }

    /// Build from an i64 dense array (convenience for small constant matrices).
    pub fn from_i64(rows: &[&[i64]]) -> SparseMat {
        let nrows = rows.len();
        let ncols = rows[0].len();
        let mut trips = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                if v != 0 {
                    trips.push((i, j, super::qi(v)));
                }
            }
        }
        Self::from_triplets(nrows, ncols, &trips)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn kron_and_mul() {
        let a = SparseMat::from_i64(&[&[0, 1], &[-1, 0]]);
        let i2 = SparseMat::identity(2);
        let k = SparseMat::kron(&a, &i2);
        assert_eq!(k.nrows, 4);
        let sq = k.mul(&k);
        let expect = SparseMat::identity(4).scale(&qi(-1));
        assert_eq!(sq, expect);
    }

    #[test]
    fn add_cancels() {
        let a = SparseMat::from_i64(&[&[2, 0], &[0, 3]]);
        let b = a.neg();
        assert!(a.add(&b).is_zero());
    }
}
