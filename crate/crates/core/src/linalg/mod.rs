//! Exact rational linear algebra.
//!
//! Dense matrices over `BigRational` with row reduction, kernel bases and
//! subspace restriction, a fraction-free integer rank (Bareiss), and a
//! modular rank engine over fixed word-size primes.  A nonzero minor mod p
//! is a nonzero minor over Q, so every modular rank is a certified lower
//! bound for the rational rank; see [`modular`] for how the oracle uses this.

pub mod modular;
pub mod sparse;

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Q = BigRational;
pub type Z = BigInt;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

/// Rational n/d.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}

/// Dense matrix over the rationals, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    pub nrows: usize,
    pub ncols: usize,
    data: Vec<Q>,
}

impl std::fmt::Debug for QMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMat {}x{}", self.nrows, self.ncols)?;
        for i in 0..self.nrows.min(12) {
            let row: Vec<String> = (0..self.ncols.min(12)).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl QMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMat { nrows, ncols, data: vec![Q::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend(r);
        }
        QMat { nrows, ncols, data }
    }

    pub fn from_fn(nrows: usize, ncols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Q {
        &mut self.data[i * self.ncols + j]
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.nrows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.ncols, self.nrows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.ncols, other.nrows);
        let mut out = QMat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let v = out.at_mut(i, j);
                        *v += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                let mut s = Q::zero();
                for j in 0..self.ncols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        s += a * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Horizontal stacking of rows from two matrices with equal column count.
    pub fn stack_rows(a: &QMat, b: &QMat) -> QMat {
        assert_eq!(a.ncols, b.ncols);
        let mut data = a.data.clone();
        data.extend_from_slice(&b.data);
        QMat { nrows: a.nrows + b.nrows, ncols: a.ncols, data }
    }
}

/// Result of full Gauss-Jordan reduction.
pub struct Rref {
    pub mat: QMat,
    /// Column index of the pivot in each pivot row.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl QMat {
    /// Reduced row echelon form over Q.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let mut piv = None;
            for i in r..m.nrows {
                if !m.at(i, c).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            if p != r {
                for j in 0..m.ncols {
                    let a = m.at(p, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = {
                let pv = m.at(r, c).clone();
                Q::one() / pv
            };
            for j in c..m.ncols {
                let v = m.at(r, j).clone() * &inv;
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.nrows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.ncols {
                    let v = m.at(i, j).clone() - &f * m.at(r, j);
                    *m.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, pivots }
    }

    /// Basis of the right kernel, returned as columns of a matrix.
    pub fn kernel_basis(&self) -> QMat {
        let rr = self.rref();
        let rank = rr.rank();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !rr.pivots.contains(c)).collect();
        let mut out = QMat::zeros(self.ncols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            *out.at_mut(fc, k) = Q::one();
            for (prow, &pcol) in rr.pivots.iter().enumerate().take(rank) {
                let v = rr.mat.at(prow, fc).clone();
                if !v.is_zero() {
                    *out.at_mut(pcol, k) = -v;
                }
            }
        }
        out
    }

    pub fn rank_exact(&self) -> usize {
        self.rref().rank()
    }

    /// Solve `self * X = rhs` for the unique solution on the column span,
    /// assuming the system is consistent and `self` has full column rank.
    pub fn solve_consistent(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.nrows, rhs.nrows);
        let aug = {
            let mut m = QMat::zeros(self.nrows, self.ncols + rhs.ncols);
            for i in 0..self.nrows {
                for j in 0..self.ncols {
                    *m.at_mut(i, j) = self.at(i, j).clone();
                }
                for j in 0..rhs.ncols {
                    *m.at_mut(i, self.ncols + j) = rhs.at(i, j).clone();
                }
            }
            m
        };
        let rr = aug.rref();
        for (&p, expect) in rr.pivots.iter().zip(0..self.ncols) {
            assert_eq!(p, expect, "coefficient matrix does not have full column rank");
        }
        assert!(
            rr.pivots.len() == self.ncols,
            "coefficient matrix does not have full column rank"
        );
        let mut x = QMat::zeros(self.ncols, rhs.ncols);
        for i in 0..self.ncols {
            for j in 0..rhs.ncols {
                *x.at_mut(i, j) = rr.mat.at(i, self.ncols + j).clone();
            }
        }
        x
    }
}

/// Strip the content of an integer row (divide by the gcd of its entries).
fn strip_content(row: &mut [Z]) {
    let mut g = Z::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = num::integer::gcd(g, v.abs());
        }
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// Exact rank of an integer matrix by fraction-free Gaussian elimination.
pub fn rank_bareiss(mut rows: Vec<Vec<Z>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    for r in rows.iter_mut() {
        strip_content(r);
    }
    let mut rank = 0usize;
    let mut prev = Z::one();
    let mut col = 0usize;
    while rank < rows.len() && col < ncols {
        let mut piv = None;
        for i in rank..rows.len() {
            if !rows[i][col].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(p) = piv else {
            col += 1;
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                // Still rescale so the fraction-free division stays exact.
                for j in col..ncols {
                    let v = &rows[i][j] * &pivot;
                    rows[i][j] = v / &prev;
                }
                continue;
            }
            let f = rows[i][col].clone();
            for j in col..ncols {
                let v = &rows[i][j] * &pivot - &rows[rank][j] * &f;
                rows[i][j] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Clear denominators of a rational row, returning an integer row with the
/// same kernel membership (rows may be scaled independently for rank work).
pub fn integerize_row(row: &[Q]) -> Vec<Z> {
    let mut lcm = Z::one();
    for v in row {
        if !v.is_zero() {
            lcm = num::integer::lcm(lcm, v.denom().clone());
        }
    }
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> QMat {
        QMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    #[test]
    fn rref_rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank_exact(), 2);
        let k = a.kernel_basis();
        assert_eq!(k.ncols, 1);
        let v = k.col(0);
        let img = a.mul_vec(&v);
        assert!(img.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn bareiss_matches_rational_rank() {
        let a = m(&[&[2, 0, 4, 1], &[0, 3, 6, 0], &[2, 3, 10, 1], &[1, 1, 1, 1]]);
        let rows: Vec<Vec<Z>> = (0..a.nrows).map(|i| integerize_row(a.row(i))).collect();
        assert_eq!(rank_bareiss(rows), a.rank_exact());
    }

    #[test]
    fn solve_restriction() {
        // B spans a plane; op maps the plane into itself.
        let b = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let opb = m(&[&[2, 1], &[0, 3], &[2, 4]]);
        let x = b.solve_consistent(&opb);
        assert_eq!(b.mul(&x), opb);
    }
}
