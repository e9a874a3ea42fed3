//! Complex-matrix layer: representations as sparse matrices over the
//! Gaussian rationals, with real/quaternionic structure operators carried as
//! conjugate-linear matrices (`v -> S conj(v)`).
//!
//! Complex functors (tensor product, symmetric and alternating powers,
//! contracted summand removal, duals) act here; [`ComplexRep::realify`] and
//! the real-form extraction hand off to the real layer.

use crate::linalg::sparse::SparseMat;
use crate::linalg::{qi, QMat, Q};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Sparse matrix over Q(i): rows of (column, re, im).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSparse {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<(u32, Q, Q)>>,
}

impl CSparse {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        CSparse { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i as u32, Q::one(), Q::zero())]).collect();
        CSparse { nrows: n, ncols: n, rows }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, trips: &[(usize, usize, Q, Q)]) -> Self {
        let mut map: Vec<BTreeMap<u32, (Q, Q)>> = vec![BTreeMap::new(); nrows];
        for (i, j, re, im) in trips {
            let e = map[*i].entry(*j as u32).or_insert_with(|| (Q::zero(), Q::zero()));
            e.0 += re;
            e.1 += im;
        }
        let rows = map
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .filter(|(_, (re, im))| !re.is_zero() || !im.is_zero())
                    .map(|(c, (re, im))| (c, re, im))
                    .collect()
            })
            .collect();
        CSparse { nrows, ncols, rows }
    }

    /// Columns (image of basis vectors), materialized.
    pub fn columns(&self) -> Vec<Vec<(u32, Q, Q)>> {
        let mut cols: Vec<Vec<(u32, Q, Q)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (c, re, im) in r {
                cols[*c as usize].push((i as u32, re.clone(), im.clone()));
            }
        }
        cols
    }

    pub fn conj(&self) -> CSparse {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, re, im)| (*c, re.clone(), -im.clone())).collect())
            .collect();
        CSparse { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn transpose(&self) -> CSparse {
        let mut rows: Vec<Vec<(u32, Q, Q)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (c, re, im) in r {
                rows[*c as usize].push((i as u32, re.clone(), im.clone()));
            }
        }
        for r in rows.iter_mut() {
            r.sort_by_key(|(c, _, _)| *c);
        }
        CSparse { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn neg(&self) -> CSparse {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, re, im)| (*c, -re.clone(), -im.clone())).collect())
            .collect();
        CSparse { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn mul(&self, other: &CSparse) -> CSparse {
        assert_eq!(self.ncols, other.nrows);
        let mut trips = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (k, are, aim) in r {
                for (c, bre, bim) in &other.rows[*k as usize] {
                    let re = are * bre - aim * bim;
                    let im = are * bim + aim * bre;
                    trips.push((i, *c as usize, re, im));
                }
            }
        }
        CSparse::from_triplets(self.nrows, other.ncols, &trips)
    }

    pub fn add(&self, other: &CSparse) -> CSparse {
        let mut trips = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (c, re, im) in r {
                trips.push((i, *c as usize, re.clone(), im.clone()));
            }
        }
        for (i, r) in other.rows.iter().enumerate() {
            for (c, re, im) in r {
                trips.push((i, *c as usize, re.clone(), im.clone()));
            }
        }
        CSparse::from_triplets(self.nrows, self.ncols, &trips)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn kron(a: &CSparse, b: &CSparse) -> CSparse {
        let mut trips = Vec::new();
        for (ia, ra) in a.rows.iter().enumerate() {
            for (ca, are, aim) in ra {
                for (ib, rb) in b.rows.iter().enumerate() {
                    for (cb, bre, bim) in rb {
                        let i = ia * b.nrows + ib;
                        let j = *ca as usize * b.ncols + *cb as usize;
                        let re = are * bre - aim * bim;
                        let im = are * bim + aim * bre;
                        trips.push((i, j, re, im));
                    }
                }
            }
        }
        CSparse::from_triplets(a.nrows * b.nrows, a.ncols * b.ncols, &trips)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CSparse {
        self.transpose().conj()
    }
}

/// Conjugate-linear structure operator: `v -> S conj(v)` with
/// `S conj(S) = sign * I`; +1 is a real structure, -1 quaternionic.
#[derive(Clone, Debug)]
pub struct CStructure {
    pub mat: CSparse,
    pub sign: i8,
}

#[derive(Clone, Debug)]
pub struct ComplexRep {
    pub dim: usize,
    pub gens: Vec<CSparse>,
    pub structure: Option<CStructure>,
    /// Diagonal invariant hermitian form, when tracked.
    pub form: Option<Vec<Q>>,
    pub label: String,
}

impl ComplexRep {
    /// Standard representation of su(n) on C^n (complex type for n >= 3).
    pub fn su_std(n: usize) -> ComplexRep {
        assert!(n >= 2);
        let mut gens = Vec::new();
        for k in 0..n - 1 {
            gens.push(CSparse::from_triplets(
                n,
                n,
                &[(k, k, Q::zero(), Q::one()), (k + 1, k + 1, Q::zero(), -Q::one())],
            ));
        }
        for p in 0..n {
            for q in p + 1..n {
                gens.push(CSparse::from_triplets(
                    n,
                    n,
                    &[(p, q, Q::one(), Q::zero()), (q, p, -Q::one(), Q::zero())],
                ));
                gens.push(CSparse::from_triplets(
                    n,
                    n,
                    &[(p, q, Q::zero(), Q::one()), (q, p, Q::zero(), Q::one())],
                ));
            }
        }
        let structure = if n == 2 {
            // C^2 is quaternionic: S = [[0,-1],[1,0]], v -> S conj(v).
            Some(CStructure {
                mat: CSparse::from_triplets(
                    2,
                    2,
                    &[(0, 1, -Q::one(), Q::zero()), (1, 0, Q::one(), Q::zero())],
                ),
                sign: -1,
            })
        } else {
            None
        };
        ComplexRep {
            dim: n,
            gens,
            structure,
            form: Some(vec![Q::one(); n]),
            label: format!("su({n})"),
        }
    }

    /// u(n) on C^n: su(n) plus the central i*I.
    pub fn u_std(n: usize) -> ComplexRep {
        if n == 1 {
            return ComplexRep {
                dim: 1,
                gens: vec![CSparse::from_triplets(1, 1, &[(0, 0, Q::zero(), Q::one())])],
                structure: None,
                form: Some(vec![Q::one()]),
                label: "u(1)".into(),
            };
        }
        let mut rep = ComplexRep::su_std(n);
        let mut trips = Vec::new();
        for k in 0..n {
            trips.push((k, k, Q::zero(), Q::one()));
        }
        rep.gens.push(CSparse::from_triplets(n, n, &trips));
        rep.structure = None;
        rep.label = format!("u({n})");
        rep
    }

    /// The circle with charge c on C (generator i*c).
    pub fn u1(charge: i64) -> ComplexRep {
        ComplexRep {
            dim: 1,
            gens: vec![CSparse::from_triplets(1, 1, &[(0, 0, Q::zero(), qi(charge))])],
            structure: None,
            form: Some(vec![Q::one()]),
            label: format!("u1({charge})"),
        }
    }

    /// sp(n) in u(2n): blocks [[A, B], [-conj(B), conj(A)]], A skew-hermitian,
    /// B symmetric.  Quaternionic structure v -> Omega conj(v).
    pub fn sp_std(n: usize) -> ComplexRep {
        let d = 2 * n;
        let mut gens = Vec::new();
        let push_block = |gens: &mut Vec<CSparse>, a: &[(usize, usize, Q, Q)], b: &[(usize, usize, Q, Q)]| {
            // A in the top-left, conj(A) bottom-right; B top-right, -conj(B) bottom-left.
            let mut trips = Vec::new();
            for (i, j, re, im) in a {
                trips.push((*i, *j, re.clone(), im.clone()));
                trips.push((i + n, j + n, re.clone(), -im.clone()));
            }
            for (i, j, re, im) in b {
                trips.push((*i, j + n, re.clone(), im.clone()));
                trips.push((i + n, *j, -re.clone(), im.clone()));
            }
            gens.push(CSparse::from_triplets(d, d, &trips));
        };
        // A-part basis of u(n).
        for k in 0..n {
            push_block(&mut gens, &[(k, k, Q::zero(), Q::one())], &[]);
        }
        for p in 0..n {
            for q in p + 1..n {
                push_block(
                    &mut gens,
                    &[(p, q, Q::one(), Q::zero()), (q, p, -Q::one(), Q::zero())],
                    &[],
                );
                push_block(
                    &mut gens,
                    &[(p, q, Q::zero(), Q::one()), (q, p, Q::zero(), Q::one())],
                    &[],
                );
            }
        }
        // B-part: complex symmetric matrices.
        for p in 0..n {
            push_block(&mut gens, &[], &[(p, p, Q::one(), Q::zero())]);
            push_block(&mut gens, &[], &[(p, p, Q::zero(), Q::one())]);
        }
        for p in 0..n {
            for q in p + 1..n {
                push_block(
                    &mut gens,
                    &[],
                    &[(p, q, Q::one(), Q::zero()), (q, p, Q::one(), Q::zero())],
                );
                push_block(
                    &mut gens,
                    &[],
                    &[(p, q, Q::zero(), Q::one()), (q, p, Q::zero(), Q::one())],
                );
            }
        }
        assert_eq!(gens.len(), 2 * n * n + n);
        let mut omega = Vec::new();
        for k in 0..n {
            omega.push((k, k + n, Q::one(), Q::zero()));
            omega.push((k + n, k, -Q::one(), Q::zero()));
        }
        ComplexRep {
            dim: d,
            gens,
            structure: Some(CStructure { mat: CSparse::from_triplets(d, d, &omega), sign: -1 }),
            form: Some(vec![Q::one(); d]),
            label: format!("sp({n})"),
        }
    }

    /// Complex tensor product; generators act by derivations.
    pub fn tensor(a: &ComplexRep, b: &ComplexRep) -> ComplexRep {
        let mut gens = Vec::new();
        for g in &a.gens {
            gens.push(CSparse::kron(g, &CSparse::identity(b.dim)));
        }
        for g in &b.gens {
            gens.push(CSparse::kron(&CSparse::identity(a.dim), g));
        }
        let structure = match (&a.structure, &b.structure) {
            (Some(sa), Some(sb)) => Some(CStructure {
                mat: CSparse::kron(&sa.mat, &sb.mat),
                sign: sa.sign * sb.sign,
            }),
            _ => None,
        };
        let form = match (&a.form, &b.form) {
            (Some(fa), Some(fb)) => {
                let mut f = Vec::with_capacity(a.dim * b.dim);
                for x in fa {
                    for y in fb {
                        f.push(x * y);
                    }
                }
                Some(f)
            }
            _ => None,
        };
        ComplexRep {
            dim: a.dim * b.dim,
            gens,
            structure,
            form,
            label: format!("tensorC({},{})", a.label, b.label),
        }
    }

    /// Dual representation: X -> -X^T; the structure dualizes accordingly.
    pub fn dual(&self) -> ComplexRep {
        let gens = self.gens.iter().map(|g| g.transpose().neg()).collect();
        ComplexRep {
            dim: self.dim,
            gens,
            structure: None,
            form: self.form.clone(),
            label: format!("dualize({})", self.label),
        }
    }

    /// Realify: C^d as R^(2d) with the complex structure J recorded; the
    /// conjugate-linear structure (if any) becomes a real matrix.
    pub fn realify(&self) -> super::LinearRep {
        let d = self.dim;
        let to_real = |m: &CSparse, conjugating: bool| -> SparseMat {
            // v = (x, y); (X + iY)(x + iy) = (Xx - Yy) + i(Yx + Xy).
            // For a conjugate-linear S: S conj(v): (A + iB)(x - iy).
            let mut trips = Vec::new();
            for (i, r) in m.rows.iter().enumerate() {
                for (c, re, im) in r {
                    let j = *c as usize;
                    if conjugating {
                        trips.push((i, j, re.clone()));
                        trips.push((i, j + d, im.clone()));
                        trips.push((i + d, j, im.clone()));
                        trips.push((i + d, j + d, -re.clone()));
                    } else {
                        trips.push((i, j, re.clone()));
                        trips.push((i, j + d, -im.clone()));
                        trips.push((i + d, j, im.clone()));
                        trips.push((i + d, j + d, re.clone()));
                    }
                }
            }
            SparseMat::from_triplets(2 * d, 2 * d, &trips)
        };
        let gens: Vec<SparseMat> = self.gens.iter().map(|g| to_real(g, false)).collect();
        let mut jt = Vec::new();
        for k in 0..d {
            jt.push((k, k + d, -Q::one()));
            jt.push((k + d, k, Q::one()));
        }
        let cplx = SparseMat::from_triplets(2 * d, 2 * d, &jt.iter().map(|(i, j, v)| (*i, *j, v.clone())).collect::<Vec<_>>());
        let conj = self.structure.as_ref().map(|s| (to_real(&s.mat, true), s.sign));
        let form = match &self.form {
            Some(f) => {
                let mut v = f.clone();
                v.extend(f.clone());
                super::Form::Diagonal(v)
            }
            None => super::Form::Unknown,
        };
        super::LinearRep {
            space_dim: 2 * d,
            gens,
            label: format!("realify({})", self.label),
            form,
            cplx: Some(cplx),
            conj,
            action_kernel_dim: None,
        }
    }

    /// Hermitian-orthogonal complement of the span of `vecs` (columns given
    /// as dense complex vectors in interleaved (re, im) encoding is avoided:
    /// the vectors come in as complex column pairs).
    fn invariant_vectors(&self) -> Vec<Vec<(Q, Q)>> {
        // Solve g v = 0 for all generators: real 2d-dim linear system.
        let d = self.dim;
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for g in &self.gens {
            // complex row equations: sum_j g_ij v_j = 0 -> two real rows
            // in variables (re v, im v).
            for r in g.rows.iter() {
                if r.is_empty() {
                    continue;
                }
                let mut re_row = vec![Q::zero(); 2 * d];
                let mut im_row = vec![Q::zero(); 2 * d];
                for (c, re, im) in r {
                    let j = *c as usize;
                    re_row[j] += re;
                    re_row[j + d] -= im;
                    im_row[j] += im;
                    im_row[j + d] += re;
                }
                rows.push(re_row);
                rows.push(im_row);
            }
        }
        if rows.is_empty() {
            rows.push(vec![Q::zero(); 2 * d]);
        }
        let m = QMat::from_rows(rows);
        let k = m.kernel_basis();
        let mut out: Vec<Vec<(Q, Q)>> = Vec::new();
        for c in 0..k.ncols {
            let col = k.col(c);
            out.push((0..d).map(|i| (col[i].clone(), col[i + d].clone())).collect());
        }
        // The kernel is J-stable; reduce to a complex basis.
        assert_eq!(k.ncols % 2, 0, "complex kernel has even real dimension");
        complex_column_reduce(&out, k.ncols / 2)
    }

    /// Restrict to the hermitian-orthogonal complement of the span of the
    /// given complex vectors (which must span an invariant subspace).
    fn complement_of(&self, vecs: &[Vec<(Q, Q)>], label: String) -> ComplexRep {
        let d = self.dim;
        let f = self.form.as_ref().expect("diagonal form required for complements");
        // <w, v> = sum_i f_i conj(w_i) v_i = 0 : two real equations per w.
        let mut rows = Vec::new();
        for w in vecs {
            let mut re_row = vec![Q::zero(); 2 * d];
            let mut im_row = vec![Q::zero(); 2 * d];
            for i in 0..d {
                let (wre, wim) = &w[i];
                // conj(w_i) v_i = (wre - i wim)(x + i y)
                re_row[i] += &f[i] * wre;
                re_row[i + d] += &f[i] * wim;
                im_row[i] -= &f[i] * wim;
                im_row[i + d] += &f[i] * wre;
            }
            rows.push(re_row);
            rows.push(im_row);
        }
        let kernel = QMat::from_rows(rows).kernel_basis();
        // The kernel is J-stable; extract a complex basis by taking complex
        // column vectors and reducing to a maximal C-independent set.
        let mut cvecs: Vec<Vec<(Q, Q)>> = Vec::new();
        for c in 0..kernel.ncols {
            let col = kernel.col(c);
            cvecs.push((0..d).map(|i| (col[i].clone(), col[i + d].clone())).collect());
        }
        let target = d - vecs.len();
        let basis = complex_column_reduce(&cvecs, target);
        self.restrict_to_basis(&basis, label)
    }

    /// Restrict generators to the complex span of `basis` (invariant).
    fn restrict_to_basis(&self, basis: &[Vec<(Q, Q)>], label: String) -> ComplexRep {
        let d = self.dim;
        let k = basis.len();
        // Dense complex solve: B X = G B, via the real encoding.
        // Build B as 2d x 2k real matrix [Re -Im; Im Re] per column.
        let mut b = QMat::zeros(2 * d, 2 * k);
        for (j, v) in basis.iter().enumerate() {
            for i in 0..d {
                let (re, im) = &v[i];
                *b.at_mut(i, j) = re.clone();
                *b.at_mut(i + d, j) = im.clone();
                *b.at_mut(i, j + k) = -im.clone();
                *b.at_mut(i + d, j + k) = re.clone();
            }
        }
        let restrictor = crate::numslice::Restrictor::new(&b);
        let mut gens = Vec::new();
        for g in &self.gens {
            // Real encoding of g acting on columns of b.
            let gb = apply_complex_to_real_columns(g, &b);
            let x = restrictor.solve(&gb);
            // x is 2k x 2k in the [Re -Im; Im Re] encoding; read the complex matrix.
            let mut trips = Vec::new();
            for i in 0..k {
                for j in 0..k {
                    let re = x.at(i, j).clone();
                    let im = x.at(i + k, j).clone();
                    if !re.is_zero() || !im.is_zero() {
                        trips.push((i, j, re, im));
                    }
                }
            }
            gens.push(CSparse::from_triplets(k, k, &trips));
        }
        // Restricted diagonal form is not tracked (basis not orthogonal in
        // general); downstream realification marks it unknown.
        ComplexRep { dim: k, gens, structure: None, form: None, label }
    }

    /// Remove all trivial summands (the kernel of every generator).
    pub fn minus_trivial(&self) -> ComplexRep {
        let inv = self.invariant_vectors();
        assert!(!inv.is_empty(), "no trivial summand to remove");
        self.complement_of(&inv, format!("traceless({})", self.label))
    }
}

/// Apply a complex sparse matrix to the columns of a real-encoded basis
/// matrix (2d x 2k in [x; y] stacking): returns the real encoding of g*B.
fn apply_complex_to_real_columns(g: &CSparse, b: &QMat) -> QMat {
    let d = g.nrows;
    let k2 = b.ncols;
    let mut out = QMat::zeros(2 * d, k2);
    for (i, r) in g.rows.iter().enumerate() {
        for (c, re, im) in r {
            let j = *c as usize;
            for col in 0..k2 {
                let x = b.at(j, col);
                let y = b.at(j + d, col);
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                // (re + i im)(x + i y) = (re*x - im*y) + i(im*x + re*y)
                let vre = re * x - im * y;
                let vim = im * x + re * y;
                if !vre.is_zero() {
                    let o = out.at_mut(i, col);
                    *o += vre;
                }
                if !vim.is_zero() {
                    let o = out.at_mut(i + d, col);
                    *o += vim;
                }
            }
        }
    }
    out
}

/// Greedy maximal C-linearly-independent subset of complex vectors, stopping
/// at `target` vectors.
fn complex_column_reduce(vecs: &[Vec<(Q, Q)>], target: usize) -> Vec<Vec<(Q, Q)>> {
    let d = vecs.first().map_or(0, |v| v.len());
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut chosen = Vec::new();
    for v in vecs {
        if chosen.len() == target {
            break;
        }
        // Append the real 2d-vector and its J-image; rank grows by 2 iff
        // the vector is C-independent from the chosen ones.
        let mut r1 = vec![Q::zero(); 2 * d];
        let mut r2 = vec![Q::zero(); 2 * d];
        for i in 0..d {
            let (re, im) = &v[i];
            r1[i] = re.clone();
            r1[i + d] = im.clone();
            // i*v = (-im, re)
            r2[i] = -im.clone();
            r2[i + d] = re.clone();
        }
        let mut trial = rows.clone();
        trial.push(r1.clone());
        trial.push(r2.clone());
        let rank = QMat::from_rows(trial.clone()).rank_exact();
        if rank == rows.len() + 2 {
            rows.push(r1);
            rows.push(r2);
            chosen.push(v.clone());
        }
    }
    assert_eq!(chosen.len(), target, "complex basis extraction shortfall");
    chosen
}

/// Index map for weakly increasing exponent tuples of sym^k.
fn sym_basis(dim: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(dim: usize, k: u32, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur[i] += 1;
            rec(dim, k - 1, i, cur, out);
            cur[i] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(dim, k, 0, &mut vec![0; dim], &mut out);
    out
}

/// k-th symmetric power (monomial basis).
pub fn sym_power(rep: &ComplexRep, k: u32) -> ComplexRep {
    let basis = sym_basis(rep.dim, k);
    let index: BTreeMap<Vec<u32>, usize> =
        basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    let mut gens = Vec::new();
    for g in &rep.gens {
        let cols = g.columns();
        let mut trips = Vec::new();
        for (bi, mono) in basis.iter().enumerate() {
            // Derivation: sum over positions with nonzero exponent.
            for (var, &e) in mono.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                for (tgt, re, im) in &cols[var] {
                    let mut m2 = mono.clone();
                    m2[var] -= 1;
                    m2[*tgt as usize] += 1;
                    let j = index[&m2];
                    let c = qi(e as i64);
                    trips.push((j, bi, re * &c, im * &c));
                }
            }
        }
        gens.push(CSparse::from_triplets(basis.len(), basis.len(), &trips));
    }
    let structure = rep.structure.as_ref().map(|s| {
        // Induced conjugate-linear operator on monomials; sign is sign^k.
        let smat = sym_power_of_matrix(&s.mat, &basis, &index);
        CStructure { mat: smat, sign: if k % 2 == 0 { 1 } else { s.sign } }
    });
    let form = rep.form.as_ref().map(|f| {
        basis
            .iter()
            .map(|mono| {
                let mut v = Q::one();
                for (i, &e) in mono.iter().enumerate() {
                    for t in 0..e {
                        let _ = t;
                        v *= &f[i];
                    }
                    v *= qi((1..=e as i64).product::<i64>().max(1));
                }
                v
            })
            .collect()
    });
    ComplexRep {
        dim: basis.len(),
        gens,
        structure,
        form,
        label: format!("symk({},{})", rep.label, k),
    }
}

/// Multiplicative extension of a matrix to sym^k (for structure operators).
fn sym_power_of_matrix(
    m: &CSparse,
    basis: &[Vec<u32>],
    index: &BTreeMap<Vec<u32>, usize>,
) -> CSparse {
    let cols = m.columns();
    let dim = basis.len();
    let mut trips = Vec::new();
    for (bi, mono) in basis.iter().enumerate() {
        // Product over variables of images; expand multilinearly.
        let mut acc: Vec<(Vec<u32>, Q, Q)> = vec![(vec![0; m.nrows], Q::one(), Q::zero())];
        for (var, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                let mut next = Vec::new();
                for (exp, re0, im0) in &acc {
                    for (tgt, re, im) in &cols[var] {
                        let mut e2 = exp.clone();
                        e2[*tgt as usize] += 1;
                        next.push((e2, re0 * re - im0 * im, re0 * im + im0 * re));
                    }
                }
                acc = next;
            }
        }
        for (exp, re, im) in acc {
            let j = index[&exp];
            trips.push((j, bi, re, im));
        }
    }
    CSparse::from_triplets(dim, dim, &trips)
}

fn alt_basis(dim: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Sort with sign; None if a repeat occurs.
fn sort_signed(mut v: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for i in 1..v.len() {
        if v[i] == v[i - 1] {
            return None;
        }
    }
    Some((v, sign))
}

/// k-th alternating power.
pub fn alt_power(rep: &ComplexRep, k: usize) -> ComplexRep {
    let basis = alt_basis(rep.dim, k);
    let index: BTreeMap<Vec<usize>, usize> =
        basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    let mut gens = Vec::new();
    for g in &rep.gens {
        let cols = g.columns();
        let mut trips = Vec::new();
        for (bi, tuple) in basis.iter().enumerate() {
            for (pos, &var) in tuple.iter().enumerate() {
                for (tgt, re, im) in &cols[var] {
                    let mut t2 = tuple.clone();
                    t2[pos] = *tgt as usize;
                    if let Some((sorted, sign)) = sort_signed(t2) {
                        let j = index[&sorted];
                        let s = qi(sign);
                        trips.push((j, bi, re * &s, im * &s));
                    }
                }
            }
        }
        gens.push(CSparse::from_triplets(basis.len(), basis.len(), &trips));
    }
    let structure = rep.structure.as_ref().map(|s| {
        let smat = alt_power_of_matrix(&s.mat, &basis, &index);
        CStructure { mat: smat, sign: if k % 2 == 0 { 1 } else { s.sign } }
    });
    let form = rep.form.as_ref().map(|f| {
        basis
            .iter()
            .map(|tuple| {
                let mut v = Q::one();
                for &i in tuple {
                    v *= &f[i];
                }
                v
            })
            .collect()
    });
    ComplexRep {
        dim: basis.len(),
        gens,
        structure,
        form,
        label: format!("alt{}({})", k, rep.label),
    }
}

fn alt_power_of_matrix(
    m: &CSparse,
    basis: &[Vec<usize>],
    index: &BTreeMap<Vec<usize>, usize>,
) -> CSparse {
    let cols = m.columns();
    let dim = basis.len();
    let mut trips = Vec::new();
    for (bi, tuple) in basis.iter().enumerate() {
        let mut acc: Vec<(Vec<usize>, Q, Q)> = vec![(Vec::new(), Q::one(), Q::zero())];
        for &var in tuple {
            let mut next = Vec::new();
            for (idxs, re0, im0) in &acc {
                for (tgt, re, im) in &cols[var] {
                    let mut i2 = idxs.clone();
                    i2.push(*tgt as usize);
                    next.push((i2, re0 * re - im0 * im, re0 * im + im0 * re));
                }
            }
            acc = next;
        }
        for (idxs, re, im) in acc {
            if let Some((sorted, sign)) = sort_signed(idxs) {
                let j = index[&sorted];
                let s = qi(sign);
                trips.push((j, bi, re * s.clone(), im * s));
            }
        }
    }
    CSparse::from_triplets(dim, dim, &trips)
}

/// Lambda^3 of the sp(n) standard representation with the C^(2n) summand
/// (the wedge with the symplectic form) removed.
pub fn alt3_primitive_sp(n: usize) -> ComplexRep {
    let base = ComplexRep::sp_std(n);
    let l3 = alt_power(&base, 3);
    let l2 = alt_power(&base, 2);
    // The symplectic form is the invariant vector of Lambda^2.
    let omegas = l2.invariant_vectors();
    assert_eq!(omegas.len(), 1, "sp(n) has a unique invariant 2-form");
    let omega = &omegas[0];
    let pairs = alt_basis(2 * n, 2);
    let triples = alt_basis(2 * n, 3);
    let tindex: BTreeMap<Vec<usize>, usize> =
        triples.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    // Subspace to remove: { e_i ^ omega : i }.
    let mut vecs = Vec::new();
    for i in 0..2 * n {
        let mut v = vec![(Q::zero(), Q::zero()); triples.len()];
        for (pi, pair) in pairs.iter().enumerate() {
            let (re, im) = &omega[pi];
            if re.is_zero() && im.is_zero() {
                continue;
            }
            if let Some((sorted, sign)) = sort_signed(vec![i, pair[0], pair[1]]) {
                let j = tindex[&sorted];
                let s = qi(sign);
                v[j].0 += re * &s;
                v[j].1 += im * &s;
            }
        }
        vecs.push(v);
    }
    l3.complement_of(&vecs, format!("traceless(alt3(sp({n})))"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew_hermitian_wrt(g: &CSparse, f: &[Q]) -> bool {
        // g^dagger F + F g = 0 with F diagonal.
        let d = g.nrows;
        let mut ok = true;
        let gd = g.dagger();
        let mut acc = vec![vec![(Q::zero(), Q::zero()); d]; d];
        for (i, r) in gd.rows.iter().enumerate() {
            for (c, re, im) in r {
                let j = *c as usize;
                acc[i][j].0 += re * &f[j];
                acc[i][j].1 += im * &f[j];
            }
        }
        for (i, r) in g.rows.iter().enumerate() {
            for (c, re, im) in r {
                let j = *c as usize;
                acc[i][j].0 += &f[i] * re;
                acc[i][j].1 += &f[i] * im;
            }
        }
        for row in &acc {
            for (re, im) in row {
                if !re.is_zero() || !im.is_zero() {
                    ok = false;
                }
            }
        }
        ok
    }

    #[test]
    fn base_reps_are_skew_hermitian() {
        for rep in [ComplexRep::su_std(3), ComplexRep::u_std(2), ComplexRep::sp_std(2)] {
            let f = rep.form.clone().unwrap();
            for g in &rep.gens {
                assert!(skew_hermitian_wrt(g, &f), "{}", rep.label);
            }
        }
    }

    #[test]
    fn functor_dimensions() {
        let su5 = ComplexRep::su_std(5);
        assert_eq!(sym_power(&su5, 2).dim, 15);
        assert_eq!(alt_power(&su5, 2).dim, 10);
        let su6 = ComplexRep::su_std(6);
        assert_eq!(alt_power(&su6, 3).dim, 20);
        let sp3 = ComplexRep::sp_std(3);
        assert_eq!(alt_power(&sp3, 2).minus_trivial().dim, 14);
        assert_eq!(alt3_primitive_sp(3).dim, 14);
        let su2 = ComplexRep::su_std(2);
        assert_eq!(sym_power(&su2, 5).dim, 6);
    }

    #[test]
    fn functors_stay_skew_hermitian() {
        let su3 = ComplexRep::su_std(3);
        for rep in [sym_power(&su3, 2), alt_power(&su3, 2), sym_power(&ComplexRep::su_std(2), 4)] {
            let f = rep.form.clone().unwrap();
            for g in &rep.gens {
                assert!(skew_hermitian_wrt(g, &f), "{}", rep.label);
            }
        }
    }

    #[test]
    fn structures_square_correctly() {
        // S conj(S) = sign * I.
        let chk = |rep: &ComplexRep| {
            let s = rep.structure.as_ref().unwrap();
            let prod = s.mat.mul(&s.mat.conj());
            let id = CSparse::identity(rep.dim);
            let target = if s.sign == 1 { id } else { id.neg() };
            assert!(prod.add(&target.neg()).is_zero(), "{}", rep.label);
        };
        chk(&ComplexRep::sp_std(2));
        chk(&ComplexRep::su_std(2));
        // sym^5 of the quaternionic C^2 is quaternionic; sym^4 is real.
        let su2 = ComplexRep::su_std(2);
        let s5 = sym_power(&su2, 5);
        assert_eq!(s5.structure.as_ref().unwrap().sign, -1);
        chk(&s5);
        let s4 = sym_power(&su2, 4);
        assert_eq!(s4.structure.as_ref().unwrap().sign, 1);
        chk(&s4);
        // q (x) q = r.
        let t = ComplexRep::tensor(&su2, &ComplexRep::sp_std(2));
        assert_eq!(t.structure.as_ref().unwrap().sign, 1);
        chk(&t);
    }

    #[test]
    fn structures_commute_with_action() {
        // Equivariance: g S = S conj(g) for the structure of sym^k and sp.
        for rep in [ComplexRep::sp_std(2), sym_power(&ComplexRep::su_std(2), 3)] {
            let s = &rep.structure.as_ref().unwrap().mat;
            for g in &rep.gens {
                let lhs = g.mul(s);
                let rhs = s.mul(&g.conj());
                assert!(lhs.add(&rhs.neg()).is_zero(), "{}", rep.label);
            }
        }
    }
}
