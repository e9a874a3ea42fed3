//! Numeric oracle: explicit matrix realizations of Lie algebra actions on
//! real vector spaces, generic isotropy dimensions, and cohomogeneity via
//! `c = dim V - dim G + dim H`.
//!
//! Representations are carried as sparse rational generator matrices.  A
//! representation may record a complex structure `J` (a matrix commuting with
//! every generator, `J^2 = -1`) and a conjugation `K` with `KJ = -JK` and
//! `K^2 = sign`, which realizes a real (`sign = +1`) or quaternionic
//! (`sign = -1`) structure on the underlying complex module.
//!
//! Rank decisions are exact: small evaluation matrices go through
//! fraction-free integer elimination, large ones through the certified
//! two-prime modular engine (see [`crate::linalg::modular`]); per-point
//! isotropy dimensions are certified upper bounds for the generic value and
//! the minimum over seeded trials is reported.

pub mod clifford;
pub mod complexrep;
pub mod expr;

use crate::linalg::sparse::SparseMat;
use crate::linalg::{integerize_row, modular, qi, qr, rank_bareiss, QMat, Q, Z};
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("incompatible operands: {0}")]
    Incompatible(String),
}

/// Invariant inner product of a representation.
#[derive(Clone, Debug)]
pub enum Form {
    Identity,
    Diagonal(Vec<Q>),
    Dense(QMat),
    Unknown,
}

impl Form {
    pub fn kron(a: &Form, b: &Form, da: usize, db: usize) -> Form {
        match (a, b) {
            (Form::Identity, Form::Identity) => Form::Identity,
            (Form::Unknown, _) | (_, Form::Unknown) => Form::Unknown,
            (Form::Diagonal(x), Form::Identity) => {
                let mut v = Vec::with_capacity(da * db);
                for xi in x {
                    for _ in 0..db {
                        v.push(xi.clone());
                    }
                }
                Form::Diagonal(v)
            }
            (Form::Identity, Form::Diagonal(y)) => {
                let mut v = Vec::with_capacity(da * db);
                for _ in 0..da {
                    v.extend(y.iter().cloned());
                }
                Form::Diagonal(v)
            }
            (Form::Diagonal(x), Form::Diagonal(y)) => {
                let mut v = Vec::with_capacity(da * db);
                for xi in x {
                    for yj in y {
                        v.push(xi * yj);
                    }
                }
                Form::Diagonal(v)
            }
            _ => {
                let fa = a.to_dense(da);
                let fb = b.to_dense(db);
                let mut out = QMat::zeros(da * db, da * db);
                for i1 in 0..da {
                    for j1 in 0..da {
                        if fa.at(i1, j1).is_zero() {
                            continue;
                        }
                        for i2 in 0..db {
                            for j2 in 0..db {
                                if fb.at(i2, j2).is_zero() {
                                    continue;
                                }
                                *out.at_mut(i1 * db + i2, j1 * db + j2) =
                                    fa.at(i1, j1) * fb.at(i2, j2);
                            }
                        }
                    }
                }
                Form::Dense(out)
            }
        }
    }

    pub fn to_dense(&self, d: usize) -> QMat {
        match self {
            Form::Identity => QMat::identity(d),
            Form::Diagonal(v) => {
                let mut m = QMat::zeros(d, d);
                for (i, x) in v.iter().enumerate() {
                    *m.at_mut(i, i) = x.clone();
                }
                m
            }
            Form::Dense(m) => m.clone(),
            Form::Unknown => panic!("invariant form not tracked for this representation"),
        }
    }

    pub fn concat(a: &Form, b: &Form, da: usize, db: usize) -> Form {
        match (a, b) {
            (Form::Identity, Form::Identity) => Form::Identity,
            (Form::Unknown, _) | (_, Form::Unknown) => Form::Unknown,
            _ => {
                let fa = a.to_dense(da);
                let fb = b.to_dense(db);
                let mut out = QMat::zeros(da + db, da + db);
                for i in 0..da {
                    for j in 0..da {
                        *out.at_mut(i, j) = fa.at(i, j).clone();
                    }
                }
                for i in 0..db {
                    for j in 0..db {
                        *out.at_mut(da + i, da + j) = fb.at(i, j).clone();
                    }
                }
                Form::Dense(out)
            }
        }
    }
}

/// An explicit real matrix realization of a Lie algebra action.
#[derive(Clone, Debug)]
pub struct LinearRep {
    pub space_dim: usize,
    /// A spanning set of the Lie algebra image (a basis when the action is
    /// almost effective).
    pub gens: Vec<SparseMat>,
    pub label: String,
    pub form: Form,
    /// Complex structure commuting with the action, if tracked.
    pub cplx: Option<SparseMat>,
    /// Conjugation (K, sign): KJ = -JK, K^2 = sign; +1 real, -1 quaternionic.
    pub conj: Option<(SparseMat, i8)>,
    /// Kernel dimension of the generator span, when computed.
    pub action_kernel_dim: Option<usize>,
}

impl LinearRep {
    pub fn group_dim(&self) -> usize {
        self.gens.len()
    }

    /// Rank deficiency of the generator set (dimension of the action kernel),
    /// computed exactly when the support is small enough.
    pub fn action_kernel(&self) -> Option<usize> {
        if let Some(k) = self.action_kernel_dim {
            return Some(k);
        }
        let support: std::collections::BTreeSet<(u32, u32)> = self
            .gens
            .iter()
            .flat_map(|g| {
                g.rows
                    .iter()
                    .enumerate()
                    .flat_map(|(i, r)| r.iter().map(move |(c, _)| (i as u32, *c)))
            })
            .collect();
        if support.len() > 40_000 {
            return None;
        }
        let cols: Vec<(u32, u32)> = support.into_iter().collect();
        let index: std::collections::BTreeMap<(u32, u32), usize> =
            cols.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        let rows: Vec<Vec<Q>> = self
            .gens
            .iter()
            .map(|g| {
                let mut row = vec![Q::zero(); cols.len()];
                for (i, r) in g.rows.iter().enumerate() {
                    for (c, v) in r {
                        row[index[&(i as u32, *c)]] = v.clone();
                    }
                }
                row
            })
            .collect();
        let int_rows: Vec<Vec<Z>> = rows.iter().map(|r| integerize_row(r)).collect();
        Some(self.gens.len() - rank_bareiss(int_rows))
    }

    /// Check `G^T F + F G = 0` for every generator (orthogonality of the
    /// action with respect to the stored form).
    pub fn check_skew(&self) -> bool {
        let f = match &self.form {
            Form::Unknown => return true,
            other => other.to_dense(self.space_dim),
        };
        let fs = SparseMat::from_dense(&f);
        self.gens
            .iter()
            .all(|g| g.transpose().mul(&fs).add(&fs.mul(g)).is_zero())
    }
}

/// Exact solver for restricting operators to an invariant subspace spanned by
/// the columns of a full-column-rank matrix B.
pub struct Restrictor {
    b: QMat,
    pivot_rows: Vec<usize>,
    inv: QMat,
}

impl Restrictor {
    pub fn new(b: &QMat) -> Restrictor {
        let bt = b.transpose();
        let rr = bt.rref();
        assert_eq!(rr.rank(), b.ncols, "subspace basis must have full column rank");
        let pivot_rows = rr.pivots.clone();
        let k = b.ncols;
        let sub = QMat::from_fn(k, k, |i, j| b.at(pivot_rows[i], j).clone());
        let inv = {
            let aug = QMat::from_fn(k, 2 * k, |i, j| {
                if j < k {
                    sub.at(i, j).clone()
                } else if j - k == i {
                    Q::one()
                } else {
                    Q::zero()
                }
            });
            let red = aug.rref();
            assert_eq!(red.rank(), k);
            QMat::from_fn(k, k, |i, j| red.mat.at(i, k + j).clone())
        };
        Restrictor { b: b.clone(), pivot_rows, inv }
    }

    pub fn basis(&self) -> &QMat {
        &self.b
    }

    /// Solve B X = C for X given the full right-hand side C (d x m).
    pub fn solve(&self, c: &QMat) -> QMat {
        let k = self.b.ncols;
        let sub = QMat::from_fn(self.pivot_rows.len(), c.ncols, |i, j| {
            c.at(self.pivot_rows[i], j).clone()
        });
        let x = self.inv.mul(&sub);
        debug_assert_eq!(x.nrows, k);
        x
    }

    /// Restriction of a sparse operator G with G * range(B) inside range(B).
    pub fn restrict(&self, g: &SparseMat) -> SparseMat {
        let k = self.b.ncols;
        let mut gb = QMat::zeros(k, k);
        for (out_i, &ri) in self.pivot_rows.iter().enumerate() {
            for (c, v) in &g.rows[ri] {
                for j in 0..k {
                    let x = self.b.at(*c as usize, j);
                    if !x.is_zero() {
                        let o = gb.at_mut(out_i, j);
                        *o += v * x;
                    }
                }
            }
        }
        SparseMat::from_dense(&self.inv.mul(&gb))
    }
}

// ---------------------------------------------------------------------------
// Constructions (real layer)
// ---------------------------------------------------------------------------

/// so(n) acting on R^n.
pub fn so_vector(n: usize) -> LinearRep {
    let mut gens = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            gens.push(SparseMat::from_triplets(n, n, &[(p, q, qi(1)), (q, p, qi(-1))]));
        }
    }
    LinearRep {
        space_dim: n,
        gens,
        label: format!("so({n})"),
        form: Form::Identity,
        cplx: None,
        conj: None,
        action_kernel_dim: Some(0),
    }
}

/// SO(2) on R^2 with its complex structure (the charge-1 circle).
pub fn so2_circle() -> LinearRep {
    let eps = SparseMat::from_i64(&[&[0, -1], &[1, 0]]);
    LinearRep {
        space_dim: 2,
        gens: vec![eps.clone()],
        label: "so(2)".into(),
        form: Form::Identity,
        cplx: Some(eps),
        conj: Some((SparseMat::from_i64(&[&[1, 0], &[0, -1]]), 1)),
        action_kernel_dim: Some(0),
    }
}

/// The real spinor module of so(n) (see [`clifford::spin_rep`]).
pub fn spin_rep(n: usize) -> Result<LinearRep, BuildError> {
    if !(3..=17).contains(&n) {
        return Err(BuildError::Unsupported(format!("spin({n})")));
    }
    let sr = clifford::spin_rep(n);
    let (cplx, conj) = match sr.structures.len() {
        0 => (None, None),
        1 => (Some(sr.structures[0].clone()), None),
        _ => (Some(sr.structures[0].clone()), Some((sr.structures[1].clone(), -1i8))),
    };
    Ok(LinearRep {
        space_dim: sr.dim,
        gens: sr.gens,
        label: format!("spin({n})"),
        form: Form::Identity,
        cplx,
        conj,
        action_kernel_dim: None,
    })
}

/// G2 acting on R^7.
pub fn g2_rep() -> LinearRep {
    LinearRep {
        space_dim: 7,
        gens: clifford::g2_generators(),
        label: "g2".into(),
        form: Form::Identity,
        cplx: None,
        conj: None,
        action_kernel_dim: Some(0),
    }
}

/// Real tensor product: generators act by derivations on V1 (x) V2.
pub fn tensor_r(a: &LinearRep, b: &LinearRep) -> LinearRep {
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(g.kron_right_id(b.space_dim));
    }
    for g in &b.gens {
        gens.push(g.kron_left_id(a.space_dim));
    }
    // Propagate structures when exactly one factor carries them.
    let (cplx, conj) = match (&a.cplx, &b.cplx) {
        (Some(j), None) => (
            Some(j.kron_right_id(b.space_dim)),
            a.conj
                .as_ref()
                .map(|(k, s)| (k.kron_right_id(b.space_dim), *s)),
        ),
        (None, Some(j)) => (
            Some(j.kron_left_id(a.space_dim)),
            b.conj
                .as_ref()
                .map(|(k, s)| (k.kron_left_id(a.space_dim), *s)),
        ),
        _ => (None, None),
    };
    LinearRep {
        space_dim: a.space_dim * b.space_dim,
        gens,
        label: format!("tensorR({},{})", a.label, b.label),
        form: Form::kron(&a.form, &b.form, a.space_dim, b.space_dim),
        cplx,
        conj,
        action_kernel_dim: None,
    }
}

/// Direct sum of two copies of actions of the same algebra is not meant
/// here: this is the external direct sum with independent summand blocks of
/// the same generator list (used for "two copies" of a representation).
pub fn double(a: &LinearRep) -> LinearRep {
    let gens = a.gens.iter().map(|g| SparseMat::block_diag(g, g)).collect();
    LinearRep {
        space_dim: 2 * a.space_dim,
        gens,
        label: format!("oplus({},{})", a.label, a.label),
        form: Form::concat(&a.form, &a.form, a.space_dim, a.space_dim),
        cplx: None,
        conj: None,
        action_kernel_dim: a.action_kernel_dim,
    }
}

/// Extend by the circle acting through the complex structure with `charge`.
pub fn circle_extend(a: &LinearRep, charge: i64) -> Result<LinearRep, BuildError> {
    let j = a
        .cplx
        .as_ref()
        .ok_or_else(|| BuildError::Incompatible(format!("{} has no complex structure", a.label)))?;
    let mut gens = a.gens.clone();
    gens.push(j.scale(&qi(charge)));
    Ok(LinearRep {
        space_dim: a.space_dim,
        gens,
        label: format!("circle({},{})", a.label, charge),
        form: a.form.clone(),
        cplx: Some(j.clone()),
        conj: None,
        action_kernel_dim: None,
    })
}

fn restrict_rep(
    a: &LinearRep,
    basis: QMat,
    label: String,
    keep: Option<(&SparseMat, Option<(&SparseMat, i8)>)>,
) -> LinearRep {
    let r = Restrictor::new(&basis);
    let gens = a.gens.iter().map(|g| r.restrict(g)).collect();
    let form = match &a.form {
        Form::Unknown => Form::Unknown,
        f => {
            let fd = f.to_dense(a.space_dim);
            Form::Dense(basis.transpose().mul(&fd).mul(&basis))
        }
    };
    let (cplx, conj) = match keep {
        Some((j, k)) => (
            Some(r.restrict(j)),
            k.map(|(kk, s)| (r.restrict(kk), s)),
        ),
        None => (None, None),
    };
    LinearRep {
        space_dim: basis.ncols,
        gens,
        label,
        form,
        cplx,
        conj,
        action_kernel_dim: None,
    }
}

/// Complex tensor product realized inside the real tensor: the -1 eigenspace
/// of J1 (x) J2, with restricted generators.  Both factors must carry J.
pub fn tensor_c_real(a: &LinearRep, b: &LinearRep) -> Result<LinearRep, BuildError> {
    let ja = a.cplx.as_ref().ok_or_else(|| {
        BuildError::Incompatible(format!("{} has no complex structure", a.label))
    })?;
    let jb = b.cplx.as_ref().ok_or_else(|| {
        BuildError::Incompatible(format!("{} has no complex structure", b.label))
    })?;
    let amb = tensor_r(a, b);
    let jj = SparseMat::kron(ja, jb);
    let cond = jj.add(&SparseMat::identity(amb.space_dim));
    let basis = cond.to_dense().kernel_basis();
    let jnew = ja.kron_right_id(b.space_dim);
    let knew = match (&a.conj, &b.conj) {
        (Some((ka, sa)), Some((kb, sb))) => Some((SparseMat::kron(ka, kb), sa * sb)),
        _ => None,
    };
    let label = format!("tensorC({},{})", a.label, b.label);
    let keep = knew.as_ref().map(|(k, s)| (&jnew, Some((k, *s))));
    let mut out = restrict_rep(&amb, basis, label, keep.or(Some((&jnew, None))));
    out.gens.truncate(a.gens.len() + b.gens.len());
    Ok(out)
}

/// Real form: fixed points of the conjugation (sign must be +1).
pub fn realform_real(a: &LinearRep) -> Result<LinearRep, BuildError> {
    let (k, s) = a.conj.as_ref().ok_or_else(|| {
        BuildError::Incompatible(format!("{} has no conjugation", a.label))
    })?;
    if *s != 1 {
        return Err(BuildError::Incompatible(format!(
            "{} carries a quaternionic structure, not a real one",
            a.label
        )));
    }
    let cond = k.sub(&SparseMat::identity(a.space_dim));
    let basis = cond.to_dense().kernel_basis();
    assert_eq!(basis.ncols * 2, a.space_dim, "real form has half dimension");
    Ok(restrict_rep(a, basis, format!("realform({})", a.label), None))
}

/// Quaternionic tensor product H^m (x)_H H^n realized on the space of m x n
/// quaternion matrices, with sp(m) acting by left and sp(n) by right
/// multiplication.
pub fn quaternion_matrix_space(m: usize, n: usize) -> LinearRep {
    use clifford::quat_mul;
    let dim = 4 * m * n;
    let idx = |p: usize, q: usize, u: usize| (p * n + q) * 4 + u;
    // Quaternion-matrix basis of sp(k): entries are (row, col, unit, sign).
    let sp_basis = |k: usize| -> Vec<Vec<(usize, usize, usize, i64)>> {
        let mut basis = Vec::new();
        for p in 0..k {
            for u in 1..=3 {
                basis.push(vec![(p, p, u, 1)]);
            }
        }
        for p in 0..k {
            for s in p + 1..k {
                basis.push(vec![(p, s, 0, 1), (s, p, 0, -1)]);
                for u in 1..=3 {
                    basis.push(vec![(p, s, u, 1), (s, p, u, 1)]);
                }
            }
        }
        basis
    };
    let mut gens = Vec::new();
    // Left action: (gX)_{pq} = sum_s g_{ps} X_{sq}.
    for g in sp_basis(m) {
        let mut trips = Vec::new();
        for (p, s, gu, sign) in g {
            for q in 0..n {
                for xu in 0..4 {
                    let (ms, mu) = quat_mul(gu, xu);
                    trips.push((idx(p, q, mu), idx(s, q, xu), qi(sign * ms)));
                }
            }
        }
        gens.push(SparseMat::from_triplets(dim, dim, &trips));
    }
    // Right action: X -> -X h.
    for h in sp_basis(n) {
        let mut trips = Vec::new();
        for (t, q, hu, sign) in h {
            for p in 0..m {
                for xu in 0..4 {
                    let (ms, mu) = quat_mul(xu, hu);
                    trips.push((idx(p, q, mu), idx(p, t, xu), qi(-sign * ms)));
                }
            }
        }
        gens.push(SparseMat::from_triplets(dim, dim, &trips));
    }
    LinearRep {
        space_dim: dim,
        gens,
        label: format!("tensorH(sp({m}),sp({n}))"),
        form: Form::Identity,
        cplx: None,
        conj: None,
        action_kernel_dim: None,
    }
}

/// Quaternionic tensor of two representations carrying (J, K) with
/// quaternionic signs: the real form of the complex tensor.
pub fn tensor_h_real(a: &LinearRep, b: &LinearRep) -> Result<LinearRep, BuildError> {
    match (&a.conj, &b.conj) {
        (Some((_, -1)), Some((_, -1))) => {}
        _ => {
            return Err(BuildError::Incompatible(format!(
                "tensorH needs quaternionic structures on both {} and {}",
                a.label, b.label
            )))
        }
    }
    let ct = tensor_c_real(a, b)?;
    let mut out = realform_real(&ct)?;
    out.label = format!("tensorH({},{})", a.label, b.label);
    Ok(out)
}

/// Adjoint representation of the algebra spanned by the generators of `rep`.
pub fn adjoint_of(rep: &LinearRep) -> Result<LinearRep, BuildError> {
    let d = rep.space_dim;
    let g = rep.gens.len();
    if d > 40 {
        return Err(BuildError::Unsupported(format!(
            "adjoint of a {d}-dimensional module"
        )));
    }
    // Vectorized generator span.
    let span = QMat::from_fn(d * d, g, |ij, k| {
        let (i, j) = (ij / d, ij % d);
        rep.gens[k]
            .rows[i]
            .iter()
            .find(|(c, _)| *c as usize == j)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Q::zero)
    });
    let restr = Restrictor::new(&span);
    let mut ad = Vec::with_capacity(g);
    for gi in &rep.gens {
        let mut cols = QMat::zeros(d * d, g);
        for (k, gk) in rep.gens.iter().enumerate() {
            let br = gi.mul(gk).sub(&gk.mul(gi));
            for (i, r) in br.rows.iter().enumerate() {
                for (c, v) in r {
                    *cols.at_mut(i * d + *c as usize, k) = v.clone();
                }
            }
        }
        ad.push(SparseMat::from_dense(&restr.solve(&cols)));
    }
    // Invariant form: the negative trace form on the generator basis.
    let gram = QMat::from_fn(g, g, |i, j| {
        let mut tr = Q::zero();
        for (r, row) in rep.gens[i].rows.iter().enumerate() {
            for (c, v) in row {
                if let Some((_, w)) =
                    rep.gens[j].rows[*c as usize].iter().find(|(cc, _)| *cc as usize == r)
                {
                    tr += v * w;
                }
            }
        }
        -tr
    });
    Ok(LinearRep {
        space_dim: g,
        gens: ad,
        label: format!("adjoint({})", rep.label),
        form: Form::Dense(gram),
        cplx: None,
        conj: None,
        action_kernel_dim: None,
    })
}

/// Symmetric square of a real representation (monomial basis).
pub fn sym2_real(a: &LinearRep) -> LinearRep {
    let d = a.space_dim;
    let mut pairs = Vec::new();
    for p in 0..d {
        for q in p..d {
            pairs.push((p, q));
        }
    }
    let index: std::collections::BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut gens = Vec::new();
    for g in &a.gens {
        let cols = g.transpose(); // row i of transpose = column i of g
        let mut trips = Vec::new();
        for (bi, &(p, q)) in pairs.iter().enumerate() {
            for (tgt, v) in &cols.rows[p] {
                let key = sorted2(*tgt as usize, q);
                trips.push((index[&key], bi, v.clone()));
            }
            for (tgt, v) in &cols.rows[q] {
                let key = sorted2(p, *tgt as usize);
                trips.push((index[&key], bi, v.clone()));
            }
        }
        gens.push(SparseMat::from_triplets(pairs.len(), pairs.len(), &trips));
    }
    let form = match &a.form {
        Form::Identity => Form::Diagonal(
            pairs.iter().map(|&(p, q)| if p == q { qi(2) } else { qi(1) }).collect(),
        ),
        _ => Form::Unknown,
    };
    LinearRep {
        space_dim: pairs.len(),
        gens,
        label: format!("sym2({})", a.label),
        form,
        cplx: None,
        conj: None,
        action_kernel_dim: None,
    }
}

fn sorted2(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Alternating square of a real representation.
pub fn alt2_real(a: &LinearRep) -> LinearRep {
    let d = a.space_dim;
    let mut pairs = Vec::new();
    for p in 0..d {
        for q in p + 1..d {
            pairs.push((p, q));
        }
    }
    let index: std::collections::BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut gens = Vec::new();
    for g in &a.gens {
        let cols = g.transpose();
        let mut trips = Vec::new();
        for (bi, &(p, q)) in pairs.iter().enumerate() {
            for (tgt, v) in &cols.rows[p] {
                let t = *tgt as usize;
                if t == q {
                    continue;
                }
                let (key, sign) = if t < q { ((t, q), 1) } else { ((q, t), -1) };
                trips.push((index[&key], bi, v * &qi(sign)));
            }
            for (tgt, v) in &cols.rows[q] {
                let t = *tgt as usize;
                if t == p {
                    continue;
                }
                let (key, sign) = if p < t { ((p, t), 1) } else { ((t, p), -1) };
                trips.push((index[&key], bi, v * &qi(sign)));
            }
        }
        gens.push(SparseMat::from_triplets(pairs.len(), pairs.len(), &trips));
    }
    let form = match &a.form {
        Form::Identity => Form::Identity,
        _ => Form::Unknown,
    };
    LinearRep {
        space_dim: pairs.len(),
        gens,
        label: format!("alt2({})", a.label),
        form,
        cplx: None,
        conj: None,
        action_kernel_dim: None,
    }
}

/// Remove the trivial summand (joint kernel of the generators), restricting
/// to its orthogonal complement.
pub fn traceless_real(a: &LinearRep) -> Result<LinearRep, BuildError> {
    let d = a.space_dim;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for g in &a.gens {
        for r in &g.rows {
            if r.is_empty() {
                continue;
            }
            let mut row = vec![Q::zero(); d];
            for (c, v) in r {
                row[*c as usize] = v.clone();
            }
            rows.push(row);
        }
    }
    let inv = QMat::from_rows(rows).kernel_basis();
    if inv.ncols == 0 {
        return Err(BuildError::Incompatible(format!(
            "{} has no trivial summand",
            a.label
        )));
    }
    // Orthogonal complement with respect to the form.
    let f = a.form.to_dense(d);
    let mut rows = Vec::new();
    for k in 0..inv.ncols {
        let w = inv.col(k);
        rows.push(f.mul_vec(&w));
    }
    let basis = QMat::from_rows(rows).kernel_basis();
    Ok(restrict_rep(a, basis, format!("traceless({})", a.label), None))
}

// ---------------------------------------------------------------------------
// The oracle
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct OracleConfig {
    pub trials: u32,
    pub seed: u64,
    /// Numerators of random coordinates are drawn from [-num_bound, num_bound].
    pub num_bound: i64,
    /// Denominators from [1, den_bound].
    pub den_bound: i64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { trials: 6, seed: 24601, num_bound: 20, den_bound: 4 }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        OracleConfig { seed, ..Default::default() }
    }
}

/// Result of the generic-point scan of a representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericPointReport {
    pub isotropy_dim: usize,
    pub orbit_dim: usize,
    pub cohom: i64,
    pub trials: u32,
    pub seed: u64,
    pub min_attained_at_trial: u32,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn random_point(dim: usize, cfg: &OracleConfig, trial: u32) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(cfg.seed) ^ splitmix64(trial as u64));
    loop {
        let p: Vec<Q> = (0..dim)
            .map(|_| {
                let n = rng.gen_range(-cfg.num_bound..=cfg.num_bound);
                let d = rng.gen_range(1..=cfg.den_bound);
                qr(n, d)
            })
            .collect();
        if p.iter().any(|x| !x.is_zero()) {
            return p;
        }
    }
}

/// Integerized evaluation rows: generator images of the point, row-scaled.
fn evaluation_rows(rep: &LinearRep, point: &[Q]) -> Vec<Vec<Z>> {
    rep.gens
        .iter()
        .map(|g| integerize_row(&g.mul_vec(point)))
        .collect()
}

const EXACT_OPS_LIMIT: u128 = 4_000_000;

fn evaluation_rank(rows: &[Vec<Z>]) -> usize {
    let g = rows.len() as u128;
    let d = rows.first().map_or(0, |r| r.len()) as u128;
    let ops = g * d * g.min(d);
    if ops <= EXACT_OPS_LIMIT {
        rank_bareiss(rows.to_vec())
    } else {
        modular::rank_lower_bound(rows)
    }
}

/// Dimension of the isotropy algebra at `point`: the nullity of the
/// evaluation matrix whose rows are (generator . point).
pub fn isotropy_dim_at(rep: &LinearRep, point: &[Q]) -> usize {
    assert!(point.iter().any(|x| !x.is_zero()), "point must be non-zero");
    let rows = evaluation_rows(rep, point);
    rep.gens.len() - evaluation_rank(&rows)
}

/// Minimum isotropy dimension over seeded pseudo-random rational points,
/// with the cohomogeneity from `c = dim V - dim G + dim H`.
pub fn generic_cohom(rep: &LinearRep, cfg: &OracleConfig) -> GenericPointReport {
    assert!(cfg.trials >= 1);
    let mut best = usize::MAX;
    let mut best_trial = 0;
    for t in 0..cfg.trials {
        let p = random_point(rep.space_dim, cfg, t);
        let h = isotropy_dim_at(rep, &p);
        if h < best {
            best = h;
            best_trial = t;
        }
        if best == 0 {
            break; // already minimal
        }
    }
    let orbit_dim = rep.gens.len() - best;
    GenericPointReport {
        isotropy_dim: best,
        orbit_dim,
        cohom: rep.space_dim as i64 - orbit_dim as i64,
        trials: cfg.trials,
        seed: cfg.seed,
        min_attained_at_trial: best_trial,
    }
}

/// Basis of the isotropy algebra at `point`, as matrices in the generator
/// span (exact; intended for moderate sizes).
pub fn isotropy_algebra_basis(rep: &LinearRep, point: &[Q]) -> Vec<SparseMat> {
    let rows: Vec<Vec<Q>> = rep.gens.iter().map(|g| g.mul_vec(point)).collect();
    let m = QMat::from_rows(rows).transpose(); // d x g
    let kernel = m.kernel_basis(); // coefficient vectors
    let mut out = Vec::new();
    for k in 0..kernel.ncols {
        let mut acc = SparseMat::zero(rep.space_dim, rep.space_dim);
        for (i, g) in rep.gens.iter().enumerate() {
            let c = kernel.at(i, k);
            if !c.is_zero() {
                acc = acc.add(&g.scale(c));
            }
        }
        out.push(acc);
    }
    out
}

/// Basis of the orthogonal complement of the line through `p` (w.r.t. the
/// stored form), as columns.
pub fn point_complement(rep: &LinearRep, point: &[Q]) -> QMat {
    let f = rep.form.to_dense(rep.space_dim);
    let row = f.mul_vec(point);
    QMat::from_rows(vec![row]).kernel_basis()
}

/// The residual representation of a real tensor pair: the isotropy algebras
/// at generic factor points acting on p1-perp (x) p2-perp.
pub fn residual_tensor_rep(
    a: &LinearRep,
    pa: &[Q],
    b: &LinearRep,
    pb: &[Q],
) -> LinearRep {
    let ha = isotropy_algebra_basis(a, pa);
    let hb = isotropy_algebra_basis(b, pb);
    let ba = point_complement(a, pa);
    let bb = point_complement(b, pb);
    let ra = Restrictor::new(&ba);
    let rb = Restrictor::new(&bb);
    let da = ba.ncols;
    let db = bb.ncols;
    let mut gens = Vec::new();
    for h in &ha {
        gens.push(ra.restrict(h).kron_right_id(db));
    }
    for h in &hb {
        gens.push(rb.restrict(h).kron_left_id(da));
    }
    let fa = ba.transpose().mul(&a.form.to_dense(a.space_dim)).mul(&ba);
    let fb = bb.transpose().mul(&b.form.to_dense(b.space_dim)).mul(&bb);
    LinearRep {
        space_dim: da * db,
        gens,
        label: format!("residual({},{})", a.label, b.label),
        form: Form::kron(&Form::Dense(fa), &Form::Dense(fb), da, db),
        cplx: None,
        conj: None,
        action_kernel_dim: None,
    }
}

/// The isotropy algebra at `point` acting on the orthogonal complement of
/// itself inside the generator span (the tangent-space residual of the
/// two-copies formula).
pub fn isotropy_tangent_residual(rep: &LinearRep, point: &[Q]) -> LinearRep {
    let g = rep.gens.len();
    // Coefficient-space data: isotropy coefficients and the trace form.
    let rows: Vec<Vec<Q>> = rep.gens.iter().map(|gm| gm.mul_vec(point)).collect();
    let coeff_kernel = QMat::from_rows(rows).transpose().kernel_basis(); // g x h
    let gram = QMat::from_fn(g, g, |i, j| {
        let mut tr = Q::zero();
        for (r, row) in rep.gens[i].rows.iter().enumerate() {
            for (c, v) in row {
                if let Some((_, w)) =
                    rep.gens[j].rows[*c as usize].iter().find(|(cc, _)| *cc as usize == r)
                {
                    tr += v * w;
                }
            }
        }
        -tr
    });
    // m = orthogonal complement of h in coefficient space.
    let mut rows = Vec::new();
    for k in 0..coeff_kernel.ncols {
        rows.push(gram.mul_vec(&coeff_kernel.col(k)));
    }
    let m_basis = if rows.is_empty() {
        QMat::identity(g)
    } else {
        QMat::from_rows(rows).kernel_basis()
    }; // g x m
    // Realize h and m as matrices, then ad-act and express in the m basis.
    let combo = |coeffs: &[Q]| -> SparseMat {
        let mut acc = SparseMat::zero(rep.space_dim, rep.space_dim);
        for (i, gm) in rep.gens.iter().enumerate() {
            if !coeffs[i].is_zero() {
                acc = acc.add(&gm.scale(&coeffs[i]));
            }
        }
        acc
    };
    let h_mats: Vec<SparseMat> =
        (0..coeff_kernel.ncols).map(|k| combo(&coeff_kernel.col(k))).collect();
    let m_mats: Vec<SparseMat> = (0..m_basis.ncols).map(|k| combo(&m_basis.col(k))).collect();
    // Express brackets in the generator span, then in m coordinates.
    let d = rep.space_dim;
    let span = QMat::from_fn(d * d, g, |ij, k| {
        let (i, j) = (ij / d, ij % d);
        rep.gens[k]
            .rows[i]
            .iter()
            .find(|(c, _)| *c as usize == j)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Q::zero)
    });
    let span_restr = Restrictor::new(&span);
    let m_restr = Restrictor::new(&m_basis);
    let mut gens = Vec::new();
    for hm in &h_mats {
        let mut cols = QMat::zeros(d * d, m_mats.len());
        for (k, mm) in m_mats.iter().enumerate() {
            let br = hm.mul(mm).sub(&mm.mul(hm));
            for (i, r) in br.rows.iter().enumerate() {
                for (c, v) in r {
                    *cols.at_mut(i * d + *c as usize, k) = v.clone();
                }
            }
        }
        let in_gen_coords = span_restr.solve(&cols); // g x m
        let in_m_coords = m_restr.solve(&in_gen_coords);
        gens.push(SparseMat::from_dense(&in_m_coords));
    }
    LinearRep {
        space_dim: m_mats.len(),
        gens,
        label: format!("tangent-residual({})", rep.label),
        form: Form::Unknown,
        cplx: None,
        conj: None,
        action_kernel_dim: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_vec(d: usize, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); d];
        v[i] = Q::one();
        v
    }

    #[test]
    fn so3_isotropy_on_r3() {
        let rep = so_vector(3);
        assert_eq!(isotropy_dim_at(&rep, &unit_vec(3, 0)), 1);
        let basis = isotropy_algebra_basis(&rep, &unit_vec(3, 0));
        assert_eq!(basis.len(), 1);
        let report = generic_cohom(&rep, &OracleConfig::default());
        assert_eq!(report.cohom, 1);
        assert_eq!(report.orbit_dim, 2);
    }

    #[test]
    fn so3_on_r5_has_trivial_generic_isotropy() {
        let rep = traceless_real(&sym2_real(&so_vector(3))).unwrap();
        assert_eq!(rep.space_dim, 5);
        assert!(rep.check_skew());
        let report = generic_cohom(&rep, &OracleConfig::default());
        assert_eq!(report.isotropy_dim, 0);
        assert_eq!(report.cohom, 2);
    }

    #[test]
    fn spin7_stabilizer_of_spinor_is_g2() {
        let rep = spin_rep(7).unwrap();
        assert_eq!(rep.space_dim, 8);
        assert_eq!(rep.gens.len(), 21);
        let h = isotropy_dim_at(&rep, &unit_vec(8, 0));
        assert_eq!(h, 14);
        // Orbit dimension 7: transitive on the sphere.
        let report = generic_cohom(&rep, &OracleConfig::default());
        assert_eq!(report.cohom, 1);
    }

    #[test]
    fn g2_on_r7_is_cohomogeneity_one() {
        let rep = g2_rep();
        let report = generic_cohom(&rep, &OracleConfig::default());
        assert_eq!(report.cohom, 1);
        assert_eq!(report.isotropy_dim, 8);
    }

    #[test]
    fn tensor_so4_g2_counts() {
        let rep = tensor_r(&so_vector(4), &g2_rep());
        assert_eq!(rep.space_dim, 28);
        assert_eq!(rep.gens.len(), 20);
        assert!(rep.check_skew());
    }

    #[test]
    fn adjoint_of_so3_is_standard() {
        let ad = adjoint_of(&so_vector(3)).unwrap();
        assert_eq!(ad.space_dim, 3);
        let report = generic_cohom(&ad, &OracleConfig::default());
        assert_eq!(report.cohom, 1);
    }

    #[test]
    fn quaternion_matrix_space_small() {
        // Sp(1) x Sp(1) on H: the SO(4) vector representation.
        let rep = quaternion_matrix_space(1, 1);
        assert_eq!(rep.space_dim, 4);
        assert_eq!(rep.gens.len(), 6);
        assert!(rep.check_skew());
        let report = generic_cohom(&rep, &OracleConfig::default());
        assert_eq!(report.cohom, 1);
        // Kernel of the action: sp(1)+sp(1) -> so(4) is onto with kernel 2x3-6=0.
        assert_eq!(rep.action_kernel(), Some(0));
    }

    #[test]
    fn double_of_so3_r3() {
        let rep = double(&so_vector(3));
        let report = generic_cohom(&rep, &OracleConfig::default());
        assert_eq!(report.cohom, 3);
    }

    #[test]
    fn circle_times_spin11() {
        let spin11 = spin_rep(11).unwrap();
        assert_eq!(spin11.space_dim, 64);
        assert_eq!(spin11.gens.len(), 55);
        let rep = circle_extend(&spin11, 1).unwrap();
        assert_eq!(rep.gens.len(), 56);
        assert!(rep.check_skew());
    }

    #[test]
    fn realform_of_su2_sym2() {
        // sym^2 of C^2 has a real structure; its real form is R^3 with so(3).
        let s2 = complexrep::sym_power(&complexrep::ComplexRep::su_std(2), 2);
        let realified = s2.realify();
        let rf = realform_real(&realified).unwrap();
        assert_eq!(rf.space_dim, 3);
        assert_eq!(rf.gens.len(), 3);
        let report = generic_cohom(&rf, &OracleConfig::default());
        assert_eq!(report.cohom, 1);
    }

    #[test]
    fn tensor_h_matches_fast_path() {
        // Sp(1) x Sp(1) on H (x)_H H both ways.
        let su2 = complexrep::ComplexRep::su_std(2);
        let a = su2.realify();
        let b = su2.realify();
        let generic = tensor_h_real(&a, &b).unwrap();
        let fast = quaternion_matrix_space(1, 1);
        assert_eq!(generic.space_dim, fast.space_dim);
        let ra = generic_cohom(&generic, &OracleConfig::default());
        let rb = generic_cohom(&fast, &OracleConfig::default());
        assert_eq!(ra.cohom, rb.cohom);
    }
}
