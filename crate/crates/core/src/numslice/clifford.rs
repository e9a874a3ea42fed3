//! Real Clifford families and spin representations.
//!
//! A family of `n` mutually anticommuting orthogonal skew matrices with
//! square -1 on R^N is a module of the real Clifford algebra Cl(0,n).  The
//! spin representation of so(n) acts on a minimal module of Cl(0,n-1) with
//! generators `f_a f_b` (a < b) and `f_a`, all skew.  Minimal modules are
//! built from quaternion and octonion left multiplications and the period-8
//! extension: given a family on R^M, the eight generators of Cl(0,8) on R^16
//! together with their chirality element W give a family of size n+8 on
//! R^(16M).
//!
//! For the module sizes where the oracle needs a complex or quaternionic
//! structure commuting with the spin action (the realified half-spin modules
//! of Spin(10)..Spin(14)), the structure operators are lifted exactly from
//! the quaternion right multiplications of the base family.

use crate::linalg::sparse::SparseMat;
use crate::linalg::{qi, QMat};

/// Quaternion unit product: units 0..4 = 1, i, j, k.  Returns (sign, unit).
pub fn quat_mul(a: usize, b: usize) -> (i64, usize) {
    const TABLE: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    TABLE[a][b]
}

/// 4x4 matrix of left multiplication by the quaternion unit `u`.
pub fn quat_left(u: usize) -> SparseMat {
    let mut trips = Vec::new();
    for b in 0..4 {
        let (s, r) = quat_mul(u, b);
        trips.push((r, b, qi(s)));
    }
    SparseMat::from_triplets(4, 4, &trips)
}

/// 4x4 matrix of right multiplication by the quaternion unit `u`.
pub fn quat_right(u: usize) -> SparseMat {
    let mut trips = Vec::new();
    for b in 0..4 {
        let (s, r) = quat_mul(b, u);
        trips.push((r, b, qi(s)));
    }
    SparseMat::from_triplets(4, 4, &trips)
}

/// Octonion unit product table via Cayley-Dickson doubling of the
/// quaternions: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
pub fn oct_mul(a: usize, b: usize) -> (i64, usize) {
    // Represent e_a as a pair of quaternion units with a sign.
    // a < 4: (e_a, 0); a >= 4: (0, e_{a-4}).
    let conj = |(s, u): (i64, usize)| if u == 0 { (s, u) } else { (-s, u) };
    let qm = |(s1, u1): (i64, usize), (s2, u2): (i64, usize)| {
        let (s, u) = quat_mul(u1, u2);
        (s * s1 * s2, u)
    };
    let (a1, a2, sa) = if a < 4 { (Some(a), None, 1i64) } else { (None, Some(a - 4), 1i64) };
    let (b1, b2, sb) = if b < 4 { (Some(b), None, 1i64) } else { (None, Some(b - 4), 1i64) };
    let _ = (sa, sb);
    // Result = (x, y) with x = a1*b1 - conj(b2)*a2, y = b2*a1 + a2*conj(b1).
    let mut x: Option<(i64, usize)> = None;
    let mut y: Option<(i64, usize)> = None;
    match (a1, a2, b1, b2) {
        (Some(p), None, Some(q), None) => x = Some(quat_mul(p, q)),
        (Some(p), None, None, Some(q)) => y = Some(qm((1, q), (1, p))),
        (None, Some(p), Some(q), None) => y = Some(qm((1, p), conj((1, q)))),
        (None, Some(p), None, Some(q)) => {
            let t = qm(conj((1, q)), (1, p));
            x = Some((-t.0, t.1));
        }
        _ => unreachable!(),
    }
    match (x, y) {
        (Some((s, u)), None) => (s, u),
        (None, Some((s, u))) => (s, u + 4),
        _ => unreachable!(),
    }
}

/// 8x8 matrix of left multiplication by the octonion unit `e_u`.
pub fn oct_left(u: usize) -> SparseMat {
    let mut trips = Vec::new();
    for b in 0..8 {
        let (s, r) = oct_mul(u, b);
        trips.push((r, b, qi(s)));
    }
    SparseMat::from_triplets(8, 8, &trips)
}

fn sigma() -> SparseMat {
    SparseMat::from_i64(&[&[1, 0], &[0, -1]])
}

fn eps() -> SparseMat {
    SparseMat::from_i64(&[&[0, -1], &[1, 0]])
}

/// A Clifford family: anticommuting orthogonal skew matrices with square -1,
/// together with the exactly liftable part of the commutant.
pub struct CliffordFamily {
    pub dim: usize,
    pub gens: Vec<SparseMat>,
    /// Complex structures commuting with every generator (0, 1 or 2 of them;
    /// when 2 they anticommute, giving a quaternionic structure).
    pub commutant: Vec<SparseMat>,
}

/// The Cl(0,8) family on R^16 together with its chirality element W.
fn cl8_family() -> (Vec<SparseMat>, SparseMat) {
    let s = sigma();
    let mut gens: Vec<SparseMat> = (1..=7).map(|a| SparseMat::kron(&oct_left(a), &s)).collect();
    gens.push(SparseMat::kron(&SparseMat::identity(8), &eps()));
    let mut w = gens[0].clone();
    for g in &gens[1..] {
        w = w.mul(g);
    }
    (gens, w)
}

/// Minimal anticommuting family of size `n` (0 <= n <= 16).
pub fn clifford_family(n: usize) -> CliffordFamily {
    assert!(n <= 16, "clifford family supported for 0..=16");
    if n == 0 {
        return CliffordFamily { dim: 1, gens: vec![], commutant: vec![] };
    }
    if n <= 3 {
        let units: Vec<SparseMat> = (1..=n).map(quat_left).collect();
        let (dim, gens, commutant) = if n == 1 {
            (2, vec![eps()], vec![eps()])
        } else {
            (4, units, vec![quat_right(1), quat_right(2)])
        };
        return CliffordFamily { dim, gens, commutant };
    }
    if n <= 7 {
        let gens: Vec<SparseMat> = (1..=n).map(oct_left).collect();
        // The commutant here is R, C or H but has no exact integer lift;
        // none of the supported constructions require it.
        return CliffordFamily { dim: 8, gens, commutant: vec![] };
    }
    let base = clifford_family(n - 8);
    let (k8, w) = cl8_family();
    let mut gens: Vec<SparseMat> = base.gens.iter().map(|j| SparseMat::kron(j, &w)).collect();
    for k in &k8 {
        gens.push(SparseMat::kron(&SparseMat::identity(base.dim), k));
    }
    let commutant = base
        .commutant
        .iter()
        .map(|c| SparseMat::kron(c, &SparseMat::identity(16)))
        .collect();
    CliffordFamily { dim: base.dim * 16, gens, commutant }
}

/// Spin representation data: the module, the so(n) generators, and the
/// commutant structures (if exactly liftable).
pub struct SpinRep {
    pub ambient: usize,
    pub dim: usize,
    pub gens: Vec<SparseMat>,
    pub structures: Vec<SparseMat>,
}

/// The real spinor module of so(n) as used in the classification tables:
/// the minimal Cl(0,n-1) module.  For odd n this is the spin representation
/// (realified when not of real type); for even n it is a half-spin module
/// (realified when not of real type).
pub fn spin_rep(n: usize) -> SpinRep {
    assert!((3..=17).contains(&n), "spin(n) supported for 3..=17");
    let fam = clifford_family(n - 1);
    let mut gens = Vec::new();
    for a in 0..n - 1 {
        for b in a + 1..n - 1 {
            gens.push(fam.gens[a].mul(&fam.gens[b]));
        }
    }
    for a in 0..n - 1 {
        gens.push(fam.gens[a].clone());
    }
    SpinRep { ambient: n, dim: fam.dim, gens, structures: fam.commutant }
}

/// The G2 stabilizer algebra inside so(7): matrices preserving the octonion
/// associative 3-form, computed exactly from the structure constants.
pub fn g2_generators() -> Vec<SparseMat> {
    // phi(a,b,c) = <e_a e_b, e_c> on imaginary octonion units 1..7.
    let phi = |a: usize, b: usize, c: usize| -> i64 {
        let (s, u) = oct_mul(a, b);
        if u == c {
            s
        } else {
            0
        }
    };
    // so(7) basis E_{ab} - E_{ba} for 0 <= a < b < 7 (indices into 1..7).
    let mut pairs = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            pairs.push((a, b));
        }
    }
    // One equation per triple a<b<c: sum over basis action on the 3-form.
    let mut triples = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                triples.push((a, b, c));
            }
        }
    }
    // X e_a = sum_k X_{ka} e_k; coefficient of x_{(p,q)} in (X e_a, position k):
    // +1 if (p,q)=(k,a) ... encoded through the action of E_{pq}-E_{qp}.
    let act = |p: usize, q: usize, a: usize| -> Vec<(usize, i64)> {
        // (E_pq - E_qp) e_a
        let mut out = Vec::new();
        if q == a {
            out.push((p, 1));
        }
        if p == a {
            out.push((q, -1));
        }
        out
    };
    let mut m = QMat::zeros(triples.len(), pairs.len());
    for (row, &(a, b, c)) in triples.iter().enumerate() {
        for (col, &(p, q)) in pairs.iter().enumerate() {
            let mut coeff = 0i64;
            for (k, s) in act(p, q, a) {
                coeff += s * phi(k + 1, b + 1, c + 1);
            }
            for (k, s) in act(p, q, b) {
                coeff += s * phi(a + 1, k + 1, c + 1);
            }
            for (k, s) in act(p, q, c) {
                coeff += s * phi(a + 1, b + 1, k + 1);
            }
            if coeff != 0 {
                *m.at_mut(row, col) = qi(coeff);
            }
        }
    }
    let kernel = m.kernel_basis();
    assert_eq!(kernel.ncols, 14, "g2 stabilizer has dimension 14");
    let mut gens = Vec::new();
    for k in 0..kernel.ncols {
        let mut trips = Vec::new();
        for (col, &(p, q)) in pairs.iter().enumerate() {
            let v = kernel.at(col, k);
            if !num::Zero::is_zero(v) {
                trips.push((p, q, v.clone()));
                trips.push((q, p, -v.clone()));
            }
        }
        gens.push(SparseMat::from_triplets(7, 7, &trips));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    fn anticommute(a: &SparseMat, b: &SparseMat) -> bool {
        a.mul(b).add(&b.mul(a)).is_zero()
    }

    fn is_skew(a: &SparseMat) -> bool {
        a.add(&a.transpose()).is_zero()
    }

    fn sq_is(a: &SparseMat, v: i64) -> bool {
        a.mul(a).sub(&SparseMat::identity(a.nrows).scale(&qi(v))).is_zero()
    }

    #[test]
    fn octonion_left_multiplications_are_clifford() {
        for a in 1..8 {
            let la = oct_left(a);
            assert!(is_skew(&la), "L{a} skew");
            assert!(sq_is(&la, -1), "L{a}^2 = -1");
            for b in a + 1..8 {
                assert!(anticommute(&la, &oct_left(b)), "L{a}, L{b}");
            }
        }
    }

    #[test]
    fn families_have_minimal_dims_and_anticommute() {
        let expected = [
            (1, 2),
            (2, 4),
            (3, 4),
            (4, 8),
            (5, 8),
            (6, 8),
            (7, 8),
            (8, 16),
            (9, 32),
            (10, 64),
            (11, 64),
            (12, 128),
            (13, 128),
            (14, 128),
            (15, 128),
        ];
        for (n, dim) in expected {
            let fam = clifford_family(n);
            assert_eq!(fam.dim, dim, "module dim for n={n}");
            assert_eq!(fam.gens.len(), n);
            for (i, a) in fam.gens.iter().enumerate() {
                assert!(is_skew(a));
                assert!(sq_is(a, -1));
                for b in fam.gens.iter().skip(i + 1) {
                    assert!(anticommute(a, b));
                }
                for c in &fam.commutant {
                    assert!(a.mul(c).sub(&c.mul(a)).is_zero(), "commutant commutes n={n}");
                }
            }
            if fam.commutant.len() == 2 {
                assert!(sq_is(&fam.commutant[0], -1));
                assert!(sq_is(&fam.commutant[1], -1));
                assert!(anticommute(&fam.commutant[0], &fam.commutant[1]));
            }
        }
    }

    #[test]
    fn spin_modules_match_known_dimensions() {
        let expected = [
            (3, 4),
            (5, 8),
            (7, 8),
            (8, 8),
            (9, 16),
            (10, 32),
            (11, 64),
            (12, 64),
            (14, 128),
            (16, 128),
        ];
        for (n, dim) in expected {
            let sr = spin_rep(n);
            assert_eq!(sr.dim, dim, "spinor module of so({n})");
            assert_eq!(sr.gens.len(), n * (n - 1) / 2);
            for g in &sr.gens {
                assert!(is_skew(g), "spin({n}) generator skew");
            }
        }
        // Spin(11) and Spin(12) carry exact quaternionic structures.
        assert_eq!(spin_rep(11).structures.len(), 2);
        assert_eq!(spin_rep(12).structures.len(), 2);
    }

    #[test]
    fn g2_is_fourteen_dimensional_and_skew() {
        let gens = g2_generators();
        assert_eq!(gens.len(), 14);
        for g in &gens {
            assert!(is_skew(g));
        }
        // Linear independence: vectorize and rank.
        let rows: Vec<Vec<crate::linalg::Z>> = gens
            .iter()
            .map(|g| {
                let d = g.to_dense();
                let mut row = Vec::new();
                for i in 0..7 {
                    for j in 0..7 {
                        row.push(if d.at(i, j).is_zero() {
                            crate::linalg::Z::from(0)
                        } else {
                            d.at(i, j).numer().clone()
                        });
                    }
                }
                row
            })
            .collect();
        assert_eq!(crate::linalg::rank_bareiss(rows), 14);
    }
}
