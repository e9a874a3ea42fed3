//! Exact combinatorics of the simple compact Lie algebras.
//!
//! Cartan matrices follow Bourbaki numbering throughout:
//!
//! * `A_n` (n >= 1): path 1 - 2 - ... - n.
//! * `B_n` (n >= 2): path with short root at node n, `a[n][n-1] = -2`.
//! * `C_n` (n >= 2): path with long root at node n, `a[n-1][n] = -2`.
//! * `D_n` (n >= 3): path 1 - ... - (n-2) with both n-1 and n attached to n-2.
//! * `E_n` (n = 6,7,8): path 1 - 3 - 4 - 5 - 6 [- 7 [- 8]], node 2 attached to 4.
//! * `F_4`: 1 - 2 = 3 - 4 with `a[3][2] = -2` (nodes 3, 4 short).
//! * `G_2`: node 1 short, `a[1][2] = -3`.
//!
//! The convention for the Cartan matrix is `a[i][j] = <alpha_j, alpha_i^vee>`,
//! so weights pair with the coroot of row `i` through row `i`.
//!
//! Weight coordinates are always taken in the fundamental-weight basis.
//! Positive roots of the dual root system (Cartan matrix transposed) give the
//! positive coroots as integer vectors `m` with `<w, alpha^vee> = sum w_i m_i`.

pub mod freudenthal;

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("rank {rank} is not admissible for family {family:?}")]
    BadRank { family: Family, rank: usize },
    #[error("weight has {got} coefficients, rank is {rank}")]
    WeightLength { got: usize, rank: usize },
}

/// A simple compact Lie group type (family plus rank).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct SimpleGroupType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for SimpleGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl SimpleGroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self, LieError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleGroupType { family, rank })
        } else {
            Err(LieError::BadRank { family, rank })
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).unwrap()
    }
    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).unwrap()
    }
    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).unwrap()
    }
    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).unwrap()
    }
    pub fn e(rank: usize) -> Self {
        Self::new(Family::E, rank).unwrap()
    }
    pub fn f4() -> Self {
        Self::new(Family::F, 4).unwrap()
    }
    pub fn g2() -> Self {
        Self::new(Family::G, 2).unwrap()
    }

    /// Cartan matrix, `a[i][j] = <alpha_j, alpha_i^vee>`, 0-indexed nodes.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
                a[n - 1][n - 2] = -2;
            }
            Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
                a[n - 2][n - 1] = -2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                // Bourbaki nodes 1..n -> 0-indexed.
                link(0, 2);
                link(2, 3);
                link(3, 4);
                link(4, 5);
                if n >= 7 {
                    link(5, 6);
                }
                if n == 8 {
                    link(6, 7);
                }
                link(1, 3);
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
                a[2][1] = -2;
            }
            Family::G => {
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        a
    }

    /// Symmetrizers `d_i` with `d_i a_ij = d_j a_ji` (short roots 1).
    pub fn symmetrizers(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }

    /// Dimension of the compact simple group of this type.
    pub fn group_dim(&self) -> i64 {
        let n = self.rank as i64;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match self.rank {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// The permutation p with `-w0(omega_i) = omega_{p(i)}` (0-indexed).
    pub fn w0_permutation(&self) -> Vec<usize> {
        let n = self.rank;
        let mut p: Vec<usize> = (0..n).collect();
        match self.family {
            Family::A => {
                for (i, q) in p.iter_mut().enumerate() {
                    *q = n - 1 - i;
                }
            }
            Family::D => {
                if n % 2 == 1 {
                    p.swap(n - 2, n - 1);
                }
            }
            Family::E => {
                if n == 6 {
                    p.swap(0, 5);
                    p.swap(2, 4);
                }
            }
            _ => {}
        }
        p
    }

    /// Generators of the Dynkin diagram automorphism group as permutations of
    /// the nodes (0-indexed).  Used to canonicalize weights up to outer
    /// automorphisms when comparing table rows.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let id: Vec<usize> = (0..n).collect();
        match self.family {
            Family::A if n >= 2 => {
                let mut p = id;
                p.reverse();
                vec![p]
            }
            Family::D if n == 4 => {
                // Triality: S3 on nodes {0, 2, 3}.
                let mut s = (0..n).collect::<Vec<_>>();
                s.swap(2, 3);
                let mut t = (0..n).collect::<Vec<_>>();
                t.swap(0, 2);
                vec![s, t]
            }
            Family::D if n >= 4 => {
                let mut p = id;
                p.swap(n - 2, n - 1);
                vec![p]
            }
            Family::D => {
                // D3 = A3 handled by the repmodel normalization; the node swap
                // is still a diagram automorphism.
                let mut p = id;
                p.swap(1, 2);
                vec![p]
            }
            Family::E if n == 6 => {
                let mut p = id;
                p.swap(0, 5);
                p.swap(2, 4);
                vec![p]
            }
            _ => vec![],
        }
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(*self)
    }
}

/// A dominant weight in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct HighestWeight(pub Vec<u32>);

impl HighestWeight {
    pub fn zero(rank: usize) -> Self {
        HighestWeight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        HighestWeight(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coeff_sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn check(&self, t: &SimpleGroupType) -> Result<(), LieError> {
        if self.0.len() != t.rank {
            Err(LieError::WeightLength { got: self.0.len(), rank: t.rank })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Frobenius-Schur type of a complex irreducible representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FSType {
    Real,
    Complex,
    Quaternionic,
}

impl fmt::Display for FSType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FSType::Real => write!(f, "real"),
            FSType::Complex => write!(f, "complex"),
            FSType::Quaternionic => write!(f, "quaternionic"),
        }
    }
}

/// Cartan data of a simple type: positive coroots, rho, and the -w0 action.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub simple_type: SimpleGroupType,
    pub cartan: Vec<Vec<i64>>,
    /// Positive coroots as integer pairing vectors: `<w, beta^vee> = w . m`.
    pub positive_coroots: Vec<Vec<i64>>,
    /// Coordinates of 2 rho^vee (sum of positive coroots).
    pub two_rho_coroot: Vec<i64>,
    pub w0_permutation: Vec<usize>,
}

/// All roots of the root system with Cartan matrix `cartan`, in simple-root
/// coordinates, by closure under the simple reflections.
pub fn enumerate_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(m) = queue.pop() {
        for i in 0..n {
            // s_i(m): only coordinate i changes, by -<alpha, alpha_i^vee>.
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * m[j]).sum();
            let mut m2 = m.clone();
            m2[i] -= pairing;
            if seen.insert(m2.clone()) {
                queue.push(m2);
            }
        }
    }
    seen.into_iter().collect()
}

impl RootSystem {
    pub fn new(t: SimpleGroupType) -> Self {
        let cartan = t.cartan();
        // Coroots are the roots of the dual system (transposed Cartan matrix).
        let n = t.rank;
        let mut dual = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                dual[i][j] = cartan[j][i];
            }
        }
        let all = enumerate_roots(&dual);
        let positive_coroots: Vec<Vec<i64>> =
            all.into_iter().filter(|m| m.iter().all(|&c| c >= 0)).collect();
        let mut two_rho_coroot = vec![0i64; n];
        for m in &positive_coroots {
            for i in 0..n {
                two_rho_coroot[i] += m[i];
            }
        }
        RootSystem {
            simple_type: t,
            cartan,
            positive_coroots,
            two_rho_coroot,
            w0_permutation: t.w0_permutation(),
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_coroots.len()
    }
}

/// Dimension of the compact simple group of type `t`.
pub fn group_dim(t: &SimpleGroupType) -> i64 {
    t.group_dim()
}

/// Complex degree of the irreducible with highest weight `w` (Weyl formula).
pub fn weyl_dim(t: &SimpleGroupType, w: &HighestWeight) -> u128 {
    w.check(t).expect("weight valid for type");
    let rs = root_system_cached(t);
    weyl_dim_rs(&rs, &w.0)
}

fn weyl_dim_rs(rs: &RootSystem, coeffs: &[u32]) -> u128 {
    use num::{BigUint, One};
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for m in &rs.positive_coroots {
        let mut a = 0u64;
        let mut b = 0u64;
        for (i, &mi) in m.iter().enumerate() {
            a += (coeffs[i] as u64 + 1) * mi as u64;
            b += mi as u64;
        }
        num *= BigUint::from(a);
        den *= BigUint::from(b);
    }
    let q = &num / &den;
    debug_assert_eq!(&q * &den, num, "Weyl dimension must be an integer");
    let digits = q.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as u128,
        2 => digits[0] as u128 | ((digits[1] as u128) << 64),
        _ => panic!("degree overflows u128"),
    }
}

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn root_system_cached(t: &SimpleGroupType) -> std::sync::Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleGroupType, std::sync::Arc<RootSystem>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(*t)
        .or_insert_with(|| std::sync::Arc::new(RootSystem::new(*t)))
        .clone()
}

/// Highest weight of the dual representation: applies the -w0 permutation.
pub fn dual_weight(t: &SimpleGroupType, w: &HighestWeight) -> HighestWeight {
    w.check(t).expect("weight valid for type");
    let p = t.w0_permutation();
    let mut out = vec![0u32; t.rank];
    for (i, &pi) in p.iter().enumerate() {
        out[pi] = w.0[i];
    }
    HighestWeight(out)
}

/// Frobenius-Schur type: complex iff not self-dual; otherwise the indicator
/// is `(-1)^{<w, 2 rho^vee>}` (+1 real, -1 quaternionic).
pub fn fs_type(t: &SimpleGroupType, w: &HighestWeight) -> FSType {
    if dual_weight(t, w) != *w {
        return FSType::Complex;
    }
    let rs = root_system_cached(t);
    let pairing: i64 = rs
        .two_rho_coroot
        .iter()
        .zip(&w.0)
        .map(|(&s, &c)| s * c as i64)
        .sum();
    if pairing % 2 == 0 {
        FSType::Real
    } else {
        FSType::Quaternionic
    }
}

/// Real degree of the underlying real irreducible: the complex degree for
/// real type, twice the complex degree otherwise.
pub fn real_degree(t: &SimpleGroupType, w: &HighestWeight) -> u128 {
    let d = weyl_dim(t, w);
    match fs_type(t, w) {
        FSType::Real => d,
        _ => 2 * d,
    }
}

/// All dominant weights with complex degree at most `max_degree`, in
/// lexicographic order on the coefficient vectors.  Pruned by Onishchik
/// monotonicity: once a weight exceeds the bound no coefficient-wise larger
/// weight is visited.
pub fn enumerate_irreps(
    t: &SimpleGroupType,
    max_degree: u128,
) -> Vec<(HighestWeight, u128, FSType)> {
    assert!(max_degree >= 1);
    let rs = root_system_cached(t);
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; t.rank];
    fn rec(
        rs: &RootSystem,
        t: &SimpleGroupType,
        coeffs: &mut Vec<u32>,
        pos: usize,
        bound: u128,
        out: &mut Vec<(HighestWeight, u128, FSType)>,
    ) {
        for v in 0.. {
            coeffs[pos] = v;
            let d = weyl_dim_rs(rs, coeffs);
            if d > bound {
                break;
            }
            if pos + 1 == coeffs.len() {
                let w = HighestWeight(coeffs.clone());
                let fs = fs_type(t, &w);
                out.push((w, d, fs));
            } else {
                rec(rs, t, coeffs, pos + 1, bound, out);
            }
        }
        coeffs[pos] = 0;
    }
    rec(&rs, t, &mut coeffs, 0, max_degree, &mut out);
    out
}

/// Weight of the adjoint representation (highest root) of `t`.
pub fn adjoint_weight(t: &SimpleGroupType) -> HighestWeight {
    let n = t.rank;
    let mut v = vec![0u32; n];
    match t.family {
        Family::A => {
            if n == 1 {
                v[0] = 2;
            } else {
                v[0] = 1;
                v[n - 1] = 1;
            }
        }
        Family::B => {
            if n == 2 {
                v[0] = 0;
                v[1] = 2;
            } else {
                v[1] = 1;
            }
        }
        Family::C => v[0] = 2,
        Family::D => v[1] = 1,
        Family::E => match n {
            6 => v[1] = 1,
            7 => v[0] = 1,
            _ => v[7] = 1,
        },
        Family::F => v[0] = 1,
        Family::G => v[1] = 1,
    }
    HighestWeight(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(v: &[u32]) -> HighestWeight {
        HighestWeight(v.to_vec())
    }

    #[test]
    fn group_dims_match_root_counts() {
        let types = [
            SimpleGroupType::a(1),
            SimpleGroupType::a(5),
            SimpleGroupType::b(2),
            SimpleGroupType::b(5),
            SimpleGroupType::c(3),
            SimpleGroupType::d(4),
            SimpleGroupType::d(7),
            SimpleGroupType::e(6),
            SimpleGroupType::e(7),
            SimpleGroupType::e(8),
            SimpleGroupType::f4(),
            SimpleGroupType::g2(),
        ];
        for t in types {
            let rs = t.root_system();
            assert_eq!(
                t.group_dim(),
                t.rank as i64 + 2 * rs.num_positive_roots() as i64,
                "dim mismatch for {t}"
            );
        }
        assert_eq!(SimpleGroupType::a(1).group_dim(), 3);
        assert_eq!(SimpleGroupType::b(5).group_dim(), 55);
        assert_eq!(SimpleGroupType::e(7).group_dim(), 133);
    }

    #[test]
    fn fundamental_degrees_pin_down_conventions() {
        // Vector, spin and adjoint degrees identify the Bourbaki labels.
        assert_eq!(weyl_dim(&SimpleGroupType::a(5), &hw(&[1, 0, 0, 0, 0])), 6);
        assert_eq!(weyl_dim(&SimpleGroupType::a(5), &hw(&[0, 0, 1, 0, 0])), 20);
        assert_eq!(weyl_dim(&SimpleGroupType::b(3), &hw(&[1, 0, 0])), 7);
        assert_eq!(weyl_dim(&SimpleGroupType::b(3), &hw(&[0, 0, 1])), 8);
        assert_eq!(weyl_dim(&SimpleGroupType::b(5), &hw(&[0, 0, 0, 0, 1])), 32);
        assert_eq!(weyl_dim(&SimpleGroupType::c(3), &hw(&[1, 0, 0])), 6);
        assert_eq!(weyl_dim(&SimpleGroupType::c(3), &hw(&[0, 1, 0])), 14);
        assert_eq!(weyl_dim(&SimpleGroupType::c(3), &hw(&[0, 0, 1])), 14);
        assert_eq!(weyl_dim(&SimpleGroupType::d(6), &hw(&[0, 0, 0, 0, 0, 1])), 32);
        assert_eq!(weyl_dim(&SimpleGroupType::d(6), &hw(&[1, 0, 0, 0, 0, 0])), 12);
        assert_eq!(weyl_dim(&SimpleGroupType::e(6), &hw(&[1, 0, 0, 0, 0, 0])), 27);
        assert_eq!(weyl_dim(&SimpleGroupType::e(7), &hw(&[0, 0, 0, 0, 0, 0, 1])), 56);
        assert_eq!(weyl_dim(&SimpleGroupType::f4(), &hw(&[0, 0, 0, 1])), 26);
        assert_eq!(weyl_dim(&SimpleGroupType::g2(), &hw(&[1, 0])), 7);
        assert_eq!(weyl_dim(&SimpleGroupType::g2(), &hw(&[0, 1])), 14);
        // A1 degree n+1.
        assert_eq!(weyl_dim(&SimpleGroupType::a(1), &hw(&[5])), 6);
        // Adjoint degrees equal group dimensions.
        for t in [
            SimpleGroupType::a(3),
            SimpleGroupType::b(4),
            SimpleGroupType::c(3),
            SimpleGroupType::d(5),
            SimpleGroupType::e(6),
            SimpleGroupType::e(7),
            SimpleGroupType::e(8),
            SimpleGroupType::f4(),
            SimpleGroupType::g2(),
        ] {
            assert_eq!(
                weyl_dim(&t, &adjoint_weight(&t)),
                t.group_dim() as u128,
                "adjoint degree for {t}"
            );
        }
    }

    #[test]
    fn duality_table() {
        let b3 = SimpleGroupType::b(3);
        for w in [hw(&[1, 0, 0]), hw(&[0, 1, 2]), hw(&[3, 0, 1])] {
            assert_eq!(dual_weight(&b3, &w), w);
        }
        let a5 = SimpleGroupType::a(5);
        assert_eq!(dual_weight(&a5, &hw(&[1, 0, 0, 0, 0])), hw(&[0, 0, 0, 0, 1]));
        let d7 = SimpleGroupType::d(7);
        assert_eq!(
            dual_weight(&d7, &HighestWeight::fundamental(7, 6)),
            HighestWeight::fundamental(7, 5)
        );
        let d6 = SimpleGroupType::d(6);
        assert_eq!(
            dual_weight(&d6, &HighestWeight::fundamental(6, 5)),
            HighestWeight::fundamental(6, 5)
        );
        let e6 = SimpleGroupType::e(6);
        assert_eq!(
            dual_weight(&e6, &HighestWeight::fundamental(6, 0)),
            HighestWeight::fundamental(6, 5)
        );
    }

    #[test]
    fn fs_types_classical_table() {
        // SU(2): parity of the weight.
        assert_eq!(fs_type(&SimpleGroupType::a(1), &hw(&[5])), FSType::Quaternionic);
        assert_eq!(fs_type(&SimpleGroupType::a(1), &hw(&[4])), FSType::Real);
        // SU(3) vector is complex.
        assert_eq!(fs_type(&SimpleGroupType::a(2), &hw(&[1, 0])), FSType::Complex);
        // Spin representations: period 8 in the ambient dimension.
        assert_eq!(fs_type(&SimpleGroupType::b(2), &hw(&[0, 1])), FSType::Quaternionic); // Spin(5)
        assert_eq!(fs_type(&SimpleGroupType::b(3), &hw(&[0, 0, 1])), FSType::Real); // Spin(7)
        assert_eq!(fs_type(&SimpleGroupType::b(4), &hw(&[0, 0, 0, 1])), FSType::Real); // Spin(9)
        assert_eq!(fs_type(&SimpleGroupType::b(5), &hw(&[0, 0, 0, 0, 1])), FSType::Quaternionic); // Spin(11)
        assert_eq!(fs_type(&SimpleGroupType::d(4), &hw(&[0, 0, 0, 1])), FSType::Real); // Spin(8)
        assert_eq!(fs_type(&SimpleGroupType::d(5), &hw(&[0, 0, 0, 0, 1])), FSType::Complex); // Spin(10)
        assert_eq!(fs_type(&SimpleGroupType::d(6), &hw(&[0, 0, 0, 0, 0, 1])), FSType::Quaternionic); // Spin(12)
        assert_eq!(fs_type(&SimpleGroupType::d(7), &hw(&[0, 0, 0, 0, 0, 0, 1])), FSType::Complex); // Spin(14)
        // Sp(n) fundamentals alternate.
        assert_eq!(fs_type(&SimpleGroupType::c(3), &hw(&[1, 0, 0])), FSType::Quaternionic);
        assert_eq!(fs_type(&SimpleGroupType::c(3), &hw(&[0, 1, 0])), FSType::Real);
        assert_eq!(fs_type(&SimpleGroupType::c(3), &hw(&[0, 0, 1])), FSType::Quaternionic);
        // E7 56 is quaternionic.
        assert_eq!(
            fs_type(&SimpleGroupType::e(7), &HighestWeight::fundamental(7, 6)),
            FSType::Quaternionic
        );
    }

    #[test]
    fn enumerate_small() {
        let a1 = SimpleGroupType::a(1);
        let got = enumerate_irreps(&a1, 4);
        let weights: Vec<Vec<u32>> = got.iter().map(|(w, _, _)| w.0.clone()).collect();
        assert_eq!(weights, vec![vec![0], vec![1], vec![2], vec![3]]);

        let g2 = SimpleGroupType::g2();
        let got = enumerate_irreps(&g2, 14);
        let dims: Vec<u128> = got.iter().map(|(_, d, _)| *d).collect();
        assert_eq!(dims, vec![1, 14, 7]);

        let b5 = SimpleGroupType::b(5);
        let got = enumerate_irreps(&b5, 32);
        assert!(got
            .iter()
            .any(|(w, d, fs)| *d == 32 && *fs == FSType::Quaternionic && w.0 == [0, 0, 0, 0, 1]));
    }

    #[test]
    fn enumeration_is_downward_closed() {
        // Any dominant weight with degree <= bound appears.
        let t = SimpleGroupType::b(2);
        let bound = 60u128;
        let got: std::collections::BTreeSet<Vec<u32>> =
            enumerate_irreps(&t, bound).into_iter().map(|(w, _, _)| w.0).collect();
        for a in 0..6u32 {
            for b in 0..6u32 {
                let w = hw(&[a, b]);
                if weyl_dim(&t, &w) <= bound {
                    assert!(got.contains(&w.0), "missing {:?}", w.0);
                }
            }
        }
    }

    #[test]
    fn dual_involution_preserves_dim() {
        for t in [SimpleGroupType::a(4), SimpleGroupType::d(5), SimpleGroupType::e(6)] {
            for i in 0..t.rank {
                let w = HighestWeight::fundamental(t.rank, i);
                let d = dual_weight(&t, &w);
                assert_eq!(dual_weight(&t, &d), w);
                assert_eq!(weyl_dim(&t, &w), weyl_dim(&t, &d));
            }
        }
    }

    #[test]
    fn onishchik_monotonicity_spot() {
        for t in [SimpleGroupType::a(3), SimpleGroupType::b(3), SimpleGroupType::g2()] {
            let base = HighestWeight(vec![1; t.rank]);
            let d0 = weyl_dim(&t, &base);
            for i in 0..t.rank {
                let mut w = base.clone();
                w.0[i] += 1;
                assert!(weyl_dim(&t, &w) > d0);
            }
        }
    }
}
