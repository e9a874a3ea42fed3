//! Modular rank over fixed word-size primes.
//!
//! For an integer matrix M and a prime p, any nonzero r x r minor mod p is a
//! nonzero integer minor, so `rank_p(M) <= rank_Q(M)` always holds and every
//! modular rank is a certified lower bound for the rational rank.  The oracle
//! consumes ranks as lower bounds (equivalently, isotropy dimensions as upper
//! bounds) and minimizes over randomized trials, so the modular engine has the
//! same one-sided semantics as the random sampling itself.  Two independent
//! primes are used and the larger rank is taken.

use super::Z;
use num::ToPrimitive;
use std::sync::OnceLock;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, valid for all u64 with this base set.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The two fixed primes used by the rank engine (deterministic).
pub fn rank_primes() -> &'static [u64; 2] {
    static PRIMES: OnceLock<[u64; 2]> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let p1 = (1u64 << 61) - 1;
        debug_assert!(is_prime_u64(p1));
        let mut p2 = p1 - 2;
        while !is_prime_u64(p2) {
            p2 -= 2;
        }
        [p1, p2]
    })
}

fn reduce_mod(v: &Z, p: u64) -> u64 {
    let pz = Z::from(p);
    let r = v % &pz;
    let r = if r.sign() == num::bigint::Sign::Minus { r + &pz } else { r };
    r.to_u64().expect("reduced residue fits u64")
}

/// Rank of an integer matrix modulo p, by in-place elimination.
pub fn rank_mod(rows: &[Vec<Z>], p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| reduce_mod(v, p)).collect()).collect();
    let mut rank = 0usize;
    let mut col = 0usize;
    while rank < m.len() && col < ncols {
        let mut piv = None;
        for i in rank..m.len() {
            if m[i][col] != 0 {
                piv = Some(i);
                break;
            }
        }
        let Some(pivot_row) = piv else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = powmod(m[rank][col], p - 2, p);
        for j in col..ncols {
            m[rank][j] = mulmod(m[rank][j], inv, p);
        }
        for i in rank + 1..m.len() {
            let f = m[i][col];
            if f == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = mulmod(f, m[rank][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Certified lower bound for the rational rank: max of ranks over the two
/// fixed primes.  Equal to the true rank unless both primes divide some
/// critical minor, which the trial-minimization semantics tolerates.
pub fn rank_lower_bound(rows: &[Vec<Z>]) -> usize {
    let ps = rank_primes();
    let r1 = rank_mod(rows, ps[0]);
    let r2 = rank_mod(rows, ps[1]);
    r1.max(r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_bareiss;

    #[test]
    fn primes_are_distinct_and_large() {
        let ps = rank_primes();
        assert!(ps[0] != ps[1]);
        assert!(ps[0] > (1u64 << 60) && ps[1] > (1u64 << 60));
        assert!(is_prime_u64(ps[0]) && is_prime_u64(ps[1]));
    }

    #[test]
    fn matches_exact_rank_on_random_small() {
        let rows: Vec<Vec<Z>> = vec![
            vec![Z::from(3), Z::from(-1), Z::from(2), Z::from(0)],
            vec![Z::from(6), Z::from(-2), Z::from(4), Z::from(0)],
            vec![Z::from(0), Z::from(5), Z::from(1), Z::from(7)],
            vec![Z::from(3), Z::from(4), Z::from(3), Z::from(7)],
        ];
        let exact = rank_bareiss(rows.clone());
        assert_eq!(rank_lower_bound(&rows), exact);
    }
}
