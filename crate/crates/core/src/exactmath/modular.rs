//! Reduction of Q(z24) modulo primes p = 1 mod 24, where z maps to a
//! root of x^8 - x^4 + 1 in F_p. The rank of a reduced matrix never
//! exceeds the rank over Q(z24), so it is a certified lower bound.

use super::cyclotomic::{CycNum, DEGREE};
use super::matrix::Matrix;

/// Primes p = 1 mod 24 below 2^31, each with a primitive 24th root of unity.
pub const REDUCTION_PRIMES: [(u64, u64); 3] =
    [(2147483137, 2056559897), (2147483353, 279001241), (2147483497, 138348335)];

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn residue(n: i64, p: u64) -> u64 {
    n.rem_euclid(p as i64) as u64
}

/// Image of x under z -> root in F_p; None when a denominator vanishes.
pub fn reduce(x: &CycNum, p: u64, root: u64) -> Option<u64> {
    let mut acc = 0u64;
    let mut zk = 1u64;
    for k in 0..DEGREE {
        let c = x.coeff(k);
        let den = residue(c.denom(), p);
        if den == 0 {
            return None;
        }
        let term = residue(c.numer(), p) * inv_mod(den, p) % p;
        acc = (acc + term * zk) % p;
        zk = zk * root % p;
    }
    Some(acc)
}

/// Rank over F_p by Gaussian elimination.
fn rank_fp(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&v| v * inv % p).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Rank of the reduction modulo p, if every entry reduces.
pub fn rank_mod_p(m: &Matrix<CycNum>, p: u64, root: u64) -> Option<usize> {
    let rows: Option<Vec<Vec<u64>>> =
        m.row_vecs().iter().map(|r| r.iter().map(|x| reduce(x, p, root)).collect()).collect();
    Some(rank_fp(rows?, p))
}

/// Largest rank among the reductions: a lower bound for the rank over
/// Q(z24) that is attained unless every prime divides some minor.
pub fn rank_lower_bound(m: &Matrix<CycNum>) -> usize {
    REDUCTION_PRIMES.iter().filter_map(|&(p, z)| rank_mod_p(m, p, z)).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Q;
    use proptest::prelude::*;

    fn is_prime(n: u64) -> bool {
        n > 1 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn primes_carry_primitive_24th_roots() {
        for (p, z) in REDUCTION_PRIMES {
            assert!(is_prime(p));
            assert_eq!(p % 24, 1);
            assert_eq!((pow_mod(z, 8, p) + 1 + p - pow_mod(z, 4, p)) % p, 0);
            assert_ne!(pow_mod(z, 12, p), 1);
            assert_ne!(pow_mod(z, 8, p), 1);
            assert_eq!(pow_mod(z, 24, p), 1);
        }
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let (p, z) = REDUCTION_PRIMES[0];
        let a = CycNum::zeta(5) + CycNum::rational(3, 7);
        let b = CycNum::omega() - CycNum::zeta(1).scale(Q::new(2, 5));
        let r = |x: CycNum| reduce(&x, p, z).unwrap();
        assert_eq!(r(a * b), r(a) * r(b) % p);
        assert_eq!(r(a + b), (r(a) + r(b)) % p);
        assert_eq!(r(a.inv()), inv_mod(r(a), p));
    }

    proptest! {
        #[test]
        fn modular_rank_matches_exact_rank_on_small_matrices(v in proptest::collection::vec(-2i64..=2, 16), e in 0i64..24) {
            let m = Matrix::from_fn(4, 4, |i, j| CycNum::int(v[4 * i + j]) * CycNum::zeta(e * (i as i64)));
            let lb = rank_lower_bound(&m);
            prop_assert!(lb <= m.rank());
            prop_assert_eq!(lb, m.rank());
        }
    }
}
