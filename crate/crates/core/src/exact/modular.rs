//! Ranks of integer matrices: fraction-free elimination over `Z`, and a cheap
//! lower bound from elimination modulo a prime.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(x: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let mut r = x % &p;
    if r < BigInt::zero() {
        r += &p;
    }
    r.to_u64().expect("reduced below the prime")
}

/// Rank modulo [`PRIME`]; never exceeds the rank over `Q`.
pub fn rank_mod_p(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(reduce).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = powmod(a[rank][c], PRIME - 2);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[c] == 0 {
                continue;
            }
            let f = mulmod(row[c], inv);
            for j in c..cols {
                let sub = mulmod(f, pivot_row[j]);
                row[j] = (row[j] + PRIME - sub) % PRIME;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank over `Q` by Bareiss fraction-free elimination.
pub fn rank_over_q(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            for j in c + 1..cols {
                row[j] = (&pivot_row[c] * &row[j] - &row[c] * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        rank += 1;
    }
    rank
}
