//! The alternating sums `r`, `c`, `psi`, `phi` and the polynomials `p_k`
//! behind the nonvanishing argument, with exhaustive scans.
//!
//! Defining sums are ground truth; closed forms and recursions are checked
//! against them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::rat::{binomial, factorial};
use crate::exact::Rat;
use crate::report::ReportDoc;

fn ri(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

fn sign(j: u64) -> Rat {
    if j.is_multiple_of(2) { Rat::one() } else { -Rat::one() }
}

/// `r(k, l) = sum_{j<k} (-1)^j C(l, j)` for `1 <= k <= l`.
pub fn r_val(k: u64, l: u64) -> Result<Rat> {
    if k == 0 || k > l {
        return Err(Error::Contract(format!("r({k},{l}) needs 1 <= k <= l")));
    }
    Ok((0..k).map(|j| sign(j) * ri(binomial(l, j))).sum())
}

/// `(-1)^(k-1) (l-1)! / ((k-1)! (l-k)!)`.
pub fn r_closed(k: u64, l: u64) -> Result<Rat> {
    if k == 0 || k > l {
        return Err(Error::Contract(format!("r({k},{l}) needs 1 <= k <= l")));
    }
    Ok(sign(k - 1) * Rat::new(factorial(l - 1), factorial(k - 1) * factorial(l - k)))
}

/// `c(k, l) = sum_{j<=k} (-1)^j / (j! (l+j)!)`.
pub fn c_val(k: u64, l: u64) -> Rat {
    (0..=k)
        .map(|j| sign(j) * Rat::new(BigInt::one(), factorial(j) * factorial(l + j)))
        .sum()
}

/// `p_k(x)` from `p_0 = 1`, `p_1 = x`, `p_k = k (x + k) p_{k-1} + (-1)^k`.
pub fn p_val(k: u64, x: i64) -> BigInt {
    p_recursion(k, x, 1)
}

/// The variant with `k (x - k)`, which disagrees with the defining sum of `c`.
pub fn p_printed(k: u64, x: i64) -> BigInt {
    p_recursion(k, x, -1)
}

fn p_recursion(k: u64, x: i64, shift_sign: i64) -> BigInt {
    let x = BigInt::from(x);
    if k == 0 {
        return BigInt::one();
    }
    let mut p = x.clone();
    for j in 2..=k {
        let alt = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        p = BigInt::from(j) * (&x + BigInt::from(shift_sign * j as i64)) * p + alt;
    }
    p
}

/// `psi(e, k, l) = r(k, l) - sum_{1<=j<e} (-1)^(k-j) c(j, k-j) r(j, l) (l-j)!/(l-k)!`.
pub fn psi_val(e: u64, k: u64, l: u64) -> Result<Rat> {
    if !(2 <= e && e <= k && k <= l) {
        return Err(Error::Contract(format!("psi({e},{k},{l}) needs 2 <= e <= k <= l")));
    }
    let mut acc = r_val(k, l)?;
    for j in 1..e {
        let term = sign(k - j) * c_val(j, k - j) * r_val(j, l)? * Rat::new(factorial(l - j), factorial(l - k));
        acc -= term;
    }
    Ok(acc)
}

/// `phi(e, k) = k - sum_{1<=j<e} j p_j(k-j) / (j!)^2`.
pub fn phi_val(e: u64, k: u64) -> Result<Rat> {
    if !(2 <= e && e <= k) {
        return Err(Error::Contract(format!("phi({e},{k}) needs 2 <= e <= k")));
    }
    let mut acc = ri(BigInt::from(k));
    for j in 1..e {
        let f = factorial(j);
        acc -= Rat::new(BigInt::from(j) * p_val(j, (k - j) as i64), &f * &f);
    }
    Ok(acc)
}

/// `(-1)^(k-1) k! (l-k)! / (l-1)! * psi(e, k, l)`, which should equal `phi(e, k)`.
pub fn psi_normalized(e: u64, k: u64, l: u64) -> Result<Rat> {
    Ok(sign(k - 1) * Rat::new(factorial(k) * factorial(l - k), factorial(l - 1)) * psi_val(e, k, l)?)
}

/// Bounds for the exhaustive scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBounds {
    /// Upper bound on `k` and `l` for the `r` and `c` scans.
    pub rc_max: u64,
    /// Upper bound on `l` for the `psi` scan.
    pub psi_max_l: u64,
}

impl Default for ScanBounds {
    fn default() -> Self {
        ScanBounds { rc_max: 30, psi_max_l: 25 }
    }
}

/// Runs every scan and returns one report per claim.
pub fn combinatorics_suite(b: ScanBounds) -> Vec<ReportDoc> {
    let mut out = Vec::new();

    let r_pairs: Vec<(u64, u64)> = (1..=b.rc_max).flat_map(|l| (1..=l).map(move |k| (k, l))).collect();
    let r_bad: Vec<(u64, u64)> = r_pairs
        .par_iter()
        .filter(|&&(k, l)| r_val(k, l).ok() != r_closed(k, l).ok())
        .copied()
        .collect();
    out.push(ReportDoc::check(
        "comb",
        "r-closed-form",
        "r(k,l) equals (-1)^(k-1)(l-1)!/((k-1)!(l-k)!)",
        r_bad.is_empty(),
        json!({ "pairs": r_pairs.len(), "max": b.rc_max, "first_mismatch": r_bad.first() }),
    ));

    let c_pairs: Vec<(u64, u64)> = (0..=b.rc_max).flat_map(|k| (1..=b.rc_max).map(move |l| (k, l))).collect();
    let c_bad: Vec<(u64, u64)> = c_pairs
        .par_iter()
        .filter(|&&(k, l)| {
            c_val(k, l) * ri(factorial(k) * factorial(l + k)) != ri(p_val(k, l as i64))
        })
        .copied()
        .collect();
    out.push(ReportDoc::check(
        "comb",
        "c-equals-p",
        "c(k,l) k! (l+k)! = p_k(l) for p_k = k(x+k)p_(k-1) + (-1)^k",
        c_bad.is_empty(),
        json!({ "pairs": c_pairs.len(), "max": b.rc_max, "first_mismatch": c_bad.first() }),
    ));

    let printed_bad = c_pairs
        .iter()
        .filter(|&&(k, l)| p_printed(k, l as i64) != p_val(k, l as i64))
        .count();
    out.push(ReportDoc::check(
        "comb",
        "printed-recursion",
        "the recursion with k(x-k) contradicts the defining sum of c (probable typo); k(x+k) is used",
        printed_bad > 0 && p_printed(2, 1) == BigInt::from(-1) && p_val(2, 1) == BigInt::from(7),
        json!({ "disagreeing_pairs": printed_bad, "p2_at_1": { "sum_consistent": 7, "printed": -1 } }),
    ));

    let mod_bad: Vec<(u64, u64)> = (2..=b.rc_max)
        .flat_map(|k| (1..=b.rc_max).map(move |l| (k, l)))
        .filter(|&(k, l)| {
            let r = p_val(k, l as i64).mod_floor(&BigInt::from(k));
            !(r.is_one() || r == BigInt::from(k - 1))
        })
        .collect();
    out.push(ReportDoc::check(
        "comb",
        "p-mod-k",
        "p_k(l) is congruent to 1 or -1 modulo k for k >= 2",
        mod_bad.is_empty(),
        json!({ "max": b.rc_max, "first_violation": mod_bad.first() }),
    ));

    let triples: Vec<(u64, u64, u64)> = (2..=b.psi_max_l)
        .flat_map(|l| (2..=l).flat_map(move |k| (2..=k).map(move |e| (e, k, l))))
        .collect();
    let results: Vec<(bool, bool)> = triples
        .par_iter()
        .map(|&(e, k, l)| {
            let psi = psi_val(e, k, l).expect("ordered triple");
            let lhs = sign(k - 1) * Rat::new(factorial(k) * factorial(l - k), factorial(l - 1)) * &psi;
            (lhs == phi_val(e, k).expect("ordered pair"), !psi.is_zero())
        })
        .collect();
    let id_bad = results.iter().position(|r| !r.0).map(|i| triples[i]);
    let nz_bad = results.iter().position(|r| !r.1).map(|i| triples[i]);
    out.push(ReportDoc::check(
        "comb",
        "psi-phi-identity",
        "(-1)^(k-1) k!(l-k)!/(l-1)! psi(e,k,l) = phi(e,k)",
        id_bad.is_none(),
        json!({ "triples": triples.len(), "max_l": b.psi_max_l, "first_mismatch": id_bad }),
    ));
    let min_abs_phi = (2..=b.psi_max_l)
        .flat_map(|k| (2..=k).map(move |e| phi_val(e, k).expect("ordered").abs()))
        .min();
    out.push(ReportDoc::check(
        "comb",
        "psi-nonvanishing",
        "psi(e,k,l) != 0 for 2 <= e <= k <= l",
        nz_bad.is_none(),
        json!({
            "triples": triples.len(),
            "max_l": b.psi_max_l,
            "first_zero": nz_bad,
            "min_abs_phi": min_abs_phi.map(|v| v.to_string()),
        }),
    ));
    out
}
