//! Exterior-algebra bookkeeping: basis subsets as bit masks, wedge signs, and
//! multivectors with rational or polynomial coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{MPoly, Rat, Universe};
use crate::invariants::GVector;

/// `e_j ^ e_I`: the sign and resulting mask, or `None` when `j` is in `I`.
pub fn wedge_left(j: usize, mask: u32) -> Option<(bool, u32)> {
    let bit = 1u32 << j;
    if mask & bit != 0 {
        return None;
    }
    let below = (mask & (bit - 1)).count_ones();
    Some((below % 2 == 1, mask | bit))
}

/// `e_I ^ e_J` for disjoint sorted index sets.
pub fn wedge_masks(a: u32, b: u32) -> Option<(bool, u32)> {
    if a & b != 0 {
        return None;
    }
    // Each element of `b` must pass every larger element of `a`.
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some((swaps % 2 == 1, a | b))
}

/// All masks over `n` bits with exactly `k` set, in increasing numeric order.
pub fn masks_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1u32 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// Indices set in `mask`, increasing.
pub fn mask_indices(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(j)
    })
}

/// A multivector over a constant vector space.
pub type Multivector = BTreeMap<u32, Rat>;

/// `v_1 ^ ... ^ v_r` for constant vectors.
pub fn wedge_vectors(vectors: &[Vec<Rat>]) -> Multivector {
    let mut acc: Multivector = BTreeMap::from([(0u32, Rat::from_integer(1.into()))]);
    for v in vectors {
        let mut next = Multivector::new();
        for (&mask, c) in &acc {
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                if let Some((neg, m)) = wedge_masks(mask, 1 << j) {
                    let t = c * vj;
                    let e = next.entry(m).or_insert_with(Rat::zero);
                    if neg { *e -= t } else { *e += t }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// A multivector whose coefficients are polynomials in `k[g x g]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMultivector {
    pub universe: Universe,
    pub degree: usize,
    pub coeffs: BTreeMap<u32, MPoly>,
}

impl PolyMultivector {
    pub fn one(universe: Universe) -> Self {
        PolyMultivector { universe, degree: 0, coeffs: BTreeMap::from([(0u32, MPoly::one(universe))]) }
    }

    /// `self ^ v` for a polynomial vector field `v`.
    pub fn wedge_vector(&self, v: &GVector) -> Self {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (&mask, c) in &self.coeffs {
            for (j, vj) in v.coeffs.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                if let Some((neg, m)) = wedge_masks(mask, 1 << j) {
                    let t = c * vj;
                    let e = out.entry(m).or_insert_with(|| MPoly::zero(self.universe));
                    *e = if neg { &*e - &t } else { &*e + &t };
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        PolyMultivector { universe: self.universe, degree: self.degree + 1, coeffs: out }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `v_1 ^ ... ^ v_b` in the given order.
pub fn top_wedge(universe: Universe, maps: &[GVector]) -> PolyMultivector {
    maps.iter().fold(PolyMultivector::one(universe), |acc, v| acc.wedge_vector(v))
}
