//! Incremental sparse row reduction for spans too large to hold densely.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rat::Rat;

pub type SparseVec = BTreeMap<usize, Rat>;

/// A semi-echelon basis: each stored row has a distinct pivot (its smallest
/// index) with coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        let mut cursor = 0usize;
        while let Some((&k, c)) = w.range(cursor..).next() {
            cursor = k + 1;
            if let Some(row) = self.rows.get(&k) {
                let f = c.clone();
                for (&j, rv) in row {
                    let e = w.entry(j).or_insert_with(Rat::zero);
                    *e -= &f * rv;
                    if e.is_zero() {
                        w.remove(&j);
                    }
                }
            }
        }
        w
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let w = self.reduce(v);
        let Some((&p, c)) = w.iter().next() else {
            return false;
        };
        let inv = Rat::one() / c;
        let row: SparseVec = w.iter().map(|(&j, x)| (j, x * &inv)).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut b = EchelonBasis::new();
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}
