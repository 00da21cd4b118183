//! Slice-level cohomology of finite complexes presented by spanning sets.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{EchelonBasis, Monomial, Rat, SparseVec};

/// Largest term dimension accepted per slice.
pub const MAX_TERM_DIM: usize = 5000;
/// Largest number of stored coefficients in the spanning set of one term.
pub const MAX_TERM_ENTRIES: usize = 2_000_000;

/// A basis vector of an ambient space: coefficient monomial in `k[g x g]`,
/// symmetric-algebra monomial, exterior mask, and a tag separating
/// augmentation spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub coeff: Monomial,
    pub sym: Monomial,
    pub wedge: u32,
    pub tag: u8,
}

/// A sparse element of an ambient space.
pub type Element = BTreeMap<Key, Rat>;

pub fn add_to(e: &mut Element, k: Key, c: Rat) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match e.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A finite complex restricted to one slice.
pub trait SliceComplex: Sync {
    /// Lowest and highest degree carrying a term.
    fn degree_range(&self) -> (i64, i64);
    /// `+1` for cohomological, `-1` for homological differentials.
    fn step(&self) -> i64 {
        1
    }
    /// Upper bound on the coefficients stored by `spanning_set(degree)`.
    fn size_estimate(&self, _degree: i64) -> usize {
        0
    }
    fn spanning_set(&self, degree: i64) -> Vec<Element>;
    fn differential(&self, degree: i64, v: &Element) -> Element;
}

/// Dimensions, ranks and cohomology of one slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceReport {
    pub slice: String,
    pub degrees: Vec<i64>,
    pub term_dims: Vec<usize>,
    /// Rank of the differential leaving each degree.
    pub ranks: Vec<usize>,
    pub cohomology: Vec<usize>,
    pub d_squared_zero: bool,
}

impl SliceReport {
    pub fn cohomology_at(&self, degree: i64) -> usize {
        self.degrees.iter().position(|&d| d == degree).map_or(0, |i| self.cohomology[i])
    }

    pub fn term_dim_at(&self, degree: i64) -> usize {
        self.degrees.iter().position(|&d| d == degree).map_or(0, |i| self.term_dims[i])
    }

    pub fn is_acyclic(&self) -> bool {
        self.cohomology.iter().all(|&h| h == 0)
    }

    /// Degrees with nonzero cohomology.
    pub fn support(&self) -> Vec<i64> {
        self.degrees.iter().zip(&self.cohomology).filter(|(_, &h)| h > 0).map(|(&d, _)| d).collect()
    }

    pub fn euler_terms(&self) -> i64 {
        alternating(&self.degrees, &self.term_dims)
    }

    pub fn euler_cohomology(&self) -> i64 {
        alternating(&self.degrees, &self.cohomology)
    }
}

fn alternating(degrees: &[i64], dims: &[usize]) -> i64 {
    degrees
        .iter()
        .zip(dims)
        .map(|(&d, &n)| if d.rem_euclid(2) == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

/// Maps keys to consecutive indices on first sight.
#[derive(Default)]
struct Indexer {
    map: HashMap<Key, usize>,
}

impl Indexer {
    fn vector(&mut self, e: &Element) -> SparseVec {
        e.iter()
            .map(|(k, c)| {
                let n = self.map.len();
                (*self.map.entry(k.clone()).or_insert(n), c.clone())
            })
            .collect()
    }
}

/// Dimension of the span of `elements`.
pub fn span_dim(elements: &[Element]) -> usize {
    let mut idx = Indexer::default();
    let mut basis = EchelonBasis::new();
    for e in elements {
        let v = idx.vector(e);
        basis.insert(&v);
    }
    basis.rank()
}

/// Exact cohomology of a slice. Asserts `d o d = 0`, that differentials leaving
/// the last term vanish, and the Euler characteristic identity.
pub fn compute_slice(c: &dyn SliceComplex, label: &str) -> Result<SliceReport> {
    let (lo, hi) = c.degree_range();
    let step = c.step();
    let degrees: Vec<i64> = (lo..=hi).collect();
    if let Some(&d) = degrees.iter().find(|&&d| c.size_estimate(d) > MAX_TERM_ENTRIES) {
        return Err(Error::Capability(format!(
            "slice {label}: term in degree {d} needs about {} coefficients",
            c.size_estimate(d)
        )));
    }
    let spans: Vec<Vec<Element>> = degrees.iter().map(|&d| c.spanning_set(d)).collect();
    let mut term_dims = Vec::new();
    let mut ranks = Vec::new();
    let mut d_squared_zero = true;
    for (pos, &deg) in degrees.iter().enumerate() {
        let dim = span_dim(&spans[pos]);
        if dim > MAX_TERM_DIM {
            return Err(Error::Capability(format!("slice {label}: term of dimension {dim} in degree {deg}")));
        }
        term_dims.push(dim);
        let images: Vec<Element> = spans[pos].iter().map(|v| c.differential(deg, v)).collect();
        let target = deg + step;
        if target < lo || target > hi {
            if images.iter().any(|e| !e.is_empty()) {
                return Err(Error::Structural(format!(
                    "slice {label}: differential leaves the complex from degree {deg}"
                )));
            }
        } else {
            for im in &images {
                if !c.differential(target, im).is_empty() {
                    d_squared_zero = false;
                }
            }
        }
        ranks.push(span_dim(&images));
    }
    let mut cohomology = Vec::new();
    for (pos, &deg) in degrees.iter().enumerate() {
        let incoming = degrees
            .iter()
            .position(|&d| d + step == deg)
            .map_or(0, |p| ranks[p]);
        let h = term_dims[pos] as i64 - ranks[pos] as i64 - incoming as i64;
        if h < 0 {
            return Err(Error::Structural(format!("slice {label}: negative cohomology in degree {deg}")));
        }
        cohomology.push(h as usize);
    }
    let report = SliceReport { slice: label.to_string(), degrees, term_dims, ranks, cohomology, d_squared_zero };
    if report.euler_terms() != report.euler_cohomology() {
        return Err(Error::Structural(format!("slice {label}: Euler characteristic mismatch")));
    }
    if !report.d_squared_zero {
        return Err(Error::Structural(format!("slice {label}: d o d != 0")));
    }
    Ok(report)
}
