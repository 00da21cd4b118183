//! The concrete complexes and their slice realizations.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rat::binomial_usize;
use crate::exact::{bidegree_slice_basis, exponents_of_degree, Monomial, Rat};

use super::context::AlgebraContext;
use super::engine::{add_to, compute_slice, span_dim, Element, Key, SliceComplex, SliceReport};
use super::exterior::{masks_of_size, mask_indices, wedge_left, wedge_masks, wedge_vectors, Multivector};

/// Largest `dim V` for the complexes over a constant vector space.
pub const MAX_V_DIM: usize = 8;
/// Largest algebra rank for the complexes over `k[g x g]`.
pub const MAX_ALGEBRA_RANK: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ComplexKind {
    /// `S(V) (x) Lambda(V)` with `d(v (x) a) = v ^ a`.
    D,
    /// The weight-`k` subcomplex of `D`.
    Dk,
    /// `S^{k-i}(V) (x) Lambda^i(V) ^ Lambda^r(L)` in degree `i + r`.
    DkVL,
    /// `Lambda^i(V) (x) S^{k-i}(L)` in degree `i`.
    KkVL,
    /// `Lambda^i(g) ^ Lambda^b(B_g)` in homological degree `i + b`.
    Cg,
    /// `S^{k-i}(g) (x) Lambda^i(g) ^ Lambda^b(B_g)` in degree `i + b`.
    DkgB,
}

/// Construction parameters. `subspace` holds a basis of `L` (or `E`) for the
/// kinds that need one; `context` is required for `Cg` and `DkgB`.
#[derive(Clone, Debug)]
pub struct ComplexParams {
    pub v_dim: usize,
    pub k: usize,
    pub subspace: Vec<Vec<Rat>>,
    pub augmented: bool,
    pub context: Option<Arc<AlgebraContext>>,
}

impl ComplexParams {
    pub fn vector_space(v_dim: usize, k: usize) -> Self {
        ComplexParams { v_dim, k, subspace: Vec::new(), augmented: false, context: None }
    }

    pub fn with_subspace(v_dim: usize, k: usize, subspace: Vec<Vec<Rat>>) -> Self {
        ComplexParams { subspace, ..Self::vector_space(v_dim, k) }
    }

    pub fn algebra(context: Arc<AlgebraContext>, k: usize) -> Self {
        ComplexParams { v_dim: context.alg.dim(), k, subspace: Vec::new(), augmented: false, context: Some(context) }
    }

    pub fn augmented(mut self) -> Self {
        self.augmented = true;
        self
    }
}

/// A finite piece on which every differential restricts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slice {
    /// The whole complex (finite-dimensional already).
    Whole,
    /// Total weight `|alpha| + |I|` in `S(V) (x) Lambda(V)`.
    Weight(usize),
    /// Multiplier bidegree in `k[g x g]` at the lowest degree.
    Bidegree(usize, usize),
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Whole => write!(f, "whole"),
            Slice::Weight(w) => write!(f, "weight {w}"),
            Slice::Bidegree(p, q) => write!(f, "({p},{q})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub kind: ComplexKind,
    pub params: ComplexParams,
    /// `v_1 ^ ... ^ v_r` for the given basis of the subspace.
    eta: Multivector,
}

/// Builds a complex after checking the size guards and the parameter shape.
pub fn build_complex(kind: ComplexKind, params: ComplexParams) -> Result<GradedComplex> {
    use ComplexKind::*;
    match kind {
        D | Dk | DkVL | KkVL => {
            if params.v_dim == 0 || params.v_dim > MAX_V_DIM {
                return Err(Error::Capability(format!("dim V = {} outside 1..={MAX_V_DIM}", params.v_dim)));
            }
        }
        Cg | DkgB => {
            let ctx = params
                .context
                .as_ref()
                .ok_or_else(|| Error::Contract(format!("{kind:?} needs an algebra")))?;
            if ctx.alg.rank() > MAX_ALGEBRA_RANK {
                return Err(Error::Capability(format!("{kind:?} limited to rank {MAX_ALGEBRA_RANK}")));
            }
            if params.augmented {
                return Err(Error::Contract(format!("{kind:?} has no augmentation here")));
            }
        }
    }
    if matches!(kind, DkVL | KkVL) {
        if params.subspace.is_empty() {
            return Err(Error::Contract("a subspace basis is required".into()));
        }
        if params.subspace.iter().any(|v| v.len() != params.v_dim) {
            return Err(Error::Contract("subspace vectors must lie in V".into()));
        }
    }
    if matches!(kind, D | Dk | Cg) && params.augmented {
        return Err(Error::Contract(format!("{kind:?} has no augmentation")));
    }
    let eta = wedge_vectors(&params.subspace);
    if matches!(kind, DkVL | KkVL) && eta.is_empty() {
        return Err(Error::Contract("subspace vectors are linearly dependent".into()));
    }
    Ok(GradedComplex { kind, params, eta })
}

impl GradedComplex {
    pub fn r(&self) -> usize {
        self.params.subspace.len()
    }

    fn ctx(&self) -> &AlgebraContext {
        self.params.context.as_deref().expect("checked at construction")
    }

    /// `b_g` for the complexes over an algebra.
    pub fn b(&self) -> usize {
        self.ctx().alg.borel_dim()
    }

    /// The slices whose total degree is at most `bound`.
    pub fn slices(&self, bound: usize) -> Vec<Slice> {
        match self.kind {
            ComplexKind::D => (0..=bound).map(Slice::Weight).collect(),
            ComplexKind::Dk | ComplexKind::DkVL | ComplexKind::KkVL => vec![Slice::Whole],
            ComplexKind::Cg | ComplexKind::DkgB => (0..=bound)
                .flat_map(|t| (0..=t).map(move |p| Slice::Bidegree(p, t - p)))
                .collect(),
        }
    }

    fn realize(&self, slice: Slice) -> Result<Realized<'_>> {
        let ok = matches!(
            (self.kind, slice),
            (ComplexKind::D, Slice::Weight(_))
                | (ComplexKind::Dk | ComplexKind::DkVL | ComplexKind::KkVL, Slice::Whole)
                | (ComplexKind::Cg | ComplexKind::DkgB, Slice::Bidegree(..))
        );
        if !ok {
            return Err(Error::Contract(format!("slice {slice} does not apply to {:?}", self.kind)));
        }
        Ok(Realized { c: self, slice })
    }

    /// Symmetric-algebra variables.
    fn nsym(&self) -> usize {
        self.params.v_dim
    }

    fn coeff_vars(&self) -> usize {
        match self.kind {
            ComplexKind::Cg | ComplexKind::DkgB => self.ctx().universe().nvars(),
            _ => 0,
        }
    }

    /// Expansion of `l_1^{s_1} ... l_r^{s_r}` in the coordinates of `V`.
    fn subspace_power(&self, s: &[u8]) -> BTreeMap<Monomial, Rat> {
        let n = self.nsym();
        let mut acc = BTreeMap::from([(Monomial::one(n), Rat::one())]);
        for (a, &e) in s.iter().enumerate() {
            for _ in 0..e {
                let mut next: BTreeMap<Monomial, Rat> = BTreeMap::new();
                for (m, c) in &acc {
                    for (j, lj) in self.params.subspace[a].iter().enumerate() {
                        if lj.is_zero() {
                            continue;
                        }
                        let e = next.entry(m.mul(&Monomial::var(n, j))).or_insert_with(Rat::zero);
                        *e += c * lj;
                    }
                }
                next.retain(|_, c| !c.is_zero());
                acc = next;
            }
        }
        acc
    }
}

/// Images under the differential of the spanning set in `degree`.
pub fn slice_images(c: &GradedComplex, slice: Slice, degree: i64) -> Result<Vec<Element>> {
    let realized = c.realize(slice)?;
    Ok(realized.spanning_set(degree).iter().map(|v| realized.differential(degree, v)).collect())
}

/// Cohomology of one slice.
pub fn slice_cohomology(c: &GradedComplex, slice: Slice) -> Result<SliceReport> {
    let realized = c.realize(slice)?;
    compute_slice(&realized, &slice.to_string())
}

struct Realized<'a> {
    c: &'a GradedComplex,
    slice: Slice,
}

const AUG: u8 = 1;

/// An element of `S^k(L)` in the augmentation of `D_k(V, L)`, its exponent
/// vector padded to `n` slots.
fn aug_key(coeff: &Monomial, n: usize, s: &[u8]) -> Key {
    let mut sym = Monomial::one(n);
    sym.exps_mut()[..s.len()].copy_from_slice(s);
    Key { coeff: coeff.clone(), sym, wedge: 0, tag: AUG }
}

fn key(coeff: Monomial, sym: Monomial, wedge: u32) -> Key {
    Key { coeff, sym, wedge, tag: 0 }
}

/// `sum_j alpha_j z^{alpha - e_j} (x) e_j ^ e_I` on the untagged part of `v`.
fn koszul_d(v: &Element) -> Element {
    let mut out = Element::new();
    for (k, c) in v {
        if k.tag != 0 {
            continue;
        }
        for j in k.sym.support().collect::<Vec<_>>() {
            let Some((neg, mask)) = wedge_left(j, k.wedge) else { continue };
            let mut sym = k.sym.clone();
            let a = sym.exps()[j];
            sym.exps_mut()[j] -= 1;
            let t = c * Rat::from_integer(a.into());
            add_to(&mut out, key(k.coeff.clone(), sym, mask), if neg { -t } else { t });
        }
    }
    out
}

/// `e_I ^ mv` for a constant multivector, as an element with symmetric part `sym`.
fn wedge_into(out: &mut Element, coeff: &Monomial, sym: &Monomial, mask: u32, mv: &Multivector, c: &Rat, tag: u8) {
    for (&m, cm) in mv {
        if let Some((neg, w)) = wedge_masks(mask, m) {
            let t = c * cm;
            add_to(out, Key { coeff: coeff.clone(), sym: sym.clone(), wedge: w, tag }, if neg { -t } else { t });
        }
    }
}

impl Realized<'_> {
    fn sym_monomials(&self, d: usize) -> Vec<Monomial> {
        exponents_of_degree(self.c.nsym(), d).iter().map(|e| Monomial::from_exps(e)).collect()
    }

    fn multipliers(&self, level: usize) -> Vec<Monomial> {
        let Slice::Bidegree(p, q) = self.slice else { unreachable!() };
        if level > p || level > q {
            return Vec::new();
        }
        let bd = match self.c.kind {
            ComplexKind::Cg => (p - level, q - level),
            _ => (p, q),
        };
        bidegree_slice_basis(self.c.ctx().alg.dim(), bd)
    }

    fn eps_element(&self, m: &Monomial, sym: &Monomial, mask: u32) -> Element {
        eps_multiple(self.c.ctx(), m, sym, mask)
    }
}

/// `m z^alpha (x) e_I ^ eps` expanded over the coefficient monomials.
fn eps_multiple(ctx: &AlgebraContext, m: &Monomial, sym: &Monomial, mask: u32) -> Element {
    let mut out = Element::new();
    for (&jm, poly) in &ctx.top_wedge().coeffs {
        let Some((neg, w)) = wedge_masks(mask, jm) else { continue };
        for (mono, c) in poly.terms() {
            add_to(&mut out, key(m.mul(mono), sym.clone(), w), if neg { -c.clone() } else { c.clone() });
        }
    }
    out
}

/// `dim span { m e_I ^ eps : bideg m = (p, q), |I| = i }`.
pub fn eps_wedge_span_dim(ctx: &AlgebraContext, bidegree: (usize, usize), i: usize) -> usize {
    let n = ctx.alg.dim();
    let none = Monomial::one(0);
    let elements: Vec<Element> = bidegree_slice_basis(n, bidegree)
        .iter()
        .flat_map(|m| masks_of_size(n, i).into_iter().map(move |mask| (m.clone(), mask)))
        .map(|(m, mask)| eps_multiple(ctx, &m, &none, mask))
        .collect();
    span_dim(&elements)
}

impl SliceComplex for Realized<'_> {
    fn degree_range(&self) -> (i64, i64) {
        let c = self.c;
        let k = c.params.k as i64;
        let n = c.params.v_dim as i64;
        let aug = c.params.augmented as i64;
        match (c.kind, self.slice) {
            (ComplexKind::D, Slice::Weight(w)) => (0, (w as i64).min(n)),
            (ComplexKind::Dk, _) => (0, k.min(n)),
            (ComplexKind::DkVL, _) => {
                let r = c.r() as i64;
                (r - aug, r + k.min(n - r))
            }
            (ComplexKind::KkVL, _) => (0, k.min(n) + aug),
            (ComplexKind::Cg, _) => {
                let b = c.b() as i64;
                (b, n)
            }
            (ComplexKind::DkgB, _) => {
                let b = c.b() as i64;
                (b, b + k.min(n - b))
            }
            _ => unreachable!(),
        }
    }

    fn size_estimate(&self, degree: i64) -> usize {
        let c = self.c;
        if !matches!(c.kind, ComplexKind::Cg | ComplexKind::DkgB) {
            return 0;
        }
        let n = c.params.v_dim;
        let level = (degree - c.b() as i64) as usize;
        let eps_terms: usize = c.ctx().top_wedge().coeffs.values().map(|p| p.num_terms()).sum();
        let syms = match c.kind {
            ComplexKind::DkgB => binomial_usize(n + c.params.k - level - 1, c.params.k - level),
            _ => 1,
        };
        self.multipliers(if c.kind == ComplexKind::Cg { level } else { 0 }).len()
            * syms
            * binomial_usize(n, level)
            * eps_terms
    }

    fn step(&self) -> i64 {
        if self.c.kind == ComplexKind::Cg { -1 } else { 1 }
    }

    fn spanning_set(&self, degree: i64) -> Vec<Element> {
        let c = self.c;
        let n = c.params.v_dim;
        let k = c.params.k;
        let one = Monomial::one(c.coeff_vars());
        let basic = |sym: Monomial, mask: u32| Element::from([(key(one.clone(), sym, mask), Rat::one())]);
        match c.kind {
            ComplexKind::D | ComplexKind::Dk => {
                let w = match self.slice {
                    Slice::Weight(w) => w,
                    _ => k,
                };
                let i = degree as usize;
                let mut out = Vec::new();
                for s in self.sym_monomials(w - i) {
                    for mask in masks_of_size(n, i) {
                        out.push(basic(s.clone(), mask));
                    }
                }
                out
            }
            ComplexKind::DkVL => {
                let r = c.r() as i64;
                if degree == r - 1 {
                    return exponents_of_degree(c.r(), k)
                        .into_iter()
                        .map(|s| Element::from([(aug_key(&one, n, &s), Rat::one())]))
                        .collect();
                }
                let i = (degree - r) as usize;
                let mut out = Vec::new();
                for s in self.sym_monomials(k - i) {
                    for mask in masks_of_size(n, i) {
                        let mut e = Element::new();
                        wedge_into(&mut e, &one, &s, mask, &c.eta, &Rat::one(), 0);
                        out.push(e);
                    }
                }
                out
            }
            ComplexKind::KkVL => {
                let i = degree as usize;
                if i > k {
                    let mut out = Vec::new();
                    for mask in masks_of_size(n, k) {
                        let mut e = Element::new();
                        wedge_into(&mut e, &one, &Monomial::one(n), mask, &c.eta, &Rat::one(), AUG);
                        out.push(e);
                    }
                    return out;
                }
                let mut out = Vec::new();
                for s in exponents_of_degree(c.r(), k - i) {
                    let poly = c.subspace_power(&s);
                    for mask in masks_of_size(n, i) {
                        let mut e = Element::new();
                        for (z, coef) in &poly {
                            add_to(&mut e, key(one.clone(), z.clone(), mask), coef.clone());
                        }
                        out.push(e);
                    }
                }
                out
            }
            ComplexKind::Cg => {
                let level = degree as usize - c.b();
                let mut out = Vec::new();
                for m in self.multipliers(level) {
                    for mask in masks_of_size(n, level) {
                        out.push(self.eps_element(&m, &Monomial::one(0), mask));
                    }
                }
                out
            }
            ComplexKind::DkgB => {
                let level = degree as usize - c.b();
                let mut out = Vec::new();
                let syms = self.sym_monomials(k - level);
                for m in self.multipliers(0) {
                    for s in &syms {
                        for mask in masks_of_size(n, level) {
                            out.push(self.eps_element(&m, s, mask));
                        }
                    }
                }
                out
            }
        }
    }

    fn differential(&self, degree: i64, v: &Element) -> Element {
        let c = self.c;
        match c.kind {
            ComplexKind::D | ComplexKind::Dk | ComplexKind::DkgB => koszul_d(v),
            ComplexKind::DkVL => {
                let mut out = koszul_d(v);
                for (k, coef) in v.iter().filter(|(k, _)| k.tag == AUG) {
                    for (z, zc) in c.subspace_power(&k.sym.exps()[..c.r()]) {
                        wedge_into(&mut out, &k.coeff, &z, 0, &c.eta, &(coef * &zc), 0);
                    }
                }
                out
            }
            ComplexKind::KkVL => {
                if c.params.augmented && degree == c.params.k as i64 {
                    let mut out = Element::new();
                    let n = c.params.v_dim;
                    for (k, coef) in v {
                        debug_assert!(k.sym.is_one());
                        wedge_into(&mut out, &k.coeff, &Monomial::one(n), k.wedge, &c.eta, coef, AUG);
                    }
                    out
                } else {
                    koszul_d(v)
                }
            }
            ComplexKind::Cg => {
                let g = c.ctx().pairings();
                let mut out = Element::new();
                for (k, coef) in v {
                    for (pos, j) in mask_indices(k.wedge).enumerate() {
                        let w = k.wedge & !(1u32 << j);
                        for (mono, gc) in g[j].terms() {
                            let t = coef * gc;
                            add_to(&mut out, key(k.coeff.mul(mono), k.sym.clone(), w), if pos % 2 == 1 { -t } else { t });
                        }
                    }
                }
                out
            }
        }
    }
}
