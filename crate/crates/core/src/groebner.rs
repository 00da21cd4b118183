//! Buchberger's algorithm over the degree-reverse-lexicographic order.

use std::collections::BTreeSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{MPoly, Monomial, Universe};

/// Variable bound accepted by [`groebner`].
pub const MAX_VARS: usize = 16;
/// Generator degree bound accepted by [`groebner`].
pub const MAX_GENERATOR_DEGREE: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Degrevlex,
}

/// Generators of an ideal; nonzero and free of exact duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub generators: Vec<MPoly>,
    pub universe: Universe,
}

impl IdealPresentation {
    pub fn new(generators: Vec<MPoly>, universe: Universe) -> Result<Self> {
        let mut out: Vec<MPoly> = Vec::new();
        for g in generators {
            if g.universe() != universe {
                return Err(Error::Structural("generator outside the ideal's universe".into()));
            }
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(IdealPresentation { generators: out, universe })
    }
}

/// A reduced, monic Groebner basis sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub elements: Vec<MPoly>,
    pub order: MonomialOrder,
    pub universe: Universe,
}

fn leading(p: &MPoly) -> &Monomial {
    p.leading_monomial().expect("nonzero basis element")
}

/// Remainder of `p` on full reduction by the monic family `g`.
pub fn normal_form(p: &MPoly, g: &[MPoly]) -> MPoly {
    let mut p = p.clone();
    let mut r = MPoly::zero(p.universe());
    while let Some((m, c)) = p.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        match g.iter().find(|q| leading(q).divides(&m)) {
            Some(q) => {
                let shift = leading(q).quotient_of(&m).expect("divides");
                p.add_assign_term_times(q, &shift, &-c);
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                r.add_term(m, c);
            }
        }
    }
    r
}

/// S-polynomial of two monic polynomials.
pub fn s_polynomial(f: &MPoly, g: &MPoly) -> MPoly {
    let (lf, lg) = (leading(f), leading(g));
    let l = lf.lcm(lg);
    let one = crate::exact::Rat::one();
    let mut s = f.mul_monomial(&lf.quotient_of(&l).expect("lcm"), &one);
    s.add_assign_term_times(g, &lg.quotient_of(&l).expect("lcm"), &-one);
    s
}

/// Reduced Groebner basis of `ideal`, self-verified before returning.
pub fn groebner(ideal: &IdealPresentation, order: MonomialOrder) -> Result<GroebnerBasis> {
    let u = ideal.universe;
    if u.nvars() > MAX_VARS {
        return Err(Error::Capability(format!("{} variables exceed the bound {MAX_VARS}", u.nvars())));
    }
    if ideal.generators.iter().any(|g| g.total_degree().unwrap_or(0) > MAX_GENERATOR_DEGREE) {
        return Err(Error::Capability(format!("generator degree exceeds {MAX_GENERATOR_DEGREE}")));
    }
    let mut g: Vec<MPoly> = ideal.generators.iter().map(MPoly::monic).collect();
    // Pending pairs keyed by (lcm, j, i) so the smallest lcm is selected first.
    let mut pending: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.insert((leading(&g[i]).lcm(leading(&g[j])), j, i));
        }
    }
    while let Some(key) = pending.pop_first() {
        let (l, j, i) = key;
        if leading(&g[i]).coprime(leading(&g[j])) {
            continue;
        }
        let in_pending = |a: usize, b: usize, set: &BTreeSet<(Monomial, usize, usize)>| {
            let (hi, lo) = if a > b { (a, b) } else { (b, a) };
            set.contains(&(leading(&g[lo]).lcm(leading(&g[hi])), hi, lo))
        };
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && leading(&g[k]).divides(&l)
                && !in_pending(i, k, &pending)
                && !in_pending(j, k, &pending)
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let r = r.monic();
            let n = g.len();
            for k in 0..n {
                pending.insert((leading(&g[k]).lcm(leading(&r)), n, k));
            }
            g.push(r);
        }
    }
    let gb = GroebnerBasis { elements: reduce_basis(g), order, universe: u };
    if !gb.verify() {
        return Err(Error::Structural("Groebner self-verification failed".into()));
    }
    Ok(gb)
}

fn reduce_basis(g: Vec<MPoly>) -> Vec<MPoly> {
    let mut minimal: Vec<MPoly> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let lm = leading(p);
        let redundant = g.iter().enumerate().any(|(k2, q)| {
            k2 != k && leading(q).divides(lm) && (leading(q) != lm || k2 < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<MPoly> = (0..minimal.len())
        .map(|k| {
            let others: Vec<MPoly> = minimal.iter().enumerate().filter(|(k2, _)| *k2 != k).map(|(_, q)| q.clone()).collect();
            let p = &minimal[k];
            let (lm, lc) = p.leading_term().expect("nonzero");
            let mut tail = p.clone();
            tail.add_term(lm.clone(), -lc.clone());
            let mut out = MPoly::monomial(p.universe(), lm.clone(), lc.clone());
            out = &out + &normal_form(&tail, &others);
            out.monic()
        })
        .collect();
    reduced.sort_by(|a, b| leading(a).cmp(leading(b)));
    reduced
}

impl GroebnerBasis {
    pub fn normal_form(&self, p: &MPoly) -> MPoly {
        normal_form(p, &self.elements)
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|p| leading(p).clone()).collect()
    }

    /// Every S-polynomial reduces to zero, and the basis is reduced and monic.
    pub fn verify(&self) -> bool {
        let e = &self.elements;
        for j in 0..e.len() {
            for i in 0..j {
                if !normal_form(&s_polynomial(&e[i], &e[j]), e).is_zero() {
                    return false;
                }
            }
        }
        let lms = self.leading_monomials();
        e.iter().enumerate().all(|(k, p)| {
            let monic = p.leading_term().is_some_and(|(_, c)| c.is_one());
            let reduced = p
                .terms()
                .all(|(m, _)| lms.iter().enumerate().all(|(k2, l)| k2 == k || !l.divides(m)));
            monic && reduced
        })
    }
}
