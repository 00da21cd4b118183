//! Sparse polynomials over the bigraded ring `k[g x g]`, optionally extended by
//! formal parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Variable layout: `x_1..x_N`, then `y_1..y_N`, then formal parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    pub block: usize,
    pub params: usize,
}

impl Universe {
    pub fn new(block: usize, params: usize) -> Self {
        Universe { block, params }
    }

    pub fn bigraded(block: usize) -> Self {
        Universe { block, params: 0 }
    }

    pub fn nvars(&self) -> usize {
        2 * self.block + self.params
    }

    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i < self.block);
        i
    }

    pub fn y(&self, i: usize) -> usize {
        debug_assert!(i < self.block);
        self.block + i
    }

    pub fn param(&self, j: usize) -> usize {
        debug_assert!(j < self.params);
        2 * self.block + j
    }

    fn var_name(&self, v: usize) -> String {
        if v < self.block {
            format!("x{}", v + 1)
        } else if v < 2 * self.block {
            format!("y{}", v - self.block + 1)
        } else {
            format!("t{}", v - 2 * self.block + 1)
        }
    }
}

/// Operation selector for [`mpoly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Scale,
}

/// Second operand of [`mpoly_arith`].
pub enum Operand<'a> {
    Poly(&'a MPoly),
    Scalar(&'a Rat),
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    universe: Universe,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(universe: Universe) -> Self {
        MPoly { universe, terms: BTreeMap::new() }
    }

    pub fn constant(universe: Universe, c: Rat) -> Self {
        let mut p = Self::zero(universe);
        p.add_term(Monomial::one(universe.nvars()), c);
        p
    }

    pub fn one(universe: Universe) -> Self {
        Self::constant(universe, Rat::one())
    }

    pub fn var(universe: Universe, v: usize) -> Self {
        Self::monomial(universe, Monomial::var(universe.nvars(), v), Rat::one())
    }

    pub fn monomial(universe: Universe, m: Monomial, c: Rat) -> Self {
        assert_eq!(m.nvars(), universe.nvars(), "monomial outside universe");
        let mut p = Self::zero(universe);
        p.add_term(m, c);
        p
    }

    /// Linear form `sum_j coeffs[j] * var(offset + j)`.
    pub fn linear(universe: Universe, offset: usize, coeffs: &[Rat]) -> Self {
        let mut p = Self::zero(universe);
        for (j, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(universe.nvars(), offset + j), c.clone());
        }
        p
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Adds `c * m` in place, pruning a cancelled coefficient.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_universe(&self, other: &MPoly) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::Structural(format!(
                "variable universe mismatch: {:?} vs {:?}",
                self.universe, other.universe
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_universe(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, &Rat::one());
        Ok(out)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_universe(other)?;
        let mut out = MPoly::zero(self.universe);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.try_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// `self += c * other`.
    pub fn add_assign_scaled(&mut self, other: &MPoly, c: &Rat) {
        assert_eq!(self.universe, other.universe, "variable universe mismatch");
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    /// `self += c * m * other`.
    pub fn add_assign_term_times(&mut self, other: &MPoly, m: &Monomial, c: &Rat) {
        assert_eq!(self.universe, other.universe, "variable universe mismatch");
        for (mo, v) in &other.terms {
            self.add_term(mo.mul(m), v * c);
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.universe);
        }
        MPoly {
            universe: self.universe,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> MPoly {
        let mut out = MPoly::zero(self.universe);
        out.add_assign_term_times(self, m, c);
        out
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `(max x-block degree, max y-block degree)`; `(0, 0)` for zero.
    pub fn bidegree(&self) -> (usize, usize) {
        let n = self.universe.block;
        let mut bd = (0, 0);
        for m in self.terms.keys() {
            bd.0 = bd.0.max(m.degree_in(0..n) as usize);
            bd.1 = bd.1.max(m.degree_in(n..2 * n) as usize);
        }
        bd
    }

    /// True iff every term has exactly the given bidegree (zero qualifies).
    pub fn is_bihomogeneous(&self, bd: (usize, usize)) -> bool {
        let n = self.universe.block;
        self.terms.keys().all(|m| {
            m.degree_in(0..n) as usize == bd.0 && m.degree_in(n..2 * n) as usize == bd.1
        })
    }

    /// The common total degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True iff no term involves a variable outside `range`.
    pub fn supported_in(&self, range: std::ops::Range<usize>) -> bool {
        self.terms.keys().all(|m| m.support().all(|v| range.contains(&v)))
    }

    pub fn derivative(&self, v: usize) -> MPoly {
        let mut out = MPoly::zero(self.universe);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut md = m.clone();
            md.exps_mut()[v] -= 1;
            out.add_term(md, c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Evaluates at a point with one coordinate per variable.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.universe.nvars(), "point length");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Composition: replaces variable `v` by `images[v]` (all in one target universe).
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.universe.nvars(), "substitution length");
        let target = images.first().map(|p| p.universe).unwrap_or(self.universe);
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[v].len() <= e {
                    let next = &powers[v][powers[v].len() - 1] * &images[v];
                    powers[v].push(next);
                }
                t = &t * &powers[v][e];
            }
            out.add_assign_scaled(&t, &Rat::one());
        }
        out
    }

    /// Splits by the exponent of `v`: entry `k` is the coefficient of `var^k`,
    /// with `v` removed from its monomials.
    pub fn coefficients_in(&self, v: usize) -> Vec<MPoly> {
        let mut out: Vec<MPoly> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while out.len() <= e {
                out.push(MPoly::zero(self.universe));
            }
            let mut mm = m.clone();
            mm.exps_mut()[v] = 0;
            out[e].add_term(mm, c.clone());
        }
        out
    }

    /// Drops every term whose monomial involves a variable in `vars`.
    pub fn set_zero(&self, vars: &[usize]) -> MPoly {
        MPoly {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-embeds into a universe with the same block size and at least as many
    /// parameters, or drops parameters that do not occur.
    pub fn with_universe(&self, target: Universe) -> Result<MPoly> {
        if target.block != self.universe.block {
            return Err(Error::Structural("block sizes differ".into()));
        }
        let keep = 2 * target.block + target.params.min(self.universe.params);
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            if m.exps()[keep..].iter().any(|&e| e > 0) {
                return Err(Error::Structural("parameter in use cannot be dropped".into()));
            }
            let mut e = vec![0u8; target.nvars()];
            e[..keep].copy_from_slice(&m.exps()[..keep]);
            out.add_term(Monomial::from_exps(&e), c.clone());
        }
        Ok(out)
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> MPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if self.universe != d.universe {
            return None;
        }
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.universe);
        while let Some((m, c)) = rem.leading_term() {
            let qm = dm.quotient_of(m)?;
            let qc = c / &dc;
            rem.add_assign_term_times(d, &qm, &-qc.clone());
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let factors: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = self.universe.var_name(v);
                    if e == 1 { name } else { format!("{name}^{e}") }
                })
                .collect();
            match (abs.is_one(), factors.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", factors.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Rat::one());
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("polynomial product")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

/// Checked arithmetic entry point: sum or product of two polynomials, or a scalar multiple.
pub fn mpoly_arith(op: ArithOp, p: &MPoly, q: Operand<'_>) -> Result<MPoly> {
    match (op, q) {
        (ArithOp::Add, Operand::Poly(q)) => p.try_add(q),
        (ArithOp::Mul, Operand::Poly(q)) => p.try_mul(q),
        (ArithOp::Scale, Operand::Scalar(c)) => Ok(p.scale(c)),
        (ArithOp::Add | ArithOp::Mul, Operand::Scalar(c)) => {
            let cp = MPoly::constant(p.universe(), c.clone());
            if op == ArithOp::Add { p.try_add(&cp) } else { p.try_mul(&cp) }
        }
        (ArithOp::Scale, Operand::Poly(_)) => {
            Err(Error::Structural("scale expects a scalar operand".into()))
        }
    }
}
