//! Invariant polynomials, their differentials and polarizations, and the
//! Lie-Poisson bracket.

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{int, MPoly, Monomial, Rat, Universe};
use crate::lie::{ElementVector, LieAlgebra, Series};
use crate::report::ReportDoc;

/// A polynomial map `g x g -> g`, one coefficient per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct GVector {
    pub coeffs: Vec<MPoly>,
    pub bidegree: (usize, usize),
}

impl GVector {
    pub fn new(coeffs: Vec<MPoly>, bidegree: (usize, usize)) -> Result<Self> {
        if let Some(bad) = coeffs.iter().position(|c| !c.is_bihomogeneous(bidegree)) {
            return Err(Error::Contract(format!(
                "coefficient {bad} is not bihomogeneous of bidegree {bidegree:?}"
            )));
        }
        Ok(GVector { coeffs, bidegree })
    }

    /// The identity map `(x, y) -> x`.
    pub fn tautological_x(u: Universe) -> Self {
        GVector { coeffs: (0..u.block).map(|j| MPoly::var(u, u.x(j))).collect(), bidegree: (1, 0) }
    }

    /// The projection `(x, y) -> y`.
    pub fn tautological_y(u: Universe) -> Self {
        GVector { coeffs: (0..u.block).map(|j| MPoly::var(u, u.y(j))).collect(), bidegree: (0, 1) }
    }

    pub fn universe(&self) -> Universe {
        self.coeffs[0].universe()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_zero)
    }

    /// Value at a full variable assignment.
    pub fn eval(&self, point: &[Rat]) -> ElementVector {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }

    /// Value at `(x, y)` for a universe without parameters.
    pub fn eval_xy(&self, x: &[Rat], y: &[Rat]) -> ElementVector {
        let point: Vec<Rat> = x.iter().chain(y).cloned().collect();
        self.eval(&point)
    }

    /// Pointwise bracket `[self, other]`.
    pub fn bracket(&self, alg: &LieAlgebra, other: &GVector) -> GVector {
        let u = self.universe();
        let mut out = vec![MPoly::zero(u); alg.dim()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() || alg.structure(i, j).is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in alg.structure(i, j) {
                    out[*k].add_assign_scaled(&ab, c);
                }
            }
        }
        GVector {
            coeffs: out,
            bidegree: (self.bidegree.0 + other.bidegree.0, self.bidegree.1 + other.bidegree.1),
        }
    }

    /// Pointwise pairing `<self, other>`.
    pub fn pair(&self, alg: &LieAlgebra, other: &GVector) -> MPoly {
        let mut out = MPoly::zero(self.universe());
        let f = alg.form();
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let fij = f.get(i, j);
                if !fij.is_zero() && !a.is_zero() && !b.is_zero() {
                    out.add_assign_scaled(&(a * b), fij);
                }
            }
        }
        out
    }

    /// Pairing with a constant element.
    pub fn pair_const(&self, alg: &LieAlgebra, v: &[Rat]) -> MPoly {
        let fv = alg.form().mul_vec(v);
        let mut out = MPoly::zero(self.universe());
        for (a, c) in self.coeffs.iter().zip(&fv) {
            out.add_assign_scaled(a, c);
        }
        out
    }
}

/// An index `(i, m)` of a polarized invariant: `i` counts generators from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolIndex {
    pub i: usize,
    pub m: usize,
}

impl std::fmt::Display for PolIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.i, self.m)
    }
}

/// Homogeneous generators of the invariant polynomials on `g`.
#[derive(Clone, Debug)]
pub struct PolFamily {
    pub generators: Vec<MPoly>,
    pub degrees: Vec<usize>,
}

impl PolFamily {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `I_0 = {(i, m) : 0 <= m < d_i}`, ordered by `i` then `m`.
    pub fn i0(&self) -> Vec<PolIndex> {
        self.degrees
            .iter()
            .enumerate()
            .flat_map(|(i, &d)| (0..d).map(move |m| PolIndex { i: i + 1, m }))
            .collect()
    }

    /// The indices of `I_0` with `m > 0`.
    pub fn i_star0(&self) -> Vec<PolIndex> {
        self.i0().into_iter().filter(|p| p.m > 0).collect()
    }

    pub fn generator(&self, i: usize) -> &MPoly {
        &self.generators[i - 1]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }
}

/// The symbolic element `X = sum_j x_j B_j` of the defining representation.
fn symbolic_matrix(alg: &LieAlgebra, u: Universe) -> Vec<Vec<MPoly>> {
    let n = alg.rank() + 1;
    let mut m = vec![vec![MPoly::zero(u); n]; n];
    for j in 0..alg.dim() {
        let bm = alg.to_matrix(&alg.basis_vector(j));
        for (r, row) in m.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                let v = bm.get(r, c);
                if !v.is_zero() {
                    entry.add_term(Monomial::var(u.nvars(), u.x(j)), v.clone());
                }
            }
        }
    }
    m
}

/// Coefficients `c_0..c_n` of `det(lambda - X)` by Faddeev-LeVerrier.
fn characteristic_coefficients(m: &[Vec<MPoly>], u: Universe) -> Vec<MPoly> {
    let n = m.len();
    let mut c = vec![MPoly::zero(u); n + 1];
    c[n] = MPoly::one(u);
    let mut mk = vec![vec![MPoly::zero(u); n]; n];
    for k in 1..=n {
        // M_k = X M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![MPoly::zero(u); n]; n];
        for r in 0..n {
            for s in 0..n {
                let mut acc = MPoly::zero(u);
                for t in 0..n {
                    if !m[r][t].is_zero() && !mk[t][s].is_zero() {
                        acc = &acc + &(&m[r][t] * &mk[t][s]);
                    }
                }
                if r == s {
                    acc = &acc + &c[n - k + 1];
                }
                next[r][s] = acc;
            }
        }
        mk = next;
        let mut tr = MPoly::zero(u);
        for r in 0..n {
            for t in 0..n {
                if !m[r][t].is_zero() && !mk[t][r].is_zero() {
                    tr = &tr + &(&m[r][t] * &mk[t][r]);
                }
            }
        }
        c[n - k] = tr.scale(&(-Rat::one() / int(k as i64)));
    }
    c
}

/// Characteristic-polynomial generators `p_1, .., p_rank` of degrees `2, .., rank+1`.
///
/// `p_i = (-1)^i` times the coefficient of `lambda^(rank-i)` in `det(lambda - X)`,
/// which gives `a^2 + bc` on `sl2`. Ad-invariance is verified before returning.
pub fn invariant_generators(alg: &LieAlgebra) -> Result<PolFamily> {
    if alg.series() != Series::A {
        return Err(Error::Capability(format!("no invariant generators for {}", alg.name())));
    }
    let u = Universe::bigraded(alg.dim());
    let x = symbolic_matrix(alg, u);
    let c = characteristic_coefficients(&x, u);
    let n = alg.rank() + 1;
    let mut generators = Vec::new();
    for i in 1..n {
        let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
        generators.push(c[n - 1 - i].scale(&sign));
    }
    let fam = PolFamily { generators, degrees: alg.degrees().to_vec() };
    for (i, p) in fam.generators.iter().enumerate() {
        if p.homogeneous_degree() != Some(fam.degrees[i] as u32) {
            return Err(Error::Structural(format!("generator {} has the wrong degree", i + 1)));
        }
        for v in 0..alg.dim() {
            let r = ad_derivative(alg, p, v);
            if !r.is_zero() {
                return Err(Error::Structural(format!(
                    "generator {} is not invariant along basis {v}: {r}",
                    i + 1
                )));
            }
        }
    }
    Ok(fam)
}

/// `sum_j dp/dx_j * ([e_v, x])_j`, the derivative of `p` along `ad e_v`.
pub fn ad_derivative(alg: &LieAlgebra, p: &MPoly, v: usize) -> MPoly {
    let u = p.universe();
    let mut out = MPoly::zero(u);
    let mut comps = vec![MPoly::zero(u); alg.dim()];
    for k in 0..alg.dim() {
        for (j, c) in alg.structure(v, k) {
            comps[*j].add_term(Monomial::var(u.nvars(), u.x(k)), c.clone());
        }
    }
    for (j, comp) in comps.iter().enumerate() {
        if comp.is_zero() {
            continue;
        }
        let d = p.derivative(u.x(j));
        if !d.is_zero() {
            out = &out + &(&d * comp);
        }
    }
    out
}

/// Form-dual of the x-gradient: the vector field `F^{-1} d_x f`.
pub fn gradient(alg: &LieAlgebra, f: &MPoly) -> Vec<MPoly> {
    let u = f.universe();
    let partials: Vec<MPoly> = (0..alg.dim()).map(|j| f.derivative(u.x(j))).collect();
    let finv = alg.form_inverse();
    (0..alg.dim())
        .map(|k| {
            let mut acc = MPoly::zero(u);
            for (j, pj) in partials.iter().enumerate() {
                let c = finv.get(k, j);
                if !c.is_zero() {
                    acc.add_assign_scaled(pj, c);
                }
            }
            acc
        })
        .collect()
}

/// Coefficients of `t^m` in `p(x + t y)`.
pub fn polarize_scalar(p: &MPoly) -> Result<Vec<MPoly>> {
    let u = p.universe();
    let n = u.block;
    if !p.supported_in(0..n) {
        return Err(Error::Contract("polarization input must depend on the x-block only".into()));
    }
    let d = match p.homogeneous_degree() {
        Some(d) => d as usize,
        None if p.is_zero() => 0,
        None => return Err(Error::Contract("polarization input is not homogeneous".into())),
    };
    polarize_homogeneous(p, d)
}

fn polarize_homogeneous(p: &MPoly, d: usize) -> Result<Vec<MPoly>> {
    let u = p.universe();
    let n = u.block;
    let mut out = vec![MPoly::zero(u); d + 1];
    for (mono, c) in p.terms() {
        let a = &mono.exps()[..n];
        // Expand prod_j (x_j + t y_j)^{a_j}: choose k_j <= a_j shifted to y_j.
        let mut stack: Vec<(usize, Vec<u8>, Rat)> = vec![(0, vec![0u8; u.nvars()], c.clone())];
        while let Some((j, exps, coef)) = stack.pop() {
            if j == n {
                let m: usize = exps[n..2 * n].iter().map(|&e| e as usize).sum();
                out[m].add_term(Monomial::from_exps(&exps), coef);
                continue;
            }
            for k in 0..=a[j] {
                let mut e = exps.clone();
                e[j] = a[j] - k;
                e[n + j] = k;
                let b = Rat::from_integer(crate::exact::rat::binomial(a[j] as u64, k as u64));
                stack.push((j + 1, e, &coef * b));
            }
        }
    }
    Ok(out)
}

/// `p(x + t y) - sum_m t^m pols[m]` computed by substitution with a formal `t`.
pub fn polarization_residual(p: &MPoly, pols: &[MPoly]) -> MPoly {
    let u = p.universe();
    let ut = Universe::new(u.block, u.params + 1);
    let t = MPoly::var(ut, ut.param(u.params));
    let images: Vec<MPoly> = (0..u.nvars())
        .map(|v| {
            let base = MPoly::var(ut, v);
            if v < u.block {
                &base + &(&t * &MPoly::var(ut, ut.y(v)))
            } else {
                base
            }
        })
        .collect();
    let mut r = p.substitute(&images);
    let mut tpow = MPoly::one(ut);
    for q in pols {
        let qe = q.with_universe(ut).expect("same block");
        r = &r - &(&qe * &tpow);
        tpow = &tpow * &t;
    }
    r
}

/// `eps_i = F^{-1} grad p_i`, homogeneous of degree `d_i - 1` in `x`.
pub fn epsilon(alg: &LieAlgebra, fam: &PolFamily, i: usize) -> Result<GVector> {
    if i == 0 || i > fam.rank() {
        return Err(Error::Contract(format!("generator index {i} out of range")));
    }
    let d = fam.degree(i);
    GVector::new(gradient(alg, fam.generator(i)), (d - 1, 0))
}

/// `eps_i^(m)`: the `t^m` coefficient of `eps_i(x + t y)`.
pub fn epsilon_polarized(alg: &LieAlgebra, fam: &PolFamily, i: usize, m: usize) -> Result<GVector> {
    if i == 0 || i > fam.rank() || m >= fam.degree(i) {
        return Err(Error::Contract(format!("({i},{m}) is not in I_0")));
    }
    let e = epsilon(alg, fam, i)?;
    let d = fam.degree(i) - 1;
    let coeffs = e
        .coeffs
        .iter()
        .map(|c| Ok(polarize_homogeneous(c, d)?.swap_remove(m)))
        .collect::<Result<Vec<_>>>()?;
    GVector::new(coeffs, (d - m, m))
}

/// All `eps_i^(m)` in the order of `I_0`.
pub fn epsilon_family(alg: &LieAlgebra, fam: &PolFamily) -> Result<Vec<(PolIndex, GVector)>> {
    fam.i0()
        .into_iter()
        .map(|ix| Ok((ix, epsilon_polarized(alg, fam, ix.i, ix.m)?)))
        .collect()
}

/// Lie-Poisson bracket `{f, g}(x) = <x, [grad f, grad g]>`, differentiating in the
/// x-block and treating every other variable as a constant.
pub fn poisson_bracket_x(alg: &LieAlgebra, f: &MPoly, g: &MPoly) -> MPoly {
    let u = f.universe();
    let gf = gradient(alg, f);
    let gg = gradient(alg, g);
    // <x, e_c> as linear forms.
    let fx: Vec<MPoly> = (0..alg.dim())
        .map(|c| {
            let mut l = MPoly::zero(u);
            for j in 0..alg.dim() {
                let v = alg.form().get(c, j);
                if !v.is_zero() {
                    l.add_term(Monomial::var(u.nvars(), u.x(j)), v.clone());
                }
            }
            l
        })
        .collect();
    let mut out = MPoly::zero(u);
    for (a, fa) in gf.iter().enumerate() {
        if fa.is_zero() {
            continue;
        }
        for (b, gb) in gg.iter().enumerate() {
            if gb.is_zero() || alg.structure(a, b).is_empty() {
                continue;
            }
            let mut lin = MPoly::zero(u);
            for (c, s) in alg.structure(a, b) {
                lin.add_assign_scaled(&fx[*c], s);
            }
            out = &out + &(&(fa * gb) * &lin);
        }
    }
    out
}

/// Lie-Poisson bracket of two functions on `g`.
pub fn poisson_bracket(alg: &LieAlgebra, f: &MPoly, g: &MPoly) -> Result<MPoly> {
    let n = f.universe().block;
    if n != alg.dim() || !f.supported_in(0..n) || !g.supported_in(0..n) {
        return Err(Error::Contract("Poisson bracket inputs must live on the x-block".into()));
    }
    Ok(poisson_bracket_x(alg, f, g))
}

/// Verifies that the shifted invariants `p_i^(m)(., y)` pairwise Poisson-commute
/// with `y` a formal parameter.
pub fn mf_commutativity_check(alg: &LieAlgebra, fam: &PolFamily) -> Result<ReportDoc> {
    let mut shifted = Vec::new();
    for (i, p) in fam.generators.iter().enumerate() {
        let pols = polarize_scalar(p)?;
        for (m, q) in pols.into_iter().enumerate().take(fam.degrees[i]) {
            shifted.push((PolIndex { i: i + 1, m }, q));
        }
    }
    let pairs: Vec<(usize, usize)> =
        (0..shifted.len()).flat_map(|a| (a + 1..shifted.len()).map(move |b| (a, b))).collect();
    use rayon::prelude::*;
    let residuals: Vec<MPoly> = pairs
        .par_iter()
        .map(|&(a, b)| poisson_bracket_x(alg, &shifted[a].1, &shifted[b].1))
        .collect();
    let claim = "shifted invariants p_i^(m)(., y) pairwise Poisson-commute";
    let case = alg.name();
    if let Some(k) = residuals.iter().position(|r| !r.is_zero()) {
        let (a, b) = pairs[k];
        return Ok(ReportDoc::check(
            "poisson",
            &case,
            claim,
            false,
            json!({
                "pair": [shifted[a].0.to_string(), shifted[b].0.to_string()],
                "residual": residuals[k].to_string(),
            }),
        ));
    }
    Ok(ReportDoc::check(
        "poisson",
        &case,
        claim,
        true,
        json!({ "functions": shifted.len(), "pairs": pairs.len() }),
    ))
}

/// Checks that `alpha(eps_i(x))` restricted to the Cartan subalgebra is divisible
/// by `alpha(x)`, with quotient homogeneous of degree `d_i - 2`.
///
/// `root` indexes [`LieAlgebra::positive_roots`].
pub fn root_divisibility_check(alg: &LieAlgebra, fam: &PolFamily, i: usize, root: usize) -> Result<ReportDoc> {
    let roots = alg.positive_roots();
    let alpha = roots
        .get(root)
        .ok_or_else(|| Error::Contract(format!("root index {root} out of range")))?;
    let eps = epsilon(alg, fam, i)?;
    let u = eps.universe();
    let cartan = alg.cartan_indices();
    let off_cartan: Vec<usize> = (0..alg.dim()).filter(|j| !cartan.contains(j)).map(|j| u.x(j)).collect();
    let restricted: Vec<MPoly> = eps.coeffs.iter().map(|c| c.set_zero(&off_cartan)).collect();
    let mut lhs = MPoly::zero(u);
    let mut divisor = MPoly::zero(u);
    for (s, &h) in cartan.iter().enumerate() {
        lhs.add_assign_scaled(&restricted[h], &alpha.on_coroots[s]);
        divisor.add_term(Monomial::var(u.nvars(), u.x(h)), alpha.on_coroots[s].clone());
    }
    let stray = (0..alg.dim()).filter(|j| !cartan.contains(j)).any(|j| !restricted[j].is_zero());
    let quotient = lhs.div_exact(&divisor);
    let expected = fam.degree(i) as u32 - 2;
    let ok = !stray
        && matches!(&quotient, Some(q) if !q.is_zero() && q.homogeneous_degree() == Some(expected));
    Ok(ReportDoc::check(
        "invariants",
        &format!("{}/eps{i}/root{}", alg.name(), alg.labels()[alpha.vector]),
        "alpha(eps_i(x)) on the Cartan subalgebra is alpha(x) times a form of degree d_i - 2",
        ok,
        json!({
            "restricted": lhs.to_string(),
            "divisor": divisor.to_string(),
            "quotient": quotient.map(|q| q.to_string()),
            "expected_quotient_degree": expected,
        }),
    ))
}
