//! The commuting ideal, its Hilbert function and dimension, interpolation
//! evidence for radicality, and nilpotent cone and bicone membership.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use num_bigint::BigInt;

use crate::exact::modular::{rank_mod_p, rank_over_q};
use crate::exact::{bidegree_slice_basis, exponents_of_degree, MPoly, Monomial, Rat, Universe};
use crate::groebner::{groebner, GroebnerBasis, IdealPresentation, MonomialOrder};
use crate::invariants::{GVector, PolFamily};
use crate::lie::{ElementVector, LieAlgebra};

/// Degree bound for Hilbert-function queries.
pub const MAX_HILBERT_DEGREE: usize = 8;

/// Generators `<e_v, [x, y]>`, one per basis element, each of bidegree (1,1).
pub fn commuting_ideal(alg: &LieAlgebra) -> IdealPresentation {
    let u = Universe::bigraded(alg.dim());
    let xy = GVector::tautological_x(u).bracket(alg, &GVector::tautological_y(u));
    let gens = (0..alg.dim()).map(|v| xy.pair_const(alg, &alg.basis_vector(v))).collect();
    IdealPresentation::new(gens, u).expect("generators share the universe")
}

/// Reduced Groebner basis of the commuting ideal.
pub fn commuting_groebner(alg: &LieAlgebra) -> Result<GroebnerBasis> {
    groebner(&commuting_ideal(alg), MonomialOrder::Degrevlex)
}

fn is_standard(m: &Monomial, lms: &[Monomial]) -> bool {
    lms.iter().all(|l| !l.divides(m))
}

/// Number of standard monomials of degree `d`.
pub fn hilbert_function(gb: &GroebnerBasis, d: usize) -> Result<usize> {
    if d > MAX_HILBERT_DEGREE {
        return Err(Error::Capability(format!("Hilbert degree {d} exceeds {MAX_HILBERT_DEGREE}")));
    }
    let lms = gb.leading_monomials();
    Ok(exponents_of_degree(gb.universe.nvars(), d)
        .iter()
        .filter(|e| is_standard(&Monomial::from_exps(e), &lms))
        .count())
}

/// Number of standard monomials of bidegree `(p, q)`.
pub fn hilbert_function_bigraded(gb: &GroebnerBasis, bd: (usize, usize)) -> Result<usize> {
    if bd.0 + bd.1 > MAX_HILBERT_DEGREE || gb.universe.params != 0 {
        return Err(Error::Capability("bigraded Hilbert query outside the supported range".into()));
    }
    let lms = gb.leading_monomials();
    Ok(bidegree_slice_basis(gb.universe.block, bd)
        .iter()
        .filter(|m| is_standard(m, &lms))
        .count())
}

/// `dim I_(p,q)`: all monomials of the bidegree minus the standard ones.
pub fn ideal_dimension_bigraded(gb: &GroebnerBasis, bd: (usize, usize)) -> Result<usize> {
    let total = bidegree_slice_basis(gb.universe.block, bd).len();
    Ok(total - hilbert_function_bigraded(gb, bd)?)
}

/// Krull dimension of the quotient: the size of a largest set of variables
/// containing the support of no leading monomial.
pub fn krull_dimension(gb: &GroebnerBasis) -> usize {
    let n = gb.universe.nvars();
    let masks: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    (0u32..(1u32 << n))
        .filter(|s| masks.iter().all(|&lm| lm & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A point `(x, y)` of the commuting variety: `x` regular, `y` a rational
/// combination of a centralizer basis of `x`, both scaled to integer coordinates.
pub fn sample_commuting_pair(alg: &LieAlgebra, rng: &mut impl Rng, height_bound: u64) -> (ElementVector, ElementVector) {
    let x = loop {
        let x = alg.sample_with(rng, height_bound);
        if alg.is_regular(&x) {
            break x;
        }
    };
    let kernel = alg.centralizer(&x);
    let h = height_bound as i64;
    let mut y = vec![Rat::zero(); alg.dim()];
    for k in &kernel {
        let c = Rat::new(rng.gen_range(-h..=h).into(), rng.gen_range(1..=h).into());
        for (yi, ki) in y.iter_mut().zip(k) {
            *yi += &c * ki;
        }
    }
    let t = Rat::new(rng.gen_range(1..=h).into(), rng.gen_range(1..=h).into());
    let y: ElementVector = y.iter().map(|v| v * &t).collect();
    (integral(&x), integral(&y))
}

fn integral(v: &[Rat]) -> ElementVector {
    let scale = Rat::from_integer(crate::exact::rat::common_denominator(v));
    v.iter().map(|c| c * &scale).collect()
}

/// Per-degree comparison between the interpolated vanishing ideal of the
/// commuting variety and the commuting ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingDegree {
    pub degree: usize,
    pub monomials: usize,
    pub samples: usize,
    pub interpolated: usize,
    pub ideal: usize,
    /// Rank on the first half of the samples already equals the full rank.
    pub stable: bool,
    /// Every Groebner element of this degree vanishes at every sample.
    pub basis_vanishes: bool,
}

impl VanishingDegree {
    pub fn agrees(&self) -> bool {
        self.stable && self.basis_vanishes && self.interpolated == self.ideal
    }
}

/// For each degree `0..=d`: the dimension of degree-`e` forms vanishing on
/// sampled points of `C(g)` against `dim (I_g)_e` from the Groebner basis.
pub fn vanishing_ideal_low_degree(
    alg: &LieAlgebra,
    d: usize,
    sample_count: Option<usize>,
    seed: u64,
) -> Result<Vec<VanishingDegree>> {
    if alg.rank() > 2 || d > 4 {
        return Err(Error::Capability("interpolation supports rank <= 2 and degree <= 4".into()));
    }
    let gb = commuting_groebner(alg)?;
    let nv = 2 * alg.dim();
    let max_monomials = exponents_of_degree(nv, d).len();
    let samples = sample_count.unwrap_or(2 * max_monomials + 2);
    let points: Vec<Vec<BigInt>> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64 + 1);
            let (x, y) = sample_commuting_pair(alg, &mut rng, 5);
            x.iter().chain(&y).map(|c| c.to_integer()).collect()
        })
        .collect();
    let mut out = Vec::new();
    for e in 0..=d {
        let monos: Vec<Monomial> = exponents_of_degree(nv, e).iter().map(|m| Monomial::from_exps(m)).collect();
        let rows: Vec<Vec<BigInt>> = points
            .par_iter()
            .map(|p| monos.iter().map(|m| eval_monomial(m, p)).collect())
            .collect();
        let half = samples / 2;
        let ideal = monos.len() - hilbert_function(&gb, e)?;
        // rank_p <= rank_Q <= monomials - ideal; equality of the outer bounds settles rank_Q.
        let certified = |r: &[Vec<BigInt>]| {
            let rp = rank_mod_p(r);
            if monos.len() - rp == ideal { rp } else { rank_over_q(r) }
        };
        let rank_all = certified(&rows);
        let rank_half = if rank_mod_p(&rows[..half]) == rank_all { rank_all } else { rank_over_q(&rows[..half]) };
        let basis_vanishes = gb
            .elements
            .iter()
            .filter(|g| g.homogeneous_degree() == Some(e as u32))
            .all(|g| {
                points.iter().all(|p| {
                    let q: Vec<Rat> = p.iter().map(|c| Rat::from_integer(c.clone())).collect();
                    g.eval(&q).is_zero()
                })
            });
        out.push(VanishingDegree {
            degree: e,
            monomials: monos.len(),
            samples,
            interpolated: monos.len() - rank_all,
            ideal,
            stable: rank_half == rank_all,
            basis_vanishes,
        });
    }
    Ok(out)
}

fn eval_monomial(m: &Monomial, p: &[BigInt]) -> BigInt {
    let mut acc = BigInt::one();
    for (v, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            acc *= num_traits::pow(p[v].clone(), e as usize);
        }
    }
    acc
}

/// All invariant generators vanish at `x`.
pub fn nilpotent_test(fam: &PolFamily, x: &[Rat]) -> bool {
    let zero = vec![Rat::zero(); x.len()];
    let point: Vec<Rat> = x.iter().chain(&zero).cloned().collect();
    fam.generators.iter().all(|p| p.eval(&point).is_zero())
}

/// Every `p_i(a x + b y)` vanishes as a polynomial in formal `a`, `b`.
pub fn bicone_test(fam: &PolFamily, x: &[Rat], y: &[Rat]) -> bool {
    let u = Universe::new(0, 2);
    let (a, b) = (MPoly::var(u, 0), MPoly::var(u, 1));
    let n = x.len();
    let mut images: Vec<MPoly> = (0..n).map(|j| &a.scale(&x[j]) + &b.scale(&y[j])).collect();
    images.extend((0..n).map(|_| MPoly::zero(u)));
    fam.generators.iter().all(|p| p.substitute(&images).is_zero())
}
