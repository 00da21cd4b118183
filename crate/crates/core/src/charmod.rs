//! Evaluations of the characteristic module: the spaces `V_{x,y}`, the
//! `Omega` membership test, and the orthogonality structure around them.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{int, rank_of, span_contains, MPoly, QMatrix, Rat, Universe};
use crate::invariants::{epsilon_family, GVector, PolFamily, PolIndex};
use crate::lie::{ElementVector, LieAlgebra};
use crate::report::{ReportDoc, Status};

/// Default seed for witness points.
pub const WITNESS_SEED: u64 = 0xC0FFEE;
/// Default height bound for witness points.
pub const WITNESS_HEIGHT: u64 = 7;
/// Pencil points `x + t y`, `t = 0..PENCIL_TRIES`, sampled for a regular element.
pub const PENCIL_TRIES: i64 = 8;

/// The maps `eps_i^(m)`, `(i, m)` in `I_0`, in the order of `I_0`.
#[derive(Clone, Debug)]
pub struct EpsBasis {
    pub indices: Vec<PolIndex>,
    pub maps: Vec<GVector>,
}

impl EpsBasis {
    pub fn new(alg: &LieAlgebra, fam: &PolFamily) -> Result<Self> {
        let (indices, maps) = epsilon_family(alg, fam)?.into_iter().unzip();
        Ok(EpsBasis { indices, maps })
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Vec<ElementVector> {
        self.maps.iter().map(|e| e.eval_xy(x, y)).collect()
    }

    /// Maps with `m > 0`.
    pub fn starred(&self) -> impl Iterator<Item = (&PolIndex, &GVector)> {
        self.indices.iter().zip(&self.maps).filter(|(ix, _)| ix.m > 0)
    }
}

/// A subspace of `g`, stored as the nonzero rows of a reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub ambient: usize,
    pub basis: Vec<ElementVector>,
}

impl SubspaceBasis {
    pub fn span(vectors: &[ElementVector], ambient: usize) -> Self {
        let basis = QMatrix::from_rows(vectors, ambient).expect("uniform length").row_space();
        SubspaceBasis { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains_space(&self, other: &SubspaceBasis) -> bool {
        span_contains(&self.basis, &other.basis, self.ambient)
    }
}

/// `V_{x,y}`: the span of all `eps_i^(m)(x, y)`.
#[allow(non_snake_case)]
pub fn eval_V(alg: &LieAlgebra, eps: &EpsBasis, x: &[Rat], y: &[Rat]) -> SubspaceBasis {
    SubspaceBasis::span(&eps.eval(x, y), alg.dim())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaOutcome {
    Member,
    NotMember,
    /// No regular element found on the sampled pencil.
    Indeterminate,
}

/// Whether some sampled point of the pencil through `x` and `y` is regular.
pub fn pencil_meets_regular(alg: &LieAlgebra, x: &[Rat], y: &[Rat]) -> bool {
    if alg.is_regular(y) {
        return true;
    }
    (0..PENCIL_TRIES).any(|t| {
        let p: ElementVector = x.iter().zip(y).map(|(a, b)| a + b * int(t)).collect();
        alg.is_regular(&p)
    })
}

/// `Omega` membership via `dim V_{x,y} = b_g`, given a regular point on the pencil.
pub fn omega_test(alg: &LieAlgebra, eps: &EpsBasis, x: &[Rat], y: &[Rat]) -> OmegaOutcome {
    if !pencil_meets_regular(alg, x, y) {
        return OmegaOutcome::Indeterminate;
    }
    if eval_V(alg, eps, x, y).dim() == alg.borel_dim() {
        OmegaOutcome::Member
    } else {
        OmegaOutcome::NotMember
    }
}

/// A certified `Omega` point drawn from the seeded stream, and the attempts used.
pub fn find_omega_witness(
    alg: &LieAlgebra,
    eps: &EpsBasis,
    seed: u64,
    height_bound: u64,
) -> Option<(ElementVector, ElementVector, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=64 {
        let x = alg.sample_with(&mut rng, height_bound);
        let y = alg.sample_with(&mut rng, height_bound);
        if omega_test(alg, eps, &x, &y) == OmegaOutcome::Member {
            return Some((x, y, attempt));
        }
    }
    None
}

fn fmt_vec(v: &[Rat]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

/// Witness JSON for a pair of points.
pub fn point_json(x: &[Rat], y: &[Rat]) -> serde_json::Value {
    json!({ "x": fmt_vec(x), "y": fmt_vec(y) })
}

fn bracket_space(alg: &LieAlgebra, z: &[Rat], v: &SubspaceBasis) -> SubspaceBasis {
    let imgs: Vec<ElementVector> = v.basis.iter().map(|b| alg.commutator(z, b)).collect();
    SubspaceBasis::span(&imgs, alg.dim())
}

/// `[x, V] ⟂ V`, `dim [x, V] = b_g - rank`, `dim V + dim [x, V] = dim g`, and
/// `[x, V] = [y, V]`, at an `Omega` point.
pub fn orthogonality_suite(alg: &LieAlgebra, eps: &EpsBasis, x: &[Rat], y: &[Rat]) -> ReportDoc {
    let claim = "[x,V] is orthogonal to V with dim [x,V] = b_g - rank = dim g - dim V, and [x,V] = [y,V]";
    let case = alg.name();
    let outcome = omega_test(alg, eps, x, y);
    if outcome != OmegaOutcome::Member {
        let mut w = point_json(x, y);
        w["omega"] = json!(format!("{outcome:?}"));
        return ReportDoc::new("charmod", &case, claim, Status::Indeterminate, w);
    }
    let v = eval_V(alg, eps, x, y);
    let xv = bracket_space(alg, x, &v);
    let yv = bracket_space(alg, y, &v);
    let mut offending = None;
    'outer: for (a, vb) in v.basis.iter().enumerate() {
        let xb = alg.commutator(x, vb);
        for (b, wb) in v.basis.iter().enumerate() {
            if !alg.pair(&xb, wb).is_zero() {
                offending = Some((a, b));
                break 'outer;
            }
        }
    }
    let same = xv.contains_space(&yv) && yv.contains_space(&xv);
    let ok = offending.is_none()
        && xv.dim() == alg.n_value()
        && v.dim() + xv.dim() == alg.dim()
        && same;
    let mut w = point_json(x, y);
    w["dim_V"] = json!(v.dim());
    w["dim_xV"] = json!(xv.dim());
    w["dim_g"] = json!(alg.dim());
    w["xV_equals_yV"] = json!(same);
    if let Some((a, b)) = offending {
        w["nonorthogonal_basis_pair"] = json!([a, b]);
    }
    ReportDoc::check("charmod", &case, claim, ok, w)
}

/// The Gram matrix of `(v, w) -> <a x + b y, [v, w]>` on a basis of `V_{x,y}`,
/// with `a`, `b` formal, must vanish.
pub fn isotropy_check(alg: &LieAlgebra, eps: &EpsBasis, x: &[Rat], y: &[Rat]) -> ReportDoc {
    let u = Universe::new(0, 2);
    let (a, b) = (MPoly::var(u, 0), MPoly::var(u, 1));
    let v = eval_V(alg, eps, x, y);
    let mut bad = None;
    for (i, vi) in v.basis.iter().enumerate() {
        for (j, vj) in v.basis.iter().enumerate() {
            let br = alg.commutator(vi, vj);
            let entry = &a.scale(&alg.pair(x, &br)) + &b.scale(&alg.pair(y, &br));
            if !entry.is_zero() && bad.is_none() {
                bad = Some((i, j, entry.to_string()));
            }
        }
    }
    let mut w = point_json(x, y);
    w["dim_V"] = json!(v.dim());
    if let Some((i, j, e)) = &bad {
        w["entry"] = json!({ "row": i, "col": j, "value": e });
    }
    ReportDoc::check(
        "charmod",
        &alg.name(),
        "V_{x,y} is totally isotropic for <ax+by,[.,.]> with a, b formal",
        bad.is_none(),
        w,
    )
}

/// `<eps_i^(m)(x, y), [x, y]>` is the zero polynomial for every `(i, m)`.
pub fn bracket_pairing_identity(alg: &LieAlgebra, eps: &EpsBasis) -> ReportDoc {
    let u = eps.maps[0].universe();
    let xy = GVector::tautological_x(u).bracket(alg, &GVector::tautological_y(u));
    let residuals: Vec<(PolIndex, MPoly)> = eps
        .indices
        .par_iter()
        .zip(eps.maps.par_iter())
        .map(|(ix, e)| (*ix, e.pair(alg, &xy)))
        .collect();
    let claim = "<eps_i^(m)(x,y), [x,y]> vanishes identically for every (i,m) in I_0";
    match residuals.iter().find(|(_, r)| !r.is_zero()) {
        Some((ix, r)) => ReportDoc::check(
            "charmod",
            &alg.name(),
            claim,
            false,
            json!({ "index": ix.to_string(), "residual": r.to_string() }),
        ),
        None => ReportDoc::check("charmod", &alg.name(), claim, true, json!({ "checked": residuals.len() })),
    }
}

/// The maps `(x, y) -> [x, eps_i^(m)(x, y)]` for `(i, m)` with `m > 0`.
pub fn c_module_generators(alg: &LieAlgebra, eps: &EpsBasis) -> Vec<(PolIndex, GVector)> {
    let u = eps.maps[0].universe();
    let x = GVector::tautological_x(u);
    eps.starred().map(|(ix, e)| (*ix, x.bracket(alg, e))).collect()
}

/// At an `Omega` point the generators of `C` have rank `n` and are orthogonal to `V_{x,y}`.
pub fn c_module_check(alg: &LieAlgebra, eps: &EpsBasis, x: &[Rat], y: &[Rat]) -> ReportDoc {
    let gens = c_module_generators(alg, eps);
    let vals: Vec<ElementVector> = gens.iter().map(|(_, g)| g.eval_xy(x, y)).collect();
    let rank = rank_of(&vals, alg.dim());
    let evs = eps.eval(x, y);
    let orthogonal = vals.iter().all(|c| evs.iter().all(|e| alg.pair(c, e).is_zero()));
    let mut w = point_json(x, y);
    w["generators"] = json!(gens.len());
    w["rank"] = json!(rank);
    w["orthogonal_to_V"] = json!(orthogonal);
    ReportDoc::check(
        "charmod",
        &alg.name(),
        "the n maps [x, eps_i^(m)], m > 0, have rank n at an Omega point and are orthogonal to V_{x,y}",
        gens.len() == alg.n_value() && rank == alg.n_value() && orthogonal,
        w,
    )
}

/// For `x`, `y` in the Borel subalgebra, every `eps_i^(m)(x, y)` lies in it.
pub fn parabolic_containment_check(alg: &LieAlgebra, eps: &EpsBasis, x: &[Rat], y: &[Rat]) -> Result<ReportDoc> {
    let neg = alg.negative_indices();
    if neg.iter().any(|&i| !x[i].is_zero() || !y[i].is_zero()) {
        return Err(Error::Contract("points must lie in the Borel subalgebra".into()));
    }
    let vals = eps.eval(x, y);
    let bad = vals.iter().position(|v| neg.iter().any(|&i| !v[i].is_zero()));
    let mut w = point_json(x, y);
    if let Some(k) = bad {
        w["index"] = json!(eps.indices[k].to_string());
        w["value"] = json!(fmt_vec(&vals[k]));
    }
    Ok(ReportDoc::check(
        "charmod",
        &alg.name(),
        "V_{x,y} is contained in the Borel subalgebra when x and y are",
        bad.is_none(),
        w,
    ))
}

/// `dim V_{x,y} <= b_g` over `samples` seeded pairs.
pub fn dimension_bound_scan(alg: &LieAlgebra, eps: &EpsBasis, samples: usize, seed: u64, height_bound: u64) -> ReportDoc {
    let dims: Vec<usize> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64 + 1);
            let x = alg.sample_with(&mut rng, height_bound);
            let y = alg.sample_with(&mut rng, height_bound);
            eval_V(alg, eps, &x, &y).dim()
        })
        .collect();
    let max = dims.iter().copied().max().unwrap_or(0);
    let at_b = dims.iter().filter(|&&d| d == alg.borel_dim()).count();
    let first_bad = dims.iter().position(|&d| d > alg.borel_dim());
    ReportDoc::check(
        "charmod",
        &alg.name(),
        "dim V_{x,y} <= b_g",
        first_bad.is_none(),
        json!({
            "samples": samples,
            "seed": seed,
            "max_dim": max,
            "b_g": alg.borel_dim(),
            "samples_at_b_g": at_b,
            "first_violation": first_bad,
        }),
    )
}

/// `V_{sx,ty} = V_{x,y}` for nonzero rational `s`, `t`.
pub fn homogeneity_check(alg: &LieAlgebra, eps: &EpsBasis, x: &[Rat], y: &[Rat], s: &Rat, t: &Rat) -> bool {
    let sx: ElementVector = x.iter().map(|c| c * s).collect();
    let ty: ElementVector = y.iter().map(|c| c * t).collect();
    eval_V(alg, eps, x, y) == eval_V(alg, eps, &sx, &ty)
}
