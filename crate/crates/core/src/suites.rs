//! One entry point per command-line subcommand. Each returns the report
//! documents of its suite in a fixed order.

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::charmod::{
    bracket_pairing_identity, c_module_check, dimension_bound_scan, find_omega_witness, homogeneity_check,
    isotropy_check, orthogonality_suite, parabolic_containment_check, point_json,
};
use crate::combinatorics::{combinatorics_suite, ScanBounds};
use crate::complexes::{c_complex_checks, property_p_check, vector_space_suite, AlgebraContext};
use crate::config::SuiteConfig;
use crate::error::{Error, Result};
use crate::exact::{int, Rat};
use crate::invariants::{ad_derivative, mf_commutativity_check, polarization_residual, polarize_scalar, root_divisibility_check};
use crate::lie::{build_simple, LieAlgebra};
use crate::report::{ReportDoc, Status};
use crate::scheme::{
    bicone_test, commuting_groebner, hilbert_function, krull_dimension, nilpotent_test, vanishing_ideal_low_degree,
};

/// The subcommands that run a suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    AlgebraInfo,
    Invariants,
    Poisson,
    Charmod,
    Scheme,
    Complexes,
    Comb,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::AlgebraInfo,
        Suite::Invariants,
        Suite::Poisson,
        Suite::Charmod,
        Suite::Scheme,
        Suite::Complexes,
        Suite::Comb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AlgebraInfo => "algebra-info",
            Suite::Invariants => "invariants",
            Suite::Poisson => "poisson",
            Suite::Charmod => "charmod",
            Suite::Scheme => "scheme",
            Suite::Complexes => "complexes",
            Suite::Comb => "comb",
        }
    }

    pub fn enabled(self, cfg: &SuiteConfig) -> bool {
        let f = &cfg.suites;
        match self {
            Suite::AlgebraInfo => f.algebra_info,
            Suite::Invariants => f.invariants,
            Suite::Poisson => f.poisson,
            Suite::Charmod => f.charmod,
            Suite::Scheme => f.scheme,
            Suite::Complexes => f.complexes,
            Suite::Comb => f.comb,
        }
    }
}

/// Runs one suite. With `cfg.timing`, every document records the suite's wall time.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<ReportDoc>> {
    cfg.validate()?;
    let start = Instant::now();
    let mut docs = match suite {
        Suite::AlgebraInfo => algebra_info(cfg),
        Suite::Invariants => invariants(cfg),
        Suite::Poisson => poisson(cfg),
        Suite::Charmod => charmod(cfg),
        Suite::Scheme => scheme(cfg),
        Suite::Complexes => complexes(cfg),
        Suite::Comb => Ok(comb(cfg)),
    }?;
    if cfg.timing {
        let ms = start.elapsed().as_millis() as u64;
        for d in &mut docs {
            d.elapsed_ms = Some(ms);
        }
    }
    Ok(docs)
}

fn algebra(cfg: &SuiteConfig) -> Result<LieAlgebra> {
    build_simple(cfg.algebra.series, cfg.algebra.rank)
}

fn skipped(suite: &str, case: &str, claim: &str, reason: &str) -> ReportDoc {
    ReportDoc::new(suite, case, claim, Status::Skipped, json!({ "reason": reason }))
}

pub fn algebra_info(cfg: &SuiteConfig) -> Result<Vec<ReportDoc>> {
    let alg = algebra(cfg)?;
    let axioms = alg.verify_axioms();
    Ok(vec![ReportDoc::check(
        "algebra-info",
        &alg.name(),
        "structure constants satisfy antisymmetry and Jacobi, and the trace form is invariant and nondegenerate",
        axioms.is_ok(),
        json!({
            "dim": alg.dim(),
            "rank": alg.rank(),
            "b_g": alg.borel_dim(),
            "n": alg.n_value(),
            "degrees": alg.degrees(),
            "labels": alg.labels(),
            "error": axioms.err().map(|e| e.to_string()),
        }),
    )])
}

pub fn invariants(cfg: &SuiteConfig) -> Result<Vec<ReportDoc>> {
    let alg = algebra(cfg)?;
    let fam = crate::invariants::invariant_generators(&alg)?;
    let mut docs = Vec::new();
    let non_invariant: Vec<String> = fam
        .generators
        .iter()
        .enumerate()
        .flat_map(|(i, p)| (0..alg.dim()).map(move |v| (i, v, p)))
        .filter(|(_, v, p)| !ad_derivative(&alg, p, *v).is_zero())
        .map(|(i, v, _)| format!("p{} along {}", i + 1, alg.labels()[v]))
        .collect();
    docs.push(ReportDoc::check(
        "invariants",
        &format!("{}/generators", alg.name()),
        "the generators p_i are adjoint-invariant with degrees d_i summing to b_g",
        non_invariant.is_empty() && fam.degrees == alg.degrees() && fam.degrees.iter().sum::<usize>() == alg.borel_dim(),
        json!({
            "degrees": fam.degrees,
            "generators": fam.generators.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "not_invariant": non_invariant,
        }),
    ));
    let mut bad = Vec::new();
    for (i, p) in fam.generators.iter().enumerate() {
        let pols = polarize_scalar(p)?;
        if !polarization_residual(p, &pols).is_zero() {
            bad.push(i + 1);
        }
    }
    docs.push(ReportDoc::check(
        "invariants",
        &format!("{}/polarization", alg.name()),
        "p(x + t y) equals the sum of t^m p^(m)(x, y)",
        bad.is_empty(),
        json!({ "generators": fam.rank(), "failing": bad }),
    ));
    for i in 1..=fam.rank() {
        for root in 0..alg.positive_roots().len() {
            docs.push(root_divisibility_check(&alg, &fam, i, root)?);
        }
    }
    Ok(docs)
}

pub fn poisson(cfg: &SuiteConfig) -> Result<Vec<ReportDoc>> {
    let alg = algebra(cfg)?;
    let fam = crate::invariants::invariant_generators(&alg)?;
    Ok(vec![mf_commutativity_check(&alg, &fam)?])
}

pub fn charmod(cfg: &SuiteConfig) -> Result<Vec<ReportDoc>> {
    let ctx = AlgebraContext::from_algebra(algebra(cfg)?)?;
    let (alg, eps) = (&ctx.alg, &ctx.eps);
    let mut docs = vec![
        bracket_pairing_identity(alg, eps),
        dimension_bound_scan(alg, eps, cfg.samples, cfg.seed, cfg.height_bound),
    ];
    match find_omega_witness(alg, eps, cfg.seed, cfg.height_bound) {
        Some((x, y, attempts)) => {
            let mut w = point_json(&x, &y);
            w["attempts"] = json!(attempts);
            w["b_g"] = json!(alg.borel_dim());
            docs.push(ReportDoc::check(
                "charmod",
                &format!("{}/omega-witness", alg.name()),
                "a sampled pair has a regular point on its pencil and dim V_{x,y} = b_g",
                true,
                w,
            ));
            docs.push(orthogonality_suite(alg, eps, &x, &y));
            docs.push(isotropy_check(alg, eps, &x, &y));
            docs.push(c_module_check(alg, eps, &x, &y));
            let (s, t) = (int(2), Rat::new((-3).into(), 5.into()));
            docs.push(ReportDoc::check(
                "charmod",
                &format!("{}/homogeneity", alg.name()),
                "V_{sx,ty} = V_{x,y} for nonzero scalars s, t",
                homogeneity_check(alg, eps, &x, &y, &s, &t),
                json!({ "s": s.to_string(), "t": t.to_string() }),
            ));
        }
        None => docs.push(ReportDoc::new(
            "charmod",
            &format!("{}/omega-witness", alg.name()),
            "a sampled pair has a regular point on its pencil and dim V_{x,y} = b_g",
            Status::Indeterminate,
            json!({ "attempts": 64, "seed": cfg.seed }),
        )),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let bx = alg.sample_borel_with(&mut rng, cfg.height_bound);
    let by = alg.sample_borel_with(&mut rng, cfg.height_bound);
    docs.push(parabolic_containment_check(alg, eps, &bx, &by)?);
    Ok(docs)
}

pub fn scheme(cfg: &SuiteConfig) -> Result<Vec<ReportDoc>> {
    let alg = algebra(cfg)?;
    let fam = crate::invariants::invariant_generators(&alg)?;
    let name = alg.name();
    let mut docs = Vec::new();
    let gb = match commuting_groebner(&alg) {
        Ok(gb) => gb,
        Err(Error::Capability(reason)) => {
            docs.push(skipped("scheme", &format!("{name}/groebner"), "Groebner basis of I_g", &reason));
            docs.push(cones_doc(&alg, &fam));
            return Ok(docs);
        }
        Err(e) => return Err(e),
    };
    let hf: Vec<usize> = (0..=4).map(|d| hilbert_function(&gb, d)).collect::<Result<_>>()?;
    docs.push(ReportDoc::check(
        "scheme",
        &format!("{name}/groebner"),
        "the reduced Groebner basis of I_g passes S-polynomial self-verification",
        gb.verify(),
        json!({ "elements": gb.elements.len(), "hilbert_function": hf }),
    ));
    let krull = krull_dimension(&gb);
    docs.push(ReportDoc::check(
        "scheme",
        &format!("{name}/dimension"),
        "dim S/I_g = dim g + rank = 2 b_g",
        krull == 2 * alg.borel_dim() && krull == alg.dim() + alg.rank(),
        json!({ "krull_dimension": krull, "b_g": alg.borel_dim() }),
    ));
    let max_d = if alg.rank() == 1 { 4 } else { 2 };
    let rows = vanishing_ideal_low_degree(&alg, max_d, None, cfg.seed)?;
    docs.push(ReportDoc::check(
        "scheme",
        &format!("{name}/vanishing-ideal"),
        "forms vanishing on sampled points of C(g) have the dimension of I_g in each degree",
        rows.iter().all(|r| r.agrees()),
        json!({ "degrees": rows }),
    ));
    docs.push(cones_doc(&alg, &fam));
    Ok(docs)
}

/// Membership of sample points in the nilpotent cone and the nilpotent bicone.
fn cones_doc(alg: &LieAlgebra, fam: &crate::invariants::PolFamily) -> ReportDoc {
    let pos = alg.positive_indices();
    let h = alg.basis_vector(alg.cartan_indices()[0]);
    let e1 = alg.basis_vector(pos[0]);
    let e2 = alg.basis_vector(*pos.last().expect("a positive root"));
    let e1_nilpotent = nilpotent_test(fam, &e1);
    let h_nilpotent = nilpotent_test(fam, &h);
    let pair_in_bicone = bicone_test(fam, &e1, &e2);
    let mixed_in_bicone = bicone_test(fam, &h, &e1);
    ReportDoc::check(
        "scheme",
        &format!("{}/cones", alg.name()),
        "root vectors are nilpotent and span bicone pencils; a Cartan element is neither",
        e1_nilpotent && !h_nilpotent && pair_in_bicone && !mixed_in_bicone,
        json!({
            "root_vector_nilpotent": e1_nilpotent,
            "cartan_nilpotent": h_nilpotent,
            "root_pair_in_bicone": pair_in_bicone,
            "cartan_root_pair_in_bicone": mixed_in_bicone,
        }),
    )
}

pub fn complexes(cfg: &SuiteConfig) -> Result<Vec<ReportDoc>> {
    let alg = algebra(cfg)?;
    let name = alg.name();
    let bound = cfg.max_total_degree;
    let mut docs = Vec::new();
    let runs_p = alg.rank() == 1 || (alg.rank() == 2 && cfg.long_running);
    if runs_p {
        let ctx = Arc::new(AlgebraContext::from_algebra(alg.clone())?);
        for k in 1..=alg.n_value().min(2) {
            docs.push(property_p_check(ctx.clone(), k, bound)?.0);
        }
        if alg.rank() == 1 {
            let gb = commuting_groebner(&alg)?;
            docs.push(c_complex_checks(ctx, &gb, bound)?.0);
        }
    } else {
        let reason = if alg.rank() == 2 {
            "rank-2 complexes run only with long_running"
        } else {
            "complexes over k[g x g] are limited to rank 2"
        };
        docs.push(skipped("complexes", &format!("{name} D_k(g,B)"), "D_k(g,B_g) cohomology outside b_g", reason));
    }
    docs.extend(vector_space_suite(4, 3)?);
    Ok(docs)
}

pub fn comb(cfg: &SuiteConfig) -> Vec<ReportDoc> {
    combinatorics_suite(ScanBounds { rc_max: cfg.rc_max, psi_max_l: cfg.psi_max_l })
}
