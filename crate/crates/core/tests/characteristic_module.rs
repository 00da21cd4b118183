use commvar::charmod::*;
use commvar::exact::{rat, Rat, Universe};
use commvar::invariants::{invariant_generators, GVector};
use commvar::lie::*;
use commvar::report::Status;
use num_traits::Zero;
use rand::SeedableRng;

fn setup(r: usize) -> (LieAlgebra, EpsBasis) {
    let g = build_simple(Series::A, r).unwrap();
    let fam = invariant_generators(&g).unwrap();
    let eps = EpsBasis::new(&g, &fam).unwrap();
    (g, eps)
}

#[test]
fn sl2_spaces() {
    let (g, eps) = setup(1);
    assert_eq!(eps.len(), 2);
    let x = g.element(&[("e", 1), ("f", 1)]);
    let h = g.element(&[("h", 1)]);
    assert_eq!(eval_V(&g, &eps, &x, &h).dim(), 2);
    let zero = vec![Rat::zero(); 3];
    assert_eq!(eval_V(&g, &eps, &zero, &zero).dim(), 0);
    let e = g.element(&[("e", 1)]);
    let e2 = g.element(&[("e", 2)]);
    assert_eq!(eval_V(&g, &eps, &e, &e2).dim(), 1);
}

#[test]
fn sl2_omega() {
    let (g, eps) = setup(1);
    let (e, f, h) = (g.element(&[("e", 1)]), g.element(&[("f", 1)]), g.element(&[("h", 1)]));
    let epf = g.element(&[("e", 1), ("f", 1)]);
    assert_eq!(omega_test(&g, &eps, &epf, &h), OmegaOutcome::Member);
    assert_eq!(omega_test(&g, &eps, &e, &g.element(&[("e", 2)])), OmegaOutcome::NotMember);
    assert_eq!(omega_test(&g, &eps, &h, &e), OmegaOutcome::Member);
    let zero = vec![Rat::zero(); 3];
    assert_eq!(omega_test(&g, &eps, &zero, &zero), OmegaOutcome::Indeterminate);
    let _ = f;
}

#[test]
fn sl2_orthogonality_at_e_plus_f_h() {
    let (g, eps) = setup(1);
    let x = g.element(&[("e", 1), ("f", 1)]);
    let y = g.element(&[("h", 1)]);
    let doc = orthogonality_suite(&g, &eps, &x, &y);
    assert!(doc.passed(), "{doc:?}");
    assert_eq!(doc.witness["dim_xV"], 1);
    assert_eq!(doc.witness["dim_V"], 2);
}

#[test]
fn degenerate_pair_is_indeterminate() {
    let (g, eps) = setup(1);
    let x = g.element(&[("h", 1)]);
    let doc = orthogonality_suite(&g, &eps, &x, &vec![Rat::zero(); 3]);
    assert_eq!(doc.status, Status::Indeterminate);
}

#[test]
fn sl3_witness_suites() {
    let (g, eps) = setup(2);
    let (x, y, _) = find_omega_witness(&g, &eps, WITNESS_SEED, WITNESS_HEIGHT).unwrap();
    let doc = orthogonality_suite(&g, &eps, &x, &y);
    assert!(doc.passed(), "{doc:?}");
    assert_eq!((doc.witness["dim_V"].as_u64(), doc.witness["dim_xV"].as_u64()), (Some(5), Some(3)));
    assert!(isotropy_check(&g, &eps, &x, &y).passed());
    let c = c_module_check(&g, &eps, &x, &y);
    assert!(c.passed());
    assert_eq!(c.witness["rank"], 3);
    assert!(homogeneity_check(&g, &eps, &x, &y, &rat(-2, 3), &rat(5, 1)));
}

#[test]
fn isotropy_sl2_and_colinear() {
    let (g, eps) = setup(1);
    let x = g.element(&[("e", 1), ("f", 1)]);
    let y = g.element(&[("h", 1)]);
    assert!(isotropy_check(&g, &eps, &x, &y).passed());
    assert!(isotropy_check(&g, &eps, &x, &x).passed());
}

#[test]
fn bracket_pairing_vanishes() {
    for r in 1..=2 {
        let (g, eps) = setup(r);
        let doc = bracket_pairing_identity(&g, &eps);
        assert!(doc.passed());
        assert_eq!(doc.witness["checked"].as_u64(), Some(g.borel_dim() as u64));
    }
}

#[test]
fn sl2_c_generator_is_commutator() {
    let (g, eps) = setup(1);
    let gens = c_module_generators(&g, &eps);
    assert_eq!(gens.len(), 1);
    let u = Universe::bigraded(3);
    assert_eq!(gens[0].1, GVector::tautological_x(u).bracket(&g, &GVector::tautological_y(u)));
    let (_, eps3) = setup(2);
    let g3 = build_simple(Series::A, 2).unwrap();
    assert_eq!(c_module_generators(&g3, &eps3).len(), 3);
}

#[test]
fn borel_containment() {
    let (g, eps) = setup(1);
    let x = g.element(&[("h", 1), ("e", 1)]);
    let y = g.element(&[("e", 1)]);
    assert!(parabolic_containment_check(&g, &eps, &x, &y).unwrap().passed());
    let zero = vec![Rat::zero(); 3];
    assert!(parabolic_containment_check(&g, &eps, &zero, &zero).unwrap().passed());
    assert!(parabolic_containment_check(&g, &eps, &g.element(&[("f", 1)]), &zero).is_err());

    let (g, eps) = setup(2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let x = g.sample_borel_with(&mut rng, 6);
        let y = g.sample_borel_with(&mut rng, 6);
        assert!(parabolic_containment_check(&g, &eps, &x, &y).unwrap().passed());
    }
}

#[test]
fn dimension_bound_small_scan() {
    let (g, eps) = setup(2);
    let doc = dimension_bound_scan(&g, &eps, 50, 1, 5);
    assert!(doc.passed());
    assert_eq!(doc.witness["max_dim"], 5);
}

#[test]
fn sl2_witness_is_found_on_first_draw() {
    let (g, eps) = setup(1);
    let (x, y, attempts) = find_omega_witness(&g, &eps, WITNESS_SEED, WITNESS_HEIGHT).unwrap();
    assert_eq!(attempts, 1);
    assert_eq!(eval_V(&g, &eps, &x, &y).dim(), 2);
}
