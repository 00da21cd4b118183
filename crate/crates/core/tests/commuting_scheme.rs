use commvar::exact::{int, rat::binomial_usize, MPoly, Monomial, Rat, Universe};
use commvar::groebner::*;
use commvar::invariants::invariant_generators;
use commvar::lie::*;
use commvar::scheme::*;
use num_traits::Zero;
use rand::SeedableRng;

fn sl(r: usize) -> LieAlgebra {
    build_simple(Series::A, r).unwrap()
}

/// Hilbert function of k[x,y]/(2x2 minors of a generic 2x3 matrix):
/// Hilbert series (1 + 2t)/(1 - t)^4.
fn determinantal_hf(d: usize) -> usize {
    binomial_usize(d + 3, 3) + if d >= 1 { 2 * binomial_usize(d + 2, 3) } else { 0 }
}

#[test]
fn sl2_ideal_is_the_minors() {
    let g = sl(1);
    let ideal = commuting_ideal(&g);
    assert_eq!(ideal.generators.len(), 3);
    let u = Universe::bigraded(3);
    // rows (a, b, c) with a = h, b = e, c = f coordinates.
    let (b1, a1, c1) = (MPoly::var(u, 0), MPoly::var(u, 1), MPoly::var(u, 2));
    let (b2, a2, c2) = (MPoly::var(u, 3), MPoly::var(u, 4), MPoly::var(u, 5));
    let minor = |p: &MPoly, q: &MPoly, r: &MPoly, s: &MPoly| &(p * s) - &(q * r);
    let minors = [minor(&a1, &b1, &a2, &b2), minor(&a1, &c1, &a2, &c2), minor(&b1, &c1, &b2, &c2)];
    for gen in &ideal.generators {
        assert!(gen.is_bihomogeneous((1, 1)));
        let hits = minors.iter().filter(|m| {
            [int(1), int(-1), int(2), int(-2)].iter().any(|c| &m.scale(c) == gen)
        });
        assert_eq!(hits.count(), 1, "{gen}");
    }
    assert_eq!(commuting_ideal(&sl(2)).generators.len(), 8);
}

#[test]
fn sl2_groebner_regression() {
    let gb = commuting_groebner(&sl(1)).unwrap();
    let lms: Vec<Vec<u8>> = gb.leading_monomials().iter().map(|m| m.exps().to_vec()).collect();
    assert_eq!(lms, vec![vec![0, 0, 1, 0, 1, 0], vec![0, 0, 1, 1, 0, 0], vec![0, 1, 0, 1, 0, 0]]);
    assert!(gb.verify());
}

#[test]
fn sl3_groebner_regression() {
    let gb = commuting_groebner(&sl(2)).unwrap();
    assert_eq!(gb.elements.len(), 30);
    assert!(gb.verify());
}

#[test]
fn principal_ideal_is_monic_generator() {
    let u = Universe::bigraded(2);
    let f = &MPoly::var(u, 0).scale(&int(3)) + &(&MPoly::var(u, 1) * &MPoly::var(u, 2));
    let gb = groebner(&IdealPresentation::new(vec![f.clone()], u).unwrap(), MonomialOrder::Degrevlex).unwrap();
    assert_eq!(gb.elements, vec![f.monic()]);
}

#[test]
fn coprime_monomials_form_a_basis() {
    let u = Universe::bigraded(2);
    let a = &MPoly::var(u, 0) * &MPoly::var(u, 0);
    let b = MPoly::var(u, 3);
    assert!(normal_form(&s_polynomial(&a, &b), &[a.clone(), b.clone()]).is_zero());
    let gb = groebner(&IdealPresentation::new(vec![a.clone(), b.clone()], u).unwrap(), MonomialOrder::Degrevlex).unwrap();
    assert_eq!(gb.elements.len(), 2);
}

#[test]
fn groebner_guards() {
    let u = Universe::bigraded(9);
    let ideal = IdealPresentation::new(vec![MPoly::var(u, 0)], u).unwrap();
    assert!(matches!(groebner(&ideal, MonomialOrder::Degrevlex), Err(commvar::Error::Capability(_))));
    let u = Universe::bigraded(1);
    let x = MPoly::var(u, 0);
    let big = &(&x * &x) * &(&(&x * &x) * &x);
    let ideal = IdealPresentation::new(vec![big], u).unwrap();
    assert!(matches!(groebner(&ideal, MonomialOrder::Degrevlex), Err(commvar::Error::Capability(_))));
}

#[test]
fn permuted_generators_give_same_basis() {
    let g = sl(2);
    let ideal = commuting_ideal(&g);
    let mut rev = ideal.generators.clone();
    rev.reverse();
    rev.rotate_left(3);
    let permuted = IdealPresentation::new(rev, ideal.universe).unwrap();
    assert_eq!(
        groebner(&ideal, MonomialOrder::Degrevlex).unwrap(),
        groebner(&permuted, MonomialOrder::Degrevlex).unwrap()
    );
}

#[test]
fn sl2_hilbert_function_and_dimension() {
    let gb = commuting_groebner(&sl(1)).unwrap();
    assert_eq!(hilbert_function(&gb, 1).unwrap(), 6);
    assert_eq!(hilbert_function(&gb, 2).unwrap(), 18);
    for d in 0..=8 {
        assert_eq!(hilbert_function(&gb, d).unwrap(), determinantal_hf(d), "degree {d}");
    }
    assert!(hilbert_function(&gb, 9).is_err());
    assert_eq!(krull_dimension(&gb), 4);
    assert_eq!(ideal_dimension_bigraded(&gb, (1, 1)).unwrap(), 3);
    assert_eq!(ideal_dimension_bigraded(&gb, (0, 3)).unwrap(), 0);
}

#[test]
fn sl3_commuting_variety_dimension() {
    // dim C(sl3) = dim g + rank = 2 b_g.
    let gb = commuting_groebner(&sl(2)).unwrap();
    assert_eq!(krull_dimension(&gb), 10);
}

#[test]
fn sl2_interpolation() {
    let g = sl(1);
    let rows = vanishing_ideal_low_degree(&g, 4, None, 9).unwrap();
    assert_eq!(rows[1].interpolated, 0);
    assert_eq!(rows[1].ideal, 0);
    assert_eq!((rows[2].interpolated, rows[2].ideal), (3, 3));
    for r in &rows {
        assert!(r.agrees(), "{r:?}");
    }
}

#[test]
fn commuting_samples_annihilate_the_basis() {
    let g = sl(1);
    let gb = commuting_groebner(&g).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let (x, y) = sample_commuting_pair(&g, &mut rng, 6);
        assert!(g.commutator(&x, &y).iter().all(Zero::is_zero));
        let p: Vec<Rat> = x.into_iter().chain(y).collect();
        assert!(gb.elements.iter().all(|e| e.eval(&p).is_zero()));
    }
}

#[test]
fn cones() {
    let g = sl(1);
    let fam = invariant_generators(&g).unwrap();
    let e = g.element(&[("e", 1)]);
    let f = g.element(&[("f", 1)]);
    assert!(nilpotent_test(&fam, &e));
    assert!(!nilpotent_test(&fam, &g.element(&[("e", 1), ("f", 1)])));
    assert!(bicone_test(&fam, &e, &g.element(&[("e", 2)])));
    assert!(!bicone_test(&fam, &e, &f));
    let zero = vec![Rat::zero(); 3];
    assert!(bicone_test(&fam, &zero, &zero));
    let _ = Monomial::one(1);
}
