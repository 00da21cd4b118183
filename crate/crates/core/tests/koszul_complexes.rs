use std::sync::Arc;

use commvar::complexes::*;
use commvar::exact::{int, rat::binomial_usize, MPoly, Rat, Universe};
use commvar::lie::Series;
use commvar::scheme::commuting_groebner;
use commvar::Error;

fn vecs(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect()
}

fn sl2() -> Arc<AlgebraContext> {
    Arc::new(AlgebraContext::new(Series::A, 1).unwrap())
}

#[test]
fn sl2_top_wedge_is_x_wedge_y() {
    let ctx = sl2();
    let eps = ctx.top_wedge();
    assert_eq!(eps.degree, 2);
    assert_eq!(eps.coeffs.len(), 3);
    let u = Universe::bigraded(3);
    for (&mask, c) in &eps.coeffs {
        let i = mask.trailing_zeros() as usize;
        let j = 31 - mask.leading_zeros() as usize;
        let expected = &(&MPoly::var(u, u.x(i)) * &MPoly::var(u, u.y(j))) - &(&MPoly::var(u, u.x(j)) * &MPoly::var(u, u.y(i)));
        assert_eq!(c, &expected, "mask {mask:b}");
        assert!(c.is_bihomogeneous((1, 1)));
    }
}

#[test]
fn d0_is_the_scalars() {
    let c = build_complex(ComplexKind::Dk, ComplexParams::vector_space(3, 0)).unwrap();
    let r = slice_cohomology(&c, Slice::Whole).unwrap();
    assert_eq!(r.degrees, vec![0]);
    assert_eq!(r.term_dims, vec![1]);
    assert_eq!(r.cohomology, vec![1]);
}

#[test]
fn dk_term_dims_match_binomials() {
    for n in 1..=4 {
        for k in 1..=4 {
            let c = build_complex(ComplexKind::Dk, ComplexParams::vector_space(n, k)).unwrap();
            let r = slice_cohomology(&c, Slice::Whole).unwrap();
            for (&i, &dim) in r.degrees.iter().zip(&r.term_dims) {
                let i = i as usize;
                assert_eq!(dim, binomial_usize(n + k - i - 1, k - i) * binomial_usize(n, i));
            }
            assert!(r.is_acyclic(), "n {n} k {k}: {r:?}");
        }
    }
}

#[test]
fn full_koszul_complex_has_only_scalars() {
    let doc = koszul_scalars_check(2, 4).unwrap();
    assert!(doc.passed(), "{doc:?}");
    let c = build_complex(ComplexKind::D, ComplexParams::vector_space(2, 0)).unwrap();
    let r = slice_cohomology(&c, Slice::Weight(0)).unwrap();
    assert_eq!(r.cohomology, vec![1]);
}

#[test]
fn dk_acyclic_in_dim_3() {
    for k in 1..=3 {
        assert!(dk_acyclicity_check(3, k).unwrap().passed());
    }
}

#[test]
fn augmented_dk_with_line_is_acyclic() {
    for k in 1..=2 {
        let doc = augmented_acyclicity_check(3, vecs(&[&[1, 2, -1]]), k).unwrap();
        assert!(doc.passed(), "{doc:?}");
    }
}

#[test]
fn dkvl_term_dims() {
    let l = vecs(&[&[1, 0, 2], &[0, 1, -1]]);
    let c = build_complex(ComplexKind::DkVL, ComplexParams::with_subspace(3, 2, l.clone()).augmented()).unwrap();
    let r = slice_cohomology(&c, Slice::Whole).unwrap();
    assert_eq!(r.degrees, vec![1, 2, 3]);
    // S^2(L), S^2(V) (x) eta, V (x) Lambda^3 V.
    assert_eq!(r.term_dims, vec![3, 6, 3]);
    assert!(r.is_acyclic());
}

#[test]
fn theta_kernel_hypothesis_for_a_plane() {
    let l = vecs(&[&[1, 0, 2], &[0, 1, -1]]);
    let t1 = theta_kernel(3, &l, 1);
    assert_eq!((t1.kernel_dim, t1.span_dim, t1.contained), (2, 2, true));
    let t2 = theta_kernel(3, &l, 2);
    assert_eq!((t2.kernel_dim, t2.span_dim, t2.contained), (3, 3, true));
}

#[test]
fn planes_in_dim_3_concentrate() {
    for l in [vecs(&[&[1, 0, 0], &[0, 1, 0]]), vecs(&[&[1, 0, 2], &[0, 1, -1]]), vecs(&[&[2, 3, 5], &[-1, 4, 7]])] {
        for k in 1..=2 {
            let doc = subspace_concentration_check(3, l.clone(), k).unwrap();
            assert!(doc.passed(), "{doc:?}");
        }
    }
}

#[test]
fn whole_space_matches_augmented_case() {
    let whole = vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let c = build_complex(ComplexKind::DkVL, ComplexParams::with_subspace(3, 2, whole.clone())).unwrap();
    let r = slice_cohomology(&c, Slice::Whole).unwrap();
    assert_eq!(r.support(), vec![3]);
    assert_eq!(r.cohomology_at(3), 6);
    assert!(augmented_acyclicity_check(3, whole, 2).unwrap().passed());
}

#[test]
fn concentration_rejects_small_subspaces() {
    assert!(matches!(subspace_concentration_check(4, vecs(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]), 1), Err(Error::Contract(_))));
}

#[test]
fn guards() {
    assert!(matches!(build_complex(ComplexKind::Dk, ComplexParams::vector_space(9, 1)), Err(Error::Capability(_))));
    let a3 = Arc::new(AlgebraContext::new(Series::A, 3).unwrap());
    assert!(matches!(build_complex(ComplexKind::Cg, ComplexParams::algebra(a3, 0)), Err(Error::Capability(_))));
    let dependent = vecs(&[&[1, 1, 0], &[2, 2, 0]]);
    assert!(matches!(build_complex(ComplexKind::KkVL, ComplexParams::with_subspace(3, 1, dependent)), Err(Error::Contract(_))));
    let d = build_complex(ComplexKind::D, ComplexParams::vector_space(2, 0)).unwrap();
    assert!(slice_cohomology(&d, Slice::Whole).is_err());
}

#[test]
fn cg_sl2_degrees() {
    let c = build_complex(ComplexKind::Cg, ComplexParams::algebra(sl2(), 0)).unwrap();
    let r = slice_cohomology(&c, Slice::Bidegree(1, 1)).unwrap();
    assert_eq!(r.degrees, vec![2, 3]);
    // (1,1) multipliers times eps; e_j ^ eps has the single coefficient
    // x_k y_l - x_l y_k, a different minor for each j.
    assert_eq!(r.term_dims, vec![9, 3]);
    assert_eq!(r.ranks, vec![0, 3]);
}

#[test]
fn cg_sl2_boundaries_match_ideal() {
    let ctx = sl2();
    let gb = commuting_groebner(&ctx.alg).unwrap();
    let (doc, reports) = c_complex_checks(ctx.clone(), &gb, 4).unwrap();
    assert!(doc.passed(), "{doc:?}");
    let rows = doc.witness["slices"].as_array().unwrap();
    let row = |s: &str| rows.iter().find(|r| r["slice"] == s).unwrap().clone();
    assert_eq!(row("(1,1)")["boundary_dim"], 3);
    for q in 0..=4 {
        assert_eq!(row(&format!("(0,{q})"))["boundary_dim"], 0);
    }
    assert_eq!(row("(2,2)")["boundary_dim"], row("(2,2)")["ideal_dim"]);
    assert!(reports.iter().all(|r| r.d_squared_zero));
}

#[test]
fn property_p_sl2() {
    let (doc, reports) = property_p_check(sl2(), 1, 6).unwrap();
    assert!(doc.passed(), "{}", doc.witness);
    assert_eq!(reports.len(), 28);
    let (doc0, reports0) = property_p_check(sl2(), 0, 3).unwrap();
    assert!(doc0.passed());
    assert!(reports0.iter().all(|r| r.degrees == vec![2]));
}
