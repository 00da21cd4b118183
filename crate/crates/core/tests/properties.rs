use commvar::complexes::exterior::wedge_masks;
use commvar::complexes::*;
use commvar::exact::modular::{rank_mod_p, rank_over_q};
use commvar::exact::{bidegree_slice_basis, int, rat::binomial_usize, MPoly, Monomial, QMatrix, Rat, Universe};
use commvar::invariants::poisson_bracket_x;
use commvar::lie::{build_simple, LieAlgebra, Series};
use num_bigint::BigInt;
use proptest::prelude::*;

const U: Universe = Universe { block: 3, params: 0 };

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u8..3, 6), -5i64..=5), 0..6).prop_map(|terms| {
        let mut p = MPoly::zero(Universe::bigraded(3));
        for (e, c) in terms {
            p.add_term(Monomial::from_exps(&e), int(c));
        }
        p
    })
}

/// Polynomials in the x-block of `k[sl2 x sl2]`.
fn x_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0u8..3, 3), -4i64..=4), 0..4).prop_map(|terms| {
        let mut p = MPoly::zero(U);
        for (e, c) in terms {
            let mut full = e.clone();
            full.extend([0, 0, 0]);
            p.add_term(Monomial::from_exps(&full), int(c));
        }
        p
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

fn to_q(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    m.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect()
}

fn sl(r: usize) -> LieAlgebra {
    build_simple(Series::A, r).unwrap()
}

fn element(alg: &LieAlgebra) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(-4i64..=4, alg.dim()).prop_map(|v| v.into_iter().map(int).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mpoly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rank_kernel_annihilates(m in matrix(4, 5)) {
        let q = QMatrix::from_rows(&to_q(&m), 5).unwrap();
        let rk = q.rank_kernel();
        prop_assert_eq!(rk.rank + rk.kernel.len(), 5);
        for v in &rk.kernel {
            prop_assert!(q.mul_vec(v).iter().all(|c| *c == Rat::default()));
        }
    }

    #[test]
    fn modular_rank_bounds_rational_rank(m in matrix(5, 5)) {
        let ints: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect();
        let dense = QMatrix::from_rows(&to_q(&m), 5).unwrap().rank();
        prop_assert!(rank_mod_p(&ints) <= rank_over_q(&ints));
        prop_assert_eq!(rank_over_q(&ints), dense);
    }

    #[test]
    fn slice_count_formula(n in 1usize..=6, p in 0usize..=4, q in 0usize..=4) {
        let expected = binomial_usize(n + p - 1, p) * binomial_usize(n + q - 1, q);
        prop_assert_eq!(bidegree_slice_basis(n, (p, q)).len(), expected);
    }

    #[test]
    fn poisson_bracket_is_a_lie_bracket(f in x_poly(), g in x_poly(), h in x_poly()) {
        let alg = sl(1);
        let pb = |a: &MPoly, b: &MPoly| poisson_bracket_x(&alg, a, b);
        prop_assert!((&pb(&f, &g) + &pb(&g, &f)).is_zero());
        prop_assert_eq!(pb(&f, &(&g * &h)), &(&pb(&f, &g) * &h) + &(&g * &pb(&f, &h)));
        let jacobi = &(&pb(&f, &pb(&g, &h)) + &pb(&g, &pb(&h, &f))) + &pb(&h, &pb(&f, &g));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn trace_form_is_invariant((a, b, c) in (element(&sl(2)), element(&sl(2)), element(&sl(2)))) {
        let alg = sl(2);
        prop_assert_eq!(alg.pair(&alg.commutator(&a, &b), &c), alg.pair(&a, &alg.commutator(&b, &c)));
    }

    #[test]
    fn centralizers_have_at_least_rank_dimensions(x in element(&sl(2))) {
        let alg = sl(2);
        prop_assert!(alg.centralizer(&x).len() >= alg.rank());
    }

    #[test]
    fn wedge_is_graded_commutative(a in 0u32..64, b in 0u32..64) {
        match (wedge_masks(a, b), wedge_masks(b, a)) {
            (Some((s1, m1)), Some((s2, m2))) => {
                prop_assert_eq!(m1, m2);
                let odd = (a.count_ones() * b.count_ones()) % 2 == 1;
                prop_assert_eq!(s1 ^ s2, odd);
            }
            (None, None) => {}
            _ => prop_assert!(false, "asymmetric vanishing"),
        }
    }

    #[test]
    fn plane_complexes_concentrate(rows in matrix(2, 3), k in 1usize..=2) {
        let l = to_q(&rows);
        prop_assume!(QMatrix::from_rows(&l, 3).unwrap().rank() == 2);
        let doc = subspace_concentration_check(3, l, k).unwrap();
        prop_assert!(doc.passed(), "{}", doc.witness);
    }

    #[test]
    fn augmented_complexes_are_acyclic(rows in matrix(3, 3), r in 1usize..=3, k in 1usize..=3) {
        let e = to_q(&rows[..r]);
        prop_assume!(QMatrix::from_rows(&e, 3).unwrap().rank() == r);
        prop_assert!(augmented_acyclicity_check(3, e, k).unwrap().passed());
    }

    #[test]
    fn k_complex_slices_satisfy_euler(rows in matrix(2, 4), k in 1usize..=3, augmented: bool) {
        let l = to_q(&rows);
        prop_assume!(QMatrix::from_rows(&l, 4).unwrap().rank() == 2);
        let mut params = ComplexParams::with_subspace(4, k, l);
        if augmented {
            params = params.augmented();
        }
        let r = slice_cohomology(&build_complex(ComplexKind::KkVL, params).unwrap(), Slice::Whole).unwrap();
        prop_assert!(r.d_squared_zero);
        prop_assert_eq!(r.euler_terms(), r.euler_cohomology());
    }
}
