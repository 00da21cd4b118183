use commvar::exact::{int, rat, MPoly, Monomial, Rat, Universe};
use commvar::invariants::*;
use commvar::lie::*;
use num_traits::{One, Zero};

fn alg(r: usize) -> LieAlgebra {
    build_simple(Series::A, r).unwrap()
}

/// Symbolic X = sum x_j B_j built from the defining matrices, independent of the library.
fn symbolic(g: &LieAlgebra, u: Universe) -> Vec<Vec<MPoly>> {
    let n = g.rank() + 1;
    let mut m = vec![vec![MPoly::zero(u); n]; n];
    for j in 0..g.dim() {
        let b = g.to_matrix(&g.basis_vector(j));
        for r in 0..n {
            for c in 0..n {
                if !b.get(r, c).is_zero() {
                    m[r][c] = &m[r][c] + &MPoly::var(u, j).scale(b.get(r, c));
                }
            }
        }
    }
    m
}

/// Leibniz-formula determinant.
fn det(m: &[Vec<MPoly>], u: Universe) -> MPoly {
    fn perms(n: usize) -> Vec<(Vec<usize>, i64)> {
        if n == 1 {
            return vec![(vec![0], 1)];
        }
        let mut out = Vec::new();
        for (p, s) in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                let sign = if (n - 1 - pos) % 2 == 0 { s } else { -s };
                out.push((q, sign));
            }
        }
        out
    }
    let mut acc = MPoly::zero(u);
    for (p, s) in perms(m.len()) {
        let mut t = MPoly::constant(u, int(s));
        for (r, &c) in p.iter().enumerate() {
            t = &t * &m[r][c];
        }
        acc = &acc + &t;
    }
    acc
}

#[test]
fn sl2_generator_is_a2_plus_bc() {
    let g = alg(1);
    let fam = invariant_generators(&g).unwrap();
    let u = Universe::bigraded(3);
    // coordinates: x0 = b (e), x1 = a (h), x2 = c (f)
    let (b, a, c) = (MPoly::var(u, 0), MPoly::var(u, 1), MPoly::var(u, 2));
    assert_eq!(fam.generators, vec![&(&a * &a) + &(&b * &c)]);
    assert_eq!(fam.i0().len(), 2);
    assert_eq!(fam.i_star0().len(), 1);
}

#[test]
fn sl3_generators_match_trace_and_determinant() {
    let g = alg(2);
    let fam = invariant_generators(&g).unwrap();
    assert_eq!(fam.degrees, vec![2, 3]);
    let u = Universe::bigraded(8);
    let x = symbolic(&g, u);
    let mut tr2 = MPoly::zero(u);
    for r in 0..3 {
        for c in 0..3 {
            tr2 = &tr2 + &(&x[r][c] * &x[c][r]);
        }
    }
    assert_eq!(fam.generators[0], tr2.scale(&rat(1, 2)));
    assert_eq!(fam.generators[1], det(&x, u).scale(&int(-1)));
    assert_eq!(fam.i0().len(), 5);
    assert_eq!(fam.i_star0().len(), 3);
}

#[test]
fn generators_are_ad_invariant_up_to_rank_four() {
    for r in 1..=4 {
        let g = alg(r);
        let fam = invariant_generators(&g).unwrap();
        for p in &fam.generators {
            for v in 0..g.dim() {
                assert!(ad_derivative(&g, p, v).is_zero());
            }
        }
        assert_eq!(fam.i0().len(), g.borel_dim());
    }
}

#[test]
fn sl2_polarization_oracle() {
    let g = alg(1);
    let fam = invariant_generators(&g).unwrap();
    let pols = polarize_scalar(&fam.generators[0]).unwrap();
    let u = Universe::bigraded(3);
    let (b1, a1, c1) = (MPoly::var(u, 0), MPoly::var(u, 1), MPoly::var(u, 2));
    let (b2, a2, c2) = (MPoly::var(u, 3), MPoly::var(u, 4), MPoly::var(u, 5));
    let expect = &(&(&a1 * &a2).scale(&int(2)) + &(&b1 * &c2)) + &(&c1 * &b2);
    assert_eq!(pols[1], expect);
    assert_eq!(pols[0], fam.generators[0]);
    assert_eq!(pols[2], &(&a2 * &a2) + &(&b2 * &c2));
    assert!(polarization_residual(&fam.generators[0], &pols).is_zero());
}

#[test]
fn polarization_rejects_bad_input() {
    let u = Universe::bigraded(2);
    let inhom = &MPoly::var(u, 0) + &MPoly::one(u);
    assert!(matches!(polarize_scalar(&inhom), Err(commvar::Error::Contract(_))));
    let with_y = MPoly::var(u, u.y(0));
    assert!(matches!(polarize_scalar(&with_y), Err(commvar::Error::Contract(_))));
}

#[test]
fn sl3_polarizations_bihomogeneous_and_identity() {
    let g = alg(2);
    let fam = invariant_generators(&g).unwrap();
    for (i, p) in fam.generators.iter().enumerate() {
        let pols = polarize_scalar(p).unwrap();
        let d = fam.degrees[i];
        assert_eq!(pols.len(), d + 1);
        for (m, q) in pols.iter().enumerate() {
            assert!(q.is_bihomogeneous((d - m, m)));
        }
        assert!(polarization_residual(p, &pols).is_zero());
    }
}

#[test]
fn sl2_epsilon_is_identity() {
    let g = alg(1);
    let fam = invariant_generators(&g).unwrap();
    let u = Universe::bigraded(3);
    assert_eq!(epsilon(&g, &fam, 1).unwrap(), GVector::tautological_x(u));
    assert_eq!(epsilon_polarized(&g, &fam, 1, 0).unwrap(), GVector::tautological_x(u));
    assert_eq!(epsilon_polarized(&g, &fam, 1, 1).unwrap(), GVector::tautological_y(u));
    assert!(epsilon_polarized(&g, &fam, 1, 2).is_err());
    assert!(epsilon(&g, &fam, 2).is_err());
}

#[test]
fn epsilon_is_dual_to_differential() {
    // <eps_i(x), v> = d/dt p_i(x + t v) at t = 0, evaluated at sampled points.
    let g = alg(2);
    let fam = invariant_generators(&g).unwrap();
    for i in 1..=2 {
        let e = epsilon(&g, &fam, i).unwrap();
        let pols = polarize_scalar(fam.generator(i)).unwrap();
        for s in 0..5 {
            let x = g.sample_rational(s, 5);
            let v = g.sample_rational(100 + s, 5);
            let lhs = g.pair(&e.eval_xy(&x, &v), &v);
            let pt: Vec<Rat> = x.iter().chain(&v).cloned().collect();
            assert_eq!(lhs, pols[1].eval(&pt));
        }
    }
}

#[test]
fn epsilon_lies_in_centralizer_symbolically() {
    for r in 1..=3 {
        let g = alg(r);
        let fam = invariant_generators(&g).unwrap();
        let u = Universe::bigraded(g.dim());
        let x = GVector::tautological_x(u);
        for i in 1..=r {
            assert!(epsilon(&g, &fam, i).unwrap().bracket(&g, &x).is_zero());
        }
    }
}

#[test]
fn kostant_independence_at_regular_points() {
    let g = alg(3);
    let fam = invariant_generators(&g).unwrap();
    let x = g.sample_rational(11, 7);
    assert!(g.is_regular(&x));
    let zero = vec![Rat::zero(); g.dim()];
    let rows: Vec<Vec<Rat>> = (1..=3).map(|i| epsilon(&g, &fam, i).unwrap().eval_xy(&x, &zero)).collect();
    assert_eq!(commvar::exact::rank_of(&rows, g.dim()), 3);
}

#[test]
fn epsilon_polarized_defining_identity_and_bidegree() {
    let g = alg(2);
    let fam = invariant_generators(&g).unwrap();
    assert_eq!(epsilon_polarized(&g, &fam, 2, 1).unwrap().bidegree, (1, 1));
    for i in 1..=2 {
        let e = epsilon(&g, &fam, i).unwrap();
        let parts: Vec<GVector> = (0..fam.degree(i)).map(|m| epsilon_polarized(&g, &fam, i, m).unwrap()).collect();
        for k in 0..g.dim() {
            let pols: Vec<MPoly> = parts.iter().map(|p| p.coeffs[k].clone()).collect();
            let r = polarization_residual(&e.coeffs[k], &pols);
            assert!(r.is_zero());
        }
    }
}

#[test]
fn epsilon_polarized_is_unipotent_equivariant() {
    let g = alg(2);
    let fam = invariant_generators(&g).unwrap();
    let t = rat(2, 3);
    for v in g.positive_indices().into_iter().chain(g.negative_indices()) {
        let a = g.exp_ad(&g.basis_vector(v), &t).unwrap();
        let x = g.sample_rational(3, 5);
        let y = g.sample_rational(4, 5);
        let (ax, ay) = (a.mul_vec(&x), a.mul_vec(&y));
        for ix in fam.i0() {
            let e = epsilon_polarized(&g, &fam, ix.i, ix.m).unwrap();
            assert_eq!(e.eval_xy(&ax, &ay), a.mul_vec(&e.eval_xy(&x, &y)));
        }
    }
}

#[test]
fn poisson_bracket_of_linear_forms_is_the_bracket() {
    let g = alg(1);
    let u = Universe::bigraded(3);
    let lin = |v: &[Rat]| {
        let fv = g.form().mul_vec(v);
        MPoly::linear(u, 0, &fv)
    };
    let (e, f, h) = (g.element(&[("e", 1)]), g.element(&[("f", 1)]), g.element(&[("h", 1)]));
    assert_eq!(poisson_bracket(&g, &lin(&e), &lin(&f)).unwrap(), lin(&h));
}

#[test]
fn generators_are_casimirs() {
    let g = alg(2);
    let fam = invariant_generators(&g).unwrap();
    let u = Universe::bigraded(8);
    let f = &(&MPoly::var(u, 0) * &MPoly::var(u, 5)) + &MPoly::var(u, 3).scale(&int(7));
    for p in &fam.generators {
        assert!(poisson_bracket(&g, p, &f).unwrap().is_zero());
    }
}

#[test]
fn mf_family_commutes() {
    for (r, pairs) in [(1usize, 1u64), (2, 10)] {
        let g = alg(r);
        let fam = invariant_generators(&g).unwrap();
        let doc = mf_commutativity_check(&g, &fam).unwrap();
        assert!(doc.passed(), "{doc:?}");
        assert_eq!(doc.witness["pairs"], pairs);
    }
}

#[test]
fn root_divisibility() {
    let g = alg(1);
    let fam = invariant_generators(&g).unwrap();
    let doc = root_divisibility_check(&g, &fam, 1, 0).unwrap();
    assert!(doc.passed());
    assert_eq!(doc.witness["quotient"], "1");
    let g = alg(2);
    let fam = invariant_generators(&g).unwrap();
    for i in 1..=2 {
        for k in 0..3 {
            let doc = root_divisibility_check(&g, &fam, i, k).unwrap();
            assert!(doc.passed(), "{doc:?}");
        }
    }
}

#[test]
fn polarization_of_one() {
    let u = Universe::bigraded(1);
    let pols = polarize_scalar(&MPoly::one(u)).unwrap();
    assert_eq!(pols, vec![MPoly::one(u)]);
    let _ = Monomial::one(2);
    let _ = Rat::one();
}
