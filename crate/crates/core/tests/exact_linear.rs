use commvar::exact::*;
use num_traits::Zero;

fn u1() -> Universe {
    Universe::bigraded(1)
}

#[test]
fn additive_inverse_is_zero() {
    let x = MPoly::var(u1(), 0);
    let s = mpoly_arith(ArithOp::Add, &x, Operand::Poly(&-&x)).unwrap();
    assert!(s.is_zero());
}

#[test]
fn difference_of_squares() {
    let u = u1();
    let (x, y) = (MPoly::var(u, u.x(0)), MPoly::var(u, u.y(0)));
    let lhs = &(&x + &y) * &(&x - &y);
    let rhs = &(&x * &x) - &(&y * &y);
    assert_eq!(lhs, rhs);
}

#[test]
fn bidegrees_add_under_products() {
    let u = u1();
    let p = &MPoly::var(u, u.x(0)) * &MPoly::var(u, u.y(0));
    assert_eq!(p.bidegree(), (1, 1));
}

#[test]
fn universe_mismatch_is_structural() {
    let a = MPoly::var(Universe::bigraded(1), 0);
    let b = MPoly::var(Universe::bigraded(2), 0);
    assert!(matches!(a.try_add(&b), Err(commvar::Error::Structural(_))));
    assert!(matches!(mpoly_arith(ArithOp::Mul, &a, Operand::Poly(&b)), Err(commvar::Error::Structural(_))));
}

#[test]
fn scale_by_rational() {
    let u = u1();
    let x = MPoly::var(u, 0);
    let h = mpoly_arith(ArithOp::Scale, &x, Operand::Scalar(&rat(1, 2))).unwrap();
    assert_eq!(h.coeff(&Monomial::var(2, 0)), rat(1, 2));
}

#[test]
fn slice_basis_counts() {
    assert_eq!(bidegree_slice_basis(3, (1, 0)).len(), 3);
    assert_eq!(bidegree_slice_basis(3, (1, 1)).len(), 9);
    assert_eq!(bidegree_slice_basis(3, (2, 0)).len(), 6);
}

#[test]
fn slice_basis_order_is_x_senior_lex() {
    let b = bidegree_slice_basis(2, (1, 1));
    let exps: Vec<Vec<u8>> = b.iter().map(|m| m.exps().to_vec()).collect();
    assert_eq!(exps, vec![vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]]);
}

#[test]
fn rank_kernel_identity_and_zero() {
    let rk = rank_kernel(&QMatrix::identity(3));
    assert_eq!((rk.rank, rk.kernel.len()), (3, 0));
    let rk = rank_kernel(&QMatrix::zeros(2, 2));
    assert_eq!(rk.rank, 0);
    assert_eq!(rk.kernel, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
}

#[test]
fn rank_kernel_of_rank_one_matrix() {
    let m = QMatrix::from_rows(&[vec![int(1), int(2)], vec![int(2), int(4)]], 2).unwrap();
    let rk = m.rank_kernel();
    assert_eq!(rk.rank, 1);
    assert_eq!(rk.kernel, vec![vec![int(-2), int(1)]]);
}

#[test]
fn solve_and_inverse() {
    let m = QMatrix::from_rows(&[vec![int(2), int(1)], vec![int(1), int(1)]], 2).unwrap();
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(2));
    let v = m.solve(&[int(3), int(2)]).unwrap();
    assert_eq!(v, vec![int(1), int(1)]);
    let sing = QMatrix::from_rows(&[vec![int(1), int(1)], vec![int(1), int(1)]], 2).unwrap();
    assert!(sing.solve(&[int(0), int(1)]).is_none());
}

#[test]
fn sparse_echelon_matches_dense_rank() {
    let rows = vec![
        vec![int(1), int(2), int(0), int(3)],
        vec![int(2), int(4), int(1), int(6)],
        vec![int(3), int(6), int(1), int(9)],
        vec![int(0), int(0), int(0), int(1)],
    ];
    let sparse: Vec<SparseVec> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect())
        .collect();
    assert_eq!(sparse_rank(&sparse), rank_of(&rows, 4));
    assert_eq!(sparse_rank(&sparse), 3);
}

#[test]
fn exact_division() {
    let u = Universe::bigraded(2);
    let (a, b) = (MPoly::var(u, 0), MPoly::var(u, 1));
    let p = &(&a + &b) * &(&a - &b);
    assert_eq!(p.div_exact(&(&a + &b)).unwrap(), &a - &b);
    assert!(p.div_exact(&(&a + &(&b * &b))).is_none());
}

#[test]
fn degrevlex_prefers_smaller_last_exponent() {
    // x0*x2 vs x1^2: equal degree, last differing variable is x2.
    let a = Monomial::from_exps(&[1, 0, 1]);
    let b = Monomial::from_exps(&[0, 2, 0]);
    assert!(b > a);
    assert!(Monomial::from_exps(&[0, 0, 2]) > Monomial::from_exps(&[1, 0, 0]));
}
