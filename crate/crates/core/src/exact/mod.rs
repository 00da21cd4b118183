//! Exact arithmetic layer: rationals, sparse polynomials, dense and sparse
//! linear algebra.

pub mod echelon;
pub mod matrix;
pub mod modular;
pub mod monomial;
pub mod mpoly;
pub mod rat;

pub use echelon::{sparse_rank, EchelonBasis, SparseVec};
pub use matrix::{rank_kernel, rank_of, span_contains, QMatrix, RankKernel};
pub use monomial::{bidegree_slice_basis, exponents_of_degree, Monomial};
pub use mpoly::{mpoly_arith, ArithOp, MPoly, Operand, Universe};
pub use rat::{int, rat, Rat};
