//! Koszul-type complexes realized on finite slices, with exact cohomology.

pub mod checks;
pub mod context;
pub mod engine;
pub mod exterior;
pub mod kinds;

pub use checks::{
    c_complex_checks, augmented_acyclicity_check, dk_acyclicity_check, koszul_scalars_check, subspace_concentration_check, property_p_check, sample_subspace,
    theta_kernel, vector_space_suite, ThetaKernel,
};
pub use context::AlgebraContext;
pub use engine::{compute_slice, Element, Key, SliceComplex, SliceReport, MAX_TERM_DIM, MAX_TERM_ENTRIES};
pub use exterior::{PolyMultivector, Multivector};
pub use kinds::{
    build_complex, eps_wedge_span_dim, slice_cohomology, slice_images, ComplexKind, ComplexParams, GradedComplex,
    Slice, MAX_ALGEBRA_RANK, MAX_V_DIM,
};
