//! Numeric layer: truncated series in the Fock space, matrix sections,
//! kernel functions, the conjugation action and point spectra.

pub mod action;
pub mod kernel;
pub mod matrix;
pub mod roots;
pub mod series;
pub mod spectrum;
pub mod verify;

pub use action::{conjugation_apply, exp_tail_bound};
pub use kernel::{adjoint_on_kernel, KernelVector};
pub use matrix::{fock_matrix, FockMatrix};
pub use series::{inner_product, poly_inner_product, FockSeries};
pub use spectrum::{
    adjoint_eigen_on_kernels, eigencheck, eigencheck_poly, first_order_eigenfunction, gaussian_membership, kernel_eigen_residual,
    spectrum, SpectrumKind, SpectrumMode, SpectrumOptions, SpectrumResult,
};
pub use verify::{derivative_bound_check, verify_adjoint_identity};
