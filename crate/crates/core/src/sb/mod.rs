//! The Segal–Bargmann dictionary between `L^2(R)` and Fock space.

pub mod kernel;
pub mod l2op;
pub mod quadrature;
pub mod surd;
pub mod transform;
pub mod weyl;

pub use kernel::{
    hermite_conjugation_pullback, hermite_image, pt_correspondence_check, sb_kernel, sb_pair_integral, HermiteVector, SBKernelPoint,
};
pub use l2op::L2Op;
pub use quadrature::{GaussHermite, DEFAULT_NODES};
pub use surd::Surd;
pub use transform::{fock_to_lebesgue, lebesgue_to_fock};
pub use weyl::{normal_product, weyl_normal_order, weyl_normal_order_xp, Letter, NormalForm, Rewriter, WeylWord};
