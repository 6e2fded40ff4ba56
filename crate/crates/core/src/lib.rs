//! Linear differential operators with polynomial symbols on the Fock space
//! of entire functions square-integrable against `e^{-|z|^2}`.
//!
//! The crate has three layers:
//!
//! * exact symbol algebra ([`DiffOp`], [`adjoint_op`], [`conjugate_op`],
//!   [`is_c_selfadjoint`], [`is_selfadjoint`]);
//! * a numeric layer in [`fock`] working in the orthonormal monomial basis,
//!   with kernel functions, conjugation actions and point spectra;
//! * the Segal–Bargmann dictionary in [`sb`], moving operators between
//!   `L^2(R)` and Fock space.

pub mod adjoint;
pub mod conjugation;
pub mod diffop;
pub mod error;
pub mod fock;
pub mod interchange;
pub mod omega;
pub mod poly;
pub mod report;
pub mod sb;
pub mod scalar;
pub mod symbol;
pub mod symmetry;

pub use adjoint::{adjoint_op, conjugate_op};
pub use conjugation::ConjugationParams;
pub use diffop::DiffOp;
pub use error::{Error, Result};
pub use omega::OmegaTable;
pub use poly::Poly;
pub use report::CheckReport;
pub use scalar::Scalar;
pub use symbol::SymbolMatrix;
pub use symmetry::{gamma_examples, is_c_selfadjoint, is_selfadjoint, selfadjoint_witness, SymmetryReport};
