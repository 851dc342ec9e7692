//! Dense exact linear algebra over Q(i, √2).

mod form;
mod matrix;
mod span;
mod subspace;

pub use form::{diagonalize, form_signature, is_antisymmetric_for, orthonormal_frame, Signature};
pub use matrix::{add_vec, bilinear, dot, scale_vec, unit_vector, Matrix, Vector};
pub use span::OperatorSpan;
pub use subspace::{joint_kernel, joint_kernel_dim, Subspace};
