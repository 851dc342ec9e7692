//! Exact computations for Lie groups with biinvariant pseudo-Riemannian
//! metrics: double extensions, curvature, holonomy, and parallel spinors.
//!
//! All arithmetic happens in the number field Q(i, √2) (see [`Scalar`]), so
//! ranks, kernels and spinor counts are exact.

pub mod catalog;
pub mod error;
pub mod extension;
pub mod geometry;
pub mod holonomy;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod spin;

pub use error::{Error, Result};
pub use linalg::{Matrix, OperatorSpan, Signature, Subspace, Vector};
pub use scalar::{Real, Scalar};
