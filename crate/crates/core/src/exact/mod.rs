//! Exact arithmetic: field elements, projective geometry, integer
//! polynomials and matrices, and certified real-root isolation.

pub mod interval;
pub mod matrix;
pub mod poly;
pub mod projective;
pub mod roots;
pub mod scalar;
pub mod serde_str;

pub use interval::Interval;
pub use matrix::{Inertia, IntegerMatrix, RationalMatrix};
pub use poly::IntegerPolynomial;
pub use projective::{apply_map, is_projective_involution, ProjectiveLinearMap, ProjectivePoint};
pub use roots::{isolate_real_roots, largest_real_root, RootEnclosure, SturmSequence};
pub use scalar::{Field, Scalar};
