//! Spectral invariants of diagrams: Gram signatures, μ(p, q, r), Coxeter
//! elements, Salem certificates and translation lengths.

pub mod coxeter;
pub mod gram;
pub mod length;
pub mod mu;
pub mod report;
pub mod salem;

pub use coxeter::{coxeter_element, matrix_order, order_if_finite, spectral_radius, MatrixOrder, SpectralRadius};
pub use gram::{classify_signature, gram_matrix, AlgebraicReal, GramLattice, Lambda, SignatureClass, SignatureReport};
pub use length::{length_from_mu, p_of_epsilon, solve_mp, LengthEnclosure, PEpsilon};
pub use mu::{mu, mu_table, tree_char_poly, MuValue};
pub use report::{classify_and_report, LengthReport, MapType, Provenance};
pub use salem::{salem_certify, SalemCertificate};
